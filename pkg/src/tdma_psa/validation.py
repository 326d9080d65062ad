"""Input validation shared by the estimator wrappers."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .topology import Topology, TopologyError

__all__ = ["check_topology"]


def check_topology(X) -> Topology:
    """Coerce ``X`` to a :class:`Topology`.

    Accepts a ``Topology`` or a square, symmetric 0/1 adjacency matrix
    (anything ``check_array`` understands, including scipy sparse).
    """
    if isinstance(X, Topology):
        return X
    a = check_array(X, accept_sparse=["csr", "csc", "coo"], dtype=None, ensure_min_samples=1)
    if hasattr(a, "toarray"):
        a = a.toarray()
    a = np.asarray(a)
    if a.dtype == bool:
        a = a.astype(np.int8)
    if a.shape[0] != a.shape[1]:
        raise TopologyError(f"adjacency matrix must be square, got shape {a.shape}")
    return Topology.from_adjacency(a)
