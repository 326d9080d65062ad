"""scikit-learn style front ends for the schedulers.

``fit`` takes a topology (or adjacency matrix) and builds the schedule;
``transform`` returns it as a ``(frames, nodes)`` 0/1 array.  The usual
``get_params``/``set_params``/``clone`` machinery works as for any
estimator.

>>> import numpy as np
>>> path = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
>>> PacketScheduler().fit_transform(path)
array([[1, 0, 0],
       [0, 1, 0],
       [0, 0, 1]], dtype=int8)
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .baselines import greedy_coloring_schedule
from .metrics import compute_metrics
from .psa import run_psa
from .schedule import ScheduleMatrix
from .topology import Topology
from .validation import check_topology

__all__ = ["PacketScheduler", "GreedyColoringScheduler"]


class _SchedulerBase(TransformerMixin, BaseEstimator):
    def _schedule(self, topology: Topology) -> ScheduleMatrix:
        raise NotImplementedError

    def fit(self, X, y=None):
        topology = check_topology(X)
        self.topology_ = topology
        self.schedule_ = self._schedule(topology)
        self.metrics_ = compute_metrics(self.schedule_)
        self.n_features_in_ = topology.node_count
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "schedule_")
        if check_topology(X) != self.topology_:
            raise ValueError("transform() got a different topology from the one passed to fit()")
        return self.schedule_.to_array()

    def score(self, X, y=None) -> float:
        """Channel utilization of the fitted schedule, as a fraction in [0, 1]."""
        self.transform(X)
        return float(self.metrics_.channel_utilization_eta / 100)


class PacketScheduler(_SchedulerBase):
    """Three-phase greedy TDMA broadcast scheduler.

    Parameters
    ----------
    exhaustive_pairs : bool, default=False
        When the two grayest frames fail to match, keep looking for any
        other matching pair instead of stopping.  Off by default.

    Attributes
    ----------
    trace_ : PsaTrace
        Matrices after each of the three phases.
    schedule_ : ScheduleMatrix
        Final black/white schedule.
    metrics_ : MetricsReport
    topology_ : Topology
    """

    def __init__(self, exhaustive_pairs: bool = False):
        self.exhaustive_pairs = exhaustive_pairs

    def _schedule(self, topology):
        self.trace_ = run_psa(topology, exhaustive_pairs=self.exhaustive_pairs)
        return self.trace_.final


class GreedyColoringScheduler(_SchedulerBase):
    """Baseline: greedy colouring of the two-hop conflict graph, then saturation."""

    def _schedule(self, topology):
        return greedy_coloring_schedule(topology)
