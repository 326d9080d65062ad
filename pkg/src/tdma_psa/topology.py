"""Network graphs and the one/two-hop neighbourhoods that define interference.

Node ids are 1-based everywhere a user can see them.  A topology file looks
like::

    # comment
    nodes 4
    1 2
    2 3
    3 4
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Union

import numpy as np

__all__ = [
    "Topology",
    "TopologyError",
    "parse_topology",
    "load_topology",
    "format_topology",
    "one_hop",
    "two_hop_closed_interference",
    "square_graph",
]


class TopologyError(ValueError):
    """Malformed topology input.  ``lineno`` is set for file-parsing errors."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


Edge = tuple[int, int]


@dataclass(frozen=True)
class Topology:
    """Undirected simple graph on nodes ``1..node_count``.

    Edges are stored once, as ``(u, v)`` with ``u < v``.  Use
    :meth:`from_edges` to build one from arbitrary (possibly duplicated or
    reversed) pairs.
    """

    node_count: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if isinstance(self.node_count, bool) or not isinstance(self.node_count, (int, np.integer)):
            raise TopologyError(f"node count must be an integer, got {self.node_count!r}")
        if self.node_count < 1:
            raise TopologyError(f"node count must be >= 1, got {self.node_count}")
        object.__setattr__(self, "node_count", int(self.node_count))
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise TopologyError(f"self-loop on node {u}")
            if not u < v:
                raise TopologyError(f"edge ({u}, {v}) must be stored as (min, max)")
            self._check_node(u)
            self._check_node(v)

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Iterable[int]]) -> "Topology":
        normalized = set()
        for pair in edges:
            u, v = (int(x) for x in pair)
            if u == v:
                raise TopologyError(f"self-loop on node {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(node_count, frozenset(normalized))

    @classmethod
    def from_adjacency(cls, matrix) -> "Topology":
        """Build from a square 0/1 adjacency matrix (row/column i is node i+1)."""
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise TopologyError(f"adjacency matrix must be square and non-empty, got shape {a.shape}")
        if not np.isin(a, (0, 1)).all():
            raise TopologyError("adjacency matrix entries must be 0 or 1")
        if np.any(np.diag(a)):
            raise TopologyError("adjacency matrix has a non-zero diagonal (self-loop)")
        if not np.array_equal(a, a.T):
            raise TopologyError("adjacency matrix must be symmetric (links are undirected)")
        rows, cols = np.nonzero(np.triu(a, k=1))
        return cls(a.shape[0], frozenset((int(r) + 1, int(c) + 1) for r, c in zip(rows, cols)))

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.node_count + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def _check_node(self, u: int) -> None:
        if not 1 <= u <= self.node_count:
            raise TopologyError(f"node id {u} out of range 1..{self.node_count}")

    def neighbors(self, u: int) -> frozenset[int]:
        self._check_node(u)
        return self._adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency_matrix(self) -> np.ndarray:
        n = self.node_count
        a = np.zeros((n, n), dtype=np.int8)
        for u, v in self.edges:
            a[u - 1, v - 1] = a[v - 1, u - 1] = 1
        return a


def parse_topology(text: str) -> Topology:
    """Parse the text topology format.  Duplicate edge lines are harmless."""
    node_count = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if node_count is None:
            if len(fields) != 2 or fields[0] != "nodes":
                raise TopologyError("expected 'nodes N' header before any edge", lineno)
            try:
                node_count = int(fields[1])
            except ValueError:
                raise TopologyError(f"node count {fields[1]!r} is not an integer", lineno) from None
            if node_count < 1:
                raise TopologyError(f"node count must be >= 1, got {node_count}", lineno)
            continue
        if len(fields) != 2:
            raise TopologyError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise TopologyError(f"node ids must be integers, got {line!r}", lineno) from None
        for x in (u, v):
            if not 1 <= x <= node_count:
                raise TopologyError(f"node id {x} out of range 1..{node_count}", lineno)
        if u == v:
            raise TopologyError(f"self-loop on node {u}", lineno)
        edges.add((min(u, v), max(u, v)))
    if node_count is None:
        raise TopologyError("missing 'nodes N' header")
    return Topology(node_count, frozenset(edges))


def load_topology(path: Union[str, Path]) -> Topology:
    return parse_topology(Path(path).read_text(encoding="utf-8"))


def format_topology(t: Topology, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"nodes {t.node_count}")
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges))
    return "\n".join(lines) + "\n"


def one_hop(t: Topology, u: int) -> frozenset[int]:
    """Nodes that hear ``u`` directly."""
    return t.neighbors(u)


def two_hop_closed_interference(t: Topology, u: int) -> frozenset[int]:
    """Nodes that may not share a slot with ``u``: one or two hops away.

    ``u`` itself is excluded.
    """
    near = set(t.neighbors(u))
    for v in t.neighbors(u):
        near.update(t.neighbors(v))
    near.discard(u)
    return frozenset(near)


def square_graph(t: Topology) -> Topology:
    """G squared: an edge between every pair of nodes at distance <= 2."""
    edges = set()
    for u in t.nodes:
        for w in two_hop_closed_interference(t, u):
            if u < w:
                edges.add((u, w))
    return Topology(t.node_count, frozenset(edges))
