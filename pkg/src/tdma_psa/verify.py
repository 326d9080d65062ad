"""Ground truth for schedules: collision checking and exact minimum frame length."""

from __future__ import annotations

from dataclasses import dataclass, field

from .schedule import BLACK, ScheduleError, ScheduleMatrix
from .topology import Topology, square_graph

__all__ = [
    "Violation",
    "VerificationReport",
    "verify_schedule",
    "exact_min_frame_length",
    "OracleLimitError",
    "DEFAULT_NODE_LIMIT",
]

DEFAULT_NODE_LIMIT = 12


@dataclass(frozen=True)
class Violation:
    """Two nodes within two hops that own the same frame (frame is 1-based)."""

    frame: int
    u: int
    v: int
    kind: str  # "direct" or "hidden"

    def to_dict(self) -> dict:
        return {"frame": self.frame, "nodes": [self.u, self.v], "kind": self.kind}


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()
    uncovered_nodes: tuple[int, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations and not self.uncovered_nodes

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "uncovered_nodes": list(self.uncovered_nodes),
        }


def verify_schedule(t: Topology, s: ScheduleMatrix) -> VerificationReport:
    """Check every frame for direct and hidden collisions and every node for coverage.

    All problems are reported, not just the first one.
    """
    if s.node_count != t.node_count:
        raise ScheduleError(
            f"matrix has {s.node_count} columns but the topology has {t.node_count} nodes"
        )
    if s.has_gray:
        raise ScheduleError("cannot verify a matrix that still has gray slots")
    sq = square_graph(t)
    violations = []
    for k, f in enumerate(s.frames, start=1):
        owners = [i + 1 for i, x in enumerate(f) if x is BLACK]
        for a, u in enumerate(owners):
            for v in owners[a + 1:]:
                if t.has_edge(u, v):
                    violations.append(Violation(k, u, v, "direct"))
                elif sq.has_edge(u, v):
                    violations.append(Violation(k, u, v, "hidden"))
    blacks = s.per_node_blacks()
    uncovered = tuple(i + 1 for i, b in enumerate(blacks) if b == 0)
    return VerificationReport(tuple(violations), uncovered)


class OracleLimitError(ValueError):
    pass


def exact_min_frame_length(t: Topology, node_limit: int = DEFAULT_NODE_LIMIT) -> int:
    """Chromatic number of G squared, by exhaustive backtracking.

    This is the fewest frames any collision-free schedule covering every
    node can have.  ``node_limit`` guards against accidental exponential
    runs; raise it explicitly for larger graphs.
    """
    n = t.node_count
    if n > node_limit:
        raise OracleLimitError(f"graph has {n} nodes, oracle limit is {node_limit}")
    sq = square_graph(t)
    adj = [sq.neighbors(u) for u in sq.nodes]
    order = sorted(range(n), key=lambda i: (-len(adj[i]), i))
    color: dict[int, int] = {}
    best = n  # one frame per node always works

    def extend(pos: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if pos == n:
            best = used
            return
        i = order[pos]
        taken = {color[w - 1] for w in adj[i] if (w - 1) in color}
        # a brand-new colour is only tried once (colour symmetry)
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            color[i] = c
            extend(pos + 1, max(used, c + 1))
            del color[i]

    extend(0, 0)
    return best
