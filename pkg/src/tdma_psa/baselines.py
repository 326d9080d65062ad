"""Comparator scheduler: greedy two-hop colouring followed by frame saturation."""

from __future__ import annotations

from .schedule import BLACK, WHITE, ScheduleMatrix
from .topology import Topology, square_graph

__all__ = ["greedy_coloring_schedule"]


def greedy_coloring_schedule(t: Topology) -> ScheduleMatrix:
    """First-fit colouring of G squared, one frame per colour class.

    Nodes are coloured in descending G-squared degree, ties by ascending id.
    Each frame is then saturated: any node (ascending id) that does not
    conflict with the frame's current owners is added to it.
    """
    sq = square_graph(t)
    order = sorted(sq.nodes, key=lambda u: (-len(sq.neighbors(u)), u))
    color: dict[int, int] = {}
    for u in order:
        taken = {color[w] for w in sq.neighbors(u) if w in color}
        c = 0
        while c in taken:
            c += 1
        color[u] = c

    classes: list[set[int]] = [set() for _ in range(max(color.values()) + 1)]
    for u, c in color.items():
        classes[c].add(u)
    for owners in classes:
        for u in sq.nodes:
            if u not in owners and not (sq.neighbors(u) & owners):
                owners.add(u)

    frames = tuple(
        tuple(BLACK if u in owners else WHITE for u in sq.nodes) for owners in classes
    )
    return ScheduleMatrix(t.node_count, frames)
