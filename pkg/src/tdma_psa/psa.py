"""The three-phase packet scheduling pipeline.

1. :func:`init_matrix` grants every node its own frame, blocking everything
   within two hops.
2. :func:`minimize_frame_length` greedily folds the two grayest frames
   together while they match.
3. :func:`maximize_throughput` walks the matrix column by column and turns
   gray slots black wherever the node's initial frame still matches, then
   closes the remaining grays as white.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .schedule import (
    BLACK,
    GRAY,
    WHITE,
    Frame,
    ScheduleError,
    ScheduleMatrix,
    combine_frames,
    gray_count,
    match_frames,
    max_gray_frame,
)
from .topology import Topology, two_hop_closed_interference

__all__ = [
    "PsaTrace",
    "init_matrix",
    "minimize_frame_length",
    "maximize_throughput",
    "run_psa",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsaTrace:
    initial: ScheduleMatrix
    minimized: ScheduleMatrix
    final: ScheduleMatrix

    def to_dict(self) -> dict:
        return {
            "initial": self.initial.to_dict(),
            "minimized": self.minimized.to_dict(),
            "final": self.final.to_dict(),
        }


def init_matrix(t: Topology) -> ScheduleMatrix:
    frames = []
    for u in t.nodes:
        f = [GRAY] * t.node_count
        for w in two_hop_closed_interference(t, u):
            f[w - 1] = WHITE
        # u is a neighbour of its own neighbours; it stays black regardless.
        f[u - 1] = BLACK
        frames.append(tuple(f))
    return ScheduleMatrix(t.node_count, tuple(frames))


def _merge(frames: list[Frame], i: int, j: int) -> list[Frame]:
    merged = combine_frames(frames[i], frames[j])
    survivors = [f for k, f in enumerate(frames) if k != i and k != j]
    survivors.append(merged)
    return survivors


def _first_matching_pair(frames: list[Frame]) -> Optional[tuple[int, int]]:
    order = sorted(range(len(frames)), key=lambda k: -gray_count(frames[k]))
    for pos, i in enumerate(order):
        for j in order[pos + 1:]:
            if match_frames(frames[i], frames[j]):
                return i, j
    return None


def minimize_frame_length(s: ScheduleMatrix, exhaustive_pairs: bool = False) -> ScheduleMatrix:
    """Fold frames together until the two grayest ones no longer match.

    The merged frame goes to the end of the matrix; the other frames keep
    their order.  With ``exhaustive_pairs`` the loop does not stop at the
    first failed top pair but falls back to the first matching pair in
    gray-count order, and only stops when no pair matches at all.
    """
    frames = list(s.frames)
    while True:
        a = max_gray_frame(frames)
        b = max_gray_frame(frames, excluded=a) if a is not None else None
        if a is not None and b is not None and match_frames(frames[a], frames[b]):
            frames = _merge(frames, a, b)
            continue
        if not exhaustive_pairs:
            break
        pair = _first_matching_pair(frames)
        if pair is None:
            break
        frames = _merge(frames, *pair)
    logger.debug("frame length %d -> %d", len(s), len(frames))
    return ScheduleMatrix(s.node_count, tuple(frames))


def maximize_throughput(minimized: ScheduleMatrix, initial: ScheduleMatrix) -> ScheduleMatrix:
    """Grant extra slots column by column, then turn leftover grays white.

    For each node ``u`` in id order and each frame in matrix order, a gray
    slot of ``u`` becomes black when ``u``'s initial frame matches the frame;
    the frame is replaced in place by the combination.
    """
    n = initial.node_count
    if minimized.node_count != n:
        raise ScheduleError(
            f"matrix width {minimized.node_count} does not match initial width {n}"
        )
    if initial.frame_length != n:
        raise ScheduleError(
            f"initial matrix must have one frame per node ({n}), got {initial.frame_length}"
        )
    frames = list(minimized.frames)
    for u in range(n):
        own = initial.frames[u]
        for k, f in enumerate(frames):
            if f[u] is GRAY and match_frames(own, f):
                frames[k] = combine_frames(own, f)
    closed = tuple(tuple(WHITE if x is GRAY else x for x in f) for f in frames)
    return ScheduleMatrix(n, closed)


def run_psa(t: Topology, exhaustive_pairs: bool = False) -> PsaTrace:
    initial = init_matrix(t)
    minimized = minimize_frame_length(initial, exhaustive_pairs=exhaustive_pairs)
    final = maximize_throughput(minimized, initial)
    return PsaTrace(initial, minimized, final)
