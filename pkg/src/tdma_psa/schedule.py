"""Tri-state slot algebra: frames, ``match``/``combine`` and gray bookkeeping.

A frame holds one slot state per node.  BLACK means the node owns the slot
and can transmit without collision, WHITE means it is blocked, GRAY means
its status is still open.  Two frames can be merged into one with
:func:`combine_frames`, but only after :func:`match_frames` has accepted
the pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import numpy as np

__all__ = [
    "SlotState",
    "BLACK",
    "GRAY",
    "WHITE",
    "Frame",
    "ScheduleMatrix",
    "ScheduleError",
    "match_frames",
    "combine_frames",
    "gray_count",
    "max_gray_frame",
    "parse_matrix",
]


class ScheduleError(ValueError):
    pass


class SlotState(Enum):
    BLACK = "B"
    GRAY = "."
    WHITE = "w"

    def __repr__(self) -> str:
        return self.name

    @property
    def char(self) -> str:
        return self.value

    @classmethod
    def from_char(cls, c: str) -> "SlotState":
        try:
            return _FROM_CHAR[c]
        except KeyError:
            raise ScheduleError(f"unknown slot symbol {c!r} (expected one of B . w)") from None


BLACK, GRAY, WHITE = SlotState.BLACK, SlotState.GRAY, SlotState.WHITE
_FROM_CHAR = {"B": BLACK, ".": GRAY, "w": WHITE}

Frame = tuple[SlotState, ...]


def _frame(slots: Iterable) -> Frame:
    out = []
    for s in slots:
        out.append(s if isinstance(s, SlotState) else SlotState.from_char(s))
    return tuple(out)


def _same_length(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ScheduleError(f"frame length mismatch: {len(a)} != {len(b)}")


def match_frames(a: Frame, b: Frame) -> bool:
    """True when ``a`` and ``b`` may be combined without losing a guarantee.

    Slot by slot, one of these must hold: ``a`` is gray; ``a`` is black and
    ``b`` gray; ``a`` is white and ``b`` is not black.
    """
    _same_length(a, b)
    for x, y in zip(a, b):
        if x is GRAY:
            continue
        if x is BLACK and y is GRAY:
            continue
        if x is WHITE and y is not BLACK:
            continue
        return False
    return True


def combine_frames(a: Frame, b: Frame, *, check: bool = True) -> Frame:
    """Merge two matched frames: take ``b``'s slot unless it is gray.

    Combining frames that do not match is a caller bug and raises
    ``ScheduleError`` unless ``check`` is disabled.
    """
    _same_length(a, b)
    if check and not match_frames(a, b):
        raise ScheduleError("combine_frames called on frames that do not match")
    return tuple(x if y is GRAY else y for x, y in zip(a, b))


def gray_count(f: Frame) -> int:
    return sum(1 for s in f if s is GRAY)


def max_gray_frame(
    s: Union["ScheduleMatrix", Sequence[Frame]], excluded: Optional[int] = None
) -> Optional[int]:
    """Position of the frame with the most gray slots, skipping ``excluded``.

    Frames are scanned in matrix order and only a strictly larger count
    replaces the current pick, so ties go to the earliest frame.  Frames
    with no gray at all are never picked.  ``excluded`` is a position, not a
    value, so duplicate frames are told apart.
    """
    frames = s.frames if isinstance(s, ScheduleMatrix) else s
    best, best_count = None, 0
    for i, f in enumerate(frames):
        if i == excluded:
            continue
        g = gray_count(f)
        if g > best_count:
            best, best_count = i, g
    return best


@dataclass(frozen=True)
class ScheduleMatrix:
    """An ordered stack of frames, one column per node."""

    node_count: int
    frames: tuple[Frame, ...] = ()

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ScheduleError(f"node count must be >= 1, got {self.node_count}")
        frames = tuple(_frame(f) for f in self.frames)
        for k, f in enumerate(frames):
            if len(f) != self.node_count:
                raise ScheduleError(
                    f"frame {k + 1} has {len(f)} slots, expected {self.node_count}"
                )
        object.__setattr__(self, "frames", frames)

    @property
    def frame_length(self) -> int:
        return len(self.frames)

    def __len__(self) -> int:
        return len(self.frames)

    def __iter__(self):
        return iter(self.frames)

    def __getitem__(self, i: int) -> Frame:
        return self.frames[i]

    def count(self, state: SlotState) -> int:
        return sum(1 for f in self.frames for x in f if x is state)

    @property
    def black_count(self) -> int:
        return self.count(BLACK)

    @property
    def has_gray(self) -> bool:
        return any(x is GRAY for f in self.frames for x in f)

    def per_node_blacks(self) -> list[int]:
        counts = [0] * self.node_count
        for f in self.frames:
            for i, x in enumerate(f):
                if x is BLACK:
                    counts[i] += 1
        return counts

    def blacks_in_frame(self, k: int) -> list[int]:
        """1-based ids of the nodes that own frame ``k`` (0-based position)."""
        return [i + 1 for i, x in enumerate(self.frames[k]) if x is BLACK]

    def to_text(self) -> str:
        return "".join("".join(x.char for x in f) + "\n" for f in self.frames)

    def to_dict(self) -> dict:
        return {"nodes": self.node_count, "frames": [[x.char for x in f] for f in self.frames]}

    def to_array(self) -> np.ndarray:
        """(frames, nodes) int array: 1 black, 0 white, -1 gray."""
        code = {BLACK: 1, WHITE: 0, GRAY: -1}
        out = np.zeros((len(self.frames), self.node_count), dtype=np.int8)
        for k, f in enumerate(self.frames):
            out[k] = [code[x] for x in f]
        return out

    @classmethod
    def from_rows(cls, rows: Sequence[str], node_count: Optional[int] = None) -> "ScheduleMatrix":
        if node_count is None:
            if not rows:
                raise ScheduleError("cannot infer node count from an empty matrix")
            node_count = len(rows[0])
        return cls(node_count, tuple(_frame(r) for r in rows))

    @classmethod
    def from_dict(cls, data: dict) -> "ScheduleMatrix":
        try:
            nodes, frames = data["nodes"], data["frames"]
        except (KeyError, TypeError):
            raise ScheduleError("matrix JSON needs 'nodes' and 'frames' keys") from None
        if not isinstance(nodes, int) or isinstance(nodes, bool):
            raise ScheduleError(f"'nodes' must be an integer, got {nodes!r}")
        return cls(nodes, tuple(_frame(f) for f in frames))


def parse_matrix(text: str) -> ScheduleMatrix:
    """Read a matrix from its text grid or its JSON rendering.

    In the grid form every significant line is a frame written with
    ``B``/``.``/``w``; ``#`` lines are comments.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScheduleError(f"invalid matrix JSON: {exc}") from None
        return ScheduleMatrix.from_dict(data)
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ScheduleError(f"ragged matrix: row widths {sorted(widths)}")
    return ScheduleMatrix.from_rows(rows)
