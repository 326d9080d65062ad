"""Throughput, average delay and channel utilization of a finished schedule.

Everything is computed with exact fractions; rounding to two decimals only
happens when a value is rendered.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .schedule import ScheduleError, ScheduleMatrix

__all__ = [
    "MetricsReport",
    "throughput",
    "average_delay",
    "channel_utilization",
    "utilization_from_counts",
    "compute_metrics",
    "format_decimal",
]


def format_decimal(value, places: int = 2) -> str:
    """Render ``value`` rounded half-up to ``places`` decimals."""
    q = Decimal(1).scaleb(-places)
    if isinstance(value, (Fraction, int)):
        # Decimal division is inexact; round the exact fraction ourselves.
        scaled = Fraction(value) * 10**places
        whole, rem = divmod(scaled.numerator, scaled.denominator)
        if 2 * rem >= scaled.denominator:
            whole += 1
        return str(Decimal(whole).scaleb(-places).quantize(q))
    return str(Decimal(str(value)).quantize(q, rounding=ROUND_HALF_UP))


def _require_final(s: ScheduleMatrix) -> None:
    if s.has_gray:
        raise ScheduleError("metrics are defined on final matrices only; found gray slots")


def throughput(s: ScheduleMatrix) -> int:
    """Number of black slots in the matrix."""
    _require_final(s)
    return s.black_count


def average_delay(s: ScheduleMatrix) -> Fraction:
    """Mean wait, in frames, between a node's transmit opportunities."""
    _require_final(s)
    if s.frame_length == 0:
        raise ScheduleError("average delay of an empty matrix is undefined")
    total = Fraction(0)
    for node, blacks in enumerate(s.per_node_blacks(), start=1):
        if blacks == 0:
            raise ScheduleError(f"invalid schedule: node {node} never transmits")
        total += Fraction(1, blacks)
    return Fraction(s.frame_length, s.node_count) * total


def utilization_from_counts(frame_length: int, node_count: int, sigma: int) -> Fraction:
    if frame_length <= 0 or node_count <= 0:
        raise ScheduleError("channel utilization needs at least one frame and one node")
    return Fraction(sigma * 100, frame_length * node_count)


def channel_utilization(s: ScheduleMatrix) -> Fraction:
    """Black slots as a percentage of all matrix cells."""
    _require_final(s)
    return utilization_from_counts(s.frame_length, s.node_count, s.black_count)


@dataclass(frozen=True)
class MetricsReport:
    frame_length: int
    throughput_sigma: int
    average_delay_tau: Fraction
    channel_utilization_eta: Fraction
    per_node_blacks: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "frame_length": self.frame_length,
            "throughput": self.throughput_sigma,
            "average_delay": format_decimal(self.average_delay_tau),
            "channel_utilization": format_decimal(self.channel_utilization_eta),
            "per_node_blacks": list(self.per_node_blacks),
        }

    def to_text(self) -> str:
        d = self.to_dict()
        return (
            f"frame_length: {d['frame_length']}\n"
            f"throughput: {d['throughput']}\n"
            f"average_delay: {d['average_delay']}\n"
            f"channel_utilization: {d['channel_utilization']}\n"
            f"per_node_blacks: {' '.join(map(str, d['per_node_blacks']))}\n"
        )


def compute_metrics(s: ScheduleMatrix) -> MetricsReport:
    return MetricsReport(
        frame_length=s.frame_length,
        throughput_sigma=throughput(s),
        average_delay_tau=average_delay(s),
        channel_utilization_eta=channel_utilization(s),
        per_node_blacks=tuple(s.per_node_blacks()),
    )
