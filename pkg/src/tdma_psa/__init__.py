"""Greedy collision-free TDMA broadcast scheduling for wireless sensor networks."""

from .baselines import greedy_coloring_schedule
from .estimators import GreedyColoringScheduler, PacketScheduler
from .metrics import (
    MetricsReport,
    average_delay,
    channel_utilization,
    compute_metrics,
    throughput,
)
from .psa import PsaTrace, init_matrix, maximize_throughput, minimize_frame_length, run_psa
from .reference import load_benchmark, recognize_benchmark
from .schedule import (
    BLACK,
    GRAY,
    WHITE,
    ScheduleError,
    ScheduleMatrix,
    SlotState,
    combine_frames,
    gray_count,
    match_frames,
    max_gray_frame,
    parse_matrix,
)
from .topology import (
    Topology,
    TopologyError,
    load_topology,
    one_hop,
    parse_topology,
    square_graph,
    two_hop_closed_interference,
)
from .verify import VerificationReport, exact_min_frame_length, verify_schedule

__version__ = "0.1.0"

__all__ = [
    "BLACK",
    "GRAY",
    "WHITE",
    "GreedyColoringScheduler",
    "MetricsReport",
    "PacketScheduler",
    "PsaTrace",
    "ScheduleError",
    "ScheduleMatrix",
    "SlotState",
    "Topology",
    "TopologyError",
    "VerificationReport",
    "average_delay",
    "channel_utilization",
    "combine_frames",
    "compute_metrics",
    "exact_min_frame_length",
    "gray_count",
    "greedy_coloring_schedule",
    "init_matrix",
    "load_benchmark",
    "load_topology",
    "match_frames",
    "max_gray_frame",
    "maximize_throughput",
    "minimize_frame_length",
    "one_hop",
    "parse_matrix",
    "parse_topology",
    "recognize_benchmark",
    "run_psa",
    "square_graph",
    "throughput",
    "two_hop_closed_interference",
    "verify_schedule",
]
