"""Command-line interface.

Exit codes: 0 ok, 1 schedule found invalid, 2 bad input, 3 internal
invariant breach (a bug).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .baselines import greedy_coloring_schedule
from .metrics import compute_metrics, format_decimal
from .psa import run_psa
from .reference import REFERENCE_ROWS, SHIPPED_BENCHMARKS, load_benchmark, recognize_benchmark
from .schedule import ScheduleError, ScheduleMatrix, parse_matrix
from .topology import Topology, TopologyError, load_topology
from .verify import DEFAULT_NODE_LIMIT, OracleLimitError, exact_min_frame_length, verify_schedule

logger = logging.getLogger("tdma_psa")

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


class InternalError(Exception):
    pass


def _read_topology(spec: str) -> Topology:
    path = Path(spec)
    try:
        if not path.exists() and spec in SHIPPED_BENCHMARKS:
            return load_benchmark(spec)
        return load_topology(path)
    except (OSError, TopologyError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def _read_matrix(spec: str) -> ScheduleMatrix:
    try:
        return parse_matrix(Path(spec).read_text(encoding="utf-8"))
    except (OSError, ScheduleError) as exc:
        raise InputError(f"{spec}: {exc}") from None


def _build(topology: Topology, algo: str, exhaustive_pairs: bool):
    """Return (final matrix, trace or None), refusing to hand out an invalid schedule."""
    trace = None
    if algo == "psa":
        trace = run_psa(topology, exhaustive_pairs=exhaustive_pairs)
        final = trace.final
    else:
        final = greedy_coloring_schedule(topology)
    report = verify_schedule(topology, final)
    if not report.valid:
        raise InternalError(f"{algo} produced an invalid schedule: {report.to_dict()}")
    return final, trace


def _commented(matrix: ScheduleMatrix) -> str:
    return "".join(f"#   {row}\n" for row in matrix.to_text().splitlines())


def cmd_schedule(args) -> int:
    topology = _read_topology(args.input)
    final, trace = _build(topology, args.algo, args.exhaustive_pairs)
    metrics = compute_metrics(final)
    if args.format == "json":
        doc = {"algorithm": args.algo, **final.to_dict(), "metrics": metrics.to_dict()}
        if args.trace and trace is not None:
            doc["trace"] = trace.to_dict()
        out = json.dumps(doc, indent=2) + "\n"
    else:
        parts = []
        if args.trace and trace is not None:
            for name in ("initial", "minimized"):
                parts.append(f"# {name}\n" + _commented(getattr(trace, name)))
            parts.append("# final\n")
        parts.append(final.to_text())
        parts.append(f"# algorithm: {args.algo}\n")
        parts.append("".join(f"# {line}\n" for line in metrics.to_text().splitlines()))
        out = "".join(parts)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    topology = _read_topology(args.input)
    matrix = _read_matrix(args.matrix)
    try:
        report = verify_schedule(topology, matrix)
    except ScheduleError as exc:
        raise InputError(str(exc)) from None
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_metrics(args) -> int:
    if args.matrix:
        matrix = _read_matrix(args.matrix)
    elif args.input:
        matrix, _ = _build(_read_topology(args.input), args.algo, args.exhaustive_pairs)
    else:
        raise InputError("metrics needs -m MATRIX or -i TOPOLOGY")
    try:
        metrics = compute_metrics(matrix)
    except ScheduleError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(metrics.to_dict(), indent=2))
    else:
        sys.stdout.write(metrics.to_text())
    return EXIT_OK


def cmd_oracle(args) -> int:
    topology = _read_topology(args.input)
    try:
        value = exact_min_frame_length(topology, node_limit=args.max_oracle_nodes)
    except OracleLimitError as exc:
        raise InputError(f"{exc} (raise it with --max-oracle-nodes)") from None
    if args.format == "json":
        print(json.dumps({"exact_min_frame_length": value}))
    else:
        print(value)
    return EXIT_OK


@dataclass(frozen=True)
class CompareRow:
    algorithm: str
    frame_length: Optional[int]
    sigma: Optional[int]
    tau: Optional[str]
    eta: Optional[str]
    provenance: str  # "computed" or "paper"

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def compare_rows(
    topology: Topology, exhaustive_pairs: bool = False, reference: Optional[str] = None
) -> tuple[Optional[str], list[CompareRow]]:
    """Live psa/greedy rows, plus published rows when the topology is a known benchmark."""
    rows = []
    for algo in ("psa", "greedy"):
        final, _ = _build(topology, algo, exhaustive_pairs)
        m = compute_metrics(final)
        rows.append(
            CompareRow(
                algo,
                m.frame_length,
                m.throughput_sigma,
                format_decimal(m.average_delay_tau),
                format_decimal(m.channel_utilization_eta),
                "computed",
            )
        )
    bench = reference or recognize_benchmark(topology)
    if bench is not None:
        for r in REFERENCE_ROWS[bench]:
            rows.append(
                CompareRow(
                    r.algorithm,
                    r.frame_length,
                    r.sigma,
                    None if r.tau is None else str(r.tau),
                    None if r.eta is None else str(r.eta),
                    "paper",
                )
            )
    return bench, rows


def _table(rows: Sequence[CompareRow]) -> str:
    header = ("algorithm", "S", "sigma", "tau", "eta", "source")
    body = [
        (
            r.algorithm,
            *("-" if v is None else str(v) for v in (r.frame_length, r.sigma, r.tau, r.eta)),
            r.provenance,
        )
        for r in rows
    ]
    widths = [max(len(x[i]) for x in [header, *body]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" if i in (0, 5) else f"{{:>{w}}}" for i, w in enumerate(widths))
    return "\n".join(fmt.format(*line).rstrip() for line in [header, *body]) + "\n"


def cmd_compare(args) -> int:
    topology = _read_topology(args.input)
    bench, rows = compare_rows(topology, args.exhaustive_pairs, args.reference)
    if args.format == "json":
        print(json.dumps({"benchmark": bench, "rows": [r.to_dict() for r in rows]}, indent=2))
    else:
        if bench:
            print(f"# reference rows: published figures for {bench}")
        sys.stdout.write(_table(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdma-psa", description="Collision-free TDMA broadcast schedules for sensor networks."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, topo_required=True):
        p.add_argument(
            "-i",
            "--input",
            required=topo_required,
            metavar="PATH",
            help=f"topology file (or a shipped benchmark name: {', '.join(SHIPPED_BENCHMARKS)})",
        )
        p.add_argument("--format", choices=("text", "json"), default="text")

    def algo(p):
        p.add_argument("--algo", choices=("psa", "greedy"), default="psa")
        p.add_argument(
            "--exhaustive-pairs",
            action="store_true",
            help="frame-length phase keeps searching for any matching pair instead of stopping",
        )

    p = sub.add_parser("schedule", help="build a schedule and print it with its metrics")
    common(p)
    algo(p)
    p.add_argument("--trace", action="store_true", help="also print the phase matrices")
    p.add_argument("-o", "--output", metavar="PATH", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("verify", help="check a schedule for collisions and coverage")
    common(p)
    p.add_argument("-m", "--matrix", required=True, metavar="PATH", help="matrix file (grid or JSON)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("metrics", help="throughput, delay and utilization of a schedule")
    common(p, topo_required=False)
    algo(p)
    p.add_argument("-m", "--matrix", metavar="PATH", help="matrix file (grid or JSON)")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("oracle", help="exact minimum frame length (small graphs)")
    common(p)
    p.add_argument("--max-oracle-nodes", type=int, default=DEFAULT_NODE_LIMIT, metavar="N")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("compare", help="psa vs. greedy, plus published rows for known benchmarks")
    common(p)
    p.add_argument("--exhaustive-pairs", action="store_true")
    p.add_argument(
        "--reference",
        choices=sorted(REFERENCE_ROWS),
        help="attach the published rows of this benchmark regardless of the topology",
    )
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
