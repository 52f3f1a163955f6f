"""Command-line interface: generate / analyze / export / validate.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 I/O error.
Every failure prints exactly one diagnostic line to stderr.  All
randomness flows from the required --seed flag; there is no wall-clock
default anywhere, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timedelta

from .attributes import DEFAULT_LINK_RANGES, AttributeRanges
from .dataset import (
    export_emulator_script,
    export_flat_dataset,
    export_scenario_json,
    parse_scenario_json,
)
from .errors import GuardError, ScenarioError
from .paths import path_count_matrix, summarize
from .scenario import DEFAULT_CREATED, build_scenario
from .topology import TopologyClass
from .traffic import DEFAULT_FLOW_RANGES, FlowRanges

PROG = "sdnscen"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single diagnostic line, no usage dump
        self.exit(2, f"{PROG}: error: {message}\n")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ScenarioError as exc:
        _fail(exc)
        return 1
    except OSError as exc:
        _fail(exc)
        return 3


def _fail(exc: Exception) -> None:
    message = " ".join(str(exc).split())
    print(f"{PROG}: error: {message}", file=sys.stderr)


def _uint64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _utc_timestamp(text: str) -> str:
    try:
        parsed = datetime.fromisoformat(text.replace("Z", "+00:00"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO-8601 timestamp: {text!r}")
    if parsed.tzinfo is None or parsed.utcoffset() != timedelta(0):
        raise argparse.ArgumentTypeError("timestamp must be UTC")
    return text


def _build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    gen = sub.add_parser("generate", help="generate a scenario and write its JSON")
    gen.add_argument(
        "--class",
        dest="kind",
        required=True,
        choices=[c.value for c in TopologyClass],
        help="topology class",
    )
    gen.add_argument("--nodes", type=int, required=True, help="node count")
    gen.add_argument("--seed", type=_uint64, required=True, help="scenario seed")
    gen.add_argument("--flows", type=_non_negative, default=0, help="flow count")
    gen.add_argument("--output", required=True, help="scenario JSON path")
    gen.add_argument(
        "--created",
        type=_utc_timestamp,
        default=DEFAULT_CREATED,
        help="provenance timestamp (ISO-8601 UTC; defaults to the epoch)",
    )
    for prefix, defaults in (("link", DEFAULT_LINK_RANGES), ("flow", DEFAULT_FLOW_RANGES)):
        gen.add_argument(
            f"--{prefix}-bandwidth",
            nargs=2,
            type=int,
            metavar=("MIN", "MAX"),
            default=[defaults.bandwidth_min, defaults.bandwidth_max],
            help=f"{prefix} bandwidth range, Mbit/s",
        )
        gen.add_argument(
            f"--{prefix}-delay",
            nargs=2,
            type=float,
            metavar=("MIN", "MAX"),
            default=[defaults.delay_min, defaults.delay_max],
            help=f"{prefix} delay range, ms",
        )
        gen.add_argument(
            f"--{prefix}-jitter",
            nargs=2,
            type=float,
            metavar=("MIN", "MAX"),
            default=[defaults.jitter_min, defaults.jitter_max],
            help=f"{prefix} jitter range, ms",
        )
        gen.add_argument(
            f"--{prefix}-plr",
            nargs=2,
            type=float,
            metavar=("MIN", "MAX"),
            default=[defaults.plr_min, defaults.plr_max],
            help=f"{prefix} loss-rate range, fraction in [0, 1]",
        )
    gen.set_defaults(handler=_cmd_generate)

    ana = sub.add_parser("analyze", help="report per-pair simple-path counts")
    ana.add_argument("scenario", help="scenario JSON path")
    ana.add_argument("--max-length", type=_positive, help="cap path length (edges)")
    ana.add_argument("--force", action="store_true", help="ignore the size guard")
    ana.add_argument("--matrix", action="store_true", help="print the full matrix")
    ana.set_defaults(handler=_cmd_analyze)

    exp = sub.add_parser("export", help="write a flat dataset or emulator script")
    exp.add_argument("scenario", help="scenario JSON path")
    exp.add_argument("--format", required=True, choices=["flat", "emulator"])
    exp.add_argument("--output", required=True, help="output path")
    exp.set_defaults(handler=_cmd_export)

    val = sub.add_parser("validate", help="check a scenario document")
    val.add_argument("scenario", help="scenario JSON path")
    val.set_defaults(handler=_cmd_validate)

    return parser


def _load(path: str):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return parse_scenario_json(fh.read())


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _cmd_generate(args) -> int:
    link_ranges = AttributeRanges(
        bandwidth_min=args.link_bandwidth[0],
        bandwidth_max=args.link_bandwidth[1],
        delay_min=args.link_delay[0],
        delay_max=args.link_delay[1],
        jitter_min=args.link_jitter[0],
        jitter_max=args.link_jitter[1],
        plr_min=args.link_plr[0],
        plr_max=args.link_plr[1],
    )
    flow_ranges = FlowRanges(
        bandwidth_min=args.flow_bandwidth[0],
        bandwidth_max=args.flow_bandwidth[1],
        delay_min=args.flow_delay[0],
        delay_max=args.flow_delay[1],
        jitter_min=args.flow_jitter[0],
        jitter_max=args.flow_jitter[1],
        plr_min=args.flow_plr[0],
        plr_max=args.flow_plr[1],
    )
    scenario = build_scenario(
        kind=TopologyClass(args.kind),
        n=args.nodes,
        seed=args.seed,
        flow_count=args.flows,
        link_ranges=link_ranges,
        flow_ranges=flow_ranges,
        created=args.created,
    )
    _write(args.output, export_scenario_json(scenario))
    print(
        f"generated {scenario.topology.kind.value} n={scenario.topology.n}"
        f" E={len(scenario.topology.edges)} flows={len(scenario.flows)}"
        f" seed={scenario.seed} -> {args.output}"
    )
    return 0


def _cmd_analyze(args) -> int:
    scenario = _load(args.scenario)
    try:
        matrix = path_count_matrix(
            scenario.topology, max_length=args.max_length, force=args.force
        )
    except GuardError as exc:
        raise GuardError(f"{exc}; use --max-length to cap enumeration") from exc
    stats = summarize(matrix)
    pairs = matrix.n * (matrix.n - 1) // 2
    print(
        f"path counts: min={stats.min_pairs} max={stats.max_pairs}"
        f" mean={stats.mean_pairs!r} pairs={pairs}"
        f" capped={'yes' if matrix.capped else 'no'}"
    )
    if args.matrix:
        for row in matrix.counts:
            print(" ".join(str(x) for x in row))
    return 0


def _cmd_export(args) -> int:
    scenario = _load(args.scenario)
    if args.format == "flat":
        text = export_flat_dataset(scenario)
    else:
        text = export_emulator_script(scenario)
    _write(args.output, text)
    print(f"exported {args.format} -> {args.output}")
    return 0


def _cmd_validate(args) -> int:
    scenario = _load(args.scenario)
    print(
        f"valid scenario: class={scenario.topology.kind.value}"
        f" n={scenario.topology.n} E={len(scenario.topology.edges)}"
        f" flows={len(scenario.flows)}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
