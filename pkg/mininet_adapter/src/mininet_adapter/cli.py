"""CLI: deploy a scenario file into Mininet, optionally verifying it.

Exit codes: 0 success (verification passed, when requested), 1 scenario
or verification failure, 2 usage error, 3 I/O error, 4 emulator
environment or deployment error.
"""

from __future__ import annotations

import argparse
import sys

from .deploy import build_network, teardown
from .errors import (
    DeploymentError,
    EmulatorUnavailableError,
    ScenarioFormatError,
    ScenarioInvalidError,
)
from .loader import load_scenario
from .verify import verify_deployment

PROG = "mn-scenario"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{PROG}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def main(argv=None) -> int:
    parser = _Parser(prog=PROG, description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    dep = sub.add_parser("deploy", help="instantiate a scenario in Mininet")
    dep.add_argument("scenario", help="scenario JSON path (schema 1.0)")
    dep.add_argument("--verify", action="store_true", help="run fidelity probes")
    dep.add_argument("--report", help="write the verification report JSON here")
    dep.add_argument(
        "--probe-links", type=_positive, default=3, help="links to throughput-probe"
    )
    args = parser.parse_args(argv)

    try:
        scenario = load_scenario(args.scenario)
    except (ScenarioFormatError, ScenarioInvalidError) as exc:
        return _fail(exc, 1)
    except OSError as exc:
        return _fail(exc, 3)

    try:
        handle = build_network(scenario)
    except EmulatorUnavailableError as exc:
        return _fail(exc, 4)
    except DeploymentError as exc:
        return _fail(exc, 4)

    try:
        print(
            f"deployed {scenario.topology_class} n={scenario.n}"
            f" E={len(scenario.links)} links={handle.link_total} seed={scenario.seed}"
        )
        if not args.verify:
            return 0
        report = verify_deployment(handle, scenario, probe_count=args.probe_links)
        print(
            f"verify: ping={report.ping_success_ratio}"
            f" probes={len(report.probes)} verdict={report.verdict}"
        )
        if args.report:
            try:
                with open(args.report, "w", encoding="utf-8", newline="") as fh:
                    fh.write(report.to_json())
            except OSError as exc:
                return _fail(exc, 3)
        return 0 if report.verdict == "pass" else 1
    except DeploymentError as exc:
        return _fail(exc, 4)
    finally:
        teardown(handle)


def _fail(exc: Exception, code: int) -> int:
    message = " ".join(str(exc).split())
    print(f"{PROG}: error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
