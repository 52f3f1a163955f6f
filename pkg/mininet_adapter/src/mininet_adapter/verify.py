"""Deployment fidelity checks: all-pairs ping plus per-link throughput.

A deployment passes when every host can reach every other host (ping
success ratio 1.0) and measured throughput on the sampled links stays
within 15% above the configured shaping (emulated rate limiting is
imprecise; the tolerance keeps the check meaningful without flakiness).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .deploy import NetworkHandle
from .errors import DeploymentError
from .loader import LoadedScenario

BANDWIDTH_TOLERANCE = 1.15

_RATE = re.compile(r"([\d.]+)\s*([KMG]?)bits/sec")


@dataclass(frozen=True)
class LinkProbe:
    u: int
    v: int
    configured_mbps: int
    measured_mbps: float


@dataclass(frozen=True)
class DeploymentReport:
    seed: int
    nodes: int
    links: int
    ping_success_ratio: float
    probes: tuple[LinkProbe, ...]
    verdict: str

    def to_json(self) -> str:
        doc = {
            "seed": self.seed,
            "nodes": self.nodes,
            "links": self.links,
            "ping_success_ratio": self.ping_success_ratio,
            "bandwidth_probes": [
                {
                    "u": p.u,
                    "v": p.v,
                    "configured_mbps": p.configured_mbps,
                    "measured_mbps": p.measured_mbps,
                }
                for p in self.probes
            ],
            "verdict": self.verdict,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_rate_mbps(text: str) -> float:
    """Extract a throughput figure like '9.53 Mbits/sec' in Mbit/s."""
    match = _RATE.search(text)
    if not match:
        raise DeploymentError(f"unparseable throughput report: {text!r}")
    value = float(match.group(1))
    unit = match.group(2)
    divisor = {"": 1e6, "K": 1e3, "M": 1.0, "G": 1e-3}[unit]
    return value / divisor


def pick_probe_edges(
    scenario: LoadedScenario, count: int = 3
) -> list[tuple[int, int]]:
    """Deterministic sample: up to ``count`` edges spread over the sorted list."""
    edges = sorted(scenario.links)
    if len(edges) <= count:
        return edges
    picked = [edges[(i * len(edges)) // count] for i in range(count)]
    return sorted(set(picked))


def verify_deployment(
    handle: NetworkHandle, scenario: LoadedScenario, probe_count: int = 3
) -> DeploymentReport:
    """Probe the running network and compare against the scenario."""
    loss_percent = handle.net.pingAll()
    ping_ratio = round((100.0 - float(loss_percent)) / 100.0, 6)

    probes = []
    for u, v in pick_probe_edges(scenario, probe_count):
        outputs = handle.net.iperf(
            (handle.hosts[u], handle.hosts[v]), seconds=2
        )
        measured = max(parse_rate_mbps(text) for text in outputs)
        probes.append(
            LinkProbe(
                u=u,
                v=v,
                configured_mbps=scenario.links[(u, v)].bandwidth,
                measured_mbps=measured,
            )
        )

    shaping_ok = all(
        p.measured_mbps <= p.configured_mbps * BANDWIDTH_TOLERANCE for p in probes
    )
    verdict = "pass" if ping_ratio == 1.0 and shaping_ok else "fail"
    return DeploymentReport(
        seed=scenario.seed,
        nodes=scenario.n,
        links=handle.link_total,
        ping_success_ratio=ping_ratio,
        probes=tuple(probes),
        verdict=verdict,
    )
