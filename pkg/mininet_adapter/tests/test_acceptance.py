"""Deployment-fidelity acceptance: requires a live Mininet environment.

Without the emulator these tests skip (the generator tool's own suite is
fully independent of this package).  With it, the sparse n=6 and
full-mesh n=5 fixtures must deploy with the exact link count, reach ping
success 1.0, and keep measured throughput on 3 sampled links within 15%
above the configured bandwidth.
"""

import os
from pathlib import Path

import pytest

from mininet_adapter.deploy import build_network, teardown
from mininet_adapter.loader import load_scenario
from mininet_adapter.verify import BANDWIDTH_TOLERANCE, verify_deployment

FIXTURES = Path(__file__).parent / "fixtures"


def _emulator_ready() -> bool:
    try:
        import mininet  # noqa: F401
    except ImportError:
        return False
    return os.geteuid() == 0


requires_emulator = pytest.mark.skipif(
    not _emulator_ready(),
    reason="emulator environment required (mininet importable, run as root)",
)


@requires_emulator
@pytest.mark.parametrize(
    "fixture,n,edges",
    [("sparse_n6.json", 6, 6), ("full_mesh_n5.json", 5, 10)],
)
def test_acceptance_deployment_fidelity(fixture, n, edges):
    scenario = load_scenario(str(FIXTURES / fixture))
    handle = build_network(scenario)
    try:
        assert handle.link_total == edges + n  # scenario links + host attachments
        report = verify_deployment(handle, scenario, probe_count=3)
        assert report.ping_success_ratio == 1.0
        for probe in report.probes:
            assert probe.measured_mbps <= probe.configured_mbps * BANDWIDTH_TOLERANCE
        assert report.verdict == "pass"
    finally:
        teardown(handle)
    print(f"\nACCEPTANCE PASS: deployment fidelity ({fixture})")
