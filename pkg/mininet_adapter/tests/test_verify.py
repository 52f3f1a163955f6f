import json
from pathlib import Path

import pytest

from mininet_adapter.deploy import NetworkHandle, build_network
from mininet_adapter.errors import DeploymentError
from mininet_adapter.loader import load_scenario
from mininet_adapter.verify import (
    parse_rate_mbps,
    pick_probe_edges,
    verify_deployment,
)

from fakes import FakeNet, install_fake_mininet

FIXTURES = Path(__file__).parent / "fixtures"


def deployed(monkeypatch, **net_kwargs):
    def factory(**kwargs):
        return FakeNet(**net_kwargs, **kwargs)

    install_fake_mininet(monkeypatch, factory=factory)
    scenario = load_scenario(str(FIXTURES / "sparse_n6.json"))
    return build_network(scenario), scenario


def test_clean_network_passes(monkeypatch):
    handle, scenario = deployed(monkeypatch, ping_loss=0.0)
    report = verify_deployment(handle, scenario)
    assert report.ping_success_ratio == 1.0
    assert report.verdict == "pass"
    assert report.links == 12
    assert report.nodes == 6
    assert len(report.probes) == 3


def test_ping_loss_fails_verdict(monkeypatch):
    handle, scenario = deployed(monkeypatch, ping_loss=25.0)
    report = verify_deployment(handle, scenario)
    assert report.ping_success_ratio == 0.75
    assert report.verdict == "fail"


def test_throughput_above_tolerance_fails(monkeypatch):
    handle, scenario = deployed(
        monkeypatch, iperf_outputs=["900 Mbits/sec", "901 Mbits/sec"]
    )
    report = verify_deployment(handle, scenario)
    assert report.verdict == "fail"


def test_throughput_within_tolerance_passes(monkeypatch):
    handle, scenario = deployed(
        monkeypatch, iperf_outputs=["1.0 Mbits/sec", "1.1 Mbits/sec"]
    )
    report = verify_deployment(handle, scenario)
    assert report.verdict == "pass"
    assert all(p.measured_mbps == 1.1 for p in report.probes)


def test_report_json_shape(monkeypatch):
    handle, scenario = deployed(monkeypatch)
    doc = json.loads(verify_deployment(handle, scenario).to_json())
    assert doc["verdict"] == "pass"
    assert doc["seed"] == scenario.seed
    assert len(doc["bandwidth_probes"]) == 3
    assert {"u", "v", "configured_mbps", "measured_mbps"} == set(
        doc["bandwidth_probes"][0]
    )


def test_parse_rate_units():
    assert parse_rate_mbps("9.53 Mbits/sec") == 9.53
    assert parse_rate_mbps("950 Kbits/sec") == 0.95
    assert parse_rate_mbps("1.2 Gbits/sec") == 1200.0
    assert parse_rate_mbps("64 bits/sec") == 6.4e-05


def test_parse_rate_garbage_raises():
    with pytest.raises(DeploymentError):
        parse_rate_mbps("connection refused")


def test_probe_edges_deterministic_and_spread():
    scenario = load_scenario(str(FIXTURES / "full_mesh_n5.json"))
    first = pick_probe_edges(scenario, 3)
    second = pick_probe_edges(scenario, 3)
    assert first == second
    assert len(first) == 3
    assert all(e in scenario.links for e in first)


def test_probe_edges_small_topology_uses_all():
    scenario = load_scenario(str(FIXTURES / "sparse_n6.json"))
    assert pick_probe_edges(scenario, 10) == sorted(scenario.links)


def test_iperf_called_on_edge_hosts(monkeypatch):
    handle, scenario = deployed(monkeypatch)
    verify_deployment(handle, scenario)
    net = handle.net
    expected = [(f"h{u}", f"h{v}") for u, v in pick_probe_edges(scenario, 3)]
    assert net.iperf_calls == expected


def test_verify_with_bare_handle():
    net = FakeNet(ping_loss=0.0)
    scenario = load_scenario(str(FIXTURES / "sparse_n6.json"))
    hosts = {i: net.addHost(f"h{i}") for i in range(scenario.n)}
    handle = NetworkHandle(net=net, hosts=hosts, link_total=12)
    report = verify_deployment(handle, scenario)
    assert report.verdict == "pass"
