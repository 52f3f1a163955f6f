"""Instantiate a loaded scenario as a live Mininet network.

One switch (``s<i>``) plus one attached host (``h<i>`` at
``10.0.0.<i+1>/24``) per node; every scenario edge becomes a TCLink
shaped with the designated bandwidth (Mbit/s), delay (ms), jitter (ms)
and loss (fraction converted to percent).  Mininet is imported lazily so
that loading and validation work on hosts without the emulator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal

from .errors import DeploymentError, EmulatorUnavailableError
from .loader import LoadedScenario

MAX_NODES = 64


@dataclass
class NetworkHandle:
    """A running emulated network plus name lookups for probes."""

    net: object
    hosts: dict[int, object] = field(default_factory=dict)
    switches: dict[int, object] = field(default_factory=dict)
    link_total: int = 0


def plr_to_percent(plr: float) -> float:
    """Loss fraction to percent without float-noise (0.05 -> 5.0)."""
    return float(Decimal(repr(float(plr))) * 100)


def _import_mininet():
    try:
        from mininet.link import TCLink
        from mininet.net import Mininet
        from mininet.node import OVSKernelSwitch
    except ImportError as exc:
        raise EmulatorUnavailableError(
            "the mininet package is not importable on this host"
        ) from exc
    return Mininet, TCLink, OVSKernelSwitch


def build_network(scenario: LoadedScenario) -> NetworkHandle:
    """Start an emulated network realizing ``scenario``.

    The caller owns the handle and must invoke ``teardown`` when done.
    """
    if scenario.n > MAX_NODES:
        raise DeploymentError(
            f"scenario has {scenario.n} nodes; deployment is capped at {MAX_NODES}"
        )
    Mininet, TCLink, OVSKernelSwitch = _import_mininet()
    net = Mininet(switch=OVSKernelSwitch, link=TCLink, autoSetMacs=True)
    handle = NetworkHandle(net=net)
    try:
        net.addController("c0")
        for i in range(scenario.n):
            handle.switches[i] = net.addSwitch(f"s{i}")
        for i in range(scenario.n):
            handle.hosts[i] = net.addHost(f"h{i}", ip=f"10.0.0.{i + 1}/24")
        for i in range(scenario.n):
            net.addLink(handle.hosts[i], handle.switches[i])
            handle.link_total += 1
        for (u, v), shaping in sorted(scenario.links.items()):
            net.addLink(
                handle.switches[u],
                handle.switches[v],
                bw=shaping.bandwidth,
                delay=f"{shaping.delay!r}ms",
                jitter=f"{shaping.jitter!r}ms",
                loss=plr_to_percent(shaping.plr),
            )
            handle.link_total += 1
        net.start()
    except Exception as exc:
        try:
            net.stop()
        except Exception:
            pass
        if isinstance(exc, (DeploymentError, EmulatorUnavailableError)):
            raise
        raise DeploymentError(f"emulator failed to build the network: {exc}") from exc
    return handle


def teardown(handle: NetworkHandle) -> None:
    handle.net.stop()
