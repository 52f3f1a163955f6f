"""Shared scenario builders for the test suite."""

from sdnscen.attributes import DEFAULT_LINK_RANGES, AttributeRanges
from sdnscen.scenario import build_scenario
from sdnscen.topology import TopologyClass
from sdnscen.traffic import DEFAULT_FLOW_RANGES, FlowRanges


def degenerate_link_ranges(bw=10, delay=2.0, jitter=0.1, plr=0.0):
    return AttributeRanges(bw, bw, delay, delay, jitter, jitter, plr, plr)


def degenerate_flow_ranges(bw=20, delay=5.0, jitter=0.2, plr=0.0):
    return FlowRanges(bw, bw, delay, delay, jitter, jitter, plr, plr)


def make_scenario(
    kind=TopologyClass.SPARSE,
    n=6,
    seed=7,
    flows=2,
    link_ranges=DEFAULT_LINK_RANGES,
    flow_ranges=DEFAULT_FLOW_RANGES,
    created="1970-01-01T00:00:00Z",
):
    return build_scenario(
        kind=kind,
        n=n,
        seed=seed,
        flow_count=flows,
        link_ranges=link_ranges,
        flow_ranges=flow_ranges,
        created=created,
    )
