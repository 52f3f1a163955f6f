"""Flow workload generation over a topology.

A flow is a demand record: an ordered (source, destination) pair with
src != dst plus the four QoS requirements, drawn within expert-set
bounds under the same interval conventions as link attributes.  No
packet-level detail (arrival times, durations) is modeled.

Each flow draws from its own substream (``flow/<i>`` of the given seed),
so regenerating with a different count leaves the common prefix of flows
unchanged.  Endpoints are uniform over ordered pairs, with repeats
across flows allowed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .attributes import AttributeRanges, check_ranges
from .errors import EndpointError
from .rng import Stream, substream_seed
from .topology import Topology


class FlowRanges(AttributeRanges):
    """Expert-set [min, max] bounds for the four flow requirements."""


@dataclass(frozen=True)
class FlowRequirements:
    """QoS demand of a single flow."""

    bandwidth: int
    delay: float
    jitter: float
    plr: float


@dataclass(frozen=True)
class Flow:
    id: int
    src: int
    dst: int
    req: FlowRequirements


DEFAULT_FLOW_RANGES = FlowRanges(
    bandwidth_min=10,
    bandwidth_max=100,
    delay_min=1.0,
    delay_max=10.0,
    jitter_min=0.0,
    jitter_max=1.0,
    plr_min=0.0,
    plr_max=0.05,
)


def generate_flows(
    t: Topology, count: int, ranges: FlowRanges, seed: int
) -> list[Flow]:
    """Generate ``count`` flows with endpoints drawn from ``t``.

    Flow ids are 0..count-1 in order.  Per-flow draw order is fixed:
    src, dst, then bandwidth, delay, jitter, plr.
    """
    check_ranges(ranges)
    if count < 0:
        raise ValueError(f"flow count must be non-negative, got {count}")
    if count > 0 and t.n < 2:
        raise EndpointError(
            f"flows need at least 2 nodes to pick distinct endpoints, topology has {t.n}"
        )
    flows = []
    for i in range(count):
        stream = Stream(substream_seed(seed, f"flow/{i}"))
        src = stream.randint(0, t.n - 1)
        dst = stream.randint(0, t.n - 2)
        if dst >= src:
            dst += 1
        req = FlowRequirements(
            bandwidth=stream.randint(ranges.bandwidth_min, ranges.bandwidth_max),
            delay=stream.uniform(ranges.delay_min, ranges.delay_max),
            jitter=stream.uniform(ranges.jitter_min, ranges.jitter_max),
            plr=stream.uniform(ranges.plr_min, ranges.plr_max),
        )
        flows.append(Flow(id=i, src=src, dst=dst, req=req))
    return flows
