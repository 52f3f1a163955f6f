"""The Scenario: one complete, regenerable evaluation artifact.

A scenario bundles the seed, the topology, the per-link attribute map,
the flow list and the ranges that produced them.  Everything random is
derived from the single scenario seed through named substreams
(``topology``, ``links``, ``flows``), so the tuple
(seed, class, n, flow count, ranges) regenerates the scenario exactly.

The ``created`` field is caller-supplied provenance.  It defaults to the
Unix epoch rather than the wall clock so that identical inputs yield
byte-identical exports; pass a real timestamp to record one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .attributes import AttributeRanges, LinkAttributes, assign_link_attributes
from .generate import GeneratorConfig, generate_topology
from .rng import substream_seed
from .topology import Topology, TopologyClass
from .traffic import Flow, FlowRanges, generate_flows

SCHEMA_VERSION = "1.0"
DEFAULT_CREATED = "1970-01-01T00:00:00Z"


@dataclass(frozen=True)
class Scenario:
    schema_version: str
    seed: int
    created: str
    topology: Topology
    link_attrs: dict[tuple[int, int], LinkAttributes]
    link_ranges: AttributeRanges
    flow_ranges: FlowRanges
    flows: tuple[Flow, ...]


def build_scenario(
    kind: TopologyClass,
    n: int,
    seed: int,
    flow_count: int,
    link_ranges: AttributeRanges,
    flow_ranges: FlowRanges,
    created: str = DEFAULT_CREATED,
) -> Scenario:
    """Generate the full scenario determined by the arguments."""
    topology = generate_topology(
        GeneratorConfig(kind=kind, n=n, seed=substream_seed(seed, "topology"))
    )
    link_attrs = assign_link_attributes(
        topology, link_ranges, substream_seed(seed, "links")
    )
    flows = generate_flows(
        topology, flow_count, flow_ranges, substream_seed(seed, "flows")
    )
    return Scenario(
        schema_version=SCHEMA_VERSION,
        seed=seed,
        created=created,
        topology=topology,
        link_attrs=link_attrs,
        link_ranges=link_ranges,
        flow_ranges=flow_ranges,
        flows=tuple(flows),
    )
