"""Seed-driven generation and analysis of SDN evaluation scenarios.

Builds the three standard evaluation topology classes (sparse,
partial-mesh, full-mesh), designates per-link QoS attributes and flow
requirements within expert-set bounds, quantifies simple-path
multiplicity between node pairs, and serializes everything as
reproducible datasets and emulator deployment scripts.
"""

from .attributes import (
    DEFAULT_LINK_RANGES,
    AttributeRanges,
    LinkAttributes,
    assign_link_attributes,
)
from .generate import GeneratorConfig, generate_topology, random_spanning_tree
from .paths import (
    ENUMERATION_GUARD,
    PathCountMatrix,
    PathStats,
    count_simple_paths,
    path_count_matrix,
    summarize,
)
from .scenario import DEFAULT_CREATED, SCHEMA_VERSION, Scenario, build_scenario
from .dataset import (
    EMULATOR_MAX_NODES,
    export_emulator_script,
    export_flat_dataset,
    export_scenario_json,
    parse_flat_dataset,
    parse_scenario_json,
)
from .topology import (
    MIN_NODES,
    Topology,
    TopologyClass,
    edge_count,
    validate_topology,
)
from .traffic import (
    DEFAULT_FLOW_RANGES,
    Flow,
    FlowRanges,
    FlowRequirements,
    generate_flows,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeRanges",
    "DEFAULT_CREATED",
    "DEFAULT_FLOW_RANGES",
    "DEFAULT_LINK_RANGES",
    "EMULATOR_MAX_NODES",
    "ENUMERATION_GUARD",
    "Flow",
    "FlowRanges",
    "FlowRequirements",
    "GeneratorConfig",
    "LinkAttributes",
    "MIN_NODES",
    "PathCountMatrix",
    "PathStats",
    "SCHEMA_VERSION",
    "Scenario",
    "Topology",
    "TopologyClass",
    "assign_link_attributes",
    "build_scenario",
    "count_simple_paths",
    "edge_count",
    "export_emulator_script",
    "export_flat_dataset",
    "export_scenario_json",
    "generate_flows",
    "generate_topology",
    "parse_flat_dataset",
    "parse_scenario_json",
    "path_count_matrix",
    "random_spanning_tree",
    "summarize",
    "validate_topology",
]
