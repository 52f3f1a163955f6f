"""Load and independently re-validate scenario JSON (schema 1.0).

This adapter runs with emulator privileges, so it trusts nothing: every
invariant is re-checked here against the raw document rather than
imported from the producing tool.  The checks mirror the schema: exact
key sets, class-specific edge budgets, simple connected topology, full
link-attribute coverage, and flows with distinct in-range endpoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ScenarioFormatError, ScenarioInvalidError

SCHEMA_VERSION = "1.0"

_TOP_KEYS = {
    "schema_version",
    "seed",
    "created",
    "class",
    "n",
    "edges",
    "link_attrs",
    "ranges",
    "flows",
}
_RANGE_KEYS = {
    "bandwidth_min",
    "bandwidth_max",
    "delay_min",
    "delay_max",
    "jitter_min",
    "jitter_max",
    "plr_min",
    "plr_max",
}
_LINK_KEYS = {"u", "v", "bandwidth", "delay", "jitter", "plr"}
_FLOW_KEYS = {"id", "src", "dst", "bandwidth", "delay", "jitter", "plr"}


@dataclass(frozen=True)
class LinkShaping:
    bandwidth: int  # Mbit/s
    delay: float  # ms
    jitter: float  # ms
    plr: float  # loss fraction in [0, 1]


@dataclass(frozen=True)
class FlowDemand:
    id: int
    src: int
    dst: int
    bandwidth: int
    delay: float
    jitter: float
    plr: float


@dataclass(frozen=True)
class LoadedScenario:
    seed: int
    created: str
    topology_class: str
    n: int
    edges: tuple[tuple[int, int], ...]
    links: dict[tuple[int, int], LinkShaping]
    flows: tuple[FlowDemand, ...]


def expected_edge_count(topology_class: str, n: int) -> int:
    """Class edge budget, recomputed locally on purpose."""
    pairs = n * (n - 1) // 2
    if topology_class == "sparse":
        return n
    if topology_class == "partial-mesh":
        return (pairs + n) // 2
    if topology_class == "full-mesh":
        return pairs
    raise ScenarioInvalidError(f"unknown topology class {topology_class!r}")


def load_scenario(path: str) -> LoadedScenario:
    """Read, parse and validate the scenario file at ``path``."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_scenario(text)


def parse_scenario(text: str) -> LoadedScenario:
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc

    if not isinstance(raw, dict):
        raise ScenarioInvalidError("top-level value must be an object")
    missing = sorted(_TOP_KEYS - raw.keys())
    if missing:
        raise ScenarioInvalidError(f"missing field: {missing[0]}")
    unknown = sorted(raw.keys() - _TOP_KEYS)
    if unknown:
        raise ScenarioInvalidError(f"unknown field: {unknown[0]}")
    if raw["schema_version"] != SCHEMA_VERSION:
        raise ScenarioInvalidError(
            f"unsupported schema_version {raw['schema_version']!r}"
        )

    seed = raw["seed"]
    if not _is_int(seed) or not 0 <= seed < 2**64:
        raise ScenarioInvalidError("seed must be an unsigned 64-bit integer")
    created = raw["created"]
    if not isinstance(created, str):
        raise ScenarioInvalidError("created must be a string")
    topology_class = raw["class"]
    if topology_class not in ("sparse", "partial-mesh", "full-mesh"):
        raise ScenarioInvalidError(f"unknown topology class {topology_class!r}")
    n = raw["n"]
    if not _is_int(n) or n < 1:
        raise ScenarioInvalidError("n must be a positive integer")

    edges = _check_edges(raw["edges"], topology_class, n)
    link_ranges, flow_ranges = _check_ranges(raw["ranges"])
    links = _check_links(raw["link_attrs"], edges, link_ranges)
    flows = _check_flows(raw["flows"], n, flow_ranges)

    return LoadedScenario(
        seed=seed,
        created=created,
        topology_class=topology_class,
        n=n,
        edges=edges,
        links=links,
        flows=flows,
    )


def _reject_constant(name: str):
    raise ScenarioInvalidError(f"non-finite number {name} is not allowed")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_real(x) -> bool:
    return _is_int(x) or isinstance(x, float)


def _check_edges(raw, topology_class: str, n: int) -> tuple[tuple[int, int], ...]:
    if not isinstance(raw, list):
        raise ScenarioInvalidError("edges must be a list")
    edges = []
    seen = set()
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(_is_int(x) for x in entry)
        ):
            raise ScenarioInvalidError(f"bad edge entry {entry!r}")
        u, v = min(entry), max(entry)
        if u == v:
            raise ScenarioInvalidError(f"self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ScenarioInvalidError(f"edge ({u}, {v}) outside [0, {n})")
        if (u, v) in seen:
            raise ScenarioInvalidError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))

    expected = expected_edge_count(topology_class, n)
    if len(edges) != expected:
        raise ScenarioInvalidError(
            f"edge count {len(edges)} does not match the {topology_class}"
            f" requirement of {expected} for n={n}"
        )

    # connectivity sweep over the validated edge list
    neighbors = {i: [] for i in range(n)}
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    reached = {0}
    stack = [0]
    while stack:
        for nbr in neighbors[stack.pop()]:
            if nbr not in reached:
                reached.add(nbr)
                stack.append(nbr)
    if len(reached) != n:
        raise ScenarioInvalidError("graph is disconnected")

    return tuple(sorted(edges))


def _check_ranges(raw):
    if not isinstance(raw, dict) or set(raw.keys()) != {"link", "flow"}:
        raise ScenarioInvalidError("ranges must hold 'link' and 'flow' blocks")
    out = []
    for label in ("link", "flow"):
        block = raw[label]
        if not isinstance(block, dict) or set(block.keys()) != _RANGE_KEYS:
            raise ScenarioInvalidError(f"ranges.{label} has the wrong shape")
        for key in ("bandwidth_min", "bandwidth_max"):
            if not _is_int(block[key]):
                raise ScenarioInvalidError(f"ranges.{label}.{key} must be an integer")
        for key in _RANGE_KEYS:
            if not _is_real(block[key]):
                raise ScenarioInvalidError(f"ranges.{label}.{key} must be a number")
        for metric in ("bandwidth", "delay", "jitter", "plr"):
            if block[f"{metric}_min"] > block[f"{metric}_max"]:
                raise ScenarioInvalidError(f"ranges.{label}.{metric} is reversed")
        if block["bandwidth_min"] < 1:
            raise ScenarioInvalidError(f"ranges.{label}.bandwidth_min must be >= 1")
        for key in ("plr_min", "plr_max"):
            if not 0.0 <= block[key] <= 1.0:
                raise ScenarioInvalidError(f"ranges.{label}.{key} outside [0, 1]")
        out.append(block)
    return out[0], out[1]


def _check_qos(record, where: str, ranges) -> dict:
    if not _is_int(record["bandwidth"]):
        raise ScenarioInvalidError(f"{where}: bandwidth must be an integer")
    for key in ("delay", "jitter", "plr"):
        if not _is_real(record[key]):
            raise ScenarioInvalidError(f"{where}: {key} must be a number")
    values = {
        "bandwidth": record["bandwidth"],
        "delay": float(record["delay"]),
        "jitter": float(record["jitter"]),
        "plr": float(record["plr"]),
    }
    if not 0.0 <= values["plr"] <= 1.0:
        raise ScenarioInvalidError(f"{where}: plr outside [0, 1]")
    for key, value in values.items():
        if not ranges[f"{key}_min"] <= value <= ranges[f"{key}_max"]:
            raise ScenarioInvalidError(
                f"{where}: {key} {value} outside declared range"
            )
    return values


def _check_links(raw, edges, ranges) -> dict[tuple[int, int], LinkShaping]:
    if not isinstance(raw, list):
        raise ScenarioInvalidError("link_attrs must be a list")
    edge_set = set(edges)
    links: dict[tuple[int, int], LinkShaping] = {}
    for record in raw:
        if not isinstance(record, dict) or set(record.keys()) != _LINK_KEYS:
            raise ScenarioInvalidError("link_attrs record has the wrong shape")
        if not (_is_int(record["u"]) and _is_int(record["v"])):
            raise ScenarioInvalidError("link_attrs u and v must be integers")
        edge = (min(record["u"], record["v"]), max(record["u"], record["v"]))
        if edge not in edge_set:
            raise ScenarioInvalidError(
                f"link attributes for unknown edge ({edge[0]}, {edge[1]})"
            )
        if edge in links:
            raise ScenarioInvalidError(
                f"duplicate link attributes for edge ({edge[0]}, {edge[1]})"
            )
        links[edge] = LinkShaping(
            **_check_qos(record, f"edge ({edge[0]}, {edge[1]})", ranges)
        )
    for edge in edges:
        if edge not in links:
            raise ScenarioInvalidError(
                f"link attributes missing for edge ({edge[0]}, {edge[1]})"
            )
    return links


def _check_flows(raw, n: int, ranges) -> tuple[FlowDemand, ...]:
    if not isinstance(raw, list):
        raise ScenarioInvalidError("flows must be a list")
    flows = []
    seen = set()
    for record in raw:
        if not isinstance(record, dict) or set(record.keys()) != _FLOW_KEYS:
            raise ScenarioInvalidError("flow record has the wrong shape")
        if not all(_is_int(record[k]) for k in ("id", "src", "dst")):
            raise ScenarioInvalidError("flow id, src and dst must be integers")
        fid, src, dst = record["id"], record["src"], record["dst"]
        if fid < 0 or fid in seen:
            raise ScenarioInvalidError(f"bad or duplicate flow id {fid}")
        seen.add(fid)
        if src == dst:
            raise ScenarioInvalidError(f"flow {fid}: source equals destination")
        for endpoint in (src, dst):
            if not 0 <= endpoint < n:
                raise ScenarioInvalidError(
                    f"flow {fid}: endpoint {endpoint} outside [0, {n})"
                )
        values = _check_qos(record, f"flow {fid}", ranges)
        flows.append(FlowDemand(id=fid, src=src, dst=dst, **values))
    return tuple(flows)
