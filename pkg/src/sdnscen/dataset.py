"""Scenario serialization: canonical JSON, flat R/F dataset, emulator script.

JSON is the complete interchange format (schema_version "1.0").  Exports
are canonical bytes: object keys sorted, edges sorted as (min, max)
pairs, flows ordered by id, reals rendered with Python's shortest
round-trip float repr.  Parsing re-checks every scenario invariant and
reports the offending field, edge or flow.

The flat dataset keeps one record per line: link records prefixed 'R'
(``R,u,v,bandwidth,delay,jitter,plr``) followed by flow records prefixed
'F' (``F,id,src,dst,bandwidth,delay,jitter,plr``).  It carries exactly
the link and flow values; class and seed live only in the JSON document.

The emulator script is a self-contained Mininet program: one switch per
node, one host per switch (10.0.0.<i+1>/24), and the scenario's
bandwidth/delay/jitter shaping per link with loss converted from a
fraction to percent.
"""

from __future__ import annotations

import json
from decimal import Decimal

from .attributes import AttributeRanges, LinkAttributes
from .errors import EmulatorSizeError, ParseError, ValidationError, VersionError
from .scenario import SCHEMA_VERSION, Scenario
from .topology import Topology, TopologyClass, validate_topology
from .traffic import Flow, FlowRanges, FlowRequirements

#: Single-machine emulation bound on scenario size.
EMULATOR_MAX_NODES = 64

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


def export_scenario_json(s: Scenario) -> str:
    """Render ``s`` as the canonical JSON document (deterministic bytes)."""
    doc = {
        "schema_version": s.schema_version,
        "seed": s.seed,
        "created": s.created,
        "class": s.topology.kind.value,
        "n": s.topology.n,
        "edges": [[u, v] for u, v in s.topology.edges],
        "link_attrs": [
            {
                "u": u,
                "v": v,
                "bandwidth": int(a.bandwidth),
                "delay": float(a.delay),
                "jitter": float(a.jitter),
                "plr": float(a.plr),
            }
            for (u, v), a in sorted(s.link_attrs.items())
        ],
        "ranges": {
            "link": _ranges_doc(s.link_ranges),
            "flow": _ranges_doc(s.flow_ranges),
        },
        "flows": [
            {
                "id": f.id,
                "src": f.src,
                "dst": f.dst,
                "bandwidth": int(f.req.bandwidth),
                "delay": float(f.req.delay),
                "jitter": float(f.req.jitter),
                "plr": float(f.req.plr),
            }
            for f in sorted(s.flows, key=lambda f: f.id)
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_scenario_json(doc: str) -> Scenario:
    """Parse and fully validate a scenario document."""
    try:
        raw = json.loads(doc, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc

    if not isinstance(raw, dict):
        raise ValidationError("top-level value must be an object")
    for key in sorted(_TOP_KEYS - raw.keys()):
        raise ValidationError(f"missing field: {key}")
    for key in sorted(raw.keys() - _TOP_KEYS):
        raise ValidationError(f"unknown field: {key}")

    version = raw["schema_version"]
    if not isinstance(version, str):
        raise ValidationError("schema_version must be a string")
    if version != SCHEMA_VERSION:
        raise VersionError(f"unsupported schema_version {version!r}")

    seed = raw["seed"]
    if not _is_int(seed) or not 0 <= seed < 2**64:
        raise ValidationError("seed must be an unsigned 64-bit integer")
    created = raw["created"]
    if not isinstance(created, str):
        raise ValidationError("created must be an ISO-8601 string")

    try:
        kind = TopologyClass(raw["class"])
    except ValueError:
        raise ValidationError(f"class must be one of "
                              f"{[c.value for c in TopologyClass]}, got {raw['class']!r}")
    n = raw["n"]
    if not _is_int(n) or n < 1:
        raise ValidationError("n must be a positive integer")

    edges = _parse_edges(raw["edges"], n)
    topology = Topology(n=n, edges=tuple(edges), kind=kind)
    problems = validate_topology(topology)
    if problems:
        raise ValidationError("invalid topology: " + "; ".join(problems))

    link_ranges, flow_ranges = _parse_ranges(raw["ranges"])
    link_attrs = _parse_link_attrs(raw["link_attrs"], topology, link_ranges)
    flows = _parse_flows(raw["flows"], n, flow_ranges)

    return Scenario(
        schema_version=version,
        seed=seed,
        created=created,
        topology=topology,
        link_attrs=link_attrs,
        link_ranges=link_ranges,
        flow_ranges=flow_ranges,
        flows=tuple(flows),
    )


def export_flat_dataset(s: Scenario) -> str:
    """One record per line: all R link lines, then all F flow lines."""
    lines = []
    for (u, v), a in sorted(s.link_attrs.items()):
        lines.append(
            f"R,{u},{v},{a.bandwidth},{_real(a.delay)},{_real(a.jitter)},{_real(a.plr)}"
        )
    for f in sorted(s.flows, key=lambda f: f.id):
        req = f.req
        lines.append(
            f"F,{f.id},{f.src},{f.dst},{req.bandwidth},"
            f"{_real(req.delay)},{_real(req.jitter)},{_real(req.plr)}"
        )
    return "\n".join(lines) + "\n"


def parse_flat_dataset(
    text: str,
) -> tuple[dict[tuple[int, int], LinkAttributes], list[Flow]]:
    """Recover the link and flow values from a flat dataset."""
    links: dict[tuple[int, int], LinkAttributes] = {}
    flows: list[Flow] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        fields = line.split(",")
        if fields[0] == "R":
            if flows:
                raise ValidationError(f"line {lineno}: link record after flow records")
            if len(fields) != 7:
                raise ValidationError(f"line {lineno}: R record needs 7 fields")
            u, v = int(fields[1]), int(fields[2])
            links[(u, v)] = LinkAttributes(
                bandwidth=int(fields[3]),
                delay=float(fields[4]),
                jitter=float(fields[5]),
                plr=float(fields[6]),
            )
        elif fields[0] == "F":
            if len(fields) != 8:
                raise ValidationError(f"line {lineno}: F record needs 8 fields")
            flows.append(
                Flow(
                    id=int(fields[1]),
                    src=int(fields[2]),
                    dst=int(fields[3]),
                    req=FlowRequirements(
                        bandwidth=int(fields[4]),
                        delay=float(fields[5]),
                        jitter=float(fields[6]),
                        plr=float(fields[7]),
                    ),
                )
            )
        else:
            raise ValidationError(f"line {lineno}: unknown record prefix {fields[0]!r}")
    return links, flows


def export_emulator_script(s: Scenario) -> str:
    """Self-contained Mininet deployment script for the scenario."""
    n = s.topology.n
    if n > EMULATOR_MAX_NODES:
        raise EmulatorSizeError(
            f"scenario has {n} nodes; emulator export is capped at {EMULATOR_MAX_NODES}"
        )
    header = (
        f"class={s.topology.kind.value} n={n} seed={s.seed}"
        f" edges={len(s.topology.edges)} flows={len(s.flows)} created={s.created}"
    )
    lines = [
        "#!/usr/bin/env python",
        '"""Mininet deployment for a generated evaluation scenario.',
        "",
        header,
        "",
        "One switch and one attached host per node; inter-switch links carry",
        "the scenario's bandwidth (Mbit/s), delay/jitter (ms) and loss (%).",
        '"""',
        "",
        "from mininet.cli import CLI",
        "from mininet.link import TCLink",
        "from mininet.log import setLogLevel",
        "from mininet.net import Mininet",
        "from mininet.node import OVSKernelSwitch",
        "",
        "",
        "def build_net():",
        "    net = Mininet(switch=OVSKernelSwitch, link=TCLink, autoSetMacs=True)",
        "    net.addController('c0')",
    ]
    for i in range(n):
        lines.append(f"    s{i} = net.addSwitch('s{i}')")
    for i in range(n):
        lines.append(f"    h{i} = net.addHost('h{i}', ip='10.0.0.{i + 1}/24')")
    for i in range(n):
        lines.append(f"    net.addLink(h{i}, s{i})")
    for (u, v), a in sorted(s.link_attrs.items()):
        lines.append(
            f"    net.addLink(s{u}, s{v}, bw={a.bandwidth},"
            f" delay='{_real(a.delay)}ms', jitter='{_real(a.jitter)}ms',"
            f" loss={_real(plr_to_percent(a.plr))})"
        )
    lines += [
        "    return net",
        "",
        "",
        "if __name__ == '__main__':",
        "    setLogLevel('info')",
        "    net = build_net()",
        "    net.start()",
        "    CLI(net)",
        "    net.stop()",
        "",
    ]
    return "\n".join(lines)


def plr_to_percent(plr: float) -> float:
    """Loss fraction to percent via an exact decimal shift (0.05 -> 5.0)."""
    return float(Decimal(repr(float(plr))) * 100)


def _real(x: float) -> str:
    return repr(float(x))


def _ranges_doc(r: AttributeRanges) -> dict:
    return {
        "bandwidth_min": int(r.bandwidth_min),
        "bandwidth_max": int(r.bandwidth_max),
        "delay_min": float(r.delay_min),
        "delay_max": float(r.delay_max),
        "jitter_min": float(r.jitter_min),
        "jitter_max": float(r.jitter_max),
        "plr_min": float(r.plr_min),
        "plr_max": float(r.plr_max),
    }


def _reject_constant(name: str):
    raise ValidationError(f"non-finite number {name} is not allowed")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_real(x) -> bool:
    return _is_int(x) or isinstance(x, float)


def _parse_edges(raw, n: int) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise ValidationError("edges must be a list of [u, v] pairs")
    edges = []
    for entry in raw:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(_is_int(x) for x in entry)
        ):
            raise ValidationError(f"edges entries must be [u, v] integer pairs, got {entry!r}")
        edges.append((entry[0], entry[1]))
    return edges


def _parse_ranges(raw) -> tuple[AttributeRanges, FlowRanges]:
    if not isinstance(raw, dict) or set(raw.keys()) != {"link", "flow"}:
        raise ValidationError("ranges must be an object with 'link' and 'flow' blocks")
    link = _parse_range_block(raw["link"], "link", AttributeRanges)
    flow = _parse_range_block(raw["flow"], "flow", FlowRanges)
    return link, flow


def _parse_range_block(raw, label: str, cls):
    if not isinstance(raw, dict):
        raise ValidationError(f"ranges.{label} must be an object")
    for key in sorted(_RANGE_KEYS - raw.keys()):
        raise ValidationError(f"missing field: ranges.{label}.{key}")
    for key in sorted(raw.keys() - _RANGE_KEYS):
        raise ValidationError(f"unknown field: ranges.{label}.{key}")
    for key in ("bandwidth_min", "bandwidth_max"):
        if not _is_int(raw[key]):
            raise ValidationError(f"ranges.{label}.{key} must be an integer")
    for key in _RANGE_KEYS - {"bandwidth_min", "bandwidth_max"}:
        if not _is_real(raw[key]):
            raise ValidationError(f"ranges.{label}.{key} must be a number")
    ranges = cls(
        bandwidth_min=raw["bandwidth_min"],
        bandwidth_max=raw["bandwidth_max"],
        delay_min=float(raw["delay_min"]),
        delay_max=float(raw["delay_max"]),
        jitter_min=float(raw["jitter_min"]),
        jitter_max=float(raw["jitter_max"]),
        plr_min=float(raw["plr_min"]),
        plr_max=float(raw["plr_max"]),
    )
    problems = ranges.violations()
    if problems:
        raise ValidationError(f"ranges.{label}: {problems[0]}")
    return ranges


def _parse_link_attrs(
    raw, topology: Topology, ranges: AttributeRanges
) -> dict[tuple[int, int], LinkAttributes]:
    if not isinstance(raw, list):
        raise ValidationError("link_attrs must be a list of per-edge records")
    edge_set = set(topology.edges)
    attrs: dict[tuple[int, int], LinkAttributes] = {}
    for record in raw:
        if not isinstance(record, dict):
            raise ValidationError("link_attrs entries must be objects")
        for key in sorted(_LINK_KEYS - record.keys()):
            raise ValidationError(f"link_attrs record missing field: {key}")
        for key in sorted(record.keys() - _LINK_KEYS):
            raise ValidationError(f"link_attrs record has unknown field: {key}")
        if not (_is_int(record["u"]) and _is_int(record["v"])):
            raise ValidationError("link_attrs u and v must be integers")
        edge = (min(record["u"], record["v"]), max(record["u"], record["v"]))
        if edge not in edge_set:
            raise ValidationError(
                f"link attributes given for unknown edge ({edge[0]}, {edge[1]})"
            )
        if edge in attrs:
            raise ValidationError(
                f"duplicate link attributes for edge ({edge[0]}, {edge[1]})"
            )
        attrs[edge] = _parse_qos_values(
            record, f"link attributes for edge ({edge[0]}, {edge[1]})", ranges, LinkAttributes
        )
    for u, v in topology.edges:
        if (u, v) not in attrs:
            raise ValidationError(f"link attributes missing for edge ({u}, {v})")
    return attrs


def _parse_flows(raw, n: int, ranges: FlowRanges) -> list[Flow]:
    if not isinstance(raw, list):
        raise ValidationError("flows must be a list of flow records")
    flows = []
    seen_ids = set()
    for record in raw:
        if not isinstance(record, dict):
            raise ValidationError("flows entries must be objects")
        for key in sorted(_FLOW_KEYS - record.keys()):
            raise ValidationError(f"flow record missing field: {key}")
        for key in sorted(record.keys() - _FLOW_KEYS):
            raise ValidationError(f"flow record has unknown field: {key}")
        if not all(_is_int(record[k]) for k in ("id", "src", "dst")):
            raise ValidationError("flow id, src and dst must be integers")
        fid, src, dst = record["id"], record["src"], record["dst"]
        if fid < 0:
            raise ValidationError(f"flow id must be non-negative, got {fid}")
        if fid in seen_ids:
            raise ValidationError(f"duplicate flow id {fid}")
        seen_ids.add(fid)
        if src == dst:
            raise ValidationError(f"flow {fid}: source equals destination ({src})")
        for endpoint in (src, dst):
            if not 0 <= endpoint < n:
                raise ValidationError(
                    f"flow {fid}: endpoint {endpoint} outside [0, {n})"
                )
        req = _parse_qos_values(record, f"flow {fid}", ranges, FlowRequirements)
        flows.append(Flow(id=fid, src=src, dst=dst, req=req))
    return flows


def _parse_qos_values(record, where: str, ranges: AttributeRanges, cls):
    if not _is_int(record["bandwidth"]):
        raise ValidationError(f"{where}: bandwidth must be an integer")
    for key in ("delay", "jitter", "plr"):
        if not _is_real(record[key]):
            raise ValidationError(f"{where}: {key} must be a number")
    values = {
        "bandwidth": record["bandwidth"],
        "delay": float(record["delay"]),
        "jitter": float(record["jitter"]),
        "plr": float(record["plr"]),
    }
    if not 0.0 <= values["plr"] <= 1.0:
        raise ValidationError(f"{where}: plr must lie in [0, 1], got {values['plr']}")
    for key in ("bandwidth", "delay", "jitter", "plr"):
        lo = getattr(ranges, f"{key}_min")
        hi = getattr(ranges, f"{key}_max")
        if not lo <= values[key] <= hi:
            raise ValidationError(
                f"{where}: {key} {values[key]} outside the declared range [{lo}, {hi}]"
            )
    return cls(**values)
