"""Per-link QoS attribute assignment within expert-set bounds.

Every link receives one designated value per metric, drawn uniformly
from the configured range: bandwidth from the inclusive integer interval
[min, max], and delay/jitter/loss-rate from the half-open real interval
[min, max) (exactly min when the range is degenerate).  Links are
undirected, so one attribute set serves both directions.

Units: bandwidth Mbit/s, delay and jitter ms, packet loss rate a
fraction in [0, 1] (converted to percent only at emulator export).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeError, StructuralError
from .rng import Stream
from .topology import Topology


@dataclass(frozen=True)
class AttributeRanges:
    """Expert-set [min, max] bounds for the four link metrics."""

    bandwidth_min: int
    bandwidth_max: int
    delay_min: float
    delay_max: float
    jitter_min: float
    jitter_max: float
    plr_min: float
    plr_max: float

    def violations(self) -> list[str]:
        out = []
        if self.bandwidth_min < 1:
            out.append(f"bandwidth minimum must be >= 1, got {self.bandwidth_min}")
        for metric in ("bandwidth", "delay", "jitter", "plr"):
            lo = getattr(self, f"{metric}_min")
            hi = getattr(self, f"{metric}_max")
            if lo > hi:
                out.append(f"{metric} range is reversed: [{lo}, {hi}]")
        for bound in ("plr_min", "plr_max"):
            value = getattr(self, bound)
            if not 0.0 <= value <= 1.0:
                out.append(f"{bound} must lie in [0, 1], got {value}")
        return out


@dataclass(frozen=True)
class LinkAttributes:
    """Designated values for one link."""

    bandwidth: int
    delay: float
    jitter: float
    plr: float


#: Ranges applied when the caller sets none: bandwidth 10-100 Mbit/s,
#: delay 1-10 ms, jitter 0-1 ms, loss rate 0-5%.
DEFAULT_LINK_RANGES = AttributeRanges(
    bandwidth_min=10,
    bandwidth_max=100,
    delay_min=1.0,
    delay_max=10.0,
    jitter_min=0.0,
    jitter_max=1.0,
    plr_min=0.0,
    plr_max=0.05,
)


def check_ranges(ranges: AttributeRanges) -> None:
    """Raise RangeError naming the first malformed metric bound."""
    problems = ranges.violations()
    if problems:
        raise RangeError(problems[0])


def assign_link_attributes(
    t: Topology, ranges: AttributeRanges, seed: int
) -> dict[tuple[int, int], LinkAttributes]:
    """Designate attribute values for every edge of ``t``.

    Draws are taken from a single stream in canonical edge order
    (bandwidth, delay, jitter, plr per edge), so the map is a pure
    function of (t, ranges, seed).
    """
    check_ranges(ranges)
    for u, v in t.edges:
        if not (0 <= u < t.n and 0 <= v < t.n):
            raise StructuralError(
                f"edge ({u}, {v}) references a node outside [0, {t.n})"
            )
    stream = Stream(seed)
    attrs: dict[tuple[int, int], LinkAttributes] = {}
    for edge in t.edges:
        attrs[edge] = LinkAttributes(
            bandwidth=stream.randint(ranges.bandwidth_min, ranges.bandwidth_max),
            delay=stream.uniform(ranges.delay_min, ranges.delay_max),
            jitter=stream.uniform(ranges.jitter_min, ranges.jitter_max),
            plr=stream.uniform(ranges.plr_min, ranges.plr_max),
        )
    return attrs
