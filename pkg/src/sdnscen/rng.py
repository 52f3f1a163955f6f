"""Deterministic random streams for reproducible scenario generation.

All randomness in this package flows through SplitMix64, a fixed 64-bit
generator implemented here so that a given seed yields bit-identical
draws on every platform and Python version (no dependence on library
PRNG internals).

Stream splitting
----------------
Independent concerns never share a stream.  A substream seed is derived
from a root seed and a text label via SHA-256:

    substream_seed(seed, label) = first 8 bytes of sha256("<seed>:<label>")

Scenario construction uses the labels ``topology``, ``links`` and
``flows``; flow generation further derives one stream per flow
(``flow/<i>``).  Consequently changing the flow count of a scenario can
never perturb its topology or link attributes, and flows 0..k-1 are
stable across regenerations with a larger count.

Interval conventions
--------------------
``randint`` draws from the inclusive integer interval [lo, hi] without
modulo bias.  ``uniform`` draws from the half-open real interval
[lo, hi), except that a degenerate range (lo = hi) yields exactly lo.
"""

from __future__ import annotations

import hashlib
import math

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def substream_seed(seed: int, label: str) -> int:
    """Derive the 64-bit seed of the named substream of ``seed``."""
    digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


class Stream:
    """A SplitMix64 stream of random draws."""

    def __init__(self, seed: int):
        self._origin_seed = seed & _MASK64
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        """Return the next raw 64-bit output."""
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def substream(self, label: str) -> "Stream":
        """Return an independent stream derived from this stream's origin.

        Splitting depends only on the constructing seed, not on how many
        draws have been taken, so substreams are position-independent.
        """
        return Stream(substream_seed(self._origin_seed, label))

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 random mantissa bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the inclusive interval [lo, hi], unbiased."""
        if lo > hi:
            raise ValueError(f"randint bounds reversed: [{lo}, {hi}]")
        span = hi - lo + 1
        # rejection sampling on the largest multiple of span below 2^64
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + (x % span)

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform real in [lo, hi); exactly lo when the range is degenerate."""
        if lo > hi:
            raise ValueError(f"uniform bounds reversed: [{lo}, {hi}]")
        if lo == hi:
            return lo
        x = lo + self.random() * (hi - lo)
        if x >= hi:  # guard against upward FP rounding at the top end
            x = math.nextafter(hi, lo)
        return x

    def sample(self, items: list, k: int) -> list:
        """k distinct items drawn uniformly without replacement.

        Partial Fisher-Yates over a copy; the input list is not mutated.
        """
        if k > len(items):
            raise ValueError(f"cannot sample {k} of {len(items)} items")
        arr = list(items)
        for i in range(k):
            j = self.randint(i, len(arr) - 1)
            arr[i], arr[j] = arr[j], arr[i]
        return arr[:k]
