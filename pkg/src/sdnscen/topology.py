"""Graph model and edge-count rules for the three evaluation topology classes.

A topology is an undirected simple graph tagged with the class that fixes
its edge budget as a function of the node count N:

    sparse        E = N                          (connected unicyclic)
    partial-mesh  E = floor((floor(N(N-1)/2) + N) / 2)
    full-mesh     E = N(N-1)/2                   (complete graph)

The partial-mesh division can be non-integral (e.g. N=5 gives 7.5); the
outer floor makes the budget reproducible.  All classes additionally
require connectivity, since path multiplicity between node pairs is the
metric these topologies exist to exercise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidSizeError


class TopologyClass(str, Enum):
    SPARSE = "sparse"
    PARTIAL_MESH = "partial-mesh"
    FULL_MESH = "full-mesh"


#: Smallest node count for which the class edge budget is realizable as a
#: connected simple graph (sparse needs a triangle to carry N edges).
MIN_NODES = {
    TopologyClass.SPARSE: 3,
    TopologyClass.PARTIAL_MESH: 3,
    TopologyClass.FULL_MESH: 2,
}


@dataclass(frozen=True)
class Topology:
    """Undirected simple graph with a class tag.

    Edges are normalized at construction: each pair is stored as
    (min, max) and the list is sorted lexicographically, so structurally
    equal topologies compare equal and serialize identically.  Duplicates
    and self-loops are preserved so that validation can report them.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    kind: TopologyClass

    def __post_init__(self):
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)

    def adjacency(self) -> list[list[int]]:
        """Sorted neighbor lists over nodes 0..n-1 (valid edges only)."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u != v and 0 <= u < self.n and 0 <= v < self.n:
                adj[u].append(v)
                adj[v].append(u)
        return [sorted(set(nbrs)) for nbrs in adj]


def edge_count(kind: TopologyClass, n: int) -> int:
    """Edge budget of a class at node count n.

    Raises InvalidSizeError when n is below the class minimum.
    """
    minimum = MIN_NODES[kind]
    if n < minimum:
        raise InvalidSizeError(
            f"{kind.value} topology requires at least {minimum} nodes, got {n}"
        )
    if kind is TopologyClass.SPARSE:
        return n
    if kind is TopologyClass.PARTIAL_MESH:
        return (n * (n - 1) // 2 + n) // 2
    return n * (n - 1) // 2


def validate_topology(t: Topology) -> list[str]:
    """Check every Topology invariant; return one message per violation.

    Total over well-formed inputs: violations are reported, never raised.
    An empty list means the topology satisfies its class contract.
    """
    violations: list[str] = []

    if t.n < 1:
        violations.append(f"node count must be positive, got {t.n}")

    for u, v in t.edges:
        if u == v:
            violations.append(f"self-loop at node {u}")
    for u, v in t.edges:
        if not (0 <= u < t.n and 0 <= v < t.n):
            violations.append(f"edge ({u}, {v}) references a node outside [0, {t.n})")

    seen: set[tuple[int, int]] = set()
    for e in t.edges:
        if e in seen:
            violations.append(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)

    try:
        expected = edge_count(t.kind, t.n)
    except InvalidSizeError as exc:
        violations.append(str(exc))
    else:
        if len(t.edges) != expected:
            violations.append(
                f"edge count {len(t.edges)} does not match the"
                f" {t.kind.value} requirement of {expected} for n={t.n}"
            )

    if t.n >= 1 and not _is_connected(t):
        violations.append("graph is disconnected")

    return violations


def _is_connected(t: Topology) -> bool:
    adj = t.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        node = stack.pop()
        for nbr in adj[node]:
            if nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    return len(seen) == t.n
