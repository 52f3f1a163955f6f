"""Seeded construction of random topologies with guaranteed connectivity.

Sparse and partial-mesh graphs start from a uniformly random spanning
tree (Aldous-Broder random walk on the complete graph) and then add
chords sampled uniformly without replacement from the remaining node
pairs until the class edge budget is met.  Tree-first construction makes
connectivity structural rather than a rejection loop, and index sampling
keeps the chord step O(n^2) even at full density.  Full-mesh topologies
are deterministic: every unordered pair is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleError, InvalidSizeError
from .rng import Stream
from .topology import MIN_NODES, Topology, TopologyClass, edge_count


@dataclass(frozen=True)
class GeneratorConfig:
    kind: TopologyClass
    n: int
    seed: int


def random_spanning_tree(n: int, stream: Stream) -> list[tuple[int, int]]:
    """Uniformly random spanning tree on nodes 0..n-1.

    Aldous-Broder: walk the complete graph from a random start and keep
    the entry edge of every first visit.  Each labeled tree is produced
    with equal probability; the walk is deterministic given the stream.
    """
    if n <= 1:
        return []
    start = stream.randint(0, n - 1)
    visited = {start}
    current = start
    edges: list[tuple[int, int]] = []
    while len(visited) < n:
        nxt = stream.randint(0, n - 2)
        if nxt >= current:
            nxt += 1
        if nxt not in visited:
            visited.add(nxt)
            edges.append((min(current, nxt), max(current, nxt)))
        current = nxt
    return edges


def generate_topology(cfg: GeneratorConfig) -> Topology:
    """Build a random topology of the configured class, size and seed.

    The result always passes validation: connected, simple, and exactly
    edge_count(kind, n) edges.  Identical configs reproduce identical
    edge sets.
    """
    minimum = MIN_NODES[cfg.kind]
    if cfg.n < minimum:
        raise InvalidSizeError(
            f"{cfg.kind.value} topology requires at least {minimum} nodes, got {cfg.n}"
        )
    target = edge_count(cfg.kind, cfg.n)
    possible = cfg.n * (cfg.n - 1) // 2
    if target > possible:
        raise InfeasibleError(
            f"{target} edges requested but only {possible} node pairs exist for n={cfg.n}"
        )

    if cfg.kind is TopologyClass.FULL_MESH:
        edges = [(u, v) for u in range(cfg.n) for v in range(u + 1, cfg.n)]
        return Topology(n=cfg.n, edges=tuple(edges), kind=cfg.kind)

    stream = Stream(cfg.seed)
    tree = random_spanning_tree(cfg.n, stream)
    in_tree = set(tree)
    candidates = [
        (u, v)
        for u in range(cfg.n)
        for v in range(u + 1, cfg.n)
        if (u, v) not in in_tree
    ]
    chords = stream.sample(candidates, target - len(tree))
    return Topology(n=cfg.n, edges=tuple(tree + chords), kind=cfg.kind)
