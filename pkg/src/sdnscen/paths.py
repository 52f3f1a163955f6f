"""Exact simple-path counting between node pairs.

The number of simple paths (no repeated vertices) between every couple
of nodes is the behavioral quantity the three topology classes are
designed to separate.  Counting is exact, by depth-first backtracking
with an on-path membership mask; paths are counted, never materialized.

Enumeration is exponential in the worst case, so uncapped counting is
refused for graphs with more than ENUMERATION_GUARD nodes unless the
caller supplies a length cap (max path length in edges) or passes
``force=True``.  When a cap is given, the ``capped`` flag of the matrix
reports whether it was actually binding: true iff some pair has a simple
path longer than the cap, i.e. iff lifting the cap could change a count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GuardError, InvalidPairError
from .topology import Topology

#: Largest node count for which uncapped enumeration is accepted.
ENUMERATION_GUARD = 14


@dataclass(frozen=True)
class PathCountMatrix:
    """Symmetric per-pair simple-path counts with a zero diagonal."""

    n: int
    counts: tuple[tuple[int, ...], ...]
    capped: bool


@dataclass(frozen=True)
class PathStats:
    """Summary of the off-diagonal entries of a PathCountMatrix."""

    min_pairs: int
    max_pairs: int
    mean_pairs: float


def count_simple_paths(
    t: Topology,
    u: int,
    v: int,
    max_length: int | None = None,
    *,
    force: bool = False,
) -> int:
    """Exact number of simple paths between u and v.

    With ``max_length`` set, only paths of at most that many edges are
    counted.  Symmetric in (u, v).
    """
    _check_pair(t, u, v)
    _check_guard(t, max_length, force)
    count, _ = _count_pair(t.adjacency(), u, v, max_length)
    return count


def path_count_matrix(
    t: Topology, max_length: int | None = None, *, force: bool = False
) -> PathCountMatrix:
    """Simple-path counts for every node pair of ``t``."""
    _check_guard(t, max_length, force)
    adj = t.adjacency()
    counts = [[0] * t.n for _ in range(t.n)]
    capped = False
    for u in range(t.n):
        for v in range(u + 1, t.n):
            c, hit = _count_pair(adj, u, v, max_length)
            counts[u][v] = c
            counts[v][u] = c
            capped = capped or hit
    return PathCountMatrix(
        n=t.n, counts=tuple(tuple(row) for row in counts), capped=capped
    )


def summarize(m: PathCountMatrix) -> PathStats:
    """Min/max/mean of the per-pair counts over unordered pairs."""
    if m.n < 2:
        raise InvalidPairError(f"need at least 2 nodes to summarize, got {m.n}")
    values = [m.counts[u][v] for u in range(m.n) for v in range(u + 1, m.n)]
    return PathStats(
        min_pairs=min(values),
        max_pairs=max(values),
        mean_pairs=sum(values) / len(values),
    )


def _check_pair(t: Topology, u: int, v: int) -> None:
    if u == v:
        raise InvalidPairError(f"path counting needs two distinct nodes, got {u} twice")
    for node in (u, v):
        if not 0 <= node < t.n:
            raise InvalidPairError(f"node {node} outside [0, {t.n})")


def _check_guard(t: Topology, max_length: int | None, force: bool) -> None:
    if max_length is not None and max_length < 1:
        raise ValueError(f"max_length must be positive, got {max_length}")
    if max_length is None and not force and t.n > ENUMERATION_GUARD:
        raise GuardError(
            f"uncapped enumeration refused for n={t.n} >"
            f" {ENUMERATION_GUARD}; pass max_length (or force=True)"
        )


def _count_pair(
    adj: list[list[int]], src: int, dst: int, max_length: int | None
) -> tuple[int, bool]:
    """Count simple src-dst paths of length <= max_length (None = exact).

    The second result reports whether the cap truncated the count: a
    prefix pruned at the cap that can still reach dst through unvisited
    vertices extends to a simple path longer than the cap.
    """
    n = len(adj)
    on_path = [False] * n
    count = 0
    capped = False

    def reaches_dst(node: int) -> bool:
        seen = [False] * n
        seen[node] = True
        queue = deque([node])
        while queue:
            w = queue.popleft()
            for nbr in adj[w]:
                if nbr == dst:
                    return True
                if not seen[nbr] and not on_path[nbr]:
                    seen[nbr] = True
                    queue.append(nbr)
        return False

    def dfs(node: int, depth: int) -> None:
        nonlocal count, capped
        if node == dst:
            count += 1
            return
        if max_length is not None and depth == max_length:
            if not capped and reaches_dst(node):
                capped = True
            return
        on_path[node] = True
        for nbr in adj[node]:
            if not on_path[nbr]:
                dfs(nbr, depth + 1)
        on_path[node] = False

    dfs(src, 0)
    return count, capped
