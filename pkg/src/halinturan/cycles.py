"""Fixed-length cycle detection and shortest cycles through an edge."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .core import HalinGraph


class EdgeNotInGraph(KeyError):
    pass


@dataclass(frozen=True)
class CycleQuery:
    k: int
    edge: tuple[int, int] | None = None

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"cycle length must be >= 3, got {self.k}")


def _adjacency(g) -> Sequence[Sequence[int]]:
    if isinstance(g, HalinGraph):
        return g.sorted_neighbors
    return g


def find_cycle(g, k: int) -> tuple[int, ...] | None:
    """A cycle of length exactly ``k`` as a vertex sequence, or ``None``.

    ``g`` is a :class:`HalinGraph` or a plain adjacency list.  The witness is
    the lexicographically least sequence whose first vertex is the cycle's
    minimum and whose second vertex is smaller than its last.
    """
    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    adj = _adjacency(g)
    n = len(adj)
    if k == 4:
        return _find_c4(adj)
    on_path = [False] * n
    path: list[int] = []

    def extend(v: int, start: int) -> bool:
        if len(path) == k:
            return start in adj[v] and path[1] < path[-1]
        for w in adj[v]:
            if w > start and not on_path[w]:
                on_path[w] = True
                path.append(w)
                if extend(w, start):
                    return True
                path.pop()
                on_path[w] = False
        return False

    for s in range(n):
        on_path[s] = True
        path.append(s)
        if extend(s, s):
            return tuple(path)
        path.pop()
        on_path[s] = False
    return None


def _find_c4(adj) -> tuple[int, ...] | None:
    # a 4-cycle is two distinct vertices with two common neighbours
    best = None
    n = len(adj)
    for a in range(n):
        seen: dict[int, int] = {}
        for b in adj[a]:
            for c in adj[b]:
                if c <= a:
                    continue
                if c in seen and seen[c] != b:
                    cand = _c4_witness(a, seen[c], c, b)
                    if best is None or cand < best:
                        best = cand
                else:
                    seen.setdefault(c, b)
        if best is not None:
            return best
    return None


def _c4_witness(a, b1, c, b2):
    lo, hi = sorted((b1, b2))
    return (a, lo, c, hi)


def contains_cycle(g, k: int) -> bool:
    return find_cycle(g, k) is not None


def has_c4(adj: Sequence[Sequence[int]]) -> bool:
    """Fast 4-cycle test on a plain adjacency list (no witness)."""
    pairs = set()
    for nb in adj:
        m = len(nb)
        for i in range(m):
            a = nb[i]
            for j in range(i + 1, m):
                b = nb[j]
                key = (a, b) if a < b else (b, a)
                if key in pairs:
                    return True
                pairs.add(key)
    return False


def has_cycle_of_length(adj: Sequence[Sequence[int]], k: int) -> bool:
    if k == 4:
        return has_c4(adj)
    return find_cycle(adj, k) is not None


def _bfs_dist(adj, source: int, banned: tuple[int, int]) -> list[int]:
    a, b = banned
    dist = [-1] * len(adj)
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] >= 0 or (x == a and y == b) or (x == b and y == a):
                continue
            dist[y] = dist[x] + 1
            q.append(y)
    return dist


def shortest_cycle_through_edge(g: HalinGraph, edge: tuple[int, int]) -> tuple[int, tuple[int, ...]]:
    """Length and witness of a shortest cycle containing ``edge``.

    The witness starts ``u, ...`` and ends at ``v`` (closing edge ``vu``); it is
    the lexicographically least shortest ``u``-``v`` path avoiding the edge.
    """
    u, v = edge
    adj = g.sorted_neighbors
    if not (0 <= u < g.n and 0 <= v < g.n) or v not in g.neighbors[u]:
        raise EdgeNotInGraph(edge)
    dist = _bfs_dist(adj, v, (u, v))
    if dist[u] < 0:
        raise ValueError(f"edge {edge} is a bridge")
    path = [u]
    x = u
    while x != v:
        x = next(
            y for y in adj[x]
            if dist[y] == dist[x] - 1 and {x, y} != {u, v}
        )
        path.append(x)
    return dist[u] + 1, tuple(path)


def girth(g: HalinGraph) -> int:
    return min(
        shortest_cycle_through_edge(g, tuple(e))[0] for e in map(sorted, g.edges)
    )


def is_cycle(g: HalinGraph, seq: Sequence[int]) -> bool:
    """``seq`` is a simple cycle of ``g`` (closing edge implied)."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
