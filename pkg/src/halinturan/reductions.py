"""Edge-count-controlled surgery on C4-free Halin graphs.

Three rules shrink a C4-free Halin graph while keeping it C4-free:

* leaf removal at a semi-branching vertex of degree >= 4 (loses 2 edges),
* smoothing a degree-3 semi-branching vertex together with its pendant leaf
  (loses 3 edges),
* contracting an internal tree edge whose two faces are large (loses 1 edge).

Inputs are never mutated; every rule returns a :class:`ReductionStep`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    HalinGraph,
    VertexClass,
    build_halin,
    classify_vertex,
    dart_faces,
    edge_faces,
    path_face,
    relabel,
    tree_distances,
)
from .cycles import has_c4


class PreconditionFailed(ValueError):
    pass


class Rule(Enum):
    LEAF_REMOVAL = "leaf-removal"
    SMOOTHING = "smoothing"
    CONTRACTION = "contraction"


EDGE_DELTA = {Rule.LEAF_REMOVAL: 2, Rule.SMOOTHING: 3, Rule.CONTRACTION: 1}
VERTEX_DELTA = {Rule.LEAF_REMOVAL: 1, Rule.SMOOTHING: 2, Rule.CONTRACTION: 1}


@dataclass(frozen=True)
class ReductionStep:
    rule: Rule
    site: tuple[int, ...]
    before_edges: int
    after_edges: int
    result: HalinGraph

    @property
    def edge_delta(self) -> int:
        return self.before_edges - self.after_edges


def _require_c4_free(g: HalinGraph) -> None:
    if has_c4(g.sorted_neighbors):
        raise PreconditionFailed("input graph contains a 4-cycle")


def _step(rule: Rule, site, g: HalinGraph, adjacency, removed: set[int]) -> ReductionStep:
    keep = [v for v in range(g.n) if v not in removed]
    h = build_halin(relabel(adjacency, keep))
    return ReductionStep(rule, tuple(site), g.num_edges, h.num_edges, h)


def leaf_removal(g: HalinGraph, v: int, u: int, check_c4: bool = True) -> ReductionStep:
    """Delete leaf ``u`` of ``v``; its two cycle neighbours become adjacent."""
    if check_c4:
        _require_c4_free(g)
    tree = g.tree
    if classify_vertex(tree, v) is not VertexClass.SEMI_BRANCHING:
        raise PreconditionFailed(f"vertex {v} is not semi-branching")
    if tree.degree(v) < 4:
        raise PreconditionFailed(f"vertex {v} has degree {tree.degree(v)} < 4")
    if u not in tree.adjacency[v] or not tree.is_leaf(u):
        raise PreconditionFailed(f"{u} is not a leaf neighbour of {v}")
    f1, f2 = edge_faces(g, v, u)
    # the two faces at u cannot both be triangles in a C4-free graph
    if max(f1.size, f2.size) < 5:
        raise PreconditionFailed(f"faces at leaf {u} have sizes {f1.size}, {f2.size}")
    adj = [list(a) for a in tree.adjacency]
    adj[v].remove(u)
    adj[u] = []
    return _step(Rule.LEAF_REMOVAL, (v, u), g, adj, {u})


def smoothing(g: HalinGraph, path: tuple[int, int, int], check_c4: bool = True) -> ReductionStep:
    """Remove degree-3 ``v`` of path ``(u, v, w)`` and its pendant leaf.

    ``u`` and ``w`` become tree-adjacent; the leaf's two cycle neighbours
    become cycle-adjacent.
    """
    if check_c4:
        _require_c4_free(g)
    u, v, w = path
    tree = g.tree
    if classify_vertex(tree, v) is not VertexClass.SEMI_BRANCHING:
        raise PreconditionFailed(f"vertex {v} is not semi-branching")
    if tree.degree(v) != 3:
        raise PreconditionFailed(f"vertex {v} has degree {tree.degree(v)} != 3")
    if u == w or u not in tree.adjacency[v] or w not in tree.adjacency[v]:
        raise PreconditionFailed(f"({u}, {v}, {w}) is not a tree path")
    if tree.is_leaf(u) or tree.is_leaf(w):
        raise PreconditionFailed("path ends must be non-leaves")
    size = path_face(g, u, v, w).size
    if size < 6:
        raise PreconditionFailed(f"face on path ({u}, {v}, {w}) has size {size} < 6")
    (leaf,) = [x for x in tree.adjacency[v] if x not in (u, w)]
    adj = [list(a) for a in tree.adjacency]
    adj[u][adj[u].index(v)] = w
    adj[w][adj[w].index(v)] = u
    adj[v] = []
    adj[leaf] = []
    return _step(Rule.SMOOTHING, (u, v, w), g, adj, {v, leaf})


def contraction(g: HalinGraph, edge: tuple[int, int], check_c4: bool = True) -> ReductionStep:
    """Contract internal tree edge ``ab`` into ``a``, splicing both rotations."""
    if check_c4:
        _require_c4_free(g)
    a, b = edge
    tree = g.tree
    if b not in tree.adjacency[a]:
        raise PreconditionFailed(f"({a}, {b}) is not a tree edge")
    if tree.is_leaf(a) or tree.is_leaf(b):
        raise PreconditionFailed("both endpoints must be non-leaves")
    f1, f2 = edge_faces(g, a, b)
    if min(f1.size, f2.size) < 6:
        raise PreconditionFailed(f"faces at ({a}, {b}) have sizes {f1.size}, {f2.size}")
    adj = [list(x) for x in tree.adjacency]
    na, nb = adj[a], adj[b]
    i, j = na.index(b), nb.index(a)
    merged = na[i + 1:] + na[:i] + nb[j + 1:] + nb[:j]
    for x in nb:
        if x != a:
            adj[x][adj[x].index(b)] = a
    adj[a] = merged
    adj[b] = []
    return _step(Rule.CONTRACTION, (a, b), g, adj, {b})


# -- longest paths ---------------------------------------------------------------


@dataclass(frozen=True)
class LongestPathReport:
    path: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.path) - 1

    @property
    def semi_pendants(self) -> tuple[int, int]:
        return self.path[1], self.path[-2]


def tree_diameter(g: HalinGraph) -> int:
    tree = g.tree
    d0 = tree_distances(tree, 0)
    far = max(range(tree.n), key=d0.__getitem__)
    return max(tree_distances(tree, far))


def _tree_path(tree, s: int, t: int) -> tuple[int, ...]:
    dist = tree_distances(tree, t)
    path = [s]
    while path[-1] != t:
        x = path[-1]
        path.append(next(y for y in tree.adjacency[x] if dist[y] == dist[x] - 1))
    return tuple(path)


def longest_path(g: HalinGraph) -> LongestPathReport:
    """Lexicographically least longest path of the characteristic tree.

    The length comes from a double breadth-first sweep.
    """
    tree = g.tree
    diam = tree_diameter(g)
    best = None
    for s in tree.leaves:
        ds = tree_distances(tree, s)
        for t in range(tree.n):
            if ds[t] == diam:
                p = _tree_path(tree, s, t)
                if best is None or p < best:
                    best = p
        if best is not None:
            break
    return LongestPathReport(best)


def all_longest_paths(g: HalinGraph) -> list[LongestPathReport]:
    """Every longest path, once per unordered pair of endpoints."""
    tree = g.tree
    diam = tree_diameter(g)
    out = []
    for s in tree.leaves:
        ds = tree_distances(tree, s)
        for t in tree.leaves:
            if t > s and ds[t] == diam:
                out.append(LongestPathReport(_tree_path(tree, s, t)))
    return out


# -- site search -------------------------------------------------------------------


def leaf_removal_sites(g: HalinGraph):
    tree = g.tree
    df = dart_faces(g)
    for v in range(g.n):
        if tree.degree(v) < 4 or classify_vertex(tree, v) is not VertexClass.SEMI_BRANCHING:
            continue
        for u in sorted(tree.adjacency[v]):
            if tree.is_leaf(u) and max(df[v, u].size, df[u, v].size) >= 5:
                yield (v, u)


def contraction_sites(g: HalinGraph):
    tree = g.tree
    df = dart_faces(g)
    for a, b in sorted(tree.edges):
        if tree.is_leaf(a) or tree.is_leaf(b):
            continue
        if min(df[a, b].size, df[b, a].size) >= 6:
            yield (a, b)


def smoothing_sites(g: HalinGraph):
    tree = g.tree
    for v in range(g.n):
        if tree.degree(v) != 3 or classify_vertex(tree, v) is not VertexClass.SEMI_BRANCHING:
            continue
        u, w = sorted(x for x in tree.adjacency[v] if not tree.is_leaf(x))
        if path_face(g, u, v, w).size >= 6:
            yield (u, v, w)


def find_reduction(g: HalinGraph) -> tuple[Rule, tuple[int, ...]] | None:
    """First applicable site: leaf removals, then contractions, then smoothings."""
    for rule, sites in (
        (Rule.LEAF_REMOVAL, leaf_removal_sites),
        (Rule.CONTRACTION, contraction_sites),
        (Rule.SMOOTHING, smoothing_sites),
    ):
        for site in sites(g):
            return rule, site
    return None


def apply_rule(g: HalinGraph, rule: Rule, site, check_c4: bool = True) -> ReductionStep:
    if rule is Rule.LEAF_REMOVAL:
        return leaf_removal(g, site[0], site[1], check_c4)
    if rule is Rule.SMOOTHING:
        return smoothing(g, tuple(site), check_c4)
    return contraction(g, tuple(site), check_c4)
