"""Plane trees, Halin graphs and their structural queries.

A plane tree is stored as per-vertex neighbour lists in counterclockwise
order.  The outer cycle of the Halin graph is never stored independently of
the embedding: :func:`build_halin` derives it by walking the single face of
the embedded tree.

Face-walk convention: arriving at ``v`` along the dart ``u -> v`` the walk
leaves along ``v -> succ_v(u)``, where ``succ_v`` is the next neighbour after
``u`` in ``v``'s counterclockwise list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence


class InvalidTree(ValueError):
    """The input is not the characteristic tree of a Halin graph."""


@dataclass(frozen=True)
class PlaneTree:
    """A tree with a rotation system.

    ``adjacency[v]`` lists the neighbours of ``v`` in counterclockwise order.
    Construction does not validate; :func:`tree_violations` and
    :func:`build_halin` do.
    """

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        adj = tuple(tuple(int(w) for w in nbrs) for nbrs in self.adjacency)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_lists(cls, adjacency: Iterable[Iterable[int]]) -> "PlaneTree":
        return cls(tuple(tuple(nbrs) for nbrs in adjacency))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.adjacency[v]) == 1

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if len(self.adjacency[v]) == 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    @cached_property
    def _position(self) -> dict[tuple[int, int], int]:
        return {
            (v, w): i for v in range(self.n) for i, w in enumerate(self.adjacency[v])
        }

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` that follows ``u`` counterclockwise."""
        nbrs = self.adjacency[v]
        return nbrs[(self._position[v, u] + 1) % len(nbrs)]

    def pred(self, v: int, u: int) -> int:
        nbrs = self.adjacency[v]
        return nbrs[(self._position[v, u] - 1) % len(nbrs)]

    def face_walk(self, start: tuple[int, int] | None = None) -> list[tuple[int, int]]:
        """All ``2(n-1)`` darts of the tree in face-walk order."""
        if start is None:
            start = next(
                ((v, self.adjacency[v][0]) for v in range(self.n) if self.adjacency[v]),
                None,
            )
            if start is None:
                return []
        darts = []
        u, v = start
        while True:
            darts.append((u, v))
            u, v = v, self.succ(v, u)
            if (u, v) == start or len(darts) > 2 * len(self._position):
                return darts

    def mirror(self) -> "PlaneTree":
        """The reflected embedding (every rotation reversed)."""
        return PlaneTree(tuple(tuple(reversed(nbrs)) for nbrs in self.adjacency))


def tree_violations(tree: PlaneTree) -> list[str]:
    """Every way ``tree`` fails to be a characteristic tree (empty if none)."""
    out = []
    n = tree.n
    if n < 4:
        out.append(f"too few vertices: n={n} < 4")
    adj = tree.adjacency
    bad_ids = [
        (v, w) for v in range(n) for w in adj[v] if not 0 <= w < n or w == v
    ]
    if bad_ids:
        out.append(f"neighbour ids out of range or self-loops: {bad_ids[:4]}")
        return out
    for v in range(n):
        if len(set(adj[v])) != len(adj[v]):
            out.append(f"repeated neighbour at vertex {v}")
        for w in adj[v]:
            if v not in adj[w]:
                out.append(f"asymmetric adjacency: {v}->{w} without {w}->{v}")
    m = sum(len(a) for a in adj)
    if m != 2 * (n - 1):
        out.append(f"edge count {m // 2} != n-1 = {n - 1}")
    if n and _component_size(adj, 0) != n:
        out.append("disconnected")
    deg2 = [v for v in range(n) if len(adj[v]) == 2]
    if deg2:
        out.append(f"degree-2 non-leaf at {deg2}")
    if any(len(a) == 0 for a in adj) and n > 1:
        out.append("isolated vertex")
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    if len(leaves) < 3:
        out.append(f"fewer than 3 leaves ({len(leaves)})")
    if len(leaves) == n:
        out.append("no non-leaf vertex")
    return out


def _component_size(adj: Sequence[Sequence[int]], root: int) -> int:
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen)


def leaf_order(tree: PlaneTree) -> tuple[int, ...]:
    """Leaves in face-walk order, rotated to start at the smallest leaf id."""
    seen = []
    for u, v in tree.face_walk():
        if len(tree.adjacency[v]) == 1:
            seen.append(v)
    if not seen:
        return ()
    i = seen.index(min(seen))
    return tuple(seen[i:] + seen[:i])


@dataclass(frozen=True)
class HalinGraph:
    """``H = T + C``: characteristic tree plus the cycle through its leaves."""

    tree: PlaneTree
    leaf_cycle: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def cycle_edges(self) -> tuple[tuple[int, int], ...]:
        c = self.leaf_cycle
        return tuple((c[i], c[(i + 1) % len(c)]) for i in range(len(c)))

    @cached_property
    def edges(self) -> frozenset[frozenset[int]]:
        es = {frozenset(e) for e in self.tree.edges}
        es.update(frozenset(e) for e in self.cycle_edges)
        return frozenset(es)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set(a) for a in self.tree.adjacency]
        for a, b in self.cycle_edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def sorted_neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def is_tree_edge(self, u: int, v: int) -> bool:
        return v in self.tree.adjacency[u]


def build_halin(tree: PlaneTree) -> HalinGraph:
    problems = tree_violations(tree)
    if problems:
        raise InvalidTree("; ".join(problems))
    return HalinGraph(tree, leaf_order(tree))


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(g: HalinGraph) -> ValidationReport:
    """Check every invariant of ``g`` and report all failures together."""
    out = list(tree_violations(g.tree))
    leaves = set(g.tree.leaves)
    cyc = g.leaf_cycle
    if len(set(cyc)) != len(cyc):
        out.append("leaf cycle repeats a vertex")
    if set(cyc) != leaves:
        out.append("leaf cycle is not the leaf set")
    elif not out:
        expected = leaf_order(g.tree)
        if _rotate_to_min(cyc) != expected:
            out.append("leaf order mismatch")
    if not out and g.num_edges != g.n - 1 + len(cyc):
        out.append(
            f"edge count {g.num_edges} != n-1+L = {g.n - 1 + len(cyc)}"
        )
    return ValidationReport(tuple(out))


def _rotate_to_min(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    if not seq:
        return ()
    i = seq.index(min(seq))
    return tuple(seq[i:] + seq[:i])


# -- vertex classes -------------------------------------------------------------


class VertexClass(Enum):
    LEAF = "leaf"
    INTERIOR = "interior"
    BRANCHING = "branching"
    SEMI_BRANCHING = "semi-branching"


def classify_vertex(tree: PlaneTree, v: int) -> VertexClass:
    adj = tree.adjacency
    if len(adj[v]) == 1:
        return VertexClass.LEAF
    nonleaf = sum(1 for w in adj[v] if len(adj[w]) > 1)
    if nonleaf == len(adj[v]):
        return VertexClass.INTERIOR
    if nonleaf <= 1:
        return VertexClass.BRANCHING
    return VertexClass.SEMI_BRANCHING


def classify_vertices(g: HalinGraph) -> dict[int, VertexClass]:
    return {v: classify_vertex(g.tree, v) for v in range(g.n)}


# -- faces ----------------------------------------------------------------------


@dataclass(frozen=True)
class BoundedFace:
    """A bounded face, keyed by its outer-cycle edge ``(u1, u2)``.

    ``boundary`` runs ``u1, ..., u2`` along the tree path; the closing edge
    ``u2 u1`` is implied.
    """

    cycle_edge: tuple[int, int]
    boundary: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def tree_path(self) -> tuple[int, ...]:
        return self.boundary


def _face_segments(g: HalinGraph) -> list[tuple[tuple[int, int], list[tuple[int, int]]]]:
    tree = g.tree
    first = g.leaf_cycle[0]
    start = (first, tree.adjacency[first][0])
    walk = tree.face_walk(start)
    segments = []
    cur: list[tuple[int, int]] = []
    for dart in walk:
        cur.append(dart)
        if tree.is_leaf(dart[1]):
            segments.append(((cur[0][0], dart[1]), cur))
            cur = []
    return segments


def bounded_faces(g: HalinGraph) -> list[BoundedFace]:
    """One face per outer-cycle edge, in leaf-cycle order."""
    faces = []
    for (u1, u2), darts in _face_segments(g):
        faces.append(BoundedFace((u1, u2), tuple([u1] + [d[1] for d in darts])))
    return faces


def dart_faces(g: HalinGraph) -> dict[tuple[int, int], BoundedFace]:
    """Map every tree dart ``(u, v)`` to the bounded face it lies on."""
    out = {}
    for (u1, u2), darts in _face_segments(g):
        face = BoundedFace((u1, u2), tuple([u1] + [d[1] for d in darts]))
        for d in darts:
            out[d] = face
    return out


def edge_faces(g: HalinGraph, u: int, v: int) -> tuple[BoundedFace, BoundedFace]:
    """The two bounded faces on either side of tree edge ``uv``."""
    if not g.is_tree_edge(u, v):
        raise ValueError(f"({u}, {v}) is not a tree edge")
    df = dart_faces(g)
    return df[u, v], df[v, u]


def path_face(g: HalinGraph, u: int, v: int, w: int) -> BoundedFace:
    """The bounded face whose boundary contains the tree path ``u v w``."""
    tree = g.tree
    df = dart_faces(g)
    if tree.succ(v, u) == w:
        return df[u, v]
    if tree.succ(v, w) == u:
        return df[w, v]
    raise ValueError(f"({u}, {v}, {w}) is not a face-consecutive tree path")


# -- misc -----------------------------------------------------------------------


def tree_distances(tree: PlaneTree, source: int) -> list[int]:
    dist = [-1] * tree.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in tree.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def relabel(adjacency: Sequence[Sequence[int]], keep: Sequence[int]) -> PlaneTree:
    """Restrict to ``keep`` (old ids, increasing) and renumber densely."""
    new_id = {old: i for i, old in enumerate(keep)}
    return PlaneTree(
        tuple(tuple(new_id[w] for w in adjacency[old]) for old in keep)
    )
