"""Extremal C4-free Halin families, wheels and a random C4-free generator.

The base trees are transcribed from drawn coordinates; each vertex's
counterclockwise rotation is recovered by sorting its neighbours by angle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .core import HalinGraph, PlaneTree, build_halin, tree_violations
from .cycles import has_c4


class OutOfRange(ValueError):
    pass


class GenerationFailed(RuntimeError):
    pass


Point = tuple[float, float]

# (coordinates, edges, dark-spotted vertices) per base tree
_T16_POINTS: list[Point] = [
    (0, 0), (0, 10), (9.5, 3.1), (-9.5, 3.1), (5.9, -8.1), (-5.9, -8.1),
    (14.8, 2.3), (13.4, 6.8), (-14.8, 2.3), (-13.4, 6.8), (2.3, 14.8),
    (-2.3, 14.8), (10.6, -10.6), (6.8, -13.4), (-10.6, -10.6), (-6.8, -13.4),
]
_T16_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (2, 6), (2, 7), (3, 8), (3, 9),
    (1, 10), (1, 11), (4, 12), (4, 13), (5, 14), (5, 15),
]

_T17_POINTS: list[Point] = [
    (-5, 0), (5, 0), (13.1, 5.9), (13.1, -5.9), (-8.1, 9.5), (-8.1, -9.5),
    (-15, 0), (18.4, 6.8), (15.6, 10.6), (18.4, -6.8), (15.6, -10.6),
    (-11.8, 13.4), (-7.3, 14.8), (-11.8, -13.4), (-7.3, -14.8),
    (-19.8, 2.3), (-19.8, -2.3),
]
_T17_EDGES = [
    (0, 1), (1, 2), (2, 7), (2, 8), (1, 3), (3, 9), (3, 10), (0, 4), (4, 11),
    (4, 12), (0, 5), (5, 13), (5, 14), (0, 6), (6, 15), (6, 16),
]

_T18_POINTS: list[Point] = [
    (-5, 0), (5, 0), (-15, 0), (13.1, 5.9), (13.1, -5.9), (-23.1, 5.9),
    (-23.1, -5.9), (18.4, 6.8), (15.6, 10.6), (18.4, -6.8), (15.6, -10.6),
    (-28.4, 6.8), (-25.6, 10.6), (-25.6, -10.6), (-28.4, -6.8),
    (0.9, 8.1), (-10.9, 8.1), (-5, -10),
]
_T18_EDGES = [
    (0, 1), (1, 3), (3, 7), (3, 8), (1, 4), (4, 9), (4, 10), (5, 11), (5, 12),
    (6, 13), (6, 14), (0, 2), (2, 5), (2, 6), (0, 15), (0, 16), (0, 17),
]

_BASE_DATA = {
    "T16": (_T16_POINTS, _T16_EDGES, (0,)),
    "T17": (_T17_POINTS, _T17_EDGES, (0, 1)),
    "T18": (_T18_POINTS, _T18_EDGES, (2, 1)),
}


def embed_by_coordinates(points: Sequence[Point], edges) -> PlaneTree:
    nbrs: list[list[int]] = [[] for _ in points]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)

    def angle(v, w):
        (x0, y0), (x1, y1) = points[v], points[w]
        return math.atan2(y1 - y0, x1 - x0) % (2 * math.pi)

    return PlaneTree(tuple(tuple(sorted(nb, key=lambda w: angle(v, w))) for v, nb in enumerate(nbrs)))


@dataclass(frozen=True)
class BaseTree:
    id: str
    tree: PlaneTree
    attachment_sites: tuple[int, ...]


@dataclass(frozen=True)
class StarGadget:
    """``K_{1,3}`` with leaf 0 distinguished; vertex 1 is the centre."""

    tree: PlaneTree = PlaneTree(((1,), (0, 2, 3), (1,), (1,)))
    distinguished: int = 0
    center: int = 1


def base_tree(id: str) -> BaseTree:
    key = id.upper()
    if key not in _BASE_DATA:
        raise OutOfRange(f"unknown base tree {id!r}")
    points, edges, sites = _BASE_DATA[key]
    tree = embed_by_coordinates(points, edges)
    problems = tree_violations(tree)
    if problems:
        raise AssertionError(f"{key} transcription: {problems}")
    if has_c4(build_halin(tree).sorted_neighbors):
        raise AssertionError(f"{key} transcription is not C4-free")
    return BaseTree(key, tree, sites)


def attach_star(tree: PlaneTree, site: int) -> PlaneTree:
    """Identify a star's distinguished leaf with ``site``.

    The star centre becomes the last neighbour in ``site``'s rotation and
    brings two new leaves.
    """
    if tree.is_leaf(site):
        raise ValueError(f"attachment site {site} is a leaf")
    n = tree.n
    c, l1, l2 = n, n + 1, n + 2
    adj = [list(a) for a in tree.adjacency]
    adj[site].append(c)
    adj.extend([[site, l1, l2], [c], [c]])
    return PlaneTree.from_lists(adj)


def theorem_value(n: int) -> int:
    """The C4 Halin Turan number for ``n >= 16``, by residue of ``n`` mod 3."""
    if n < 16:
        raise OutOfRange(f"formula stated for n >= 16, got {n}")
    r = n % 3
    if r == 1:
        return 5 * (n - 1) // 3
    if r == 2:
        return 5 * (n - 2) // 3 + 1
    return 5 * (n - 3) // 3 + 3


_BASE_FOR_RESIDUE = {1: "T16", 2: "T17", 0: "T18"}


def extremal_family(n: int, check: bool = True) -> HalinGraph:
    """Base tree for ``n mod 3`` plus ``(n - base) / 3`` stars, round-robin."""
    if n < 16:
        raise OutOfRange(f"extremal family needs n >= 16, got {n}")
    base = base_tree(_BASE_FOR_RESIDUE[n % 3])
    tree = base.tree
    g = build_halin(tree)
    for i in range((n - tree.n) // 3):
        site = base.attachment_sites[i % len(base.attachment_sites)]
        tree = attach_star(tree, site)
        nxt = build_halin(tree)
        if (nxt.n - g.n, nxt.num_edges - g.num_edges) != (3, 5):
            raise AssertionError("star attachment must add 3 vertices and 5 edges")
        if check and has_c4(nxt.sorted_neighbors):
            raise AssertionError(f"star attachment {i} at {site} created a C4")
        g = nxt
    return g


def star_tree(k: int) -> PlaneTree:
    if k < 3:
        raise OutOfRange(f"wheel needs at least 3 spokes, got {k}")
    return PlaneTree((tuple(range(1, k + 1)),) + tuple((0,) for _ in range(k)))


def wheel(k: int) -> HalinGraph:
    """Wheel on ``k`` spokes (``k + 1`` vertices)."""
    return build_halin(star_tree(k))


# -- random corpus ----------------------------------------------------------------

# smallest seed: a centre with three branching neighbours, each with two leaves
_SEED_TREE = PlaneTree((
    (1, 2, 3), (0, 4, 5), (0, 6, 7), (0, 8, 9),
    (1,), (1,), (2,), (2,), (3,), (3,),
))


def _insert(adj: list[list[int]], v: int, pos: int, w: int) -> None:
    adj[v].insert(pos, w)


def _attach(new: list[list[int]], v: int, pos: int, shape: tuple) -> None:
    """Hang a planted subtree ``shape`` (nested tuples of children) off ``v``."""
    root = len(new)
    new.append([v])
    _insert(new, v, pos, root)
    stack = [(root, shape)]
    while stack:
        x, kids = stack.pop()
        for kid in kids:
            c = len(new)
            new.append([x])
            new[x].append(c)
            stack.append((c, kid))


_LEAF = ()
_STAR = (_LEAF, _LEAF)
# planted shapes by vertex count, for the attachment step
_SHAPES = {
    1: [_LEAF],
    3: [_STAR],
    7: [(_STAR, _STAR)],
    8: [(_STAR, _LEAF, _STAR)],
    10: [(_STAR, _STAR, _STAR)],
}


def _grow(adj: list[list[int]], rng: random.Random, budget: int) -> list[list[int]]:
    """One random growth step adding between 1 and ``budget`` vertices."""
    n = len(adj)
    nonleaves = [v for v in range(n) if len(adj[v]) > 1]
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    ops = ["attach"]
    if budget >= 2:
        ops += ["split", "subdivide"]
    op = rng.choice(ops)
    new = [list(a) for a in adj]
    if op == "attach":
        size = rng.choice([k for k in _SHAPES if k <= budget])
        v = rng.choice(nonleaves)
        _attach(new, v, rng.randrange(len(new[v]) + 1), rng.choice(_SHAPES[size]))
    elif op == "split":
        v = rng.choice(leaves)
        new[v].extend([n, n + 1])
        new.extend([[v], [v]])
    else:
        # put a new degree-3 vertex with one pendant leaf on a tree edge
        p = rng.choice(nonleaves)
        c = rng.choice(new[p])
        new[p][new[p].index(c)] = n
        new[c][new[c].index(p)] = n
        leaf_first = rng.random() < 0.5
        new.append([p, n + 1, c] if leaf_first else [p, c, n + 1])
        new.append([n])
    return new


def random_c4free_halin(n: int, seed: int, max_restarts: int = 50, stall: int = 200) -> HalinGraph:
    """A C4-free Halin graph on exactly ``n`` vertices, deterministic in ``seed``.

    Grows a small C4-free seed by random subtree attachments, leaf splits and
    edge subdivisions, rejecting any step that creates a 4-cycle.  A growth
    run that sees ``stall`` consecutive rejections starts over.
    """
    if n < 16:
        raise OutOfRange(f"random generator needs n >= 16, got {n}")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        adj = [list(a) for a in _SEED_TREE.adjacency]
        rejected = 0
        while len(adj) < n and rejected < stall:
            cand = _grow(adj, rng, n - len(adj))
            if has_c4(build_halin(PlaneTree.from_lists(cand)).sorted_neighbors):
                rejected += 1
            else:
                adj, rejected = cand, 0
        if len(adj) == n:
            return build_halin(PlaneTree.from_lists(adj))
    raise GenerationFailed(f"rejection sampler stalled for n={n}, seed={seed}")
