"""Exhaustive generation of Halin graphs and exact Halin Turan numbers.

Every plane tree without degree-2 vertices is rooted at its centre: a
single vertex when the diameter is even, an edge when it is odd.  The
branches hanging off the centre are *planted trees* (every internal vertex
has at least two children), drawn from a table indexed by integer ids.  A
tree is emitted only when its branch sequence is the least one among all
rotations and reflections, so each plane tree appears exactly once without
any cross-item bookkeeping.

For forbidden-cycle searches the table can be restricted to planted trees
whose own partial Halin graph (the subtree plus the path through its
leaves, a subgraph of any Halin graph containing it) avoids the cycle.
"""

from __future__ import annotations

import logging
import warnings
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import HalinGraph, PlaneTree, build_halin
from .cycles import has_cycle_of_length

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 18
HARD_LIMIT = 20


class LimitExceeded(ValueError):
    pass


def check_limit(n: int, limit: int | None = None) -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if n > max(limit, DEFAULT_LIMIT) and n > limit:
        raise LimitExceeded(f"n={n} exceeds the enumeration limit {limit}")
    if n > HARD_LIMIT:
        raise LimitExceeded(f"n={n} exceeds the hard enumeration limit {HARD_LIMIT}")
    if n > DEFAULT_LIMIT:
        warnings.warn(f"enumerating n={n} is slow", RuntimeWarning, stacklevel=3)


# -- planted trees ---------------------------------------------------------------


class PlantedTable:
    """Planted trees up to ``max_size`` vertices, optionally C_k-filtered.

    Ids are assigned in order of (size, child-id sequence), which is a total
    order compatible across sizes; ``mirror[i]`` is the id of the reflection.
    """

    def __init__(self, max_size: int, forbid: int | None = None):
        self.max_size = max_size
        self.forbid = forbid
        self.children: list[tuple[int, ...]] = [()]
        self.size = [1]
        self.height = [0]
        self.leaves = [1]
        self.mirror = [0]
        self.by_size: list[list[int]] = [[], [0]]
        self._index = {(): 0}
        for m in range(2, max_size + 1):
            self.by_size.append([])
            for kids in self._sequences(m - 1, 2):
                self._add(kids)

    def _sequences(self, total: int, min_len: int) -> Iterator[tuple[int, ...]]:
        """Child-id sequences with sizes summing to ``total``, lexicographic."""
        by_size = self.by_size

        def rec(left: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if left == 0:
                if len(prefix) >= min_len:
                    yield prefix
                return
            # ids grow with size, so iterate sizes ascending for lexicographic order
            for s in range(1, left + 1):
                for c in by_size[s]:
                    yield from rec(left - s, prefix + (c,))

        yield from rec(total, ())

    def _add(self, kids: tuple[int, ...]) -> None:
        if self.forbid is not None and not self._partial_free(kids):
            return
        i = len(self.children)
        self.children.append(kids)
        self.size.append(1 + sum(self.size[c] for c in kids))
        self.height.append(1 + max(self.height[c] for c in kids))
        self.leaves.append(sum(self.leaves[c] for c in kids))
        self.by_size[self.size[i]].append(i)
        self._index[kids] = i
        mk = tuple(self.mirror[c] for c in reversed(kids))
        j = self._index.get(mk)
        if j is None:
            # mirror not generated yet; it comes later in the same size class
            self.mirror.append(-1)
            self._pending = getattr(self, "_pending", {})
            self._pending[mk] = i
        else:
            self.mirror.append(j)
            self.mirror[j] = i
        pend = getattr(self, "_pending", None)
        if pend and kids in pend:
            other = pend.pop(kids)
            self.mirror[i] = other
            self.mirror[other] = i

    def _partial_free(self, kids: tuple[int, ...]) -> bool:
        adj = [[]]
        leaves: list[int] = []
        for c in kids:
            self._build(c, 0, adj, leaves)
        for a, b in zip(leaves, leaves[1:]):
            adj[a].append(b)
            adj[b].append(a)
        return not has_cycle_of_length(adj, self.forbid)

    def _build(self, i: int, parent: int, adj: list[list[int]], leaves: list[int]) -> int:
        """Append planted tree ``i`` under ``parent``; ccw rotation, preorder ids."""
        v = len(adj)
        adj.append([parent])
        adj[parent].append(v)
        kids = self.children[i]
        if not kids:
            leaves.append(v)
        for c in kids:
            self._build(c, v, adj, leaves)
        return v

    def __len__(self) -> int:
        return len(self.children)


_TABLES: dict[tuple[int, int | None], PlantedTable] = {}


def planted_table(max_size: int, forbid: int | None = None) -> PlantedTable:
    key = (max_size, forbid)
    if key not in _TABLES:
        # a larger table of the same kind contains every smaller one as a prefix
        for (m, f), t in _TABLES.items():
            if f == forbid and m >= max_size:
                return t
        _TABLES[key] = PlantedTable(max_size, forbid)
    return _TABLES[key]


# -- centred trees -------------------------------------------------------------------


@dataclass(frozen=True)
class Item:
    """One plane tree, as its centre and branch ids.

    ``kind`` is ``"v"`` (branch sequence around a centre vertex) or ``"e"``
    (the pair of branches on either side of a centre edge).
    """

    kind: str
    branches: tuple[int, ...]
    diameter: int


def _dihedral_min(seq: tuple[int, ...], mirror: Sequence[int]) -> bool:
    """``seq`` is least among its rotations and reflected rotations."""
    d = len(seq)
    rev = tuple(mirror[x] for x in reversed(seq))
    for base in (seq, rev):
        doubled = base + base
        for r in range(d):
            if doubled[r:r + d] < seq:
                return False
    return True


def _vertex_centred(t: PlantedTable, n: int, radius: int, first: int | None = None) -> Iterator[Item]:
    top = radius - 1
    total = n - 1
    top_size = 2 * top + 1  # smallest planted tree of height ``top``
    if total < 2 * top_size + 1:
        return
    height, size, mirror = t.height, t.size, t.mirror
    cand = [
        i for s in range(1, min(total, t.max_size) + 1) for i in t.by_size[s]
        if height[i] <= top
    ]
    # the first branch is the least, so at least two more of no smaller size follow
    firsts = [first] if first is not None else [
        i for i in cand if i <= mirror[i] and 3 * size[i] <= total
    ]
    for s0 in firsts:
        rest = [i for i in cand if i >= s0 and mirror[i] >= s0]

        def rec(left: int, prefix: tuple[int, ...], tops: int):
            if left == 0:
                if len(prefix) >= 3 and tops >= 2 and _dihedral_min(prefix, mirror):
                    yield Item("v", prefix, 2 * radius)
                return
            if tops < 2 and left < (2 - tops) * top_size:
                return
            for i in rest:
                si = size[i]
                if si > left:
                    break
                yield from rec(left - si, prefix + (i,), tops + (height[i] == top))

        yield from rec(total - size[s0], (s0,), int(height[s0] == top))


def _edge_centred(t: PlantedTable, n: int, radius: int, first: int | None = None) -> Iterator[Item]:
    height, size, mirror = t.height, t.size, t.mirror
    ids = [
        i for s in range(3, min(n - 3, t.max_size) + 1) for i in t.by_size[s]
        if height[i] == radius
    ]
    by_size = defaultdict(list)
    for i in ids:
        by_size[size[i]].append(i)
    for a in ids if first is None else [first]:
        for b in by_size.get(n - size[a], ()):
            pair = (a, b)
            if pair <= (b, a) and pair <= (mirror[a], mirror[b]) and pair <= (mirror[b], mirror[a]):
                yield Item("e", pair, 2 * radius + 1)


def branch_limit(n: int) -> int:
    """Largest branch at a centre: at least two more vertices sit elsewhere."""
    return max(1, n - 3)


def _tasks(n: int) -> list[tuple[str, int]]:
    """Independent subtasks: (centre kind, radius)."""
    out = []
    for diam in range(2, n):
        if diam % 2 == 0:
            out.append(("v", diam // 2))
        else:
            out.append(("e", diam // 2))
    return out


def iter_items(n: int, forbid: int | None = None, table: PlantedTable | None = None) -> Iterator[Item]:
    if n < 4:
        return
    t = table or planted_table(branch_limit(n), forbid)
    for kind, radius in _tasks(n):
        gen = _vertex_centred if kind == "v" else _edge_centred
        yield from gen(t, n, radius)


def item_adjacency(t: PlantedTable, item: Item) -> tuple[list[list[int]], list[int]]:
    """Counterclockwise adjacency (preorder ids) and leaves in cycle order."""
    adj: list[list[int]] = [[]]
    leaves: list[int] = []
    if item.kind == "v":
        for c in item.branches:
            t._build(c, 0, adj, leaves)
    else:
        a, b = item.branches
        for c in t.children[a]:
            t._build(c, 0, adj, leaves)
        # centre edge: vertex 0 is a, the next built vertex is b
        bv = len(adj)
        adj.append([0])
        adj[0].insert(0, bv)
        for c in t.children[b]:
            t._build(c, bv, adj, leaves)
    return adj, leaves


def item_tree(t: PlantedTable, item: Item) -> PlaneTree:
    adj, _ = item_adjacency(t, item)
    return PlaneTree.from_lists(adj)


def item_leaves(t: PlantedTable, item: Item) -> int:
    if item.kind == "v":
        return sum(t.leaves[c] for c in item.branches)
    return t.leaves[item.branches[0]] + t.leaves[item.branches[1]]


def halin_adjacency(adj: list[list[int]], leaves: list[int]) -> list[list[int]]:
    full = [list(a) for a in adj]
    m = len(leaves)
    for i in range(m):
        a, b = leaves[i], leaves[(i + 1) % m]
        full[a].append(b)
        full[b].append(a)
    return full


def enumerate_halin(n: int, limit: int | None = None, forbid: int | None = None) -> Iterator[HalinGraph]:
    """All Halin graphs on ``n`` vertices, one per plane tree up to symmetry.

    With ``forbid=k`` only the C_k-free ones are produced.
    """
    if n < 4:
        return
    check_limit(n, limit)
    t = planted_table(branch_limit(n), forbid)
    for item in iter_items(n, forbid, t):
        adj, leaves = item_adjacency(t, item)
        if forbid is not None and has_cycle_of_length(halin_adjacency(adj, leaves), forbid):
            continue
        yield build_halin(PlaneTree.from_lists(adj))


def count_halin(n: int, limit: int | None = None) -> int:
    """Number of plane trees on ``n`` vertices with no degree-2 vertex."""
    if n < 4:
        return 0
    check_limit(n, limit)
    return sum(1 for _ in iter_items(n))


# -- extremal search -------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalRecord:
    """Exact ``ex_H(n, C_k)`` with its witnesses.

    ``num_extremal`` counts plane trees up to rotation and reflection;
    ``witnesses`` holds at most ``max_witnesses`` of them in ``halin1`` form,
    sorted.
    """

    n: int
    k: int
    max_edges: int | None
    num_extremal: int
    witnesses: tuple[str, ...]
    enumerated_total: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "max_edges": self.max_edges,
            "num_extremal": self.num_extremal,
            "enumerated_total": self.enumerated_total,
            "witnesses": list(self.witnesses),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExtremalRecord":
        return cls(
            n=d["n"], k=d["k"], max_edges=d["max_edges"],
            num_extremal=d["num_extremal"], witnesses=tuple(d["witnesses"]),
            enumerated_total=d["enumerated_total"],
        )


def _extremal_task(n: int, k: int, kind: str, radius: int, floor: int = -1):
    t = planted_table(branch_limit(n), k)
    gen = _vertex_centred if kind == "v" else _edge_centred
    best, hits = floor, []
    for item in gen(t, n, radius):
        e = n - 1 + item_leaves(t, item)
        if e < best:
            continue
        adj, leaves = item_adjacency(t, item)
        if has_cycle_of_length(halin_adjacency(adj, leaves), k):
            continue
        if e > best:
            best, hits = e, []
        hits.append(item)
    return best, [item_tree(t, it) for it in hits]


def _count_task(n: int, kind: str, radius: int) -> int:
    t = planted_table(branch_limit(n))
    gen = _vertex_centred if kind == "v" else _edge_centred
    return sum(1 for _ in gen(t, n, radius))


def _run(fn, argsets: list[tuple], jobs: int):
    if jobs <= 1 or len(argsets) <= 1:
        return [fn(*a) for a in argsets]
    import multiprocessing as mp
    from concurrent.futures import ProcessPoolExecutor

    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else None
    with ProcessPoolExecutor(max_workers=jobs, mp_context=ctx) as pool:
        # map keeps submission order, so the merge is deterministic
        return list(pool.map(fn, *zip(*argsets)))


def count_halin_parallel(n: int, jobs: int = 1, limit: int | None = None) -> int:
    if n < 4:
        return 0
    check_limit(n, limit)
    return sum(_run(_count_task, [(n, kd, r) for kd, r in _tasks(n)], jobs))


def extremal_number(
    n: int,
    k: int,
    limit: int | None = None,
    jobs: int = 1,
    max_witnesses: int = 64,
) -> ExtremalRecord:
    """Maximum edge count of a C_k-free Halin graph on ``n`` vertices."""
    from .textio import serialize

    if k < 3:
        raise ValueError(f"cycle length must be >= 3, got {k}")
    if n < 4:
        raise ValueError(f"Halin graphs have at least 4 vertices, got n={n}")
    check_limit(n, limit)
    results = _run(_extremal_task, [(n, k, kd, r) for kd, r in _tasks(n)], jobs)
    best = max((b for b, _ in results), default=-1)
    trees = [tr for b, trs in results if b == best for tr in trs]
    codes = sorted(serialize(tr) for tr in trees)
    with warnings.catch_warnings():
        # check_limit above already warned about slow n
        warnings.simplefilter("ignore", RuntimeWarning)
        total = count_halin_parallel(n, jobs, limit=max(n, limit or 0))
    return ExtremalRecord(
        n=n, k=k,
        max_edges=best if best >= 0 else None,
        num_extremal=len(codes),
        witnesses=tuple(codes[:max_witnesses]),
        enumerated_total=total,
    )


# -- base-case audit ---------------------------------------------------------------------


@dataclass(frozen=True)
class AuditCheck:
    claim: str
    expected: str
    observed: str
    passed: bool


@dataclass(frozen=True)
class AuditReport:
    n: int
    classes: dict[int, tuple[int, ...]]  # longest-path length -> edge counts, sorted
    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def rows(self) -> list[dict]:
        out = []
        for kk in sorted(self.classes):
            es = self.classes[kk]
            out.append({
                "n": self.n, "k": kk, "count": len(es),
                "max_edges": max(es), "edge_counts": " ".join(map(str, sorted(set(es)))),
            })
        return out


def c4_free_by_diameter(n: int, limit: int | None = None) -> dict[int, tuple[int, ...]]:
    """Edge counts of all C4-free Halin graphs on ``n`` vertices, by longest path."""
    check_limit(n, limit)
    t = planted_table(branch_limit(n), 4)
    classes: dict[int, list[int]] = defaultdict(list)
    for item in iter_items(n, 4, t):
        adj, leaves = item_adjacency(t, item)
        if not has_cycle_of_length(halin_adjacency(adj, leaves), 4):
            classes[item.diameter].append(n - 1 + len(leaves))
    return {kk: tuple(sorted(v)) for kk, v in sorted(classes.items())}


def _empty(classes, kk):
    return kk not in classes


def _edge_set(classes, kk):
    return set(classes.get(kk, ()))


# (description, predicate over classes, expected text) per base case
_BASE_CLAIMS = {
    16: [
        ("no graph with k <= 3", lambda c: all(_empty(c, kk) for kk in range(4)), "none"),
        ("k is at most 6", lambda c: all(kk <= 6 for kk in c), "max k <= 6"),
        ("no graph with k = 5", lambda c: _empty(c, 5), "none"),
        ("every k = 6 graph has e = 24", lambda c: _edge_set(c, 6) == {24}, "{24}"),
        ("every k = 4 graph has e = 25", lambda c: _edge_set(c, 4) == {25}, "{25}"),
        ("e(H) <= 25", lambda c: max(max(v) for v in c.values()) == 25, "max 25"),
    ],
    17: [
        ("k is at most 6", lambda c: all(kk <= 6 for kk in c), "max k <= 6"),
        ("no graph with k = 4", lambda c: _empty(c, 4), "none"),
        ("every k = 5 graph has e = 26", lambda c: _edge_set(c, 5) == {26}, "{26}"),
        ("every k = 6 graph has e = 26", lambda c: _edge_set(c, 6) == {26}, "{26}"),
        ("e(H) <= 26", lambda c: max(max(v) for v in c.values()) == 26, "max 26"),
    ],
    18: [
        ("k is at most 7", lambda c: all(kk <= 7 for kk in c), "max k <= 7"),
        ("every k = 7 graph has e = 27", lambda c: _edge_set(c, 7) == {27}, "{27}"),
        ("k = 6 graphs have e <= 28", lambda c: max(_edge_set(c, 6) or {0}) <= 28, "<= 28"),
        ("no graph with k = 4 or 5", lambda c: _empty(c, 4) and _empty(c, 5), "none"),
        ("e(H) <= 28", lambda c: max(max(v) for v in c.values()) == 28, "max 28"),
    ],
}


def base_case_audit(n: int) -> AuditReport:
    if n not in _BASE_CLAIMS:
        raise ValueError(f"base cases are n in {{16, 17, 18}}, got {n}")
    classes = c4_free_by_diameter(n)
    observed = "; ".join(
        f"k={kk}: {' '.join(map(str, sorted(set(v))))} (x{len(v)})" for kk, v in classes.items()
    )
    checks = tuple(
        AuditCheck(desc, exp, observed, bool(pred(classes)))
        for desc, pred, exp in _BASE_CLAIMS[n]
    )
    return AuditReport(n, classes, checks)


# -- conjecture scan -----------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    value: int | None
    bound: float
    gap: float | None
    exceeds: bool
    in_stated_range: bool


CONJECTURE_FROM = 21


def conjecture_scan(n_range, k: int = 6, limit: int | None = None, jobs: int = 1, extremal=None) -> list[ConjectureRow]:
    """Exact ``ex_H(n, C_k)`` next to the bound ``8(n-1)/5`` for each ``n``."""
    extremal = extremal or (lambda n: extremal_number(n, k, limit=limit, jobs=jobs))
    rows = []
    for n in n_range:
        rec = extremal(n)
        bound = 8 * (n - 1) / 5
        v = rec.max_edges
        rows.append(ConjectureRow(
            n=n, value=v, bound=bound,
            gap=None if v is None else bound - v,
            exceeds=v is not None and 5 * v > 8 * (n - 1),
            in_stated_range=n >= CONJECTURE_FROM,
        ))
    return rows
