"""The ``halin1`` text format and canonical codes of plane trees.

A graph is written as ``halin1 <tree>`` where ``<tree>`` is a balanced
parenthesis string of the plane tree rooted at its canonical root.  The
root's neighbours are listed counterclockwise; every other vertex lists its
children counterclockwise starting after its parent.  A leaf is ``()``.

The canonical code of a plane tree is the least such rooted code over every
choice of root dart and both orientations, comparing codes as integer
sequences with ``(`` = 1 and ``)`` = 0.
"""

from __future__ import annotations

from .core import HalinGraph, PlaneTree, build_halin

FORMAT = "halin1"
OPEN, CLOSE = 1, 0


class ParseError(ValueError):
    def __init__(self, offset: int, reason: str):
        super().__init__(f"byte {offset}: {reason}")
        self.offset = offset
        self.reason = reason


def rooted_code(tree: PlaneTree, root: int, first: int | None = None) -> list[int]:
    """Code of ``tree`` rooted at ``root``, root's neighbours starting at ``first``."""
    adj = tree.adjacency
    out = [OPEN]
    nbrs = adj[root]
    start = 0 if first is None else nbrs.index(first)
    # explicit stack: (vertex, parent, index into rotation, remaining count)
    stack = [(root, -1, start, len(nbrs))]
    while stack:
        v, p, i, left = stack.pop()
        if left == 0:
            out.append(CLOSE)
            continue
        nb = adj[v]
        c = nb[i % len(nb)]
        stack.append((v, p, i + 1, left - 1))
        out.append(OPEN)
        cn = adj[c]
        stack.append((c, v, cn.index(v) + 1, len(cn) - 1))
    return out


def canonical_root(tree: PlaneTree) -> tuple[tuple[int, ...], int, int, bool]:
    """``(code, root, first_neighbour, mirrored)`` of the least rooted code."""
    best = None
    for mirrored, t in ((False, tree), (True, tree.mirror())):
        for v in range(t.n):
            for w in t.adjacency[v]:
                code = tuple(rooted_code(t, v, w))
                if best is None or code < best[0]:
                    best = (code, v, w, mirrored)
    assert best is not None
    return best


def canonical_code(tree: PlaneTree | HalinGraph) -> tuple[int, ...]:
    if isinstance(tree, HalinGraph):
        tree = tree.tree
    return canonical_root(tree)[0]


def code_to_parens(code) -> str:
    return "".join("(" if c == OPEN else ")" for c in code)


def serialize(g: HalinGraph | PlaneTree) -> str:
    return f"{FORMAT} {code_to_parens(canonical_code(g))}"


def parse_tree(text: str) -> PlaneTree:
    """Parse ``halin1`` text into a plane tree numbered in preorder."""
    data = text.encode() if isinstance(text, str) else text
    pos = 0
    n_data = len(data)

    def skip_ws(i):
        while i < n_data and data[i : i + 1].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    tag = FORMAT.encode()
    if data[pos : pos + len(tag)] != tag:
        raise ParseError(pos, f"missing '{FORMAT}' header")
    pos += len(tag)
    if pos < n_data and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"(":
        raise ParseError(pos, f"unexpected byte {data[pos:pos + 1]!r} after header")

    adj: list[list[int]] = []
    stack: list[int] = []
    done = False
    while True:
        pos = skip_ws(pos)
        if pos >= n_data:
            break
        ch = data[pos : pos + 1]
        if done:
            raise ParseError(pos, "trailing data after tree")
        if ch == b"(":
            v = len(adj)
            adj.append([])
            if stack:
                p = stack[-1]
                adj[p].append(v)
                adj[v].append(p)
            stack.append(v)
        elif ch == b")":
            if not stack:
                raise ParseError(pos, "unbalanced: unexpected ')'")
            stack.pop()
            if not stack:
                done = True
        else:
            raise ParseError(pos, f"unexpected byte {ch!r}")
        pos += 1
    if stack:
        raise ParseError(pos, "unbalanced: missing ')'")
    if not adj:
        raise ParseError(pos, "empty tree")
    return PlaneTree.from_lists(adj)


def parse(text: str) -> HalinGraph:
    return build_halin(parse_tree(text))
