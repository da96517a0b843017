import pytest
from hypothesis import given, strategies as st

from conftest import plane_trees
from halinturan.constructions import base_tree, wheel
from halinturan.core import build_halin
from halinturan.textio import (
    ParseError,
    canonical_code,
    parse,
    parse_tree,
    rooted_code,
    serialize,
)


def test_k4_text():
    assert serialize(wheel(3)) == "halin1 (()()())"


def test_wheel_text():
    assert serialize(wheel(5)) == "halin1 (()()()()())"


@pytest.mark.parametrize("text, offset", [
    ("halin1 (()", 10),
    ("halin1 ())", 9),
    ("halin2 (()()())", 0),
    ("halin1 (()x)", 10),
    ("halin1 (()()()) ()", 16),
    ("halin1", 6),
])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.offset == offset
    assert str(e.value).startswith(f"byte {offset}:")


def test_whitespace_tolerated():
    assert serialize(parse("  halin1 ( () ( )\n()) \n")) == "halin1 (()()())"


@given(plane_trees())
def test_round_trip(t):
    s = serialize(t)
    again = parse(s)
    assert serialize(again) == s
    assert again.num_edges == build_halin(t).num_edges


@given(plane_trees(), st.data())
def test_code_invariant_under_symmetry(t, data):
    # relabelling, rerooting and reflecting must not change the code
    perm = data.draw(st.permutations(range(t.n)))
    inv = {old: new for new, old in enumerate(perm)}
    adj = [None] * t.n
    for old in range(t.n):
        adj[inv[old]] = [inv[w] for w in t.adjacency[old]]
    from halinturan.core import PlaneTree

    relabelled = PlaneTree.from_lists(adj)
    assert canonical_code(relabelled) == canonical_code(t)
    assert canonical_code(t.mirror()) == canonical_code(t)


@given(plane_trees())
def test_canonical_code_is_min_rooted_code(t):
    code = canonical_code(t)
    for v in range(t.n):
        for w in t.adjacency[v]:
            assert code <= tuple(rooted_code(t, v, w))


def test_base_trees_round_trip():
    for name in ("t16", "t17", "t18"):
        g = build_halin(base_tree(name).tree)
        assert parse(serialize(g)).n == g.n
        assert parse_tree(serialize(g)).n == g.n
