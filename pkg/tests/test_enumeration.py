import pytest

from conftest import brute_force_extremal, c4_brute
from halinturan.constructions import extremal_family, wheel
from halinturan.cycles import has_cycle_of_length
from halinturan.enumeration import (
    DEFAULT_LIMIT,
    ExtremalRecord,
    LimitExceeded,
    base_case_audit,
    check_limit,
    conjecture_scan,
    count_halin,
    count_halin_parallel,
    enumerate_halin,
    extremal_number,
)
from halinturan.textio import canonical_code, serialize


def test_smallest_counts():
    assert [serialize(g) for g in enumerate_halin(4)] == ["halin1 (()()())"]
    assert [serialize(g) for g in enumerate_halin(5)] == [serialize(wheel(4))]
    assert list(enumerate_halin(3)) == []


def test_counts_match_brute_force(brute_counts):
    for n, expected in brute_counts.items():
        assert count_halin(n) == expected, n


@pytest.mark.parametrize("n", range(4, 15))
def test_no_duplicate_codes(n):
    codes = [canonical_code(g) for g in enumerate_halin(n)]
    assert len(codes) == len(set(codes)) == count_halin(n)


@pytest.mark.parametrize("n", range(4, 14))
def test_forbid_filter_matches_full_stream(n):
    full = {serialize(g) for g in enumerate_halin(n) if not c4_brute(g.sorted_neighbors)}
    assert {serialize(g) for g in enumerate_halin(n, forbid=4)} == full
    for k in (3, 5, 6):
        full = {serialize(g) for g in enumerate_halin(n) if not has_cycle_of_length(g.sorted_neighbors, k)}
        assert {serialize(g) for g in enumerate_halin(n, forbid=k)} == full


def test_constructions_appear_in_stream():
    for n in range(4, 15):
        assert serialize(wheel(n - 1)) in {serialize(g) for g in enumerate_halin(n)}
    for n in (16, 17, 18):
        assert serialize(extremal_family(n)) in {serialize(g) for g in enumerate_halin(n, forbid=4)}


def test_parallel_count_agrees():
    assert count_halin_parallel(14, jobs=2) == count_halin(14)


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("k", [4, 5, 6])
def test_extremal_matches_brute_force(n, k):
    assert extremal_number(n, k).max_edges == brute_force_extremal(n, k)


def test_extremal_k4_none():
    rec = extremal_number(4, 4)
    assert rec.max_edges is None and rec.num_extremal == 0 and rec.enumerated_total == 1


@pytest.mark.parametrize("n, value", [(16, 25), (17, 26), (18, 28)])
def test_base_values(n, value):
    rec = extremal_number(n, 4)
    assert rec.max_edges == value
    from halinturan.textio import parse

    for w in rec.witnesses:
        g = parse(w)
        assert g.num_edges == value and not c4_brute(g.sorted_neighbors)


def test_parallel_extremal_is_identical():
    assert extremal_number(17, 4, jobs=2) == extremal_number(17, 4, jobs=1)


def test_record_round_trip():
    rec = extremal_number(12, 5)
    assert ExtremalRecord.from_dict(rec.to_dict()) == rec


def test_limits():
    with pytest.raises(LimitExceeded):
        check_limit(DEFAULT_LIMIT + 1)
    with pytest.raises(LimitExceeded):
        check_limit(21, limit=25)
    with pytest.warns(RuntimeWarning):
        check_limit(19, limit=19)
    with pytest.raises(LimitExceeded):
        list(enumerate_halin(19))


@pytest.mark.parametrize("n, claim_k, expected", [
    (16, 6, (24,)),
    (16, 4, (25,)),
    (18, 7, (27,)),
])
def test_audit_classes(n, claim_k, expected):
    rep = base_case_audit(n)
    assert rep.passed
    assert tuple(sorted(set(rep.classes[claim_k]))) == expected


def test_audit_empty_classes():
    assert 4 not in base_case_audit(17).classes
    assert 5 not in base_case_audit(16).classes
    rep18 = base_case_audit(18)
    assert max(rep18.classes) <= 7 and not {4, 5} & set(rep18.classes)


def test_audit_range():
    with pytest.raises(ValueError):
        base_case_audit(19)


def test_conjecture_rows():
    rows = conjecture_scan(range(4, 9))
    assert [r.n for r in rows] == [4, 5, 6, 7, 8]
    assert all(not r.in_stated_range for r in rows)
    for r in rows:
        assert r.value == brute_force_extremal(r.n, 6)
        assert r.exceeds == (r.value is not None and r.value > r.bound)
