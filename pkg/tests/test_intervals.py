from fractions import Fraction

import pytest

from stochrat import IntervalUnion, SplitMix64

F = Fraction


def iu(*pairs):
    return IntervalUnion.from_pairs([(F(a), F(b)) for a, b in pairs])


def test_empty():
    assert IntervalUnion.empty().is_empty
    assert iu().is_empty
    assert iu((1, 1)).is_empty
    assert str(iu()) == "(empty)"


def test_single_interval_membership():
    u = iu(("1/4", "1/2"))
    # half-open on the left, closed on the right
    assert not u.contains(F(1, 4))
    assert u.contains(F(1, 3))
    assert u.contains(F(1, 2))
    assert not u.contains(F(3, 5))


def test_merging_adjacent_and_overlapping():
    assert iu((0, "1/2"), ("1/2", 1)) == iu((0, 1))
    assert iu((0, "2/3"), ("1/3", 1)) == iu((0, 1))
    assert iu(("1/4", "1/2"), ("3/4", 1)).intervals == (
        (F(1, 4), F(1, 2)),
        (F(3, 4), F(1)),
    )


def test_canonical_form_ignores_insertion_order():
    a = iu((0, "1/6"), ("1/4", "1/2"))
    b = iu(("1/4", "1/2"), (0, "1/6"))
    assert a == b
    assert a.intervals == b.intervals


def test_insert():
    u = IntervalUnion.empty().insert(F(1, 2), F(3, 4)).insert(F(0), F(1, 2))
    assert u == iu((0, "3/4"))
    # inserting an empty interval is a no-op
    assert u.insert(F(1, 4), F(1, 4)) == u


def test_union_and_intersection_operators():
    a = iu((0, "1/2"))
    b = iu(("1/4", "3/4"))
    assert (a | b) == iu((0, "3/4"))
    assert (a & b) == iu(("1/4", "1/2"))
    assert (a & iu(("1/2", 1))).is_empty


def test_complement_within_unit():
    assert iu(("1/6", "1/4"), ("1/2", 1)).complement() == iu((0, "1/6"), ("1/4", "1/2"))
    assert iu().complement() == iu((0, 1))
    assert iu((0, 1)).complement().is_empty


def test_difference():
    a = iu((0, 1))
    b = iu(("1/3", "2/3"))
    assert a.difference(b) == iu((0, "1/3"), ("2/3", 1))
    assert b.difference(a).is_empty


def test_subset():
    small = iu(("1/3", "1/2"))
    big = iu((0, "1/2"), ("3/4", 1))
    assert small.is_subset(big)
    assert not big.is_subset(small)
    assert IntervalUnion.empty().is_subset(small)


def test_measure():
    assert iu().measure() == 0
    assert iu((0, 1)).measure() == 1
    assert iu(("1/6", "1/4"), ("1/2", 1)).measure() == F(1, 12) + F(1, 2)


def test_str_rendering():
    assert str(iu(("1/6", "1/4"), ("1/2", 1))) == "(1/6,1/4] ∪ (1/2,1]"


def test_json_round_trip():
    u = iu(("1/6", "1/4"), ("1/2", 1))
    assert IntervalUnion.from_json(u.to_json()) == u
    assert u.to_json() == [["1/6", "1/4"], ["1/2", "1"]]


def test_out_of_range_bounds_rejected():
    with pytest.raises(ValueError):
        iu(("-1/2", "1/2"))
    with pytest.raises(ValueError):
        iu((0, "3/2"))


def test_inverted_bounds_mean_empty():
    # formulas produce (lo, hi] with lo >= hi when no violation occurs
    assert iu(("1/2", "1/4")).is_empty


def random_union(gen, parts):
    pairs = []
    for _ in range(parts):
        a = F(gen.below(60), 60)
        b = F(gen.below(60), 60)
        if a > b:
            a, b = b, a
        pairs.append((a, b))
    return IntervalUnion.from_pairs(pairs)


def test_algebra_on_random_unions():
    gen = SplitMix64(2024)
    grid = [F(k, 120) for k in range(1, 121)]
    for _ in range(40):
        a = random_union(gen, 3)
        b = random_union(gen, 3)
        union = a | b
        inter = a & b
        diff = a.difference(b)
        for lam in grid:
            assert union.contains(lam) == (a.contains(lam) or b.contains(lam))
            assert inter.contains(lam) == (a.contains(lam) and b.contains(lam))
            assert diff.contains(lam) == (a.contains(lam) and not b.contains(lam))
        # inclusion-exclusion keeps the measures consistent
        assert union.measure() + inter.measure() == a.measure() + b.measure()
        # subset agrees with an empty difference
        assert a.is_subset(b) == diff.is_empty
        assert a.complement().measure() == 1 - a.measure()
