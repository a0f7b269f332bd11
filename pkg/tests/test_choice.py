import itertools

import pytest

from stochrat import (
    CapacityError,
    ChoiceCorrespondence,
    Preorder,
    check_axioms,
    houtman_maks,
    is_rational,
    is_totally_rational,
    max_correspondence,
    SplitMix64,
)
from stochrat.choice import weak_order_levels

from oracles import (
    all_preorders,
    random_preorder,
    rationalizable_bruteforce,
    rationalized_by,
)


def corr(mapping):
    return ChoiceCorrespondence(
        {frozenset(menu): frozenset(chosen) for menu, chosen in mapping.items()}
    )


XYZ = ("x", "y", "z")
FULL3 = {("x", "y"), ("y", "z"), ("x", "z"), ("x", "y", "z")}


def full3(choices):
    return corr({menu: choices[menu] for menu in FULL3})


# -- validation ----------------------------------------------------------------


def test_choice_must_be_nonempty_subset():
    with pytest.raises(ValueError):
        corr({("x", "y"): ()})
    with pytest.raises(ValueError):
        corr({("x", "y"): ("z",)})


def test_singleton_menus_are_trivial():
    c = corr({("x",): ("x",), ("x", "y"): ("y",)})
    assert c.choice(frozenset(("x",))) == {"x"}
    assert is_rational(c)
    with pytest.raises(ValueError):
        corr({("x",): ("y",)})


# -- axioms on hand-built correspondences ---------------------------------------


def test_utility_maximizer_is_rational():
    c = full3(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("x",),
            ("x", "y", "z"): ("x",),
        }
    )
    report = check_axioms(c)
    assert report.all_hold
    assert is_rational(c)


def test_contraction_violation_detected():
    # chosen from the big menu but not from a submenu it belongs to
    c = full3(
        {
            ("x", "y"): ("y",),
            ("y", "z"): ("y",),
            ("x", "z"): ("x",),
            ("x", "y", "z"): ("x",),
        }
    )
    report = check_axioms(c)
    assert not report.chernoff
    menu, larger, alternative = report.chernoff_witness
    assert alternative == "x"
    assert menu == frozenset({"x", "y"})
    assert larger == frozenset({"x", "y", "z"})


def test_pairwise_winner_violation_detected():
    # x beats everything head-to-head yet loses the full menu
    c = full3(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("x",),
            ("x", "y", "z"): ("y",),
        }
    )
    report = check_axioms(c)
    assert not report.condorcet
    menu, alternative = report.condorcet_witness
    assert menu == frozenset(XYZ)
    assert alternative == "x"


def test_cycle_violation_detected():
    c = corr(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("z",),
        }
    )
    report = check_axioms(c)
    assert not report.no_cycle
    assert report.no_cycle_witness == ("x", "y", "z")
    assert not is_rational(c)


def test_indifference_is_allowed():
    c = full3(
        {
            ("x", "y"): ("x", "y"),
            ("y", "z"): ("y", "z"),
            ("x", "z"): ("x", "z"),
            ("x", "y", "z"): ("x", "y", "z"),
        }
    )
    assert is_rational(c)
    assert is_totally_rational(c)


def test_twin_correspondence_rational_but_not_totally():
    # y is incomparable to both x and x_plus, while x_plus dominates x
    c = corr(
        {
            ("x", "y"): ("x", "y"),
            ("x", "xp"): ("xp",),
            ("xp", "y"): ("xp", "y"),
            ("x", "xp", "y"): ("xp", "y"),
        }
    )
    assert is_rational(c)
    assert not is_totally_rational(c)


# -- preorders and generated correspondences ------------------------------------


def test_preorder_requires_transitivity():
    with pytest.raises(ValueError):
        Preorder(XYZ, {("x", "y"), ("y", "z")})


def test_preorder_closure():
    p = Preorder.closure(XYZ, {("x", "y"), ("y", "z")})
    assert p.geq("x", "z")
    assert p.strictly_better("x", "z")
    assert not p.geq("z", "x")


def test_max_correspondence_of_weak_order():
    p = Preorder.closure(XYZ, {("x", "y"), ("y", "x"), ("x", "z"), ("y", "z")})
    c = max_correspondence(p, [frozenset(m) for m in FULL3])
    assert c.choice(frozenset(("x", "y"))) == {"x", "y"}
    assert c.choice(frozenset(XYZ)) == {"x", "y"}
    assert c.choice(frozenset(("y", "z"))) == {"y"}


def test_max_correspondence_always_rational():
    gen = SplitMix64(17)
    labels = ("a", "b", "c", "d", "e")
    menus = [
        frozenset(m)
        for k in range(2, 6)
        for m in itertools.combinations(labels, k)
    ]
    for _ in range(60):
        relation = random_preorder(gen, labels)
        pairs = {(a, b) for a, b in relation if a != b}
        p = Preorder(labels, pairs)
        c = max_correspondence(p, menus)
        assert is_rational(c)


def test_axioms_match_bruteforce_rationalizability():
    # every 4-menu correspondence on three alternatives, both routes
    menus = [frozenset(m) for m in FULL3]
    options = {
        menu: [
            frozenset(s)
            for k in range(1, len(menu) + 1)
            for s in itertools.combinations(sorted(menu), k)
        ]
        for menu in menus
    }
    agree = 0
    for picks in itertools.product(*(options[m] for m in menus)):
        c = ChoiceCorrespondence(dict(zip(menus, picks)))
        assert is_rational(c) == rationalizable_bruteforce(c)
        agree += 1
    assert agree == 3 * 3 * 3 * 7


# -- total rationality -----------------------------------------------------------


def test_weak_order_levels_counts():
    # 3 alternatives admit 13 weak orders
    assert sum(1 for _ in weak_order_levels(("a", "b", "c"))) == 13
    assert sum(1 for _ in weak_order_levels(("a", "b"))) == 3


def test_totally_rational_implies_rational():
    menus = [frozenset(m) for m in FULL3]
    options = {
        menu: [
            frozenset(s)
            for k in range(1, len(menu) + 1)
            for s in itertools.combinations(sorted(menu), k)
        ]
        for menu in menus
    }
    seen_gap = False
    for picks in itertools.product(*(options[m] for m in menus)):
        c = ChoiceCorrespondence(dict(zip(menus, picks)))
        if is_totally_rational(c):
            assert is_rational(c)
        elif is_rational(c):
            seen_gap = True
    assert seen_gap  # rationality is strictly weaker


def test_total_rationality_capacity():
    labels = [f"a{i}" for i in range(7)]
    c = ChoiceCorrespondence({frozenset(labels): frozenset(labels)})
    with pytest.raises(CapacityError):
        is_totally_rational(c)


# -- Houtman-Maks ----------------------------------------------------------------


def test_houtman_maks_zero_iff_rational():
    c = full3(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("x",),
            ("x", "y", "z"): ("x",),
        }
    )
    assert houtman_maks(c) == 0


def test_houtman_maks_single_removal():
    cycle = corr(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("z",),
        }
    )
    assert houtman_maks(cycle) == 1

    # same cycle plus a triple menu; dropping one pair menu still fixes it
    with_triple = corr(
        {
            ("x", "y"): ("x",),
            ("y", "z"): ("y",),
            ("x", "z"): ("z",),
            ("x", "y", "z"): ("x",),
        }
    )
    assert houtman_maks(with_triple) == 1


def test_houtman_maks_capacity():
    menus = {
        frozenset((f"m{i}", f"m{i+1}")): frozenset((f"m{i}",)) for i in range(25)
    }
    with pytest.raises(CapacityError):
        houtman_maks(ChoiceCorrespondence(menus))


# -- oracle sanity ----------------------------------------------------------------


def test_preorder_counts():
    assert len(all_preorders(("a",))) == 1
    assert len(all_preorders(("a", "b"))) == 4
    assert len(all_preorders(("a", "b", "c"))) == 29


def test_random_preorders_are_preorders():
    gen = SplitMix64(5)
    labels = ("a", "b", "c", "d")
    for _ in range(50):
        rel = random_preorder(gen, labels)
        for a, b in rel:
            for c in labels:
                if (b, c) in rel:
                    assert (a, c) in rel


def test_rationalized_by_matches_max():
    p = Preorder.closure(XYZ, {("x", "y")})
    menus = [frozenset(m) for m in FULL3]
    c = max_correspondence(p, menus)
    relation = frozenset(
        (a, b) for a in XYZ for b in XYZ if p.geq(a, b)
    )
    assert rationalized_by(c, relation)
