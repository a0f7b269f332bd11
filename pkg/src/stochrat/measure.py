"""Threshold-set analysis of stochastic choice functions.

For each of the three rationality axioms there is an exactly computable
union of half-open intervals: the set of thresholds at which the
threshold correspondence violates that axiom.  Their union is the
*irrationality set*; its complement in (0, 1] is where the correspondence
is rational, and one minus its length is the *rationality index*.

The interval formulas work directly on normalized likelihoods, so the
whole analysis is exact rational arithmetic.  The contraction set is
enumerated over nested menu pairs differing by one element; a chain
argument shows larger gaps never contribute new thresholds, and the full
enumeration is kept behind a flag as a cross-check.

Comparing two subjects means comparing irrationality sets by inclusion:
smaller (as a set) is more rational.  The induced partial order is
reported as a verdict plus the two set differences that justify it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .choice import Menu, menu_key
from .intervals import IntervalUnion
from .scf import DomainKind, StochasticChoiceFunction

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


# -- the three axiom threshold sets --------------------------------------


def chernoff_set(
    scf: StochasticChoiceFunction, full_pairs: bool = False
) -> IntervalUnion:
    """Thresholds at which contraction consistency fails.

    For nested menus S within T and x in S the violating thresholds are
    (nlik(x, S), nlik(x, T)].  With ``full_pairs`` False only pairs with
    |T| = |S| + 1 are enumerated, which yields the same union; the full
    enumeration is retained for cross-checks.
    """
    if scf.domain_kind is DomainKind.PAIRWISE:
        return IntervalUnion.empty()
    pairs = []
    if full_pairs:
        menus = scf.menus()
        for large in menus:
            if len(large) < 3:
                continue
            for small in menus:
                if small < large:
                    row_small = scf.likelihood_row(small)
                    row_large = scf.likelihood_row(large)
                    for x in small:
                        pairs.append((row_small[x], row_large[x]))
    else:
        for large in scf.menus():
            if len(large) < 3:
                continue
            row_large = scf.likelihood_row(large)
            for dropped in large:
                small = large - {dropped}
                row_small = scf.likelihood_row(small)
                for x in small:
                    pairs.append((row_small[x], row_large[x]))
    return IntervalUnion.from_pairs(pairs)


def condorcet_set(scf: StochasticChoiceFunction) -> IntervalUnion:
    """Thresholds at which the pairwise-winner axiom fails.

    For a menu S and x in S the violating thresholds run from nlik(x, S)
    up to the smallest head-to-head normalized likelihood of x against
    the other members of S.
    """
    if scf.domain_kind is DomainKind.PAIRWISE:
        return IntervalUnion.empty()
    pairs = []
    for menu in scf.menus():
        if len(menu) < 3:
            continue  # on a two-element menu the bound equals the start
        row = scf.likelihood_row(menu)
        for x in menu:
            bound = min(
                scf.normalized_likelihood(x, (x, y)) for y in menu if y != x
            )
            pairs.append((row[x], bound))
    return IntervalUnion.from_pairs(pairs)


def transitivity_set(scf: StochasticChoiceFunction) -> IntervalUnion:
    """Thresholds at which strict pairwise preference fails to compose.

    For an ordered triple (x, y, z): above both nlik(y, {x,y}) and
    nlik(z, {y,z}) the correspondence reveals x over y over z strictly, so
    any threshold still keeping z against x, i.e. up to nlik(z, {x,z}),
    witnesses a cycle.
    """
    pairs = []
    nlik = scf.normalized_likelihood
    for x, y, z in itertools.permutations(scf.universe, 3):
        lo = max(nlik(y, (x, y)), nlik(z, (y, z)))
        hi = nlik(z, (x, z))
        pairs.append((lo, hi))
    return IntervalUnion.from_pairs(pairs)


# -- decomposition and index ---------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A concrete violation pinned to one maximal irrationality interval.

    ``axiom`` is "chernoff", "condorcet" or "transitivity"; ``detail`` is
    the lexicographically least violating tuple of that axiom evaluated at
    the interval's right endpoint.  Tuple shapes follow
    :class:`stochrat.choice.AxiomReport`.
    """

    interval: tuple[Fraction, Fraction]
    axiom: str
    detail: tuple


@dataclass(frozen=True)
class IrrationalitySets:
    """Per-axiom threshold sets, their union, and one witness per part."""

    chernoff: IntervalUnion
    condorcet: IntervalUnion
    transitivity: IntervalUnion
    union: IntervalUnion
    witnesses: tuple[Witness, ...]

    @property
    def maximally_rational(self) -> bool:
        return self.union.is_empty

    @property
    def minimally_rational(self) -> bool:
        return self.union.measure() == _ONE


def _least_chernoff_violation(
    scf: StochasticChoiceFunction, lam: Fraction
) -> tuple:
    best: Optional[tuple] = None
    best_key = None
    menus = scf.menus()
    for small in menus:
        row_small = scf.likelihood_row(small)
        for large in menus:
            if not small < large:
                continue
            row_large = scf.likelihood_row(large)
            for x in small:
                if row_small[x] < lam <= row_large[x]:
                    key = (menu_key(small), menu_key(large), x)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = (small, large, x)
    assert best is not None, "witness requested at a non-violating threshold"
    return best


def _least_condorcet_violation(
    scf: StochasticChoiceFunction, lam: Fraction
) -> tuple:
    best: Optional[tuple] = None
    best_key = None
    for menu in scf.menus():
        if len(menu) < 3:
            continue
        row = scf.likelihood_row(menu)
        for x in menu:
            bound = min(
                scf.normalized_likelihood(x, (x, y)) for y in menu if y != x
            )
            if row[x] < lam <= bound:
                key = (menu_key(menu), x)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (menu, x)
    assert best is not None, "witness requested at a non-violating threshold"
    return best


def _least_transitivity_violation(
    scf: StochasticChoiceFunction, lam: Fraction
) -> tuple:
    nlik = scf.normalized_likelihood
    for x, y, z in itertools.permutations(scf.universe, 3):
        lo = max(nlik(y, (x, y)), nlik(z, (y, z)))
        if lo < lam <= nlik(z, (x, z)):
            return (x, y, z)
    raise AssertionError("witness requested at a non-violating threshold")


def irrationality_sets(
    scf: StochasticChoiceFunction, full_pairs: bool = False
) -> IrrationalitySets:
    """Compute the three axiom threshold sets and their union.

    Each maximal interval of the union gets one witness, found at the
    interval's right endpoint; axioms are tried in the fixed order
    contraction, pairwise winner, cycle composition.
    """
    ch = chernoff_set(scf, full_pairs=full_pairs)
    con = condorcet_set(scf)
    st = transitivity_set(scf)
    union = ch | con | st
    witnesses = []
    for lo, hi in union:
        if ch.contains(hi):
            witnesses.append(
                Witness((lo, hi), "chernoff", _least_chernoff_violation(scf, hi))
            )
        elif con.contains(hi):
            witnesses.append(
                Witness((lo, hi), "condorcet", _least_condorcet_violation(scf, hi))
            )
        else:
            witnesses.append(
                Witness(
                    (lo, hi),
                    "transitivity",
                    _least_transitivity_violation(scf, hi),
                )
            )
    return IrrationalitySets(ch, con, st, union, tuple(witnesses))


def rationality_index(scf: StochasticChoiceFunction) -> Fraction:
    """One minus the length of the irrationality set.  1 means rational at
    every threshold, 0 means rational at none."""
    return _ONE - irrationality_sets(scf).union.measure()


# -- comparisons -----------------------------------------------------------


class Verdict(str, Enum):
    LEFT_MORE_RATIONAL = "LeftMoreRational"
    RIGHT_MORE_RATIONAL = "RightMoreRational"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"

    def mirror(self) -> "Verdict":
        if self is Verdict.LEFT_MORE_RATIONAL:
            return Verdict.RIGHT_MORE_RATIONAL
        if self is Verdict.RIGHT_MORE_RATIONAL:
            return Verdict.LEFT_MORE_RATIONAL
        return self


@dataclass(frozen=True)
class ComparisonResult:
    """Outcome of an inclusion comparison between two threshold sets.

    ``left_minus_right`` collects the thresholds where the left subject is
    strictly worse (irrational while the right is not), and symmetrically
    for ``right_minus_left``.  The verdict is derived purely from which of
    the two differences is empty.
    """

    verdict: Verdict
    left_minus_right: IntervalUnion
    right_minus_left: IntervalUnion

    @classmethod
    def from_sets(
        cls, left: IntervalUnion, right: IntervalUnion
    ) -> "ComparisonResult":
        lmr = left.difference(right)
        rml = right.difference(left)
        if lmr.is_empty and rml.is_empty:
            verdict = Verdict.EQUIVALENT
        elif lmr.is_empty:
            verdict = Verdict.LEFT_MORE_RATIONAL
        elif rml.is_empty:
            verdict = Verdict.RIGHT_MORE_RATIONAL
        else:
            verdict = Verdict.INCOMPARABLE
        return cls(verdict, lmr, rml)


def compare(
    left: StochasticChoiceFunction, right: StochasticChoiceFunction
) -> ComparisonResult:
    """Inclusion comparison of irrationality sets.  The two subjects may
    live on different universes; only the threshold sets matter."""
    return ComparisonResult.from_sets(
        irrationality_sets(left).union, irrationality_sets(right).union
    )


@dataclass(frozen=True)
class MultiComparison:
    """All pairwise verdicts for a batch of named subjects.

    ``classes`` groups names whose irrationality sets are equal, ordered
    by least member; ``hasse_edges`` lists the cover pairs of the strict
    more-rational order on classes, each edge as (more rational
    representative, less rational representative).
    """

    names: tuple[str, ...]
    verdicts: dict[tuple[str, str], Verdict]
    classes: tuple[tuple[str, ...], ...]
    hasse_edges: tuple[tuple[str, str], ...]

    def verdict(self, left: str, right: str) -> Verdict:
        return self.verdicts[(left, right)]


def compare_many(
    subjects: (
        Mapping[str, StochasticChoiceFunction]
        | Sequence[tuple[str, StochasticChoiceFunction]]
    ),
) -> MultiComparison:
    pairs = list(subjects.items()) if isinstance(subjects, Mapping) else list(subjects)
    names = [name for name, _ in pairs]
    if len(set(names)) != len(names):
        raise ValueError("subject names must be distinct")
    order = sorted(names)
    unions = {
        name: irrationality_sets(scf).union for name, scf in pairs
    }

    verdicts: dict[tuple[str, str], Verdict] = {}
    for a, b in itertools.combinations(order, 2):
        result = ComparisonResult.from_sets(unions[a], unions[b])
        verdicts[(a, b)] = result.verdict
        verdicts[(b, a)] = result.verdict.mirror()

    # Equivalence classes by equality of the threshold sets.
    classes: list[list[str]] = []
    seen: dict[tuple, int] = {}
    for name in order:
        key = unions[name].intervals
        if key in seen:
            classes[seen[key]].append(name)
        else:
            seen[key] = len(classes)
            classes.append([name])
    classes.sort(key=lambda group: group[0])
    class_tuples = tuple(tuple(group) for group in classes)

    def strictly_above(i: int, j: int) -> bool:
        a = unions[class_tuples[i][0]]
        b = unions[class_tuples[j][0]]
        return a.is_subset(b) and a != b

    edges = []
    count = len(class_tuples)
    for i in range(count):
        for j in range(count):
            if i == j or not strictly_above(i, j):
                continue
            covered = any(
                strictly_above(i, k) and strictly_above(k, j)
                for k in range(count)
                if k not in (i, j)
            )
            if not covered:
                edges.append((class_tuples[i][0], class_tuples[j][0]))
    edges.sort()
    return MultiComparison(tuple(order), verdicts, class_tuples, tuple(edges))


# -- pairwise structure diagnostics ---------------------------------------


@dataclass(frozen=True)
class TransitivityFlags:
    """Which head-to-head transitivity notions the subject satisfies.

    Premises quantify over ordered triples (x, y, z) with P(x over y) and
    P(y over z) at least one half; the "almost" variants require the
    premises strictly above one half.  Conclusions bound P(x over z) below
    by one half (weak), the smaller premise (moderate), or the larger
    premise (strong).
    """

    weak: bool
    almost_weak: bool
    moderate: bool
    almost_moderate: bool
    strong: bool


def classify_transitivity(scf: StochasticChoiceFunction) -> TransitivityFlags:
    weak = almost_weak = moderate = almost_moderate = strong = True
    for x, y, z in itertools.permutations(scf.universe, 3):
        p_xy = scf.pair_prob(x, y)
        p_yz = scf.pair_prob(y, z)
        p_xz = scf.pair_prob(x, z)
        if p_xy >= _HALF and p_yz >= _HALF:
            if p_xz < _HALF:
                weak = False
            if p_xz < min(p_xy, p_yz):
                moderate = False
            if p_xz < max(p_xy, p_yz):
                strong = False
        if p_xy > _HALF and p_yz > _HALF:
            if p_xz < _HALF:
                almost_weak = False
            if p_xz < min(p_xy, p_yz):
                almost_moderate = False
    return TransitivityFlags(weak, almost_weak, moderate, almost_moderate, strong)


@dataclass(frozen=True)
class TriangularResult:
    holds: bool
    witness: Optional[tuple[str, str, str]]


def triangular_condition(scf: StochasticChoiceFunction) -> TriangularResult:
    """Check P(x over y) + P(y over z) + P(z over x) <= 2 on every ordered
    triple; a necessary condition for mixtures of rankings when the
    universe has at most five alternatives."""
    two = Fraction(2)
    for x, y, z in itertools.permutations(scf.universe, 3):
        total = scf.pair_prob(x, y) + scf.pair_prob(y, z) + scf.pair_prob(z, x)
        if total > two:
            return TriangularResult(False, (x, y, z))
    return TriangularResult(True, None)


# -- selectivity -----------------------------------------------------------


def _nested_menu_pairs(
    scf: StochasticChoiceFunction,
) -> Iterable[tuple[Menu, Menu]]:
    menus = scf.menus()
    for large in menus:
        if len(large) < 3:
            continue
        for small in menus:
            if small < large:
                yield small, large


def is_selective_in_contractions(scf: StochasticChoiceFunction) -> bool:
    """Relative likelihood of a worse against a better alternative never
    drops when the menu shrinks.  Ratios are compared by cross
    multiplication, so zero probabilities need no special casing.
    Vacuously true on the pairwise domain."""
    if scf.domain_kind is DomainKind.PAIRWISE:
        return True
    for small, large in _nested_menu_pairs(scf):
        probs_large = scf.menu_probs(large)
        probs_small = scf.menu_probs(small)
        for x, y in itertools.permutations(sorted(small), 2):
            if probs_large[x] > probs_large[y]:
                if probs_large[y] * probs_small[x] < probs_small[y] * probs_large[x]:
                    return False
    return True


def is_selective_in_expansions(scf: StochasticChoiceFunction) -> bool:
    """Relative likelihood of a worse against a better alternative never
    rises when the menu grows.  Vacuously true on the pairwise domain."""
    if scf.domain_kind is DomainKind.PAIRWISE:
        return True
    for small, large in _nested_menu_pairs(scf):
        probs_large = scf.menu_probs(large)
        probs_small = scf.menu_probs(small)
        for x, y in itertools.permutations(sorted(small), 2):
            if probs_small[x] > probs_small[y]:
                if probs_small[y] * probs_large[x] < probs_large[y] * probs_small[x]:
                    return False
    return True
