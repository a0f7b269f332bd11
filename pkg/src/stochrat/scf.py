"""Stochastic choice functions and their threshold correspondences.

A stochastic choice function (SCF) assigns each menu a probability
distribution over its members.  Two domains are supported:

* ``FULL``: every menu of size >= 2 over the universe (singletons are
  implicit and always pick their only member);
* ``PAIRWISE``: every two-element menu, as produced by binary choice
  experiments.

The central derived quantity is the *normalized likelihood* of x in S:
the choice probability of x divided by the largest choice probability in
S.  Thresholding it at lambda in (0, 1] yields a one-parameter family of
choice correspondences (the Fishburn family), shrinking as the threshold
rises; at lambda = 0 the correspondence is the support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .choice import (
    ChoiceCorrespondence,
    Menu,
    as_menu,
    check_axioms,
    menu_key,
    menu_str,
    sort_menus,
)
from .errors import CapacityError
from .rationals import parse_rational

FULL_UNIVERSE_CAP = 12
PAIRWISE_UNIVERSE_CAP = 64

_ZERO = Fraction(0)
_ONE = Fraction(1)

ProbLike = Union[Fraction, int, str]


class DomainKind(str, Enum):
    FULL = "full"
    PAIRWISE = "pairwise"


def required_menus(universe: Iterable[str], kind: DomainKind) -> list[Menu]:
    """All menus the given domain kind must cover, in canonical order."""
    labels = sorted({str(x) for x in universe})
    if kind is DomainKind.PAIRWISE:
        sizes: Iterable[int] = (2,)
    else:
        sizes = range(2, len(labels) + 1)
    menus = [
        frozenset(combo)
        for size in sizes
        for combo in itertools.combinations(labels, size)
    ]
    return sort_menus(menus)


def _to_fraction(value: ProbLike, context: str) -> Fraction:
    if isinstance(value, str):
        prob = parse_rational(value)
    else:
        try:
            prob = Fraction(value)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad probability {value!r} for {context}") from exc
    if prob < _ZERO or prob > _ONE:
        raise ValueError(f"probability {prob} for {context} outside [0, 1]")
    return prob


class StochasticChoiceFunction:
    """Validated menu-by-menu choice probabilities on a complete domain.

    ``probabilities`` maps menus to member -> probability mappings.
    Members omitted from a menu's mapping get probability zero.  Values
    may be Fractions, ints, or rational strings (parsed exactly).
    Validation is eager: the domain must be complete for its kind, every
    menu must sum to one, and the universe size must respect the cap.
    """

    def __init__(
        self,
        probabilities: Mapping[Iterable[str], Mapping[str, ProbLike]],
        domain_kind: DomainKind = DomainKind.FULL,
        universe: Optional[Iterable[str]] = None,
        max_universe: Optional[int] = None,
    ) -> None:
        domain_kind = DomainKind(domain_kind)
        table: dict[Menu, dict[str, Fraction]] = {}
        for raw_menu, dist in probabilities.items():
            menu = as_menu(raw_menu)
            if len(menu) < 2:
                raise ValueError(
                    f"menu {menu_str(menu)} has a single member; singleton menus "
                    "are implicit and must not be supplied"
                )
            if menu in table:
                raise ValueError(f"duplicate menu {menu_str(menu)}")
            row: dict[str, Fraction] = {x: _ZERO for x in sorted(menu)}
            for alt, value in dist.items():
                if alt not in menu:
                    raise ValueError(
                        f"alternative {alt!r} not a member of menu {menu_str(menu)}"
                    )
                row[alt] = _to_fraction(value, f"{alt!r} in {menu_str(menu)}")
            total = sum(row.values())
            if total != _ONE:
                raise ValueError(
                    f"probabilities on menu {menu_str(menu)} sum to {total}, not 1"
                )
            table[menu] = row

        members = set().union(*table.keys()) if table else set()
        if universe is None:
            universe_set = members
        else:
            universe_set = {str(x) for x in universe}
            if not members <= universe_set:
                raise ValueError("universe does not cover all menu members")
        labels = tuple(sorted(universe_set))

        if domain_kind is DomainKind.FULL:
            cap = max_universe if max_universe is not None else FULL_UNIVERSE_CAP
            minimum = 3
        else:
            cap = max_universe if max_universe is not None else PAIRWISE_UNIVERSE_CAP
            minimum = 2
        if len(labels) < minimum:
            raise ValueError(
                f"{domain_kind.value} domain needs at least {minimum} alternatives; "
                f"got {len(labels)}"
            )
        if len(labels) > cap:
            raise CapacityError(
                f"universe of {len(labels)} alternatives exceeds the "
                f"{domain_kind.value}-domain cap of {cap}"
            )

        needed = required_menus(labels, domain_kind)
        needed_set = set(needed)
        missing = [m for m in needed if m not in table]
        if missing:
            raise ValueError(
                f"incomplete {domain_kind.value} domain: missing menu "
                f"{menu_str(missing[0])}"
                + (f" and {len(missing) - 1} more" if len(missing) > 1 else "")
            )
        extra = sort_menus(set(table) - needed_set)
        if extra:
            raise ValueError(
                f"menu {menu_str(extra[0])} does not belong to the "
                f"{domain_kind.value} domain over {len(labels)} alternatives"
            )

        self._kind = domain_kind
        self._universe = labels
        self._menus = needed
        self._table = {m: table[m] for m in needed}
        # Normalized likelihoods are used everywhere downstream; build once.
        self._nlik: dict[Menu, dict[str, Fraction]] = {}
        for menu, row in self._table.items():
            top = max(row.values())
            self._nlik[menu] = {x: p / top for x, p in row.items()}

    # -- basic accessors ----------------------------------------------

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    @property
    def domain_kind(self) -> DomainKind:
        return self._kind

    def menus(self) -> list[Menu]:
        return list(self._menus)

    def _lookup(self, x: str, menu: Iterable[str]) -> tuple[Menu, str]:
        key = as_menu(menu)
        if x not in key:
            raise ValueError(f"alternative {x!r} not in menu {menu_str(key)}")
        if len(key) == 1:
            return key, x
        if key not in self._table:
            raise ValueError(f"menu {menu_str(key)} not in domain")
        return key, x

    def prob(self, x: str, menu: Iterable[str]) -> Fraction:
        """Choice probability of x from the menu (1 on singletons)."""
        key, x = self._lookup(x, menu)
        if len(key) == 1:
            return _ONE
        return self._table[key][x]

    def menu_probs(self, menu: Iterable[str]) -> dict[str, Fraction]:
        key = as_menu(menu)
        if len(key) == 1:
            return {next(iter(key)): _ONE}
        if key not in self._table:
            raise ValueError(f"menu {menu_str(key)} not in domain")
        return dict(self._table[key])

    def pair_prob(self, x: str, y: str) -> Fraction:
        """P(x beats y) on the two-element menu {x, y}."""
        return self.prob(x, (x, y))

    def max_prob(self, menu: Iterable[str]) -> Fraction:
        key = as_menu(menu)
        if len(key) == 1:
            return _ONE
        if key not in self._table:
            raise ValueError(f"menu {menu_str(key)} not in domain")
        return max(self._table[key].values())

    def normalized_likelihood(self, x: str, menu: Iterable[str]) -> Fraction:
        """Choice probability of x divided by the menu's best probability."""
        key, x = self._lookup(x, menu)
        if len(key) == 1:
            return _ONE
        return self._nlik[key][x]

    def likelihood_row(self, menu: Menu) -> dict[str, Fraction]:
        return dict(self._nlik[menu])

    def support(self, menu: Iterable[str]) -> frozenset[str]:
        key = as_menu(menu)
        if len(key) == 1:
            return key
        if key not in self._table:
            raise ValueError(f"menu {menu_str(key)} not in domain")
        return frozenset(x for x, p in self._table[key].items() if p > _ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StochasticChoiceFunction):
            return NotImplemented
        return (
            self._kind == other._kind
            and self._universe == other._universe
            and self._table == other._table
        )

    def __repr__(self) -> str:
        return (
            f"StochasticChoiceFunction(|X|={len(self._universe)}, "
            f"kind={self._kind.value}, menus={len(self._menus)})"
        )


# -- threshold machinery ------------------------------------------------


def _check_threshold(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if lam < _ZERO or lam > _ONE:
        raise ValueError(f"threshold {lam} outside [0, 1]")
    return lam


def fishburn_correspondence(
    scf: StochasticChoiceFunction, lam: Fraction
) -> ChoiceCorrespondence:
    """Threshold correspondence: keep x in S when its normalized likelihood
    reaches ``lam``.  At lam = 0 this is the support correspondence."""
    lam = _check_threshold(lam)
    table = {}
    for menu in scf.menus():
        row = scf._nlik[menu]
        if lam == _ZERO:
            chosen = frozenset(x for x, v in row.items() if v > _ZERO)
        else:
            chosen = frozenset(x for x, v in row.items() if v >= lam)
        table[menu] = chosen
    return ChoiceCorrespondence(table, universe=scf.universe)


def lambda_floor(scf: StochasticChoiceFunction) -> Fraction:
    """Smallest positive normalized likelihood.

    Thresholds at or below this value all produce the support
    correspondence, which makes the family continuous at zero; the
    equality is cheap, so it is asserted here rather than assumed.
    """
    floor = _ONE
    for menu in scf.menus():
        for value in scf._nlik[menu].values():
            if _ZERO < value < floor:
                floor = value
    assert fishburn_correspondence(scf, floor) == fishburn_correspondence(
        scf, _ZERO
    ), "support correspondence must persist up to the smallest positive likelihood"
    return floor


def critical_lambdas(scf: StochasticChoiceFunction) -> tuple[Fraction, ...]:
    """Sorted distinct positive normalized likelihoods plus the midpoints
    between consecutive ones.  The threshold correspondence is constant
    between consecutive critical values, so this grid is exhaustive."""
    values: set[Fraction] = set()
    for menu in scf.menus():
        for value in scf._nlik[menu].values():
            if value > _ZERO:
                values.add(value)
    ordered = sorted(values)
    grid = set(ordered)
    for a, b in zip(ordered, ordered[1:]):
        grid.add((a + b) / 2)
    return tuple(sorted(grid))


def threshold_cuts(scf: StochasticChoiceFunction) -> tuple[Fraction, ...]:
    """Sorted distinct positive normalized likelihoods (no midpoints).

    These are the right endpoints of the maximal threshold regions on
    which the correspondence family is constant; the last cut is always 1.
    """
    values: set[Fraction] = set()
    for menu in scf.menus():
        for value in scf._nlik[menu].values():
            if value > _ZERO:
                values.add(value)
    return tuple(sorted(values))


@dataclass(frozen=True)
class LambdaRationality:
    """Result of a single-threshold rationality check.

    ``failures`` lists (axiom, witness) pairs for the violated axioms, in
    the fixed order: contraction ("chernoff"), pairwise winner
    ("condorcet"), cycle composition ("transitivity").
    """

    rational: bool
    failures: tuple[tuple[str, tuple], ...]

    def __bool__(self) -> bool:
        return self.rational


def is_lambda_rational(
    scf: StochasticChoiceFunction, lam: Fraction
) -> LambdaRationality:
    """Check whether the threshold correspondence at ``lam`` is rational.

    This runs the deterministic axiom checks on the constructed
    correspondence; it is deliberately independent of the interval-set
    route in :mod:`stochrat.measure`, so the two can cross-validate.
    """
    correspondence = fishburn_correspondence(scf, lam)
    report = check_axioms(correspondence)
    failures: list[tuple[str, tuple]] = []
    if not report.chernoff:
        failures.append(("chernoff", report.chernoff_witness))
    if not report.condorcet:
        failures.append(("condorcet", report.condorcet_witness))
    if not report.no_cycle:
        failures.append(("transitivity", report.no_cycle_witness))
    return LambdaRationality(rational=not failures, failures=tuple(failures))
