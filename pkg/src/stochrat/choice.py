"""Deterministic choice correspondences and their rationality tests.

A choice correspondence maps each menu in its domain to a nonempty subset
of that menu.  Rationality here means consistency with *some* preorder
(reflexive and transitive, completeness not required): there must exist a
preorder whose maximal elements on every menu are exactly the chosen set.

For correspondences this is equivalent to three testable axioms, and the
equivalence is what :func:`is_rational` relies on:

* contraction consistency: anything chosen from a menu is still chosen
  from any present sub-menu it belongs to;
* pairwise-winner consistency: an alternative that is chosen in every
  present head-to-head against the members of a menu is chosen from that
  menu;
* no strict cycles: uniquely-revealed strict preference composes across
  pairs.

On restricted domains every quantifier runs over the menus that are
actually present.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

from .errors import CapacityError

Menu = frozenset[str]

TOTAL_RATIONALITY_CAP = 6
HOUTMAN_MAKS_CAP = 20


def as_menu(items: Iterable[str]) -> Menu:
    """Normalize an iterable of labels into a menu, validating labels."""
    labels = list(items)
    if not labels:
        raise ValueError("a menu must contain at least one alternative")
    for label in labels:
        if not isinstance(label, str) or not label:
            raise ValueError(f"alternative labels must be nonempty strings: {label!r}")
    menu = frozenset(labels)
    if len(menu) != len(labels):
        raise ValueError(f"duplicate alternative in menu: {sorted(labels)}")
    return menu


def menu_key(menu: Menu) -> tuple[str, ...]:
    """Canonical sort key: the sorted label tuple."""
    return tuple(sorted(menu))


def sort_menus(menus: Iterable[Menu]) -> list[Menu]:
    """Menus in display order: by size, then by labels."""
    return sorted(menus, key=lambda m: (len(m), menu_key(m)))


def menu_str(menu: Menu) -> str:
    return "{" + ",".join(sorted(menu)) + "}"


class ChoiceCorrespondence:
    """Menu -> chosen subset, with eager validation.

    ``universe`` defaults to the union of all menu members; it may be given
    explicitly when the correspondence is a restriction of something
    defined on a larger alternative set.
    """

    def __init__(
        self,
        choices: Mapping[Iterable[str], Iterable[str]],
        universe: Optional[Iterable[str]] = None,
    ) -> None:
        table: dict[Menu, frozenset[str]] = {}
        for raw_menu, raw_chosen in choices.items():
            menu = as_menu(raw_menu)
            if menu in table:
                raise ValueError(f"duplicate menu {menu_str(menu)}")
            chosen = frozenset(raw_chosen)
            if not chosen:
                raise ValueError(f"empty choice set for menu {menu_str(menu)}")
            if not chosen <= menu:
                stray = sorted(chosen - menu)
                raise ValueError(
                    f"chosen alternatives {stray} not in menu {menu_str(menu)}"
                )
            table[menu] = chosen
        members = set().union(*table.keys()) if table else set()
        if universe is None:
            universe_set = members
        else:
            universe_set = {str(x) for x in universe}
            if not members <= universe_set:
                raise ValueError("universe does not cover all menu members")
        self._table = dict(sorted(table.items(), key=lambda kv: menu_key(kv[0])))
        self._universe = tuple(sorted(universe_set))

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    @property
    def domain(self) -> frozenset[Menu]:
        return frozenset(self._table)

    def menus(self) -> list[Menu]:
        return sort_menus(self._table)

    def choice(self, menu: Iterable[str]) -> frozenset[str]:
        key = as_menu(menu)
        try:
            return self._table[key]
        except KeyError:
            raise ValueError(f"menu {menu_str(key)} not in domain") from None

    def has_menu(self, menu: Menu) -> bool:
        return menu in self._table

    def without(self, removed: Iterable[Menu]) -> "ChoiceCorrespondence":
        """Restriction of the correspondence to domain minus ``removed``."""
        gone = {as_menu(m) for m in removed}
        kept = {m: c for m, c in self._table.items() if m not in gone}
        return ChoiceCorrespondence(kept, universe=self._universe)

    def as_dict(self) -> dict[Menu, frozenset[str]]:
        return dict(self._table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChoiceCorrespondence):
            return NotImplemented
        return self._universe == other._universe and self._table == other._table

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{menu_str(m)}->{menu_str(c)}" for m, c in self._table.items()
        )
        return f"ChoiceCorrespondence({inner})"


# -- axioms ------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the three axiom checks, with minimal witnesses.

    Witness shapes: contraction (sub_menu, menu, alternative); pairwise
    winner (menu, alternative); cycle (a, b, c).  Each witness is the
    lexicographically least violating tuple under the label ordering, or
    None when the axiom holds.
    """

    chernoff: bool
    chernoff_witness: Optional[tuple]
    condorcet: bool
    condorcet_witness: Optional[tuple]
    no_cycle: bool
    no_cycle_witness: Optional[tuple]

    @property
    def all_hold(self) -> bool:
        return self.chernoff and self.condorcet and self.no_cycle


def _chernoff_violations(c: ChoiceCorrespondence) -> Iterator[tuple]:
    menus = sorted(c.domain, key=menu_key)
    for small in menus:
        chosen_small = c.choice(small)
        for large in menus:
            if small == large or not small < large:
                continue
            lost = (c.choice(large) & small) - chosen_small
            for x in sorted(lost):
                yield (small, large, x)


def _condorcet_violations(c: ChoiceCorrespondence) -> Iterator[tuple]:
    domain = c.domain
    for menu in sorted(domain, key=menu_key):
        chosen = c.choice(menu)
        for x in sorted(menu):
            if x in chosen:
                continue
            wins_all = True
            for y in menu:
                if y == x:
                    continue
                pair = frozenset((x, y))
                if pair in domain and x not in c.choice(pair):
                    wins_all = False
                    break
            if wins_all:
                yield (menu, x)


def _cycle_violations(c: ChoiceCorrespondence) -> Iterator[tuple]:
    domain = c.domain
    labels = c.universe
    for a, b, z in itertools.permutations(labels, 3):
        ab = frozenset((a, b))
        bz = frozenset((b, z))
        az = frozenset((a, z))
        if ab not in domain or bz not in domain or az not in domain:
            continue
        if c.choice(ab) == {a} and c.choice(bz) == {b} and c.choice(az) != {a}:
            yield (a, b, z)


def check_axioms(c: ChoiceCorrespondence) -> AxiomReport:
    """Run all three axiom checks, collecting the least witness of each."""
    chernoff_w = next(_chernoff_violations(c), None)
    condorcet_w = next(_condorcet_violations(c), None)
    cycle_w = next(_cycle_violations(c), None)
    return AxiomReport(
        chernoff=chernoff_w is None,
        chernoff_witness=chernoff_w,
        condorcet=condorcet_w is None,
        condorcet_witness=condorcet_w,
        no_cycle=cycle_w is None,
        no_cycle_witness=cycle_w,
    )


def is_rational(c: ChoiceCorrespondence) -> bool:
    """True when some preorder generates the correspondence (axioms hold)."""
    if next(_chernoff_violations(c), None) is not None:
        return False
    if next(_condorcet_violations(c), None) is not None:
        return False
    return next(_cycle_violations(c), None) is None


# -- preorders ----------------------------------------------------------


class Preorder:
    """A reflexive transitive binary relation on a finite label set.

    ``pairs`` lists the related ordered pairs (a, b) meaning "a is at
    least as good as b".  The diagonal is added automatically;
    transitivity is validated, not repaired (see :meth:`closure`).
    """

    def __init__(self, universe: Iterable[str], pairs: Iterable[tuple[str, str]]):
        self._universe = tuple(sorted({str(x) for x in universe}))
        base = {(str(a), str(b)) for a, b in pairs}
        members = set(self._universe)
        for a, b in base:
            if a not in members or b not in members:
                raise ValueError(f"pair ({a},{b}) outside the universe")
        base |= {(x, x) for x in self._universe}
        for a, b in base:
            for c_ in self._universe:
                if (b, c_) in base and (a, c_) not in base:
                    raise ValueError(
                        f"relation is not transitive: ({a},{b}) and ({b},{c_}) "
                        f"present but ({a},{c_}) missing"
                    )
        self._pairs = frozenset(base)

    @classmethod
    def closure(
        cls, universe: Iterable[str], pairs: Iterable[tuple[str, str]]
    ) -> "Preorder":
        """Build the smallest preorder containing ``pairs``."""
        labels = sorted({str(x) for x in universe})
        rel = {(str(a), str(b)) for a, b in pairs}
        rel |= {(x, x) for x in labels}
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c_ in labels:
                    if (b, c_) in rel and (a, c_) not in rel:
                        rel.add((a, c_))
                        changed = True
        return cls(labels, rel)

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    def geq(self, a: str, b: str) -> bool:
        return (a, b) in self._pairs

    def strictly_better(self, a: str, b: str) -> bool:
        return (a, b) in self._pairs and (b, a) not in self._pairs

    def maximal(self, menu: Iterable[str]) -> frozenset[str]:
        """Members of the menu not strictly dominated within it."""
        items = as_menu(menu)
        return frozenset(
            x for x in items if not any(self.strictly_better(y, x) for y in items)
        )


def max_correspondence(
    order: Preorder, menus: Iterable[Menu]
) -> ChoiceCorrespondence:
    """The correspondence choosing the maximal elements of each menu."""
    table = {menu: order.maximal(menu) for menu in menus}
    return ChoiceCorrespondence(table, universe=order.universe)


def weak_order_levels(universe: Iterable[str]) -> Iterator[dict[str, int]]:
    """Every complete preorder on the universe, as label -> level maps.

    Level 0 is the best indifference class; each map is onto a contiguous
    level range.  Emitted in a deterministic order; the count for n labels
    is the n-th Fubini number.
    """
    labels = tuple(sorted({str(x) for x in universe}))
    n = len(labels)
    if n == 0:
        yield {}
        return
    for depth in range(1, n + 1):
        for assignment in itertools.product(range(depth), repeat=n):
            if len(set(assignment)) == depth:
                yield dict(zip(labels, assignment))


def is_totally_rational(
    c: ChoiceCorrespondence, cap: int = TOTAL_RATIONALITY_CAP
) -> bool:
    """True when some *complete* preorder generates the correspondence.

    Brute force over all weak orders on the universe; |universe| must not
    exceed ``cap``.
    """
    labels = c.universe
    if len(labels) > cap:
        raise CapacityError(
            f"total-rationality check is exact only up to {cap} alternatives; "
            f"got {len(labels)}"
        )
    menus = c.menus()
    targets = [(menu, c.choice(menu)) for menu in menus]
    for levels in weak_order_levels(labels):
        ok = True
        for menu, chosen in targets:
            best = min(levels[x] for x in menu)
            if frozenset(x for x in menu if levels[x] == best) != chosen:
                ok = False
                break
        if ok:
            return True
    return False


def houtman_maks(c: ChoiceCorrespondence, cap: int = HOUTMAN_MAKS_CAP) -> int:
    """Minimum number of menus to drop so the rest is rational.

    Exact search over removal sets in increasing cardinality; the domain
    size must not exceed ``cap``.  Returns 0 exactly when the
    correspondence is already rational.
    """
    menus = sort_menus(c.domain)
    if len(menus) > cap:
        raise CapacityError(
            f"menu-removal search is exact only up to {cap} menus; "
            f"got {len(menus)}"
        )
    if is_rational(c):
        return 0
    for k in range(1, len(menus) + 1):
        for removed in itertools.combinations(menus, k):
            if is_rational(c.without(removed)):
                return k
    # Unreachable: the empty domain is vacuously rational.
    raise AssertionError("removal search fell through")
