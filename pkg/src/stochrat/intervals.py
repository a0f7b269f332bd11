"""Finite unions of half-open rational intervals inside (0, 1].

Every interval in this package is of the form (lo, hi] with exact rational
endpoints, 0 <= lo <= hi <= 1.  The half-open orientation is part of the
semantics of threshold sets (a threshold value sits in the interval whose
right endpoint it is) and is hard-coded rather than configurable.

:class:`IntervalUnion` is an immutable canonical form: component intervals
are nonempty, sorted, and pairwise disjoint with gaps between them, so two
unions are equal as sets exactly when they compare equal as values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .rationals import format_rational, parse_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _check_endpoint(value: Fraction) -> Fraction:
    value = Fraction(value)
    if value < _ZERO or value > _ONE:
        raise ValueError(f"interval endpoint {value} outside [0, 1]")
    return value


def _canonical(
    pairs: Iterable[tuple[Fraction, Fraction]],
) -> tuple[tuple[Fraction, Fraction], ...]:
    """Sort, drop empties, and merge touching intervals."""
    kept = []
    for lo, hi in pairs:
        lo = _check_endpoint(lo)
        hi = _check_endpoint(hi)
        if lo < hi:
            kept.append((lo, hi))
    kept.sort()
    merged: list[tuple[Fraction, Fraction]] = []
    for lo, hi in kept:
        if merged and lo <= merged[-1][1]:
            prev_lo, prev_hi = merged[-1]
            if hi > prev_hi:
                merged[-1] = (prev_lo, hi)
        else:
            merged.append((lo, hi))
    return tuple(merged)


@dataclass(frozen=True)
class IntervalUnion:
    """Immutable union of disjoint half-open intervals (lo, hi] in (0, 1]."""

    intervals: tuple[tuple[Fraction, Fraction], ...] = ()

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls(())

    @classmethod
    def single(cls, lo: Fraction, hi: Fraction) -> "IntervalUnion":
        """The union containing just (lo, hi]; empty when lo >= hi."""
        return cls(_canonical([(lo, hi)]))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[Fraction, Fraction]]
    ) -> "IntervalUnion":
        return cls(_canonical(pairs))

    def insert(self, lo: Fraction, hi: Fraction) -> "IntervalUnion":
        """Return this union with (lo, hi] added.  Empty inputs are no-ops."""
        return IntervalUnion(_canonical(list(self.intervals) + [(lo, hi)]))

    # -- predicates ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, point: Fraction) -> bool:
        """Membership of a single threshold value, honoring (lo, hi]."""
        point = Fraction(point)
        for lo, hi in self.intervals:
            if lo < point <= hi:
                return True
            if hi >= point:
                break
        return False

    def is_subset(self, other: "IntervalUnion") -> bool:
        return self.difference(other).is_empty

    # -- algebra -------------------------------------------------------

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(_canonical(self.intervals + other.intervals))

    __or__ = union

    def intersection(self, other: "IntervalUnion") -> "IntervalUnion":
        out = []
        for alo, ahi in self.intervals:
            for blo, bhi in other.intervals:
                lo = max(alo, blo)
                hi = min(ahi, bhi)
                if lo < hi:
                    out.append((lo, hi))
        return IntervalUnion(_canonical(out))

    __and__ = intersection

    def complement(self) -> "IntervalUnion":
        """Complement within the ambient interval (0, 1]."""
        gaps = []
        cursor = _ZERO
        for lo, hi in self.intervals:
            if cursor < lo:
                gaps.append((cursor, lo))
            cursor = hi
        if cursor < _ONE:
            gaps.append((cursor, _ONE))
        return IntervalUnion(tuple(gaps))

    def difference(self, other: "IntervalUnion") -> "IntervalUnion":
        return self.intersection(other.complement())

    def measure(self) -> Fraction:
        """Total length, exact."""
        return sum((hi - lo for lo, hi in self.intervals), _ZERO)

    # -- iteration and rendering ----------------------------------------

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self.intervals)

    def __str__(self) -> str:
        if not self.intervals:
            return "(empty)"
        parts = [
            f"({format_rational(lo)},{format_rational(hi)}]"
            for lo, hi in self.intervals
        ]
        return " ∪ ".join(parts)

    def to_json(self) -> list[list[str]]:
        """JSON-ready form: a list of ["lo", "hi"] rational strings."""
        return [
            [format_rational(lo), format_rational(hi)] for lo, hi in self.intervals
        ]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "IntervalUnion":
        pairs = []
        for item in data:
            if len(item) != 2:
                raise ValueError(f"interval entry must have two endpoints: {item!r}")
            pairs.append((parse_rational(item[0]), parse_rational(item[1])))
        return cls.from_pairs(pairs)


EMPTY_UNION = IntervalUnion.empty()
FULL_UNION = IntervalUnion.single(_ZERO, _ONE)
