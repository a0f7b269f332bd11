"""Alternative rationality comparators.

Three ways of ranking subjects besides inclusion of irrationality sets:

* the *swap index*: the smallest expected number of better-ranked
  alternatives passed over, minimized over linear orders of the universe;
* a *menu-removal* comparator: compare the Houtman-Maks counts of the two
  threshold correspondences region by region;
* a *complete-preorder* comparator: compare the threshold regions on
  which each subject's correspondence can be generated by a complete
  preorder.

The threshold comparators exploit that the correspondence family is
piecewise constant between consecutive normalized-likelihood values, so
evaluating one point per region is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .choice import (
    ChoiceCorrespondence,
    HOUTMAN_MAKS_CAP,
    TOTAL_RATIONALITY_CAP,
    houtman_maks,
    is_totally_rational,
)
from .errors import CapacityError
from .intervals import IntervalUnion
from .measure import ComparisonResult, Verdict
from .scf import StochasticChoiceFunction, fishburn_correspondence, threshold_cuts

SWAP_CAP = 9

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SwapResult:
    """Exact swap index together with its minimizers.

    ``order`` is the lexicographically least optimal linear order, best
    alternative first; ``optimal_orders`` counts how many linear orders
    achieve the minimum.
    """

    value: Fraction
    order: tuple[str, ...]
    optimal_orders: int


def swap_index(scf: StochasticChoiceFunction, cap: int = SWAP_CAP) -> SwapResult:
    """Minimize the expected number of passed-over alternatives.

    For a linear order the cost is the sum over menus S and members x of
    P(x, S) times the number of members ranked above x.  The cost of
    placing x below a prefix set decomposes over pairs, so the minimum
    over all n! orders is found exactly with a subset dynamic program
    (identical values, far fewer steps than direct enumeration).
    """
    labels = tuple(sorted(scf.universe))
    n = len(labels)
    if n > cap:
        raise CapacityError(
            f"swap index enumeration is exact only up to {cap} alternatives; "
            f"got {n}"
        )

    # pair_cost[a][b]: cost incurred by ranking a above b, i.e. the total
    # probability of b being chosen from menus containing both.
    pair_cost = [[_ZERO] * n for _ in range(n)]
    index = {label: i for i, label in enumerate(labels)}
    for menu in scf.menus():
        probs = scf.menu_probs(menu)
        members = sorted(menu)
        for a in members:
            for b in members:
                if a != b:
                    pair_cost[index[a]][index[b]] += probs[b]

    # Scale to integers on a common denominator for fast exact DP.
    denom = 1
    for row in pair_cost:
        for value in row:
            denom = denom * value.denominator // math.gcd(denom, value.denominator)
    cost_int = [[int(v * denom) for v in row] for row in pair_cost]

    full = (1 << n) - 1
    # completion[mask]: minimal remaining cost when `mask` is already
    # placed on top; ties[mask]: number of optimal completions.
    completion = [0] * (full + 1)
    ties = [1] * (full + 1)
    for mask in range(full - 1, -1, -1):
        best = None
        count = 0
        for x in range(n):
            if mask & (1 << x):
                continue
            add = 0
            rest = mask
            while rest:
                low = rest & -rest
                add += cost_int[low.bit_length() - 1][x]
                rest ^= low
            total = add + completion[mask | (1 << x)]
            if best is None or total < best:
                best = total
                count = ties[mask | (1 << x)]
            elif total == best:
                count += ties[mask | (1 << x)]
        completion[mask] = best if best is not None else 0
        ties[mask] = count if count else 1

    # Reconstruct the lexicographically least optimal order greedily.
    order: list[str] = []
    mask = 0
    while mask != full:
        for x in range(n):
            if mask & (1 << x):
                continue
            add = 0
            rest = mask
            while rest:
                low = rest & -rest
                add += cost_int[low.bit_length() - 1][x]
                rest ^= low
            if add + completion[mask | (1 << x)] == completion[mask]:
                order.append(labels[x])
                mask |= 1 << x
                break

    return SwapResult(
        value=Fraction(completion[0], denom),
        order=tuple(order),
        optimal_orders=ties[0],
    )


# -- threshold-region comparators ---------------------------------------------


def _merged_cuts(
    left: StochasticChoiceFunction, right: StochasticChoiceFunction
) -> tuple[Fraction, ...]:
    cuts = sorted(set(threshold_cuts(left)) | set(threshold_cuts(right)))
    assert cuts and cuts[-1] == 1, "the top likelihood is always 1"
    return tuple(cuts)


def _region_compare(
    left: StochasticChoiceFunction,
    right: StochasticChoiceFunction,
    left_worse_at: Callable[[ChoiceCorrespondence, ChoiceCorrespondence], int],
) -> ComparisonResult:
    """Shared driver: walk the merged threshold regions, score each side.

    ``left_worse_at`` returns negative/zero/positive as the left
    correspondence is worse/tied/better on that region.
    """
    cuts = _merged_cuts(left, right)
    left_worse = []
    right_worse = []
    lower = _ZERO
    for cut in cuts:
        sign = left_worse_at(
            fishburn_correspondence(left, cut), fishburn_correspondence(right, cut)
        )
        if sign < 0:
            left_worse.append((lower, cut))
        elif sign > 0:
            right_worse.append((lower, cut))
        lower = cut
    return _result_from_regions(left_worse, right_worse)


def _result_from_regions(
    left_worse: list[tuple[Fraction, Fraction]],
    right_worse: list[tuple[Fraction, Fraction]],
) -> ComparisonResult:
    lmr = IntervalUnion.from_pairs(left_worse)
    rml = IntervalUnion.from_pairs(right_worse)
    if lmr.is_empty and rml.is_empty:
        verdict = Verdict.EQUIVALENT
    elif lmr.is_empty:
        verdict = Verdict.LEFT_MORE_RATIONAL
    elif rml.is_empty:
        verdict = Verdict.RIGHT_MORE_RATIONAL
    else:
        verdict = Verdict.INCOMPARABLE
    return ComparisonResult(verdict, lmr, rml)


def hybrid_compare(
    left: StochasticChoiceFunction,
    right: StochasticChoiceFunction,
    houtman_cap: int = HOUTMAN_MAKS_CAP,
) -> ComparisonResult:
    """Compare threshold-wise Houtman-Maks counts (fewer removals wins).

    The left subject dominates when its count is no larger on every
    threshold region; the reported interval sets collect the regions
    where each side is strictly worse.
    """

    def score(c_left: ChoiceCorrespondence, c_right: ChoiceCorrespondence) -> int:
        hl = houtman_maks(c_left, cap=houtman_cap)
        hr = houtman_maks(c_right, cap=houtman_cap)
        return hr - hl

    return _region_compare(left, right, score)


def total_compare(
    left: StochasticChoiceFunction,
    right: StochasticChoiceFunction,
    cap: int = TOTAL_RATIONALITY_CAP,
) -> ComparisonResult:
    """Compare the regions where each threshold correspondence can be
    generated by a complete preorder.  The left subject dominates when it
    is complete-preorder-consistent wherever the right one is."""

    def score(c_left: ChoiceCorrespondence, c_right: ChoiceCorrespondence) -> int:
        tl = is_totally_rational(c_left, cap=cap)
        tr = is_totally_rational(c_right, cap=cap)
        if tl == tr:
            return 0
        return 1 if tl else -1

    return _region_compare(left, right, score)


def totally_rational_regions(
    scf: StochasticChoiceFunction, cap: int = TOTAL_RATIONALITY_CAP
) -> IntervalUnion:
    """Thresholds at which the correspondence has a complete-preorder
    generator, as an interval union over (0, 1]."""
    regions = []
    lower = _ZERO
    for cut in threshold_cuts(scf):
        if is_totally_rational(fishburn_correspondence(scf, cut), cap=cap):
            regions.append((lower, cut))
        lower = cut
    return IntervalUnion.from_pairs(regions)
