"""Closed-form extremal edge counts for forbidden disjoint cycle families.

Everything here is exact integer arithmetic on binomial coefficients.
The central quantity for a multiset of forbidden cycle lengths
``l_1, ..., l_r`` is

    t = sum(floor((l_i + 1) / 2)) - 1.

The extremal counts have the shape C(n,k) - C(n-t,k) plus a small
correction that is nonzero only when every forbidden length is even:
one extra edge for minimal cycles, C(n-t-2, k-2) extra edges for linear
cycles.  Single-cycle and r-identical-copies variants are provided as
independent evaluations of their own parity forms so the general family
formula can be cross-checked against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class UnsupportedParameters(ValueError):
    """Parameters outside the range a formula is defined for."""


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside the Pascal triangle."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def compute_t(lengths: Sequence[int]) -> int:
    """t = sum of floor((l+1)/2) over the lengths, minus one."""
    if not lengths:
        raise UnsupportedParameters("need at least one cycle length")
    return sum((l + 1) // 2 for l in lengths) - 1


def _check_lengths(lengths: Sequence[int]) -> None:
    for l in lengths:
        if l < 3:
            raise UnsupportedParameters(
                f"cycle lengths must be at least 3, got {l}"
            )


@dataclass(frozen=True)
class DerivedParams:
    """Quantities shared by the family formulas."""

    t: int
    all_even: bool


def derive_params(lengths: Sequence[int]) -> DerivedParams:
    _check_lengths(lengths)
    return DerivedParams(
        t=compute_t(lengths),
        all_even=all(l % 2 == 0 for l in lengths),
    )


@dataclass(frozen=True)
class FormulaResult:
    """An evaluated extremal count.

    ``value`` = C(n,k) - C(n-t,k) + ``correction``.  ``in_hypothesis``
    records whether the parameters satisfy the uniformity bound under
    which the count is proven exact (the formula still evaluates outside
    it).
    """

    value: int
    t: int
    correction: int
    in_hypothesis: bool

    def __int__(self) -> int:
        return self.value


def minimal_family_turan(
    n: int, k: int, lengths: Sequence[int]
) -> FormulaResult:
    """Extremal edge count avoiding disjoint minimal cycles of the given lengths.

    The correction term is 1 exactly when every length is even.  Proven
    exact for k >= 4 and large n; ``in_hypothesis`` reflects the k bound.
    """
    params = derive_params(lengths)
    if n < 0 or k < 1:
        raise UnsupportedParameters("need n >= 0 and k >= 1")
    correction = 1 if params.all_even else 0
    value = binom(n, k) - binom(n - params.t, k) + correction
    return FormulaResult(
        value=value,
        t=params.t,
        correction=correction,
        in_hypothesis=k >= 4,
    )


def linear_family_turan(
    n: int, k: int, lengths: Sequence[int]
) -> FormulaResult:
    """Extremal edge count avoiding disjoint linear cycles of the given lengths.

    The correction term is C(n-t-2, k-2) exactly when every length is
    even.  Proven exact for k >= 5 and large n.
    """
    params = derive_params(lengths)
    if n < 0 or k < 1:
        raise UnsupportedParameters("need n >= 0 and k >= 1")
    correction = binom(n - params.t - 2, k - 2) if params.all_even else 0
    value = binom(n, k) - binom(n - params.t, k) + correction
    return FormulaResult(
        value=value,
        t=params.t,
        correction=correction,
        in_hypothesis=k >= 5,
    )


def single_cycle_turan(n: int, k: int, length: int, variant: str) -> int:
    """Extremal count for one forbidden cycle, from its own parity form.

    Odd length 2s+1 (either variant):    C(n,k) - C(n-s,k).
    Even length 2s, minimal:             C(n,k) - C(n-s+1,k) + 1.
    Even length 2s, linear:              C(n,k) - C(n-s+1,k) + C(n-s-1,k-2).

    Kept independent of the family formulas on purpose, so agreement
    between the two is a meaningful check rather than a tautology.
    """
    if variant not in ("minimal", "linear"):
        raise UnsupportedParameters(f"unknown variant {variant!r}")
    if length < 3:
        raise UnsupportedParameters(
            f"cycle lengths must be at least 3, got {length}"
        )
    if length % 2 == 1:
        s = (length - 1) // 2
        return binom(n, k) - binom(n - s, k)
    s = length // 2
    if variant == "minimal":
        return binom(n, k) - binom(n - s + 1, k) + 1
    return binom(n, k) - binom(n - s + 1, k) + binom(n - s - 1, k - 2)


def r_copies_turan(n: int, k: int, r: int, length: int, variant: str) -> int:
    """Extremal count forbidding r disjoint copies of one cycle length.

    Uses t = r*floor((length+1)/2) - 1 directly, again independent of
    the general family evaluation.
    """
    if r < 1:
        raise UnsupportedParameters(f"need at least one copy, got {r}")
    if variant not in ("minimal", "linear"):
        raise UnsupportedParameters(f"unknown variant {variant!r}")
    if length < 3:
        raise UnsupportedParameters(
            f"cycle lengths must be at least 3, got {length}"
        )
    t = r * ((length + 1) // 2) - 1
    if length % 2 == 1:
        return binom(n, k) - binom(n - t, k)
    if variant == "minimal":
        return binom(n, k) - binom(n - t, k) + 1
    return binom(n, k) - binom(n - t, k) + binom(n - t - 2, k - 2)


def linear_path_turan(n: int, k: int, length: int) -> int:
    """Extremal edge count avoiding one linear path of the given length.

    Odd length 2t+1:  sum_{i=1..t} C(n-i, k-1) = C(n,k) - C(n-t,k).
    Even length 2t+2: the same sum plus C(n-t-2, k-2).
    Defined for length >= 2.
    """
    if length < 2:
        raise UnsupportedParameters(
            f"path length must be at least 2, got {length}"
        )
    if length % 2 == 1:
        t = (length - 1) // 2
        extra = 0
    else:
        t = (length - 2) // 2
        extra = binom(n - t - 2, k - 2)
    return sum(binom(n - i, k - 1) for i in range(1, t + 1)) + extra


def kmw_bound(n: int, k: int) -> int:
    """The classical C(n, k-2) bound for hosts with no two edges sharing
    exactly one vertex."""
    return binom(n, k - 2)
