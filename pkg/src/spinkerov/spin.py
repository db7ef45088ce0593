"""Spin characters and spin free cumulants as elements of the odd power-sum algebra.

Everything here is driven by ratios of Phi(z; lam) = prod (z + lam_i)/(z - lam_i)
at shifted arguments.  Because log Phi = 2 sum_j p_{2j-1} z^{-(2j-1)} / (2j-1),
such a ratio raised to a power is the exponential of a linear combination of
re-expanded shifted inverse powers, which works verbatim with symbolic p's or
with the numbers p_k(lam) of a concrete strict partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .exact import LaurentTail, OddPowerSumPoly, expand_shifted_inverse_power
from .partitions import power_sums, strict_partition

__all__ = [
    "PhiLogData",
    "phi_ratio_series",
    "spin_character_poly",
    "spin_character_eval",
    "spin_free_cumulant_poly",
    "spin_free_cumulant_eval",
    "symmetrized_cumulant_poly",
    "symmetrized_cumulant_eval",
    "super_power_sum_double_poly",
    "spin_character_prefactor",
]


@dataclass(frozen=True)
class PhiLogData:
    """Coefficients 2 p_{2j-1} / (2j-1), j = 1..max_index, of log Phi."""

    coefficients: tuple
    symbolic: bool

    @property
    def max_index(self) -> int:
        return len(self.coefficients)

    @classmethod
    def symbolic_data(cls, max_index: int) -> "PhiLogData":
        return cls(
            tuple(OddPowerSumPoly.gen(2 * j - 1) * Fraction(2, 2 * j - 1) for j in range(1, max_index + 1)),
            True,
        )

    @classmethod
    def numeric_data(cls, lam: Sequence[int], max_index: int) -> "PhiLogData":
        ps = power_sums(lam, 2 * max_index - 1) if max_index else {}
        return cls(tuple(ps[2 * j - 1] * Fraction(2, 2 * j - 1) for j in range(1, max_index + 1)), False)

    @classmethod
    def for_order(cls, order: int, lam: Sequence[int] | None = None) -> "PhiLogData":
        """Enough data for series through z^{-order}."""
        max_index = (order + 1) // 2
        if lam is None:
            return cls.symbolic_data(max_index)
        return cls.numeric_data(lam, max_index)


def _log_phi_shifted(shift: Fraction, order: int, data: PhiLogData, cap: int | None) -> LaurentTail:
    # log Phi(z - shift) = sum_j d_j (z - shift)^{-(2j-1)}
    out = LaurentTail.zero(order, cap)
    for j in range(1, (order + 1) // 2 + 1):
        m = 2 * j - 1
        out = out + expand_shifted_inverse_power(m, shift, order, cap) * data.coefficients[j - 1]
    return out


def phi_ratio_series(
    shift_num,
    shift_den,
    power: int,
    order: int,
    data: PhiLogData,
    cap: int | None = None,
) -> LaurentTail:
    """(Phi(z - shift_num) / Phi(z - shift_den))^power through z^{-order}."""
    needed = (order + 1) // 2
    if data.max_index < needed:
        raise ValueError(f"log-Phi data has {data.max_index} coefficients; order {order} needs {needed}")
    shift_num, shift_den = Fraction(shift_num), Fraction(shift_den)
    if power == 0 or shift_num == shift_den or order < 1:
        return LaurentTail.one(order, cap)
    diff = _log_phi_shifted(shift_num, order, data, cap) - _log_phi_shifted(shift_den, order, data, cap)
    return (diff * power).exp()


def spin_character_prefactor(k: int) -> LaurentTail:
    """(-1/(4k)) (2z - k) prod_{j=1}^{k-1} (z - j) as an exact Laurent polynomial."""
    poly = [Fraction(-k), Fraction(2)]  # ascending coefficients in z
    for j in range(1, k):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    scale = Fraction(-1, 4 * k)
    return LaurentTail.from_z_polynomial([c * scale for c in poly])


def _check_odd(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be an odd positive integer, got {k}")


def _check_even(k: int) -> None:
    if k < 2 or k % 2:
        raise ValueError(f"expected an even subscript >= 2, got {k}")


def _spin_character_series(k: int, data: PhiLogData, cap: int | None) -> Fraction | OddPowerSumPoly:
    # the prefactor has degree k in z, so z^{-1} needs the ratio through
    # z^{-(k+1)}; one guard term on top
    order = k + 2
    ratio = phi_ratio_series(0, k, 1, order, data, cap)
    return (spin_character_prefactor(k) * ratio).coefficient(1)


@lru_cache(maxsize=None)
def spin_character_poly(k: int, capped: bool = True) -> OddPowerSumPoly:
    """The normalized spin character p_k^# (k odd) expanded in p1, p3, ...

    ``capped=False`` skips the degree cap; only useful for validating it.
    """
    _check_odd(k)
    data = PhiLogData.for_order(k + 2)
    value = _spin_character_series(k, data, k if capped else None)
    return OddPowerSumPoly._coerce(value)


def spin_character_eval(k: int, lam: Sequence[int]) -> Fraction:
    """Numeric route: the same contour formula with p_j(lam) plugged in up front."""
    _check_odd(k)
    lam = strict_partition(lam)
    if sum(lam) < k:
        return Fraction(0)
    return Fraction(_spin_character_series(k, PhiLogData.for_order(k + 2, lam), None))


def _spin_cumulant_series(two_k: int, data: PhiLogData, cap: int | None):
    order = two_k + 1
    ratio = phi_ratio_series(0, 1, two_k - 1, order, data, cap)
    return ratio.coefficient(two_k) * Fraction(-1, 2 * (two_k - 1))


@lru_cache(maxsize=None)
def spin_free_cumulant_poly(two_k: int, capped: bool = True) -> OddPowerSumPoly:
    """Half the even free cumulant R_{2k} of the double diagram, in p1, p3, ..."""
    _check_even(two_k)
    data = PhiLogData.for_order(two_k + 1)
    return OddPowerSumPoly._coerce(_spin_cumulant_series(two_k, data, two_k - 1 if capped else None))


def spin_free_cumulant_eval(two_k: int, lam: Sequence[int]) -> Fraction:
    _check_even(two_k)
    lam = strict_partition(lam)
    return Fraction(_spin_cumulant_series(two_k, PhiLogData.for_order(two_k + 1, lam), None))


def _symmetrized_series(k: int, data: PhiLogData, cap: int | None):
    order = k + 1
    ratio = phi_ratio_series(Fraction(-1, 2), Fraction(1, 2), k - 1, order, data, cap)
    return ratio.coefficient(k) * Fraction(-1, 2 * (k - 1))


@lru_cache(maxsize=None)
def symmetrized_cumulant_poly(k: int) -> OddPowerSumPoly:
    """Half the k-th free cumulant of the symmetrized double diagram."""
    if k < 2:
        raise ValueError("k must be at least 2")
    data = PhiLogData.for_order(k + 1)
    return OddPowerSumPoly._coerce(_symmetrized_series(k, data, k - 1))


def symmetrized_cumulant_eval(k: int, lam: Sequence[int]) -> Fraction:
    if k < 2:
        raise ValueError("k must be at least 2")
    lam = strict_partition(lam)
    return Fraction(_symmetrized_series(k, PhiLogData.for_order(k + 1, lam), None))


def super_power_sum_double_poly(n: int) -> OddPowerSumPoly:
    """p_n^super(D(lam)) = sum_j binom(n, 2j+1) 2^{-(n-2j-2)} p_{2j+1}(lam)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = OddPowerSumPoly()
    for j in range((n - 1) // 2 + 1):
        out = out + OddPowerSumPoly.gen(2 * j + 1) * (comb(n, 2 * j + 1) * Fraction(2) ** (2 * j + 2 - n))
    return out
