"""Brute-force spin character tables from Schur Q-functions in the power-sum basis.

This path shares nothing with the contour-integral formulas in ``spin``: it
builds Q_lam from the q_r generating function and Pfaffians, then solves
p_rho = sum_lam X^lam_rho P_lam exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exact import OddPowerSumPoly, solve_linear
from .partitions import enumerate_partitions, odd_partition, strict_partition

__all__ = [
    "q_polynomials",
    "schur_q",
    "schur_p",
    "pfaffian",
    "SpinCharacterTable",
    "character_table",
    "normalized_character",
]


@lru_cache(maxsize=None)
def q_polynomials(max_r: int) -> tuple[OddPowerSumPoly, ...]:
    """q_0..q_max_r from sum q_r t^r = exp(2 sum_{k odd} p_k t^k / k).

    Uses r q_r = 2 sum_{k odd <= r} p_k q_{r-k}.
    """
    qs = [OddPowerSumPoly.const(1)]
    for r in range(1, max_r + 1):
        acc = OddPowerSumPoly()
        for k in range(1, r + 1, 2):
            acc = acc + OddPowerSumPoly.gen(k) * qs[r - k]
        qs.append(acc * Fraction(2, r))
    return tuple(qs)


def _q(r: int) -> OddPowerSumPoly:
    if r < 0:
        return OddPowerSumPoly()
    return q_polynomials(r)[r]


@lru_cache(maxsize=None)
def _two_row(a: int, b: int) -> OddPowerSumPoly:
    # Q_(a,b) = q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}; Q_(a,0) = q_a
    out = _q(a) * _q(b)
    for i in range(1, b + 1):
        out = out + _q(a + i) * _q(b - i) * (2 * (-1) ** i)
    return out


def pfaffian(matrix: Sequence[Sequence]):
    """Pfaffian of an antisymmetric matrix of even size, by first-row expansion."""
    n = len(matrix)
    if n % 2:
        raise ValueError("Pfaffian needs an even-sized matrix")

    @lru_cache(maxsize=None)
    def pf(idx: tuple):
        if not idx:
            return OddPowerSumPoly.const(1)
        first = idx[0]
        total = None
        for pos in range(1, len(idx)):
            rest = idx[1:pos] + idx[pos + 1 :]
            term = matrix[first][idx[pos]] * pf(rest)
            if pos % 2 == 0:
                term = -term
            total = term if total is None else total + term
        return total

    return pf(tuple(range(n)))


@lru_cache(maxsize=None)
def schur_q(lam: tuple, pad: bool = True) -> OddPowerSumPoly:
    """Schur Q-function Q_lam in the p-basis.

    Odd-length lam gets a zero part appended before the Pfaffian; ``pad=False``
    is only accepted for even lengths.
    """
    lam = strict_partition(lam)
    if not lam:
        return OddPowerSumPoly.const(1)
    if len(lam) == 1:
        return _q(lam[0])
    parts = list(lam)
    if len(parts) % 2:
        if not pad:
            raise ValueError("odd length needs padding")
        parts.append(0)
    if len(parts) == 2:
        return _two_row(parts[0], parts[1])
    m = len(parts)
    mat = [[OddPowerSumPoly() for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            mat[i][j] = _two_row(parts[i], parts[j])
            mat[j][i] = -mat[i][j]
    return pfaffian(mat)


def schur_p(lam: tuple) -> OddPowerSumPoly:
    return schur_q(lam) * Fraction(1, 2 ** len(lam))


@dataclass(frozen=True)
class SpinCharacterTable:
    n: int
    strict: tuple[tuple[int, ...], ...]
    odd: tuple[tuple[int, ...], ...]
    values: dict  # (lam, rho) -> int

    def dim(self, lam: tuple) -> int:
        return self.values[(tuple(lam), (1,) * self.n)]

    def to_json(self) -> dict:
        def key(p):
            return ",".join(map(str, p))

        return {
            "n": self.n,
            "rows": [
                {"lambda": list(lam), "values": {key(rho): self.values[(lam, rho)] for rho in self.odd}}
                for lam in self.strict
            ],
            "dims": {key(lam): self.dim(lam) for lam in self.strict},
        }


@lru_cache(maxsize=None)
def character_table(n: int) -> SpinCharacterTable:
    """X^lam_rho for strict lam and odd rho of size n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    strict = tuple(enumerate_partitions(n, "strict"))
    odd = tuple(enumerate_partitions(n, "odd"))
    if len(strict) != len(odd):
        raise AssertionError("strict and odd partition counts differ")
    p_basis = [schur_p(lam) for lam in strict]
    # columns: P_lam; rows: coefficient of the monomial p_sigma
    monos = []
    for sigma in odd:
        vec = [0] * ((max(sigma, default=0) + 1) // 2)
        for part in sigma:
            vec[(part - 1) // 2] += 1
        monos.append(tuple(vec))
    matrix = [[P.terms.get(m, Fraction(0)) for P in p_basis] for m in monos]
    values = {}
    for j, rho in enumerate(odd):
        rhs = [Fraction(int(i == j)) for i in range(len(odd))]
        sol = solve_linear(matrix, rhs)
        for lam, x in zip(strict, sol):
            if x.denominator != 1:
                raise AssertionError(f"non-integer X^{lam}_{rho} = {x}")
            values[(lam, rho)] = int(x)
    return SpinCharacterTable(n, strict, odd, values)


def normalized_character(rho: Sequence[int], lam: Sequence[int]) -> Fraction:
    """n(n-1)...(n-k+1) X^lam_{rho u 1^{n-k}} / g^lam; zero when |rho| > |lam|."""
    rho = odd_partition(rho)
    lam = strict_partition(lam)
    n, k = sum(lam), sum(rho)
    if k > n:
        return Fraction(0)
    table = character_table(n)
    full = tuple(sorted(rho + (1,) * (n - k), reverse=True))
    falling = factorial(n) // factorial(n - k)
    return Fraction(falling * table.values[(lam, full)], table.dim(lam))
