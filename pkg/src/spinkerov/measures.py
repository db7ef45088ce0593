"""Transition and Rayleigh measures of Young diagrams and their free cumulants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exact import LaurentTail
from .partitions import FrobeniusCoords, interlacing

__all__ = [
    "AtomicMeasure",
    "rayleigh_measure",
    "transition_measure",
    "rayleigh_moments",
    "transition_moments",
    "moments_to_cumulants",
    "cumulants_to_moments",
    "cauchy_transform",
    "cumulant_from_cauchy",
    "biane_cumulant",
    "biane_cumulants",
    "super_power_sum",
    "rayleigh_from_super",
    "phi_series",
]


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely supported signed measure as (location, weight) atoms."""

    atoms: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        locs = [x for x, _ in self.atoms]
        if len(set(locs)) != len(locs):
            raise ValueError("atom locations must be distinct")

    @property
    def mass(self) -> Fraction:
        return sum((w for _, w in self.atoms), Fraction(0))

    def moment(self, k: int) -> Fraction:
        return sum((w * x**k for x, w in self.atoms), Fraction(0))

    def moments(self, n: int) -> list[Fraction]:
        """[M_1, ..., M_n]."""
        return [self.moment(k) for k in range(1, n + 1)]


def rayleigh_measure(mu: Sequence[int]) -> AtomicMeasure:
    ic = interlacing(mu)
    atoms = [(Fraction(x), Fraction(1)) for x in ic.x] + [(Fraction(y), Fraction(-1)) for y in ic.y]
    return AtomicMeasure(tuple(sorted(atoms)))


def transition_measure(mu: Sequence[int]) -> AtomicMeasure:
    """Atoms at the minima with weights from the partial fractions of G."""
    ic = interlacing(mu)
    atoms = []
    for i, xi in enumerate(ic.x):
        w = Fraction(1)
        for y in ic.y:
            w *= xi - y
        for j, xj in enumerate(ic.x):
            if j != i:
                w /= xi - xj
        atoms.append((Fraction(xi), w))
    return AtomicMeasure(tuple(atoms))


def rayleigh_moments(mu: Sequence[int], n: int) -> list[Fraction]:
    """[M_1[tau], ..., M_n[tau]]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    ic = interlacing(mu)
    return [Fraction(sum(x**k for x in ic.x) - sum(y**k for y in ic.y)) for k in range(1, n + 1)]


def transition_moments(mu: Sequence[int], n: int) -> list[Fraction]:
    """[M_1[m], ..., M_n[m]] from the Rayleigh moments by the exponential formula."""
    tau = rayleigh_moments(mu, n)
    log_series = LaurentTail(1, [tau[k - 1] / k for k in range(1, n + 1)], n)
    e = log_series.exp()
    return [Fraction(e.coefficient(k)) for k in range(1, n + 1)]


def _moment_powers(moments: Sequence[Fraction], upto: int) -> list[list[Fraction]]:
    # powers[s][j] = [w^j] M(w)^s with M(w) = 1 + sum M_i w^i, for j < upto
    m = [Fraction(1)] + list(moments[: upto - 1])
    m += [Fraction(0)] * (upto - len(m))
    powers = [[Fraction(1)] + [Fraction(0)] * (upto - 1)]
    for _ in range(upto):
        prev = powers[-1]
        powers.append([sum(prev[i] * m[j - i] for i in range(j + 1)) for j in range(upto)])
    return powers


def moments_to_cumulants(moments: Sequence) -> list[Fraction]:
    """Free cumulants [R_1..R_N] from moments [M_1..M_N].

    Solves the functional equation M(w) = C(w M(w)) with C(w) = 1 + sum R_s w^s
    term by term: M_n = sum_s R_s [w^{n-s}] M(w)^s.
    """
    moments = [Fraction(m) for m in moments]
    n_max = len(moments)
    powers = _moment_powers(moments, n_max)
    cumulants: list[Fraction] = []
    for n in range(1, n_max + 1):
        r = moments[n - 1] - sum(cumulants[s - 1] * powers[s][n - s] for s in range(1, n))
        cumulants.append(r)
    return cumulants


def cumulants_to_moments(cumulants: Sequence) -> list[Fraction]:
    cumulants = [Fraction(r) for r in cumulants]
    moments: list[Fraction] = []
    for n in range(1, len(cumulants) + 1):
        # [w^{n-s}] M^s only involves M_1..M_{n-1}
        powers = _moment_powers(moments, n)
        moments.append(sum(cumulants[s - 1] * powers[s][n - s] for s in range(1, n + 1)))
    return moments


def cauchy_transform(mu: Sequence[int], order: int) -> LaurentTail:
    """G(z) = prod(z - y_j) / prod(z - x_i) through z^{-order}."""
    ic = interlacing(mu)
    body = LaurentTail.one(order - 1)
    for y in ic.y:
        body = body * LaurentTail.exact({0: 1, 1: -y})
    for x in ic.x:
        body = body * LaurentTail(0, [Fraction(x) ** i for i in range(order)], order - 1)
    return body * LaurentTail.exact({1: 1})


def cumulant_from_cauchy(g: LaurentTail, k: int) -> Fraction:
    """R_k = -1/(k-1) [z^-1] G^{-(k-1)} for a Cauchy transform series G."""
    if k < 2:
        raise ValueError("extraction formula needs k >= 2")
    return -Fraction(1, k - 1) * Fraction((g.inverse() ** (k - 1)).coefficient(1))


def biane_cumulants(mu: Sequence[int], k_max: int) -> dict[int, Fraction]:
    """{k: R_k(mu)} for 2 <= k <= k_max, sharing one inverse of G."""
    # G known through z^{-(k_max+2)}; after inversion and the (k-1)-th power the
    # z^{-1} coefficient still has one guard term of precision.
    g_inv = cauchy_transform(mu, k_max + 2).inverse()
    out: dict[int, Fraction] = {}
    power = g_inv
    for k in range(2, k_max + 1):
        if k > 2:
            power = power * g_inv
        out[k] = -Fraction(1, k - 1) * Fraction(power.coefficient(1))
    return out


def biane_cumulant(mu: Sequence[int], k: int) -> Fraction:
    if k < 2:
        raise ValueError("k must be at least 2")
    return biane_cumulants(mu, k)[k]


def super_power_sum(c: FrobeniusCoords, k: int) -> Fraction:
    sign = 1 if k % 2 == 1 else -1
    return sum((a**k + sign * b**k for a, b in zip(c.a, c.b)), Fraction(0))


def rayleigh_from_super(c: FrobeniusCoords, n: int) -> Fraction:
    """M_n[tau] as a combination of super power sums (n >= 2)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return sum(
        (comb(n, 2 * j + 1) * Fraction(1, 4**j) * super_power_sum(c, n - 2 * j - 1) for j in range(n // 2)),
        Fraction(0),
    )


def phi_series(c: FrobeniusCoords, shift, order: int) -> LaurentTail:
    """phi(z - shift) = prod (z - shift + b_i) / (z - shift - a_i) as a series."""
    shift = Fraction(shift)
    out = LaurentTail.one(order)
    for a, b in zip(c.a, c.b):
        num = LaurentTail.exact({0: 1, 1: b - shift})
        root = a + shift
        den_inv = LaurentTail(0, [root**i for i in range(order + 1)], order)
        out = out * num * den_inv
    return out
