"""Kerov polynomials: spin (triangular change of basis) and ordinary (interpolation)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .exact import OddPowerSumPoly, SingularSystemError, fmt_rational, parse_rational, parse_terms, render_terms, solve_linear
from .measures import biane_cumulants
from .partitions import conjugate, enumerate_partitions
from .spin import spin_character_poly, spin_free_cumulant_poly, symmetrized_cumulant_poly

__all__ = [
    "KerovPolynomial",
    "BasisFamily",
    "BasisError",
    "spin_basis",
    "symmetrized_basis",
    "express_in_basis",
    "spin_kerov",
    "symmetrized_spin_kerov",
    "mn_character",
    "dimension",
    "ordinary_character_eval",
    "ordinary_kerov",
    "InterpolationError",
    "PositivityRecord",
    "positivity_report",
    "ComparisonReport",
    "coincidence_report",
]

log = logging.getLogger(__name__)

FAMILIES = ("ordinary", "spin", "symmetrized")
_LETTER = {"ordinary": "R", "spin": "R", "symmetrized": "T"}
_LATEX = {"ordinary": "R", "spin": r"\mathfrak{R}", "symmetrized": r"\mathtt{R}"}

# A monomial in cumulant generators: ((subscript, exponent), ...) sorted by subscript.
Monomial = tuple


def _monomial(sub_exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((int(s), int(e)) for s, e in sub_exps.items() if e))


def generator_degree(family: str, sub: int) -> int:
    return sub if family == "ordinary" else sub - 1


@dataclass(frozen=True, eq=False)
class KerovPolynomial:
    """Polynomial in free-cumulant generators with exact rational coefficients."""

    family: str
    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown generator family {self.family!r}")
        clean = {}
        for mono, c in self.terms.items():
            c = Fraction(c)
            if not c:
                continue
            for sub, _ in mono:
                if sub < 2 or (self.family != "ordinary" and sub % 2):
                    raise ValueError(f"subscript {sub} not allowed for family {self.family}")
            clean[tuple(mono)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_terms(cls, family: str, items: Iterable[tuple[Mapping[int, int], object]]) -> "KerovPolynomial":
        terms: dict[Monomial, Fraction] = {}
        for sub_exps, c in items:
            mono = _monomial(sub_exps)
            terms[mono] = terms.get(mono, 0) + Fraction(c)
        return cls(family, terms)

    def __eq__(self, other):
        if not isinstance(other, KerovPolynomial):
            return NotImplemented
        return self.family == other.family and self.terms == other.terms

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(generator_degree(self.family, s) * e for s, e in mono)

    @property
    def degree(self) -> int:
        return max((self.monomial_degree(m) for m in self.terms), default=-1)

    def coefficient(self, sub_exps: Mapping[int, int]) -> Fraction:
        return self.terms.get(_monomial(sub_exps), Fraction(0))

    def weight(self, mono: Monomial) -> int:
        """Sum of subscripts; equals the degree for the ordinary family."""
        return sum(s * e for s, e in mono)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Weight descending, ties by the descending subscript list, lexicographically descending."""
        return sorted(
            self.terms.items(),
            key=lambda t: (self.weight(t[0]), self._display_subscripts(t[0])),
            reverse=True,
        )

    @staticmethod
    def _display_subscripts(mono: Monomial) -> tuple:
        return tuple(s for s, e in sorted(mono, reverse=True) for _ in range(e))

    def evaluate(self, values: Mapping[int, object]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            total += c * prod((Fraction(values[s]) ** e for s, e in mono), start=Fraction(1))
        return total

    def expand(self, basis: "BasisFamily") -> OddPowerSumPoly:
        out = OddPowerSumPoly()
        for mono, c in self.terms.items():
            out = out + basis.product(mono) * c
        return out

    def all_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def all_integers(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # -- rendering ---------------------------------------------------------

    def _display_factors(self, mono: Monomial):
        return sorted(mono, reverse=True)

    def monomial_text(self, mono: Monomial) -> str:
        return render_terms([(self._display_factors(mono), Fraction(1))], _LETTER[self.family])

    def text(self) -> str:
        return render_terms(
            [(self._display_factors(m), c) for m, c in self.sorted_terms()], _LETTER[self.family]
        )

    __str__ = text

    def latex(self) -> str:
        gen = _LATEX[self.family]
        if not self.terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self.sorted_terms()):
            body = " ".join(
                f"{gen}_{{{s}}}" + (f"^{{{e}}}" if e != 1 else "") for s, e in self._display_factors(mono)
            )
            mag = abs(c)
            if mag.denominator != 1:
                coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                coeff = str(mag.numerator)
            if not body:
                piece = coeff
            elif mag == 1:
                piece = body
            else:
                piece = f"{coeff} {body}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + piece)
            else:
                parts.append(("- " if c < 0 else "+ ") + piece)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "terms": [
                {"exponents": {str(s): e for s, e in mono}, "coeff": fmt_rational(c)}
                for mono, c in self.sorted_terms()
            ],
        }

    @classmethod
    def parse(cls, text: str, family: str) -> "KerovPolynomial":
        return cls.from_terms(family, parse_terms(text, _LETTER[family]))

    @classmethod
    def from_json(cls, data: Mapping) -> "KerovPolynomial":
        return cls.from_terms(
            data["family"],
            (({int(k): int(v) for k, v in t["exponents"].items()}, parse_rational(t["coeff"])) for t in data["terms"]),
        )


class BasisError(ValueError):
    pass


@dataclass
class BasisFamily:
    """Generators of the odd power-sum algebra indexed by even subscripts.

    The generator with subscript 2k must have top-degree part exactly p_{2k-1}.
    """

    family: str
    generators: dict[int, OddPowerSumPoly]
    _products: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for sub, g in self.generators.items():
            if sub < 2 or sub % 2:
                raise BasisError(f"generator subscripts must be even, got {sub}")
            lead = g.homogeneous_part(sub - 1)
            if g.degree != sub - 1 or lead != OddPowerSumPoly.gen(sub - 1):
                raise BasisError(f"generator {sub} does not have leading term p{sub - 1}")

    def product(self, mono: Monomial) -> OddPowerSumPoly:
        if mono not in self._products:
            out = OddPowerSumPoly.const(1)
            for sub, e in mono:
                if sub not in self.generators:
                    raise BasisError(f"basis has no generator with subscript {sub}")
                out = out * self.generators[sub] ** e
            self._products[mono] = out
        return self._products[mono]


@lru_cache(maxsize=None)
def spin_basis(max_sub: int) -> BasisFamily:
    return BasisFamily("spin", {s: spin_free_cumulant_poly(s) for s in range(2, max_sub + 1, 2)})


@lru_cache(maxsize=None)
def symmetrized_basis(max_sub: int) -> BasisFamily:
    return BasisFamily("symmetrized", {s: symmetrized_cumulant_poly(s) for s in range(2, max_sub + 1, 2)})


def express_in_basis(f: OddPowerSumPoly, basis: BasisFamily) -> KerovPolynomial:
    """Rewrite f in the generators of ``basis`` by top-degree elimination.

    Each round replaces every top-degree monomial p_{i1} p_{i2} ... by the
    generator product with subscripts i1+1, i2+1, ... (same coefficient) and
    subtracts its full expansion, so the top degree strictly drops.
    """
    result: dict[Monomial, Fraction] = {}
    rem = f
    while rem:
        d = rem.degree
        if d == 0:
            raise BasisError(f"constant residue {rem.constant_term()} left after elimination")
        for exps, c in rem.homogeneous_part(d).terms.items():
            mono = tuple((2 * i + 2, e) for i, e in enumerate(exps) if e)
            result[mono] = result.get(mono, 0) + c
            rem = rem - basis.product(mono) * c
        if rem and rem.degree >= d:
            raise BasisError("elimination did not lower the degree; basis is not triangular")
    out = KerovPolynomial(basis.family, result)
    if out.expand(basis) != f:
        raise BasisError("re-expansion does not reproduce the input")
    return out


def _check_odd(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be an odd positive integer, got {k}")


@lru_cache(maxsize=None)
def spin_kerov(k: int) -> KerovPolynomial:
    """The spin character p_k^# (k odd) in the spin free cumulants R_2, R_4, ..., R_{k+1}."""
    _check_odd(k)
    return express_in_basis(spin_character_poly(k), spin_basis(k + 1))


@lru_cache(maxsize=None)
def symmetrized_spin_kerov(k: int) -> KerovPolynomial:
    _check_odd(k)
    return express_in_basis(spin_character_poly(k), symmetrized_basis(k + 1))


# ---------------------------------------------------------------------------
# Ordinary characters
# ---------------------------------------------------------------------------


def _to_beta(lam: Sequence[int]) -> list[int]:
    n = len(lam)
    return [lam[i] + n - 1 - i for i in range(n)]


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return tuple(p for p in (beta[i] - (n - 1 - i) for i in range(n)) if p)


def dimension(lam: Sequence[int]) -> int:
    """f^lam by the hook length formula."""
    n = sum(lam)
    lam_c = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + lam_c[j] - i - 1
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def _mn(lam: tuple, nu: tuple) -> int:
    if not nu:
        return 1 if not lam else 0
    if nu[0] == 1:
        return dimension(lam)
    r, rest = nu[0], nu[1:]
    beta = _to_beta(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        between = sum(1 for x in beta if t < x < b)
        new = [t if x == b else x for x in beta]
        total += (-1) ** between * _mn(_from_beta(new), rest)
    return total


def mn_character(lam: Sequence[int], nu: Sequence[int]) -> int:
    """chi^lam at the class of cycle type nu (Murnaghan-Nakayama rule)."""
    lam, nu = tuple(lam), tuple(sorted(nu, reverse=True))
    if sum(lam) != sum(nu):
        raise ValueError(f"size mismatch: |{lam}| != |{nu}|")
    return _mn(lam, nu)


def ordinary_character_eval(k: int, lam: Sequence[int]) -> Fraction:
    """Normalized character Ch_k(lam) for the one-row class (k)."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = tuple(lam)
    n = sum(lam)
    if k > n:
        return Fraction(0)
    falling = factorial(n) // factorial(n - k)
    return Fraction(falling * mn_character(lam, (k,) + (1,) * (n - k)), dimension(lam))


class InterpolationError(RuntimeError):
    pass


def _weighted_monomials(subs: Sequence[int], max_degree: int) -> list[Monomial]:
    """Monomials in R_s (weight s) of total weight <= max_degree, constant included."""
    out: list[Monomial] = []

    def rec(i: int, budget: int, acc: list):
        if i == len(subs):
            out.append(tuple(acc))
            return
        s = subs[i]
        for e in range(budget // s + 1):
            rec(i + 1, budget - e * s, acc + ([(s, e)] if e else []))

    rec(0, max_degree, [])
    return sorted(out, key=lambda m: (sum(s * e for s, e in m), m))


@lru_cache(maxsize=None)
def _cumulant_row(lam: tuple, k_max: int) -> dict[int, Fraction]:
    return biane_cumulants(lam, k_max)


def _monomial_value(mono: Monomial, cumulants: Mapping[int, Fraction]) -> Fraction:
    return prod((cumulants[s] ** e for s, e in mono), start=Fraction(1))


@lru_cache(maxsize=None)
def ordinary_kerov(k: int, max_size: int | None = None) -> KerovPolynomial:
    """K_k with Ch_k = K_k(R_2, ..., R_{k+1}), found by exact interpolation.

    Unknowns are all monomials in R_2..R_{k+1} of weight <= k+1.  Rows come from
    every partition of size 0, 1, ..., N with N grown until the system has a
    unique solution; the solution is then checked on all partitions of sizes
    N+1 and N+2.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cap = k + 6 if max_size is None else max_size
    k_max = k + 1
    monos = _weighted_monomials(list(range(2, k_max + 1)), k_max)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def row_for(lam):
        cums = _cumulant_row(lam, k_max)
        return [_monomial_value(m, cums) for m in monos]

    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            rows.append(row_for(lam))
            rhs.append(ordinary_character_eval(k, lam))
        if len(rows) < len(monos):
            continue
        try:
            sol = solve_linear(rows, rhs)
        except SingularSystemError as exc:
            log.debug("k=%d: partitions up to size %d give %s", k, n, exc)
            continue
        log.debug("k=%d: unique solution from partitions up to size %d", k, n)
        poly = KerovPolynomial("ordinary", {m: c for m, c in zip(monos, sol) if c})
        for m in (n + 1, n + 2):
            for lam in enumerate_partitions(m):
                got = _evaluate_ordinary(poly, lam, k_max)
                if got != ordinary_character_eval(k, lam):
                    raise InterpolationError(f"K_{k} fails held-out check at {lam}")
        return poly
    raise InterpolationError(f"K_{k}: system still rank deficient with partitions up to size {cap}")


def _evaluate_ordinary(poly: KerovPolynomial, lam: tuple, k_max: int) -> Fraction:
    return poly.evaluate(_cumulant_row(tuple(lam), k_max))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class PositivityRecord:
    k: int
    family: str
    polynomial: KerovPolynomial
    all_nonnegative: bool
    all_integers: bool
    offending: list[tuple[str, Fraction]]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "family": self.family,
            "allNonnegative": self.all_nonnegative,
            "allIntegers": self.all_integers,
            "offending": [{"monomial": m, "coeff": fmt_rational(c)} for m, c in self.offending],
            "polynomial": self.polynomial.to_json(),
        }


def kerov_polynomial(k: int, family: str) -> KerovPolynomial:
    if family == "spin":
        return spin_kerov(k)
    if family == "symmetrized":
        return symmetrized_spin_kerov(k)
    if family == "ordinary":
        return ordinary_kerov(k)
    raise ValueError(f"unknown family {family!r}")


def positivity_record(k: int, family: str) -> PositivityRecord:
    poly = kerov_polynomial(k, family)
    offending = [
        (poly.monomial_text(m), c) for m, c in poly.sorted_terms() if c < 0 or c.denominator != 1
    ]
    return PositivityRecord(k, family, poly, poly.all_nonnegative(), poly.all_integers(), offending)


def positivity_report(max_k: int, family: str = "spin") -> list[PositivityRecord]:
    """One record per odd k <= max_k (every k for the ordinary family)."""
    step = 1 if family == "ordinary" else 2
    return [positivity_record(k, family) for k in range(1, max_k + 1, step)]


@dataclass
class ComparisonReport:
    k: int
    linear_matches: list[dict]
    top_degree_ratios: list[dict]

    @property
    def all_match(self) -> bool:
        return all(r["match"] for r in self.linear_matches) and all(r["match"] for r in self.top_degree_ratios)

    def to_json(self) -> dict:
        def enc(v):
            return fmt_rational(v) if isinstance(v, Fraction) else v

        return {
            "k": self.k,
            "linearMatches": [{key: enc(v) for key, v in r.items()} for r in self.linear_matches],
            "topDegreeRatios": [{key: enc(v) for key, v in r.items()} for r in self.top_degree_ratios],
        }

    def text(self) -> str:
        lines = [f"k = {self.k}", "linear terms (ordinary R_2j vs spin R_2j):"]
        for r in self.linear_matches:
            flag = "match" if r["match"] else "MISMATCH"
            lines.append(f"  R{r['subscript']}: {fmt_rational(r['ordinary'])} vs {fmt_rational(r['spin'])}  {flag}")
        lines.append(f"top-degree monomials (sum of subscripts = {self.k - 1}): spin / ordinary vs 2^(s-1)")
        for r in self.top_degree_ratios:
            ratio = "n/a" if r["ratio"] is None else fmt_rational(r["ratio"])
            flag = "match" if r["match"] else "MISMATCH"
            lines.append(
                f"  {r['monomial']}: {fmt_rational(r['spin'])} / {fmt_rational(r['ordinary'])} = {ratio}"
                f"  predicted {fmt_rational(r['predicted'])}  {flag}"
            )
        return "\n".join(lines)


def _even_partitions(total: int) -> list[Monomial]:
    out = []
    for lam in enumerate_partitions(total // 2) if total % 2 == 0 else []:
        mono: dict[int, int] = {}
        for part in lam:
            mono[2 * part] = mono.get(2 * part, 0) + 1
        out.append(_monomial(mono))
    return out


def coincidence_report(k: int) -> ComparisonReport:
    """Compare K_k with K_k^spin coefficient by coefficient (k odd >= 3).

    Observational only: mismatches are flagged, never raised.
    """
    _check_odd(k)
    if k < 3:
        raise ValueError("comparison needs k >= 3")
    ordinary = ordinary_kerov(k)
    spin = spin_kerov(k)
    linear = []
    for sub in range(k + 1, 1, -2):
        mono = ((sub, 1),)
        a, b = ordinary.terms.get(mono, Fraction(0)), spin.terms.get(mono, Fraction(0))
        linear.append({"subscript": sub, "ordinary": a, "spin": b, "match": a == b})
    top = []
    for mono in sorted(_even_partitions(k - 1), key=spin._display_subscripts, reverse=True):
        a, b = ordinary.terms.get(mono, Fraction(0)), spin.terms.get(mono, Fraction(0))
        predicted = Fraction(2) ** (sum(e for _, e in mono) - 1)
        top.append(
            {
                "monomial": spin.monomial_text(mono),
                "ordinary": a,
                "spin": b,
                "ratio": (b / a) if a else None,
                "predicted": predicted,
                "match": b == predicted * a,
            }
        )
    return ComparisonReport(k, linear, top)
