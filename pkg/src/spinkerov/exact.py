"""Exact arithmetic: rationals, polynomials in odd power sums, truncated Laurent tails.

Every other module sits on top of the three value types here.  Nothing in this
package ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

__all__ = [
    "fmt_rational",
    "parse_rational",
    "OddPowerSumPoly",
    "LaurentTail",
    "TruncationError",
    "expand_shifted_inverse_power",
    "series_exp",
    "series_coefficient",
    "solve_linear",
    "SingularSystemError",
]


def fmt_rational(x) -> str:
    """Canonical "num/den" form ("num" when the denominator is 1)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _is_zero(c) -> bool:
    return c == 0


# ---------------------------------------------------------------------------
# Polynomials in p1, p3, p5, ...
# ---------------------------------------------------------------------------

# An exponent vector is a tuple e with e[i] the exponent of p_{2i+1}, trailing
# zeros stripped so that equal monomials have equal keys.


def _strip(exps: tuple) -> tuple:
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def _add_exps(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def monomial_degree(exps: tuple) -> int:
    return sum((2 * i + 1) * e for i, e in enumerate(exps))


def _graded_key(exps: tuple):
    # Sort key for the graded order: degree first, ties by lexicographic
    # comparison of the exponent vector starting at the smallest subscript.
    return (monomial_degree(exps), exps)


class OddPowerSumPoly:
    """Polynomial in the odd power sums p1, p3, p5, ... over the rationals.

    The grading puts p_k in degree k.  Instances are immutable; arithmetic
    mixes freely with ints and Fractions.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            key = _strip(exps)
            clean[key] = clean.get(key, 0) + Fraction(c)
        self.terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "OddPowerSumPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, k: int) -> "OddPowerSumPoly":
        """The generator p_k (k odd)."""
        if k < 1 or k % 2 == 0:
            raise ValueError(f"p_{k}: only odd positive subscripts live in this ring")
        exps = [0] * ((k - 1) // 2) + [1]
        return cls._raw({tuple(exps): Fraction(1)})

    @classmethod
    def const(cls, c) -> "OddPowerSumPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def from_monomials(cls, items: Iterable[tuple[Mapping[int, int], object]]) -> "OddPowerSumPoly":
        """Build from (subscript -> exponent, coefficient) pairs."""
        terms: dict[tuple, Fraction] = {}
        for sub_exps, c in items:
            vec: list[int] = []
            for k, e in sub_exps.items():
                if k < 1 or k % 2 == 0:
                    raise ValueError(f"p_{k}: only odd positive subscripts live in this ring")
                i = (k - 1) // 2
                if len(vec) <= i:
                    vec.extend([0] * (i + 1 - len(vec)))
                vec[i] += e
            key = _strip(tuple(vec))
            terms[key] = terms.get(key, 0) + Fraction(c)
        return cls(terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Grading degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def is_constant(self) -> bool:
        return all(e == () for e in self.terms)

    def subscripts(self) -> set[int]:
        out = set()
        for exps in self.terms:
            out.update(2 * i + 1 for i, e in enumerate(exps) if e)
        return out

    def coefficient(self, sub_exps: Mapping[int, int]) -> Fraction:
        vec: list[int] = []
        for k, e in sub_exps.items():
            i = (k - 1) // 2
            if len(vec) <= i:
                vec.extend([0] * (i + 1 - len(vec)))
            vec[i] = e
        return self.terms.get(_strip(tuple(vec)), Fraction(0))

    def homogeneous_part(self, d: int) -> "OddPowerSumPoly":
        return OddPowerSumPoly._raw({e: c for e, c in self.terms.items() if monomial_degree(e) == d})

    def truncate(self, max_degree: int) -> "OddPowerSumPoly":
        """Drop every monomial of grading degree above ``max_degree``."""
        if max_degree < 0:
            raise ValueError("max_degree must be nonnegative")
        return OddPowerSumPoly._raw(
            {e: c for e, c in self.terms.items() if monomial_degree(e) <= max_degree}
        )

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in decreasing graded order."""
        return sorted(self.terms.items(), key=lambda t: _graded_key(t[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "OddPowerSumPoly | None":
        if isinstance(other, OddPowerSumPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return OddPowerSumPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return OddPowerSumPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return OddPowerSumPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return OddPowerSumPoly()
            return OddPowerSumPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, OddPowerSumPoly):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _add_exps(ea, eb)
                out[e] = out.get(e, 0) + ca * cb
        return OddPowerSumPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, OddPowerSumPoly) and other.is_constant() and other.terms:
            return self * (1 / other.constant_term())
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)) and self.is_constant() and self.terms:
            return OddPowerSumPoly.const(Fraction(other) / self.constant_term())
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = OddPowerSumPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation and I/O ------------------------------------------------

    def evaluate(self, values: Mapping[int, object]) -> Fraction:
        """Substitute p_k -> values[k] and evaluate exactly."""
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    k = 2 * i + 1
                    if k not in values:
                        raise KeyError(f"no value supplied for p{k}")
                    term *= Fraction(values[k]) ** e
            total += term
        return total

    def to_json(self) -> list[dict]:
        return [
            {
                "exponents": {str(2 * i + 1): e for i, e in enumerate(exps) if e},
                "coeff": fmt_rational(c),
            }
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "OddPowerSumPoly":
        return cls.from_monomials(
            ({int(k): int(v) for k, v in t["exponents"].items()}, parse_rational(t["coeff"]))
            for t in data
        )

    @classmethod
    def parse(cls, text: str) -> "OddPowerSumPoly":
        """Read the plain-text form produced by ``str``."""
        return cls.from_monomials(parse_terms(text, "p"))

    def __str__(self):
        return render_terms(
            [
                ([(2 * i + 1, e) for i, e in reversed(list(enumerate(exps))) if e], c)
                for exps, c in self.sorted_terms()
            ],
            "p",
        )

    def __repr__(self):
        return f"OddPowerSumPoly({self})"


def render_terms(terms: Sequence[tuple[Sequence[tuple[int, int]], Fraction]], letter: str) -> str:
    """Plain-text rendering: ``R8 + 70 R6 - 3 R4 R2 + 7/4 R2^2``.

    ``terms`` holds (factors, coefficient) with factors as (subscript, exponent)
    pairs in display order.
    """
    if not terms:
        return "0"
    pieces = []
    for idx, (factors, c) in enumerate(terms):
        mono = " ".join(f"{letter}{k}" + (f"^{e}" if e != 1 else "") for k, e in factors)
        mag = abs(c)
        if not mono:
            body = fmt_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{fmt_rational(mag)} {mono}"
        if idx == 0:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def parse_terms(text: str, letter: str) -> list[tuple[dict[int, int], Fraction]]:
    """Inverse of :func:`render_terms`: ``"R4 + 7/4 R2^2"`` -> [({4: 1}, 1), ({2: 2}, 7/4)]."""
    text = " ".join(text.split())
    if text == "0":
        return []
    text = text.replace(" - ", " + -")
    out = []
    for raw in text.split(" + "):
        raw = raw.strip()
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:].strip()
        coeff = Fraction(1)
        factors: dict[int, int] = {}
        for tok in raw.split():
            if tok.startswith(letter):
                base, _, exp = tok[len(letter):].partition("^")
                sub = int(base)
                factors[sub] = factors.get(sub, 0) + (int(exp) if exp else 1)
            else:
                coeff *= Fraction(tok)
        out.append((factors, sign * coeff))
    return out


# ---------------------------------------------------------------------------
# Truncated Laurent series at z = infinity
# ---------------------------------------------------------------------------


class TruncationError(ValueError):
    """A coefficient was requested beyond the precision a series carries."""


def _cap_coeff(c, cap):
    if cap is not None and isinstance(c, OddPowerSumPoly):
        return c.truncate(cap)
    return c


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentTail:
    """A series sum_n c_n z^{-n} known exactly through z^{-order}.

    ``start`` is the exponent index of the first stored coefficient (the series
    starts at z^{-start}; a negative start means a polynomial part in z).
    ``order=None`` marks an exact finite Laurent polynomial.  ``cap``, when set,
    drops monomials of grading degree above it from polynomial coefficients;
    that is a ring map, so every retained coefficient stays correct modulo
    higher degrees.
    """

    __slots__ = ("start", "coeffs", "order", "cap")

    def __init__(self, start: int, coeffs: Sequence, order: int | None = None, cap: int | None = None):
        coeffs = [_cap_coeff(c, cap) for c in coeffs]
        if order is not None:
            del coeffs[max(0, order - start + 1):]
        # strip leading zeros so that ``start`` is the true valuation
        lead = 0
        while lead < len(coeffs) and _is_zero(coeffs[lead]):
            lead += 1
        if lead == len(coeffs):
            coeffs = []
            start = order + 1 if order is not None else 0
        else:
            start += lead
            coeffs = coeffs[lead:]
            while coeffs and _is_zero(coeffs[-1]):
                coeffs.pop()
        self.start = start
        self.coeffs = tuple(coeffs)
        self.order = order
        self.cap = cap

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact(cls, terms: Mapping[int, object], cap: int | None = None) -> "LaurentTail":
        """Finite Laurent polynomial; ``terms[n]`` is the coefficient of z^{-n}."""
        terms = {n: c for n, c in terms.items() if not _is_zero(c)}
        if not terms:
            return cls(0, [], None, cap)
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(n, 0) for n in range(lo, hi + 1)], None, cap)

    @classmethod
    def from_z_polynomial(cls, coeffs: Sequence, cap: int | None = None) -> "LaurentTail":
        """Exact polynomial a_0 + a_1 z + a_2 z^2 + ... given ascending in z."""
        return cls.exact({-j: c for j, c in enumerate(coeffs)}, cap)

    @classmethod
    def one(cls, order: int | None = None, cap: int | None = None) -> "LaurentTail":
        return cls(0, [Fraction(1)], order, cap)

    @classmethod
    def zero(cls, order: int | None = None, cap: int | None = None) -> "LaurentTail":
        return cls(0, [], order, cap)

    # -- access ------------------------------------------------------------

    @property
    def exact_series(self) -> bool:
        return self.order is None

    def coefficient(self, n: int):
        """Coefficient of z^{-n}."""
        if self.order is not None and n > self.order:
            raise TruncationError(
                f"coefficient of z^-{n} requested but series is only known through z^-{self.order}"
            )
        i = n - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, order: int) -> "LaurentTail":
        if self.order is not None and order > self.order:
            raise TruncationError(f"cannot extend precision from {self.order} to {order}")
        return LaurentTail(self.start, self.coeffs, order, self.cap)

    def with_cap(self, cap: int | None) -> "LaurentTail":
        return LaurentTail(self.start, self.coeffs, self.order, _min_cap(self.cap, cap))

    def map_coefficients(self, fn) -> "LaurentTail":
        return LaurentTail(self.start, [fn(c) for c in self.coeffs], self.order, self.cap)

    def __repr__(self):
        body = " + ".join(f"({c})z^-{self.start + i}" for i, c in enumerate(self.coeffs)) or "0"
        tail = f" + O(z^-{self.order + 1})" if self.order is not None else ""
        return f"LaurentTail[{body}{tail}]"

    def __eq__(self, other):
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return (self.start, self.coeffs, self.order) == (other.start, other.coeffs, other.order)

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _check_orders(self, other: "LaurentTail") -> int | None:
        if self.order is None:
            return other.order
        if other.order is None or other.order == self.order:
            return self.order
        raise TruncationError(
            f"mixing truncation orders {self.order} and {other.order}; truncate explicitly first"
        )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, OddPowerSumPoly)):
            other = LaurentTail(0, [other])
        if not isinstance(other, LaurentTail):
            return NotImplemented
        order = self._check_orders(other)
        lo = min(self.start, other.start) if (self.coeffs or other.coeffs) else 0
        hi = max(self.start + len(self.coeffs), other.start + len(other.coeffs))
        if order is not None:
            hi = min(hi, order + 1)
        out = [self.coefficient_unchecked(n) + other.coefficient_unchecked(n) for n in range(lo, hi)]
        return LaurentTail(lo, out, order, _min_cap(self.cap, other.cap))

    __radd__ = __add__

    def coefficient_unchecked(self, n: int):
        i = n - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __neg__(self):
        return LaurentTail(self.start, [-c for c in self.coeffs], self.order, self.cap)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, OddPowerSumPoly)):
            other = LaurentTail(0, [other])
        if not isinstance(other, LaurentTail):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, OddPowerSumPoly)):
            return LaurentTail(self.start, [c * other for c in self.coeffs], self.order, self.cap)
        if not isinstance(other, LaurentTail):
            return NotImplemented
        cap = _min_cap(self.cap, other.cap)
        # A product is known through the first exponent where either factor's
        # unknown tail can contribute.
        candidates = []
        if self.order is not None:
            candidates.append(self.order + other.start)
        if other.order is not None:
            candidates.append(other.order + self.start)
        order = min(candidates) if candidates else None
        if not self.coeffs or not other.coeffs:
            return LaurentTail.zero(order, cap)
        start = self.start + other.start
        length = len(self.coeffs) + len(other.coeffs) - 1
        if order is not None:
            length = min(length, order - start + 1)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(max(length, 0)):
            acc = 0
            for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
                ai = a[i]
                bj = b[n - i]
                if _is_zero(ai) or _is_zero(bj):
                    continue
                acc = acc + ai * bj
            out.append(_cap_coeff(acc, cap))
        return LaurentTail(start, out, order, cap)

    __rmul__ = __mul__

    def inverse(self, order: int | None = None) -> "LaurentTail":
        """Multiplicative inverse; the leading coefficient must be a unit.

        Exact inputs need an explicit ``order`` for the (infinite) result.
        """
        if not self.coeffs:
            raise ZeroDivisionError("inverse of a zero series")
        a0 = self.coeffs[0]
        if isinstance(a0, OddPowerSumPoly):
            if not a0.is_constant():
                raise ValueError("leading coefficient is not invertible")
            a0 = a0.constant_term()
        inv0 = 1 / Fraction(a0)
        s = self.start
        if self.order is None:
            if order is None:
                raise TruncationError("inverse of an exact series needs a target order")
            target = order
        else:
            target = self.order - 2 * s
            if order is not None:
                target = min(target, order)
        count = target + s + 1
        a = self.coeffs
        b: list = []
        for n in range(max(count, 0)):
            if n == 0:
                b.append(inv0)
                continue
            acc = 0
            for i in range(1, min(n, len(a) - 1) + 1):
                if _is_zero(a[i]) or _is_zero(b[n - i]):
                    continue
                acc = acc + a[i] * b[n - i]
            b.append(_cap_coeff(-acc * inv0, self.cap))
        return LaurentTail(-s, b, target, self.cap)

    def __pow__(self, n: int) -> "LaurentTail":
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentTail.one(None, self.cap)
        if n == 0:
            return LaurentTail.one(self.order, self.cap)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exp(self, order: int | None = None) -> "LaurentTail":
        """Formal exponential; defined only when the series starts at z^{-1} or later."""
        if self.coeffs and self.start < 1:
            raise ValueError("exp needs a series with no constant or polynomial part")
        n_max = self.order if order is None else (order if self.order is None else min(order, self.order))
        if n_max is None:
            raise TruncationError("exp of an exact series needs a target order")
        t = [self.coefficient_unchecked(j) for j in range(n_max + 1)]
        e: list = [Fraction(1)]
        for n in range(1, n_max + 1):
            acc = 0
            for j in range(1, n + 1):
                if _is_zero(t[j]) or _is_zero(e[n - j]):
                    continue
                acc = acc + (j * t[j]) * e[n - j]
            e.append(_cap_coeff(acc * Fraction(1, n), self.cap))
        return LaurentTail(0, e, n_max, self.cap)


def expand_shifted_inverse_power(m: int, c, order: int, cap: int | None = None) -> LaurentTail:
    """(z - c)^{-m} = sum_i binom(m+i-1, i) c^i z^{-m-i}, kept through z^{-order}."""
    if m <= 0:
        raise ValueError("m must be positive")
    if order < m:
        raise ValueError(f"order {order} is below the leading exponent {m}")
    c = Fraction(c) if not isinstance(c, OddPowerSumPoly) else c
    return LaurentTail(m, [comb(m + i - 1, i) * c**i for i in range(order - m + 1)], order, cap)


def series_exp(t: LaurentTail, order: int | None = None) -> LaurentTail:
    return t.exp(order)


def series_coefficient(t: LaurentTail, n: int):
    return t.coefficient(n)


# ---------------------------------------------------------------------------
# Exact linear solve
# ---------------------------------------------------------------------------


class SingularSystemError(ValueError):
    """The system has no unique solution (rank deficient or inconsistent)."""

    def __init__(self, message: str, rank: int = -1):
        super().__init__(message)
        self.rank = rank


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = 1
        for v in fr:
            den = den * v.denominator // _gcd(den, v.denominator)
        out.append([int(v * den) for v in fr])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def echelon_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals (fraction-free elimination)."""
    return _bareiss(_integer_rows(rows), len(rows[0]) if rows else 0)[1]


def _bareiss(m: list[list[int]], ncols: int) -> tuple[list[tuple[int, int]], int]:
    """In-place fraction-free forward elimination; returns pivots and rank."""
    nrows = len(m)
    prev = 1
    r = 0
    pivots: list[tuple[int, int]] = []
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            for j in range(c + 1, len(row_i)):
                num = piv * row_i[j] - f * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
            row_i[c] = 0
        prev = piv
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    return pivots, r


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Unique exact solution of an (over)determined system ``rows @ x = rhs``.

    Raises SingularSystemError when the columns are dependent or the system
    is inconsistent.
    """
    if not rows:
        raise SingularSystemError("empty system", 0)
    ncols = len(rows[0])
    aug = _integer_rows([list(r) + [b] for r, b in zip(rows, rhs)])
    pivots, rank = _bareiss(aug, ncols + 1)
    if any(c == ncols for _, c in pivots):
        raise SingularSystemError("inconsistent system", rank)
    if rank < ncols:
        raise SingularSystemError(f"rank {rank} < {ncols} unknowns", rank)
    x: list[Fraction] = [Fraction(0)] * ncols
    for r, c in reversed(pivots):
        row = aug[r]
        acc = Fraction(row[ncols])
        for j in range(c + 1, ncols):
            if row[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x
