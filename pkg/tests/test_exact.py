from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinkerov.exact import (
    LaurentTail,
    OddPowerSumPoly,
    SingularSystemError,
    TruncationError,
    expand_shifted_inverse_power,
    fmt_rational,
    parse_rational,
    solve_linear,
)

p1, p3, p5 = (OddPowerSumPoly.gen(k) for k in (1, 3, 5))

small_frac = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw):
    n = draw(st.integers(0, 4))
    out = OddPowerSumPoly()
    for _ in range(n):
        exps = {k: draw(st.integers(0, 2)) for k in (1, 3, 5)}
        out = out + OddPowerSumPoly.from_monomials([(exps, draw(small_frac))])
    return out


@st.composite
def tails(draw, order=8):
    start = draw(st.integers(1, 3))
    coeffs = draw(st.lists(small_frac, min_size=0, max_size=order - start + 1))
    return LaurentTail(start, coeffs, order)


def test_rational_format_roundtrip():
    for s in ["0", "7", "-3", "55/3", "-1862/3"]:
        assert fmt_rational(parse_rational(s)) == s
    assert fmt_rational(Fraction(4, 2)) == "2"


def test_poly_text_roundtrip():
    f = p3 - 3 * p1**2 + 2 * p1
    assert str(f) == "p3 - 3 p1^2 + 2 p1"
    assert OddPowerSumPoly.parse(str(f)) == f
    assert OddPowerSumPoly.from_json(f.to_json()) == f


def test_degree_and_truncate():
    f = p5 * p1 + p3 + 7
    assert f.degree == 6
    assert f.truncate(3) == p3 + 7
    assert OddPowerSumPoly().degree == -1
    assert f.homogeneous_part(6) == p5 * p1


def test_gen_rejects_even():
    with pytest.raises(ValueError):
        OddPowerSumPoly.gen(2)


def test_evaluate_missing_value():
    with pytest.raises(KeyError):
        (p1 * p3).evaluate({1: 2})


@given(polys(), polys())
def test_grading_multiplicative(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(polys(), polys(), st.dictionaries(st.sampled_from([1, 3, 5]), small_frac, min_size=3))
def test_evaluation_is_a_ring_map(a, b, vals):
    assert (a * b).evaluate(vals) == a.evaluate(vals) * b.evaluate(vals)
    assert (a + b).evaluate(vals) == a.evaluate(vals) + b.evaluate(vals)


@settings(max_examples=60)
@given(tails(), tails())
def test_exp_additive(s, t):
    lhs = (s + t).exp()
    rhs = s.exp() * t.exp()
    for n in range(0, 9):
        assert lhs.coefficient(n) == rhs.coefficient(n)


@given(st.integers(1, 5), small_frac, st.integers(0, 6))
def test_shifted_inverse_power(m, c, extra):
    order = m + extra
    e = expand_shifted_inverse_power(m, c, order)
    # multiply by (1 - c/z)^m = sum binom(m,i) (-c)^i z^{-i}
    from math import comb

    factor = LaurentTail.exact({i: comb(m, i) * (-c) ** i for i in range(m + 1)})
    prod = e * factor
    for n in range(order + 1):
        assert prod.coefficient(n) == (1 if n == m else 0)


def test_truncation_is_enforced():
    t = LaurentTail(1, [1, 2, 3], 3)
    with pytest.raises(TruncationError):
        t.coefficient(4)
    with pytest.raises(TruncationError):
        t + LaurentTail(1, [1], 5)


def test_inverse():
    g = LaurentTail(1, [1, 0, 2, 0, 5], 5)  # z^-1 + 2 z^-3 + 5 z^-5
    inv = g.inverse()
    one = g * inv
    assert one.coefficient(0) == 1
    for n in range(1, one.order + 1):
        assert one.coefficient(n) == 0


def test_cap_drops_high_degree():
    t = LaurentTail(1, [p1, p1 * p3], 2, cap=3)
    assert t.coefficient(2) == 0


def test_solve_linear_unique():
    sol = solve_linear([[2, 1], [1, 3]], [3, 5])
    assert sol == [Fraction(4, 5), Fraction(7, 5)]


def test_solve_linear_singular():
    with pytest.raises(SingularSystemError):
        solve_linear([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(SingularSystemError):
        solve_linear([[1, 2], [2, 4]], [1, 3])
