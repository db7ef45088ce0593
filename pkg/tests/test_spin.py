from fractions import Fraction

import pytest

from spinkerov.exact import LaurentTail, OddPowerSumPoly
from spinkerov.known import SPIN_CHARACTERS, SPIN_FREE_CUMULANTS, SYMMETRIZED_CUMULANTS
from spinkerov.measures import biane_cumulant, biane_cumulants, cauchy_transform, cumulant_from_cauchy, super_power_sum
from spinkerov.partitions import double, enumerate_partitions, frobenius, power_sums
from spinkerov.spin import (
    PhiLogData,
    phi_ratio_series,
    spin_character_eval,
    spin_character_poly,
    spin_free_cumulant_eval,
    spin_free_cumulant_poly,
    super_power_sum_double_poly,
    symmetrized_cumulant_eval,
    symmetrized_cumulant_poly,
)

HALF = Fraction(1, 2)


def strict_upto(n):
    return [lam for m in range(n + 1) for lam in enumerate_partitions(m, "strict")]


def ps(lam):
    return power_sums(lam, 15)


@pytest.mark.parametrize("k", sorted(SPIN_CHARACTERS))
def test_spin_character_printed(k):
    assert spin_character_poly(k) == OddPowerSumPoly.parse(SPIN_CHARACTERS[k])


@pytest.mark.parametrize("two_k", sorted(SPIN_FREE_CUMULANTS))
def test_spin_cumulant_printed(two_k):
    assert spin_free_cumulant_poly(two_k) == OddPowerSumPoly.parse(SPIN_FREE_CUMULANTS[two_k])


def test_symmetrized_cumulants_printed():
    for k, text in SYMMETRIZED_CUMULANTS.items():
        assert symmetrized_cumulant_poly(k) == OddPowerSumPoly.parse(text)


def test_symmetrized_odd_cumulants_vanish():
    for k in range(3, 14, 2):
        assert symmetrized_cumulant_poly(k).is_zero()


@pytest.mark.parametrize("k", [1, 3, 5])
def test_cap_is_lossless(k):
    assert spin_character_poly(k, capped=True) == spin_character_poly(k, capped=False)
    assert spin_free_cumulant_poly(k + 1, capped=True) == spin_free_cumulant_poly(k + 1, capped=False)


@pytest.mark.parametrize("k", range(1, 14, 2))
def test_degree_structure(k):
    pk = OddPowerSumPoly.gen(k)
    for rest in (spin_character_poly(k) - pk, spin_free_cumulant_poly(k + 1) - pk):
        assert rest.degree <= k - 1
        assert all(s <= k - 2 for s in rest.subscripts())


def test_spot_values():
    assert spin_character_eval(3, (2, 1)) == -12
    assert spin_character_eval(3, (3,)) == 6
    assert spin_free_cumulant_eval(4, (2, 1)) == -15


def test_character_vanishes_below_k():
    for k in range(1, 10, 2):
        for lam in strict_upto(8):
            if sum(lam) < k:
                assert spin_character_eval(k, lam) == 0


def test_symbolic_and_numeric_paths_agree():
    for lam in strict_upto(7):
        for k in (1, 3, 5, 7):
            if sum(lam) >= k:
                assert spin_character_poly(k).evaluate(ps(lam)) == spin_character_eval(k, lam)
        for two_k in (2, 4, 6):
            assert spin_free_cumulant_poly(two_k).evaluate(ps(lam)) == spin_free_cumulant_eval(two_k, lam)


def test_doubling_of_super_power_sums():
    for lam in strict_upto(10):
        c = frobenius(double(lam))
        for n in range(1, 11):
            assert super_power_sum(c, n) == super_power_sum_double_poly(n).evaluate(ps(lam))


def test_cumulant_of_double_diagram():
    for lam in strict_upto(8):
        d = double(lam)
        rs = biane_cumulants(d, 8)
        for k in range(1, 5):
            assert rs[2 * k] / 2 == spin_free_cumulant_poly(2 * k).evaluate(ps(lam))


def test_cumulant_spot_on_double():
    assert double((2, 1)) == (3, 3)
    assert biane_cumulant((3, 3), 4) == -30


def test_double_cauchy_transform_from_phi():
    order = 10
    for lam in strict_upto(8):
        data = PhiLogData.for_order(order, lam)
        ratio = phi_ratio_series(1, 0, 1, order, data)
        g = LaurentTail.exact({1: 1}) * ratio
        direct = cauchy_transform(double(lam), order + 1)
        for n in range(1, order + 1):
            assert g.coefficient(n) == direct.coefficient(n)


def test_symmetrized_cumulants_from_measure():
    order = 10
    for lam in strict_upto(8):
        data = PhiLogData.for_order(order, lam)
        g = LaurentTail.exact({1: 1}) * phi_ratio_series(HALF, -HALF, 1, order, data)
        for k in range(2, 9):
            half_rk = cumulant_from_cauchy(g, k) / 2
            assert half_rk == symmetrized_cumulant_poly(k).evaluate(ps(lam))
            assert half_rk == symmetrized_cumulant_eval(k, lam)


def test_odd_cumulant_of_double_is_not_zero():
    found = [
        (lam, k)
        for lam in strict_upto(4)
        for k in (3, 5)
        if biane_cumulant(double(lam), k) != 0
    ]
    assert found


def test_parity_errors():
    with pytest.raises(ValueError):
        spin_character_poly(4)
    with pytest.raises(ValueError):
        spin_free_cumulant_poly(3)
    with pytest.raises(ValueError):
        spin_character_eval(3, (2, 2))
