from fractions import Fraction

import pytest

from spinkerov.exact import OddPowerSumPoly
from spinkerov.oracle import _two_row, character_table, normalized_character, pfaffian, schur_p, schur_q
from spinkerov.partitions import enumerate_partitions
from spinkerov.spin import spin_character_eval


def p_monomial(rho):
    out = OddPowerSumPoly.const(1)
    for part in rho:
        out = out * OddPowerSumPoly.gen(part)
    return out


def test_small_q_functions():
    p1, p3 = OddPowerSumPoly.gen(1), OddPowerSumPoly.gen(3)
    assert schur_q((1,)) == 2 * p1
    assert schur_q((2,)) == 2 * p1**2
    assert schur_q((2, 1)) == Fraction(4, 3) * (p1**3 - p3)
    assert schur_p((2, 1)) == schur_q((2, 1)) / 4


def test_pfaffian_of_2x2_and_4x4():
    a, b, c, d, e, f = (OddPowerSumPoly.const(x) for x in (2, 3, 5, 7, 11, 13))
    z = OddPowerSumPoly()
    m2 = [[z, a], [-a, z]]
    assert pfaffian(m2) == a
    m4 = [[z, a, b, c], [-a, z, d, e], [-b, -d, z, f], [-c, -e, -f, z]]
    assert pfaffian(m4) == a * f - b * e + c * d
    with pytest.raises(ValueError):
        pfaffian([[z]])


def test_padding_consistency():
    for n in range(9):
        for lam in enumerate_partitions(n, "strict"):
            if len(lam) != 3:
                continue
            parts = list(lam) + [0]
            zero = OddPowerSumPoly()
            mat = [[zero] * 4 for _ in range(4)]
            for i in range(4):
                for j in range(i + 1, 4):
                    mat[i][j] = _two_row(parts[i], parts[j])
                    mat[j][i] = -mat[i][j]
            assert schur_q(lam) == pfaffian(mat)


@pytest.mark.parametrize("n", range(0, 9))
def test_table_reconstructs_power_sums(n):
    table = character_table(n)
    assert len(table.strict) == len(table.odd)
    for rho in table.odd:
        total = OddPowerSumPoly()
        for lam in table.strict:
            total = total + schur_p(lam) * table.values[(lam, rho)]
        assert total == p_monomial(rho)


def test_dimensions_n8():
    table = character_table(8)
    dims = {lam: table.dim(lam) for lam in table.strict}
    assert dims == {(8,): 1, (7, 1): 6, (6, 2): 14, (5, 3): 14, (5, 2, 1): 16, (4, 3, 1): 12}


def test_json_shape():
    data = character_table(3).to_json()
    assert data["n"] == 3
    assert data["dims"] == {"3": 1, "2,1": 1}
    assert data["rows"][1] == {"lambda": [2, 1], "values": {"3": -2, "1,1,1": 1}}


def test_agrees_with_contour_formula():
    for n in range(9):
        for lam in enumerate_partitions(n, "strict"):
            for k in (1, 3, 5, 7):
                assert normalized_character((k,), lam) == spin_character_eval(k, lam)


def test_normalized_character_small():
    assert normalized_character((3,), (2, 1)) == -12
    assert normalized_character((3,), (1,)) == 0
