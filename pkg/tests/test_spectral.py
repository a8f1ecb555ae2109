from fractions import Fraction

import math

import pytest

from qkepler.rep import HighestWeight, RootSystem, weyl_dim
from qkepler.spectral import (
    ModelParams,
    QuantumNumbers,
    degeneracy,
    dimension_equality_check,
    energy,
    energy_kl,
    genfunc_check,
    hspace_weight,
    ktype_dim_check,
    ktype_weight,
    level_report,
    oscillator_level_dim,
    rkappa_weight,
    _series_inverse_one_minus_t_pow,
)


def test_param_validation():
    with pytest.raises(ValueError):
        ModelParams(1, 0)
    with pytest.raises(ValueError):
        ModelParams(2, -1)
    with pytest.raises(ValueError):
        QuantumNumbers(0, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(1, -1)
    assert QuantumNumbers(3, 2).I == 4


@pytest.mark.parametrize("n, sigma_bar, I, expected", [
    (2, 0, 0, Fraction(-1, 8)),
    (2, 0, 1, Fraction(-1, 18)),
    (2, 0, 2, Fraction(-1, 32)),
    (2, 1, 0, Fraction(-2, 25)),
    (3, 0, 0, Fraction(-1, 18)),
    (3, 2, 0, Fraction(-1, 32)),
])
def test_energy_frozen(n, sigma_bar, I, expected):
    assert energy(ModelParams(n, sigma_bar), I) == expected


def test_energy_validation():
    with pytest.raises(ValueError):
        energy(ModelParams(2, 0), -1)


def test_energy_monotone_and_bounded():
    p = ModelParams(3, 1)
    vals = [energy(p, I) for I in range(30)]
    assert all(v < 0 for v in vals)
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert vals[-1] > Fraction(-1, 1000)


def test_energy_collapse_exact():
    # E depends on (k, l) only through I = k - 1 + l
    for n in (2, 3, 4):
        for sigma_bar in range(5):
            p = ModelParams(n, sigma_bar)
            for k in range(1, 13):
                for l in range(13 - k):
                    q = QuantumNumbers(k, l)
                    assert energy_kl(p, q) == energy(p, q.I)


@pytest.mark.parametrize("n, sigma_bar, degs", [
    (2, 0, [1, 6, 20, 50]),
    (2, 1, [4, 20]),
    (3, 0, [1, 15]),
])
def test_degeneracy_frozen(n, sigma_bar, degs):
    p = ModelParams(n, sigma_bar)
    assert [degeneracy(p, I) for I in range(len(degs))] == degs


def test_degeneracy_validation():
    with pytest.raises(ValueError):
        degeneracy(ModelParams(2, 0), -1)


def test_oscillator_level_dim_frozen():
    assert oscillator_level_dim(2, 0) == 1
    assert oscillator_level_dim(2, 1) == 8
    assert oscillator_level_dim(2, 2) == 36
    assert oscillator_level_dim(3, 2) == 78
    assert oscillator_level_dim(2, 3) == math.comb(10, 7)
    with pytest.raises(ValueError):
        oscillator_level_dim(2, -1)


def test_dimension_equality_spot_value():
    chk = dimension_equality_check(2, 2)
    assert (chk.lhs, chk.rhs, chk.passed) == (36, 36, True)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dimension_equality_sweep(n):
    for k in range(13):
        assert dimension_equality_check(n, k).passed


def test_series_inversion_small():
    # (1-t)^{-8} starts 1, 8, 36, 120
    assert _series_inverse_one_minus_t_pow(8, 3) == [1, 8, 36, 120]
    # the geometric series itself
    assert _series_inverse_one_minus_t_pow(1, 4) == [1, 1, 1, 1, 1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_genfunc_triple_agreement(n):
    chk = genfunc_check(n, 12)
    assert chk.passed
    assert chk.coefficients[0] == 1
    assert chk.coefficients[1] == 4 * n
    with pytest.raises(ValueError):
        genfunc_check(n, 0)


def test_ktype_weight_frozen():
    p = ModelParams(2, 0)
    assert ktype_weight(p, 1).entries == (-1, -1, -2, -2)
    p = ModelParams(2, 3)
    assert ktype_weight(p, 2).entries == (-1, -1, -3, -6)
    with pytest.raises(ValueError):
        ktype_weight(p, -1)


def test_ktype_weight_entry_sum_is_oscillator_level():
    for n in (2, 3):
        for sigma_bar in range(4):
            p = ModelParams(n, sigma_bar)
            for I in range(6):
                total = -sum(ktype_weight(p, I).entries)
                assert total == 2 * I + sigma_bar + 2 * n


def test_hspace_weight_is_level_zero_ktype():
    for n in (2, 3):
        for sigma_bar in range(4):
            p = ModelParams(n, sigma_bar)
            assert hspace_weight(p) == ktype_weight(p, 0)


def test_ktype_dim_check_spot_values():
    chk = ktype_dim_check(ModelParams(2, 0), 1)
    assert (chk.u2n_dim, chk.sp_sum) == (6, 6)
    chk = ktype_dim_check(ModelParams(2, 1), 0)
    assert (chk.u2n_dim, chk.sp_sum) == (4, 4)


@pytest.mark.parametrize("n", [2, 3])
def test_ktype_dim_check_sweep(n):
    for sigma_bar in range(6):
        p = ModelParams(n, sigma_bar)
        for I in range(6):
            assert ktype_dim_check(p, I).passed


def test_rkappa_weight_forms():
    assert rkappa_weight(2, 1, 2, 1).entries == (4, 3, 1, 1)
    assert rkappa_weight(2, 1, 2, 1, conjugate=True).entries == (-1, -1, -3, -4)
    half = rkappa_weight(2, 0, 1, Fraction(1, 2))
    assert half.entries == (Fraction(3, 2), Fraction(3, 2),
                            Fraction(1, 2), Fraction(1, 2))


def test_ktype_weight_is_conjugate_rkappa_at_one():
    for n in (2, 3):
        for sigma_bar in range(4):
            p = ModelParams(n, sigma_bar)
            for I in range(5):
                assert ktype_weight(p, I) == \
                    rkappa_weight(n, sigma_bar, I, 1, conjugate=True)


def test_rkappa_dimension_matches_constituent():
    # the kappa twist shifts all entries equally, so type A dimensions of
    # the level weights agree with the conjugated ones
    rs = RootSystem("A", 3)
    for sigma_bar in range(3):
        for l in range(3):
            hw = rkappa_weight(2, sigma_bar, l, 1)
            assert weyl_dim(rs, hw) == weyl_dim(rs, hw.conjugate())


def test_level_report_consistency():
    p = ModelParams(2, 1)
    rep = level_report(p, 2)
    assert rep.I == 2
    assert rep.energy == energy(p, 2)
    assert rep.degeneracy == degeneracy(p, 2)
    assert rep.ktype == ktype_weight(p, 2)
