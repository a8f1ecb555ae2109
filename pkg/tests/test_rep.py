"""Exact representation-theory oracles.

The frozen dimension values below are classical: fundamental and small
tensor representations of SU(m) and Sp(m) whose dimensions are standard
table entries, recomputed here by hand from the product formula before
being frozen.
"""

from fractions import Fraction

import math

import pytest

from qkepler.rep import (
    HighestWeight,
    RootSystem,
    angular_eigenvalue,
    casimir,
    character_inner,
    dim_R_l,
    schur_norm,
    sp1_character,
    weyl_dim,
)


def test_highest_weight_storage_and_errors():
    hw = HighestWeight([1, Fraction(1, 2), 0])
    assert hw.twice == (2, 1, 0)
    assert hw.entries == (Fraction(1), Fraction(1, 2), Fraction(0))
    with pytest.raises(ValueError):
        HighestWeight([Fraction(1, 3)])


def test_highest_weight_shift_and_conjugate():
    hw = HighestWeight([2, 1, 0])
    assert hw.shifted(1).entries == (3, 2, 1)
    assert hw.conjugate().entries == (0, -1, -2)
    assert hw.conjugate().conjugate() == hw


def test_root_system_validation():
    with pytest.raises(ValueError):
        RootSystem("B", 2)
    with pytest.raises(ValueError):
        RootSystem("A", 0)


def test_root_counts_and_rho():
    a2 = RootSystem("A", 2)
    assert len(a2.positive_roots()) == 3
    assert a2.rho() == (1, 0, -1)
    c2 = RootSystem("C", 2)
    assert len(c2.positive_roots()) == 4
    assert c2.rho() == (2, 1)
    c3 = RootSystem("C", 3)
    assert c3.rho() == (3, 2, 1)


# SU(m) dimensions: (1,0,0) -> 3, adjoint (2,1,0) -> 8, and the SU(4)
# family used by the weight bookkeeping downstream.
A_TABLE = [
    (2, (1, 0, 0), 3),
    (2, (1, 1, 0), 3),
    (2, (2, 1, 0), 8),
    (2, (3, 0, 0), 10),
    (3, (1, 0, 0, 0), 4),
    (3, (1, 1, 0, 0), 6),
    (3, (1, 1, 1, 0), 4),
    (3, (2, 0, 0, 0), 10),
    (3, (2, 1, 0, 0), 20),
    (3, (2, 2, 0, 0), 20),
    (1, (5, 0), 6),
]

# Sp(m) dimensions: defining, traceless 2-forms, symmetric squares.
C_TABLE = [
    (1, (1,), 2),
    (1, (3,), 4),
    (2, (1, 0), 4),
    (2, (1, 1), 5),
    (2, (2, 0), 10),
    (2, (2, 1), 16),
    (2, (2, 2), 14),
    (3, (1, 0, 0), 6),
    (3, (1, 1, 0), 14),
    (3, (1, 1, 1), 14),
    (3, (2, 0, 0), 21),
]


@pytest.mark.parametrize("rank, weight, dim", A_TABLE)
def test_weyl_dim_type_a(rank, weight, dim):
    assert weyl_dim(RootSystem("A", rank), HighestWeight(weight)) == dim


@pytest.mark.parametrize("rank, weight, dim", C_TABLE)
def test_weyl_dim_type_c(rank, weight, dim):
    assert weyl_dim(RootSystem("C", rank), HighestWeight(weight)) == dim


def test_weyl_dim_shift_invariance_type_a():
    # type A dimensions depend only on entry differences
    rs = RootSystem("A", 3)
    hw = HighestWeight([3, 1, 1, 0])
    base = weyl_dim(rs, hw)
    assert weyl_dim(rs, hw.shifted(2)) == base
    assert weyl_dim(rs, hw.shifted(Fraction(1, 2))) == base
    assert weyl_dim(rs, hw.shifted(-5)) == base


def test_weyl_dim_conjugate_invariance_type_a():
    rs = RootSystem("A", 3)
    hw = HighestWeight([4, 2, 1, 0])
    assert weyl_dim(rs, hw.conjugate()) == weyl_dim(rs, hw)


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(RootSystem("C", 2), HighestWeight([1, 2]))
    with pytest.raises(ValueError):
        weyl_dim(RootSystem("C", 2), HighestWeight([1, -1]))
    with pytest.raises(ValueError):
        weyl_dim(RootSystem("A", 2), HighestWeight([1, 0]))


def test_casimir_sp1():
    for s in range(9):
        assert casimir(RootSystem("C", 1), HighestWeight([s])) == s * (s + 2)


def test_casimir_closed_form_type_c():
    # <lam, lam + 2 rho> = sum_i lam_i (lam_i + 2(n+1-i))
    for n in (2, 3, 4):
        rs = RootSystem("C", n)
        for lam in [(3, 1) + (0,) * (n - 2), (2, 2) + (0,) * (n - 2),
                    (5, 0) + (0,) * (n - 2)]:
            expected = sum(li * (li + 2 * (n - i)) for i, li in enumerate(lam))
            assert casimir(rs, HighestWeight(lam)) == expected


def test_casimir_requires_dominant():
    with pytest.raises(ValueError):
        casimir(RootSystem("C", 2), HighestWeight([0, 1]))


@pytest.mark.parametrize("n, sigma_bar, l, dim", [
    (2, 0, 0, 1),
    (2, 0, 1, 5),
    (2, 0, 2, 14),
    (2, 0, 3, 30),
    (2, 1, 0, 4),
    (2, 1, 1, 16),
    (2, 2, 0, 10),
    (3, 0, 1, 14),
    (3, 1, 0, 6),
])
def test_dim_closed_form_frozen(n, sigma_bar, l, dim):
    assert dim_R_l(n, sigma_bar, l) == dim


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dim_closed_form_equals_weyl(n):
    rs = RootSystem("C", n)
    for sigma_bar in range(7):
        for l in range(7):
            hw = HighestWeight([l + sigma_bar, l] + [0] * (n - 2))
            assert dim_R_l(n, sigma_bar, l) == weyl_dim(rs, hw)


def test_dim_closed_form_validation():
    with pytest.raises(ValueError):
        dim_R_l(1, 0, 0)
    with pytest.raises(ValueError):
        dim_R_l(2, -1, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_angular_eigenvalue_is_twice_casimir_difference(n):
    c1 = RootSystem("C", 1)
    cn = RootSystem("C", n)
    for sigma_bar in range(9):
        cas_sigma = casimir(c1, HighestWeight([sigma_bar]))
        for l in range(9):
            hw = HighestWeight([l + sigma_bar, l] + [0] * (n - 2))
            assert angular_eigenvalue(n, sigma_bar, l) == \
                2 * (casimir(cn, hw) - cas_sigma)


def test_angular_eigenvalue_untwisted_small():
    # sigma_bar = 0 reduces to 4 l (l + 2n - 1)
    assert angular_eigenvalue(2, 0, 1) == 16
    assert angular_eigenvalue(3, 0, 2) == 56


def test_sp1_character_values():
    assert sp1_character(0, 0.3) == 1.0
    assert sp1_character(1, 0.3) == pytest.approx(2.0 * math.cos(0.3))
    for s in range(6):
        assert sp1_character(s, 0.0) == pytest.approx(s + 1)
        assert sp1_character(s, math.pi) == pytest.approx((s + 1) * (-1) ** s)
    with pytest.raises(ValueError):
        sp1_character(-1, 0.5)


def test_sp1_character_clebsch_recurrence():
    # chi_1 chi_s = chi_{s+1} + chi_{s-1}
    for theta in (0.17, 0.9, 2.4):
        for s in range(1, 8):
            lhs = sp1_character(1, theta) * sp1_character(s, theta)
            rhs = sp1_character(s + 1, theta) + sp1_character(s - 1, theta)
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_schur_orthonormality():
    for s in range(11):
        assert abs(schur_norm(s) - 1.0) < 1e-12
    for s1 in range(6):
        for s2 in range(s1 + 1, 7):
            assert abs(character_inner(s1, s2)) < 1e-12


def test_character_inner_point_floor():
    with pytest.raises(ValueError):
        character_inner(0, 0, quadrature_points=32)


def test_schur_norm_error_decays_when_aliased():
    # at sigma_bar = 63 the 64-point rule aliases the integrand, so the
    # error is visible and must fall strictly under refinement
    errs = [abs(schur_norm(63, quadrature_points=p) - 1.0)
            for p in (64, 128, 256, 512, 1024)]
    assert errs[0] > 0.1
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-12
