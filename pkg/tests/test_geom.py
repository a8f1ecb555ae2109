import numpy as np
import pytest

from qkepler.geom import (
    TangentSample,
    embed_u2n,
    embed_u2n_uv,
    fubini_study_form,
    jmat,
    metric_identity_residual,
    metric_sweep,
    ostar_membership,
    ostar_sweep,
    quotient_factor_check,
    quotient_sweep,
    random_sp,
    random_unitary,
    sp_n_in_ostar,
    weight_double,
)
from qkepler.qlinalg import (
    QMatrix,
    Quaternion,
    QVector,
    complexify_matrix,
    is_symplectic,
    random_qvector,
    random_unit_quaternion,
)


def test_tangent_sample_validation():
    Z = QVector.basis(2, 0)
    with pytest.raises(ValueError):
        TangentSample(Z, QVector.zero(3))
    with pytest.raises(ValueError):
        TangentSample(QVector.zero(2), Z)


def test_fubini_study_vanishes_on_vertical_directions():
    # W = Z q moves only along the fiber, so its FS length is zero
    rng = np.random.default_rng(2)
    for _ in range(10):
        Z = random_qvector(3, rng)
        q = random_unit_quaternion(rng)
        s = TangentSample(Z, Z.right_mul(q))
        assert abs(fubini_study_form(s)) < 1e-13 * (1.0 + q.norm2())


def test_fubini_study_positive_on_horizontal():
    Z = QVector.basis(2, 0)
    W = QVector.basis(2, 1)
    assert fubini_study_form(TangentSample(Z, W)) == pytest.approx(1.0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_metric_identity_on_random_samples(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(50):
        s = TangentSample(random_qvector(n, rng), random_qvector(n, rng))
        assert metric_identity_residual(s) < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4])
def test_metric_sweep(n):
    assert metric_sweep(n, 200, seed=1) < 1e-12


def test_quotient_factor_unit_example():
    # a = b = (1): X_a^dag X_a = I_2, trace 2; sphere pairing gives 1
    a = QVector([Quaternion(1.0)])
    s1, s2 = quotient_factor_check(a, a)
    assert s1 == pytest.approx(2.0)
    assert s2 == pytest.approx(1.0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_quotient_factor_is_twice(n):
    assert quotient_sweep(n, 200, seed=3) < 1e-13


def test_quotient_factor_length_mismatch():
    with pytest.raises(ValueError):
        quotient_factor_check(QVector.zero(1), QVector.zero(2))


def test_jmat_small():
    np.testing.assert_array_equal(jmat(1), np.array([[0.0, -1.0], [1.0, 0.0]]))
    J = jmat(2)
    np.testing.assert_array_equal(J @ J, -np.eye(4))


def test_ostar_membership_identity_and_rejects():
    assert ostar_membership(np.eye(8))
    assert not ostar_membership(2.0 * np.eye(8))
    with pytest.raises(ValueError):
        ostar_membership(np.eye(6))


@pytest.mark.parametrize("n", [2, 3])
def test_embedded_unitaries_satisfy_both_relations(n):
    rng = np.random.default_rng(40 + n)
    for _ in range(10):
        A = random_unitary(2 * n, rng)
        g = embed_u2n(A)
        assert ostar_membership(g, tol=1e-10)
        # the image is unitary, hence in the maximal compact part
        assert np.max(np.abs(g.conj().T @ g - np.eye(4 * n))) < 1e-12


def test_embed_u2n_rejects_non_unitary():
    with pytest.raises(ValueError):
        embed_u2n(np.ones((4, 4)))
    with pytest.raises(ValueError):
        embed_u2n(np.eye(3))


def test_phase_lands_at_doubled_index():
    # e^{i t} at slot i shows up conjugated at slot ibar on the group side,
    # and unconjugated in the (U, conj V) frame
    phase = np.exp(0.3j)
    for n in (1, 2, 3):
        for i in range(1, 2 * n + 1):
            A = np.eye(2 * n, dtype=complex)
            A[i - 1, i - 1] = phase
            ibar = weight_double(i, n)
            d = np.diag(embed_u2n(A))
            du = np.diag(embed_u2n_uv(A))
            assert d[i - 1] == phase
            assert abs(d[ibar - 1] - phase.conjugate()) < 1e-15
            assert abs(du[ibar - 1] - phase) < 1e-15
            others = [t for t in range(4 * n) if t not in (i - 1, ibar - 1)]
            assert np.max(np.abs(d[others] - 1.0)) < 1e-15


def test_weight_double_frozen_table_n2():
    assert [weight_double(i, 2) for i in (1, 2, 3, 4)] == [7, 8, 5, 6]


@pytest.mark.parametrize("n", range(1, 7))
def test_weight_double_characterization(n):
    seen = set()
    for i in range(1, 2 * n + 1):
        ibar = weight_double(i, n)
        assert ibar > 2 * n
        assert abs(ibar - i - 2 * n) == n
        seen.add(ibar)
    assert seen == set(range(2 * n + 1, 4 * n + 1))


def test_weight_double_range_check():
    with pytest.raises(ValueError):
        weight_double(0, 2)
    with pytest.raises(ValueError):
        weight_double(5, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_random_sp_is_symplectic(n):
    rng = np.random.default_rng(60 + n)
    for _ in range(5):
        M = random_sp(n, rng)
        assert is_symplectic(M, tol=1e-12)


@pytest.mark.parametrize("n", [2, 3])
def test_sp_n_lands_in_ostar(n):
    rng = np.random.default_rng(70 + n)
    for _ in range(5):
        assert sp_n_in_ostar(random_sp(n, rng), tol=1e-10)


def test_sp_n_in_ostar_rejects_non_symplectic():
    with pytest.raises(ValueError):
        sp_n_in_ostar(QMatrix.diag([Quaternion(2.0), Quaternion(1.0)]))


def test_complexified_symplectic_is_unitary():
    # the complexification of Sp(n) sits inside U(2n)
    rng = np.random.default_rng(81)
    M = random_sp(3, rng)
    C = complexify_matrix(M)
    assert np.max(np.abs(C.conj().T @ C - np.eye(6))) < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_ostar_sweep_counts(n):
    passes, total = ostar_sweep(n, 25, seed=9)
    assert (passes, total) == (50, 50)


def test_random_unitary_is_unitary():
    rng = np.random.default_rng(90)
    U = random_unitary(6, rng)
    assert np.max(np.abs(U.conj().T @ U - np.eye(6))) < 1e-12
