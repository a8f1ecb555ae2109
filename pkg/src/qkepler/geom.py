"""Geometric identity checks on quaternionic space.

Two families of checks live here.  The metric family verifies, on random
tangent samples, that the flat metric of H^n splits into a radial part, a
Fubini-Study part and a fiber part, and that the bi-invariant metric on
Sp(n) descends to twice the Fubini-Study metric on the quaternionic
projective space.  The matrix family verifies the defining relations of
the group O*(4n) = U(2n,2n) n O(4n,C), the embedding of U(2n) into it,
and the index-doubling rule for diagonal weights.

Conventions: J denotes the 2n x 2n block matrix [[0, -I_n], [I_n, 0]].
O*(4n) is cut out of GL(4n,C) by

    g^dag diag(I, -I) g = diag(I, -I)   and
    g^T  [[0, J], [-J, 0]] g = [[0, J], [-J, 0]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qlinalg import (
    QMatrix,
    Quaternion,
    QVector,
    complexify_matrix,
    is_symplectic,
    qdot,
    random_qvector,
    random_unit_quaternion,
)

__all__ = [
    "TangentSample",
    "fubini_study_form",
    "metric_identity_residual",
    "quotient_factor_check",
    "jmat",
    "ostar_membership",
    "embed_u2n",
    "embed_u2n_uv",
    "weight_double",
    "sp_n_in_ostar",
    "random_unitary",
    "random_sp",
    "metric_sweep",
    "quotient_sweep",
    "ostar_sweep",
]

DEFAULT_MEMBERSHIP_TOL = 1e-10


@dataclass(frozen=True)
class TangentSample:
    """A base point Z != 0 of H^n together with a tangent vector W."""

    base: QVector
    vector: QVector

    def __post_init__(self) -> None:
        if len(self.base) != len(self.vector):
            raise ValueError("base and vector must have equal length")
        if self.base.norm2() == 0.0:
            raise ValueError("base point must be nonzero")


def fubini_study_form(s: TangentSample) -> float:
    """The Fubini-Study quadratic form |W|^2/|Z|^2 - |conj(Z).W|^2/|Z|^4."""
    z2 = s.base.norm2()
    if z2 == 0.0:
        raise ValueError("base point must be nonzero")
    zw = qdot(s.base, s.vector)
    return s.vector.norm2() / z2 - zw.norm2() / (z2 * z2)


def metric_identity_residual(s: TangentSample) -> float:
    """Deviation of |W|^2 from its radial + Fubini-Study + fiber split.

    The split evaluates the identity

        |dZ|^2 = d rho^2 + rho^2 (ds_FS^2 + (Im(conj(Z).dZ)/|Z|^2)^2)

    on the sample (Z, W); the return value is identically zero up to
    rounding for every nonzero Z.
    """
    z2 = s.base.norm2()
    if z2 == 0.0:
        raise ValueError("base point must be nonzero")
    zw = qdot(s.base, s.vector)
    radial = zw.re * zw.re / z2
    fiber = zw.im_norm2() / z2
    rhs = radial + z2 * fubini_study_form(s) + fiber
    return abs(s.vector.norm2() - rhs)


def _bordered(a: QVector) -> QMatrix:
    """The tangent matrix [[0, -a^dag], [a, 0]] of Sp(n) at the identity."""
    n = len(a) + 1
    rows = [[Quaternion() for _ in range(n)] for _ in range(n)]
    for i, q in enumerate(a.entries):
        rows[0][1 + i] = -q.conj()
        rows[1 + i][0] = q
    return QMatrix(rows)


def quotient_factor_check(a: QVector, b: QVector) -> tuple[float, float]:
    """Evaluate the same pair of tangent vectors in two metrics.

    ``a`` and ``b`` (length n-1) parameterize tangent vectors of Sp(n) at
    the identity that are orthogonal to the stabilizer directions.  The
    first return value is their trace-form inner product Re tr(X_a^dag X_b)
    on Sp(n); the second is the round-sphere inner product of the pushed
    forward vectors (0; a), (0; b) on S^{4n-1}.  The first is always twice
    the second, which is why the quotient metric on the projective space
    is twice the Fubini-Study metric.
    """
    if len(a) != len(b):
        raise ValueError("length mismatch")
    Xa, Xb = _bordered(a), _bordered(b)
    tr = (Xa.dagger() @ Xb).trace()
    ua = QVector.concat(QVector.zero(1), a)
    ub = QVector.concat(QVector.zero(1), b)
    return tr.re, qdot(ua, ub).re


def jmat(n: int) -> np.ndarray:
    """The 2n x 2n block matrix [[0, -I_n], [I_n, 0]]."""
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = -np.eye(n)
    J[n:, :n] = np.eye(n)
    return J


def _ostar_forms(n: int) -> tuple[np.ndarray, np.ndarray]:
    eta = np.diag(np.concatenate([np.ones(2 * n), -np.ones(2 * n)]))
    J = jmat(n)
    omega = np.zeros((4 * n, 4 * n))
    omega[: 2 * n, 2 * n:] = J
    omega[2 * n:, : 2 * n] = -J
    return eta, omega


def ostar_membership(g: np.ndarray, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """Check both defining relations of O*(4n) to ``tol`` in max entry norm."""
    g = np.asarray(g, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] % 4:
        raise ValueError(f"expected a square matrix of order 4n, got {g.shape}")
    n = g.shape[0] // 4
    eta, omega = _ostar_forms(n)
    d1 = np.max(np.abs(g.conj().T @ eta @ g - eta))
    d2 = np.max(np.abs(g.T @ omega @ g - omega))
    return max(d1, d2) <= tol


def embed_u2n(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Embed a unitary A of order 2n into O*(4n) as diag(A, -J conj(A) J).

    The image satisfies both O* relations and is unitary, so it lands in
    the maximal compact subgroup U(4n) n O*(4n).  A diagonal phase e^{i t}
    at slot i reappears, conjugated, at slot ``weight_double(i, n)``; the
    partner matrix in the (U, conj(V)) frame (see :func:`embed_u2n_uv`)
    carries the phase itself at that slot.
    """
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise ValueError(f"expected a square matrix of order 2n, got {A.shape}")
    if np.max(np.abs(A.conj().T @ A - np.eye(A.shape[0]))) > tol:
        raise ValueError("input is not unitary to tolerance")
    n = A.shape[0] // 2
    J = jmat(n)
    lower = -J @ A.conj() @ J
    out = np.zeros((4 * n, 4 * n), dtype=complex)
    out[: 2 * n, : 2 * n] = A
    out[2 * n:, 2 * n:] = lower
    return out


def embed_u2n_uv(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """The same group element written in the (U, conj(V)) frame: diag(A, -J A J)."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise ValueError(f"expected a square matrix of order 2n, got {A.shape}")
    if np.max(np.abs(A.conj().T @ A - np.eye(A.shape[0]))) > tol:
        raise ValueError("input is not unitary to tolerance")
    n = A.shape[0] // 2
    J = jmat(n)
    lower = -J @ A @ J
    out = np.zeros((4 * n, 4 * n), dtype=complex)
    out[: 2 * n, : 2 * n] = A
    out[2 * n:, 2 * n:] = lower
    return out


def weight_double(i: int, n: int) -> int:
    """The unique index i-bar > 2n with |i-bar - i - 2n| = n (indices 1-based).

    Encodes where the embedding U(2n) into U(4n) duplicates the i-th
    diagonal weight: the diagonal unit e_i of u(2n) maps to e_i + e_ibar
    in u(4n).
    """
    if not 1 <= i <= 2 * n:
        raise ValueError(f"index {i} out of range 1..{2 * n}")
    ibar = i + 3 * n if i <= n else i + n
    assert abs(ibar - i - 2 * n) == n and ibar > 2 * n
    return ibar


def sp_n_in_ostar(M: QMatrix, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    """Push a symplectic-unitary quaternion matrix into O*(4n) and test membership."""
    if not is_symplectic(M, tol=1e-9):
        raise ValueError("input is not symplectic-unitary to tolerance")
    C = complexify_matrix(M)
    return ostar_membership(embed_u2n(C), tol)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish unitary via QR of a complex Ginibre matrix."""
    G = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Q, R = np.linalg.qr(G)
    return Q * (np.diagonal(R) / np.abs(np.diagonal(R)))


def random_sp(n: int, rng: np.random.Generator, factors: int = 12) -> QMatrix:
    """Random element of Sp(n) as a product of elementary factors.

    Each factor is either a diagonal matrix with one random unit quaternion
    or a real plane rotation; such products reach every element of Sp(n)
    in the limit of many factors.
    """
    M = QMatrix.identity(n)
    for _ in range(factors):
        if n > 1 and rng.random() < 0.5:
            i, j = rng.choice(n, size=2, replace=False)
            theta = rng.uniform(0.0, 2.0 * math.pi)
            rows = [[Quaternion(1.0) if r == c else Quaternion()
                     for c in range(n)] for r in range(n)]
            rows[i][i] = Quaternion(math.cos(theta))
            rows[j][j] = Quaternion(math.cos(theta))
            rows[i][j] = Quaternion(math.sin(theta))
            rows[j][i] = Quaternion(-math.sin(theta))
            F = QMatrix(rows)
        else:
            i = int(rng.integers(n))
            q = random_unit_quaternion(rng)
            F = QMatrix.diag(q if t == i else Quaternion(1.0)
                             for t in range(n))
        M = M @ F
    return M


def metric_sweep(n: int, samples: int, seed: int) -> float:
    """Max metric identity residual over seeded random tangent samples."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        Z = random_qvector(n, rng)
        if Z.norm2() < 1e-4:
            continue
        W = random_qvector(n, rng)
        worst = max(worst, metric_identity_residual(TangentSample(Z, W)))
    return worst


def quotient_sweep(n: int, samples: int, seed: int) -> float:
    """Max |s1 - 2 s2| over seeded random quotient-factor pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        a = random_qvector(n - 1, rng)
        b = random_qvector(n - 1, rng)
        s1, s2 = quotient_factor_check(a, b)
        worst = max(worst, abs(s1 - 2.0 * s2))
    return worst


def ostar_sweep(n: int, samples: int, seed: int,
                tol: float = DEFAULT_MEMBERSHIP_TOL) -> tuple[int, int]:
    """Count O* membership passes over seeded unitary and Sp(n) images.

    Returns (passes, total) with total = 2*samples: ``samples`` random
    embedded unitaries and ``samples`` random symplectic images.
    """
    rng = np.random.default_rng(seed)
    passes = 0
    for _ in range(samples):
        A = random_unitary(2 * n, rng)
        passes += bool(ostar_membership(embed_u2n(A), tol))
    for _ in range(samples):
        M = random_sp(n, rng)
        passes += bool(sp_n_in_ostar(M, tol))
    return passes, 2 * samples
