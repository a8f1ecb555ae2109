"""Quaternion scalars, vectors and matrices.

A quaternion is written q = w + x i + y j + z k.  The sign convention
for the imaginary units is fixed globally to

    i j = -k,   j k = -i,   k i = -j,

i.e. the opposite of the classical Hamilton table.  Everything downstream
(complexification, the symplectic-group checks, the O*(4n) matrix
identities) assumes this convention, so it must not be changed in
isolation.

Splitting a quaternion as q = z' + j z'' with complex z' = w + x i and
z'' = y + z i identifies H^n with C^{2n} via the stacked column
(z'_1..z'_n, z''_1..z''_n).  Under this identification, right
multiplication by i acts as the complex scalar i, and right multiplication
by j acts as Z |-> J conj(Z) with J the block matrix [[0, -I_n], [I_n, 0]].

All components are 64-bit floats; the geometric checks built on top are
residual based, so no exact quaternion arithmetic is provided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

__all__ = [
    "Quaternion",
    "QVector",
    "QMatrix",
    "quat_mul",
    "qdot",
    "is_symplectic",
    "complexify",
    "complexify_matrix",
    "random_quaternion",
    "random_unit_quaternion",
    "random_qvector",
]

Scalar = Union[int, float]

_QONE = None  # set after the class definition


@dataclass(frozen=True)
class Quaternion:
    """One quaternion w + x i + y j + z k with float components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    @property
    def re(self) -> float:
        return self.w

    def im_norm2(self) -> float:
        """Squared norm of the imaginary part."""
        return self.x * self.x + self.y * self.y + self.z * self.z

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: Union["Quaternion", Scalar]) -> "Quaternion":
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def __rmul__(self, other: Scalar) -> "Quaternion":
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def to_complex_pair(self) -> tuple[complex, complex]:
        """The splitting q = z' + j z''."""
        return complex(self.w, self.x), complex(self.y, self.z)

    @staticmethod
    def one() -> "Quaternion":
        return _QONE

    @staticmethod
    def unit(axis: str) -> "Quaternion":
        if axis == "i":
            return Quaternion(0.0, 1.0, 0.0, 0.0)
        if axis == "j":
            return Quaternion(0.0, 0.0, 1.0, 0.0)
        if axis == "k":
            return Quaternion(0.0, 0.0, 0.0, 1.0)
        raise ValueError(f"unknown axis {axis!r}")


_QONE = Quaternion(1.0, 0.0, 0.0, 0.0)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Product a*b under the i j = -k convention.

    Componentwise this is the Hamilton product with the factors swapped;
    |a*b| = |a| |b| holds either way.
    """
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w - a.y * b.z + a.z * b.y,
        a.w * b.y + a.y * b.w + a.x * b.z - a.z * b.x,
        a.w * b.z + a.z * b.w - a.x * b.y + a.y * b.x,
    )


@dataclass(frozen=True)
class QVector:
    """A column vector of quaternions."""

    entries: tuple[Quaternion, ...]

    def __init__(self, entries: Iterable[Quaternion]):
        object.__setattr__(self, "entries", tuple(entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Quaternion:
        return self.entries[i]

    def norm2(self) -> float:
        return sum(q.norm2() for q in self.entries)

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def right_mul(self, q: Quaternion) -> "QVector":
        """Entrywise right multiplication Z |-> Z q."""
        return QVector(quat_mul(e, q) for e in self.entries)

    def __add__(self, other: "QVector") -> "QVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return QVector(a + b for a, b in zip(self.entries, other.entries))

    def scale(self, c: Scalar) -> "QVector":
        return QVector(e * c for e in self.entries)

    @staticmethod
    def basis(n: int, i: int) -> "QVector":
        """The i-th standard basis vector (0-based) of H^n."""
        return QVector(Quaternion(1.0) if j == i else Quaternion()
                       for j in range(n))

    @staticmethod
    def zero(n: int) -> "QVector":
        return QVector(Quaternion() for _ in range(n))

    @staticmethod
    def concat(a: "QVector", b: "QVector") -> "QVector":
        return QVector(a.entries + b.entries)


def qdot(Z: QVector, W: QVector) -> Quaternion:
    """Hermitian pairing conj(Z) . W = sum_i conj(Z_i) W_i."""
    if len(Z) != len(W):
        raise ValueError(f"length mismatch: {len(Z)} vs {len(W)}")
    acc = Quaternion()
    for zi, wi in zip(Z.entries, W.entries):
        acc = acc + quat_mul(zi.conj(), wi)
    return acc


@dataclass(frozen=True)
class QMatrix:
    """A rectangular matrix of quaternions, stored row major."""

    rows: tuple[tuple[Quaternion, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Quaternion]]):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx: tuple[int, int]) -> Quaternion:
        i, j = idx
        return self.rows[i][j]

    def dagger(self) -> "QMatrix":
        m, n = self.shape
        return QMatrix((self.rows[i][j].conj() for i in range(m))
                       for j in range(n))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        m, n = self.shape
        n2, p = other.shape
        if n != n2:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = []
        for i in range(m):
            row = []
            for j in range(p):
                acc = Quaternion()
                for t in range(n):
                    acc = acc + quat_mul(self.rows[i][t], other.rows[t][j])
                row.append(acc)
            out.append(row)
        return QMatrix(out)

    def apply(self, v: QVector) -> QVector:
        m, n = self.shape
        if n != len(v):
            raise ValueError("shape mismatch")
        out = []
        for i in range(m):
            acc = Quaternion()
            for t in range(n):
                acc = acc + quat_mul(self.rows[i][t], v[t])
            out.append(acc)
        return QVector(out)

    def trace(self) -> Quaternion:
        m, n = self.shape
        if m != n:
            raise ValueError("trace of a non-square matrix")
        acc = Quaternion()
        for i in range(m):
            acc = acc + self.rows[i][i]
        return acc

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix((Quaternion(1.0) if i == j else Quaternion()
                        for j in range(n)) for i in range(n))

    @staticmethod
    def diag(entries: Iterable[Quaternion]) -> "QMatrix":
        es = tuple(entries)
        n = len(es)
        return QMatrix((es[i] if i == j else Quaternion()
                        for j in range(n)) for i in range(n))


def is_symplectic(M: QMatrix, tol: float = 1e-12) -> bool:
    """True iff M^dag M = I up to ``tol`` in max entry magnitude."""
    m, n = M.shape
    if m != n:
        raise ValueError("matrix must be square")
    P = M.dagger() @ M
    dev = 0.0
    for i in range(n):
        for j in range(n):
            d = P[i, j] - (Quaternion(1.0) if i == j else Quaternion())
            dev = max(dev, abs(d))
    return dev <= tol


def complexify(Z: QVector) -> np.ndarray:
    """Stack the splitting q = z' + j z'' into a complex vector of length 2n.

    Right multiplication by i becomes the scalar i; right multiplication
    by j becomes J conj(.) with J = [[0, -I_n], [I_n, 0]].
    """
    n = len(Z)
    out = np.empty(2 * n, dtype=complex)
    for idx, q in enumerate(Z.entries):
        zp, zpp = q.to_complex_pair()
        out[idx] = zp
        out[n + idx] = zpp
    return out


def complexify_matrix(M: QMatrix) -> np.ndarray:
    """The 2n x 2n complex matrix acting on complexified column vectors.

    Writing M = A + j B with complex matrices A, B, the left action on
    z' + j z'' corresponds to the block matrix [[A, -conj(B)], [B, conj(A)]].
    """
    m, n = M.shape
    if m != n:
        raise ValueError("matrix must be square")
    A = np.empty((n, n), dtype=complex)
    B = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            zp, zpp = M[i, j].to_complex_pair()
            A[i, j] = zp
            B[i, j] = zpp
    top = np.hstack([A, -B.conj()])
    bot = np.hstack([B, A.conj()])
    return np.vstack([top, bot])


def random_quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    w, x, y, z = rng.normal(0.0, scale, size=4)
    return Quaternion(w, x, y, z)


def random_unit_quaternion(rng: np.random.Generator) -> Quaternion:
    while True:
        q = random_quaternion(rng)
        r = abs(q)
        if r > 1e-6:
            return q * (1.0 / r)


def random_qvector(n: int, rng: np.random.Generator, scale: float = 1.0) -> QVector:
    return QVector(random_quaternion(rng, scale) for _ in range(n))
