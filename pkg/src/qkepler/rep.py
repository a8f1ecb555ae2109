"""Exact representation theory: Weyl dimensions, Casimirs, Sp(1) characters.

Root systems are handled through their positive-root enumerations in
orthonormal e_i coordinates:

    A_m : e_i - e_j (i < j), weights live in m+1 coordinates;
    C_m : e_i - e_j, e_i + e_j (i < j), and 2 e_i, weights in m coordinates.

All dimension and Casimir arithmetic is exact (Fractions over arbitrary
precision integers).  Half-integer weight entries are stored as doubled
integers so that no rounding can occur.  The Casimir normalization is the
plain dot product in the e_i coordinates; for C_n this gives
sum_i lam_i (lam_i + 2(n+1-i)), and for sp(1) = C_1 the familiar
sigma(sigma + 2).

Characters of Sp(1) irreps are chi(theta) = sin((s+1) theta)/sin(theta)
on the conjugacy class of rotation angle theta; class integration uses
the weight (2/pi) sin^2(theta) d theta on [0, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .quadrature import composite_gauss_legendre

__all__ = [
    "RootSystem",
    "HighestWeight",
    "weyl_dim",
    "casimir",
    "dim_R_l",
    "angular_eigenvalue",
    "sp1_character",
    "schur_norm",
    "character_inner",
]

WeightEntry = Union[int, Fraction]


@dataclass(frozen=True)
class HighestWeight:
    """A weight vector with integer or half-integer entries.

    Entries are stored internally as doubled integers; ``entries`` gives
    them back as Fractions.
    """

    twice: tuple[int, ...]

    def __init__(self, entries: Sequence[WeightEntry]):
        doubled = []
        for e in entries:
            d = 2 * Fraction(e)
            if d.denominator != 1:
                raise ValueError(f"entry {e} is not a half integer")
            doubled.append(int(d))
        object.__setattr__(self, "twice", tuple(doubled))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    def __len__(self) -> int:
        return len(self.twice)

    def shifted(self, c: WeightEntry) -> "HighestWeight":
        """Add the constant vector c*(1, ..., 1)."""
        return HighestWeight([e + Fraction(c) for e in self.entries])

    def conjugate(self) -> "HighestWeight":
        """Reverse the entries and negate them (the dual highest weight)."""
        return HighestWeight([-e for e in reversed(self.entries)])


@dataclass(frozen=True)
class RootSystem:
    """A classical root system of family A or C with the given rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "C"):
            raise ValueError(f"unsupported family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def weight_length(self) -> int:
        """Number of e_i coordinates: rank+1 for A, rank for C."""
        return self.rank + 1 if self.family == "A" else self.rank

    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.weight_length
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                r = [0] * n
                r[i], r[j] = 1, -1
                roots.append(tuple(r))
        if self.family == "C":
            for i in range(n):
                for j in range(i + 1, n):
                    r = [0] * n
                    r[i], r[j] = 1, 1
                    roots.append(tuple(r))
            for i in range(n):
                r = [0] * n
                r[i] = 2
                roots.append(tuple(r))
        return tuple(roots)

    def rho(self) -> tuple[Fraction, ...]:
        """Half the sum of the positive roots."""
        n = self.weight_length
        acc = [Fraction(0)] * n
        for r in self.positive_roots():
            for i, c in enumerate(r):
                acc[i] += c
        return tuple(a / 2 for a in acc)

    def is_dominant(self, hw: HighestWeight) -> bool:
        if len(hw) != self.weight_length:
            return False
        es = hw.entries
        if any(a < b for a, b in zip(es, es[1:])):
            return False
        if self.family == "C" and es[-1] < 0:
            return False
        return True


def _dot(u: Iterable[Fraction], v: Iterable[int]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def weyl_dim(rs: RootSystem, hw: HighestWeight) -> int:
    """Exact Weyl dimension prod_{alpha>0} <lam+rho, alpha> / <rho, alpha>."""
    if not rs.is_dominant(hw):
        raise ValueError(f"weight {hw.entries} is not dominant for {rs}")
    rho = rs.rho()
    lam_rho = tuple(a + b for a, b in zip(hw.entries, rho))
    out = Fraction(1)
    for alpha in rs.positive_roots():
        out *= _dot(lam_rho, alpha) / _dot(rho, alpha)
    if out.denominator != 1 or out <= 0:
        raise ArithmeticError(f"Weyl product is not a positive integer: {out}")
    return int(out)


def casimir(rs: RootSystem, hw: HighestWeight) -> Fraction:
    """The quadratic Casimir eigenvalue <lam, lam + 2 rho> in e_i coordinates."""
    if not rs.is_dominant(hw):
        raise ValueError(f"weight {hw.entries} is not dominant for {rs}")
    rho = rs.rho()
    out = Fraction(0)
    for lam_i, rho_i in zip(hw.entries, rho):
        out += lam_i * (lam_i + 2 * rho_i)
    return out


def dim_R_l(n: int, sigma_bar: int, l: int) -> int:
    """Dimension of the l-th Sp(n) constituent for twist parameter sigma_bar.

    Evaluates the closed form

        (1+p-q)/(1+p) * (1 + (p+q)/(2n-1)) * C(p+2n-2, p) * C(q+2n-3, q)

    with p = l + sigma_bar and q = l.  Equals the Weyl dimension of the
    C_n highest weight (l+sigma_bar, l, 0, ..., 0).
    """
    if n < 2 or sigma_bar < 0 or l < 0:
        raise ValueError("need n >= 2, sigma_bar >= 0, l >= 0")
    p, q = l + sigma_bar, l
    val = (Fraction(1 + p - q, 1 + p)
           * (1 + Fraction(p + q, 2 * n - 1))
           * math.comb(p + 2 * n - 2, p)
           * math.comb(q + 2 * n - 3, q))
    assert val.denominator == 1
    return int(val)


def angular_eigenvalue(n: int, sigma_bar: int, l: int) -> int:
    """Eigenvalue of the twisted Laplacian on the l-th constituent.

    With L = l + sigma_bar/2 this is 4 L^2 + 4(2n-1) L - sigma_bar(sigma_bar+2),
    and it coincides with twice the Casimir difference
    casimir(C_n, (l+sigma_bar, l, 0, ...)) - casimir(C_1, (sigma_bar)).
    """
    if n < 2 or sigma_bar < 0 or l < 0:
        raise ValueError("need n >= 2, sigma_bar >= 0, l >= 0")
    two_L = 2 * l + sigma_bar
    val = two_L * two_L + 2 * (2 * n - 1) * two_L - sigma_bar * (sigma_bar + 2)
    return val


def sp1_character(sigma_bar: int, theta: float) -> float:
    """Character sin((s+1) theta)/sin(theta) of the (s+1)-dimensional irrep.

    Endpoints are handled by the Chebyshev recurrence, which is the limit
    value: chi(0) = s+1, chi(pi) = (s+1) (-1)^s.
    """
    if sigma_bar < 0:
        raise ValueError("sigma_bar must be >= 0")
    s = math.sin(theta)
    if abs(s) > 1e-9:
        return math.sin((sigma_bar + 1) * theta) / s
    c = math.cos(theta)
    prev, cur = 1.0, 2.0 * c
    if sigma_bar == 0:
        return prev
    for _ in range(sigma_bar - 1):
        prev, cur = cur, 2.0 * c * cur - prev
    return cur


def character_inner(sigma_bar_1: int, sigma_bar_2: int,
                    quadrature_points: int = 256) -> float:
    """Class-measure inner product of two Sp(1) characters.

    Integrates chi_1(theta) chi_2(theta) against (2/pi) sin^2(theta) on
    [0, pi] with composite Gauss-Legendre panels of order 8; the requested
    point count is rounded up to a multiple of 8.  Equals 1 when the
    labels agree and 0 otherwise (Schur orthogonality).
    """
    if quadrature_points < 64:
        raise ValueError("need at least 64 quadrature points")
    order = 8
    panels = -(-quadrature_points // order)

    def integrand(theta: np.ndarray) -> np.ndarray:
        # interior Gauss nodes only, so the ratio form of chi is safe
        s = np.sin(theta)
        chi1 = np.sin((sigma_bar_1 + 1) * theta) / s
        chi2 = np.sin((sigma_bar_2 + 1) * theta) / s
        return (2.0 / math.pi) * s * s * chi1 * chi2

    return composite_gauss_legendre(integrand, 0.0, math.pi,
                                    order=order, panels=panels)


def schur_norm(sigma_bar: int, quadrature_points: int = 256) -> float:
    """Normalized L^2 norm squared of an irreducible Sp(1) character.

    Equal to 1 for every irrep; the quadrature error decays to rounding
    level as the point count grows.
    """
    return character_inner(sigma_bar, sigma_bar, quadrature_points)
