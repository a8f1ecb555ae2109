"""Bound-state spectra, degeneracies and weight bookkeeping.

Energies are exact rationals throughout; callers convert to float at the
boundary.  The principal quantum number is I = k - 1 + l, and the level
energy for parameters (n, sigma_bar) is

    E_I = -(1/2) / (I + n + sigma_bar/2)^2.

The degeneracy of level I sums the closed-form dimensions over l <= I.
Two independent exact identities tie these numbers to the 4n-dimensional
isotropic oscillator: the levelwise dimension equality and its
generating-function form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .rep import HighestWeight, RootSystem, dim_R_l, weyl_dim

__all__ = [
    "ModelParams",
    "QuantumNumbers",
    "LevelReport",
    "energy",
    "energy_kl",
    "degeneracy",
    "oscillator_level_dim",
    "EqualityCheck",
    "dimension_equality_check",
    "GenfuncCheck",
    "genfunc_check",
    "ktype_weight",
    "hspace_weight",
    "KtypeCheck",
    "ktype_dim_check",
    "rkappa_weight",
    "level_report",
]


@dataclass(frozen=True)
class ModelParams:
    """The pair (n, sigma_bar) fixing one model; requires n >= 2."""

    n: int
    sigma_bar: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.sigma_bar < 0:
            raise ValueError("sigma_bar must be >= 0")


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial number k >= 1 and angular number l >= 0."""

    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.l < 0:
            raise ValueError("l must be >= 0")

    @property
    def I(self) -> int:
        return self.k - 1 + self.l


def energy(p: ModelParams, I: int) -> Fraction:
    """Exact level energy -(1/2)/(I + n + sigma_bar/2)^2 for I >= 0."""
    if I < 0:
        raise ValueError("I must be >= 0")
    denom = 2 * I + 2 * p.n + p.sigma_bar  # twice the effective quantum number
    return Fraction(-2, denom * denom)


def energy_kl(p: ModelParams, q: QuantumNumbers) -> Fraction:
    """Energy in (k, l) labels: -(1/2)/(k + l + (sigma_bar + 2n)/2 - 1)^2.

    Depends on (k, l) only through k + l, which is the eigenvalue collapse
    that makes the levels (I + 1)-fold degenerate across channels.
    """
    denom = 2 * q.k + 2 * q.l + p.sigma_bar + 2 * p.n - 2
    return Fraction(-2, denom * denom)


def degeneracy(p: ModelParams, I: int) -> int:
    """Exact dimension of the I-th eigenspace: sum over l <= I of dim_R_l."""
    if I < 0:
        raise ValueError("I must be >= 0")
    return sum(dim_R_l(p.n, p.sigma_bar, l) for l in range(I + 1))


def oscillator_level_dim(n: int, k: int) -> int:
    """Dimension C(4n+k-1, 4n-1) of level k of the 4n-dimensional oscillator."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.comb(4 * n + k - 1, 4 * n - 1)


@dataclass(frozen=True)
class EqualityCheck:
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def dimension_equality_check(n: int, k: int) -> EqualityCheck:
    """Compare sum over 2I + sigma_bar = k of (sigma_bar+1)*degeneracy with
    the oscillator level dimension.  Exact on both sides."""
    lhs = 0
    for I in range(k // 2 + 1):
        sigma_bar = k - 2 * I
        lhs += (sigma_bar + 1) * degeneracy(ModelParams(n, sigma_bar), I)
    return EqualityCheck(lhs=lhs, rhs=oscillator_level_dim(n, k))


def _series_inverse_one_minus_t_pow(m: int, K: int) -> list[int]:
    """Coefficients of (1 - t)^(-m) up to t^K by exact series inversion.

    Builds (1 - t)^m by repeated polynomial multiplication and inverts the
    series, avoiding binomial coefficients on purpose so the result is an
    independent route to the same numbers.
    """
    poly = [1]
    for _ in range(m):
        poly = [a - b for a, b in zip(poly + [0], [0] + poly)]
    inv = [1]
    for k in range(1, K + 1):
        acc = 0
        for j in range(1, min(k, len(poly) - 1) + 1):
            acc += poly[j] * inv[k - j]
        inv.append(-acc)
    return inv


@dataclass(frozen=True)
class GenfuncCheck:
    coefficients: tuple[int, ...]  # enumerated left-hand side, degree 0..K
    binomial: tuple[int, ...]      # C(4n+k-1, 4n-1)
    inverted: tuple[int, ...]      # series coefficients of (1-t)^(-4n)

    @property
    def passed(self) -> bool:
        return self.coefficients == self.binomial == self.inverted


def genfunc_check(n: int, K: int) -> GenfuncCheck:
    """Verify that the degeneracy generating function equals (1 - t)^(-4n).

    The left-hand coefficients are enumerated levelwise; the reference is
    computed twice, from binomials and from exact series inversion.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    coeffs = tuple(dimension_equality_check(n, k).lhs for k in range(K + 1))
    binom = tuple(oscillator_level_dim(n, k) for k in range(K + 1))
    inverted = tuple(_series_inverse_one_minus_t_pow(4 * n, K))
    return GenfuncCheck(coefficients=coeffs, binomial=binom, inverted=inverted)


def ktype_weight(p: ModelParams, I: int) -> HighestWeight:
    """Highest weight (-1, ..., -1, -(1+I), -(1+I+sigma_bar)) of length 2n.

    Minus the entry sum equals 2I + sigma_bar + 2n, the oscillator level
    matched by the twist; that equality is what forces the half-integer
    twist parameter kappa to be 1.
    """
    if I < 0:
        raise ValueError("I must be >= 0")
    entries = [-1] * (2 * p.n - 2) + [-(1 + I), -(1 + I + p.sigma_bar)]
    return HighestWeight(entries)


def hspace_weight(p: ModelParams) -> HighestWeight:
    """Highest weight (-1, ..., -1, -(1+sigma_bar)) of the full bound sector."""
    return HighestWeight([-1] * (2 * p.n - 1) + [-(1 + p.sigma_bar)])


@dataclass(frozen=True)
class KtypeCheck:
    u2n_dim: int
    sp_sum: int

    @property
    def passed(self) -> bool:
        return self.u2n_dim == self.sp_sum


def ktype_dim_check(p: ModelParams, I: int) -> KtypeCheck:
    """Dimension match between the level-I weight module and the Sp(n) sum.

    The A_{2n-1} Weyl dimension is taken after shifting the weight by the
    constant vector (1+I+sigma_bar)*(1, ..., 1); the shift leaves the
    dimension unchanged and makes the entries nonnegative.
    """
    shift = 1 + I + p.sigma_bar
    shifted = ktype_weight(p, I).shifted(shift)
    u2n = weyl_dim(RootSystem("A", 2 * p.n - 1), shifted)
    return KtypeCheck(u2n_dim=u2n, sp_sum=degeneracy(p, I))


def rkappa_weight(n: int, sigma_bar: int, l: int,
                  kappa: Union[int, Fraction],
                  conjugate: bool = False) -> HighestWeight:
    """The length-2n weight (l+sigma_bar+kappa, l+kappa, kappa, ..., kappa).

    With ``conjugate`` set, returns the reversed and negated form
    (-kappa, ..., -kappa, -(l+kappa), -(l+sigma_bar+kappa)).  The K-type
    weight of level I is the conjugate form with kappa = 1 and l = I.
    """
    kap = Fraction(kappa)
    entries = [l + sigma_bar + kap, l + kap] + [kap] * (2 * n - 2)
    hw = HighestWeight(entries)
    return hw.conjugate() if conjugate else hw


@dataclass(frozen=True)
class LevelReport:
    I: int
    energy: Fraction
    degeneracy: int
    ktype: HighestWeight


def level_report(p: ModelParams, I: int) -> LevelReport:
    return LevelReport(I=I, energy=energy(p, I),
                       degeneracy=degeneracy(p, I),
                       ktype=ktype_weight(p, I))
