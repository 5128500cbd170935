"""Blaschke factors, finite Blaschke products, and zero sequences.

The factor vanishing at alpha is normalized so that its value at 0 is
|alpha|; for alpha = 0 the factor is the coordinate function itself.  A
``RudinSpec`` stores a finite ordered list of zeros with multiplicities;
the tail products phi_n are the products of all factors from index n on,
with the empty tail equal to the constant 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import UnitDiscError
from .series import Series1, mul, one1

# |alpha| above this trips the conditioning guard: 1 - |alpha|^2 is too
# small for the default tolerance regime in double precision.
CONDITIONING_LIMIT = 0.99


@dataclass(frozen=True)
class BlaschkePoint:
    """A zero alpha in the open disc with multiplicity mult >= 1."""

    alpha: complex
    mult: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        if abs(self.alpha) >= 1.0:
            raise UnitDiscError(f"alpha outside open unit disc: {self.alpha}")
        if not isinstance(self.mult, (int, np.integer)) or self.mult < 1:
            raise ValueError(f"multiplicity must be a natural number >= 1, got {self.mult}")


@dataclass(frozen=True)
class RudinSpec:
    """Finite zero sequence defining the tail products phi_0, phi_1, ...

    ``points[n]`` holds (alpha_n, l_n); phi_n is the product of factors for
    indices n..M and phi_{M+1} is the constant 1.  ``caps`` are the default
    truncation degrees (z1, z2); ``tol`` is the shared rank threshold.
    """

    points: tuple[BlaschkePoint, ...]
    caps: tuple[int, int] = (10, 80)
    tol: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(
            p if isinstance(p, BlaschkePoint) else BlaschkePoint(*p) for p in self.points))
        if self.tol <= 0:
            raise ValueError("tol must be positive")

    @property
    def last_index(self) -> int:
        """M, the largest zero index; -1 for the empty sequence."""
        return len(self.points) - 1

    def conditioning_warnings(self) -> list[str]:
        return [
            f"|alpha_{n}| = {abs(p.alpha):.6f} > {CONDITIONING_LIMIT}: 1 - |alpha|^2 "
            "is below the reliable tolerance regime"
            for n, p in enumerate(self.points)
            if abs(p.alpha) > CONDITIONING_LIMIT
        ]

    def zero_multiplicity_at_origin(self) -> int:
        return sum(p.mult for p in self.points if p.alpha == 0)


def blaschke_factor(alpha: complex, cap: int) -> Series1:
    """Truncated Taylor expansion of the normalized factor vanishing at alpha.

    For alpha != 0 the coefficients are c_0 = |alpha| and
    c_k = -(1 - |alpha|^2) conj(alpha)^k / |alpha|; for alpha = 0 the
    result is the coordinate function.
    """
    alpha = complex(alpha)
    r = abs(alpha)
    if r >= 1.0:
        raise UnitDiscError(f"alpha outside open unit disc: {alpha}")
    c = np.zeros(cap + 1, dtype=np.complex128)
    if alpha == 0:
        if cap >= 1:
            c[1] = 1.0
        return Series1(c)
    ac = np.conj(alpha)
    c[0] = r
    k = np.arange(1, cap + 1)
    c[1:] = -(1.0 - r * r) / r * ac**k
    # discarded geometric tail: sum_{k>cap} |c_k|^2
    tail2 = (1.0 - r * r) ** 2 / (r * r) * r ** (2 * (cap + 1)) / (1.0 - r * r)
    return Series1(c, lost_mass=math.sqrt(tail2))


def blaschke_product(points, cap: int) -> Series1:
    """Truncated expansion of the product of factors; empty product is 1."""
    out = one1(cap)
    for p in points:
        p = p if isinstance(p, BlaschkePoint) else BlaschkePoint(*p)
        factor = blaschke_factor(p.alpha, cap)
        for _ in range(p.mult):
            out = mul(out, factor, cap)
    return out


def phi_tail(spec: RudinSpec, n: int, cap: int) -> Series1:
    """Product of the factors with indices n..M; n = M+1 gives the constant 1."""
    m = spec.last_index
    if not 0 <= n <= m + 1:
        raise IndexError(f"tail index {n} outside 0..{m + 1}")
    return blaschke_product(spec.points[n:], cap)


def blaschke_sum(spec: RudinSpec) -> float:
    """Partial sum of (1 - l_n |alpha_n|); diagnostic only, never enforced."""
    return float(sum(1.0 - p.mult * abs(p.alpha) for p in spec.points))


def recommended_cap(points, tol: float, base_margin: int = 8) -> int:
    """Sufficient truncation degree: polynomial degree of the zero part plus
    a geometric-decay margin for the nonzero zeros."""
    pts = [p if isinstance(p, BlaschkePoint) else BlaschkePoint(*p) for p in points]
    poly_deg = sum(p.mult for p in pts if p.alpha == 0)
    radii = [abs(p.alpha) for p in pts if p.alpha != 0]
    margin = 0
    if radii:
        r = max(radii)
        margin = math.ceil(math.log(tol) / math.log(r))
    return poly_deg + margin + base_margin
