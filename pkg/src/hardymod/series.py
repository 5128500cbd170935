"""Truncated power series in one and two variables.

Coefficient arrays with the l2 inner product stand in for elements of the
Hardy spaces over the disc and the bidisc.  A one-variable series keeps
coefficients c_0..c_N (degree cap N); a two-variable series keeps a dense
(N1+1) x (N2+1) array indexed by (z1-degree, z2-degree).  Everything is
dense double-precision complex; caps are explicit and never inferred.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch


def _as_coeffs(values, ndim: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional coefficient array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficients must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Series1:
    """One-variable truncated power series, coefficients c_0..c_N.

    ``lost_mass`` records the l2 mass discarded above the cap by whatever
    operation produced this value (0 for exact constructions), so callers
    can tell exact polynomial results from truncated rational expansions.
    """

    coeffs: np.ndarray
    lost_mass: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs, 1))

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Series2:
    """Two-variable truncated power series, c[a][b] with a the z1-degree."""

    coeffs: np.ndarray
    lost_mass: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs, 2))

    @property
    def caps(self) -> tuple[int, int]:
        return self.coeffs.shape[0] - 1, self.coeffs.shape[1] - 1


def zero1(cap: int) -> Series1:
    return Series1(np.zeros(cap + 1))


def one1(cap: int) -> Series1:
    c = np.zeros(cap + 1, dtype=np.complex128)
    c[0] = 1.0
    return Series1(c)


def monomial1(k: int, cap: int) -> Series1:
    if not 0 <= k <= cap:
        raise ValueError(f"monomial degree {k} outside cap {cap}")
    c = np.zeros(cap + 1, dtype=np.complex128)
    c[k] = 1.0
    return Series1(c)


def _check_same_kind(f, g):
    if isinstance(f, Series1) and isinstance(g, Series1):
        if f.cap != g.cap:
            raise DimensionMismatch(f"degree caps differ: {f.cap} vs {g.cap}")
    elif isinstance(f, Series2) and isinstance(g, Series2):
        if f.caps != g.caps:
            raise DimensionMismatch(f"degree caps differ: {f.caps} vs {g.caps}")
    else:
        raise DimensionMismatch("cannot pair one- and two-variable series")


def inner_product(f, g) -> complex:
    """l2 pairing of Taylor coefficients, sum of c_f * conj(c_g)."""
    _check_same_kind(f, g)
    return complex(np.vdot(g.coeffs, f.coeffs))


def norm(f) -> float:
    return float(np.linalg.norm(f.coeffs))


def add(f: Series1, g: Series1) -> Series1:
    _check_same_kind(f, g)
    return Series1(f.coeffs + g.coeffs)


def scale(c: complex, f: Series1) -> Series1:
    return Series1(c * np.asarray(f.coeffs), lost_mass=f.lost_mass * abs(c))


def mul(f: Series1, g: Series1, cap: int) -> Series1:
    """Cauchy product truncated at ``cap``.

    Coefficients up to ``cap`` are exact for the given operands; mass
    discarded above the cap (plus mass the operands had already lost) is
    reported in the result's ``lost_mass``.
    """
    full = np.convolve(f.coeffs, g.coeffs)
    kept = full[: cap + 1]
    lost = float(np.linalg.norm(full[cap + 1 :]))
    if len(kept) < cap + 1:
        kept = np.pad(kept, (0, cap + 1 - len(kept)))
    carried = f.lost_mass * (np.linalg.norm(g.coeffs) + g.lost_mass) + g.lost_mass * np.linalg.norm(f.coeffs)
    return Series1(kept, lost_mass=lost + float(carried))


def shift_down_1(f: Series1) -> Series1:
    """Adjoint-shift action on coefficients: c_k -> c_{k+1}, top set to 0."""
    out = np.zeros_like(f.coeffs)
    out[:-1] = f.coeffs[1:]
    return Series1(out, lost_mass=f.lost_mass)


def shift_down_z1(f: Series2) -> Series2:
    out = np.zeros_like(f.coeffs)
    out[:-1, :] = f.coeffs[1:, :]
    return Series2(out, lost_mass=f.lost_mass)


def shift_down_z2(f: Series2) -> Series2:
    out = np.zeros_like(f.coeffs)
    out[:, :-1] = f.coeffs[:, 1:]
    return Series2(out, lost_mass=f.lost_mass)


def tensor(f: Series1, g: Series1) -> Series2:
    """Elementary tensor: c[a][b] = f_a * g_b (f in z1, g in z2)."""
    return Series2(np.outer(f.coeffs, g.coeffs), lost_mass=f.lost_mass * norm(g) + g.lost_mass * norm(f))


def truncate1(f: Series1, cap: int) -> Series1:
    """Pad or cut to a new cap; cut mass is added to lost_mass."""
    if cap == f.cap:
        return f
    if cap > f.cap:
        return Series1(np.pad(f.coeffs, (0, cap - f.cap)), lost_mass=f.lost_mass)
    lost = float(np.linalg.norm(f.coeffs[cap + 1 :]))
    return Series1(f.coeffs[: cap + 1], lost_mass=f.lost_mass + lost)


def evaluate1(f: Series1, z: complex) -> complex:
    """Horner evaluation of the truncated series at a point."""
    acc = 0j
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return complex(acc)
