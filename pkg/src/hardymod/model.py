"""Model spaces of Blaschke powers and the compressed adjoint shift.

The quotient of the Hardy space by the range of multiplication by the
m-th power of a factor has an explicit orthogonal basis: the vectors
b_alpha^j applied to the adjoint-shift image of b_alpha, j < m, each of
norm sqrt(1 - |alpha|^2).  The compression of the adjoint shift to that
block has a closed-form upper-triangular matrix; this module provides
both the closed form and a numeric constructor that recomputes every
entry from actual coefficient arrays, so each can serve as the other's
oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapTooSmall, UnitDiscError
from .series import Series1, inner_product, mul, norm, one1, shift_down_1
from .blaschke import blaschke_factor


@dataclass(frozen=True)
class ModelBasis:
    """Orthogonal basis of an inner multiple of the model space.

    vectors[j] = theta2 * b_alpha^j * (adjoint shift of b_alpha); all have
    the common norm sqrt(1 - |alpha|^2) and are pairwise orthogonal.
    """

    alpha: complex
    m: int
    kernel_at_alpha: Series1
    vectors: tuple[Series1, ...]
    vector_norm: float


@dataclass(frozen=True)
class CompressedMatrix:
    """Matrix of the compressed adjoint shift in the normalized basis.

    Entries are stored in the normalized-basis convention: the raw
    pairings divided by 1 - |alpha|^2.  Strictly lower-triangular entries
    vanish (within tolerance for the numeric constructor).
    """

    alpha: complex
    m: int
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.complex128)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)


def szego(alpha: complex, cap: int) -> Series1:
    """Reproducing kernel of the disc at alpha: coefficient k is conj(alpha)^k."""
    alpha = complex(alpha)
    if abs(alpha) >= 1.0:
        raise UnitDiscError(f"alpha outside open unit disc: {alpha}")
    return Series1(np.conj(alpha) ** np.arange(cap + 1))


def model_basis(alpha: complex, m: int, cap: int, theta2: Series1 | None = None) -> ModelBasis:
    """Explicit orthogonal basis {theta2 b^j M* b : j < m} at truncation cap.

    Raises CapTooSmall when the cap is insufficient for the pairwise
    orthogonality of the vectors at a 1e-7 relative level.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    alpha = complex(alpha)
    b = blaschke_factor(alpha, cap)  # validates alpha
    kernel = szego(alpha, cap)
    w = shift_down_1(b)
    if theta2 is not None and theta2.cap != cap:
        raise ValueError(f"theta2 cap {theta2.cap} differs from requested cap {cap}")
    vectors = []
    v = w if theta2 is None else mul(theta2, w, cap)
    for _ in range(m):
        vectors.append(v)
        v = mul(v, b, cap)
    common = math.sqrt(1.0 - abs(alpha) ** 2)
    scalemax = max(common, 1e-300)
    for i in range(m):
        for j in range(i + 1, m):
            g = abs(inner_product(vectors[i], vectors[j]))
            if g > 1e-7 * scalemax**2:
                raise CapTooSmall(
                    f"cap {cap} too small: basis vectors {i},{j} have overlap {g:.3e}")
    return ModelBasis(alpha=alpha, m=m, kernel_at_alpha=kernel,
                      vectors=tuple(vectors), vector_norm=common)


def compressed_matrix_analytic(alpha: complex, m: int) -> CompressedMatrix:
    """Closed-form matrix of the compressed adjoint shift, normalized basis.

    For alpha != 0 the entries are conj(alpha) on the diagonal and
    -(1 - |alpha|^2) |alpha|^(j-i) / alpha for j > i, zero below; the
    off-diagonal phase follows from z S = b~ + alpha S for the
    *unnormalized* factor b~ = (z - alpha)/(1 - conj(alpha) z) together
    with b(0) = |alpha| for the normalized one.  For alpha = 0 the factor
    is the coordinate function itself and the matrix is the nilpotent
    Jordan block with superdiagonal 1.  Either way the matrix is
    invertible exactly when alpha != 0.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    alpha = complex(alpha)
    r = abs(alpha)
    if r >= 1.0:
        raise UnitDiscError(f"alpha outside open unit disc: {alpha}")
    a = np.zeros((m, m), dtype=np.complex128)
    rr = 1.0 - r * r
    for i in range(m):
        for j in range(i + 1, m):
            if alpha == 0:
                a[i, j] = 1.0 if j == i + 1 else 0.0
            else:
                a[i, j] = -rr * r ** (j - i) / alpha
        a[i, i] = np.conj(alpha)
    return CompressedMatrix(alpha=alpha, m=m, entries=a)


def compressed_matrix_numeric(alpha: complex, m: int, cap: int,
                              theta2: Series1 | None = None) -> CompressedMatrix:
    """Same matrix recomputed from coefficient arrays by actual projection.

    Entry (i, j) is the pairing of the shifted j-th basis vector with the
    i-th, divided by the common squared norm; independent of theta2 because
    multiplication by an inner function is an isometry.
    """
    basis = model_basis(alpha, m, cap, theta2=theta2)
    rr = 1.0 - abs(complex(alpha)) ** 2
    a = np.zeros((m, m), dtype=np.complex128)
    shifted = [shift_down_1(v) for v in basis.vectors]
    for i in range(m):
        for j in range(m):
            a[i, j] = inner_product(shifted[j], basis.vectors[i]) / rr
    return CompressedMatrix(alpha=complex(alpha), m=m, entries=a)


def kernel_dim(a: CompressedMatrix, tol: float) -> int:
    """Numerical nullity: singular values at or below tol * sigma_max, with
    full nullity when sigma_max itself is at or below tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = np.linalg.svd(a.entries, compute_uv=False)
    smax = s[0] if len(s) else 0.0
    if smax <= tol:
        return a.m
    return int(np.sum(s <= tol * smax))
