"""Finite-dimensional numerical subspaces of coefficient space.

A subspace is an orthonormal frame (columns) together with the tolerance
used to build it.  All rank decisions in the package go through
``numerical_rank`` so nullity semantics are identical everywhere:
singular values at or below tol * sigma_max are treated as zero.
Intersections use principal angles (SVD of the frame cross-Gram), which
is better conditioned than nullspace stacking and yields the angle
spectrum as a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContainmentError, DimensionMismatch


def numerical_rank(singular_values: np.ndarray, tol: float) -> int:
    """Shared rank rule: count singular values above tol * sigma_max."""
    s = np.asarray(singular_values, dtype=float)
    if s.size == 0:
        return 0
    smax = s.max()
    if smax <= tol:
        return 0
    return int(np.sum(s > tol * smax))


@dataclass(frozen=True)
class Subspace:
    """Orthonormal frame plus construction tolerance."""

    frame: np.ndarray
    tol: float

    def __post_init__(self):
        arr = np.asarray(self.frame, dtype=np.complex128)
        if arr.ndim != 2:
            raise ValueError(f"frame must be 2-D, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "frame", arr)

    @property
    def ambient_dim(self) -> int:
        return self.frame.shape[0]

    @property
    def dim(self) -> int:
        return self.frame.shape[1]


def from_spanning(vectors, tol: float, ambient_dim: int | None = None) -> Subspace:
    """Orthonormal frame for the numerical span of the given vectors.

    An empty list (or all-zero input) gives the zero subspace; rank is
    decided by the shared singular-value rule.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    cols = [np.asarray(v, dtype=np.complex128).ravel() for v in vectors]
    if not cols:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for an empty spanning set")
        return Subspace(np.zeros((ambient_dim, 0), dtype=np.complex128), tol)
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise DimensionMismatch("spanning vectors have mixed ambient dimensions")
    a = np.column_stack(cols)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    d = numerical_rank(s, tol)
    return Subspace(u[:, :d], tol)


def project(s: Subspace, v: np.ndarray) -> np.ndarray:
    """Orthogonal projection of v onto the subspace."""
    v = np.asarray(v, dtype=np.complex128).ravel()
    if len(v) != s.ambient_dim:
        raise DimensionMismatch(f"ambient mismatch: {len(v)} vs {s.ambient_dim}")
    return s.frame @ (s.frame.conj().T @ v)


def residual(s: Subspace, v: np.ndarray) -> float:
    """Distance of v from the subspace, relative to its norm (0 for v = 0)."""
    v = np.asarray(v, dtype=np.complex128).ravel()
    nv = np.linalg.norm(v)
    if nv == 0:
        return 0.0
    return float(np.linalg.norm(v - project(s, v)) / nv)


def intersect(a: Subspace, b: Subspace, tol: float) -> Subspace:
    """Numerical intersection via principal angles.

    Directions whose principal-angle cosines exceed 1 - tol are kept; the
    result's dimension never exceeds either operand's.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    if a.dim == 0 or b.dim == 0:
        return Subspace(np.zeros((a.ambient_dim, 0), dtype=np.complex128), tol)
    u, s, _ = np.linalg.svd(a.frame.conj().T @ b.frame, full_matrices=False)
    keep = int(np.sum(s > 1.0 - tol))
    basis = a.frame @ u[:, :keep]
    # re-orthonormalize: numerically the kept directions are orthonormal
    # already, but a QR pass removes rounding drift
    if keep:
        basis, _ = np.linalg.qr(basis)
    return Subspace(basis, tol)


def complement_within(big: Subspace, small: Subspace, tol: float) -> Subspace:
    """Orthogonal complement of ``small`` inside ``big``.

    Requires ``small`` to be numerically contained in ``big``; the
    containment residual is reported on failure.  The result's dimension
    is exactly dim(big) - dim(small).
    """
    if big.ambient_dim != small.ambient_dim:
        raise DimensionMismatch(f"ambient mismatch: {big.ambient_dim} vs {small.ambient_dim}")
    if small.dim:
        res = np.linalg.norm(small.frame - big.frame @ (big.frame.conj().T @ small.frame), axis=0)
        worst = float(res.max())
        if worst > max(tol, 1e-12) * 10:
            raise ContainmentError(
                f"small subspace not contained in big one: residual {worst:.3e}")
    reduced = big.frame - small.frame @ (small.frame.conj().T @ big.frame)
    u, s, _ = np.linalg.svd(reduced, full_matrices=False)
    d = big.dim - small.dim
    return Subspace(u[:, :d], tol)


def orthogonal_directions_within(s: Subspace, constraints: np.ndarray, tol: float) -> Subspace:
    """Directions of ``s`` orthogonal to every column of ``constraints``.

    Returns the subspace {x in s : constraints^H x = 0}, computed from the
    nullspace of the cross-Gram in the frame coordinates.
    """
    c = np.asarray(constraints, dtype=np.complex128)
    if c.ndim != 2 or c.shape[0] != s.ambient_dim:
        raise DimensionMismatch("constraint columns must live in the same ambient space")
    if s.dim == 0:
        return s
    if c.shape[1] == 0:
        return s
    g = c.conj().T @ s.frame
    u, sv, vh = np.linalg.svd(g, full_matrices=True)
    r = numerical_rank(sv, tol)
    null = vh.conj().T[:, r:]
    basis = s.frame @ null
    if basis.shape[1]:
        basis, _ = np.linalg.qr(basis)
    return Subspace(basis, tol)
