"""Rudin submodules at finite truncation and their wandering subspaces.

The wandering dimension of a Rudin submodule is computed three
independent ways:

* ``wandering_dim_formula`` counts zeros at the origin in the defining
  sequence (the exact answer, no numerics);
* ``wandering_via_blocks`` sums numerical nullities of the closed-form
  compressed-shift matrices, one per orthogonal block of the module;
* ``wandering_via_bruteforce`` builds the truncated submodule as a span
  of monomial multiples of the tail products and intersects coefficient
  subspaces in the ambient space, never touching the closed forms.

``report`` runs all three at two cap levels and records agreement and
stabilization flags instead of raising on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz

from .errors import CapTooSmall, ChainError
from .series import (Series1, Series2, inner_product, monomial1, mul, norm,
                     one1, tensor, truncate1, zero1)
from .blaschke import RudinSpec, phi_tail
from .model import ModelBasis, compressed_matrix_analytic, kernel_dim, model_basis
from .subspace import (Subspace, from_spanning, intersect, numerical_rank,
                       orthogonal_directions_within)


@dataclass(frozen=True)
class Block:
    """One orthogonal block of the module decomposition.

    Block 0 is the full Beurling piece generated by phi_0 and carries no
    model basis; block n >= 1 is the m-dimensional model-space block with
    inner multiplier phi_n, zero alpha_{n-1} and multiplicity l_{n-1}.
    """

    n: int
    alpha: complex | None
    mult: int | None
    theta2: Series1
    basis: ModelBasis | None


@dataclass(frozen=True)
class WanderingReport:
    formula_dim: int
    block_dim: int
    bruteforce_dim: int
    basis: tuple[Series2, ...]
    stabilization_ok: bool
    agreement_ok: bool
    diagnostics: dict


def build_blocks(spec: RudinSpec, cap2: int) -> list[Block]:
    """Orthogonal block decomposition of the module at truncation cap2."""
    phi0 = phi_tail(spec, 0, cap2)
    blocks = [Block(n=0, alpha=None, mult=None, theta2=phi0, basis=None)]
    m = spec.last_index
    for n in range(1, m + 2):
        point = spec.points[n - 1]
        theta2 = phi_tail(spec, n, cap2)
        basis = model_basis(point.alpha, point.mult, cap2, theta2=theta2)
        blocks.append(Block(n=n, alpha=point.alpha, mult=point.mult,
                            theta2=theta2, basis=basis))
    return blocks


def wandering_dim_formula(spec: RudinSpec) -> int:
    """1 plus the number of zeros placed exactly at the origin.

    The count is over the stored input values, never over computed
    floats.
    """
    return 1 + sum(1 for p in spec.points if p.alpha == 0)


def wandering_via_blocks(spec: RudinSpec, caps: tuple[int, int] | None = None):
    """Block-method dimension and orthonormal wandering basis.

    Each block contributes the numerical nullity of its closed-form
    compressed-shift matrix; a block with a zero at the origin
    contributes the kernel vector z1^n (x) phi_n.  Returns
    (dim, basis, per-block kernel dimensions).
    """
    n1, n2 = caps if caps is not None else spec.caps
    phi0 = phi_tail(spec, 0, n2)
    dim = 1
    basis: list[Series2] = [tensor(one1(n1), phi0)]
    kernel_dims: list[int] = []
    m = spec.last_index
    for n in range(1, m + 2):
        point = spec.points[n - 1]
        kd = kernel_dim(compressed_matrix_analytic(point.alpha, point.mult), spec.tol)
        kernel_dims.append(kd)
        dim += kd
        if kd and n <= n1:
            basis.append(tensor(monomial1(n, n1), phi_tail(spec, n, n2)))
    return dim, basis, kernel_dims


def _shift_columns(coeffs: np.ndarray, up: int = 0) -> np.ndarray:
    """Matrix whose column b is the coefficient vector shifted up by b + up,
    truncated at the ambient cap (lower-triangular Toeplitz)."""
    n = len(coeffs)
    col = np.zeros(n, dtype=np.complex128)
    col[up:] = coeffs[: n - up]
    return toeplitz(col, np.zeros(n, dtype=np.complex128))


def _check_bruteforce_caps(spec: RudinSpec, caps: tuple[int, int], margin: int):
    if margin < 2:
        raise ValueError(f"margin must be >= 2, got {margin}")
    n1, n2 = caps
    m = spec.last_index
    if n1 - margin < m + 1:
        raise CapTooSmall(f"z1 cap {n1} too small for {m + 1} tail products plus margin {margin}")
    poly_deg = spec.zero_multiplicity_at_origin()
    if n2 - margin < poly_deg:
        raise CapTooSmall(f"z2 cap {n2} too small for polynomial degree {poly_deg} plus margin {margin}")


def wandering_via_bruteforce(spec: RudinSpec, caps: tuple[int, int] | None = None,
                             margin: int = 2, tol: float | None = None) -> int:
    """Ambient-space wandering dimension, independent of the closed forms.

    The truncated module is the span of z1^(n+a) z2^b phi_n over all
    admissible degrees.  Since every generator is a z1-monomial times a
    z2-series, the module splits exactly along z1-degree d into z2-spans
    V_d, and the defect conditions split with it: a wandering vector's
    degree-d slice must lie in V_d, be orthogonal to V_{d-1} (the z1
    shift) and to z2 V_d (the z2 shift).  Candidates are restricted to
    degrees at most caps - margin to suppress truncation-boundary
    artifacts.
    """
    n1, n2 = caps if caps is not None else spec.caps
    if tol is None:
        tol = spec.tol
    _check_bruteforce_caps(spec, (n1, n2), margin)
    m = spec.last_index
    d_cand = n2 - margin  # z2-degree limit for candidate slices
    total = 0
    prev_cols = None  # raw generator columns of V_{d-1}
    for d in range(0, min(m + 2, n1 - margin) + 1):
        phi = phi_tail(spec, min(d, m + 1), n2)
        cols = _shift_columns(phi.coeffs)
        v_d = from_spanning(cols.T, tol)
        constraint_cols = [_shift_columns(phi.coeffs, up=1)]
        if prev_cols is not None:
            constraint_cols.append(prev_cols)
        u_d = from_spanning(np.hstack(constraint_cols).T, tol)
        # candidates: coordinate slices of z2-degree <= d_cand orthogonal to
        # the shifted generators
        g = u_d.frame.conj().T[:, : d_cand + 1]
        _, sv, vh = np.linalg.svd(g, full_matrices=True)
        r = numerical_rank(sv, tol)
        null = vh.conj().T[:, r:]
        k_frame = np.zeros((n2 + 1, null.shape[1]), dtype=np.complex128)
        k_frame[: d_cand + 1, :] = null
        k_d = Subspace(k_frame, tol)
        total += intersect(v_d, k_d, tol).dim
        prev_cols = cols
    return total


def generation_defect(spec: RudinSpec, caps: tuple[int, int] | None = None,
                      tol: float | None = None):
    """Evidence check that the wandering subspace need not generate.

    Compares, slice by z1-degree, the rank of the truncated module with
    the rank of the span of all monomial multiples of the wandering basis
    vectors.  Returns (defect, (module_dim, generated_dim)); a defect that
    stays positive as caps grow is evidence of non-generation.
    """
    n1, n2 = caps if caps is not None else spec.caps
    if tol is None:
        tol = spec.tol
    m = spec.last_index
    _, basis, _ = wandering_via_blocks(spec, (n1, n2))
    # each wandering vector is a z1-monomial tensor a z2-series
    gens: list[tuple[int, np.ndarray]] = []
    for w in basis:
        rows = np.nonzero(np.linalg.norm(w.coeffs, axis=1))[0]
        k = int(rows[0]) if len(rows) else 0
        gens.append((k, w.coeffs[k]))
    module_dim = 0
    generated_dim = 0
    full = n2 + 1
    cached_v: dict[int, int] = {}
    cached_g: dict[tuple[int, ...], int] = {}
    for d in range(n1 + 1):
        nd = min(d, m + 1)
        if nd not in cached_v:
            phi = phi_tail(spec, nd, n2)
            cached_v[nd] = full if nd == m + 1 else from_spanning(_shift_columns(phi.coeffs).T, tol).dim
        module_dim += cached_v[nd]
        active = tuple(sorted(i for i, (k, _) in enumerate(gens) if k <= d))
        if active not in cached_g:
            if active:
                cols = np.hstack([_shift_columns(gens[i][1]) for i in active])
                cached_g[active] = from_spanning(cols.T, tol).dim
            else:
                cached_g[active] = 0
        generated_dim += cached_g[active]
    return module_dim - generated_dim, (module_dim, generated_dim)


def _series_divide(f: Series1, g: Series1, tol: float) -> Series1:
    """Quotient candidate q with q * g = f up to the common cap.

    Leading zeros of g must be matched by f; fails with ChainError when
    the reconstruction residual exceeds tol.
    """
    cap = f.cap
    gc = g.coeffs
    lead = int(np.argmax(np.abs(gc) > 0)) if np.any(np.abs(gc) > 0) else -1
    if lead < 0:
        raise ChainError("division by the zero series")
    if np.linalg.norm(f.coeffs[:lead]) > tol:
        raise ChainError("dividend lacks the divisor's zero at the origin")
    fs = f.coeffs[lead:]
    n = len(fs)
    gs = np.zeros(n, dtype=np.complex128)
    gs[: len(gc) - lead] = gc[lead:]
    q = np.zeros(cap + 1, dtype=np.complex128)
    for k in range(n):
        acc = fs[k] - (np.dot(q[:k], gs[k:0:-1]) if k else 0.0)
        q[k] = acc / gs[0]
    quotient = Series1(q)
    recon = mul(quotient, g, cap)
    if np.linalg.norm(recon.coeffs - f.coeffs) > max(tol, 1e-10) * max(norm(f), 1.0):
        raise ChainError("chain divisibility fails: quotient does not reproduce the dividend")
    return quotient


@dataclass(frozen=True)
class GeneralizedSpec:
    """Explicit finite chains: psi increasing (each divides the next) and
    phi decreasing (each divisible by the next), all truncated series."""

    psi: tuple[Series1, ...]
    phi: tuple[Series1, ...]
    caps: tuple[int, int] = (6, 24)
    tol: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(self.psi))
        object.__setattr__(self, "phi", tuple(self.phi))
        if len(self.psi) != len(self.phi):
            raise ChainError("psi and phi chains must have equal length")
        if not self.psi:
            raise ChainError("chains may not be empty")

    def validate_chains(self):
        for a, b in zip(self.psi, self.psi[1:]):
            _series_divide(b, a, self.tol)
        for a, b in zip(self.phi, self.phi[1:]):
            _series_divide(a, b, self.tol)


def wandering_general(gspec: GeneralizedSpec, caps: tuple[int, int] | None = None,
                      tol: float | None = None, margin: int = 2):
    """Wandering dimension of a generalized module from explicit chains.

    The z1-defect space is assembled block by block from the chain
    decomposition (one z2-complement per chain step), then cut down by
    orthogonality to the z2-shifted generators, with margin-restricted
    candidates as in the brute-force path.  Returns (dim, basis).
    """
    n1, n2 = caps if caps is not None else gspec.caps
    if tol is None:
        tol = gspec.tol
    gspec.validate_chains()
    psi = [truncate1(p, n1) for p in gspec.psi]
    phi = [truncate1(p, n2) for p in gspec.phi]
    ambient = (n1 + 1) * (n2 + 1)

    # blocks in the z2 coordinate space: complement of each chain step
    prev = from_spanning([], tol, ambient_dim=n2 + 1)
    defect_cols = []
    for ps, ph in zip(psi, phi):
        v = from_spanning(_shift_columns(ph.coeffs).T, tol)
        q = orthogonal_directions_within(v, prev.frame, tol)
        for j in range(q.dim):
            defect_cols.append(np.outer(ps.coeffs, q.frame[:, j]).ravel())
        prev = v
    z1_defect = from_spanning(defect_cols, tol, ambient_dim=ambient)

    # z2-shifted generators plus the margin cut as orthogonality constraints
    constraints = []
    for ps, ph in zip(psi, phi):
        shifted = _shift_columns(ph.coeffs, up=1)
        for a in range(n1 + 1):
            z1a = np.zeros(n1 + 1, dtype=np.complex128)
            z1a[a:] = ps.coeffs[: n1 + 1 - a]
            for b in range(n2 + 1):
                constraints.append(np.outer(z1a, shifted[:, b]).ravel())
    shift_span = from_spanning(constraints, tol, ambient_dim=ambient)
    boundary = []
    for a in range(n1 + 1):
        for b in range(n2 + 1):
            if a > n1 - margin or b > n2 - margin:
                e = np.zeros(ambient, dtype=np.complex128)
                e[a * (n2 + 1) + b] = 1.0
                boundary.append(e)
    all_constraints = np.hstack([shift_span.frame, np.column_stack(boundary)]) if boundary \
        else shift_span.frame
    w = orthogonal_directions_within(z1_defect, all_constraints, tol)
    basis = tuple(Series2(w.frame[:, j].reshape(n1 + 1, n2 + 1)) for j in range(w.dim))
    return w.dim, basis


def random_spec(rng: np.random.Generator, max_index: int = 5, max_mult: int = 3,
                max_radius: float = 0.7, zero_prob: float = 1.0 / 3.0,
                caps: tuple[int, int] = (10, 80), tol: float = 1e-9) -> RudinSpec:
    """Seeded random zero sequence for the randomized verification harness.

    Zeros land exactly at the origin with probability ``zero_prob``;
    nonzero radii stay in [0.1, max_radius] so that |alpha|^mult remains
    well above the rank threshold.
    """
    n_points = int(rng.integers(0, max_index + 2))
    points = []
    for _ in range(n_points):
        if rng.random() < zero_prob:
            alpha = 0j
        else:
            r = 0.1 + (max_radius - 0.1) * rng.random()
            theta = 2.0 * np.pi * rng.random()
            alpha = r * np.exp(1j * theta)
        points.append((alpha, int(rng.integers(1, max_mult + 1))))
    return RudinSpec(tuple(points), caps=caps, tol=tol)


def report(spec: RudinSpec, caps: tuple[int, int] | None = None,
           tol: float | None = None, margin: int = 2, cap_step: int = 8) -> WanderingReport:
    """Run all three wandering computations at two cap levels.

    Disagreement between routes or across cap levels is recorded in the
    flags and diagnostics, never raised.
    """
    n1, n2 = caps if caps is not None else spec.caps
    if tol is not None and tol != spec.tol:
        spec = RudinSpec(spec.points, caps=(n1, n2), tol=tol)
    formula = wandering_dim_formula(spec)
    block_dim, basis, kernel_dims = wandering_via_blocks(spec, (n1, n2))
    brute = wandering_via_bruteforce(spec, (n1, n2), margin=margin)
    caps2 = (n1 + cap_step, n2 + cap_step)
    block_dim2, _, _ = wandering_via_blocks(spec, caps2)
    brute2 = wandering_via_bruteforce(spec, caps2, margin=margin)
    stabilization_ok = (block_dim == block_dim2) and (brute == brute2)
    agreement_ok = formula == block_dim == brute
    warnings = spec.conditioning_warnings()
    diagnostics = {
        "kernel_dims": kernel_dims,
        "caps": [n1, n2],
        "caps_step": list(caps2),
        "dims_at_step": {"block": block_dim2, "bruteforce": brute2},
        "tol": spec.tol,
        "margin": margin,
        "warnings": warnings,
    }
    return WanderingReport(formula_dim=formula, block_dim=block_dim,
                           bruteforce_dim=brute, basis=tuple(basis),
                           stabilization_ok=stabilization_ok,
                           agreement_ok=agreement_ok, diagnostics=diagnostics)
