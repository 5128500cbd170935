import numpy as np
import pytest

from hardymod.errors import ContainmentError, DimensionMismatch
from hardymod.subspace import (Subspace, complement_within, from_spanning,
                               intersect, numerical_rank,
                               orthogonal_directions_within, project, residual)


def e(i, n=6):
    v = np.zeros(n, dtype=complex)
    v[i] = 1
    return v


class TestFromSpanning:
    def test_duplicates_removed_by_rank(self):
        s = from_spanning([e(0), e(0), e(1)], 1e-9)
        assert s.dim == 2

    def test_below_tolerance_perturbation(self):
        s = from_spanning([e(0), e(0) + 1e-15 * e(1)], 1e-9)
        assert s.dim == 1

    def test_generic_full_rank_matches_exact_oracle(self):
        # oracle: exact rank of the same integer matrix over the rationals
        import sympy

        rng = np.random.default_rng(42)
        ints = rng.integers(-9, 10, size=(6, 10))
        exact = sympy.Matrix(ints.tolist()).rank()
        s = from_spanning(list(ints.astype(complex).T), 1e-9)
        assert exact == 6
        assert s.dim == exact

    def test_empty_gives_zero_subspace(self):
        s = from_spanning([], 1e-9, ambient_dim=4)
        assert s.dim == 0 and s.ambient_dim == 4

    def test_frame_is_orthonormal(self):
        rng = np.random.default_rng(1)
        vecs = [rng.normal(size=8) + 1j * rng.normal(size=8) for _ in range(5)]
        s = from_spanning(vecs, 1e-9)
        gram = s.frame.conj().T @ s.frame
        assert np.abs(gram - np.eye(s.dim)).max() < 1e-8


class TestProject:
    def test_coordinate_projection(self):
        s = from_spanning([e(0)], 1e-9)
        assert np.allclose(project(s, e(0) + e(1)), e(0))

    def test_fixes_members(self):
        rng = np.random.default_rng(2)
        vecs = [rng.normal(size=7) + 1j * rng.normal(size=7) for _ in range(3)]
        s = from_spanning(vecs, 1e-9)
        v = vecs[0] + 2 * vecs[1]
        assert np.linalg.norm(project(s, v) - v) < 1e-12 * np.linalg.norm(v)

    def test_contraction_and_idempotence(self):
        rng = np.random.default_rng(3)
        s = from_spanning([rng.normal(size=9) for _ in range(4)], 1e-9)
        v = rng.normal(size=9) + 1j * rng.normal(size=9)
        p = project(s, v)
        assert np.linalg.norm(p) <= np.linalg.norm(v) + 1e-12
        assert np.allclose(project(s, p), p)

    def test_self_adjoint_bilinear_form(self):
        rng = np.random.default_rng(4)
        s = from_spanning([rng.normal(size=9) + 1j * rng.normal(size=9) for _ in range(4)], 1e-9)
        for _ in range(10):
            v = rng.normal(size=9) + 1j * rng.normal(size=9)
            w = rng.normal(size=9) + 1j * rng.normal(size=9)
            lhs = np.vdot(w, project(s, v))
            rhs = np.vdot(project(s, w), v)
            assert abs(lhs - rhs) < 1e-10

    def test_ambient_mismatch(self):
        s = from_spanning([e(0)], 1e-9)
        with pytest.raises(DimensionMismatch):
            project(s, np.zeros(5))


class TestIntersect:
    def test_shared_coordinate(self):
        a = from_spanning([e(0), e(1)], 1e-9)
        b = from_spanning([e(1), e(2)], 1e-9)
        got = intersect(a, b, 1e-9)
        assert got.dim == 1
        assert residual(got, e(1)) < 1e-10

    def test_self_intersection(self):
        rng = np.random.default_rng(5)
        a = from_spanning([rng.normal(size=8) for _ in range(3)], 1e-9)
        got = intersect(a, a, 1e-9)
        assert got.dim == a.dim
        for j in range(a.dim):
            assert residual(a, got.frame[:, j]) < 1e-10

    def test_generic_position_is_trivial(self):
        # oracle: over the rationals, the stacked 6 integer vectors in
        # ambient 10 have full rank 6, so the two 3-dim spans meet only at 0
        import sympy

        rng = np.random.default_rng(6)
        ints = rng.integers(-9, 10, size=(6, 10))
        assert sympy.Matrix(ints.tolist()).rank() == 6
        a = from_spanning(list(ints[:3].astype(complex)), 1e-9)
        b = from_spanning(list(ints[3:].astype(complex)), 1e-9)
        assert intersect(a, b, 1e-9).dim == 0

    def test_symmetry_of_angle_spectrum(self):
        rng = np.random.default_rng(7)
        a = from_spanning([rng.normal(size=8) for _ in range(3)], 1e-9)
        b = from_spanning([rng.normal(size=8) for _ in range(3)], 1e-9)
        sab = np.linalg.svd(a.frame.conj().T @ b.frame, compute_uv=False)
        sba = np.linalg.svd(b.frame.conj().T @ a.frame, compute_uv=False)
        assert np.allclose(np.sort(sab), np.sort(sba))


class TestComplement:
    def test_coordinate_complement(self):
        big = from_spanning([e(0), e(1)], 1e-9)
        small = from_spanning([e(0)], 1e-9)
        got = complement_within(big, small, 1e-9)
        assert got.dim == 1
        assert residual(got, e(1)) < 1e-10

    def test_complement_of_zero_subspace(self):
        big = from_spanning([e(0), e(2)], 1e-9)
        zero = from_spanning([], 1e-9, ambient_dim=6)
        got = complement_within(big, zero, 1e-9)
        assert got.dim == big.dim

    def test_dimension_additivity(self):
        rng = np.random.default_rng(8)
        vecs = [rng.normal(size=9) + 1j * rng.normal(size=9) for _ in range(5)]
        big = from_spanning(vecs, 1e-9)
        small = from_spanning(vecs[:2], 1e-9)
        got = complement_within(big, small, 1e-9)
        assert got.dim + small.dim == big.dim

    def test_containment_enforced(self):
        big = from_spanning([e(0)], 1e-9)
        small = from_spanning([e(1)], 1e-9)
        with pytest.raises(ContainmentError):
            complement_within(big, small, 1e-9)


class TestHelpers:
    def test_numerical_rank_rule(self):
        assert numerical_rank(np.array([1.0, 1e-3, 1e-12]), 1e-9) == 2
        assert numerical_rank(np.array([1e-12, 1e-13]), 1e-9) == 0
        assert numerical_rank(np.array([]), 1e-9) == 0

    def test_orthogonal_directions(self):
        s = from_spanning([e(0), e(1)], 1e-9)
        constraints = np.column_stack([e(0)])
        got = orthogonal_directions_within(s, constraints, 1e-9)
        assert got.dim == 1
        assert residual(got, e(1)) < 1e-10
