import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardymod.blaschke import blaschke_factor
from hardymod.errors import DimensionMismatch
from hardymod.series import (Series1, Series2, inner_product, monomial1, mul,
                             norm, one1, shift_down_1, shift_down_z1,
                             shift_down_z2, tensor, truncate1, zero1)


def coeff_lists(max_len=8):
    scalars = st.tuples(st.floats(-5, 5), st.floats(-5, 5)).map(lambda p: complex(*p))
    return st.lists(scalars, min_size=1, max_size=max_len)


class TestInnerProduct:
    def test_unit_constant(self):
        f = one1(5)
        assert inner_product(f, f) == 1

    def test_monomial_orthogonality(self):
        assert inner_product(monomial1(1, 3), one1(3)) == 0

    def test_truncated_factor_has_unit_norm(self):
        f = blaschke_factor(0.5, 200)
        # closed form: |a|^2 + (1-|a|^2)^2 / (1-|a|^2) = 1
        assert abs(inner_product(f, f) - 1) < 1e-12

    def test_cap_mismatch_rejected(self):
        with pytest.raises(DimensionMismatch):
            inner_product(one1(3), one1(4))
        with pytest.raises(DimensionMismatch):
            inner_product(one1(3), tensor(one1(3), one1(3)))

    @given(coeff_lists(), coeff_lists())
    def test_conjugate_symmetry(self, a, b):
        n = max(len(a), len(b)) - 1
        f = truncate1(Series1(np.array(a)), n)
        g = truncate1(Series1(np.array(b)), n)
        assert inner_product(f, g) == pytest.approx(np.conj(inner_product(g, f)))

    @given(coeff_lists())
    def test_norm_positive_definite(self, a):
        f = Series1(np.array(a))
        sq = inner_product(f, f)
        assert sq.imag == 0 and sq.real >= 0
        if norm(f) == 0:
            # squaring can underflow, so only conclude up to sqrt(tiny)
            assert np.abs(f.coeffs).max() < np.sqrt(np.finfo(float).tiny)


class TestMul:
    def test_polynomial_identity(self):
        f = Series1([1, 1])
        g = Series1([1, -1])
        prod = mul(f, g, 2)
        assert np.allclose(prod.coeffs, [1, 0, -1])
        assert prod.lost_mass == 0

    def test_zero_factor_squares_to_z2(self):
        b0 = blaschke_factor(0, 4)
        assert np.allclose(mul(b0, b0, 4).coeffs, monomial1(2, 4).coeffs)

    def test_product_of_inner_factors_is_inner(self):
        b = blaschke_factor(0.5, 200)
        assert abs(norm(mul(b, b, 200)) - 1) < 1e-10

    def test_truncation_is_reported(self):
        f = Series1([0, 1])
        assert mul(f, f, 1).lost_mass == 1.0


class TestShiftDown:
    def test_index_decrement(self):
        out = shift_down_1(Series1([1, 2, 3]))
        assert np.allclose(out.coeffs, [2, 3, 0])

    def test_kills_constants(self):
        assert norm(shift_down_1(one1(4))) == 0

    def test_adjoint_of_multiplication(self):
        rng = np.random.default_rng(3)
        cap = 9
        for _ in range(20):
            fc = rng.normal(size=cap) + 1j * rng.normal(size=cap)
            f = Series1(np.append(fc, 0.0))  # deg f < cap
            g = Series1(rng.normal(size=cap + 1) + 1j * rng.normal(size=cap + 1))
            zf = mul(f, monomial1(1, cap), cap)
            assert inner_product(zf, g) == pytest.approx(inner_product(f, shift_down_1(g)))

    def test_two_variable_shifts(self):
        f = tensor(Series1([1, 2]), Series1([3, 4]))
        assert np.allclose(shift_down_z1(f).coeffs, [[6, 8], [0, 0]])
        assert np.allclose(shift_down_z2(f).coeffs, [[4, 0], [8, 0]])


class TestTensor:
    def test_constant(self):
        t = tensor(one1(2), one1(2))
        assert t.coeffs[0, 0] == 1 and np.count_nonzero(t.coeffs) == 1

    def test_z1_monomial(self):
        t = tensor(monomial1(1, 2), one1(2))
        assert t.coeffs[1, 0] == 1 and np.count_nonzero(t.coeffs) == 1

    def test_norm_multiplicative_for_inner_factors(self):
        t = tensor(blaschke_factor(0.5, 200), blaschke_factor(0.3, 200))
        assert abs(norm(t) - 1) < 1e-10

    @settings(max_examples=30)
    @given(coeff_lists(5), coeff_lists(5), coeff_lists(5), coeff_lists(5))
    def test_factorizes_inner_products(self, a, b, c, d):
        n = max(map(len, (a, b, c, d))) - 1
        f, fp = (truncate1(Series1(np.array(x)), n) for x in (a, c))
        g, gp = (truncate1(Series1(np.array(x)), n) for x in (b, d))
        lhs = inner_product(tensor(f, g), tensor(fp, gp))
        rhs = inner_product(f, fp) * inner_product(g, gp)
        assert lhs == pytest.approx(rhs, abs=1e-9)


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        Series1([1.0, np.nan])
    with pytest.raises(ValueError):
        Series2([[np.inf]])


def test_truncate_reports_cut_mass():
    f = Series1([1, 0, 2])
    assert truncate1(f, 4).cap == 4
    assert truncate1(f, 1).lost_mass == 2.0
    assert truncate1(zero1(3), 3) is not None
