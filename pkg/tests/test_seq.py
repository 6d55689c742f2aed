import math

import numpy as np
import pytest
from hypothesis import given, settings

import braidlog as bl
from conftest import coeff_seqs


class TestConstruction:
    def test_delta_is_unit_at_index(self):
        d = bl.delta(5)
        assert d.radius == 5
        assert d.at(5) == 1.0
        assert all(d.at(n) == 0.0 for n in range(-5, 5))

    def test_delta_negative_index(self):
        d = bl.delta(-1)
        assert d.radius == 1
        assert d.at(-1) == 1.0 and d.at(1) == 0.0

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            bl.CoeffSeq(1, np.array([0.0, np.nan, 0.0]))

    def test_rejects_inf(self):
        with pytest.raises(ValueError, match="finite"):
            bl.CoeffSeq(0, np.array([np.inf + 0j]))

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="coefficients"):
            bl.CoeffSeq(2, np.zeros(3))

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError, match="radius"):
            bl.CoeffSeq(-1, np.zeros(1))

    def test_rejects_2d_input(self):
        with pytest.raises(ValueError, match="one-dimensional"):
            bl.CoeffSeq(1, np.zeros((1, 3)))

    def test_buffer_is_frozen(self):
        d = bl.delta(0)
        with pytest.raises(ValueError):
            d.coeffs[0] = 2.0

    def test_outside_window_is_zero(self):
        assert bl.delta(0).at(100) == 0.0


class TestLinearOps:
    def test_add_cancels(self):
        s = bl.add(bl.delta(1), bl.scale(bl.delta(1), -1))
        assert bl.max_abs_diff(s, bl.zero()) == 0.0

    def test_scale(self):
        s = bl.scale(bl.delta(2), 3)
        assert s.at(2) == 3.0
        assert s.at(0) == 0.0 and s.at(-2) == 0.0

    def test_add_aligns_by_index_not_position(self):
        # different radii: delta(2) sits at array slot 4, delta(0) at slot 0
        s = bl.add(bl.delta(2), bl.delta(0))
        assert s.radius == 2
        assert s.at(0) == 1.0 and s.at(2) == 1.0 and s.at(1) == 0.0

    def test_truncated_reports_dropped_mass(self):
        a = bl.CoeffSeq(2, np.array([3.0, 0.0, 1.0, 0.0, 4.0]))
        t, lost = bl.truncated(a, 1)
        assert t.radius == 1
        assert t.at(0) == 1.0
        assert lost == pytest.approx(5.0, abs=1e-15)  # sqrt(3^2 + 4^2)

    def test_truncated_noop_returns_same_object(self):
        a = bl.delta(1)
        t, lost = bl.truncated(a, 3)
        assert t is a and lost == 0.0

    def test_with_radius_rejects_shrinking(self):
        with pytest.raises(ValueError, match="truncated"):
            bl.with_radius(bl.delta(3), 1)


class TestInnerAndNorms:
    def test_inner_unit(self):
        assert bl.inner(bl.delta(1), bl.delta(1)) == 1.0

    def test_inner_orthogonal(self):
        assert bl.inner(bl.delta(1), bl.delta(2)) == 0.0

    def test_inner_tau_partial_zeta(self):
        # independent oracle: direct summation of 2 * sum 1/k^2
        N = 1000
        t = bl.tau(N)
        expected = 2.0 * sum(1.0 / k**2 for k in range(1, N + 1))
        got = bl.inner(t, t)
        assert got.imag == 0.0
        assert got.real == pytest.approx(expected, rel=1e-13)
        # tail of pi^2/3 bounded by the integral comparison
        assert abs(got.real - math.pi**2 / 3) <= 2.0 / N

    def test_l2_norm_delta_and_zero(self):
        assert bl.l2_norm(bl.delta(7)) == 1.0
        assert bl.l2_norm(bl.zero(3)) == 0.0

    def test_l2_norm_tau_4096(self):
        # sqrt(pi^2/3 - tail) with tail <= 2/4096 pins the value to this band
        value = bl.l2_norm(bl.tau(4096))
        assert 1.8130 <= value <= 1.8138
        oracle = math.sqrt(2.0 * sum(1.0 / k**2 for k in range(1, 4097)))
        assert value == pytest.approx(oracle, rel=1e-12)

    def test_l1_norm_delta_and_sum(self):
        assert bl.l1_norm(bl.delta(4)) == 1.0
        assert bl.l1_norm(bl.add(bl.delta(0), bl.delta(1))) == 2.0

    def test_l1_norm_tau_is_twice_harmonic(self):
        N = 1000
        oracle = 2.0 * sum(1.0 / k for k in range(1, N + 1))
        assert bl.l1_norm(bl.tau(N)) == pytest.approx(oracle, rel=1e-13)


class TestProperties:
    @given(a=coeff_seqs(), b=coeff_seqs())
    @settings(max_examples=60)
    def test_inner_conjugate_symmetry(self, a, b):
        assert bl.inner(a, b) == bl.inner(b, a).conjugate()

    @given(a=coeff_seqs())
    @settings(max_examples=60)
    def test_l2_norm_squared_is_self_inner(self, a):
        lhs = bl.l2_norm(a) ** 2
        rhs = bl.inner(a, a).real
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    @given(a=coeff_seqs())
    @settings(max_examples=60)
    def test_l2_below_l1(self, a):
        assert bl.l2_norm(a) <= bl.l1_norm(a) + 1e-12 * (1.0 + bl.l1_norm(a))

    @given(a=coeff_seqs(), b=coeff_seqs())
    @settings(max_examples=60)
    def test_rewindowing_changes_nothing(self, a, b):
        # padding with exact zeros may still re-associate vectorized sums,
        # so reductions agree to rounding, elementwise results exactly
        wide = bl.with_radius(a, a.radius + 5)
        tol = 1e-14 * (1.0 + bl.l1_norm(a) * (1.0 + bl.l1_norm(b)))
        assert abs(bl.inner(wide, b) - bl.inner(a, b)) <= tol
        assert abs(bl.l2_norm(wide) - bl.l2_norm(a)) <= tol
        assert abs(bl.l1_norm(wide) - bl.l1_norm(a)) <= tol
        assert bl.max_abs_diff(bl.add(wide, b), bl.add(a, b)) == 0.0

    @given(a=coeff_seqs())
    @settings(max_examples=30)
    def test_allclose_is_tolerance_based(self, a):
        assert bl.allclose(a, a, 0.0)
        bumped = bl.add(a, bl.scale(bl.delta(0), 1e-6))
        assert bl.allclose(a, bumped, 1e-5)
        assert not bl.allclose(a, bumped, 1e-7)
