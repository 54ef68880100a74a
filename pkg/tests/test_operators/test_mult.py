import numpy as np
import pytest

from akns_rational.basis.bundle import BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import PrecisionMismatchError
from akns_rational.operators.mult import bundle_product, mult_operator, multiply, row_times_matrix

POINTS = np.array([-2.0, -0.3, 0.0, 1.1, 4.0])


def _e(coeffs, alpha=0.0, params=None):
    return RationalExpansion.from_coefficients(params or BasisParams(), coeffs, alpha)


class TestMultiply:
    def test_product_rule(self):
        """``R_1 R_1 = R_2 - 2 R_1``."""
        p = multiply(_e({1: 1.0}), _e({1: 1.0}))
        assert p.coefficient(2) == pytest.approx(1.0, abs=1e-14)
        assert p.coefficient(1) == pytest.approx(-2.0, abs=1e-14)

    def test_opposite_indices(self):
        """``R_1 R_-1 = -R_1 - R_-1`` because ``R_0 = 0``."""
        p = multiply(_e({1: 1.0}), _e({-1: 1.0}))
        assert p.coefficient(1) == pytest.approx(-1.0, abs=1e-14)
        assert p.coefficient(-1) == pytest.approx(-1.0, abs=1e-14)

    def test_pointwise(self):
        a = _e({1: 0.5, -2: 1j, 3: -0.25}, alpha=0.5)
        b = _e({2: 1.0, -1: 0.3}, alpha=0.25)
        p = multiply(a, b)
        assert p.alpha == 0.75
        assert np.max(np.abs(p.evaluate(POINTS) - a.evaluate(POINTS) * b.evaluate(POINTS))) < 1e-13

    def test_zero_factor(self):
        p = multiply(_e({1: 1.0}), RationalExpansion.zero(BasisParams(), 0.5))
        assert p.norm() == 0
        assert p.alpha == 0.5

    def test_params_checked(self):
        with pytest.raises(PrecisionMismatchError):
            multiply(_e({1: 1.0}), _e({1: 1.0}, params=BasisParams(2.0)))


class TestMultOperator:
    def test_matches_multiply(self):
        c = _e({1: 1.0, -2: 0.5})
        g = _e({-1: 1.0, 2: -0.5j})
        m = 14
        lhs = mult_operator(c, m) @ g.operator_vector(m)
        rhs = multiply(c, g).operator_vector(m)
        assert np.allclose(lhs, rhs, atol=1e-14)

    def test_single_column(self):
        """Column of ``R_-1`` under ``R_1 + R_-2/2``: ``-R_1 - 3/2 R_-1 - R_-2/2 + R_-3/2``."""
        column = mult_operator(_e({1: 1.0, -2: 0.5}), 8)[:, 1]
        assert np.allclose(column, [-1.0, -1.5, 0, -0.5, 0, 0.5, 0, 0])

    def test_zero(self):
        assert not np.any(mult_operator(RationalExpansion.zero(BasisParams()), 6))


class TestBundleProducts:
    def test_alphas_add(self):
        params = BasisParams()
        u = OscillatoryBundle.of(params, [_e({1: 1.0}), _e({-1: 2.0}, alpha=1.0)])
        v = OscillatoryBundle.of(params, [_e({2: 1.0}, alpha=-1.0)])
        p = bundle_product(u, v)
        assert p.alphas == (-1.0, 0.0)
        assert np.allclose(p.evaluate(POINTS), u.evaluate(POINTS) * v.evaluate(POINTS), atol=1e-13)

    def test_row_times_corner(self):
        params = BasisParams()
        zero = OscillatoryBundle.zero(params)
        u1 = OscillatoryBundle.of(params, [_e({1: 1.0, -1: 0.5})])
        u2 = OscillatoryBundle.of(params, [_e({2: 1.0})])
        m12 = OscillatoryBundle.of(params, [_e({-1: 1.0}, alpha=2.0)])
        out = row_times_matrix(BundleRow(u1, u2), ((zero, m12), (zero, zero)))
        assert out.first.is_zero()
        assert np.allclose(out.second.evaluate(POINTS), u1.evaluate(POINTS) * m12.evaluate(POINTS), atol=1e-13)
