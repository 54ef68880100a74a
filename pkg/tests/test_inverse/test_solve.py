import numpy as np
import pytest

from akns_rational.basis.bundle import BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import SideMismatchError
from akns_rational.inverse.jumps import jump_factors
from akns_rational.inverse.solve import (
    InnerProduct,
    InverseConfig,
    Side,
    assemble_sie,
    inverse_transform,
    l2_inner,
    recovered_values,
    right_data,
    solve_rhp,
)
from akns_rational.scattering.data import ScatteringData


def small_data(params=None):
    params = params or BasisParams()
    rho1 = RationalExpansion.from_coefficients(params, {1: 0.05, -1: 0.05, 2: -0.01j})
    rho2 = RationalExpansion.from_coefficients(params, {1: -0.05, -1: -0.05, -2: 0.01j})
    return ScatteringData(rho1, rho2, rho1, rho2)


class TestInverseConfig:
    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [
            ({"tol": 0.0}, "tol"),
            ({"maxiter": 0}, "maxiter"),
            ({"n_work": 0}, "n_work"),
            ({"prune": -1.0}, "prune"),
        ],
    )
    def test_validation(self, kwargs, match):
        with pytest.raises(ValueError, match=match):
            InverseConfig(**kwargs)

    def test_defaults(self):
        config = InverseConfig()
        assert config.tol == 1e-12
        assert config.maxiter == 200
        assert config.inner is InnerProduct.COEFFICIENT

    def test_sizes(self):
        data = small_data()
        config = InverseConfig()
        assert config.working_size(data) == 16
        assert config.dressing_grid(data) == 64
        assert InverseConfig(n_work=40, grid_size=100).working_size(data) == 40
        assert InverseConfig(n_work=40, grid_size=100).dressing_grid(data) == 128


class TestJumpFactors:
    def test_jump_matrix(self):
        params = BasisParams()
        rho1 = RationalExpansion.from_coefficients(params, {1: 0.3, -2: 0.1j})
        rho2 = RationalExpansion.from_coefficients(params, {-1: -0.2, 3: 0.05})
        x, k = 0.7, 0.3
        factors = jump_factors(rho1, rho2, x)
        r1, r2 = complex(rho1.evaluate(k)), complex(rho2.evaluate(k))
        e = np.exp(2j * k * x)
        expected = np.array([[1 - r1 * r2, -r2 / e], [r1 * e, 1]])
        assert np.allclose(factors.jump(k), expected, atol=1e-14)


class TestSides:
    def test_left_rejects_negative_x(self):
        with pytest.raises(SideMismatchError, match="left problem requires x >= 0"):
            assemble_sie(small_data(), -1.0, Side.LEFT)

    def test_right_rejects_positive_x(self):
        with pytest.raises(SideMismatchError) as info:
            assemble_sie(small_data(), 1.0, Side.RIGHT)
        assert info.value.x == 1.0

    def test_default_side(self):
        assert assemble_sie(small_data(), 0.5).side is Side.LEFT
        assert assemble_sie(small_data(), -0.5).side is Side.RIGHT

    def test_right_data_swaps(self):
        data = small_data()
        view = right_data(data)
        assert view.rho1 is data.gamma1
        assert view.gamma1 is data.rho1


class TestSolve:
    def test_empty_data(self):
        samples = inverse_transform(ScatteringData.zero(BasisParams()), [-1.0, 0.0, 2.0])
        q, r = recovered_values(samples)
        assert not np.any(q)
        assert not np.any(r)
        assert all(s.iterations == 0 for s in samples)

    def test_converges(self):
        solution = solve_rhp(small_data(), 0.5, InverseConfig(tol=1e-12))
        assert solution.converged
        assert solution.residual < 1e-11
        assert len(solution.history) == 2
        assert solution.alphas[0] or solution.alphas[1]

    def test_symmetric_data_gives_symmetric_potential(self):
        """``rho2 = -conj(rho1)`` on the real line forces ``r = -conj(q)``."""
        params = BasisParams()
        rho1 = RationalExpansion.from_coefficients(params, {1: 0.1, -1: 0.05j})
        rho2 = RationalExpansion.from_coefficients(params, {-1: -0.1, 1: 0.05j})
        data = ScatteringData(rho1, rho2, rho1, rho2)
        solution = solve_rhp(data, 0.3)
        assert abs(solution.r + np.conj(complex(solution.q))) < 1e-10

    def test_l2_of_first_function(self):
        """``int |R_1|^2 = 4 pi``; the node at infinity drops one of the ``n`` trapezoid panels."""
        params = BasisParams()
        b = OscillatoryBundle.of(params, [RationalExpansion.from_coefficients(params, {1: 1.0})])
        row = BundleRow(b, OscillatoryBundle.zero(params))
        assert complex(l2_inner(row, row, 4096)) == pytest.approx(4 * np.pi * 4095 / 4096, rel=1e-9)
