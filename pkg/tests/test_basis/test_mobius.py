import numpy as np
import pytest

from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams, eval_R, mobius, mobius_inv
from akns_rational.numeric_core.scalar import Precision


class TestBasisParams:
    def test_defaults(self):
        params = BasisParams()
        assert params.nu == 1.0
        assert not params.precision.extended

    @pytest.mark.parametrize("nu", [0, -1.0, float("inf"), float("nan"), True, "1"])
    def test_invalid_nu(self, nu):
        with pytest.raises(ValueError, match="nu must be a positive finite real"):
            BasisParams(nu=nu)

    def test_int_nu_normalised(self):
        assert BasisParams(nu=2) == BasisParams(nu=2.0)


class TestMobius:
    def test_i_maps_to_zero(self):
        assert abs(mobius(BasisParams(), 1j)) < 1e-16

    @pytest.mark.parametrize("nu", [0.5, 1.0, 12.0])
    def test_zero_maps_to_minus_one(self, nu):
        assert mobius(BasisParams(nu), 0.0) == pytest.approx(-1.0)

    def test_infinity(self):
        params = BasisParams(2.0)
        assert mobius(params, np.inf) == 1
        assert np.isinf(mobius_inv(params, 1.0))

    def test_cotangent_identity(self):
        """The preimage of exp(i theta) is -nu cot(theta/2)."""
        params = BasisParams(1.7)
        thetas = np.linspace(0.1, 2 * np.pi - 0.1, 20)
        omegas = mobius_inv(params, np.exp(1j * thetas))
        assert np.max(np.abs(omegas - (-1.7 / np.tan(thetas / 2)))) < 1e-12

    def test_real_line_to_circle(self):
        x = np.linspace(-50, 50, 101)
        assert np.max(np.abs(np.abs(mobius(BasisParams(3.0), x)) - 1)) < 1e-15

    def test_inverse_round_trip(self):
        params = BasisParams(0.8)
        z = np.array([0.3 + 0.2j, -0.5j, 2.0 + 1j])
        assert np.max(np.abs(mobius(params, mobius_inv(params, z)) - z)) < 1e-14

    def test_extended(self):
        params = BasisParams(1.0, Precision(40))
        ctx = params.precision.ctx
        assert abs(mobius(params, ctx.mpc(0, 1))) < 1e-39
        assert abs(mobius(params, ctx.mpc(0)) + 1) < 1e-39


class TestEvalR:
    def test_r1_at_zero(self):
        for nu in (0.5, 1.0, 4.0):
            assert eval_R(1, 0.0, BasisParams(nu), 0.0) == pytest.approx(-2.0)

    def test_lorentzian_identity(self):
        """-R_1 - R_-1 is 4 nu^2 / (nu^2 + x^2)."""
        params = BasisParams(1.0)
        assert -eval_R(1, 0.0, params, 1.0) - eval_R(-1, 0.0, params, 1.0) == pytest.approx(2.0)
        params = BasisParams(2.5)
        x = np.linspace(-4, 4, 9)
        value = -eval_R(1, 0.0, params, x) - eval_R(-1, 0.0, params, x)
        assert np.max(np.abs(value - 4 * 2.5**2 / (2.5**2 + x**2))) < 1e-14

    def test_r2_off_axis(self):
        assert eval_R(2, 0.0, BasisParams(), 3j) == pytest.approx(-0.75)

    def test_zero_at_infinity(self):
        assert eval_R(3, 1.5, BasisParams(), np.inf) == 0

    def test_bounded_on_real_line(self):
        x = np.linspace(-30, 30, 301)
        for j in (-5, -1, 1, 7):
            for alpha in (0.0, -2.0, 3.0):
                assert np.max(np.abs(eval_R(j, alpha, BasisParams(0.7), x))) <= 2 + 1e-14

    def test_index_zero_rejected(self):
        with pytest.raises(ValueError, match="identically zero"):
            eval_R(0, 0.0, BasisParams(), 1.0)

    def test_extended_matches_double(self):
        params = BasisParams(1.3, Precision(30))
        value = eval_R(-3, 0.5, params, params.precision.ctx.mpf("0.25"))
        assert complex(value) == pytest.approx(eval_R(-3, 0.5, BasisParams(1.3), 0.25), abs=1e-14)


class TestGrid:
    def test_sizes(self):
        grid = InterpolationGrid.from_size(BasisParams(), 16)
        assert (grid.n_plus, grid.n_minus) == (8, 7)
        assert grid.n_plus + grid.n_minus + 1 == grid.n

    def test_nodes_map_to_roots_of_unity(self):
        params = BasisParams(2.0)
        grid = InterpolationGrid.from_size(params, 32)
        assert np.isinf(grid.omegas[0])
        assert np.max(np.abs(mobius(params, grid.omegas[1:]) - np.exp(1j * grid.thetas[1:]))) < 1e-13

    def test_cached(self):
        assert InterpolationGrid.from_size(BasisParams(), 8) is InterpolationGrid.from_size(BasisParams(), 8)

    def test_too_small(self):
        with pytest.raises(ValueError, match="at least 2 nodes"):
            InterpolationGrid.from_size(BasisParams(), 1)

    def test_oscillation(self):
        grid = InterpolationGrid.from_size(BasisParams(), 8)
        factors = grid.oscillation(2.0)
        assert factors[0] == 0
        assert np.allclose(factors[1:], np.exp(2j * grid.omegas[1:]))
