import numpy as np
import pytest

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.basis.mobius import BasisParams
from akns_rational.fourier.drivers import Driver
from akns_rational.scattering.data import check_symmetry
from akns_rational.scattering.forward import (
    ScatteringConfig,
    ScatteringMatrix,
    ScatteringProblem,
    mirrored,
    scattering_matrices,
    scattering_matrix,
    solve_phi,
)
from akns_rational.scattering.references import SechReference

KS = [-2.0, -0.5, 0.0, 0.8, 3.0]


@pytest.fixture(scope="module")
def sech():
    ref = SechReference(0.4, 0.0)
    return ref, ScatteringProblem.from_functions(ref.q, ref.r, ScatteringConfig(cols=200))


class TestConfig:
    def test_defaults(self):
        config = ScatteringConfig()
        assert config.rows == 261
        assert config.grid_size == 1024
        assert config.params == BasisParams(12.0)
        assert config.spectral_params == BasisParams(1.0)

    def test_problem_carries_both_bases(self):
        zero = lambda x: np.zeros(np.shape(x), dtype=complex)  # noqa: E731
        problem = ScatteringProblem.from_functions(zero, zero, ScatteringConfig(nu=2.0, x_nu=8.0, cols=20, extra_rows=10))
        assert problem.params.nu == 8.0
        assert problem.spectral_params.nu == 2.0

    def test_expansion_size_rounds_up(self):
        assert ScatteringConfig(cols=20, extra_rows=10, expansion_size=100).grid_size == 128

    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [
            ({"cols": 6}, "cols"),
            ({"nu": 0.0}, "nu must be positive"),
            ({"x_nu": -1.0}, "x_nu must be positive"),
            ({"extra_rows": -1}, "extra_rows"),
            ({"cols": 20, "extra_rows": 10, "expansion_size": 40}, "expansion_size"),
        ],
    )
    def test_validation(self, kwargs, match):
        with pytest.raises(ValueError, match=match):
            ScatteringConfig(**kwargs)


class TestProblem:
    def test_needs_phi(self):
        params = BasisParams()
        zero = RationalExpansion.zero(params)
        with pytest.raises(ValueError, match="no phi evaluator"):
            ScatteringProblem(zero, zero, Driver.rational(params), ScatteringConfig())

    def test_mirrored_expansion(self):
        params = BasisParams()
        e = interpolate(lambda x: np.exp(-(np.asarray(x, dtype=complex) - 1) ** 2), 128, params=params)
        m = mirrored(e)
        for x in (-1.5, 0.2, 2.0):
            assert complex(m.evaluate(x)) == pytest.approx(complex(e.evaluate(-x)), abs=1e-14)

    def test_mirrored_rejects_oscillation(self):
        e = RationalExpansion.from_coefficients(BasisParams(), {1: 1.0}, 1.0)
        with pytest.raises(ValueError, match="mirrored"):
            mirrored(e)

    def test_zero_problem_is_identity(self):
        zero = lambda x: np.zeros(np.shape(x), dtype=complex)  # noqa: E731
        problem = ScatteringProblem.from_functions(zero, zero, ScatteringConfig(cols=20, extra_rows=10))
        assert problem.is_zero()
        s = scattering_matrix(problem, 1.0)
        assert (s.a, s.b, s.A, s.B) == (1, 0, 1, 0)

    def test_column_validated(self, sech):
        with pytest.raises(ValueError, match="column must be 1 or 2"):
            solve_phi(sech[1], 0.5, 3)


class TestScatteringMatrix:
    def test_against_closed_form(self, sech):
        ref, problem = sech
        for s in scattering_matrices(problem, KS):
            assert abs(complex(s.a) - complex(ref.a(s.k))) < 1e-6, s.k
            assert abs(complex(s.b) - complex(ref.b(s.k))) < 1e-6, s.k
            assert abs(s.det - 1) < 1e-6
            assert not s.low_confidence

    def test_symmetry(self, sech):
        _, problem = sech
        assert check_symmetry(scattering_matrices(problem, KS), -1) < 1e-6

    def test_order_kept(self, sech):
        _, problem = sech
        assert [s.k for s in scattering_matrices(problem, KS)] == KS

    def test_identity(self):
        s = ScatteringMatrix.identity(0.5, BasisParams().precision)
        assert s.det == 1
        assert not s.low_confidence

    def test_fallback_is_low_confidence(self):
        s = ScatteringMatrix(0.5, 1.0, 0.0, 1.0, 0.0, 0.0, fallback=True)
        assert s.low_confidence

    @pytest.mark.parametrize("k", [-30.0, 40.0])
    def test_large_k_underflows_b(self, sech, k):
        ref, problem = sech
        s = scattering_matrix(problem, k)
        assert abs(complex(s.b)) < 1e-12
        assert abs(complex(s.B)) < 1e-12
        assert abs(complex(s.a) - complex(ref.a(k))) < 1e-5
