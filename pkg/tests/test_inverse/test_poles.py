import math

import numpy as np
import pytest

from akns_rational.basis.mobius import BasisParams
from akns_rational.inverse.poles import solve_pole_system, soliton_reference
from akns_rational.inverse.solve import InverseConfig, inverse_transform, solve_rhp
from akns_rational.numeric_core.scalar import DOUBLE
from akns_rational.scattering.data import ScatteringData
from akns_rational.scattering.spectrum import DiscreteDatum

Z_PLUS = 0.3 + 0.8j
Z_MINUS = Z_PLUS.conjugate()
B_PLUS = 1.5


def one_soliton(params=None):
    """Reflectionless data of ``q = 1.6 sech(1.6 x - log 1.5) e^{-0.6 i x + i phase}``, ``r = -conj(q)``.

    ``a(k) = (k - z+)/(k - z-)`` so ``a'(z+) = 1/(z+ - z-)`` and ``A'(z-) = 1/(z- - z+)``.
    """
    params = params or BasisParams()
    plus = DiscreteDatum.from_b(Z_PLUS, B_PLUS, 1 / (Z_PLUS - Z_MINUS))
    minus = DiscreteDatum.from_b(Z_MINUS, -B_PLUS, 1 / (Z_MINUS - Z_PLUS))
    data = ScatteringData.zero(params)
    return ScatteringData(data.rho1, data.rho2, data.gamma1, data.gamma2, (plus,), (minus,))


class TestPoleSystem:
    def test_matches_closed_form(self):
        data = one_soliton()
        cp, cm = data.plus[0].c, data.minus[0].c
        for x in (0.0, 0.4, 2.0):
            system = solve_pole_system([Z_PLUS], [cp], [Z_MINUS], [cm], x, DOUBLE)
            residues = system.residue_sum()
            q, r = soliton_reference(Z_PLUS, cp, Z_MINUS, cm, x)
            assert abs(2j * residues[0][1] - q) < 1e-13
            assert abs(-2j * residues[1][0] - r) < 1e-13

    def test_soliton_envelope(self):
        data = one_soliton()
        cp, cm = data.plus[0].c, data.minus[0].c
        for x in (-1.0, 0.0, 0.25, 3.0):
            q, r = soliton_reference(Z_PLUS, cp, Z_MINUS, cm, x)
            assert abs(q) == pytest.approx(1.6 / math.cosh(1.6 * x - math.log(1.5)), rel=1e-12)
            assert r == pytest.approx(-np.conj(q), abs=1e-13)

    def test_determinant_is_one(self):
        data = one_soliton()
        system = solve_pole_system([Z_PLUS], [data.plus[0].c], [Z_MINUS], [data.minus[0].c], 0.7, DOUBLE)
        for k in (0.0, 1.5, -2.0 + 0.3j):
            assert abs(system.det(k) - 1) < 1e-12

    def test_trivial(self):
        system = solve_pole_system([], [], [], [], 1.0, DOUBLE)
        assert system.is_trivial
        assert system.residue_sum() == ((0, 0), (0, 0))

    def test_lengths_checked(self):
        with pytest.raises(ValueError, match="exactly one norming constant"):
            solve_pole_system([1j], [], [], [], 0.0, DOUBLE)

    def test_inverse_derivative(self):
        data = one_soliton()
        system = solve_pole_system([Z_PLUS], [data.plus[0].c], [Z_MINUS], [data.minus[0].c], 0.3, DOUBLE)
        k, h = 0.4, 1e-6
        numeric = (np.array(system.inverse(k + h)) - np.array(system.inverse(k - h))) / (2 * h)
        assert np.allclose(np.array(system.inverse_derivative(k)), numeric, atol=1e-7)


class TestReflectionless:
    def test_inverse_transform(self):
        data = one_soliton()
        cp, cm = data.plus[0].c, data.minus[0].c
        xs = [-2.0, -0.5, 0.0, 0.5, 2.0]
        for sample in inverse_transform(data, xs):
            assert sample.failure is None
            q, r = soliton_reference(Z_PLUS, cp, Z_MINUS, cm, sample.x)
            assert abs(sample.q - q) < 1e-8, sample.x
            assert abs(sample.r - r) < 1e-8, sample.x

    def test_no_iterations_without_reflection(self):
        solution = solve_rhp(one_soliton(), 1.0, InverseConfig())
        assert solution.converged
        assert solution.iterations == 0
