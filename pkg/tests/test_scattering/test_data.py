import numpy as np
import pytest

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import NormingConstantError
from akns_rational.scattering.data import ScatteringData, check_symmetry, scatter_left, scatter_right
from akns_rational.scattering.forward import ScatteringConfig, ScatteringMatrix, ScatteringProblem
from akns_rational.scattering.recovery import recover_aA_from_reflection
from akns_rational.scattering.references import SechReference, sample
from akns_rational.scattering.spectrum import AnalyticPart, DiscreteDatum, SpectrumConfig, newton_refine


def _zero(x):
    return np.zeros(np.shape(x), dtype=complex)


class TestScatteringData:
    def test_zero(self):
        data = ScatteringData.zero(BasisParams(2.0))
        assert data.is_empty()
        assert data.is_reflectionless()
        assert data.nu == 2.0

    def test_zero_potential(self):
        problem = ScatteringProblem.from_functions(_zero, _zero, ScatteringConfig(cols=20, extra_rows=10))
        data = scatter_left(problem, 64, SpectrumConfig())
        assert data.is_empty()
        assert data.meta["grid_size"] == 64
        assert scatter_right(problem, 64).is_empty()

    def test_pole_sides_validated(self):
        params = BasisParams()
        empty = RationalExpansion.zero(params)
        below = DiscreteDatum.from_b(-0.5j, 1.0, 2.0)
        with pytest.raises(ValueError, match="Im z > 0"):
            ScatteringData(empty, empty, empty, empty, plus=(below,))
        with pytest.raises(ValueError, match="Im z < 0"):
            ScatteringData(empty, empty, empty, empty, minus=(DiscreteDatum.from_b(0.5j, 1.0, 2.0),))

    def test_mirrored(self):
        params = BasisParams()
        e = [RationalExpansion.from_coefficients(params, {j: 1.0}) for j in (1, 2, -1, -2)]
        datum = DiscreteDatum.from_b(0.5j, 2.0, 4.0)
        data = ScatteringData(*e, plus=(datum,), meta={"potential": "zero"})
        flipped = data.mirrored()
        assert flipped.rho1 is data.gamma1
        assert flipped.gamma2 is data.rho2
        assert flipped.plus[0].b == -0.5
        assert flipped.plus[0].c == -0.5 / 4.0
        assert flipped.meta == data.meta
        twice = flipped.mirrored()
        assert twice.plus[0].b == pytest.approx(2.0)


class TestDiscreteDatum:
    def test_constants(self):
        d = DiscreteDatum.from_b(1j, 2.0, 0.5j)
        assert d.c == 2.0 / 0.5j
        assert d.d == -1 / (2.0 * 0.5j)

    def test_real_axis_rejected(self):
        with pytest.raises(ValueError, match="off the real axis"):
            DiscreteDatum(1.0, 1.0, 1.0, 1.0, 1.0)

    def test_vanishing_derivative(self):
        with pytest.raises(NormingConstantError, match="vanishing"):
            DiscreteDatum.from_b(1j, 1.0, 0.0)


class TestSpectrumConfig:
    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [({"size": 16}, "size must be >= 32"), ({"imag_cutoff": 0.0}, "imag_cutoff"), ({"newton_steps": -1}, "newton_steps")],
    )
    def test_validation(self, kwargs, match):
        with pytest.raises(ValueError, match=match):
            SpectrumConfig(**kwargs)


class TestNewton:
    def test_finds_zero(self):
        """``1 + R_1(z) = 1 - 2i/(z + i)`` vanishes at ``z = i``."""
        a = AnalyticPart(RationalExpansion.from_coefficients(BasisParams(), {1: 1.0}), upper=True)
        result = newton_refine(a, 0.1 + 0.7j)
        assert result.refined
        assert abs(complex(result.z) - 1j) < 1e-10
        assert result.initial == 0.1 + 0.7j

    def test_split_defect(self):
        e = RationalExpansion.from_coefficients(BasisParams(), {1: 1.0, -2: 1e-3})
        assert AnalyticPart(e, upper=True).split_defect() == pytest.approx(1e-3)
        assert AnalyticPart(e, upper=False).split_defect() == pytest.approx(1.0)


class TestSymmetry:
    def test_reference_matrices(self):
        ref = SechReference(1.0, 0.5)
        matrices = [ScatteringMatrix(k, complex(ref.a(k)), complex(ref.b(k)), complex(ref.big_a(k)), complex(ref.big_b(k))) for k in (-1.0, 0.5, 2.0)]
        assert check_symmetry(matrices, -1) < 1e-14
        assert check_symmetry(matrices, 1) > 1e-3

    def test_lam_validated(self):
        with pytest.raises(ValueError, match="lam"):
            check_symmetry([], 0)


class TestRecovery:
    def test_a_from_reflection(self):
        ref = SechReference(0.4, 0.0)
        params = BasisParams()
        rho1 = interpolate(lambda w: sample(ref.rho1, w), 256, params=params)
        rho2 = interpolate(lambda w: sample(ref.rho2, w), 256, params=params)
        recovered = recover_aA_from_reflection(rho1, rho2)
        for z in (0.5 + 0.5j, -1.0 + 2.0j):
            assert abs(recovered.a(z) - complex(ref.a(z))) < 1e-8
            assert abs(recovered(z.conjugate()) - complex(ref.big_a(z.conjugate()))) < 1e-8
