"""Inverse transform of computed sech data and recovery of the KdV ``sech^2`` potential."""

import os

import mpmath
import numpy as np
import pytest

from akns_rational.basis.mobius import BasisParams
from akns_rational.inverse.kdv import kdv_data, kdv_potential, kdv_recover
from akns_rational.inverse.solve import InverseConfig, inverse_transform, recovered_values, solve_rhp
from akns_rational.numeric_core.scalar import Precision
from akns_rational.scattering.data import scatter_left
from akns_rational.scattering.forward import ScatteringProblem
from akns_rational.scattering.references import KdvReference, SechReference
from akns_rational.scattering.spectrum import SpectrumConfig

pytestmark = pytest.mark.slow

XS = [float(x) for x in np.linspace(-5.0, 5.0, 41)]


def _data(ref):
    return scatter_left(ScatteringProblem.from_functions(ref.q, ref.r), 256, SpectrumConfig())


@pytest.fixture(scope="module")
def soliton():
    ref = SechReference(1.65, 0.1)
    return ref, _data(ref)


class TestGmres:
    def test_iteration_counts(self, soliton):
        _, data = soliton
        config = InverseConfig(tol=1e-12, maxiter=60)
        counts = {}
        for x in (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0):
            solution = solve_rhp(data, x, config)
            assert solution.converged, x
            assert solution.residual < 2e-12, x
            counts[x] = solution.iterations
        assert max(counts[5.0], counts[-5.0]) <= counts[0.0] + 2


class TestRoundTrip:
    def test_solitonless(self):
        ref = SechReference(1.55, 2.0)
        data = _data(ref)
        assert not data.is_reflectionless() and not data.plus
        q, _ = recovered_values(inverse_transform(data, XS))
        assert np.max(np.abs(q - ref.q(np.array(XS)))) <= 1e-6

    def test_with_solitons(self, soliton):
        ref, data = soliton
        samples = inverse_transform(data, XS)
        assert all(s.failure is None for s in samples)
        q, r = recovered_values(samples)
        assert np.max(np.abs(q - ref.q(np.array(XS)))) <= 1e-5
        assert np.max(np.abs(r - ref.r(np.array(XS)))) <= 1e-5


class TestKdv:
    def test_double_precision(self):
        xs = [float(x) for x in np.linspace(0.0, 10.0, 41)]
        data = kdv_data(-1.0, 512, BasisParams())
        samples = kdv_recover(data, xs, InverseConfig(tol=1e-12))
        got = np.array([complex(s.r) for s in samples])
        assert np.max(np.abs(got - kdv_potential(-1.0, xs))) <= 1e-10

    @pytest.mark.skipif(not os.environ.get("AKNS_EXTENDED"), reason="set AKNS_EXTENDED=1 for the 70-digit run")
    def test_extended_precision(self):
        digits = 70
        data = kdv_data(-1.0, 2048, BasisParams(1.0, Precision(digits)))
        reference = KdvReference(-1.0, digits)
        for sample in kdv_recover(data, [0.5, 1.0, 3.0], InverseConfig(tol=1e-70)):
            with mpmath.workdps(digits):
                assert abs(mpmath.mpc(sample.r) - mpmath.mpf(reference.r_exact(sample.x))) <= mpmath.mpf("1e-45")
