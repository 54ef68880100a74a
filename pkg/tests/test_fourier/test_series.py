import math

import numpy as np
import pytest

from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.fourier.series import ft_by_expansion, ft_series, ft_series_grid


def rational_q(x):
    x = np.asarray(x, dtype=complex)
    return 1 / (x - 1 - 1j) - 1 / (3 * x + 1j)


def rational_hat(k):
    if k < 0:
        return 2j * math.pi * np.exp(-1j * k + k)
    return 2j * math.pi * np.exp(-k / 3) / 3


class TestSeries:
    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("x", [-2.0, 0.0, 0.3, 4.0])
    def test_inverse_of_lorentzian(self, nu, x):
        """``4 nu^2/(nu^2 + k^2)`` is the transform of ``2 nu e^{-nu |x|}``."""
        e = RationalExpansion.from_coefficients(BasisParams(nu), {1: -1.0, -1: -1.0})
        assert complex(ft_series(e, x)) == pytest.approx(2 * nu * math.exp(-nu * abs(x)), abs=1e-13)

    def test_grid(self):
        e = RationalExpansion.from_coefficients(BasisParams(), {2: 1.0, -1: 0.5j})
        xs = [-1.0, 0.5, 2.0]
        assert ft_series_grid(e, xs) == [ft_series(e, x) for x in xs]

    def test_rejects_oscillation(self):
        e = RationalExpansion.from_coefficients(BasisParams(), {1: 1.0}, 1.0)
        with pytest.raises(ValueError, match="alpha = 0"):
            ft_series(e, 0.0)


class TestByExpansion:
    def test_rational_potential(self):
        ks = [-3.0, -0.5, 0.5, 2.0, 6.0]
        values = ft_by_expansion(rational_q, ks, 256)
        for k, v in zip(ks, values):
            assert abs(complex(v) - rational_hat(k)) < 1e-8, k

    def test_gaussian(self):
        ks = [-4.0, -1.0, 0.0, 2.0]
        values = ft_by_expansion(lambda x: np.exp(-np.asarray(x, dtype=complex) ** 2), ks, 1024)
        for k, v in zip(ks, values):
            assert abs(complex(v) - math.sqrt(math.pi) * math.exp(-k * k / 4)) < 1e-7, k
