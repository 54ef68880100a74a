"""Residue part of the Cauchy operators on oscillatory basis functions.

For ``sigma = sign(j)`` and ``alpha j < 0`` the boundary value of the Cauchy
integral of ``R_{j,alpha}`` differs from ``R_{j,alpha}`` (or from zero) by
``r_{j,alpha}(z) = Res_{k = -sigma i nu} R_{j,alpha}(k)/(k - omega)``, a
polynomial in ``z = -2 i sigma nu/(omega + sigma i nu)`` of degree ``|j|``.
With ``X = 2|alpha| nu``::

    r_{j,alpha}(z) = -exp(-|alpha| nu) rho_j(z)
    rho_j = (1 + z) rho_{j-1} + z (L_{j-1}^(1)(X) - L_{j-2}^(1)(X)),  rho_0 = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from akns_rational.basis.mobius import BasisParams
from akns_rational.numeric_core.special import laguerre_gl1


def residue_variable(sigma: int, params: BasisParams, omegas: np.ndarray) -> np.ndarray:
    """``z = -2 i sigma nu/(omega + sigma i nu)``, zero at the infinity node."""
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx
        pole = ctx.mpc(0, sigma * params.scale)
        num = ctx.mpc(0, -2 * sigma * params.scale)
        return np.array([ctx.mpc(0) if ctx.isinf(w) else num / (w + pole) for w in omegas], dtype=object)
    w = np.asarray(omegas, dtype=np.complex128)
    out = np.zeros(w.shape, dtype=np.complex128)
    finite = ~np.isinf(w)
    out[finite] = -2j * sigma * params.nu / (w[finite] + 1j * sigma * params.nu)
    return out


@dataclass(frozen=True, slots=True, eq=False)
class MsigmaProduct:
    """Matrix-free ``c -> sum_{j=1}^m c_j r_{sigma j, alpha}(z(omega))`` on fixed targets."""

    sigma: int
    alpha: float
    params: BasisParams
    omegas: np.ndarray

    def __post_init__(self) -> None:
        if self.sigma not in (1, -1):
            raise ValueError(f"sigma must be +1 or -1, got {self.sigma}")

    def __call__(self, coeffs: np.ndarray) -> np.ndarray:
        """``coeffs[j-1]`` multiplies ``r_{sigma j, alpha}``."""
        precision = self.params.precision
        m = len(coeffs)
        z = residue_variable(self.sigma, self.params, self.omegas)
        acc = precision.zeros(z.shape)
        if m == 0:
            return acc
        x = 2 * abs(self.alpha) * self.params.scale
        lag = laguerre_gl1(x, m)
        rho = precision.zeros(z.shape)
        one_plus_z = 1 + z
        for j in range(1, m + 1):
            step = lag[j - 1] - lag[j - 2] if j >= 2 else lag[0]
            rho = one_plus_z * rho + z * step
            acc = acc + coeffs[j - 1] * rho
        damping = _damping(abs(self.alpha) * self.params.scale, self.params)
        return -damping * acc


def _damping(value: Any, params: BasisParams) -> Any:
    precision = params.precision
    if precision.extended:
        return precision.ctx.exp(-value)
    return float(np.exp(-value))
