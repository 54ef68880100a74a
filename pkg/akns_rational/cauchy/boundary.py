"""Boundary values ``C+`` and ``C-`` of the Cauchy integral on bundles.

For ``alpha j >= 0`` the basis function is already a boundary value of a
function analytic in the half plane its oscillation decays in, so ``C+``
either keeps it (``j > 0``) or kills it (``j < 0``). The remaining terms pick up
a residue at ``-+i nu``, a polynomial in ``R_{+-1,0}`` that is re-expanded on
an interpolation grid with oscillation 0.
"""

from __future__ import annotations

import logging
from typing import Any

import numpy as np

from akns_rational.basis.bundle import OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion, from_grid_values
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams, mobius
from akns_rational.cauchy.msigma import MsigmaProduct
from akns_rational.numeric_core.fft import next_power_of_two

LOGGER = logging.getLogger(__name__)

MIN_RESIDUE_GRID = 64


def residue_expansion(coeffs: np.ndarray, sigma: int, alpha: float, params: BasisParams) -> RationalExpansion:
    """``sum_j c_j r_{sigma j, alpha}`` as an ``alpha = 0`` expansion.

    The result has at most ``len(coeffs)`` coefficients, all of sign ``sigma``,
    and is exact up to rounding.
    """
    m = len(coeffs)
    if m == 0:
        return RationalExpansion.zero(params)
    n = max(next_power_of_two(2 * m + 1), MIN_RESIDUE_GRID)
    grid = InterpolationGrid.from_size(params, n)
    values = MsigmaProduct(sigma, alpha, params, grid.omegas)(coeffs)
    keep = (m, 0) if sigma == 1 else (0, m)
    return from_grid_values(values, params, 0.0, keep=keep)


def _plus_block(e: RationalExpansion) -> list[RationalExpansion]:
    params = e.params
    if e.alpha == 0:
        return [RationalExpansion(params, 0.0, e.pos, params.precision.zeros(0))]
    if e.alpha > 0:
        out = [e]
        if e.n_minus:
            out.append(residue_expansion(e.neg, -1, e.alpha, params))
        return out
    if e.n_plus:
        return [-residue_expansion(e.pos, 1, e.alpha, params)]
    return []


def cauchy_plus(b: OscillatoryBundle) -> OscillatoryBundle:
    """Boundary value from above of the Cauchy integral of ``b``.

    The output has the blocks of ``b`` with positive ``alpha`` (unchanged) plus
    at most one new ``alpha = 0`` block.
    """
    out = b.map_blocks(_plus_block)
    LOGGER.debug("cauchy_plus: %d blocks in, %d out", len(b.blocks), len(out.blocks))
    return out


def cauchy_minus(b: OscillatoryBundle) -> OscillatoryBundle:
    """``C- = C+ - I``."""
    return cauchy_plus(b) - b


def _poly_with_derivative(coeffs: np.ndarray, t: Any) -> tuple[Any, Any]:
    """``p(t) = sum_{j>=1} coeffs[j-1] t^j`` and ``p'(t)``, by Horner on ``p(t)/t``."""
    q = t * 0
    dq = t * 0
    for c in coeffs[::-1]:
        dq = dq * t + q
        q = q * t + c
    return q * t, q + t * dq


def _offaxis(e: RationalExpansion, z: Any) -> tuple[Any, Any]:
    if e.alpha != 0:
        raise ValueError(f"off-axis Cauchy integral needs alpha = 0, got {e.alpha}")
    params = e.params
    precision = params.precision
    z = precision.complex(z)
    if z.imag == 0:
        raise ValueError(f"off-axis Cauchy integral needs Im z != 0, got {z}")
    t = mobius(params, z)
    nu = params.scale
    dt = precision.complex(0, 2) * nu / (z + precision.complex(0, 1) * nu) ** 2
    if z.imag > 0:
        p, dp = _poly_with_derivative(e.pos, t)
        return p - e.pos.sum(), dp * dt
    inv = 1 / t
    p, dp = _poly_with_derivative(e.neg, inv)
    # d(1/t)/dz = -t'/t^2
    return -(p - e.neg.sum()), dp * dt * inv * inv


def cauchy_offaxis(e: RationalExpansion, z: Any) -> Any:
    """Cauchy integral of ``e`` at ``z`` off the real line.

    Equals ``sum_{j>0} c_j R_{j,0}(z)`` above the axis and
    ``-sum_{j<0} c_j R_{j,0}(z)`` below it.

    Raises:
        ValueError: If ``z`` is real or ``e`` oscillates.
    """
    return _offaxis(e, z)[0]


def cauchy_offaxis_derivative(e: RationalExpansion, z: Any) -> Any:
    """``d/dz`` of :func:`cauchy_offaxis`."""
    return _offaxis(e, z)[1]
