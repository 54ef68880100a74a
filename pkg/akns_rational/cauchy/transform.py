"""Closed-form Fourier transforms of ``R_{j,0}`` and integrals of bundles.

With ``hat_R(j, omega) = int e^{-i omega k} R_{j,0}(k) dk`` (principal value)::

    hat_R(j, omega) = 0                                          sign(j) = -sign(omega)
                    = -2 pi |j| nu                               omega = 0
                    = -4 pi nu e^{-|omega| nu} L_{|j|-1}^(1)(2 |omega| nu)   otherwise
"""

from __future__ import annotations

from typing import Any

import numpy as np

from akns_rational.basis.bundle import OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion
from akns_rational.basis.mobius import BasisParams
from akns_rational.numeric_core.scalar import Precision, Scalar
from akns_rational.numeric_core.special import clenshaw_laguerre, laguerre_gl1


def _exp(value: Any, precision: Precision) -> Any:
    return precision.ctx.exp(value) if precision.extended else float(np.exp(value))


def _weighted_sum(coeffs: np.ndarray) -> Scalar:
    """``sum_j j * coeffs[j-1]``."""
    return sum(((j + 1) * c for j, c in enumerate(coeffs)), 0)


def hat_R(j: int, params: BasisParams, omega: float) -> Scalar:
    """Fourier transform of ``R_{j,0}`` at real ``omega``.

    Raises:
        ValueError: If ``j == 0``.
    """
    if j == 0:
        raise ValueError("R_0 has no transform")
    precision = params.precision
    nu = params.scale
    omega = precision.real(omega)
    if omega == 0:
        return precision.complex(-2 * precision.pi * abs(j) * nu)
    if (j > 0) != (omega > 0):
        return precision.complex(0)
    x = 2 * abs(omega) * nu
    lag = laguerre_gl1(x, abs(j))[-1]
    return precision.complex(-4 * precision.pi * nu * _exp(-abs(omega) * nu, precision) * lag)


def _transform(e: RationalExpansion, omega: Any) -> Scalar:
    """Transform of the non-oscillatory part of ``e`` at ``omega``."""
    params = e.params
    precision = params.precision
    nu = params.scale
    omega = precision.real(omega)
    if omega == 0:
        return precision.complex(-2 * precision.pi * nu * (_weighted_sum(e.pos) + _weighted_sum(e.neg)))
    coeffs = e.pos if omega > 0 else e.neg
    if coeffs.shape[0] == 0:
        return precision.complex(0)
    x = 2 * abs(omega) * nu
    return -4 * precision.pi * nu * _exp(-abs(omega) * nu, precision) * clenshaw_laguerre(coeffs, x)


def ft_of_expansion(e: RationalExpansion, omega: float) -> Scalar:
    """``int e^{-i omega k} e(k) dk`` for an ``alpha = 0`` expansion, by Clenshaw.

    Raises:
        ValueError: If ``e`` oscillates.
    """
    if e.alpha != 0:
        raise ValueError(f"ft_of_expansion needs alpha = 0, got {e.alpha}")
    return _transform(e, omega)


def pv_integral(b: OscillatoryBundle) -> Scalar:
    """Principal-value integral of ``b`` over the real line.

    ``int R_{j,alpha} dk`` is the transform of ``R_{j,0}`` at ``-alpha``.
    """
    total = b.params.precision.complex(0)
    for block in b.blocks:
        total = total + _transform(block, -block.alpha)
    return total


def large_k_limit(b: OscillatoryBundle) -> Scalar:
    """``lim k * (Cauchy integral of b)(k) = -(1/2 pi i) pv_integral(b)``."""
    precision = b.params.precision
    return pv_integral(b) * precision.complex(0, 1) / (2 * precision.pi)


def _first_residue_coefficients(m: int, alpha: float, params: BasisParams) -> np.ndarray:
    """Linear Taylor coefficient ``gamma_{j,1}`` of ``r_{j,alpha}`` in ``z`` for ``|j| = 1..m``.

    Runs the residue recurrence on the ``z^1`` coefficient only.
    """
    precision = params.precision
    x = 2 * abs(alpha) * params.scale
    lag = laguerre_gl1(x, m)
    linear = precision.zeros(m)
    acc: Any = 0
    for j in range(1, m + 1):
        acc = acc + (lag[j - 1] - lag[j - 2] if j >= 2 else lag[0])
        linear[j - 1] = acc
    return -_exp(-abs(alpha) * params.scale, precision) * linear


def large_k_limit_residues(b: OscillatoryBundle) -> Scalar:
    """Same limit as :func:`large_k_limit`, from the residue expansions of ``C+``.

    An ``alpha = 0`` block contributes ``-i nu sum |j| c_j``. Otherwise only
    terms with ``alpha j < 0`` contribute, each ``2 i nu gamma_{j,1} c_j``.
    """
    params = b.params
    precision = params.precision
    nu = params.scale
    i = precision.complex(0, 1)
    total = precision.complex(0)
    for block in b.blocks:
        if block.alpha == 0:
            total = total - i * nu * (_weighted_sum(block.pos) + _weighted_sum(block.neg))
            continue
        coeffs = block.neg if block.alpha > 0 else block.pos
        if coeffs.shape[0] == 0:
            continue
        gamma = _first_residue_coefficients(coeffs.shape[0], block.alpha, params)
        total = total + 2 * i * nu * precision.vdot(precision.conj(gamma), coeffs)
    return total
