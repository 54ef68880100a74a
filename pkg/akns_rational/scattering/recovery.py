"""Recover ``a`` and ``A`` off the axis from the reflection coefficients alone.

On the real line ``a A = 1 / (1 - rho1 rho2)``; with ``L = log(1 - rho1 rho2)``
and no discrete spectrum, ``a = exp(-C[L])`` above the axis and
``A = exp(C[L])`` below it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, from_grid_values
from akns_rational.cauchy.boundary import cauchy_offaxis
from akns_rational.errors import BranchError
from akns_rational.numeric_core.scalar import Scalar

LOGGER = logging.getLogger(__name__)


def _unwrapped_log(values: np.ndarray, extended: bool, precision: Any) -> np.ndarray:
    """Continuous logarithm along the grid, anchored at the infinity node where the value is 1.

    Raises:
        BranchError: If the phase does not close up around the circle.
    """
    double = np.asarray([complex(v) for v in values], dtype=np.complex128)
    if np.any(double == 0):
        raise BranchError("1 - rho1*rho2 vanishes at a grid node")
    phase = np.unwrap(np.angle(double))
    phase = phase - phase[0]
    winding = phase[-1] + float(np.angle(np.exp(-1j * phase[-1])))
    if abs(winding) > math.pi:
        raise BranchError(f"1 - rho1*rho2 winds around zero: phase changes by {winding:.3f} along the real line")
    if not extended:
        return np.log(np.abs(double)) + 1j * phase
    principal = precision.log(values)
    turns = np.rint((phase - np.angle(double)) / (2 * math.pi)).astype(int)
    two_pi_i = 2 * precision.pi * precision.complex(0, 1)
    return np.array([p + int(m) * two_pi_i for p, m in zip(principal, turns, strict=True)], dtype=object)


@dataclass(frozen=True, slots=True, eq=False)
class RecoveredAnalytic:
    """``a`` (``Im k > 0``) and ``A`` (``Im k < 0``) from ``L = log(1 - rho1 rho2)``."""

    log_defect: RationalExpansion

    def a(self, z: Any) -> Scalar:
        return self._exp(-cauchy_offaxis(self.log_defect, z))

    def big_a(self, z: Any) -> Scalar:
        return self._exp(cauchy_offaxis(self.log_defect, z))

    def psi(self, z: Any) -> Scalar:
        """``exp(C[L](z))``; tends to 1 as ``|z| -> infinity``."""
        return self._exp(cauchy_offaxis(self.log_defect, z))

    def __call__(self, z: Any) -> Scalar:
        return self.a(z) if complex(z).imag > 0 else self.big_a(z)

    def _exp(self, value: Any) -> Scalar:
        precision = self.log_defect.params.precision
        return precision.ctx.exp(value) if precision.extended else complex(np.exp(value))


def recover_aA_from_reflection(rho1: RationalExpansion, rho2: RationalExpansion, n: int = 512) -> RecoveredAnalytic:
    """Interpolate ``log(1 - rho1 rho2)`` on ``n`` nodes and wrap its Cauchy integral.

    Only valid when ``a`` has no zeros in the upper half plane and ``A`` none in
    the lower one.

    Raises:
        BranchError: If ``1 - rho1 rho2`` vanishes or winds around zero.
    """
    rho1._check(rho2)
    params = rho1.params
    precision = params.precision
    values = 1 - rho1.values_on_grid(n) * rho2.values_on_grid(n)
    values[0] = precision.complex(1)
    logs = _unwrapped_log(values, precision.extended, precision)
    expansion = from_grid_values(logs, params)
    LOGGER.debug("log(1 - rho1 rho2) on %d nodes: coefficient norm %.3e", n, float(expansion.norm()))
    return RecoveredAnalytic(expansion)
