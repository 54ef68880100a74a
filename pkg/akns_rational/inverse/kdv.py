"""Inverse problem for ``q = -1``, ``r = U0 sech^2(x)``.

``q`` does not decay, so ``r`` is recovered from the ``x``-derivative of the
row ``u = [u1, u2]`` solving the equation with right-hand side
``[rho1 e^{2ikx}, -rho2 e^{-2ikx}]``::

    r(x) = -(1/pi) pv int du1/dx dk

``du/dx`` solves the same equation with right-hand side
``dF/dx - (C+ u) dL/dx + (C- u) dU/dx``, which needs expansions of ``k rho1``
and ``k rho2``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams
from akns_rational.cauchy.transform import pv_integral
from akns_rational.errors import InsufficientResolutionError
from akns_rational.inverse.jumps import derivative_factors, jump_factors
from akns_rational.inverse.solve import InverseConfig, SIEOperator, solve_row
from akns_rational.numeric_core.scalar import Scalar
from akns_rational.operators.finite_section import trailing_norm
from akns_rational.parallel import ordered_map
from akns_rational.scattering.references import KdvReference

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class KdvData:
    """Expansions of ``rho1``, ``rho2``, ``k rho1`` and ``k rho2``."""

    rho1: RationalExpansion
    rho2: RationalExpansion
    k_rho1: RationalExpansion
    k_rho2: RationalExpansion

    def __post_init__(self) -> None:
        for e in (self.rho2, self.k_rho1, self.k_rho2):
            self.rho1._check(e)

    @property
    def params(self) -> BasisParams:
        return self.rho1.params

    @property
    def size(self) -> int:
        return max(e.n_plus + e.n_minus for e in (self.rho1, self.rho2, self.k_rho1, self.k_rho2))

    def tail(self) -> float:
        """Largest trailing-coefficient norm over the four expansions."""
        return max(trailing_norm(e.operator_vector()) for e in (self.rho1, self.rho2, self.k_rho1, self.k_rho2))

    def is_zero(self) -> bool:
        return all(e.norm() == 0 for e in (self.rho1, self.rho2))


def sample_closed_form(fn: Callable[[object], object], n: int, params: BasisParams) -> RationalExpansion:
    """Interpolate a scalar closed form, evaluated node by node, with ``n`` nodes."""
    grid = InterpolationGrid.from_size(params, n)
    precision = params.precision
    samples = precision.zeros(grid.n)
    for j in range(1, grid.n):
        samples[j] = precision.complex(fn(grid.omegas[j]))
    return interpolate(samples, grid.n, params=params)


def kdv_data(u0: float, n: int, params: BasisParams) -> KdvData:
    """Expansions of the closed-form ``sech^2`` reflection coefficients on ``n`` nodes."""
    reference = KdvReference(u0, params.precision.digits)
    return KdvData(
        sample_closed_form(reference.rho1, n, params),
        sample_closed_form(reference.rho2, n, params),
        sample_closed_form(reference.k_rho1, n, params),
        sample_closed_form(reference.k_rho2, n, params),
    )


@dataclass(frozen=True, slots=True)
class KdvSample:
    """``r`` at the working precision of the data."""

    x: float
    r: Scalar
    iterations: int
    residual: float


def _recover_at(data: KdvData, x: float, config: InverseConfig) -> KdvSample:
    if data.is_zero():
        return KdvSample(float(x), data.params.precision.complex(0), 0, 0.0)
    n_work = config.n_work or max(16, 2 * data.size)
    factors = jump_factors(data.rho1, data.rho2, x)
    operator = SIEOperator(factors, n_work, config.prune)
    first = solve_row(operator, factors.rhs_row(0) + factors.rhs_row(1), config)
    slopes = derivative_factors(data.k_rho1, data.k_rho2, x)
    rhs = slopes.rhs_row(0) + slopes.rhs_row(1) - operator.coupling(first.solution, slopes)
    second = solve_row(operator, rhs.truncated(n_work), config)
    precision = data.params.precision
    r = -pv_integral(second.solution.first) / precision.pi
    LOGGER.debug("kdv x=%s: %d + %d iterations", x, first.iterations, second.iterations)
    residual = max(
        res.residual / res.residuals[0] if res.residuals[0] else 0.0 for res in (first, second)
    )
    return KdvSample(float(x), r, first.iterations + second.iterations, residual)


def kdv_recover(data: KdvData, xs: Sequence[float], config: InverseConfig | None = None) -> list[KdvSample]:
    """``r(x)`` on ``xs`` (each ``x >= 0``) from the ``sech^2`` reflection data.

    Raises:
        ValueError: If some ``x`` is negative.
        InsufficientResolutionError: If the expansion tails exceed ``config.tol``.
    """
    config = config or InverseConfig()
    if any(x < 0 for x in xs):
        raise ValueError(f"kdv recovery needs x >= 0, got {min(xs)}")
    tail = data.tail()
    if tail > config.tol:
        raise InsufficientResolutionError(tail, config.tol)
    return ordered_map(lambda x: _recover_at(data, x, config), list(xs))


def kdv_potential(u0: float, xs: Sequence[float]) -> np.ndarray:
    return KdvReference(u0).r(np.asarray(xs, dtype=float))
