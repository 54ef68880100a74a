"""Forward solves of the AKNS system in the rational basis.

The first column ``phi_1 = mu^-_1 e^{ikx} - e_1`` of the normalised Jost
solution satisfies ``phi_1' - [[0, q], [r, 2ik]] phi_1 = [0, r]`` and is sought as::

    phi_1 = [u_0 phi(x; 0) + sum_j u_j R_{j,0},  v_0 phi(x; 2k) + sum_j v_j R_{j,0}]

with ``phi(x; kappa)`` the driver's oscillatory integral. The second column is the
first column of the problem with ``(q, r, k) -> (r, q, -k)``, rows swapped.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, from_grid_values, interpolate
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams
from akns_rational.fourier.drivers import DEFAULT_DRIVER_SIZE, Driver
from akns_rational.numeric_core.fft import next_power_of_two
from akns_rational.numeric_core.scalar import Precision, Scalar
from akns_rational.operators.finite_section import SectionMode, solve_finite_section
from akns_rational.operators.systems import assemble_scattering_system
from akns_rational.parallel import ordered_map

LOGGER = logging.getLogger(__name__)

LOW_CONFIDENCE_RESIDUAL = 1e-6

PotentialFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, slots=True)
class ScatteringConfig:
    """Finite-section sizes and basis scales for the forward solve.

    Each of the two blocks has ``cols`` expansion unknowns (plus a driver
    weight) and ``cols + 1 + extra_rows`` rows. ``x_nu`` scales the basis the
    potentials and ``phi`` are expanded in; ``nu`` scales the ``k``-space basis
    of the reflection coefficients.
    """

    nu: float = 1.0
    x_nu: float = 12.0
    cols: int = 160
    extra_rows: int = 100
    digits: int = 16
    expansion_size: int | None = None

    def __post_init__(self) -> None:
        self._validate_sizes()

    def _validate_sizes(self) -> None:
        for name in ("nu", "x_nu"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.cols < 7:
            raise ValueError(f"cols must be >= 7, got {self.cols}")
        if self.extra_rows < 0:
            raise ValueError(f"extra_rows must be >= 0, got {self.extra_rows}")
        if self.expansion_size is not None and self.expansion_size < 2 * self.rows:
            raise ValueError(f"expansion_size must be >= {2 * self.rows}, got {self.expansion_size}")

    @property
    def rows(self) -> int:
        return self.cols + 1 + self.extra_rows

    @property
    def params(self) -> BasisParams:
        """Basis of the potentials and of ``phi``."""
        return BasisParams(self.x_nu, Precision(self.digits))

    @property
    def spectral_params(self) -> BasisParams:
        """Basis of the reflection coefficients and of ``a - 1``, ``A - 1``."""
        return BasisParams(self.nu, Precision(self.digits))

    @property
    def grid_size(self) -> int:
        """Interpolation size for potentials and ``q phi`` products."""
        if self.expansion_size is not None:
            return next_power_of_two(self.expansion_size)
        return max(DEFAULT_DRIVER_SIZE, next_power_of_two(2 * self.rows + 2))


def mirrored(e: RationalExpansion) -> RationalExpansion:
    """Expansion of ``x -> e(-x)``; ``R_j(-x) = R_{-j}(x)``."""
    if e.alpha != 0:
        raise ValueError(f"only non-oscillatory expansions can be mirrored, got alpha={e.alpha}")
    return RationalExpansion(e.params, 0.0, e.neg, e.pos)


@dataclass(frozen=True, slots=True, eq=False)
class ScatteringProblem:
    """Potentials ``q``, ``r`` expanded in ``R_{j,0}`` with the driver and section sizes."""

    q: RationalExpansion
    r: RationalExpansion
    driver: Driver
    config: ScatteringConfig
    _phi_grid: InterpolationGrid = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.q._check(self.r)
        self.q._check(self.driver.coefficients)
        if self.driver.phi is None:
            raise ValueError(f"{self.driver.kind.value} driver has no phi evaluator")
        object.__setattr__(self, "_phi_grid", InterpolationGrid.from_size(self.q.params, self.config.grid_size))

    @classmethod
    def from_functions(cls, q: PotentialFunction, r: PotentialFunction, config: ScatteringConfig | None = None) -> ScatteringProblem:
        config = config or ScatteringConfig()
        params = config.params
        n = config.grid_size
        driver = Driver.gaussian(params, max(DEFAULT_DRIVER_SIZE, n))
        return cls(interpolate(q, n, params=params), interpolate(r, n, params=params), driver, config)

    @property
    def params(self) -> BasisParams:
        return self.q.params

    @property
    def spectral_params(self) -> BasisParams:
        return BasisParams(self.config.nu, self.params.precision)

    def is_zero(self) -> bool:
        return self.q.norm() == 0 and self.r.norm() == 0

    def swapped(self) -> ScatteringProblem:
        """``(q, r) -> (r, q)``."""
        return ScatteringProblem(self.r, self.q, self.driver, self.config)

    def reflected(self) -> ScatteringProblem:
        """``(q, r) -> (-q(-x), -r(-x))``; its ``mu^-(-x; -k)`` is ``mu^+(x; k)``."""
        return ScatteringProblem(-mirrored(self.q), -mirrored(self.r), self.driver, self.config)

    def mirror_swapped(self) -> ScatteringProblem:
        """``(q, r) -> (r(-x), q(-x))``, the problem behind the right scattering map."""
        return ScatteringProblem(mirrored(self.r), mirrored(self.q), self.driver, self.config)

    def times_phi(self, e: RationalExpansion, kappa: Any) -> RationalExpansion:
        """Expansion of ``e(x) phi(x; kappa)`` on the working grid."""
        grid = self._phi_grid
        values = e.values_on_grid(grid.n)
        phi = self.params.precision.zeros(grid.n)
        phi[1:] = self.driver.phi(grid.omegas[1:], kappa)
        return from_grid_values(values * phi, self.params, keep=(self.config.rows, self.config.rows))

    def phi_at(self, x: Any, kappa: Any) -> Scalar:
        assert self.driver.phi is not None
        return self.driver.phi(x, kappa)


@dataclass(frozen=True, slots=True, eq=False)
class PhiSolution:
    """One column of ``phi``: driver weights and expansions of the top and bottom entries.

    Column 1 uses ``phi(x; 0)`` on top and ``phi(x; 2k)`` below; column 2 uses
    ``phi(x; -2k)`` on top and ``phi(x; 0)`` below.
    """

    k: Scalar
    column: int
    top_weight: Scalar
    top: RationalExpansion
    bottom_weight: Scalar
    bottom: RationalExpansion
    residual: float
    fallback: bool = False

    @property
    def low_confidence(self) -> bool:
        return self.residual > LOW_CONFIDENCE_RESIDUAL or self.fallback

    def kappas(self) -> tuple[Scalar, Scalar]:
        return (0 * self.k, 2 * self.k) if self.column == 1 else (-2 * self.k, 0 * self.k)

    def evaluate(self, problem: ScatteringProblem, x: Any) -> tuple[Scalar, Scalar]:
        """``(phi_top(x), phi_bottom(x))``."""
        top_kappa, bottom_kappa = self.kappas()
        top = self.top_weight * problem.phi_at(x, top_kappa) + self.top.evaluate(x)
        bottom = self.bottom_weight * problem.phi_at(x, bottom_kappa) + self.bottom.evaluate(x)
        return top, bottom


def _solve_first_column(problem: ScatteringProblem, k: Any) -> tuple[Scalar, RationalExpansion, Scalar, RationalExpansion, float, bool]:
    config = problem.config
    params = problem.params
    precision = params.precision
    cols, rows = config.cols, config.rows
    if problem.is_zero():
        zero = RationalExpansion.zero(params)
        return precision.complex(0), zero, precision.complex(0), zero, 0.0, False
    q_phi = problem.times_phi(problem.q, 2 * k)
    r_phi = problem.times_phi(problem.r, 0 * k)
    matrix, rhs = assemble_scattering_system(problem.q, problem.r, q_phi, r_phi, problem.driver.coefficients, k, cols, rows)
    solution = solve_finite_section(matrix, rhs, SectionMode.LEAST_SQUARES, precision, allow_rank_deficient=True)
    x = solution.coefficients
    u = RationalExpansion.from_operator_vector(params, x[1 : cols + 1])
    v = RationalExpansion.from_operator_vector(params, x[cols + 2 :])
    scale = max(float(precision.norm(rhs)), 1e-300)
    return x[0], u, x[cols + 1], v, solution.residual / scale, solution.fallback


def solve_phi(problem: ScatteringProblem, k: Any, column: int = 1) -> PhiSolution:
    """Least-squares solve for column 1 or 2 of ``phi`` at ``k`` (possibly complex).

    A rank-deficient section yields the minimum-norm solution, marked low confidence.

    Raises:
        ValueError: If ``column`` is not 1 or 2.
    """
    if column == 1:
        u0, u, v0, v, residual, fallback = _solve_first_column(problem, k)
        out = PhiSolution(k, 1, u0, u, v0, v, residual, fallback)
    elif column == 2:
        u0, u, v0, v, residual, fallback = _solve_first_column(problem.swapped(), -k)
        out = PhiSolution(k, 2, v0, v, u0, u, residual, fallback)
    else:
        raise ValueError(f"column must be 1 or 2, got {column}")
    LOGGER.debug("column %d at k=%s residual %.3e, fallback %s", column, k, residual, fallback)
    return out


@dataclass(frozen=True, slots=True)
class ScatteringMatrix:
    """``S(k) = [[a, B], [b, A]]`` with the worse of the two column residuals.

    ``fallback`` marks a rank-deficient section in either column.
    """

    k: Scalar
    a: Scalar
    b: Scalar
    A: Scalar
    B: Scalar
    residual: float = 0.0
    fallback: bool = False

    @property
    def det(self) -> Scalar:
        return self.a * self.A - self.b * self.B

    @property
    def low_confidence(self) -> bool:
        return self.residual > LOW_CONFIDENCE_RESIDUAL or self.fallback

    @classmethod
    def identity(cls, k: Any, precision: Precision) -> ScatteringMatrix:
        one, zero = precision.complex(1), precision.complex(0)
        return cls(k, one, zero, one, zero)


def scattering_matrix(problem: ScatteringProblem, k: Any) -> ScatteringMatrix:
    """``S(k)`` from the large-``x`` limits of both columns of ``phi``.

    ``b`` and ``B`` use the raw driver transform, so they underflow to zero
    instead of hitting the deconvolution floor at large ``|k|``.
    """
    if problem.is_zero():
        return ScatteringMatrix.identity(k, problem.params.precision)
    first = solve_phi(problem, k, 1)
    second = solve_phi(problem, k, 2)
    driver = problem.driver
    g0 = driver.transform_at(0 * k)
    a = 1 + first.top_weight * g0
    b = first.bottom_weight * driver.transform(2 * k)
    big_b = second.top_weight * driver.transform(-2 * k)
    big_a = 1 + second.bottom_weight * g0
    residual = max(first.residual, second.residual)
    return ScatteringMatrix(k, a, b, big_a, big_b, residual, first.fallback or second.fallback)


def scattering_matrices(problem: ScatteringProblem, ks: Sequence[Any]) -> list[ScatteringMatrix]:
    """:func:`scattering_matrix` at every ``k``, in order, on the worker pool."""
    return ordered_map(lambda k: scattering_matrix(problem, k), ks)
