"""Singular integral equations of the inverse problem, solved row by row with GMRES.

For ``x >= 0`` the left data give::

    C+ u (I + lower) - C- u (I + upper) = upper - lower

and since ``C+ - C- = I`` the operator is ``u + (C+ u) lower - (C- u) upper``.
For ``x < 0`` the same equation is solved at ``-x`` with the right data, and the
roles of ``q`` and ``r`` in the recovery swap.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from akns_rational.basis.bundle import PRUNE_TOLERANCE, BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import evaluate_grid
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams
from akns_rational.cauchy.boundary import cauchy_plus
from akns_rational.cauchy.transform import large_k_limit
from akns_rational.errors import SideMismatchError
from akns_rational.inverse.jumps import JumpFactors, jump_factors
from akns_rational.inverse.poles import PoleSystem, build_pole_system
from akns_rational.numeric_core.fft import next_power_of_two
from akns_rational.numeric_core.gmres import GMRESResult, gmres
from akns_rational.numeric_core.scalar import Scalar
from akns_rational.operators.mult import row_times_matrix
from akns_rational.parallel import ordered_map
from akns_rational.scattering.data import ScatteringData

LOGGER = logging.getLogger(__name__)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


class InnerProduct(Enum):
    """``COEFFICIENT``: blocks orthogonal, Euclidean within a block. ``L2``: trapezoid rule on the real line."""

    COEFFICIENT = "coefficient"
    L2 = "l2"


@dataclass(frozen=True, slots=True)
class InverseConfig:
    """GMRES tolerance and iteration cap, working bandwidth and bundle pruning.

    ``n_work`` defaults to twice the reflection-expansion size and
    ``grid_size`` (nodes for the dressed jump entries) to four times it.
    """

    tol: float = 1e-12
    maxiter: int = 200
    n_work: int | None = None
    prune: float = PRUNE_TOLERANCE
    grid_size: int | None = None
    inner: InnerProduct = InnerProduct.COEFFICIENT

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.maxiter < 1:
            raise ValueError(f"maxiter must be >= 1, got {self.maxiter}")
        if self.n_work is not None and self.n_work < 1:
            raise ValueError(f"n_work must be >= 1, got {self.n_work}")
        if self.prune < 0:
            raise ValueError(f"prune must be >= 0, got {self.prune}")

    def working_size(self, data: ScatteringData) -> int:
        if self.n_work is not None:
            return self.n_work
        return max(16, 2 * _expansion_size(data))

    def dressing_grid(self, data: ScatteringData) -> int:
        if self.grid_size is not None:
            return next_power_of_two(self.grid_size)
        return max(64, next_power_of_two(4 * _expansion_size(data)))


def _expansion_size(data: ScatteringData) -> int:
    return max(e.n_plus + e.n_minus for e in (data.rho1, data.rho2, data.gamma1, data.gamma2))


def _row_pruned(row: BundleRow, tol: float) -> BundleRow:
    return BundleRow(row.first.pruned(tol), row.second.pruned(tol))


def _row_cauchy_plus(row: BundleRow) -> BundleRow:
    return BundleRow(cauchy_plus(row.first), cauchy_plus(row.second))


@dataclass(frozen=True, slots=True, eq=False)
class SIEOperator:
    """``u -> u + (C+ u) lower - (C- u) upper`` on rows of bundles."""

    factors: JumpFactors
    n_work: int
    prune: float = PRUNE_TOLERANCE

    def coupling(self, row: BundleRow, factors: JumpFactors | None = None) -> BundleRow:
        """``(C+ u) lower - (C- u) upper`` for the given (or own) factors."""
        factors = factors or self.factors
        plus = _row_cauchy_plus(row)
        minus = plus - row
        return row_times_matrix(plus, factors.lower, self.n_work) - row_times_matrix(minus, factors.upper, self.n_work)

    def __call__(self, row: BundleRow) -> BundleRow:
        out = row + self.coupling(row)
        return _row_pruned(out.truncated(self.n_work), self.prune)


def _l2_weights(params: BasisParams, n: int) -> np.ndarray:
    """Trapezoid weights ``(2 pi / n) (nu / 2) csc^2(theta_j / 2)``, zero at the infinity node."""
    grid = InterpolationGrid.from_size(params, n)
    precision = params.precision
    weights = precision.zeros(n)
    if precision.extended:
        ctx = precision.ctx
        for j in range(1, n):
            weights[j] = 2 * ctx.pi / n * params.scale / 2 / ctx.sin(grid.thetas[j] / 2) ** 2
    else:
        weights[1:] = 2 * np.pi / n * params.nu / 2 / np.sin(grid.thetas[1:] / 2) ** 2
    return weights


def _bundle_values(b: OscillatoryBundle, grid: InterpolationGrid) -> np.ndarray:
    values = grid.params.precision.zeros(grid.n)
    for block in b.blocks:
        values = values + evaluate_grid(block, grid)
    return values


def l2_inner(u: BundleRow, v: BundleRow, n: int) -> Scalar:
    """Discrete ``L^2(R)`` inner product on ``n`` nodes, conjugate-linear in ``u``."""
    params = u.params
    precision = params.precision
    grid = InterpolationGrid.from_size(params, n)
    weights = _l2_weights(params, n)
    total = precision.complex(0)
    for a, b in ((u.first, v.first), (u.second, v.second)):
        total = total + precision.vdot(_bundle_values(a, grid), weights * _bundle_values(b, grid))
    return total


@dataclass(frozen=True, slots=True, eq=False)
class SIEProblem:
    """Operator, right-hand sides of both rows and the pole system at one ``x``."""

    x: float
    side: Side
    operator: SIEOperator
    rhs: tuple[BundleRow, BundleRow]
    poles: PoleSystem


def right_data(data: ScatteringData) -> ScatteringData:
    """View with ``(gamma1, gamma2, d)`` in the slots of ``(rho1, rho2, c)``."""
    return data.mirrored()


def _oriented(data: ScatteringData, x: float, side: Side | None) -> tuple[ScatteringData, float, Side]:
    if side is None:
        side = Side.LEFT if x >= 0 else Side.RIGHT
    if side is Side.LEFT:
        if x < 0:
            raise SideMismatchError(side.value, x)
        return data, float(x), side
    if x > 0:
        raise SideMismatchError(side.value, x)
    return right_data(data), float(-x) + 0.0, side


def assemble_sie(data: ScatteringData, x: float, side: Side | None = None, config: InverseConfig | None = None) -> SIEProblem:
    """Build the dressed or undressed equation at ``x``.

    Raises:
        SideMismatchError: If a left problem is requested at ``x < 0`` or a right one at ``x > 0``.
        PoleSystemError: If the residue system is singular.
    """
    config = config or InverseConfig()
    view, position, side = _oriented(data, x, side)
    poles = build_pole_system(view.plus, view.minus, position, view.params.precision)
    factors = jump_factors(view.rho1, view.rho2, position, poles, config.dressing_grid(data))
    operator = SIEOperator(factors, config.working_size(data), config.prune)
    return SIEProblem(float(x), side, operator, (factors.rhs_row(0), factors.rhs_row(1)), poles)


@dataclass(frozen=True, slots=True, eq=False)
class RHPSolution:
    """Both rows of ``u`` at ``x``, their GMRES histories and the recovered potentials."""

    x: float
    side: Side
    rows: tuple[BundleRow, BundleRow]
    results: tuple[GMRESResult, GMRESResult]
    poles: PoleSystem
    q: Scalar = field(default=0j)
    r: Scalar = field(default=0j)

    @property
    def iterations(self) -> int:
        return max(res.iterations for res in self.results)

    @property
    def converged(self) -> bool:
        return all(res.converged for res in self.results)

    @property
    def residual(self) -> float:
        """Worst final relative residual over both rows."""
        return max(res.residual / res.residuals[0] if res.residuals[0] else 0.0 for res in self.results)

    @property
    def history(self) -> tuple[tuple[float, ...], ...]:
        return tuple(res.residuals for res in self.results)

    @property
    def dropped_mass(self) -> float:
        return max(row.dropped_mass() for row in self.rows)

    @property
    def alphas(self) -> tuple[tuple[float, ...], tuple[float, ...]]:
        """Oscillations present in each entry of the first row."""
        first = self.rows[0]
        return first.first.alphas, first.second.alphas


def solve_row(operator: SIEOperator, rhs: BundleRow, config: InverseConfig) -> GMRESResult:
    """GMRES for one row from the zero initial iterate."""
    precision = rhs.params.precision
    if config.inner is InnerProduct.L2:
        n = max(64, next_power_of_two(4 * operator.n_work))

        def inner(u: BundleRow, v: BundleRow) -> Scalar:
            return l2_inner(u, v, n)

    else:

        def inner(u: BundleRow, v: BundleRow) -> Scalar:
            return u.inner(v)

    return gmres(operator, rhs, inner=inner, tol=config.tol, maxiter=config.maxiter, precision=precision)


def recover_potentials(rows: Sequence[BundleRow], poles: PoleSystem, side: Side) -> tuple[Scalar, Scalar]:
    """``(q(x), r(x))`` from ``m_1 = lim k (M - I) = -(1/2 pi i) int u + sum_j u_j``.

    The left problem gives ``q = 2i m_1[1,2]``, ``r = -2i m_1[2,1]``; the right one
    gives the same expressions for ``r`` and ``q``.
    """
    residues = poles.residue_sum()
    precision = poles.precision
    m12 = large_k_limit(rows[0].second) + residues[0][1]
    m21 = large_k_limit(rows[1].first) + residues[1][0]
    two_i = precision.complex(0, 2)
    upper, lower = two_i * m12, -two_i * m21
    return (upper, lower) if side is Side.LEFT else (lower, upper)


def solve_rhp(data: ScatteringData, x: float, config: InverseConfig | None = None, side: Side | None = None) -> RHPSolution:
    """Solve both rows of the singular integral equation at ``x`` and recover ``q``, ``r``.

    GMRES non-convergence is reported in the result, not raised.
    """
    config = config or InverseConfig()
    problem = assemble_sie(data, x, side, config)
    results = tuple(solve_row(problem.operator, rhs, config) for rhs in problem.rhs)
    rows = (results[0].solution, results[1].solution)
    q, r = recover_potentials(rows, problem.poles, problem.side)
    solution = RHPSolution(problem.x, problem.side, rows, results, problem.poles, q, r)
    if not solution.converged:
        LOGGER.warning("GMRES did not converge at x=%s: %s", x, [res.status.value for res in results])
    LOGGER.debug("x=%s: %d iterations, residual %.3e, pruned mass %.3e", x, solution.iterations, solution.residual, solution.dropped_mass)
    return solution


@dataclass(frozen=True, slots=True)
class InverseSample:
    """One row of an inverse-transform table; ``failure`` is ``None`` on success."""

    x: float
    q: complex
    r: complex
    iterations: int
    residual: float
    failure: str | None = None


def _sample(data: ScatteringData, x: float, config: InverseConfig) -> InverseSample:
    try:
        solution = solve_rhp(data, x, config)
    except ArithmeticError as exc:
        LOGGER.warning("inverse transform failed at x=%s: %s", x, exc)
        nan = complex(math.nan, math.nan)
        return InverseSample(float(x), nan, nan, 0, math.inf, str(exc))
    failure = None
    if not solution.converged:
        failure = "gmres " + "/".join(res.status.value for res in solution.results)
    return InverseSample(float(x), complex(solution.q), complex(solution.r), solution.iterations, solution.residual, failure)


def inverse_transform(data: ScatteringData, xs: Sequence[float], config: InverseConfig | None = None) -> list[InverseSample]:
    """Sample ``(q, r)`` on ``xs``: left data for ``x >= 0``, right data for ``x < 0``.

    Per-``x`` failures are recorded in the samples; the solves run on the worker pool.
    """
    config = config or InverseConfig()
    return ordered_map(lambda x: _sample(data, x, config), list(xs))


def recovered_values(samples: Sequence[InverseSample]) -> tuple[np.ndarray, np.ndarray]:
    """``q`` and ``r`` columns of a table."""
    return np.array([s.q for s in samples]), np.array([s.r for s in samples])
