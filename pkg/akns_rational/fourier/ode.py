"""Fourier transform by solving ``u' - iku = q`` in the rational basis.

The solution decaying at ``-inf`` is ``u = c_0 phi(x; k, f) + sum_j c_j R_{j,0}``
for a driver ``f`` with known transform, and its large-``x`` behaviour gives
``q_hat(k) = c_0 f_hat(k)``. Coefficients ``c_j`` are never needed, only the
driver weight ``c_0``.

The parity of the section selects the one-sided limit of ``q_hat`` at ``k = 0``:
even sections give ``k -> 0-`` and odd sections ``k -> 0+``. On ``Re k = 0`` both
are solved and their weights averaged.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.fourier.drivers import Driver
from akns_rational.numeric_core.fft import next_power_of_two
from akns_rational.numeric_core.scalar import Scalar
from akns_rational.operators.finite_section import (
    DEFAULT_SECTION_CAP,
    SectionMode,
    SectionSolution,
    grow_section,
    parity_size,
    solve_finite_section,
)
from akns_rational.operators.systems import assemble_fourier_ode
from akns_rational.parallel import ordered_map

LOGGER = logging.getLogger(__name__)

Potential = RationalExpansion | Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, slots=True)
class TransformResult:
    """``value = c0 * f_hat(k)`` from a section of the given size."""

    k: Scalar
    value: Scalar
    c0: Scalar
    size: int
    residual: float
    fallback: bool = False


def expand_potential(q: Potential, driver: Driver, m: int, n: int | None = None) -> RationalExpansion:
    """Expansion of ``q`` in the driver's basis, resolving at least ``m`` operator rows."""
    if isinstance(q, RationalExpansion):
        q._check(driver.coefficients)
        if q.alpha != 0:
            raise ValueError(f"potential must be non-oscillatory, got alpha={q.alpha}")
        return q
    size = next_power_of_two(2 * m + 2) if n is None else n
    return interpolate(q, size, params=driver.params)


def on_parity_line(k: Any) -> bool:
    return complex(k).real == 0


def _section(q: RationalExpansion, k: Any, driver: Driver, m: int, size: int | None = None) -> SectionSolution:
    matrix, rhs = assemble_fourier_ode(q, driver.coefficients, k, m, size=size)
    return solve_finite_section(matrix, rhs, SectionMode.SQUARE, q.params.precision)


def _sections(q: RationalExpansion, k: Any, driver: Driver, m: int) -> list[SectionSolution]:
    """The parity-rule section, plus the odd one when ``Re k = 0``."""
    size = parity_size(m, k)
    solutions = [_section(q, k, driver, m, size)]
    if on_parity_line(k):
        solutions.append(_section(q, k, driver, m, size + 1))
    return solutions


def _result(k: Any, g_hat: Any, solutions: Sequence[SectionSolution]) -> TransformResult:
    c0 = sum(s.coefficients[0] for s in solutions) / len(solutions)
    return TransformResult(
        k,
        c0 * g_hat,
        c0,
        max(s.size for s in solutions),
        max(s.residual for s in solutions),
        any(s.fallback for s in solutions),
    )


def ft_ode(q: Potential, k: Any, driver: Driver, m: int, n: int | None = None) -> TransformResult:
    """``q_hat(k) = int e^{-ikx} q(x) dx`` from one square section.

    Args:
        q: Expansion of ``q`` or a vectorised callable, interpolated with ``n`` nodes.
        k: Evaluation point; complex only with a driver that continues off the axis.
        driver: Deconvolution driver.
        m: Requested section size (rounded to the parity rule).
        n: Interpolation size for callable ``q``.

    Raises:
        ValueError: If ``k`` is complex and the driver is real-only.
        DeconvolutionError: If ``|f_hat(k)|`` is below the floor.
    """
    g_hat = driver.transform_at(k)
    expansion = expand_potential(q, driver, m, n)
    result = _result(k, g_hat, _sections(expansion, k, driver, m))
    if result.fallback:
        LOGGER.warning("fourier section at k=%s was singular; least-squares residual %.3e", k, result.residual)
    return result


def ft_ode_grid(q: Potential, ks: Sequence[Any], driver: Driver, m: int, n: int | None = None) -> list[TransformResult]:
    """:func:`ft_ode` at every ``k``, interpolating ``q`` once; ordered like ``ks``."""
    expansion = expand_potential(q, driver, m, n)
    return ordered_map(lambda k: ft_ode(expansion, k, driver, m), ks)


def ft_ode_adaptive(
    q: Potential,
    k: Any,
    driver: Driver,
    m: int = 64,
    *,
    tol: float = 1e-14,
    cap: int = DEFAULT_SECTION_CAP,
) -> TransformResult:
    """:func:`ft_ode` with the section doubled until its trailing unknowns fall below ``tol``.

    Raises:
        SectionGrowthError: If ``cap`` is reached first.
    """
    g_hat = driver.transform_at(k)

    def solve(size: int) -> SectionSolution:
        return _section(expand_potential(q, driver, size), k, driver, size)

    solution = grow_section(solve, m, tol=tol, cap=cap)
    LOGGER.debug("adaptive fourier section at k=%s settled at size %d", k, solution.size)
    solutions = [solution]
    if on_parity_line(k):
        solutions.append(_section(expand_potential(q, driver, solution.size), k, driver, solution.size, solution.size + 1))
    return _result(k, g_hat, solutions)
