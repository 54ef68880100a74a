"""Finite-section solves for the banded-below systems and the growth heuristic."""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from akns_rational.errors import RankDeficientError, SectionGrowthError
from akns_rational.numeric_core.linalg import solve_least_squares, solve_square
from akns_rational.numeric_core.scalar import DOUBLE, Precision

LOGGER = logging.getLogger(__name__)

DEFAULT_SECTION_CAP = 1024


class SectionMode(Enum):
    SQUARE = "square"
    LEAST_SQUARES = "least-squares"


@dataclass(frozen=True, slots=True)
class SectionSolution:
    """Solution of one finite section.

    ``fallback`` is set when a singular square section was re-solved by least
    squares or a rank-deficient least-squares section fell back to the
    minimum-norm solution; ``residual`` is ``||A x - b||``.
    """

    coefficients: np.ndarray
    residual: float
    mode: SectionMode
    fallback: bool = False

    @property
    def size(self) -> int:
        return self.coefficients.shape[0]


def parity_size(m: int, k: Any) -> int:
    """Square section size: ``m`` rounded up to even, plus one when ``Re k > 0``."""
    if m < 2:
        raise ValueError(f"section size must be >= 2, got {m}")
    even = m + (m % 2)
    return even + 1 if complex(k).real > 0 else even


def _residual(a: np.ndarray, x: np.ndarray, b: np.ndarray, precision: Precision) -> float:
    if precision.extended:
        return float(precision.norm(np.dot(a, x) - b))
    return float(np.linalg.norm(a @ x - b))


def _column_scales(a: np.ndarray, precision: Precision) -> np.ndarray:
    """Column norms of ``a``, with zero columns mapped to one."""
    if precision.extended:
        norms = [precision.norm(a[:, j]) for j in range(a.shape[1])]
        return np.asarray([n if n != 0 else precision.ctx.mpf(1) for n in norms], dtype=object)
    norms = np.linalg.norm(a, axis=0)
    return np.where(norms > 0, norms, 1.0)


def _solve_equilibrated(a: np.ndarray, b: np.ndarray, precision: Precision, allow_rank_deficient: bool) -> tuple[np.ndarray, bool]:
    scales = _column_scales(a, precision)
    scaled = a / scales[np.newaxis, :]
    try:
        y = solve_least_squares(scaled, b, precision)
        deficient = False
    except RankDeficientError as exc:
        if not allow_rank_deficient:
            raise
        LOGGER.debug("%s; using the minimum-norm solution", exc)
        y = solve_least_squares(scaled, b, precision, allow_rank_deficient=True)
        deficient = True
    return y / scales, deficient


def solve_finite_section(
    a: np.ndarray,
    b: np.ndarray,
    mode: SectionMode = SectionMode.SQUARE,
    precision: Precision = DOUBLE,
    *,
    allow_rank_deficient: bool = False,
) -> SectionSolution:
    """Solve a finite section exactly (square) or in the least-squares sense.

    Least-squares sections are column-equilibrated before the solve.

    Args:
        a: Section matrix; square in ``SQUARE`` mode.
        b: Right-hand side.
        mode: Solve strategy.
        precision: Scalar field of ``a`` and ``b``.
        allow_rank_deficient: Return the minimum-norm least-squares solution,
            flagged as ``fallback``, instead of raising.

    Returns:
        A :class:`SectionSolution`.

    Raises:
        ValueError: If the shapes are inconsistent with ``mode``.
        RankDeficientError: If a least-squares section is rank deficient and
            ``allow_rank_deficient`` is off.
    """
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"section has {a.shape[0]} rows but rhs has {b.shape[0]} entries")
    if mode is SectionMode.SQUARE:
        if a.shape[0] != a.shape[1]:
            raise ValueError(f"square mode needs a square section, got {a.shape}")
        try:
            x = solve_square(a, b, precision)
        except (np.linalg.LinAlgError, ZeroDivisionError):
            LOGGER.warning("singular %dx%d square section, falling back to least squares", a.shape[0], a.shape[1])
            x = solve_least_squares(a, b, precision, allow_rank_deficient=True)
            return SectionSolution(x, _residual(a, x, b, precision), SectionMode.LEAST_SQUARES, fallback=True)
        return SectionSolution(x, _residual(a, x, b, precision), mode)
    x, deficient = _solve_equilibrated(a, b, precision, allow_rank_deficient)
    return SectionSolution(x, _residual(a, x, b, precision), mode, fallback=deficient)


def trailing_norm(x: np.ndarray, fraction: int = 8) -> float:
    """Norm of the last ``len(x) // fraction`` entries (at least two)."""
    count = min(x.shape[0], max(2, x.shape[0] // fraction))
    tail = x[-count:]
    if tail.dtype == object:
        return float(sum(abs(v) ** 2 for v in tail) ** 0.5)
    return float(np.linalg.norm(tail))


def grow_section(
    solve: Callable[[int], SectionSolution],
    m: int,
    *,
    tol: float = 1e-14,
    cap: int = DEFAULT_SECTION_CAP,
) -> SectionSolution:
    """Double the section size until the trailing coefficients fall below ``tol``.

    Args:
        solve: Maps a section size to its solution.
        m: Initial size.
        tol: Bound on :func:`trailing_norm` relative to the solution norm.
        cap: Largest size tried.

    Raises:
        SectionGrowthError: If the cap is reached without meeting ``tol``.
    """
    if m < 2 or cap < m:
        raise ValueError(f"need 2 <= m <= cap, got m={m}, cap={cap}")
    while True:
        try:
            solution = solve(m)
        except RankDeficientError:
            LOGGER.debug("section of size %d is rank deficient", m)
            solution = None
        if solution is not None:
            x = solution.coefficients
            scale = max(trailing_norm(x, 1), 1e-300)
            tail = trailing_norm(x) / scale
            LOGGER.debug("section size %d, relative trailing norm %.3e", m, tail)
            if tail < tol:
                return solution
        else:
            tail = float("inf")
        if 2 * m > cap:
            raise SectionGrowthError(cap, tail)
        m *= 2
