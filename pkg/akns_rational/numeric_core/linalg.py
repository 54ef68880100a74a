"""Dense least squares and eigenvalues at double or extended precision."""

from __future__ import annotations

import logging
from typing import TypeAlias

import numpy as np

from akns_rational.errors import EigenSolveError, RankDeficientError
from akns_rational.numeric_core.scalar import DOUBLE, Precision

LOGGER = logging.getLogger(__name__)

# Row-major rows x cols array of scalars.
DenseMatrix: TypeAlias = np.ndarray


def _mp_matrix(a: np.ndarray, precision: Precision):
    ctx = precision.ctx
    rows = a if a.ndim == 2 else a.reshape(-1, 1)
    return ctx.matrix([[ctx.mpc(v) for v in row] for row in rows])


def _from_mp_vector(x, n: int, precision: Precision) -> np.ndarray:
    return precision.array([x[i] for i in range(n)])


def solve_least_squares(
    a: DenseMatrix,
    b: np.ndarray,
    precision: Precision = DOUBLE,
    *,
    rcond: float | None = None,
    allow_rank_deficient: bool = False,
) -> np.ndarray:
    """Minimise ``||a x - b||_2``.

    Double precision goes through LAPACK's SVD-based ``gelsd``; extended
    precision uses mpmath's Householder QR.

    Args:
        a: ``rows x cols`` matrix with ``rows >= cols``.
        b: Right-hand side of length ``rows``.
        precision: Field of ``a`` and ``b``.
        rcond: Relative singular value cut-off; defaults to ``eps * max(rows, cols)``.
        allow_rank_deficient: Return the minimum-norm solution instead of raising.

    Returns:
        The least-squares solution of length ``cols``.

    Raises:
        ValueError: If ``rows < cols`` or the shapes disagree.
        RankDeficientError: If the numerical rank is below ``cols``.
    """
    rows, cols = a.shape
    if rows < cols:
        raise ValueError(f"least squares needs rows >= cols, got {rows}x{cols}")
    if b.shape[0] != rows:
        raise ValueError(f"right-hand side has {b.shape[0]} entries, expected {rows}")

    if precision.extended:
        x, residual = precision.ctx.qr_solve(_mp_matrix(a, precision), _mp_matrix(b, precision))
        LOGGER.debug("mp least squares %dx%d residual %s", rows, cols, precision.ctx.nstr(residual, 5))
        return _from_mp_vector(x, cols, precision)

    cutoff = rcond if rcond is not None else np.finfo(np.float64).eps * max(rows, cols)
    x, _, rank, _ = np.linalg.lstsq(a, b, rcond=cutoff)
    if rank < cols:
        if not allow_rank_deficient:
            raise RankDeficientError(int(rank), cols)
        LOGGER.debug("least squares rank %d < %d columns, using minimum-norm solution", rank, cols)
    return x


def solve_square(a: DenseMatrix, b: np.ndarray, precision: Precision = DOUBLE) -> np.ndarray:
    """Exact solve of a square system; raises ``np.linalg.LinAlgError`` if singular."""
    if precision.extended:
        x = precision.ctx.lu_solve(_mp_matrix(a, precision), _mp_matrix(b, precision))
        return _from_mp_vector(x, a.shape[1], precision)
    return np.linalg.solve(a, b)


def eig_dense(a: DenseMatrix, precision: Precision = DOUBLE) -> np.ndarray:
    """All eigenvalues of a square matrix, unordered.

    Raises:
        ValueError: If ``a`` is not square.
        EigenSolveError: If the QR iteration fails to converge.
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"eigenvalues need a square matrix, got shape {a.shape}")
    if precision.extended:
        try:
            values = precision.ctx.eig(_mp_matrix(a, precision), left=False, right=False)
        except (ZeroDivisionError, RuntimeError) as exc:
            raise EigenSolveError(str(exc)) from exc
        return precision.array(list(values))
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise EigenSolveError(str(exc)) from exc
