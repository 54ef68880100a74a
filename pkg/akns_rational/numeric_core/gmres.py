"""GMRES on an abstract inner-product space.

Elements only need ``+``, ``-`` and multiplication by a scalar; the inner
product is supplied by the caller. No restarts and no preconditioning: Krylov
dimensions stay small for the singular integral equations solved here.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any, Generic, Protocol, TypeVar

from akns_rational.numeric_core.scalar import DOUBLE, Precision, Scalar

LOGGER = logging.getLogger(__name__)


class KrylovElement(Protocol):
    def __add__(self, other: Any) -> Any: ...

    def __sub__(self, other: Any) -> Any: ...

    def __mul__(self, scalar: Any) -> Any: ...


V = TypeVar("V", bound=KrylovElement)


class GMRESStatus(Enum):
    CONVERGED = "converged"
    BREAKDOWN = "breakdown"  # invariant Krylov space reached above tolerance
    MAXITER = "maxiter"


@dataclass(frozen=True, slots=True)
class GMRESResult(Generic[V]):
    """Solution and the residual norm after each iteration.

    ``residuals[0]`` is the norm of the right-hand side.
    """

    solution: V
    residuals: tuple[float, ...]
    status: GMRESStatus

    @property
    def iterations(self) -> int:
        return len(self.residuals) - 1

    @property
    def converged(self) -> bool:
        return self.status is GMRESStatus.CONVERGED

    @property
    def residual(self) -> float:
        return self.residuals[-1]


def _givens(a: Scalar, b: Scalar, precision: Precision) -> tuple[Scalar, Scalar, Scalar]:
    """Complex rotation with ``[c, s; -conj(s), c] @ [a; b] = [r; 0]``, ``c`` real."""
    abs_a = abs(a)
    if abs_a == 0:
        return 0 * abs_a, 1 + 0 * a, b
    r = precision.sqrt(abs_a**2 + abs(b) ** 2)
    if not precision.extended:
        r = float(r.real)
    phase = a / abs_a
    return abs_a / r, phase * precision.conj(b) / r, phase * r


def gmres(
    apply: Callable[[V], V],
    rhs: V,
    *,
    inner: Callable[[V, V], Scalar],
    tol: float = 1e-12,
    maxiter: int = 200,
    precision: Precision = DOUBLE,
) -> GMRESResult[V]:
    """Solve ``apply(x) = rhs`` from the zero initial iterate.

    Arnoldi with modified Gram-Schmidt builds the Hessenberg matrix column by
    column; Givens rotations keep its least-squares problem triangular so the
    residual norm is available without forming the iterate.

    Args:
        apply: Linear operator on the element space.
        rhs: Right-hand side.
        inner: Inner product, conjugate-linear in its first argument.
        tol: Relative residual target ``||apply(x) - rhs|| <= tol * ||rhs||``.
        maxiter: Largest Krylov dimension.
        precision: Field of the scalars returned by ``inner``.

    Returns:
        A :class:`GMRESResult`; non-convergence is reported through ``status``.

    Raises:
        ValueError: If ``tol`` is not positive or ``maxiter < 1``.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if maxiter < 1:
        raise ValueError(f"maxiter must be >= 1, got {maxiter}")

    def norm(v: V) -> Scalar:
        value = inner(v, v).real
        return precision.sqrt(value).real if not precision.extended else precision.ctx.sqrt(value)

    beta = norm(rhs)
    if beta == 0:
        return GMRESResult(rhs * 0, (0.0,), GMRESStatus.CONVERGED)

    basis: list[V] = [rhs * (1 / beta)]
    columns: list[list[Scalar]] = []
    cs: list[Scalar] = []
    sn: list[Scalar] = []
    g: list[Scalar] = [beta + 0j if not precision.extended else precision.ctx.mpc(beta)]
    residuals = [float(beta)]
    status = GMRESStatus.MAXITER

    for j in range(maxiter):
        w = apply(basis[j])
        w_norm = norm(w)
        column = []
        for v in basis:
            h = inner(v, w)
            w = w - v * h
            column.append(h)
        h_next = norm(w)

        for i in range(j):
            a, b = column[i], column[i + 1]
            column[i] = cs[i] * a + sn[i] * b
            column[i + 1] = -precision.conj(sn[i]) * a + cs[i] * b
        c, s, r = _givens(column[j], h_next, precision)
        column[j] = r
        cs.append(c)
        sn.append(s)
        g.append(-precision.conj(s) * g[j])
        g[j] = c * g[j]
        columns.append(column)
        residuals.append(float(abs(g[j + 1])))

        if residuals[-1] <= tol * residuals[0]:
            status = GMRESStatus.CONVERGED
            break
        if h_next <= precision.eps * w_norm:
            status = GMRESStatus.BREAKDOWN
            if abs(r) <= precision.eps * w_norm:
                # operator singular on the Krylov space; last direction adds nothing
                columns.pop()
            break
        basis.append(w * (1 / h_next))

    k = len(columns)
    y: list[Scalar] = [0] * k
    for i in range(k - 1, -1, -1):
        acc = g[i]
        for col in range(i + 1, k):
            acc = acc - columns[col][i] * y[col]
        y[i] = acc / columns[i][i] if columns[i][i] != 0 else 0 * acc
    solution = rhs * 0
    for i in range(k):
        solution = solution + basis[i] * y[i]

    LOGGER.debug("gmres %s after %d iterations, residual %.3e", status.value, k, residuals[-1])
    return GMRESResult(solution, tuple(residuals), status)
