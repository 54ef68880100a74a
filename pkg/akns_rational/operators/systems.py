"""Assembly of the Fourier-ODE, forward scattering and eigenvalue sections.

All matrices use operator ordering ``[R_1, R_-1, R_2, R_-2, ...]`` for rows and
for the expansion unknowns; driver weights sit in their own column.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion
from akns_rational.operators.diff import diff_matrix
from akns_rational.operators.finite_section import parity_size
from akns_rational.operators.mult import mult_operator


def _identity(rows: int, cols: int, precision: Any) -> np.ndarray:
    out = precision.zeros((rows, cols))
    for p in range(min(rows, cols)):
        out[p, p] = precision.complex(1)
    return out


def assemble_fourier_ode(
    q: RationalExpansion, driver: RationalExpansion, k: Any, m: int, *, size: int | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Square section of ``[g | D - ik I] [c_0; c] = q``.

    The section is ``S x S`` with ``S`` from :func:`parity_size` unless ``size``
    overrides it; column 0 holds the driver coefficients and the remaining
    ``S - 1`` columns the shifted derivative.

    Raises:
        ValueError: If ``m < 4`` or ``size < 4``.
    """
    if m < 4:
        raise ValueError(f"fourier ODE section needs m >= 4, got {m}")
    if size is not None and size < 4:
        raise ValueError(f"fourier ODE section needs size >= 4, got {size}")
    q._check(driver)
    params = q.params
    precision = params.precision
    size = parity_size(m, k) if size is None else size
    ik = precision.complex(0, 1) * k
    matrix = precision.zeros((size, size))
    matrix[:, 0] = driver.operator_vector(size)
    matrix[:, 1:] = diff_matrix(params, size, cols=size - 1) - ik * _identity(size, size - 1, precision)
    return matrix, q.operator_vector(size)


def assemble_scattering_system(
    q: RationalExpansion,
    r: RationalExpansion,
    q_phi: RationalExpansion,
    r_phi: RationalExpansion,
    driver: RationalExpansion,
    k: Any,
    cols: int,
    rows: int | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Block section for the first column of the Jost-type solution.

    Unknowns are ``[u_0 | u_j | v_0 | v_j]`` with ``cols`` operator columns per
    block; each block has ``rows`` rows (``cols + 1`` by default)::

        [ g         | D       | -(q phi_2k) | -M(q)       ]   [0]
        [ -(r phi_0)| -M(r)   | g           | D - 2ik I   ] = [r]

    ``q_phi`` and ``r_phi`` are the expansions of ``q(x) phi(x; 2k)`` and
    ``r(x) phi(x; 0)``.
    """
    rows = cols + 1 if rows is None else rows
    if cols < 7 or rows < cols + 1:
        raise ValueError(f"scattering section needs cols >= 7 and rows > cols, got rows={rows}, cols={cols}")
    for other in (r, q_phi, r_phi, driver):
        q._check(other)
    params = q.params
    precision = params.precision
    d = diff_matrix(params, rows, cols=cols)
    two_ik = precision.complex(0, 2) * k
    width = 2 * (cols + 1)
    matrix = precision.zeros((2 * rows, width))
    g = driver.operator_vector(rows)

    matrix[:rows, 0] = g
    matrix[:rows, 1 : cols + 1] = d
    matrix[:rows, cols + 1] = -q_phi.operator_vector(rows)
    matrix[:rows, cols + 2 :] = -mult_operator(q, rows, cols=cols)

    matrix[rows:, 0] = -r_phi.operator_vector(rows)
    matrix[rows:, 1 : cols + 1] = -mult_operator(r, rows, cols=cols)
    matrix[rows:, cols + 1] = g
    matrix[rows:, cols + 2 :] = d - two_ik * _identity(rows, cols, precision)

    rhs = precision.zeros(2 * rows)
    rhs[rows:] = r.operator_vector(rows)
    return matrix, rhs


def assemble_eigenproblem(q: RationalExpansion, r: RationalExpansion, n: int) -> np.ndarray:
    """``[[i D, -i M(q)], [i M(r), -i D]]`` with ``n x n`` blocks."""
    if n < 2:
        raise ValueError(f"eigenproblem needs n >= 2, got {n}")
    q._check(r)
    precision = q.params.precision
    i = precision.complex(0, 1)
    d = diff_matrix(q.params, n)
    matrix = precision.zeros((2 * n, 2 * n))
    matrix[:n, :n] = i * d
    matrix[:n, n:] = -i * mult_operator(q, n)
    matrix[n:, :n] = i * mult_operator(r, n)
    matrix[n:, n:] = -i * d
    return matrix
