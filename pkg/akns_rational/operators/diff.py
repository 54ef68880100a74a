"""Differentiation in the ``R_{j,alpha}`` basis.

``d/dx R_{j,alpha} = (i/nu) [-(j/2) R_{j+1,alpha} + (j + alpha nu) R_{j,alpha} - (j/2) R_{j-1,alpha}]``
with ``R_{0,alpha} = 0``; the operator is tridiagonal in ``j`` and banded in
the interlaced (operator) ordering.
"""

from __future__ import annotations

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, operator_index, operator_position
from akns_rational.basis.mobius import BasisParams


def diff_matrix(params: BasisParams, m: int, alpha: float = 0.0, *, cols: int | None = None) -> np.ndarray:
    """Finite section of the derivative in operator ordering.

    Column ``p`` holds the coefficients of the derivative of ``R_{operator_index(p), alpha}``;
    targets outside the first ``m`` rows are dropped.

    Args:
        params: Basis scale and precision.
        m: Number of rows.
        alpha: Oscillation of the basis functions.
        cols: Number of columns, ``m`` by default.

    Returns:
        An ``m x cols`` matrix.

    Raises:
        ValueError: If ``m < 2``.
    """
    cols = m if cols is None else cols
    if m < 2:
        raise ValueError(f"diff_matrix needs m >= 2, got {m}")
    precision = params.precision
    out = precision.zeros((m, cols))
    scale = precision.complex(0, 1) / params.scale
    shift = params.scale * alpha
    for p in range(cols):
        j = operator_index(p)
        if p < m:
            out[p, p] = scale * (j + shift)
        for target in (j + 1, j - 1):
            if target == 0:
                continue
            row = operator_position(target)
            if row < m:
                out[row, p] = scale * (-j / 2)
    return out


def differentiate(e: RationalExpansion) -> RationalExpansion:
    """Exact derivative; the index range grows by one on each side."""
    precision = e.params.precision
    n_plus = e.n_plus + 1 if e.n_plus else 0
    n_minus = e.n_minus + 1 if e.n_minus else 0
    scale = precision.complex(0, 1) / e.params.scale
    shift = e.params.scale * e.alpha
    out: dict[int, object] = {}
    for k in list(range(1, n_plus + 1)) + list(range(-1, -n_minus - 1, -1)):
        value = (k + shift) * e.coefficient(k)
        if k - 1 != 0:
            value = value - (k - 1) / 2 * e.coefficient(k - 1)
        if k + 1 != 0:
            value = value - (k + 1) / 2 * e.coefficient(k + 1)
        out[k] = scale * value
    return RationalExpansion.from_coefficients(e.params, out, e.alpha).resized(n_plus, n_minus)
