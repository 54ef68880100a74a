"""Multiplication of expansions.

Products use ``R_{j,a} R_{l,b} = R_{j+l,a+b} - R_{j,a+b} - R_{l,a+b}``, so the
product of two finite expansions is again finite and is recovered exactly by
interpolating pointwise products on a large enough grid.
"""

from __future__ import annotations

from typing import TypeAlias

import numpy as np

from akns_rational.basis.bundle import BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion, from_grid_values, grid_size_for

BundleMatrix: TypeAlias = tuple[tuple[OscillatoryBundle, OscillatoryBundle], tuple[OscillatoryBundle, OscillatoryBundle]]


def _positions(indices: np.ndarray) -> np.ndarray:
    return np.where(indices > 0, 2 * indices - 2, -2 * indices - 1)


def mult_operator(c: RationalExpansion, m: int, *, cols: int | None = None) -> np.ndarray:
    """Matrix of ``g -> (sum_j c_j R_j) g`` in operator ordering.

    Column ``l`` is ``sum_j c_j (e_{j+l} - e_j) - (sum_j c_j) e_l``; rows past
    ``m`` are dropped. This is the interlaced section with the ``R_0`` row and
    column removed.
    """
    cols = m if cols is None else cols
    precision = c.params.precision
    out = precision.zeros((m, cols))
    coeffs = c.coefficients()
    if not coeffs:
        return out
    js = np.array(list(coeffs), dtype=np.int64)
    values = precision.array(list(coeffs.values()))
    total = c.coefficient_sum()
    own = _positions(js)
    own_mask = own < m
    for p in range(cols):
        l_index = p // 2 + 1 if p % 2 == 0 else -(p // 2 + 1)
        targets = js + l_index
        mask = targets != 0
        rows = _positions(targets[mask])
        keep = rows < m
        out[rows[keep], p] += values[mask][keep]
        out[own[own_mask], p] -= values[own_mask]
        if p < m:
            out[p, p] -= total
    return out


def multiply(a: RationalExpansion, b: RationalExpansion) -> RationalExpansion:
    """Exact product with oscillation ``a.alpha + b.alpha``.

    Raises:
        PrecisionMismatchError: If the basis params differ.
    """
    a._check(b)
    alpha = a.alpha + b.alpha
    n_plus = a.n_plus + b.n_plus
    n_minus = a.n_minus + b.n_minus
    if (a.n_plus + a.n_minus) == 0 or (b.n_plus + b.n_minus) == 0:
        return RationalExpansion.zero(a.params, alpha)
    n = grid_size_for(n_plus, n_minus)
    values = a.values_on_grid(n) * b.values_on_grid(n)
    return from_grid_values(values, a.params, alpha, keep=(n_plus, n_minus))


def bundle_product(u: OscillatoryBundle, v: OscillatoryBundle, n_work: int | None = None) -> OscillatoryBundle:
    """Pointwise product of two bundles; every pair of blocks is multiplied."""
    u._check(v)
    terms = [multiply(a, b) for a in u.blocks for b in v.blocks]
    out = OscillatoryBundle.of(u.params, terms, max(u.dropped, v.dropped))
    return out.truncated(n_work) if n_work is not None else out


def row_times_matrix(row: BundleRow, matrix: BundleMatrix, n_work: int | None = None) -> BundleRow:
    """``[u1, u2] @ [[m11, m12], [m21, m22]]`` with bundle entries."""
    (m11, m12), (m21, m22) = matrix
    first = bundle_product(row.first, m11, n_work) + bundle_product(row.second, m21, n_work)
    second = bundle_product(row.first, m12, n_work) + bundle_product(row.second, m22, n_work)
    return BundleRow(first, second)
