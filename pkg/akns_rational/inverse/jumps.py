"""Triangular factors of the jump matrix as bundles.

``J = U L^{-1}`` with ``U = [[1, -rho2 e^{-2ikx}], [0, 1]]`` and
``L = [[1, 0], [-rho1 e^{2ikx}, 1]]``. Bundles vanish at infinity, so only the
parts ``U - I`` and ``L - I`` are stored. With poles both factors are conjugated
by ``M_d``; those entries are sampled on a grid and interpolated with
oscillation ``+-2x``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from akns_rational.basis.bundle import BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import RationalExpansion, from_grid_values
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams
from akns_rational.inverse.poles import PoleSystem
from akns_rational.operators.mult import BundleMatrix

LOGGER = logging.getLogger(__name__)


def _bundle(e: RationalExpansion) -> OscillatoryBundle:
    return OscillatoryBundle.of(e.params, [e])


def _corner(value: OscillatoryBundle, params: BasisParams, row: int, col: int) -> BundleMatrix:
    zero = OscillatoryBundle.zero(params)
    entries = [[zero, zero], [zero, zero]]
    entries[row][col] = value
    return ((entries[0][0], entries[0][1]), (entries[1][0], entries[1][1]))


@dataclass(frozen=True, slots=True, eq=False)
class JumpFactors:
    """``lower = L - I`` and ``upper = U - I`` (or their ``M_d``-conjugates) at one ``x``."""

    x: float
    lower: BundleMatrix
    upper: BundleMatrix

    @property
    def params(self) -> BasisParams:
        return self.lower[0][0].params

    def rhs_row(self, row: int) -> BundleRow:
        """Row ``row`` of ``U - L``."""
        return BundleRow(self.upper[row][0] - self.lower[row][0], self.upper[row][1] - self.lower[row][1])

    def jump(self, k: float) -> np.ndarray:
        """``U L^{-1}`` at a real ``k``, from the stored bundles."""
        lower = np.array([[complex(self.lower[i][j].evaluate(k)) for j in range(2)] for i in range(2)]) + np.eye(2)
        upper = np.array([[complex(self.upper[i][j].evaluate(k)) for j in range(2)] for i in range(2)]) + np.eye(2)
        return upper @ np.linalg.inv(lower)


def _dressed_entries(
    rho: RationalExpansion, poles: PoleSystem, column: int, row: int, alpha: float, grid: InterpolationGrid
) -> list[list[OscillatoryBundle]]:
    """``-rho e^{i alpha k} M_d[:, column] M_d^{-1}[row, :]`` entry by entry."""
    params = rho.params
    omegas = grid.omegas[1:]
    m = poles.matrix(omegas)
    inv = poles.inverse(omegas)
    base = rho.values_on_grid(grid.n)
    out: list[list[OscillatoryBundle]] = []
    for i in range(2):
        entries = []
        for j in range(2):
            values = params.precision.zeros(grid.n)
            values[1:] = -base[1:] * m[i][column] * inv[row][j]
            e = from_grid_values(values, params, alpha)
            scale = float(e.norm())
            entries.append(_bundle(e.trimmed(params.precision.eps * scale)))
        out.append(entries)
    return out


def jump_factors(rho1: RationalExpansion, rho2: RationalExpansion, x: float, poles: PoleSystem | None = None, grid_size: int = 512) -> JumpFactors:
    """Factors ``L - I`` and ``U - I`` at ``x``, dressed by ``poles`` when given.

    Args:
        rho1: Expansion of ``rho1`` (``alpha = 0``).
        rho2: Expansion of ``rho2``.
        x: Position; the oscillations are ``+-2x``.
        poles: Residue system at the same ``x``; ``None`` or a trivial system
            gives the undressed factors exactly.
        grid_size: Nodes used to re-interpolate dressed entries.
    """
    rho1._check(rho2)
    params = rho1.params
    if poles is None or poles.is_trivial:
        lower = _corner(_bundle(-rho1.with_alpha(2 * x)), params, 1, 0)
        upper = _corner(_bundle(-rho2.with_alpha(-2 * x)), params, 0, 1)
        return JumpFactors(x, lower, upper)
    grid = InterpolationGrid.from_size(params, grid_size)
    lo = _dressed_entries(rho1, poles, 1, 0, 2 * x, grid)
    up = _dressed_entries(rho2, poles, 0, 1, -2 * x, grid)
    LOGGER.debug("dressed jump factors at x=%s on %d nodes", x, grid_size)
    return JumpFactors(x, ((lo[0][0], lo[0][1]), (lo[1][0], lo[1][1])), ((up[0][0], up[0][1]), (up[1][0], up[1][1])))


def derivative_factors(k_rho1: RationalExpansion, k_rho2: RationalExpansion, x: float) -> JumpFactors:
    """``d/dx`` of the undressed ``L - I`` and ``U - I``: entries ``-2i k rho1 e^{2ikx}`` and ``2i k rho2 e^{-2ikx}``."""
    k_rho1._check(k_rho2)
    params = k_rho1.params
    two_i = params.precision.complex(0, 2)
    lower = _corner(_bundle((k_rho1 * -two_i).with_alpha(2 * x)), params, 1, 0)
    upper = _corner(_bundle((k_rho2 * two_i).with_alpha(-2 * x)), params, 0, 1)
    return JumpFactors(x, lower, upper)
