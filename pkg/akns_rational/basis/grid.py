"""Interpolation nodes ``omega_j = T_nu^{-1}(exp(i theta_j))``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from akns_rational.basis.mobius import BasisParams


@dataclass(frozen=True, slots=True, eq=False)
class InterpolationGrid:
    """``n`` equispaced angles and their preimages on the real line.

    ``omegas[0]`` is the infinity sentinel for ``theta_0 = 0``; every other node
    is ``-nu * cot(theta_j / 2)``.
    """

    params: BasisParams
    n: int
    thetas: np.ndarray
    omegas: np.ndarray

    @property
    def n_plus(self) -> int:
        return self.n // 2

    @property
    def n_minus(self) -> int:
        return (self.n - 1) // 2

    @classmethod
    def from_size(cls, params: BasisParams, n: int) -> InterpolationGrid:
        if n < 2:
            raise ValueError(f"grid needs at least 2 nodes, got {n}")
        return _get_grid(params, n)

    def oscillation(self, alpha: float) -> np.ndarray:
        """``exp(i alpha omega_j)`` at every node, with 0 at the infinity node."""
        precision = self.params.precision
        out = precision.zeros(self.n)
        if self.n > 1:
            out[1:] = precision.exp(precision.complex(0, alpha) * self.omegas[1:])
        return out


@lru_cache(maxsize=128)
def _get_grid(params: BasisParams, n: int) -> InterpolationGrid:
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx
        thetas = np.array([2 * ctx.pi * j / n for j in range(n)], dtype=object)
        omegas = np.array([ctx.inf] + [-params.scale * ctx.cot(t / 2) for t in thetas[1:]], dtype=object)
    else:
        thetas = 2 * np.pi * np.arange(n) / n
        omegas = np.empty(n)
        omegas[0] = np.inf
        omegas[1:] = -params.nu / np.tan(thetas[1:] / 2)
    thetas.setflags(write=False)
    omegas.setflags(write=False)
    return InterpolationGrid(params, n, thetas, omegas)
