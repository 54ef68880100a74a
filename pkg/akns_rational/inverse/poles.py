"""Reflectionless part of the inverse problem: the residue system for ``M_d``.

``M_d(k; x) = I + sum_j u_j^+ / (k - z_j^+) + sum_j u_j^- / (k - z_j^-)`` where
``u_j^+`` has only a first column ``P_j`` and ``u_j^-`` only a second column
``Q_j``. The residue conditions are the linear system::

    [[I, -C+ Z], [C- Z^T, I]] [P; Q] = [[0, c+], [c-, 0]]

with ``Z_jk = 1 / (z_j^+ - z_k^-)`` and ``c+_j = c_j^+ exp(2i z_j^+ x)``,
``c-_j = c_j^- exp(-2i z_j^- x)``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from akns_rational.errors import PoleSystemError
from akns_rational.numeric_core.linalg import solve_square
from akns_rational.numeric_core.scalar import Precision, Scalar
from akns_rational.scattering.spectrum import DiscreteDatum

LOGGER = logging.getLogger(__name__)

Matrix2 = tuple[tuple[Any, Any], tuple[Any, Any]]


@dataclass(frozen=True, slots=True, eq=False)
class PoleSystem:
    """Solved residue rows at one ``x``; evaluates ``M_d``, its inverse and ``k``-derivatives."""

    x: float
    precision: Precision
    z_plus: np.ndarray
    z_minus: np.ndarray
    plus: np.ndarray
    minus: np.ndarray

    @property
    def is_trivial(self) -> bool:
        return self.z_plus.shape[0] == 0 and self.z_minus.shape[0] == 0

    def _sums(self, k: Any, power: int) -> tuple[Any, Any, Any, Any]:
        zero = 0 * k
        s11, s21, s12, s22 = zero, zero, zero, zero
        for z, (p1, p2) in zip(self.z_plus, self.plus, strict=True):
            w = 1 / (k - z) ** power
            s11, s21 = s11 + p1 * w, s21 + p2 * w
        for z, (q1, q2) in zip(self.z_minus, self.minus, strict=True):
            w = 1 / (k - z) ** power
            s12, s22 = s12 + q1 * w, s22 + q2 * w
        return s11, s12, s21, s22

    def matrix(self, k: Any) -> Matrix2:
        """Entries of ``M_d(k)``; ``k`` may be a scalar or an array."""
        s11, s12, s21, s22 = self._sums(k, 1)
        return ((1 + s11, s12), (s21, 1 + s22))

    def det(self, k: Any) -> Any:
        (m11, m12), (m21, m22) = self.matrix(k)
        return m11 * m22 - m12 * m21

    def inverse(self, k: Any) -> Matrix2:
        (m11, m12), (m21, m22) = self.matrix(k)
        d = m11 * m22 - m12 * m21
        return ((m22 / d, -m12 / d), (-m21 / d, m11 / d))

    def derivative(self, k: Any) -> Matrix2:
        s11, s12, s21, s22 = self._sums(k, 2)
        return ((-s11, -s12), (-s21, -s22))

    def inverse_derivative(self, k: Any) -> Matrix2:
        """``-M^{-1} M' M^{-1}``."""
        inv = self.inverse(k)
        dm = self.derivative(k)
        left = [[sum(inv[i][l] * dm[l][j] for l in range(2)) for j in range(2)] for i in range(2)]
        out = [[-sum(left[i][l] * inv[l][j] for l in range(2)) for j in range(2)] for i in range(2)]
        return ((out[0][0], out[0][1]), (out[1][0], out[1][1]))

    def residue_sum(self) -> Matrix2:
        """``lim k (M_d - I) = sum_j u_j^+ + sum_j u_j^-``."""
        zero = self.precision.complex(0)
        p = self.plus.sum(axis=0) if self.plus.shape[0] else (zero, zero)
        q = self.minus.sum(axis=0) if self.minus.shape[0] else (zero, zero)
        return ((p[0], q[0]), (p[1], q[1]))


def _exponents(zs: np.ndarray, cs: np.ndarray, x: float, sign: int, precision: Precision) -> np.ndarray:
    i = precision.complex(0, 1)
    return np.array([c * precision.exp(sign * 2 * i * z * x) for z, c in zip(zs, cs, strict=True)], dtype=precision.dtype)


def solve_pole_system(
    z_plus: Sequence[Any], c_plus: Sequence[Any], z_minus: Sequence[Any], c_minus: Sequence[Any], x: float, precision: Precision
) -> PoleSystem:
    """Residue rows for eigenvalues ``z^+_j``, ``z^-_j`` with norming constants ``c^+_j``, ``c^-_j``.

    Raises:
        ValueError: If the eigenvalue and constant lists differ in length.
        PoleSystemError: If the block system is singular at ``x``.
    """
    if len(z_plus) != len(c_plus) or len(z_minus) != len(c_minus):
        raise ValueError("each eigenvalue needs exactly one norming constant")
    zp = precision.array(list(z_plus))
    zm = precision.array(list(z_minus))
    n_plus, n_minus = zp.shape[0], zm.shape[0]
    if n_plus + n_minus == 0:
        empty = precision.zeros((0, 2))
        return PoleSystem(x, precision, zp, zm, empty, empty)
    cp = _exponents(zp, precision.array(list(c_plus)), x, 1, precision)
    cm = _exponents(zm, precision.array(list(c_minus)), x, -1, precision)
    n = n_plus + n_minus
    system = precision.zeros((n, n))
    for j in range(n):
        system[j, j] = precision.complex(1)
    for j in range(n_plus):
        for k in range(n_minus):
            zjk = 1 / (zp[j] - zm[k])
            system[j, n_plus + k] = -cp[j] * zjk
            system[n_plus + k, j] = cm[k] * zjk
    rhs = precision.zeros((n, 2))
    rhs[n_plus:, 0] = cm
    rhs[:n_plus, 1] = cp
    try:
        columns = [solve_square(system, rhs[:, c], precision) for c in range(2)]
    except (np.linalg.LinAlgError, ZeroDivisionError) as exc:
        raise PoleSystemError(x) from exc
    solution = precision.zeros((n, 2))
    for c in range(2):
        solution[:, c] = columns[c]
    LOGGER.debug("pole system at x=%s: %d upper, %d lower eigenvalues", x, n_plus, n_minus)
    return PoleSystem(x, precision, zp, zm, solution[:n_plus], solution[n_plus:])


def build_pole_system(plus: Sequence[DiscreteDatum], minus: Sequence[DiscreteDatum], x: float, precision: Precision) -> PoleSystem:
    """:func:`solve_pole_system` for discrete data, using each datum's ``c``."""
    return solve_pole_system([d.z for d in plus], [d.c for d in plus], [d.z for d in minus], [d.c for d in minus], x, precision)


def soliton_reference(z_plus: Any, c_plus: Any, z_minus: Any, c_minus: Any, x: Any) -> tuple[Scalar, Scalar]:
    """``(q(x), r(x))`` for one pair of eigenvalues and no reflection, in closed form.

    With ``e+ = c+ exp(2i z+ x)``, ``e- = c- exp(-2i z- x)`` and
    ``D = 1 + e+ e- / (z+ - z-)^2``: ``q = 2i e- / D`` and ``r = -2i e+ / D``.
    """
    e_plus = c_plus * np.exp(2j * z_plus * x)
    e_minus = c_minus * np.exp(-2j * z_minus * x)
    d = 1 + e_plus * e_minus / (z_plus - z_minus) ** 2
    return 2j * e_minus / d, -2j * e_plus / d
