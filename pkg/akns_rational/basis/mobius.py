"""Moebius map ``T_nu`` between the real line and the unit circle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from akns_rational.numeric_core.scalar import DOUBLE, Precision, Scalar


@dataclass(frozen=True, slots=True)
class BasisParams:
    """Scale ``nu`` of ``T_nu(w) = (w - i nu)/(w + i nu)`` and the scalar field.

    Two expansions can only be combined when their params compare equal.
    """

    nu: float = 1.0
    precision: Precision = field(default=DOUBLE)

    def __post_init__(self) -> None:
        self._validate_nu()

    def _validate_nu(self) -> None:
        if isinstance(self.nu, bool) or not isinstance(self.nu, (int, float)) or not math.isfinite(self.nu) or self.nu <= 0:
            raise ValueError(f"nu must be a positive finite real, got {self.nu!r}")
        object.__setattr__(self, "nu", float(self.nu))

    @property
    def scale(self) -> Scalar:
        """``nu`` in the working field."""
        return self.precision.real(self.nu)


def _map_scalar(fn: Any, omega: Any) -> Any:
    if isinstance(omega, np.ndarray):
        return np.frompyfunc(fn, 1, 1)(omega)
    return fn(omega)


def mobius(params: BasisParams, omega: Any) -> Any:
    """``T_nu(omega)``; ``T_nu(inf) = 1``."""
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx
        i_nu = ctx.mpc(0, params.scale)

        def _one(w: Any) -> Any:
            if ctx.isinf(w):
                return ctx.mpc(1)
            return (w - i_nu) / (w + i_nu)

        return _map_scalar(_one, omega)

    w = np.asarray(omega, dtype=np.complex128)
    with np.errstate(invalid="ignore", divide="ignore"):
        t = (w - 1j * params.nu) / (w + 1j * params.nu)
    t = np.where(np.isinf(w), 1.0 + 0j, t)
    return complex(t) if t.ndim == 0 else t


def mobius_inv(params: BasisParams, z: Any) -> Any:
    """``T_nu^{-1}(z) = -i nu (z + 1)/(z - 1)``; ``z = 1`` maps to infinity."""
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx

        def _one(v: Any) -> Any:
            if v == 1:
                return ctx.inf
            return ctx.mpc(0, -params.scale) * (v + 1) / (v - 1)

        return _map_scalar(_one, z)

    v = np.asarray(z, dtype=np.complex128)
    with np.errstate(invalid="ignore", divide="ignore"):
        w = -1j * params.nu * (v + 1) / (v - 1)
    w = np.where(v == 1, np.inf, w)
    return complex(w) if w.ndim == 0 else w


def eval_R(j: int, alpha: float, params: BasisParams, omega: Any) -> Any:
    """``R_{j,alpha}(omega) = exp(i alpha omega) (T_nu(omega)^j - 1)``, zero at infinity."""
    if j == 0:
        raise ValueError("R_{0,alpha} is identically zero and never used")
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx

        def _one(w: Any) -> Any:
            if ctx.isinf(w):
                return ctx.mpc(0)
            z = (w - ctx.mpc(0, params.scale)) / (w + ctx.mpc(0, params.scale))
            return ctx.exp(ctx.mpc(0, alpha) * w) * (z**j - 1)

        return _map_scalar(_one, omega)

    w = np.asarray(omega, dtype=np.complex128)
    finite = ~np.isinf(w)
    value = np.zeros(w.shape, dtype=np.complex128)
    tt = np.asarray(mobius(params, w))
    value[finite] = np.exp(1j * alpha * w[finite]) * (tt[finite] ** j - 1)
    return complex(value) if value.ndim == 0 else value
