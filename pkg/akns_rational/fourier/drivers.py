"""Driver functions ``f`` for the Levin-type transform and their closed forms.

A driver enters the Fourier ODE through ``phi(x; k, f) = int_{-inf}^x e^{ik(x-s)} f(s) ds``,
whose large-``x`` behaviour is ``e^{ikx} f_hat(k)``. Two drivers are built in:
the rational ``4 nu^2/(nu^2 + x^2) = -R_1 - R_-1`` and the Gaussian ``exp(-x^2)``.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import DeconvolutionError
from akns_rational.numeric_core.scalar import DOUBLE, Precision
from akns_rational.numeric_core.special import erfcx

DECONVOLUTION_FLOOR = 1e-300
DEFAULT_DRIVER_SIZE = 512


class DriverKind(Enum):
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"
    CUSTOM = "custom"


@dataclass(frozen=True, slots=True, eq=False)
class Driver:
    """Coefficients of ``f`` in ``{R_{j,0}}`` plus its transform and ``phi`` when known."""

    kind: DriverKind
    coefficients: RationalExpansion
    transform: Callable[[Any], Any]
    phi: Callable[[Any, Any], Any] | None = None
    complex_k: bool = False

    @property
    def params(self) -> BasisParams:
        return self.coefficients.params

    @classmethod
    def rational(cls, params: BasisParams) -> Driver:
        precision = params.precision
        coefficients = RationalExpansion.from_coefficients(params, {1: -1, -1: -1})
        nu = params.scale

        def transform(k: Any) -> Any:
            if precision.extended:
                return 4 * precision.pi * nu * precision.ctx.exp(-nu * abs(k))
            return 4 * np.pi * nu * np.exp(-nu * np.abs(k))

        return cls(DriverKind.RATIONAL, coefficients, transform)

    @classmethod
    def gaussian(cls, params: BasisParams, n: int = DEFAULT_DRIVER_SIZE) -> Driver:
        precision = params.precision
        coefficients = interpolate(lambda w: precision.exp(-(w * w)), n, params=params)

        def transform(k: Any) -> Any:
            return gaussian_transform(k, precision)

        def phi(x: Any, k: Any) -> Any:
            return phi_gauss(x, k, precision)

        return cls(DriverKind.GAUSSIAN, coefficients, transform, phi, complex_k=True)

    @classmethod
    def custom(
        cls,
        coefficients: RationalExpansion,
        transform: Callable[[Any], Any],
        phi: Callable[[Any, Any], Any] | None = None,
        *,
        complex_k: bool = False,
    ) -> Driver:
        return cls(DriverKind.CUSTOM, coefficients, transform, phi, complex_k)

    def transform_at(self, k: Any) -> Any:
        """``f_hat(k)``, checked against the deconvolution floor.

        Raises:
            ValueError: If ``k`` is complex and the driver has no analytic continuation.
            DeconvolutionError: If ``|f_hat(k)| < 1e-300``.
        """
        if not self.complex_k and complex(k).imag != 0:
            raise ValueError(f"{self.kind.value} driver only supports real k, got {k}")
        value = self.transform(k.real if not self.complex_k and isinstance(k, complex) else k)
        if abs(value) < DECONVOLUTION_FLOOR:
            raise DeconvolutionError(k, value)
        return value


def gaussian_transform(k: Any, precision: Precision = DOUBLE) -> Any:
    """``int e^{-iks} e^{-s^2} ds = sqrt(pi) exp(-k^2/4)``."""
    if precision.extended:
        ctx = precision.ctx
        return ctx.sqrt(ctx.pi) * ctx.exp(-ctx.mpc(k) ** 2 / 4)
    return np.sqrt(np.pi) * np.exp(-np.asarray(k, dtype=complex) ** 2 / 4)


def phi_gauss(x: Any, k: Any, precision: Precision = DOUBLE) -> Any:
    """``phi(x; k, exp(-s^2)) = e^{ikx} e^{-k^2/4} (sqrt(pi)/2) (1 + erf(x + ik/2))``.

    Evaluated as ``(sqrt(pi)/2) e^{-x^2} erfcx(-x - ik/2)`` for ``x < 0`` and, for
    ``x >= 0``, as ``sqrt(pi) e^{ikx - k^2/4} - (sqrt(pi)/2) e^{-x^2} erfcx(x + ik/2)``
    so that neither branch overflows.
    """
    if precision.extended:
        ctx = precision.ctx
        k = ctx.mpc(k)

        def _scalar(v: Any) -> Any:
            v = ctx.mpf(ctx.re(v))
            half = ctx.sqrt(ctx.pi) / 2
            if v < 0:
                return half * ctx.exp(-v * v) * erfcx(-v - 1j * k / 2, precision)
            return 2 * half * ctx.exp(1j * k * v - k * k / 4) - half * ctx.exp(-v * v) * erfcx(v + 1j * k / 2, precision)

        if isinstance(x, np.ndarray):
            return np.frompyfunc(_scalar, 1, 1)(x)
        return _scalar(x)

    xs = np.asarray(x, dtype=float)
    kk = complex(k)
    half = np.sqrt(np.pi) / 2
    neg = xs < 0
    arg = np.where(neg, -xs - 0.5j * kk, xs + 0.5j * kk)
    tail = half * np.exp(-(xs**2)) * erfcx(arg)
    out = np.where(neg, tail, 2 * half * np.exp(1j * kk * xs - kk * kk / 4) - tail)
    return complex(out) if out.ndim == 0 else out
