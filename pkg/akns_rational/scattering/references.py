"""Closed-form scattering data used as oracles.

``SechReference`` is the modulated ``sech`` potential
``q(x) = -i A sech(x) exp(-i gamma A log cosh x)``, ``r = lam conj(q)``, whose
data are ratios of Gamma functions. ``KdvReference`` is ``q = -1``,
``r = U0 sech^2(x)``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from mpmath.ctx_mp import MPContext

from akns_rational.numeric_core.scalar import DOUBLE_DIGITS, Precision


def _log_cosh(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2 * ax)) - math.log(2)


def _sech(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    e = np.exp(-ax)
    return 2 * e / (1 + e * e)


def sample(fn: Callable[[Any], Any], points: Sequence[Any]) -> np.ndarray:
    """Evaluate a scalar closed form at each point, as complex doubles."""
    return np.array([complex(fn(p)) for p in points], dtype=np.complex128)


@dataclass(frozen=True, slots=True)
class SechReference:
    """Gamma-function scattering data of the modulated ``sech`` potential.

    With ``T = sqrt(gamma^2/4 - 1)``, ``w(k) = -ik - i A gamma/2 + 1/2``,
    ``w_+ = -i A (T + gamma/2)`` and ``w_- = i A (T - gamma/2)``::

        a(k) = G(w) G(w - w_- - w_+) / (G(w - w_+) G(w - w_-))
        b(k) = i A^{-1} 2^{-i gamma A} G(w) G(1 - w + w_- + w_+) / (G(w_+) G(w_-))
    """

    amplitude: float
    gamma: float
    lam: int = -1
    digits: int = DOUBLE_DIGITS
    _ctx: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._validate()
        object.__setattr__(self, "_ctx", Precision(self.digits).ctx)

    def _validate(self) -> None:
        if not self.amplitude > 0:
            raise ValueError(f"amplitude must be positive, got {self.amplitude}")
        if self.lam not in (1, -1):
            raise ValueError(f"lam must be +1 or -1, got {self.lam}")

    @property
    def t(self) -> Any:
        ctx = self._ctx
        return ctx.sqrt(ctx.mpc(self.gamma) ** 2 / 4 - 1)

    @property
    def w_plus(self) -> Any:
        return self._ctx.mpc(0, -self.amplitude) * (self.t + self._ctx.mpf(self.gamma) / 2)

    @property
    def w_minus(self) -> Any:
        return self._ctx.mpc(0, self.amplitude) * (self.t - self._ctx.mpf(self.gamma) / 2)

    def w(self, k: Any) -> Any:
        ctx = self._ctx
        return ctx.mpc(0, -1) * ctx.mpc(k) - ctx.mpc(0, self.amplitude * self.gamma / 2) + ctx.mpf(1) / 2

    def a(self, k: Any) -> Any:
        ctx = self._ctx
        w, wp, wm = self.w(k), self.w_plus, self.w_minus
        return ctx.gamma(w) * ctx.gamma(w - wm - wp) * ctx.rgamma(w - wp) * ctx.rgamma(w - wm)

    def a_prime(self, k: Any) -> Any:
        return self._ctx.diff(self.a, self._ctx.mpc(k))

    def b(self, k: Any) -> Any:
        ctx = self._ctx
        w, wp, wm = self.w(k), self.w_plus, self.w_minus
        prefactor = ctx.mpc(0, 1) / self.amplitude * ctx.power(2, ctx.mpc(0, -self.gamma * self.amplitude))
        return prefactor * ctx.gamma(w) * ctx.gamma(1 - w + wm + wp) * ctx.rgamma(wp) * ctx.rgamma(wm)

    def big_a(self, k: Any) -> Any:
        return self._ctx.conj(self.a(self._ctx.conj(self._ctx.mpc(k))))

    def big_b(self, k: Any) -> Any:
        return self.lam * self._ctx.conj(self.b(self._ctx.conj(self._ctx.mpc(k))))

    def rho1(self, k: Any) -> Any:
        return self.b(k) / self.a(k)

    def rho2(self, k: Any) -> Any:
        return self.big_b(k) / self.big_a(k)

    @property
    def n_plus(self) -> int:
        """Number of zeros of ``a`` in the upper half plane."""
        if complex(self.t).real != 0:
            return 0
        return math.floor(0.5 + self.amplitude * abs(complex(self.t)))

    def eigenvalues(self) -> list[Any]:
        """``z_j = A T - i (j - 1/2)``, ``j = 1..n_plus``, upper half plane only."""
        ctx = self._ctx
        return [self.amplitude * self.t - ctx.mpc(0, j - ctx.mpf(1) / 2) for j in range(1, self.n_plus + 1)]

    def norming_constants(self) -> list[tuple[Any, Any, Any, Any]]:
        """``(z, b_j, c_j, d_j)`` at each upper eigenvalue, ``b_j = b(z_j)``."""
        out = []
        for z in self.eigenvalues():
            bj = self.b(z)
            slope = self.a_prime(z)
            out.append((z, bj, bj / slope, -1 / (bj * slope)))
        return out

    def q(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return -1j * self.amplitude * _sech(x) * np.exp(-1j * self.gamma * self.amplitude * _log_cosh(x))

    def r(self, x: np.ndarray) -> np.ndarray:
        return self.lam * np.conj(self.q(x))


@dataclass(frozen=True, slots=True)
class KdvReference:
    """Reflection coefficients for ``q = -1``, ``r = U0 sech^2(x)``.

    With ``s = (U0 + 1/4)^{1/2}``::

        rho1(k) = G(1/2 - ik - s) G(1/2 - ik + s) G(ik) / (G(-ik) G(1/2 + s) G(1/2 - s))
        rho2(k) = conj(rho1(conj k))
    """

    u0: float
    digits: int = DOUBLE_DIGITS
    _ctx: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.u0 > 0:
            raise ValueError(f"U0 must be <= 0, got {self.u0}")
        object.__setattr__(self, "_ctx", Precision(self.digits).ctx)

    def rho1(self, k: Any) -> Any:
        ctx = self._ctx
        k = ctx.mpc(k)
        if self.u0 == 0:
            return ctx.mpc(0)
        s = ctx.sqrt(ctx.mpc(self.u0) + ctx.mpf(1) / 4)
        half = ctx.mpf(1) / 2
        ik = ctx.mpc(0, 1) * k
        # G(ik)/G(-ik) -> -1 as k -> 0
        ratio = ctx.mpc(-1) if k == 0 else ctx.gamma(ik) * ctx.rgamma(-ik)
        return ctx.gamma(half - ik - s) * ctx.gamma(half - ik + s) * ratio * ctx.rgamma(half + s) * ctx.rgamma(half - s)

    def rho2(self, k: Any) -> Any:
        ctx = self._ctx
        return ctx.conj(self.rho1(ctx.conj(ctx.mpc(k))))

    def k_rho1(self, k: Any) -> Any:
        return self._ctx.mpc(k) * self.rho1(k)

    def k_rho2(self, k: Any) -> Any:
        return self._ctx.mpc(k) * self.rho2(k)

    def r(self, x: np.ndarray) -> np.ndarray:
        return self.u0 * _sech(np.asarray(x, dtype=float)) ** 2

    def r_exact(self, x: Any) -> Any:
        """``U0 sech^2(x)`` at the reference's working precision."""
        ctx = self._ctx
        return ctx.mpf(self.u0) * ctx.sech(ctx.mpf(x)) ** 2
