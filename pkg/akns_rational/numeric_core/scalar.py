"""Scalar field used throughout the package.

Machine double precision stores values in ``complex128`` arrays. Extended
precision stores ``mpmath`` ``mpc`` objects in ``object`` arrays, each
precision owning a private :class:`mpmath.ctx_mp.MPContext` so that sessions
with different digit counts never share global state.

Only arithmetic, ``exp`` and the FFT built on top of them are needed by the
inverse solver, so the helpers here stay small.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, TypeAlias

import numpy as np
from mpmath.ctx_mp import MPContext

from akns_rational.errors import PrecisionMismatchError

Scalar: TypeAlias = Any
DOUBLE_DIGITS = 16


@lru_cache(maxsize=32)
def _get_context(digits: int) -> MPContext:
    ctx = MPContext()
    ctx.dps = digits
    return ctx


@dataclass(frozen=True, slots=True)
class Precision:
    """Decimal digits of the working field; 16 means IEEE double."""

    digits: int = DOUBLE_DIGITS

    def __post_init__(self) -> None:
        self._validate_digits()

    def _validate_digits(self) -> None:
        if isinstance(self.digits, bool) or not isinstance(self.digits, int) or self.digits < DOUBLE_DIGITS:
            raise ValueError(f"digits must be an integer >= {DOUBLE_DIGITS}, got {self.digits!r}")

    @property
    def extended(self) -> bool:
        return self.digits > DOUBLE_DIGITS

    @property
    def ctx(self) -> MPContext:
        return _get_context(self.digits)

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(object) if self.extended else np.dtype(np.complex128)

    @property
    def eps(self) -> float:
        if self.extended:
            return 10.0 ** (1 - self.digits)
        return float(np.finfo(np.float64).eps)

    @property
    def pi(self) -> Scalar:
        return self.ctx.pi if self.extended else np.pi

    def ensure_same(self, other: Precision) -> None:
        if self.digits != other.digits:
            raise PrecisionMismatchError(f"cannot mix {self.digits}-digit and {other.digits}-digit values")

    def real(self, value: Any) -> Scalar:
        return self.ctx.mpf(value) if self.extended else float(value)

    def complex(self, value: Any, imag: Any = 0) -> Scalar:
        if self.extended:
            if isinstance(value, complex):
                return self.ctx.mpc(value) + self.ctx.mpc(0, imag)
            return self.ctx.mpc(value, imag)
        return complex(value) + 1j * float(imag)

    def array(self, values: Any) -> np.ndarray:
        """Convert ``values`` to a 1-d or n-d array of this precision."""
        if not self.extended:
            return np.asarray(values, dtype=np.complex128)
        raw = np.asarray(values, dtype=object)
        converted = np.frompyfunc(self.ctx.mpc, 1, 1)(raw)
        return np.asarray(converted, dtype=object).reshape(raw.shape)

    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray:
        if self.extended:
            return np.full(shape, self.ctx.mpc(0), dtype=object)
        return np.zeros(shape, dtype=np.complex128)

    def _map(self, fn: Callable[[Any], Any], z: Any) -> Any:
        return np.frompyfunc(fn, 1, 1)(z)

    def exp(self, z: Any) -> Any:
        return self._map(self.ctx.exp, z) if self.extended else np.exp(z)

    def sqrt(self, z: Any) -> Any:
        return self._map(self.ctx.sqrt, z) if self.extended else np.emath.sqrt(z)

    def log(self, z: Any) -> Any:
        return self._map(self.ctx.log, z) if self.extended else np.emath.log(z)

    def conj(self, z: Any) -> Any:
        if isinstance(z, np.ndarray):
            return np.conj(z)
        return z.conjugate()

    def vdot(self, a: np.ndarray, b: np.ndarray) -> Scalar:
        """Euclidean inner product, conjugate-linear in ``a``."""
        if not self.extended:
            return complex(np.vdot(a, b))
        if a.size == 0:
            return self.ctx.mpc(0)
        return self.ctx.fsum(x.conjugate() * y for x, y in zip(a.ravel(), b.ravel(), strict=True))

    def norm(self, a: np.ndarray) -> Scalar:
        if not self.extended:
            return float(np.linalg.norm(a))
        return self.ctx.sqrt(self.ctx.fsum(abs(x) ** 2 for x in a.ravel()))

    def to_complex(self, z: Any) -> complex:
        return complex(z)


DOUBLE = Precision()
