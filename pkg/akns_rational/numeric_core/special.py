"""Generalised Laguerre polynomials of order one and the scaled erfc."""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache
from typing import Any

import numpy as np

from akns_rational.numeric_core.fft import dft
from akns_rational.numeric_core.scalar import DOUBLE, Precision

# Truncation of the Moebius-mapped series used for erfcx at double precision.
_ERFCX_TERMS = 64


def laguerre_gl1(x: Any, m: int) -> np.ndarray:
    """Values ``L_0^(1)(x), ..., L_{m-1}^(1)(x)``.

    Uses ``(n+1) L_{n+1} = (2n + 2 - x) L_n - (n+1) L_{n-1}``. ``x`` may be a
    float, an mpmath number or an array (the result then gains a leading axis).

    Raises:
        ValueError: If ``m < 1``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if isinstance(x, (int, np.integer)):
        x = float(x)
    one = x * 0 + 1
    values = [one]
    if m > 1:
        values.append(2 - x)
    for n in range(1, m - 1):
        values.append(((2 * n + 2 - x) * values[n] - (n + 1) * values[n - 1]) / (n + 1))
    return np.array(values, dtype=None if isinstance(one, (float, complex, np.ndarray, np.number)) else object)


def clenshaw_laguerre(coeffs: Sequence[Any] | np.ndarray, x: Any) -> Any:
    """Evaluate ``sum_j coeffs_j L_j^(1)(x)`` by the backward Clenshaw recurrence.

    With ``L_{n+1} = A_n L_n - L_{n-1}``, ``A_n = (2n + 2 - x)/(n + 1)``, the
    sweep ``b_n = c_n + A_n b_{n+1} - b_{n+2}`` ends in ``b_0``.
    """
    b1 = x * 0
    b2 = x * 0
    for n in range(len(coeffs) - 1, -1, -1):
        b1, b2 = coeffs[n] + (2 * n + 2 - x) / (n + 1) * b1 - b2, b1
    return b1


@lru_cache(maxsize=8)
def _weideman_coefficients(n_terms: int) -> tuple[np.ndarray, float]:
    m = 2 * n_terms
    length = float(np.sqrt(n_terms / np.sqrt(2.0)))
    theta = np.arange(-m + 1, m) * np.pi / m
    t = length * np.tan(theta / 2)
    f = np.concatenate(([0.0], np.exp(-(t**2)) * (length**2 + t**2)))
    a = dft(np.roll(f, f.shape[0] // 2)).real
    coeffs = a[1 : n_terms + 1][::-1].copy()
    coeffs.setflags(write=False)
    return coeffs, length


def _faddeeva_upper(z: np.ndarray) -> np.ndarray:
    """``w(z) = exp(-z^2) erfc(-iz)`` for ``Im z >= 0``, series in ``(L+iz)/(L-iz)``."""
    coeffs, length = _weideman_coefficients(_ERFCX_TERMS)
    denom = length - 1j * z
    p = np.polyval(coeffs, (length + 1j * z) / denom)
    return 2 * p / denom**2 + (1 / np.sqrt(np.pi)) / denom


def erfcx(z: Any, precision: Precision = DOUBLE) -> Any:
    """Scaled complementary error function ``exp(z^2) erfc(z)``.

    At double precision the right half plane uses ``erfcx(z) = w(iz)`` and the
    left half plane the reflection ``erfcx(z) = 2 exp(z^2) - erfcx(-z)``. At
    extended precision mpmath's ``erfc`` is used directly.
    """
    if precision.extended:
        ctx = precision.ctx

        def _scalar(v: Any) -> Any:
            v = ctx.mpc(v)
            return ctx.exp(v * v) * ctx.erfc(v)

        if isinstance(z, np.ndarray):
            return np.frompyfunc(_scalar, 1, 1)(z)
        return _scalar(z)

    arr = np.asarray(z, dtype=np.complex128)
    neg = arr.real < 0
    w = _faddeeva_upper(1j * np.where(neg, -arr, arr))
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.where(neg, 2 * np.exp(arr**2) - w, w)
    if out.ndim == 0:
        return complex(out)
    return out
