"""Radix-2 discrete Fourier transform over the configurable scalar field.

The rational basis samples functions at ``theta_j = 2*pi*j/n`` and the inverse
solver never needs more than this transform and ``exp``. Lengths that are not
powers of two fall back to a direct O(n^2) sum.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from akns_rational.numeric_core.scalar import DOUBLE, Precision


def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def next_power_of_two(n: int) -> int:
    if n <= 1:
        return 1
    return 1 << (n - 1).bit_length()


@lru_cache(maxsize=1024)
def _bit_reversal(n: int) -> np.ndarray:
    """Read-only permutation taking index ``i`` to its ``log2 n``-bit reversal."""
    bits = n.bit_length() - 1
    index = np.arange(n, dtype=np.intp)
    perm = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        perm |= ((index >> b) & 1) << (bits - 1 - b)
    perm.setflags(write=False)
    return perm


@lru_cache(maxsize=256)
def _stage_twiddles(n: int, inverse: bool, digits: int) -> tuple[np.ndarray, ...]:
    """Roots of unity for each butterfly stage of a size-``n`` transform.

    ``twiddles[stage]`` holds ``exp(sign * 2*pi*i * t / size)`` for
    ``t < size/2`` where ``size = 2**(stage + 1)``.
    """
    precision = Precision(digits)
    sign = 1 if inverse else -1
    twiddles = []
    size = 2
    while size <= n:
        half = size >> 1
        if precision.extended:
            ctx = precision.ctx
            stage = np.array([ctx.expjpi(ctx.mpf(2 * sign * t) / size) for t in range(half)], dtype=object)
        else:
            stage = np.exp(sign * 2j * np.pi * np.arange(half) / size)
        stage.setflags(write=False)
        twiddles.append(stage)
        size <<= 1
    return tuple(twiddles)


def _fft(values: np.ndarray, inverse: bool, precision: Precision) -> np.ndarray:
    """Iterative Cooley-Tukey butterfly, vectorised one stage at a time.

    Args:
        values: Length-n input, n a power of two.
        inverse: Use ``exp(+i...)`` kernels instead of ``exp(-i...)``.
        precision: Scalar field of the input.

    Returns:
        Unscaled transform ``sum_j values_j exp(-+ 2 pi i j k / n)``.
    """
    n = values.shape[0]
    out = values[_bit_reversal(n)].copy()
    if n == 1:
        return out
    for w in _stage_twiddles(n, inverse, precision.digits):
        half = w.shape[0]
        blocks = out.reshape(-1, 2 * half)
        even = blocks[:, :half].copy()
        odd = blocks[:, half:] * w
        blocks[:, :half] = even + odd
        blocks[:, half:] = even - odd
        out = blocks.reshape(n)
    return out


def _direct(values: np.ndarray, inverse: bool, precision: Precision) -> np.ndarray:
    n = values.shape[0]
    sign = 1 if inverse else -1
    idx = np.outer(np.arange(n), np.arange(n)) % n
    if precision.extended:
        ctx = precision.ctx
        roots = np.array([ctx.expjpi(ctx.mpf(2 * sign * t) / n) for t in range(n)], dtype=object)
    else:
        roots = np.exp(sign * 2j * np.pi * np.arange(n) / n)
    return roots[idx] @ values


def dft(samples: np.ndarray, precision: Precision = DOUBLE) -> np.ndarray:
    """Fourier coefficients ``F_k = (1/n) sum_j exp(-i k theta_j) F(theta_j)``.

    Args:
        samples: Values at ``theta_j = 2*pi*j/n``, ``j = 0..n-1``.
        precision: Scalar field of the samples.

    Returns:
        Coefficients ``F_0..F_{n-1}``; index ``n - j`` carries frequency ``-j``.

    Raises:
        ValueError: If ``samples`` is empty.
    """
    values = precision.array(samples)
    n = values.shape[0]
    if n < 1:
        raise ValueError("dft needs at least one sample")
    raw = _fft(values, False, precision) if is_power_of_two(n) else _direct(values, False, precision)
    return raw / n


def idft(coeffs: np.ndarray, precision: Precision = DOUBLE) -> np.ndarray:
    """Samples ``F(theta_j) = sum_k F_k exp(i k theta_j)``; inverse of :func:`dft`."""
    values = precision.array(coeffs)
    n = values.shape[0]
    if n < 1:
        raise ValueError("idft needs at least one coefficient")
    return _fft(values, True, precision) if is_power_of_two(n) else _direct(values, True, precision)
