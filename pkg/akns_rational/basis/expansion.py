"""Finite expansions in the oscillatory rational basis ``R_{j,alpha}``.

Coefficients are stored as two arrays, ``pos[j-1] = c_j`` and
``neg[j-1] = c_{-j}``; ``c_0`` is never stored since ``R_{0,alpha} = 0``.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams, mobius
from akns_rational.errors import PrecisionMismatchError
from akns_rational.numeric_core.fft import dft, idft, next_power_of_two
from akns_rational.numeric_core.scalar import Scalar


def normalize_alpha(alpha: float) -> float:
    """Oscillation keys are plain floats with ``-0.0`` folded into ``0.0``."""
    return float(alpha) + 0.0


def interlace(coeffs: Mapping[int, Scalar]) -> list[Scalar]:
    """``{j: c_j}`` to ``[c_0, c_1, c_-1, c_2, c_-2, ...]``, zero-filled."""
    if not coeffs:
        return []
    size = max(2 * j - 1 if j > 0 else -2 * j for j in coeffs) + 1
    out: list[Scalar] = [0] * size
    for j, c in coeffs.items():
        out[2 * j - 1 if j > 0 else -2 * j] = c
    return out


def deinterlace(values: Sequence[Scalar]) -> dict[int, Scalar]:
    out: dict[int, Scalar] = {}
    for p, c in enumerate(values):
        out[(p + 1) // 2 if p % 2 else -(p // 2)] = c
    return out


def operator_position(j: int) -> int:
    """Row/column of ``R_j`` in operator matrices (interlaced order with ``c_0`` removed)."""
    if j == 0:
        raise ValueError("index 0 has no operator position")
    return 2 * j - 2 if j > 0 else -2 * j - 1


def operator_index(p: int) -> int:
    return p // 2 + 1 if p % 2 == 0 else -(p // 2 + 1)


def _horner(coeffs: np.ndarray, z: Any) -> Any:
    """``sum_{j>=1} coeffs[j-1] z^j``."""
    acc = z * 0
    for c in coeffs[::-1]:
        acc = (acc + c) * z
    return acc


def _both_blocks(e: RationalExpansion, z: Any) -> Any:
    value = z * 0 - e.coefficient_sum()
    if e.n_plus:
        value = value + _horner(e.pos, z)
    if e.n_minus:
        value = value + _horner(e.neg, 1 / z)
    return value


@dataclass(frozen=True, slots=True, eq=False)
class RationalExpansion:
    """``sum_j c_j R_{j,alpha}`` for ``-len(neg) <= j <= len(pos)``, ``j != 0``."""

    params: BasisParams
    alpha: float
    pos: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        precision = self.params.precision
        object.__setattr__(self, "alpha", normalize_alpha(self.alpha))
        object.__setattr__(self, "pos", precision.array(self.pos).reshape(-1))
        object.__setattr__(self, "neg", precision.array(self.neg).reshape(-1))

    @classmethod
    def zero(cls, params: BasisParams, alpha: float = 0.0) -> RationalExpansion:
        empty = params.precision.zeros(0)
        return cls(params, alpha, empty, empty)

    @classmethod
    def from_coefficients(cls, params: BasisParams, coeffs: Mapping[int, Scalar], alpha: float = 0.0) -> RationalExpansion:
        if 0 in coeffs:
            raise ValueError("coefficient of R_0 cannot be set")
        n_plus = max((j for j in coeffs if j > 0), default=0)
        n_minus = max((-j for j in coeffs if j < 0), default=0)
        pos = params.precision.zeros(n_plus)
        neg = params.precision.zeros(n_minus)
        for j, c in coeffs.items():
            if j > 0:
                pos[j - 1] = c
            else:
                neg[-j - 1] = c
        return cls(params, alpha, pos, neg)

    @classmethod
    def from_operator_vector(cls, params: BasisParams, vector: np.ndarray, alpha: float = 0.0) -> RationalExpansion:
        """Inverse of :meth:`operator_vector`."""
        return cls(params, alpha, vector[0::2], vector[1::2])

    @property
    def n_plus(self) -> int:
        return self.pos.shape[0]

    @property
    def n_minus(self) -> int:
        return self.neg.shape[0]

    def coefficient(self, j: int) -> Scalar:
        if j > 0 and j <= self.n_plus:
            return self.pos[j - 1]
        if j < 0 and -j <= self.n_minus:
            return self.neg[-j - 1]
        return self.params.precision.complex(0)

    def coefficients(self) -> dict[int, Scalar]:
        out = {j + 1: c for j, c in enumerate(self.pos)}
        out.update({-(j + 1): c for j, c in enumerate(self.neg)})
        return out

    def coefficient_sum(self) -> Scalar:
        return self.pos.sum() + self.neg.sum()

    def operator_vector(self, m: int | None = None) -> np.ndarray:
        """Coefficients in operator order ``[c_1, c_-1, c_2, c_-2, ...]``, cut or padded to ``m``."""
        size = 2 * max(self.n_plus, self.n_minus) if m is None else m
        out = self.params.precision.zeros(size)
        p_count = min(self.n_plus, (size + 1) // 2)
        n_count = min(self.n_minus, size // 2)
        out[0 : 2 * p_count : 2] = self.pos[:p_count]
        out[1 : 2 * n_count : 2] = self.neg[:n_count]
        return out

    def with_alpha(self, alpha: float) -> RationalExpansion:
        return RationalExpansion(self.params, alpha, self.pos, self.neg)

    def resized(self, n_plus: int, n_minus: int) -> RationalExpansion:
        """Truncate or zero-pad to exactly ``n_plus`` / ``n_minus`` coefficients."""
        precision = self.params.precision
        pos = precision.zeros(n_plus)
        neg = precision.zeros(n_minus)
        pos[: min(n_plus, self.n_plus)] = self.pos[:n_plus]
        neg[: min(n_minus, self.n_minus)] = self.neg[:n_minus]
        return RationalExpansion(self.params, self.alpha, pos, neg)

    def trimmed(self, tol: float = 0.0) -> RationalExpansion:
        """Drop trailing coefficients with modulus ``<= tol``."""

        def _keep(arr: np.ndarray) -> int:
            mags = np.array([float(abs(c)) for c in arr]) if arr.dtype == object else np.abs(arr)
            nz = np.nonzero(mags > tol)[0]
            return int(nz[-1]) + 1 if nz.size else 0

        return RationalExpansion(self.params, self.alpha, self.pos[: _keep(self.pos)], self.neg[: _keep(self.neg)])

    def _check(self, other: RationalExpansion) -> None:
        if self.params != other.params:
            raise PrecisionMismatchError(f"expansions use different basis params: {self.params} vs {other.params}")

    def _aligned(self, other: RationalExpansion) -> tuple[RationalExpansion, RationalExpansion]:
        self._check(other)
        n_plus = max(self.n_plus, other.n_plus)
        n_minus = max(self.n_minus, other.n_minus)
        return self.resized(n_plus, n_minus), other.resized(n_plus, n_minus)

    def __add__(self, other: RationalExpansion) -> RationalExpansion:
        if self.alpha != other.alpha:
            raise ValueError(f"cannot add expansions with alpha {self.alpha} and {other.alpha}")
        a, b = self._aligned(other)
        return RationalExpansion(self.params, self.alpha, a.pos + b.pos, a.neg + b.neg)

    def __sub__(self, other: RationalExpansion) -> RationalExpansion:
        return self + (-other)

    def __neg__(self) -> RationalExpansion:
        return RationalExpansion(self.params, self.alpha, -self.pos, -self.neg)

    def __mul__(self, scalar: Scalar) -> RationalExpansion:
        return RationalExpansion(self.params, self.alpha, self.pos * scalar, self.neg * scalar)

    __rmul__ = __mul__

    def inner(self, other: RationalExpansion) -> Scalar:
        """Euclidean coefficient inner product, conjugate-linear in ``self``."""
        a, b = self._aligned(other)
        precision = self.params.precision
        return precision.vdot(a.pos, b.pos) + precision.vdot(a.neg, b.neg)

    def norm(self) -> Scalar:
        precision = self.params.precision
        if precision.extended:
            return precision.ctx.sqrt(precision.norm(self.pos) ** 2 + precision.norm(self.neg) ** 2)
        return float(np.hypot(np.linalg.norm(self.pos), np.linalg.norm(self.neg)))

    def evaluate(self, omega: Any) -> Any:
        return evaluate(self, omega)

    def values_on_grid(self, n: int) -> np.ndarray:
        """Non-oscillatory part ``sum_j c_j (T^j - 1)`` at the nodes of the size-``n`` grid.

        Raises:
            ValueError: If the grid is too small to hold the coefficients.
        """
        if n // 2 < self.n_plus or (n - 1) // 2 < self.n_minus:
            raise ValueError(f"grid of size {n} cannot hold {self.n_plus} positive and {self.n_minus} negative coefficients")
        precision = self.params.precision
        spectrum = precision.zeros(n)
        spectrum[1 : self.n_plus + 1] = self.pos
        if self.n_minus:
            spectrum[n - self.n_minus :] = self.neg[::-1]
        spectrum[0] = -self.coefficient_sum()
        values = idft(spectrum, precision)
        values[0] = 0 * values[0]
        return values


def grid_size_for(n_plus: int, n_minus: int) -> int:
    """Smallest power-of-two grid whose index range covers ``-n_minus..n_plus``."""
    return max(next_power_of_two(max(2 * n_plus, 2 * n_minus + 1)), 2)


def from_grid_values(values: np.ndarray, params: BasisParams, alpha: float = 0.0, keep: tuple[int, int] | None = None) -> RationalExpansion:
    """Coefficients of the non-oscillatory interpolant of ``values`` (node 0 ignored).

    Args:
        values: Samples at the nodes of a grid whose size is a power of two.
        params: Basis scale and precision.
        alpha: Oscillation attached to the result.
        keep: Optional ``(n_plus, n_minus)`` truncation.
    """
    precision = params.precision
    samples = precision.array(values).copy()
    n = samples.shape[0]
    samples[0] = 0 * samples[0]
    spectrum = dft(samples, precision)
    n_plus, n_minus = n // 2, (n - 1) // 2
    if keep is not None:
        n_plus, n_minus = min(n_plus, keep[0]), min(n_minus, keep[1])
    pos = spectrum[1 : n_plus + 1]
    neg = spectrum[::-1][:n_minus]
    return RationalExpansion(params, alpha, pos, neg)


def _check_finite(values: np.ndarray, params: BasisParams) -> None:
    precision = params.precision
    if precision.extended:
        ok = all(precision.ctx.isfinite(v) for v in values)
    else:
        ok = bool(np.all(np.isfinite(values)))
    if not ok:
        raise ValueError("non-finite sample values cannot be interpolated")


def interpolate(
    f: Callable[[np.ndarray], np.ndarray] | np.ndarray,
    n: int,
    alpha: float = 0.0,
    params: BasisParams | None = None,
) -> RationalExpansion:
    """Apply the oscillatory interpolation operator ``R_{n,alpha}``.

    The node count is rounded up to a power of two; coefficients outside the
    index range of an ``n``-point grid are discarded. The sample at the
    infinity node is taken as 0.

    Args:
        f: Vectorised callable of omega, or samples at every node of the
            power-of-two grid (the first entry is ignored).
        n: Requested node count, at least 2.
        alpha: Oscillation; samples are multiplied by ``exp(-i alpha omega_j)``.
        params: Basis scale and precision.

    Returns:
        The expansion, exact at the nodes.

    Raises:
        ValueError: If ``n < 2``, the samples have the wrong length, or a
            sample is not finite.
    """
    params = params or BasisParams()
    if n < 2:
        raise ValueError(f"interpolation needs n >= 2, got {n}")
    precision = params.precision
    grid = InterpolationGrid.from_size(params, next_power_of_two(n))
    samples = precision.zeros(grid.n)
    if callable(f):
        samples[1:] = f(grid.omegas[1:])
    else:
        given = precision.array(f)
        if given.shape[0] != grid.n:
            raise ValueError(f"expected {grid.n} samples, got {given.shape[0]}")
        samples[1:] = given[1:]
    _check_finite(samples, params)
    alpha = normalize_alpha(alpha)
    if alpha != 0.0:
        samples = samples * grid.oscillation(-alpha)
    return from_grid_values(samples, params, alpha, keep=(n // 2, (n - 1) // 2))


def evaluate(e: RationalExpansion, omega: Any) -> Any:
    """Horner evaluation in ``z = T_nu(omega)`` and ``1/z``, times ``exp(i alpha omega)``.

    Infinite ``omega`` gives 0.
    """
    params = e.params
    precision = params.precision
    if precision.extended:
        ctx = precision.ctx

        def _one(w: Any) -> Any:
            if ctx.isinf(w):
                return ctx.mpc(0)
            z = mobius(params, ctx.mpc(w))
            value = _both_blocks(e, z)
            return value * ctx.exp(ctx.mpc(0, e.alpha) * w) if e.alpha else value

        if isinstance(omega, np.ndarray):
            return np.frompyfunc(_one, 1, 1)(omega)
        return _one(omega)

    w = np.asarray(omega, dtype=np.complex128)
    finite = ~np.isinf(w)
    out = np.zeros(w.shape, dtype=np.complex128)
    wf = w[finite]
    z = np.asarray(mobius(params, wf))
    with np.errstate(divide="ignore", invalid="ignore"):
        value = _both_blocks(e, z)
    if e.alpha:
        value = value * np.exp(1j * e.alpha * wf)
    out[finite] = value
    return complex(out) if out.ndim == 0 else out


def evaluate_grid(e: RationalExpansion, grid: InterpolationGrid) -> np.ndarray:
    """Values at every node of ``grid`` by one inverse FFT."""
    if grid.params != e.params:
        raise PrecisionMismatchError("grid and expansion use different basis params")
    values = e.values_on_grid(grid.n)
    if e.alpha:
        values = values * grid.oscillation(e.alpha)
    return values
