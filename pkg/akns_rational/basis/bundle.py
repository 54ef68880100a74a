"""Finite sums of expansions with distinct oscillations ``sum_alpha u_alpha(k) e^{i alpha k}``.

A bundle is the element GMRES iterates on for the singular integral equations:
blocks with different ``alpha`` are treated as mutually orthogonal, and blocks
that become negligible after an operation are pruned.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Any

from akns_rational.basis.expansion import RationalExpansion, normalize_alpha
from akns_rational.basis.mobius import BasisParams
from akns_rational.errors import PrecisionMismatchError
from akns_rational.numeric_core.scalar import Scalar

LOGGER = logging.getLogger(__name__)

PRUNE_TOLERANCE = 1e-16


@dataclass(frozen=True, slots=True, eq=False)
class OscillatoryBundle:
    """Blocks sorted by ``alpha``; the empty bundle is the zero function.

    ``dropped`` is the largest block norm removed by pruning anywhere in the
    history of this value.
    """

    params: BasisParams
    blocks: tuple[RationalExpansion, ...] = ()
    dropped: float = 0.0

    def __post_init__(self) -> None:
        self._validate_blocks()

    def _validate_blocks(self) -> None:
        alphas = [b.alpha for b in self.blocks]
        if len(set(alphas)) != len(alphas):
            raise ValueError(f"bundle blocks must have distinct alpha, got {alphas}")
        for b in self.blocks:
            if b.params != self.params:
                raise PrecisionMismatchError(f"block params {b.params} differ from bundle params {self.params}")
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=lambda b: b.alpha)))

    @classmethod
    def zero(cls, params: BasisParams) -> OscillatoryBundle:
        return cls(params)

    @classmethod
    def of(cls, params: BasisParams, expansions: Iterable[RationalExpansion], dropped: float = 0.0) -> OscillatoryBundle:
        """Sum expansions, merging equal oscillations, then prune."""
        merged: dict[float, RationalExpansion] = {}
        for e in expansions:
            key = normalize_alpha(e.alpha)
            merged[key] = merged[key] + e if key in merged else e
        return cls(params, tuple(merged.values()), dropped).pruned()

    @property
    def alphas(self) -> tuple[float, ...]:
        return tuple(b.alpha for b in self.blocks)

    def block(self, alpha: float) -> RationalExpansion:
        alpha = normalize_alpha(alpha)
        for b in self.blocks:
            if b.alpha == alpha:
                return b
        return RationalExpansion.zero(self.params, alpha)

    def is_zero(self) -> bool:
        return not self.blocks

    def _check(self, other: OscillatoryBundle) -> None:
        if self.params != other.params:
            raise PrecisionMismatchError(f"bundles use different basis params: {self.params} vs {other.params}")

    def __add__(self, other: OscillatoryBundle) -> OscillatoryBundle:
        self._check(other)
        return OscillatoryBundle.of(self.params, self.blocks + other.blocks, max(self.dropped, other.dropped))

    def __sub__(self, other: OscillatoryBundle) -> OscillatoryBundle:
        return self + (-other)

    def __neg__(self) -> OscillatoryBundle:
        return OscillatoryBundle(self.params, tuple(-b for b in self.blocks), self.dropped)

    def __mul__(self, scalar: Scalar) -> OscillatoryBundle:
        return OscillatoryBundle(self.params, tuple(b * scalar for b in self.blocks), self.dropped).pruned()

    __rmul__ = __mul__

    def inner(self, other: OscillatoryBundle) -> Scalar:
        """Blockwise coefficient inner product; different oscillations are orthogonal."""
        self._check(other)
        total = self.params.precision.complex(0)
        for b in self.blocks:
            for c in other.blocks:
                if b.alpha == c.alpha:
                    total = total + b.inner(c)
        return total

    def norm(self) -> Scalar:
        precision = self.params.precision
        squares = [b.norm() ** 2 for b in self.blocks]
        if not squares:
            return precision.real(0)
        if precision.extended:
            return precision.ctx.sqrt(precision.ctx.fsum(squares))
        return float(sum(squares)) ** 0.5

    def pruned(self, tol: float = PRUNE_TOLERANCE) -> OscillatoryBundle:
        """Drop blocks whose norm is at most ``tol`` times the bundle norm."""
        norms = [float(b.norm()) for b in self.blocks]
        total = sum(n * n for n in norms) ** 0.5
        kept = tuple(b for b, n in zip(self.blocks, norms, strict=True) if n > tol * total)
        removed = max((n for b, n in zip(self.blocks, norms, strict=True) if not n > tol * total), default=0.0)
        if len(kept) == len(self.blocks):
            return self
        if removed > 0:
            LOGGER.debug("pruned %d oscillatory blocks, largest norm %.3e", len(self.blocks) - len(kept), removed)
        return OscillatoryBundle(self.params, kept, max(self.dropped, removed))

    def dropped_mass(self) -> float:
        return self.dropped

    def truncated(self, n_plus: int, n_minus: int | None = None) -> OscillatoryBundle:
        """Cut every block to at most ``n_plus`` / ``n_minus`` coefficients."""
        n_minus = n_plus if n_minus is None else n_minus
        blocks = tuple(b.resized(min(b.n_plus, n_plus), min(b.n_minus, n_minus)) for b in self.blocks)
        return OscillatoryBundle(self.params, blocks, self.dropped)

    def map_blocks(self, fn: Callable[[RationalExpansion], RationalExpansion | Iterable[RationalExpansion]]) -> OscillatoryBundle:
        """Apply ``fn`` to each block and sum the results (which may change alpha)."""
        out: list[RationalExpansion] = []
        for b in self.blocks:
            result = fn(b)
            if isinstance(result, RationalExpansion):
                out.append(result)
            else:
                out.extend(result)
        return OscillatoryBundle.of(self.params, out, self.dropped)

    def evaluate(self, omega: Any) -> Any:
        if not self.blocks:
            return RationalExpansion.zero(self.params).evaluate(omega)
        value = self.blocks[0].evaluate(omega)
        for b in self.blocks[1:]:
            value = value + b.evaluate(omega)
        return value


@dataclass(frozen=True, slots=True, eq=False)
class BundleRow:
    """A 1x2 row ``[first, second]`` of bundles; rows of a matrix RHP unknown."""

    first: OscillatoryBundle
    second: OscillatoryBundle

    def __post_init__(self) -> None:
        self.first._check(self.second)

    @classmethod
    def zero(cls, params: BasisParams) -> BundleRow:
        return cls(OscillatoryBundle.zero(params), OscillatoryBundle.zero(params))

    @property
    def params(self) -> BasisParams:
        return self.first.params

    def __add__(self, other: BundleRow) -> BundleRow:
        return BundleRow(self.first + other.first, self.second + other.second)

    def __sub__(self, other: BundleRow) -> BundleRow:
        return BundleRow(self.first - other.first, self.second - other.second)

    def __neg__(self) -> BundleRow:
        return BundleRow(-self.first, -self.second)

    def __mul__(self, scalar: Scalar) -> BundleRow:
        return BundleRow(self.first * scalar, self.second * scalar)

    __rmul__ = __mul__

    def inner(self, other: BundleRow) -> Scalar:
        return self.first.inner(other.first) + self.second.inner(other.second)

    def norm(self) -> Scalar:
        a, b = self.first.norm(), self.second.norm()
        if self.params.precision.extended:
            return self.params.precision.ctx.sqrt(a**2 + b**2)
        return float(a * a + b * b) ** 0.5

    def truncated(self, n_plus: int, n_minus: int | None = None) -> BundleRow:
        return BundleRow(self.first.truncated(n_plus, n_minus), self.second.truncated(n_plus, n_minus))

    def dropped_mass(self) -> float:
        return max(self.first.dropped, self.second.dropped)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()
