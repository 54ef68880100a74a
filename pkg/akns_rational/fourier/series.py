"""Transforms between ``q`` and ``q_hat`` through expansions in ``R_{j,0}``.

With ``q_hat(k) = int e^{-ikx} q(x) dx``, an expansion ``q_hat = sum_j c_j R_{j,0}``
gives back::

    q(0) = -nu sum_j |j| c_j
    q(x) = -2 nu e^{-|x| nu} sum_{sign(x) j < 0} c_j L_{|j|-1}^(1)(2 |x| nu)
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

from akns_rational.basis.expansion import RationalExpansion, interpolate
from akns_rational.basis.mobius import BasisParams
from akns_rational.cauchy.transform import ft_of_expansion
from akns_rational.numeric_core.scalar import Scalar


def ft_series(e: RationalExpansion, x: float) -> Scalar:
    """Inverse transform of ``q_hat = e`` at real ``x``.

    Raises:
        ValueError: If ``e`` oscillates.
    """
    return ft_of_expansion(e, -x) / (2 * e.params.precision.pi)


def ft_series_grid(e: RationalExpansion, xs: Sequence[float]) -> list[Scalar]:
    return [ft_series(e, x) for x in xs]


def ft_by_expansion(q: Callable[[np.ndarray], np.ndarray], ks: Sequence[float], n: int, params: BasisParams | None = None) -> list[Scalar]:
    """Forward transform: interpolate ``q`` with ``n`` nodes and sum closed-form transforms."""
    expansion = interpolate(q, n, params=params)
    return [ft_of_expansion(expansion, k) for k in ks]
