"""Oscillatory rational basis ``R_{j,alpha}``, interpolation and bundles."""

from akns_rational.basis.bundle import PRUNE_TOLERANCE, BundleRow, OscillatoryBundle
from akns_rational.basis.expansion import (
    RationalExpansion,
    deinterlace,
    evaluate,
    evaluate_grid,
    from_grid_values,
    grid_size_for,
    interlace,
    interpolate,
    normalize_alpha,
    operator_index,
    operator_position,
)
from akns_rational.basis.grid import InterpolationGrid
from akns_rational.basis.mobius import BasisParams, eval_R, mobius, mobius_inv

__all__ = [
    "PRUNE_TOLERANCE",
    "BasisParams",
    "BundleRow",
    "InterpolationGrid",
    "OscillatoryBundle",
    "RationalExpansion",
    "deinterlace",
    "eval_R",
    "evaluate",
    "evaluate_grid",
    "from_grid_values",
    "grid_size_for",
    "interlace",
    "interpolate",
    "mobius",
    "mobius_inv",
    "normalize_alpha",
    "operator_index",
    "operator_position",
]
