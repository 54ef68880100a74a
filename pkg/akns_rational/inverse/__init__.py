"""Inverse scattering by GMRES on the singular integral equations of the jump problem."""

from akns_rational.inverse.jumps import JumpFactors, derivative_factors, jump_factors
from akns_rational.inverse.kdv import KdvData, KdvSample, kdv_data, kdv_potential, kdv_recover
from akns_rational.inverse.poles import PoleSystem, build_pole_system, soliton_reference, solve_pole_system
from akns_rational.inverse.solve import (
    InnerProduct,
    InverseConfig,
    InverseSample,
    RHPSolution,
    Side,
    SIEOperator,
    SIEProblem,
    assemble_sie,
    inverse_transform,
    l2_inner,
    recover_potentials,
    recovered_values,
    right_data,
    solve_rhp,
    solve_row,
)

__all__ = [
    "InnerProduct",
    "InverseConfig",
    "InverseSample",
    "JumpFactors",
    "KdvData",
    "KdvSample",
    "PoleSystem",
    "RHPSolution",
    "SIEOperator",
    "SIEProblem",
    "Side",
    "assemble_sie",
    "build_pole_system",
    "derivative_factors",
    "inverse_transform",
    "jump_factors",
    "kdv_data",
    "kdv_potential",
    "kdv_recover",
    "l2_inner",
    "recover_potentials",
    "recovered_values",
    "right_data",
    "soliton_reference",
    "solve_pole_system",
    "solve_row",
]
