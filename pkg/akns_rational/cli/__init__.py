"""Command-line front end: presets, oracles, file formats and the ``akns`` entry point."""

from akns_rational.cli.io import Table, dump_scattering, load_scattering, read_scattering_file, write_scattering_file, write_table
from akns_rational.cli.main import build_parser, main, parse_grid
from akns_rational.cli.oracles import fourier_reference, potential_reference
from akns_rational.cli.presets import PotentialSpec, Preset

__all__ = [
    "PotentialSpec",
    "Preset",
    "Table",
    "build_parser",
    "dump_scattering",
    "fourier_reference",
    "load_scattering",
    "main",
    "parse_grid",
    "potential_reference",
    "read_scattering_file",
    "write_scattering_file",
    "write_table",
]
