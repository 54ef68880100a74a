"""``akns``: Fourier transforms, forward and inverse scattering from the command line.

Subcommands::

    akns fourier    --potential gaussian --method ode --n 400 --k-grid=-10:0.1:10
    akns scatter    --potential sech-modulated:A=1.65,gamma=0.1 --out data.json
    akns invscatter --data data.json --x-grid=-5:0.25:5 --tol 2e-12
    akns kdv        --U0=-1 --x-grid 0:0.5:10

Grids are ``lo:step:hi``; pass negative ones as ``--k-grid=-1:0.1:1``.
Tables go to ``--out`` or stdout. ``AKNS_THREADS`` bounds the worker pool.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from akns_rational.basis.mobius import BasisParams
from akns_rational.cli.io import Table, error_rows, read_scattering_file, write_scattering_file, write_table
from akns_rational.cli.oracles import fourier_reference, potential_reference
from akns_rational.cli.presets import PotentialSpec
from akns_rational.errors import SpectralSingularityError
from akns_rational.fourier.drivers import DEFAULT_DRIVER_SIZE, Driver
from akns_rational.fourier.ode import ft_ode_grid
from akns_rational.fourier.series import ft_by_expansion
from akns_rational.inverse.kdv import kdv_data, kdv_recover
from akns_rational.inverse.solve import InverseConfig, inverse_transform
from akns_rational.numeric_core.fft import next_power_of_two
from akns_rational.numeric_core.scalar import DOUBLE_DIGITS, Precision
from akns_rational.scattering.data import DEFAULT_REFLECTION_SIZE, ScatteringData, scatter_left
from akns_rational.scattering.forward import ScatteringConfig, ScatteringProblem
from akns_rational.scattering.references import KdvReference
from akns_rational.scattering.spectrum import SpectrumConfig

LOGGER = logging.getLogger(__name__)

GRID_SLACK = 1e-12
ERROR_HEADER = ("value_re", "value_im", "reference_re", "reference_im", "abs_error")


def parse_grid(text: str) -> list[float]:
    """``lo:step:hi`` (endpoints included within 1e-12) or a single value.

    Fields are stepped as exact rationals, so ``-1:0.1:1`` hits 0.0 exactly.

    Raises:
        ValueError: If the grid is malformed or empty.
    """
    parts = text.strip().split(":")
    try:
        fields = [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed grid {text!r}") from exc
    if len(fields) == 1:
        return [float(fields[0])]
    if len(fields) != 3:
        raise ValueError(f"grid must be lo:step:hi, got {text!r}")
    lo, step, hi = fields
    if not step > 0:
        raise ValueError(f"grid step must be positive, got {text!r}")
    if hi < lo:
        raise ValueError(f"grid end precedes its start in {text!r}")
    count = math.floor((hi - lo) / step + Fraction(GRID_SLACK)) + 1
    return [float(lo + i * step) for i in range(count)]


def _potential(text: str) -> PotentialSpec:
    try:
        return PotentialSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _out(path: str | None) -> Path | None:
    return None if path in (None, "-") else Path(path)


def cmd_fourier(args: argparse.Namespace) -> int:
    spec: PotentialSpec = args.potential
    params = BasisParams(args.nu, Precision(args.digits))
    ks = parse_grid(args.k_grid)
    points = [complex(k, args.imag_shift) for k in ks]
    q = spec.q()
    if args.method == "series":
        if args.imag_shift:
            raise ValueError("the series method only evaluates real k")
        n = args.interp or 2 * args.n
        values = ft_by_expansion(q, ks, n, params)
    else:
        n = args.interp or next_power_of_two(2 * args.n + 2)
        if args.driver == "rational":
            driver = Driver.rational(params)
        else:
            driver = Driver.gaussian(params, max(DEFAULT_DRIVER_SIZE, n))
        results = ft_ode_grid(q, points, driver, args.n, n)
        values = [res.value for res in results]
        LOGGER.info("section size %d, %d of %d sections singular", results[0].size if results else 0, sum(r.fallback for r in results), len(results))
    reference = fourier_reference(spec)
    if reference is None:
        table = Table(("k", "value_re", "value_im"))
        for k, v in zip(ks, values, strict=True):
            table.append(k, complex(v).real, complex(v).imag)
    else:
        table = Table(("k", *ERROR_HEADER))
        for row in error_rows(ks, values, [reference(p) for p in points]):
            table.append(*row)
        LOGGER.info("max abs error %.3e", table.max_of("abs_error"))
    write_table(table, _out(args.out))
    return 0


def cmd_scatter(args: argparse.Namespace) -> int:
    spec: PotentialSpec = args.potential
    config = ScatteringConfig(nu=args.nu, x_nu=args.x_nu, cols=args.n, extra_rows=args.m, digits=args.digits)
    problem = ScatteringProblem.from_functions(spec.q(), spec.r(), config)
    spectrum = None if args.no_spectrum else SpectrumConfig(nu=args.eig_nu or args.nu, size=args.eig_n)
    try:
        data = scatter_left(problem, args.grid_size, spectrum)
    except SpectralSingularityError as exc:
        LOGGER.warning("%s; writing empty data", exc)
        data = ScatteringData.zero(problem.spectral_params)
        data.meta["spectral_singularity"] = str(exc)
    data.meta["potential"] = str(spec)
    LOGGER.info("%d upper and %d lower eigenvalues", len(data.plus), len(data.minus))
    write_scattering_file(Path(args.out), data)
    return 0


def cmd_invscatter(args: argparse.Namespace) -> int:
    data = read_scattering_file(Path(args.data), args.digits)
    xs = parse_grid(args.x_grid)
    config = InverseConfig(tol=args.tol, maxiter=args.maxit, n_work=args.n_work)
    samples = inverse_transform(data, xs, config)
    reference = None
    if "potential" in data.meta:
        reference = potential_reference(PotentialSpec.parse(data.meta["potential"]))
    header = ("x", "q_re", "q_im", "r_re", "r_im", "iterations", "residual", "failure")
    if reference is not None:
        header = (*header, "q_error", "r_error")
    table = Table(header)
    for s in samples:
        row = [s.x, s.q.real, s.q.imag, s.r.real, s.r.imag, s.iterations, s.residual, s.failure]
        if reference is not None:
            q_ref, r_ref = (complex(f([s.x])[0]) for f in reference)
            row += [abs(s.q - q_ref), abs(s.r - r_ref)]
        table.append(*row)
    failures = sum(1 for s in samples if s.failure)
    if failures:
        LOGGER.warning("%d of %d points failed", failures, len(samples))
    write_table(table, _out(args.out))
    return 0


def cmd_kdv(args: argparse.Namespace) -> int:
    params = BasisParams(args.nu, Precision(args.digits))
    xs = parse_grid(args.x_grid)
    data = kdv_data(args.U0, args.terms, params)
    samples = kdv_recover(data, xs, InverseConfig(tol=args.tol, maxiter=args.maxit))
    reference = KdvReference(args.U0, args.digits)
    table = Table(("x", *ERROR_HEADER, "iterations"))
    for s in samples:
        exact = reference.r_exact(s.x)
        value = complex(s.r)
        error = float(abs(s.r - exact)) if params.precision.extended else abs(value - float(exact))
        table.append(s.x, value.real, value.imag, float(exact), 0.0, error, s.iterations)
    LOGGER.info("max abs error %.3e", table.max_of("abs_error"))
    write_table(table, _out(args.out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akns", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    fourier = sub.add_parser("fourier", help="Fourier transform of a preset potential")
    fourier.add_argument("--method", choices=("ode", "series"), default="ode")
    fourier.add_argument("--potential", type=_potential, default=PotentialSpec.parse("gaussian"))
    fourier.add_argument("--n", type=int, default=400, help="section size (ode) or half the node count (series)")
    fourier.add_argument("--interp", type=int, default=None, help="interpolation nodes for q")
    fourier.add_argument("--nu", type=float, default=1.0)
    fourier.add_argument("--driver", choices=("gaussian", "rational"), default="gaussian")
    fourier.add_argument("--k-grid", default="-10:0.1:10")
    fourier.add_argument("--imag-shift", type=float, default=0.0)
    fourier.add_argument("--digits", type=int, default=DOUBLE_DIGITS)
    fourier.add_argument("--out", default=None)
    fourier.set_defaults(func=cmd_fourier)

    scatter = sub.add_parser("scatter", help="left and right scattering data to a JSON file")
    scatter.add_argument("--potential", type=_potential, required=True)
    scatter.add_argument("--n", type=int, default=160, help="expansion unknowns per block")
    scatter.add_argument("--m", type=int, default=100, help="extra rows per block")
    scatter.add_argument("--nu", type=float, default=1.0, help="basis scale of the reflection coefficients")
    scatter.add_argument("--x-nu", type=float, default=12.0, help="basis scale of the potentials")
    scatter.add_argument("--grid-size", type=int, default=DEFAULT_REFLECTION_SIZE, help="nodes for the reflection coefficients")
    scatter.add_argument("--eig-n", type=int, default=128)
    scatter.add_argument("--eig-nu", type=float, default=None, help="basis scale of the eigenproblem, defaults to --nu")
    scatter.add_argument("--no-spectrum", action="store_true", help="skip the eigenvalue search")
    scatter.add_argument("--digits", type=int, default=DOUBLE_DIGITS)
    scatter.add_argument("--out", required=True)
    scatter.set_defaults(func=cmd_scatter)

    inv = sub.add_parser("invscatter", help="recover q and r from a scattering-data file")
    inv.add_argument("--data", required=True)
    inv.add_argument("--x-grid", default="-5:0.25:5")
    inv.add_argument("--tol", type=float, default=1e-12)
    inv.add_argument("--maxit", type=int, default=200)
    inv.add_argument("--n-work", type=int, default=None)
    inv.add_argument("--digits", type=int, default=None, help="re-read the file at this precision")
    inv.add_argument("--out", default=None)
    inv.set_defaults(func=cmd_invscatter)

    kdv = sub.add_parser("kdv", help="recover U0 sech^2 from its closed-form reflection data")
    kdv.add_argument("--U0", type=float, default=-1.0)
    kdv.add_argument("--digits", type=int, default=DOUBLE_DIGITS)
    kdv.add_argument("--terms", type=int, default=512, help="interpolation nodes for the reflection data")
    kdv.add_argument("--tol", type=float, default=1e-12)
    kdv.add_argument("--maxit", type=int, default=200)
    kdv.add_argument("--nu", type=float, default=1.0)
    kdv.add_argument("--x-grid", default="0:0.5:10")
    kdv.add_argument("--out", default=None)
    kdv.set_defaults(func=cmd_kdv)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return int(args.func(args))
    except ValueError as exc:
        LOGGER.error("%s", exc)
        return 2
    except ArithmeticError as exc:
        LOGGER.error("%s failed: %s", args.command, exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
