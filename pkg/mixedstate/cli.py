"""Command-line access to the bounds, spectra, curves and verification suites.

    mixedstate bound --s 1 --neff 2 --json
    mixedstate curve --s 1,2,3 --neff-min 1 --neff-max 100 --points 400 --log --out curve.csv
    mixedstate verify --suite all --seed 1

Exit status is 0 on success, 1 when a verification suite fails and 2 for
usage or domain errors.
"""
import argparse
import contextlib
import csv
import json
import logging
import math
import sys

import numpy as np

from .core import uncertainty_bound
from .core.bounds import asymptotic_packing, is_realizable, max_neff, packing_curve, strict_bound, strict_max_neff
from .core.error import BoundError
from .core.oscillator import DEFAULT_POINTS_2D, build_density_grid, default_axis, required_half_width
from .core.runners import get_runner
from .core.spectrum import build_spectrum
from .core.verification import specified_suites, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

CURVE_FIELDS = ('L', 'B_strict', 'B_approx', 'C_strict', 'C_approx', 'C_asymptotic')

# Points per axis written by `grid` for s = 1.
DEFAULT_GRID_POINTS = 101


def format_number(value):
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(value)
    return '{:.12g}'.format(value)


def rounded(value):
    return float(format_number(value))


def json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError('{!r} is not JSON serializable'.format(value))


def dump_json(obj, stream):
    stream.write(json.dumps(obj, sort_keys=False, default=json_default))
    stream.write('\n')


@contextlib.contextmanager
def open_output(path, stdout):
    if path is None or path == '-':
        yield stdout
        return
    with open(path, 'w', newline='') as stream:
        yield stream


def dimension_list(text):
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected a comma-separated list of integers: {!r}'.format(text))
    if not values:
        raise argparse.ArgumentTypeError('at least one dimension is required')
    return values


def cmd_bound(args, stdout):
    evaluation = uncertainty_bound(args.s, args.neff)
    report = {
        'n_eff': rounded(evaluation.n_eff),
        'L': evaluation.L,
        'admissible': list(evaluation.admissible),
        'B_strict': rounded(evaluation.B),
        'B_approx': rounded(evaluation.approx.B_approx),
        'L_tilde': rounded(evaluation.approx.l_tilde),
        'C_strict': rounded(evaluation.packing),
        'C_asymptotic': rounded(asymptotic_packing(args.s)),
    }
    if args.json:
        dump_json(report, stdout)
    else:
        for key, value in report.items():
            if key == 'admissible':
                value = '{}..{}'.format(*value)
            else:
                value = format_number(value)
            stdout.write('{}: {}\n'.format(key, value))
    return EXIT_OK


def cmd_spectrum(args, stdout):
    spectrum = build_spectrum(args.s, args.neff, k=args.k)
    with open_output(args.out, stdout) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['shell', 'degeneracy', 'weight', 'cumulative'])
        rows = zip(spectrum.degeneracies, spectrum.shell_weights, spectrum.cumulative_probabilities())
        for m, (g, weight, cumulative) in enumerate(rows):
            writer.writerow([m, g, format_number(weight), format_number(cumulative)])
    return EXIT_OK


def cmd_curve(args, stdout):
    curve = packing_curve(args.s, args.neff_min, args.neff_max, args.points,
                          log_spacing=args.log, runner=get_runner(args.threads))
    header = ['n_eff'] + ['{}_s{}'.format(field, s) for s in curve.s_list for field in CURVE_FIELDS]
    with open_output(args.out, stdout) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(header)
        for row in curve.rows:
            cells = [format_number(row.n_eff)]
            for point in row.points:
                cells.extend(format_number(getattr(point, field)) for field in CURVE_FIELDS)
            writer.writerow(cells)
    return EXIT_OK


def grid_points(s, points=None):
    if points is not None:
        return points
    return DEFAULT_GRID_POINTS if s == 1 else DEFAULT_POINTS_2D


def cmd_grid(args, stdout):
    spectrum = build_spectrum(args.s, args.neff, k=args.k)
    half_width = args.half_width
    if half_width is None:
        half_width = math.ceil(required_half_width(spectrum) * spectrum.k)
    axis = default_axis(args.k, grid_points(args.s, args.points), half_width)
    grid = build_density_grid(spectrum, [axis] * args.s)
    with open_output(args.out, stdout) as stream:
        writer = csv.writer(stream, lineterminator='\n')
        if args.s == 1:
            writer.writerow(['x', 'x_prime', 'rho'])
            for i, x in enumerate(axis):
                for j, x_prime in enumerate(axis):
                    writer.writerow([format_number(x), format_number(x_prime), format_number(grid.values[i, j])])
        else:
            writer.writerow(['x1', 'x2', 'x1_prime', 'x2_prime', 'rho'])
            for index, value in np.ndenumerate(grid.tensor()):
                writer.writerow([format_number(axis[i]) for i in index] + [format_number(value)])
    return EXIT_OK


def cmd_verify(args, stdout):
    reports = verify(args.suite, args.seed, runner=get_runner(args.threads))
    for report in reports:
        dump_json(report.as_dict(), stdout)
    failed = [report.name for report in reports if not report.passed]
    dump_json({
        'summary': True,
        'passed': not failed,
        'suites': [report.name for report in reports],
        'failed_suites': failed,
        'failures': sum(len(report.failures) for report in reports),
    }, stdout)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_neff_max(args, stdout):
    value = strict_max_neff(args.s, args.uv) if args.strict else max_neff(args.s, args.uv)
    stdout.write('{}\n'.format(format_number(value)))
    return EXIT_OK


def cmd_region(args, stdout):
    bound = strict_bound(args.s, args.neff)
    report = {
        's': args.s,
        'uv': rounded(args.uv),
        'n_eff': rounded(args.neff),
        'B_strict': rounded(bound.B),
        'margin': rounded(args.uv - bound.B),
        'realizable': is_realizable(args.s, args.uv, args.neff),
    }
    if args.json:
        dump_json(report, stdout)
    else:
        for key, value in report.items():
            value = ('yes' if value else 'no') if isinstance(value, bool) else format_number(value)
            stdout.write('{}: {}\n'.format(key, value))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='mixedstate',
        description='Position-momentum uncertainty bounds for mixed states.',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Increase verbosity (-v, -vv).')
    parser.add_argument('--threads', type=int, default=1, help='Worker threads for curves and verification.')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    bound = commands.add_parser('bound', help='Strict and approximate bound at one point.')
    bound.add_argument('--s', type=int, required=True, help='Number of dimensions.')
    bound.add_argument('--neff', type=float, required=True, help='Effective number of states.')
    bound.add_argument('--json', action='store_true', help='Emit a single JSON object.')
    bound.set_defaults(handler=cmd_bound)

    spectrum = commands.add_parser('spectrum', help='Eigenvalues of the minimizing state as CSV.')
    spectrum.add_argument('--s', type=int, required=True)
    spectrum.add_argument('--neff', type=float, required=True)
    spectrum.add_argument('--k', type=float, default=1.0, help='Oscillator scale factor.')
    spectrum.add_argument('--out', help='Output path (default: standard output).')
    spectrum.set_defaults(handler=cmd_spectrum)

    curve = commands.add_parser('curve', help='Packing coefficients over a range of N_eff as CSV.')
    curve.add_argument('--s', type=dimension_list, required=True, help='Comma-separated dimensions.')
    curve.add_argument('--neff-min', type=float, required=True)
    curve.add_argument('--neff-max', type=float, required=True)
    curve.add_argument('--points', type=int, required=True)
    curve.add_argument('--log', action='store_true', help='Logarithmic spacing.')
    curve.add_argument('--out', help='Output path (default: standard output).')
    curve.set_defaults(handler=cmd_curve)

    grid = commands.add_parser('grid', help='Minimizing density matrix on a coordinate grid as CSV.')
    grid.add_argument('--s', type=int, choices=(1, 2), default=1)
    grid.add_argument('--neff', type=float, required=True)
    grid.add_argument('--k', type=float, default=1.0)
    grid.add_argument('--points', type=int, help='Points per axis (default: {} for s = 1, {} for s = 2).'.format(
        DEFAULT_GRID_POINTS, DEFAULT_POINTS_2D))
    grid.add_argument('--half-width', type=float, help='Axis half-width in units of 1/k.')
    grid.add_argument('--out', help='Output path (default: standard output).')
    grid.set_defaults(handler=cmd_grid)

    verification = commands.add_parser('verify', help='Run verification suites.')
    verification.add_argument('--suite', default='all', choices=['all'] + list(specified_suites))
    verification.add_argument('--seed', type=int, default=0)
    verification.set_defaults(handler=cmd_verify)

    neff_max = commands.add_parser('neff-max', help='Largest N_eff compatible with a width product.')
    neff_max.add_argument('--s', type=int, required=True)
    neff_max.add_argument('--uv', type=float, required=True, help='Width product Delta x Delta q.')
    neff_max.add_argument('--strict', action='store_true', help='Invert the strict bound instead.')
    neff_max.set_defaults(handler=cmd_neff_max)

    region = commands.add_parser('region', help='Whether a (uv, N_eff) point is physically realizable.')
    region.add_argument('--s', type=int, required=True)
    region.add_argument('--uv', type=float, required=True)
    region.add_argument('--neff', type=float, required=True)
    region.add_argument('--json', action='store_true')
    region.set_defaults(handler=cmd_region)

    return parser


def configure_logging(verbose):
    level = max(logging.WARNING - 10 * verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    configure_logging(args.verbose)
    if args.threads < 1:
        stderr.write('mixedstate: error: --threads must be at least 1\n')
        return EXIT_USAGE

    try:
        return args.handler(args, stdout)
    except BoundError as e:
        stderr.write('mixedstate: error: {}\n'.format(e))
        return EXIT_USAGE
    except OSError as e:
        stderr.write('mixedstate: error: {}\n'.format(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
