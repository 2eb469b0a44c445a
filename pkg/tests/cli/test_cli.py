import csv
import json
import math
from io import StringIO

from pytest import approx

from mixedstate.cli import DEFAULT_GRID_POINTS, EXIT_OK, EXIT_USAGE, build_parser, grid_points, main
from mixedstate.core.oscillator import DEFAULT_POINTS_2D


def run(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_bound_json():
    code, out, _ = run('bound', '--s', '1', '--neff', '2', '--json')
    assert code == EXIT_OK
    report = json.loads(out)
    assert list(report) == ['n_eff', 'L', 'admissible', 'B_strict', 'B_approx', 'L_tilde', 'C_strict', 'C_asymptotic']
    assert report['L'] == 3
    assert report['admissible'] == [2, 3]
    assert report['B_strict'] == approx(0.9226497308, abs=1e-10)
    assert report['C_asymptotic'] == approx(8.0 / 9.0)


def test_bound_text():
    code, out, _ = run('bound', '--s', '1', '--neff', '1.5')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert 'L: 2' in lines
    assert 'admissible: 2..2' in lines
    assert 'B_strict: 0.711324865405' in lines


def test_spectrum_csv():
    code, out, _ = run('spectrum', '--s', '1', '--neff', '1.5')
    assert code == EXIT_OK
    rows = list(csv.reader(StringIO(out)))
    assert rows[0] == ['shell', 'degeneracy', 'weight', 'cumulative']
    assert len(rows) == 3
    assert rows[1][:2] == ['0', '1']
    assert float(rows[1][2]) == approx(0.788675134595)
    assert float(rows[2][3]) == approx(1.0)


def test_curve_csv():
    code, out, _ = run('curve', '--s', '1,2', '--neff-min', '1', '--neff-max', '2', '--points', '3')
    assert code == EXIT_OK
    rows = list(csv.reader(StringIO(out)))
    assert rows[0][:3] == ['n_eff', 'L_s1', 'B_strict_s1']
    assert len(rows[0]) == 13
    assert [row[0] for row in rows[1:]] == ['1', '1.5', '2']
    assert float(rows[3][2]) == approx(0.9226497308)


def test_curve_written_to_file(tmpdir):
    path = str(tmpdir.join('curve.csv'))
    code, out, _ = run('--threads', '2', 'curve', '--s', '3', '--neff-min', '1', '--neff-max', '100',
                       '--points', '20', '--log', '--out', path)
    assert code == EXIT_OK
    assert out == ''
    with open(path) as stream:
        rows = list(csv.reader(stream))
    assert len(rows) == 21
    assert float(rows[-1][0]) == 100.0


def test_grid_csv():
    code, out, _ = run('grid', '--neff', '1', '--points', '11')
    assert code == EXIT_OK
    rows = list(csv.reader(StringIO(out)))
    assert rows[0] == ['x', 'x_prime', 'rho']
    assert len(rows) == 1 + 11 * 11
    centre = rows[1 + 5 * 11 + 5]
    assert float(centre[0]) == approx(0.0, abs=1e-12)
    assert float(centre[1]) == approx(0.0, abs=1e-12)
    assert float(centre[2]) == approx(1.0 / math.sqrt(math.pi))


def test_grid_points_default_per_dimension():
    args = build_parser().parse_args(['grid', '--s', '2', '--neff', '3'])
    assert args.points is None
    assert grid_points(2, args.points) == DEFAULT_POINTS_2D == 41
    assert grid_points(1, None) == DEFAULT_GRID_POINTS
    assert grid_points(2, 9) == 9


def test_two_dimensional_grid_csv():
    code, out, _ = run('grid', '--s', '2', '--neff', '1.5', '--points', '7')
    assert code == EXIT_OK
    rows = list(csv.reader(StringIO(out)))
    assert rows[0] == ['x1', 'x2', 'x1_prime', 'x2_prime', 'rho']
    assert len(rows) == 1 + 7 ** 4


def test_verify_reports_each_suite():
    code, out, _ = run('verify', '--suite', 'shells', '--seed', '3')
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0]['suite'] == 'shells'
    assert lines[0]['passed'] is True
    assert lines[-1] == {'summary': True, 'passed': True, 'suites': ['shells'], 'failed_suites': [], 'failures': 0}


def test_neff_max():
    code, out, _ = run('neff-max', '--s', '1', '--uv', '0.7113248654', '--strict')
    assert code == EXIT_OK
    assert float(out) == approx(1.5, rel=1e-8)
    code, out, _ = run('neff-max', '--s', '2', '--uv', '3')
    assert code == EXIT_OK
    assert float(out) > 1.0


def test_region():
    code, out, _ = run('region', '--s', '1', '--uv', '0.5', '--neff', '1', '--json')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['realizable'] is True
    assert report['margin'] == 0.0
    code, out, _ = run('region', '--s', '1', '--uv', '0.6', '--neff', '2')
    assert 'realizable: no' in out.splitlines()


def test_domain_errors_exit_with_usage_status():
    code, out, err = run('bound', '--s', '0', '--neff', '2')
    assert code == EXIT_USAGE
    assert out == ''
    assert err.startswith('mixedstate: error: ')
    assert run('bound', '--s', '1', '--neff', '0.5')[0] == EXIT_USAGE
    assert run('grid', '--neff', '3', '--points', '11', '--half-width', '2')[0] == EXIT_USAGE


def test_usage_errors():
    assert run('bound', '--s', '1')[0] == EXIT_USAGE
    assert run('verify', '--suite', 'gravity')[0] == EXIT_USAGE
    assert run('--threads', '0', 'bound', '--s', '1', '--neff', '2')[0] == EXIT_USAGE
