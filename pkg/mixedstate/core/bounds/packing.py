import collections
import logging
import math
from fractions import Fraction

import numpy as np

from ..error import DomainError
from ..runners import SynchronousRunner
from ..shells import check_dimension
from .approx import approx_bound
from .strict import packing_coefficient, strict_bound

__all__ = [
    'CurvePoint',
    'CurveRow',
    'PackingCurve',
    'PackingCounterexample',
    'approximation_gap',
    'asymptotic_packing',
    'n_eff_grid',
    'packing_counterexamples',
    'packing_curve',
    'search_packing_counterexamples',
]

logger = logging.getLogger(__name__)

CurvePoint = collections.namedtuple('CurvePoint', 'L B_strict B_approx C_strict C_approx C_asymptotic')
CurveRow = collections.namedtuple('CurveRow', 'n_eff points')
PackingCounterexample = collections.namedtuple('PackingCounterexample', 'n_eff packing_ks packing_s_power')

# Grid searched for counterexamples to the finite packing inequality.
COUNTEREXAMPLE_SEARCH_MAX = 50.0
COUNTEREXAMPLE_SEARCH_POINTS = 2000
COUNTEREXAMPLE_WIDENINGS = 3


def asymptotic_packing(s):
    """C(s) = 2^(s+1) (s+1)! / (s+2)^(s+1), the large-N_eff packing coefficient."""
    check_dimension(s)
    return float(Fraction(2 ** (s + 1) * math.factorial(s + 1), (s + 2) ** (s + 1)))


def n_eff_grid(n_eff_min, n_eff_max, points, log_spacing=False):
    """Strictly increasing sample points with exact endpoints."""
    if not 1 <= n_eff_min <= n_eff_max:
        raise DomainError('Grid needs 1 <= n_eff_min <= n_eff_max.', {
            'n_eff_min': n_eff_min,
            'n_eff_max': n_eff_max,
        })
    if n_eff_min == n_eff_max:
        return [float(n_eff_min)]
    if points < 2:
        raise DomainError('A grid over a non-empty interval needs at least two points.', {'points': points})
    if log_spacing:
        grid = np.geomspace(n_eff_min, n_eff_max, points)
    else:
        grid = np.linspace(n_eff_min, n_eff_max, points)
    grid[0], grid[-1] = n_eff_min, n_eff_max
    grid = [float(n_eff) for n_eff in grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError('Grid points are not strictly increasing; use fewer points.', {'points': points})
    return grid


def curve_point(s, n_eff):
    try:
        strict = strict_bound(s, n_eff)
        approx = approx_bound(s, n_eff)
    except DomainError as e:
        raise DomainError(e.message, dict(e.context, s=s, n_eff=n_eff))
    return CurvePoint(
        L=strict.L,
        B_strict=strict.B,
        B_approx=approx.B_approx,
        C_strict=strict.packing,
        C_approx=approx.packing,
        C_asymptotic=asymptotic_packing(s),
    )


class PackingCurve(object):
    """Packing coefficients sampled over N_eff for several dimensions.

    `rows[i].points[j]` belongs to dimension `s_list[j]`.
    """

    def __init__(self, s_list, rows):
        self.s_list = tuple(s_list)
        self.rows = rows

    def column(self, s, field):
        index = self.s_list.index(s)
        return [getattr(row.points[index], field) for row in self.rows]

    @property
    def n_eff(self):
        return [row.n_eff for row in self.rows]

    def __len__(self):
        return len(self.rows)


def packing_curve(s_list, n_eff_min, n_eff_max, points, log_spacing=False, runner=None):
    s_list = list(s_list)
    if not s_list:
        raise DomainError('At least one dimension is required.')
    for s in s_list:
        check_dimension(s)
    grid = n_eff_grid(n_eff_min, n_eff_max, points, log_spacing)
    runner = runner or SynchronousRunner()

    def evaluate(n_eff):
        return CurveRow(n_eff, tuple(curve_point(s, n_eff) for s in s_list))

    rows = runner.map(evaluate, grid)
    logger.info('Packing curve: %d points for s=%s over [%r, %r]', len(rows), s_list, n_eff_min, n_eff_max)
    return PackingCurve(s_list, rows)


def packing_counterexamples(s, k, n_eff_grid_points):
    """Points where C(ks, N) <= C(s, N)^k fails.

    The inequality holds for the asymptotic coefficients but only from some
    N_eff onwards for the finite ones.
    """
    counterexamples = []
    for n_eff in n_eff_grid_points:
        packing_ks = strict_bound(k * s, n_eff).packing
        packing_s_power = strict_bound(s, n_eff).packing ** k
        if packing_ks > packing_s_power:
            counterexamples.append(PackingCounterexample(n_eff, packing_ks, packing_s_power))
    return counterexamples


def approximation_gap(s, n_eff_grid_points):
    """|C_approx - C_strict| at each grid point."""
    gaps = []
    for n_eff in n_eff_grid_points:
        strict = strict_bound(s, n_eff)
        gaps.append(abs(approx_bound(s, n_eff).packing - packing_coefficient(s, strict.B, n_eff)))
    return gaps


def search_packing_counterexamples(s, k, n_eff_max=COUNTEREXAMPLE_SEARCH_MAX, points=COUNTEREXAMPLE_SEARCH_POINTS,
                                   widenings=COUNTEREXAMPLE_WIDENINGS):
    """Counterexamples to C(ks, N) <= C(s, N)^k on a grid over (1, n_eff_max].

    The upper end is multiplied by 4 after each empty search, at most
    `widenings` times. Returns the counterexamples found and the upper end of
    the last range searched.
    """
    upper = float(n_eff_max)
    for attempt in range(widenings + 1):
        if attempt:
            upper *= 4.0
        found = packing_counterexamples(s, k, n_eff_grid(1.0, upper, points)[1:])
        if found:
            logger.info('Packing inequality s=%d k=%d fails at %d points on [%r, %r]',
                        s, k, len(found), found[0].n_eff, found[-1].n_eff)
            return found, upper
        logger.warning('No packing counterexample for s=%d k=%d on (1, %r]', s, k, upper)
    return [], upper
