"""Widths and effective number of states of a sampled density matrix.

    (Delta x)^2 = (1/s) int X^2 rho(X, X) dX
    (Delta q)^2 = (1/s) int [-lap_X rho(X, X')]_{X' = X} dX
    N_eff       = 1 / int int rho(X, X')^2 dX dX'

The momentum width has two routes. The spectral one projects the grid back
onto the oscillator modes and uses the known matrix of P^2; the difference
one applies a five-point second difference along each coordinate, and flags
the result when the three-point stencil disagrees with it.
"""
import logging
import math

import numpy as np

from ..error import DomainError
from .basis import momentum_squared_matrix, trapezoid_weights

__all__ = [
    'DIFFERENCE_WARN_RTOL',
    'METHODS',
    'QuadratureMoments',
    'quadrature_moments',
]

logger = logging.getLogger(__name__)

METHODS = ('spectral', 'difference')

# Relative disagreement between the stencils above which the grid is too coarse.
DIFFERENCE_WARN_RTOL = 1e-2


class QuadratureMoments(object):
    def __init__(self, delta_x, delta_q, n_eff, trace, method, warnings=()):
        self.delta_x = delta_x
        self.delta_q = delta_q
        self.n_eff = n_eff
        self.trace = trace
        self.method = method
        self.warnings = list(warnings)

    @property
    def product(self):
        return self.delta_x * self.delta_q

    def as_tuple(self):
        return self.delta_x, self.delta_q, self.n_eff

    def __repr__(self):
        return '<QuadratureMoments delta_x={!r} delta_q={!r} n_eff={!r} method={}>'.format(
            self.delta_x, self.delta_q, self.n_eff, self.method)


def spectral_momentum(grid):
    dim = grid.basis.n_max + 1
    p2 = momentum_squared_matrix(dim, grid.basis.k)
    projected = [grid.basis.modes(axis) * trapezoid_weights(axis) for axis in grid.axes]
    if grid.s == 1:
        coefficients = projected[0] @ grid.values @ projected[0].T
        return float(np.trace(coefficients @ p2))
    first, second = projected
    coefficients = np.einsum('ai,bj,ijkl,ck,dl->abcd', first, second, grid.tensor(), first, second, optimize=True)
    # P^2 acts on one coordinate and leaves the other traced.
    return float(np.einsum('abcb,ca->', coefficients, p2) + np.einsum('abad,db->', coefficients, p2))


def second_difference(values, step, wide):
    """Second derivative along axis 0 at indices 2 .. P - 3."""
    if wide:
        return (-values[4:] + 16.0 * values[3:-1] - 30.0 * values[2:-2]
                + 16.0 * values[1:-3] - values[:-4]) / (12.0 * step ** 2)
    return (values[3:-1] - 2.0 * values[2:-2] + values[1:-3]) / step ** 2


def axis_step(axis):
    steps = np.diff(axis)
    if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
        raise DomainError('Second differences need a uniform axis.')
    return float(steps[0])


def difference_momentum(grid):
    """Kinetic term from finite differences, for the five- and three-point stencils."""
    totals = []
    for wide in (True, False):
        total = 0.0
        if grid.s == 1:
            axis = grid.axes[0]
            # Column j of rho differentiated in its first argument, read at row j.
            columns = np.arange(2, len(axis) - 2)
            curvature = second_difference(grid.values, axis_step(axis), wide)[np.arange(len(columns)), columns]
            total -= float(trapezoid_weights(axis)[2:-2] @ curvature)
        else:
            tensor = grid.tensor()
            points = [len(axis) for axis in grid.axes]
            i1, i2 = np.meshgrid(np.arange(points[0]), np.arange(points[1]), indexing='ij')
            # rho(x1, x2, x1', x2') as a function of x1 (resp. x2) at fixed primed coordinates.
            along_first = tensor[:, i2, i1, i2]
            along_second = np.moveaxis(tensor[i1, :, i1, i2], 2, 0)
            weights = np.outer(trapezoid_weights(grid.axes[0]), trapezoid_weights(grid.axes[1]))
            curvature = second_difference(along_first, axis_step(grid.axes[0]), wide)
            rows = np.arange(2, points[0] - 2)
            total -= float(np.sum(weights[2:-2] * curvature[rows - 2, rows]))
            curvature = second_difference(along_second, axis_step(grid.axes[1]), wide)
            rows = np.arange(2, points[1] - 2)
            total -= float(np.sum(weights[:, 2:-2] * curvature[rows - 2, :, rows].T))
        totals.append(total)
    return totals


def quadrature_moments(grid, method='spectral'):
    if method not in METHODS:
        raise DomainError('Unknown momentum route.', {'method': method, 'choices': METHODS})
    s = grid.s
    weights = grid.weights()
    diagonal = grid.diagonal()
    trace = float(weights @ diagonal)
    position = float(weights @ (grid.squared_radius() * diagonal)) / s
    purity = float(weights @ (grid.values ** 2) @ weights)

    warnings = []
    if method == 'spectral':
        momentum = spectral_momentum(grid) / s
    else:
        fine, coarse = difference_momentum(grid)
        momentum = fine / s
        disagreement = abs(fine - coarse) / abs(fine)
        if disagreement > DIFFERENCE_WARN_RTOL:
            message = 'Second differences not converged (relative change {:.3g}); refine the grid.'.format(
                disagreement)
            logger.warning(message)
            warnings.append(message)

    logger.debug('Quadrature s=%d %s: trace=%r purity=%r', s, method, trace, purity)
    return QuadratureMoments(
        delta_x=math.sqrt(position),
        delta_q=math.sqrt(momentum),
        n_eff=1.0 / purity,
        trace=trace,
        method=method,
        warnings=warnings,
    )
