import logging
import math

import numpy as np

from ..error import DomainError
from ..shells import multi_indices
from .basis import DEFAULT_HALF_WIDTH, DEFAULT_POINTS, OscillatorBasis, default_axis, trapezoid_weights

__all__ = [
    'DEFAULT_HALF_WIDTH_2D',
    'DEFAULT_POINTS_2D',
    'DensityMatrixGrid',
    'build_density_grid',
    'required_half_width',
    'swap_residual',
    'symmetry_residual',
]

logger = logging.getLogger(__name__)

DEFAULT_POINTS_2D = 41
DEFAULT_HALF_WIDTH_2D = 8.0

SUPPORTED_DIMENSIONS = (1, 2)


def required_half_width(spectrum):
    """Smallest half-width each axis must cover for the occupied modes."""
    return (math.sqrt(2.0 * spectrum.L + spectrum.s) + 4.0) / spectrum.k


class DensityMatrixGrid(object):
    """A density matrix rho(X, X') sampled on a coordinate grid.

    For s = 1 `values[i, j]` is rho(x_i, x_j). For s = 2 the points are
    flattened with x_1 major, so `values[i1 * P + i2, j1 * P + j2]` is
    rho(x1_i1, x2_i2, x1_j1, x2_j2) with P the points per axis; `tensor()`
    returns the 4-index view in the order (x1, x2, x1', x2').
    """

    def __init__(self, spectrum, axes, values, basis):
        self.spectrum = spectrum
        self.s = spectrum.s
        self.axes = tuple(axes)
        self.values = values
        self.basis = basis
        self.values.setflags(write=False)

    def weights(self):
        """Trapezoid weights of the flattened grid points."""
        weights = trapezoid_weights(self.axes[0])
        for axis in self.axes[1:]:
            weights = np.outer(weights, trapezoid_weights(axis)).ravel()
        return weights

    def squared_radius(self):
        """x_1^2 + ... + x_s^2 at the flattened grid points."""
        if self.s == 1:
            return self.axes[0] ** 2
        x1, x2 = np.meshgrid(self.axes[0], self.axes[1], indexing='ij')
        return (x1 ** 2 + x2 ** 2).ravel()

    def diagonal(self):
        return np.diag(self.values)

    def trace(self):
        return float(self.weights() @ self.diagonal())

    def tensor(self):
        shape = tuple(len(axis) for axis in self.axes)
        return self.values.reshape(shape + shape)

    def __repr__(self):
        return '<DensityMatrixGrid s={} points={}>'.format(self.s, [len(axis) for axis in self.axes])


def check_axes(spectrum, axes):
    half_width = required_half_width(spectrum)
    checked = []
    for axis in axes:
        axis = np.asarray(axis, dtype=float)
        trapezoid_weights(axis)
        if axis[0] > -half_width or axis[-1] < half_width:
            raise DomainError('Grid axis does not cover the occupied modes.', {
                'required_span': (-half_width, half_width),
                'axis_span': (float(axis[0]), float(axis[-1])),
            })
        checked.append(axis)
    return checked


def default_axes(spectrum):
    if spectrum.s == 1:
        half_width = max(DEFAULT_HALF_WIDTH, required_half_width(spectrum) * spectrum.k)
        return [default_axis(spectrum.k, DEFAULT_POINTS, half_width)]
    half_width = max(DEFAULT_HALF_WIDTH_2D, math.ceil(required_half_width(spectrum) * spectrum.k))
    return [default_axis(spectrum.k, DEFAULT_POINTS_2D, half_width)] * 2


def build_density_grid(spectrum, axes=None):
    """Sample sum_n a_n psi_n(X) psi_n(X') over the occupied modes."""
    if spectrum.s not in SUPPORTED_DIMENSIONS:
        raise DomainError('Coordinate grids are only built for s = 1 and s = 2.', {'s': spectrum.s})
    axes = default_axes(spectrum) if axes is None else list(axes)
    if len(axes) != spectrum.s:
        raise DomainError('One axis per dimension is required.', {'s': spectrum.s, 'axes': len(axes)})
    axes = check_axes(spectrum, axes)

    # Two extra modes let the momentum projection see the X^2 couplings.
    basis = OscillatorBasis(spectrum.k, n_max=spectrum.L + 1)
    if spectrum.s == 1:
        table = basis.modes(axes[0], n_max=spectrum.L - 1)
        coefficients = np.asarray(spectrum.shell_weights)
    else:
        first, second = basis.modes(axes[0]), basis.modes(axes[1])
        rows, coefficients = [], []
        for m, weight in enumerate(spectrum.shell_weights):
            for n1, n2 in multi_indices(2, m):
                rows.append(np.outer(first[n1], second[n2]).ravel())
                coefficients.append(weight)
        table = np.array(rows)
        coefficients = np.asarray(coefficients)

    values = (table.T * coefficients) @ table
    values = (values + values.T) / 2.0
    logger.debug('Density grid s=%d L=%d: %d points', spectrum.s, spectrum.L, values.shape[0])
    return DensityMatrixGrid(spectrum, axes, values, basis)


def symmetry_residual(grid):
    return float(np.max(np.abs(grid.values - grid.values.T)))


def swap_residual(grid):
    """Largest change of rho under x1 <-> x2, x1' <-> x2'."""
    if grid.s != 2:
        raise DomainError('Coordinate swaps need a two-dimensional grid.', {'s': grid.s})
    if len(grid.axes[0]) != len(grid.axes[1]) or not np.array_equal(grid.axes[0], grid.axes[1]):
        raise DomainError('Coordinate swaps need identical axes.')
    tensor = grid.tensor()
    return float(np.max(np.abs(tensor - tensor.transpose(1, 0, 3, 2))))
