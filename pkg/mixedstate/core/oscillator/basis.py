import logging
import math

import numpy as np

from ..error import DomainError, OutOfRangeError

__all__ = [
    'DEFAULT_HALF_WIDTH',
    'DEFAULT_N_MAX',
    'DEFAULT_POINTS',
    'OscillatorBasis',
    'default_axis',
    'mode_function',
    'momentum_squared_matrix',
    'orthonormality_matrix',
    'position_squared_matrix',
    'trapezoid_weights',
]

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 40
DEFAULT_HALF_WIDTH = 12.0
DEFAULT_POINTS = 1201


class OscillatorBasis(object):
    """Orthonormal eigenfunctions of the one-dimensional oscillator.

    psi_n(x) is evaluated by the three-term recurrence

        psi_0 = sqrt(k) pi^(-1/4) exp(-k^2 x^2 / 2)
        psi_n = sqrt(2/n) (k x) psi_{n-1} - sqrt((n-1)/n) psi_{n-2}

    which stays stable where explicit Hermite polynomials overflow.
    """

    def __init__(self, k=1.0, n_max=DEFAULT_N_MAX):
        if not k > 0:
            raise DomainError('The oscillator scale factor must be positive.', {'k': k})
        if n_max < 0:
            raise DomainError('n_max must be non-negative.', {'n_max': n_max})
        self.k = float(k)
        self.n_max = n_max

    def modes(self, x, n_max=None):
        """Rows 0..n_max of mode values at the points x."""
        n_max = self.n_max if n_max is None else n_max
        if n_max > self.n_max:
            raise OutOfRangeError('Mode index exceeds the basis size.', {'n': n_max, 'n_max': self.n_max})
        scaled = self.k * np.asarray(x, dtype=float)
        table = np.empty((n_max + 1,) + scaled.shape)
        table[0] = math.sqrt(self.k) * np.pi ** -0.25 * np.exp(-scaled ** 2 / 2.0)
        if n_max >= 1:
            table[1] = math.sqrt(2.0) * scaled * table[0]
        for n in range(2, n_max + 1):
            table[n] = math.sqrt(2.0 / n) * scaled * table[n - 1] - math.sqrt((n - 1.0) / n) * table[n - 2]
        return table

    def mode_function(self, n, x):
        if not 0 <= n <= self.n_max:
            raise OutOfRangeError('Mode index outside the basis.', {'n': n, 'n_max': self.n_max})
        values = self.modes(x, n_max=n)[n]
        return float(values) if np.ndim(values) == 0 else values

    def __repr__(self):
        return '<OscillatorBasis k={!r} n_max={}>'.format(self.k, self.n_max)


def mode_function(basis, n, x):
    return basis.mode_function(n, x)


def default_axis(k=1.0, points=DEFAULT_POINTS, half_width=DEFAULT_HALF_WIDTH):
    """Uniform axis over [-half_width / k, half_width / k]."""
    return np.linspace(-half_width / k, half_width / k, points)


def trapezoid_weights(axis):
    axis = np.asarray(axis, dtype=float)
    if axis.ndim != 1 or len(axis) < 2 or np.any(np.diff(axis) <= 0):
        raise DomainError('Quadrature axes must be strictly increasing with at least two points.')
    weights = np.zeros_like(axis)
    steps = np.diff(axis)
    weights[:-1] += steps / 2.0
    weights[1:] += steps / 2.0
    return weights


def orthonormality_matrix(basis, axis):
    """Gram matrix of modes 0..n_max under the trapezoid rule."""
    table = basis.modes(axis)
    return (table * trapezoid_weights(axis)) @ table.T


def position_squared_matrix(dim, k=1.0):
    """X^2 in the first `dim` oscillator modes."""
    n = np.arange(dim)
    matrix = np.diag((2.0 * n + 1.0) / 2.0)
    off = np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0)) / 2.0
    matrix[n[:-2], n[:-2] + 2] = off
    matrix[n[:-2] + 2, n[:-2]] = off
    return matrix / k ** 2


def momentum_squared_matrix(dim, k=1.0):
    """P^2 = -d^2/dx^2 in the first `dim` oscillator modes."""
    n = np.arange(dim)
    matrix = np.diag((2.0 * n + 1.0) / 2.0)
    off = -np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0)) / 2.0
    matrix[n[:-2], n[:-2] + 2] = off
    matrix[n[:-2] + 2, n[:-2]] = off
    return matrix * k ** 2
