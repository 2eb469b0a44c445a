"""Smooth approximation of the strict boundary.

Treating the layer count as a continuous parameter L~ and asking the
eigenvalue formula to reach zero exactly at m = L~ gives

    N_eff = (s + 2) Gamma(L~ + s + 1) / ((s + 2 L~) (s + 1)! Gamma(L~))

and the boundary in parametric form Delta_x Delta_q >= (s + 2 L~) / (2 (s + 2)).
Eliminating L~ yields the closed-form limit on N_eff at a given width product
(see `max_neff`). For integer s the Gamma ratio is the rising product
L~ (L~ + 1) ... (L~ + s), summed in log space so it stays exact for large L~.
"""
import logging
import math

import numpy as np
from scipy.optimize import bisect

from ..error import ConvergenceError, DomainError, OutOfRangeError
from ..shells import check_dimension, log_gamma
from ..spectrum import check_n_eff

__all__ = [
    'ROOT_MAX_ITERATIONS',
    'ROOT_RESIDUAL_RTOL',
    'ApproxBound',
    'approx_bound',
    'log_layer_n_eff',
    'max_neff',
]

logger = logging.getLogger(__name__)

ROOT_MAX_ITERATIONS = 200
ROOT_RESIDUAL_RTOL = 1e-12

# Largest residual an ApproxBound may carry.
ROOT_ACCEPT_RTOL = 1e-10

# Bracket growth stops here when the caller gives no explicit limit.
BRACKET_LIMIT = 2.0 ** 60

# scipy's bisect refuses relative tolerances below 4 eps.
BISECT_RTOL = 4 * np.finfo(float).eps


def log_rising(x, count):
    """log of x (x + 1) ... (x + count - 1)."""
    return math.fsum(math.log(x + j) for j in range(count))


def log_layer_n_eff(s, l_tilde):
    """log N_eff reached by the continuous layer parameter."""
    return (math.log(s + 2.0) + log_rising(l_tilde, s + 1) - math.log(s + 2.0 * l_tilde)
            - log_gamma(s + 2.0))


class ApproxBound(object):
    def __init__(self, s, n_eff, l_tilde, residual=0.0):
        self.s = s
        self.n_eff = n_eff
        self.l_tilde = l_tilde
        self.B_approx = (s + 2.0 * l_tilde) / (2.0 * (s + 2))
        self.residual = residual

    @property
    def packing(self):
        return (2.0 * self.B_approx) ** self.s / self.n_eff

    def __repr__(self):
        return '<ApproxBound s={} n_eff={!r} l_tilde={!r}>'.format(self.s, self.n_eff, self.l_tilde)


def bracket_layer(s, target, l_max):
    limit = BRACKET_LIMIT if l_max is None else l_max
    low, high = 1.0, min(2.0, limit)
    while log_layer_n_eff(s, high) < target:
        if high >= limit:
            needed = high
            while log_layer_n_eff(s, needed) < target and needed < BRACKET_LIMIT:
                needed *= 2.0
            raise OutOfRangeError('Layer parameter root is not bracketed; raise l_max.', {
                's': s,
                'l_max': limit,
                'needed_l_max': needed,
            })
        low, high = high, min(2.0 * high, limit)
    assert log_layer_n_eff(s, low) <= target <= log_layer_n_eff(s, high), \
        'Layer parameter map is not increasing on [{}, {}].'.format(low, high)
    return low, high


def approx_bound(s, n_eff, l_max=None):
    check_dimension(s)
    check_n_eff(n_eff)
    target = math.log(n_eff)
    # Rounding can leave the left end a hair above targets next to 1.
    if n_eff == 1 or log_layer_n_eff(s, 1.0) >= target:
        return ApproxBound(s, n_eff, 1.0)

    low, high = bracket_layer(s, target, l_max)
    l_tilde, result = bisect(
        lambda l_tilde: log_layer_n_eff(s, l_tilde) - target,
        low, high,
        xtol=1e-15,
        rtol=BISECT_RTOL,
        maxiter=ROOT_MAX_ITERATIONS,
        full_output=True,
        disp=False,
    )
    residual = abs(math.expm1(log_layer_n_eff(s, l_tilde) - target))
    logger.debug('Layer parameter s=%d n_eff=%r: %r after %d iterations (residual %.3g)',
                 s, n_eff, l_tilde, result.iterations, residual)
    if residual > ROOT_ACCEPT_RTOL or not result.converged:
        raise ConvergenceError('Layer parameter bisection did not converge.', {'residual': residual}, {
            's': s,
            'n_eff': n_eff,
            'iterations': result.iterations,
        })
    if residual > ROOT_RESIDUAL_RTOL:
        logger.warning('Layer parameter residual %.3g above %.0e for s=%d n_eff=%r',
                       residual, ROOT_RESIDUAL_RTOL, s, n_eff)
    return ApproxBound(s, n_eff, l_tilde, residual)


def max_neff(s, uv):
    """Largest N_eff the smooth boundary allows at width product uv."""
    check_dimension(s)
    if not uv >= 0.5:
        raise DomainError('The width product cannot be below 1/2.', {'s': s, 'uv': uv})
    # Equal to L~ on the boundary; at least 1 for uv >= 1/2.
    shifted = (s + 2) * uv - s / 2.0
    return math.exp(log_rising(shifted, s + 1) - log_gamma(s + 2.0) - math.log(2.0 * uv))
