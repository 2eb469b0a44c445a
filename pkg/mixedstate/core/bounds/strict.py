import logging

import numpy as np
from scipy.optimize import brentq

from ..error import DomainError
from ..shells import check_dimension
from ..spectrum import admissible_layers, check_n_eff, layer_bound, select_layer

__all__ = [
    'MARGIN_TOLERANCE',
    'BoundEvaluation',
    'strict_bound',
    'strict_max_neff',
    'is_realizable',
    'packing_coefficient',
]

logger = logging.getLogger(__name__)

# Slack allowed when testing a point against the strict boundary.
MARGIN_TOLERANCE = 1e-10


def packing_coefficient(s, bound, n_eff):
    """C(s, N_eff) = (2B)^s / N_eff, equal to 1 for pure states."""
    return (2.0 * bound) ** s / n_eff


class BoundEvaluation(object):
    """The strict lower bound on the width product at one (s, N_eff).

    `admissible` is the (first, last) pair of the admissible layer counts and
    `L` the one realizing the bound. `B` is dimensionless (hbar = 1).
    `approx` optionally carries the smooth approximation at the same point.
    """

    def __init__(self, s, n_eff, L, admissible, B, approx=None):
        self.s = s
        self.n_eff = n_eff
        self.L = L
        self.admissible = admissible
        self.B = B
        self.packing = packing_coefficient(s, B, n_eff)
        self.approx = approx

    def as_dict(self):
        return {
            's': self.s,
            'n_eff': self.n_eff,
            'L': self.L,
            'admissible': list(self.admissible),
            'B_strict': self.B,
            'C_strict': self.packing,
        }

    def __repr__(self):
        return '<BoundEvaluation s={} n_eff={!r} L={} B={!r}>'.format(self.s, self.n_eff, self.L, self.B)


def strict_bound(s, n_eff):
    check_dimension(s)
    check_n_eff(n_eff)
    layers = admissible_layers(s, n_eff)
    L = select_layer(s, n_eff)
    return BoundEvaluation(s, n_eff, L, (layers[0], layers[-1]), layer_bound(s, n_eff, L))


def strict_max_neff(s, uv):
    """Largest N_eff whose strict bound does not exceed the width product uv.

    This is the inverse problem: the same physical region described as an
    upper limit on N_eff at a given phase volume.
    """
    check_dimension(s)
    if not uv >= 0.5:
        raise DomainError('The width product cannot be below 1/2.', {'s': s, 'uv': uv})
    if uv == 0.5:
        return 1.0

    def excess(n_eff):
        return strict_bound(s, n_eff).B - uv

    low, high = 1.0, 2.0
    while excess(high) < 0:
        low, high = high, 2.0 * high
    root = brentq(excess, low, high, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=200)
    logger.debug('Strict inverse s=%d uv=%r: n_eff=%r', s, uv, root)
    return root


def is_realizable(s, uv, n_eff, tolerance=MARGIN_TOLERANCE):
    """Whether a state with width product uv and N_eff lies in the physical region."""
    return uv >= strict_bound(s, n_eff).B - tolerance
