import logging
import math

import numpy as np

from ..bounds.strict import MARGIN_TOLERANCE, strict_bound
from ..error import DomainError
from ..runners import SynchronousRunner
from ..shells import check_dimension, degeneracy

__all__ = ['AuditReport', 'AuditSample', 'random_mixture_audit', 'sample_weights']

logger = logging.getLogger(__name__)

DEFAULT_AUDIT_SHELLS = 8


class AuditSample(object):
    def __init__(self, weights, n_eff, uv, margin):
        self.weights = weights
        self.n_eff = n_eff
        self.uv = uv
        self.margin = margin

    def as_dict(self):
        return {'weights': list(self.weights), 'n_eff': self.n_eff, 'uv': self.uv, 'margin': self.margin}


class AuditReport(object):
    """Outcome of testing random shell mixtures against the strict boundary.

    Violations are collected rather than raised; `passed` is False when any
    sample falls below the boundary by more than the margin tolerance.
    """

    def __init__(self, s, count, violations, argmin):
        self.s = s
        self.count = count
        self.violations = violations
        self.argmin = argmin

    @property
    def passed(self):
        return not self.violations

    @property
    def min_margin(self):
        return self.argmin.margin

    @property
    def argmin_weights(self):
        return self.argmin.weights

    @property
    def argmin_n_eff(self):
        return self.argmin.n_eff

    def as_dict(self):
        return {
            's': self.s,
            'count': self.count,
            'violations': [sample.as_dict() for sample in self.violations],
            'min_margin': self.min_margin,
            'argmin_n_eff': self.argmin_n_eff,
            'argmin_weights': list(self.argmin_weights),
        }

    def __repr__(self):
        return '<AuditReport s={} count={} violations={} min_margin={!r}>'.format(
            self.s, self.count, len(self.violations), self.min_margin)


def sample_weights(rng, degeneracies):
    """Random shell weights over a random number of leading shells."""
    support = int(rng.integers(1, len(degeneracies) + 1))
    weights = np.zeros(len(degeneracies))
    weights[:support] = rng.dirichlet(np.ones(support)) / degeneracies[:support]
    return weights


def evaluate_sample(s, weights, degeneracies):
    shells = np.arange(len(weights))
    occupation = degeneracies * weights
    energy = math.fsum(occupation * (shells + s / 2.0))
    # Delta x = Delta q = sqrt(E / s) for k = 1.
    uv = energy / s
    n_eff = max(1.0, 1.0 / math.fsum(occupation * weights))
    return AuditSample(weights, n_eff, uv, uv - strict_bound(s, n_eff).B)


def random_mixture_audit(s, count, seed, shells=DEFAULT_AUDIT_SHELLS, runner=None):
    check_dimension(s)
    if count < 1:
        raise DomainError('The audit needs at least one sample.', {'count': count})
    degeneracies = np.array([degeneracy(s, m) for m in range(shells)], dtype=float)
    rng = np.random.default_rng(seed)
    pure = np.zeros(shells)
    pure[0] = 1.0
    samples = [pure] + [sample_weights(rng, degeneracies) for _ in range(count - 1)]

    runner = runner or SynchronousRunner()
    evaluated = runner.map(lambda weights: evaluate_sample(s, weights, degeneracies), samples)
    violations = [sample for sample in evaluated if sample.margin < -MARGIN_TOLERANCE]
    argmin = min(evaluated, key=lambda sample: sample.margin)
    if violations:
        logger.warning('Audit s=%d: %d of %d samples below the strict boundary', s, len(violations), count)
    logger.info('Audit s=%d: %d samples, min margin %.3g at n_eff=%r', s, count, argmin.margin, argmin.n_eff)
    return AuditReport(s, count, violations, argmin)
