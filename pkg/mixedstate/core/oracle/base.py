import logging

import numpy as np
from scipy.optimize import minimize

from ..error import ConvergenceError, DomainError
from ..oscillator.basis import momentum_squared_matrix, position_squared_matrix
from ..runners import SynchronousRunner
from ..shells import check_dimension, degeneracy, mode_count

__all__ = [
    'DEFAULT_RESTARTS',
    'PENALTY_LADDER',
    'MatrixProblem',
    'MatrixResult',
    'ShellProblem',
    'ShellResult',
    'default_truncation',
]

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 16

# (penalty weight, gradient tolerance) stages run before the constrained polish.
PENALTY_LADDER = (
    (1e1, 1e-4),
    (1e3, 1e-6),
    (1e5, 1e-8),
)

POLISH_FTOL = 1e-15
POLISH_MAX_ITERATIONS = 1000
STAGE_MAX_ITERATIONS = 5000


def check_purity(mu):
    if not 0 < mu <= 1:
        raise DomainError('The purity target must lie in (0, 1].', {'mu': mu})


def default_truncation(s, mu):
    """2 L_min + 4 shells, L_min the fewest shells holding 1 / mu modes."""
    L = 1
    while mode_count(s, L) * mu < 1.0 - 1e-12:
        L += 1
    return 2 * L + 4


class ShellProblem(object):
    """Shell weights minimizing the width product at purity mu, over M shells."""

    def __init__(self, s, mu, M=None):
        check_dimension(s)
        check_purity(mu)
        self.s = s
        self.mu = float(mu)
        self.M = default_truncation(s, mu) if M is None else M
        if self.M < 2:
            raise DomainError('The truncation needs at least two shells.', {'M': self.M})
        if mu * mode_count(s, self.M) < 1.0 - 1e-12:
            raise DomainError('Purity target is below what M shells can reach.', {
                's': s,
                'mu': mu,
                'M': self.M,
                'min_mu': 1.0 / mode_count(s, self.M),
            })
        shells = np.arange(self.M)
        self.degeneracies = np.array([degeneracy(s, m) for m in shells], dtype=float)
        # Width product contributed per unit weight of each shell (k = 1).
        self.costs = self.degeneracies * (2.0 * shells / s + 1.0) / 2.0

    def objective(self, weights):
        return float(self.costs @ weights)

    def residuals(self, weights):
        return {
            'trace': abs(float(self.degeneracies @ weights) - 1.0),
            'purity': abs(float(self.degeneracies @ weights ** 2) - self.mu),
        }

    def __repr__(self):
        return '<ShellProblem s={} mu={!r} M={}>'.format(self.s, self.mu, self.M)


class ShellResult(object):
    def __init__(self, problem, weights, objective, residuals, restart_objectives=()):
        self.problem = problem
        self.weights = weights
        self.objective = objective
        self.residuals = residuals
        self.restart_objectives = list(restart_objectives)

    @property
    def n_eff(self):
        return 1.0 / self.problem.mu

    def __repr__(self):
        return '<ShellResult s={} mu={!r} objective={!r}>'.format(self.problem.s, self.problem.mu, self.objective)


class MatrixProblem(object):
    """Density matrices of order `dim` in the s = 1 oscillator basis at purity mu.

    x2_op and p2_op hold X^2 and P^2 for k = 1.
    """

    def __init__(self, dim, mu):
        check_purity(mu)
        if dim < 2:
            raise DomainError('The matrix order must be at least 2.', {'dim': dim})
        if mu * dim < 1.0 - 1e-12:
            raise DomainError('Purity target is below what dim modes can reach.', {
                'dim': dim,
                'mu': mu,
                'min_mu': 1.0 / dim,
            })
        self.dim = dim
        self.mu = float(mu)
        self.x2_op = position_squared_matrix(dim)
        self.p2_op = momentum_squared_matrix(dim)

    def moments(self, rho):
        """(tr rho X^2, tr rho P^2)."""
        return float(np.sum(rho * self.x2_op)), float(np.sum(rho * self.p2_op))

    def __repr__(self):
        return '<MatrixProblem dim={} mu={!r}>'.format(self.dim, self.mu)


class MatrixResult(object):
    def __init__(self, problem, rho, objective, off_diagonal_norm, residuals, restart_objectives=()):
        self.problem = problem
        self.rho = rho
        self.objective = objective
        self.off_diagonal_norm = off_diagonal_norm
        self.residuals = residuals
        self.restart_objectives = list(restart_objectives)

    @property
    def diagonal(self):
        return np.diag(self.rho)

    def __repr__(self):
        return '<MatrixResult dim={} mu={!r} objective={!r}>'.format(
            self.problem.dim, self.problem.mu, self.objective)


def penalty_ladder(functional, constraints, start, bounds=None, ladder=PENALTY_LADDER):
    """Minimize functional + (weight / 2) |constraints|^2 for increasing weights.

    `functional` and `constraints` return (value, gradient) and
    (values, jacobian) respectively.
    """
    x = start
    for weight, gtol in ladder:
        def penalized(x):
            value, gradient = functional(x)
            values, jacobian = constraints(x)
            return value + weight / 2.0 * float(values @ values), gradient + weight * (values @ jacobian)

        result = minimize(penalized, x, jac=True, method='L-BFGS-B', bounds=bounds,
                          options={'gtol': gtol, 'maxiter': STAGE_MAX_ITERATIONS})
        x = result.x
        logger.debug('Penalty stage weight=%.0e: value=%r (%s)', weight, result.fun, result.message)
    return x


def constrained_polish(functional, constraints, start, bounds=None):
    """Equality-constrained SLSQP from a penalty solution."""
    count = len(constraints(start)[0])
    equalities = [{
        'type': 'eq',
        'fun': lambda x, i=i: constraints(x)[0][i],
        'jac': lambda x, i=i: constraints(x)[1][i],
    } for i in range(count)]
    result = minimize(lambda x: functional(x)[0], start, jac=lambda x: functional(x)[1],
                      method='SLSQP', bounds=bounds, constraints=equalities,
                      options={'ftol': POLISH_FTOL, 'maxiter': POLISH_MAX_ITERATIONS})
    logger.debug('Constrained polish: value=%r (%s)', result.fun, result.message)
    return result.x


def restart_generators(seed, restarts):
    return [np.random.default_rng(child) for child in np.random.SeedSequence(seed).spawn(restarts)]


def best_of(candidates, tolerance, context):
    """Lowest-objective candidate whose residuals stay within tolerance.

    Candidates are (objective, residuals, payload) in restart order; ties keep
    the earliest restart.
    """
    feasible = [
        (objective, index, payload)
        for index, (objective, residuals, payload) in enumerate(candidates)
        if max(residuals.values()) <= tolerance
    ]
    if not feasible:
        closest = min(candidates, key=lambda candidate: max(candidate[1].values()))
        raise ConvergenceError('No restart satisfied the constraints.', closest[1], dict(context, tolerance=tolerance))
    objective, index, payload = min(feasible, key=lambda item: (item[0], item[1]))
    logger.debug('Best restart %d of %d: objective=%r', index, len(candidates), objective)
    return payload


def run_restarts(restart, seed, restarts, runner):
    runner = runner or SynchronousRunner()
    return runner.map(restart, restart_generators(seed, restarts))
