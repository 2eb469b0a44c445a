"""Brute-force minimization over shell weights.

Works from the objective and the two constraints alone,

    minimize   (1/2) sum_m g_s(m) w_m (2m/s + 1)
    subject to sum_m g_s(m) w_m = 1,  sum_m g_s(m) w_m^2 = mu,  w >= 0,

and never consults the closed-form eigenvalues, so agreement with them is
an independent check.
"""
import logging

import numpy as np

from ..error import TruncationError
from .base import (DEFAULT_RESTARTS, ShellResult, best_of, constrained_polish, penalty_ladder,
                   run_restarts)

__all__ = ['SHELL_TOLERANCE', 'TRUNCATION_TOLERANCE', 'minimize_shell']

logger = logging.getLogger(__name__)

SHELL_TOLERANCE = 1e-8

# Weight on the last retained shell above which the truncation is too tight.
TRUNCATION_TOLERANCE = 1e-9


def shell_functions(problem):
    def functional(weights):
        return problem.objective(weights), problem.costs

    def constraints(weights):
        g = problem.degeneracies
        values = np.array([g @ weights - 1.0, g @ weights ** 2 - problem.mu])
        return values, np.vstack([g, 2.0 * g * weights])

    return functional, constraints


def pure_shell_result(problem):
    # Purity 1 leaves a single mode, so only non-degenerate shells qualify.
    candidates = [m for m in range(problem.M) if problem.degeneracies[m] == 1]
    best = min(candidates, key=lambda m: problem.costs[m])
    weights = np.zeros(problem.M)
    weights[best] = 1.0
    return ShellResult(problem, weights, problem.objective(weights), problem.residuals(weights))


def minimize_shell(problem, seed, restarts=DEFAULT_RESTARTS, runner=None):
    if problem.mu == 1.0:
        return pure_shell_result(problem)
    functional, constraints = shell_functions(problem)
    bounds = [(0.0, None)] * problem.M

    def restart(rng):
        start = np.zeros(problem.M)
        start[:-1] = rng.dirichlet(np.ones(problem.M - 1)) / problem.degeneracies[:-1]
        rough = penalty_ladder(functional, constraints, start, bounds=bounds)
        polished = np.clip(constrained_polish(functional, constraints, rough, bounds=bounds), 0.0, None)
        feasible = max(problem.residuals(polished).values()) <= SHELL_TOLERANCE
        weights = polished if feasible else np.clip(rough, 0.0, None)
        return problem.objective(weights), problem.residuals(weights), weights

    outcomes = run_restarts(restart, seed, restarts, runner)
    weights = best_of(outcomes, SHELL_TOLERANCE, {'s': problem.s, 'mu': problem.mu, 'M': problem.M})
    if weights[-1] > TRUNCATION_TOLERANCE:
        raise TruncationError('Optimal weights reach the last retained shell; raise M.', 2 * problem.M, {
            's': problem.s,
            'mu': problem.mu,
            'M': problem.M,
            'last_weight': float(weights[-1]),
        })
    logger.info('Shell oracle s=%d mu=%r: objective=%r over %d restarts',
                problem.s, problem.mu, problem.objective(weights), restarts)
    return ShellResult(
        problem,
        weights,
        problem.objective(weights),
        problem.residuals(weights),
        restart_objectives=[objective for objective, _, _ in outcomes],
    )
