"""Minimization over full density matrices for s = 1.

rho = G G^T / tr(G G^T) is symmetric, positive semidefinite and of unit
trace for any real factor G, so only the purity needs a constraint. The
width product is invariant under squeezing, which leaves a family of
minimizers; minimizing F = tr(rho X^2) + tr(rho P^2) picks the unsqueezed
member, and min F = 2 min (Delta x Delta q).
"""
import logging
import math

import numpy as np
from scipy.optimize import minimize

from .base import (DEFAULT_RESTARTS, MatrixResult, best_of, constrained_polish, penalty_ladder,
                   run_restarts)

__all__ = ['MATRIX_TOLERANCE', 'minimize_matrix']

logger = logging.getLogger(__name__)

MATRIX_TOLERANCE = 1e-6

PURE_GTOL = 1e-12


def matrix_functions(problem, rank):
    dim = problem.dim
    total = problem.x2_op + problem.p2_op

    def unpack(x):
        factor = x.reshape(dim, rank)
        product = factor @ factor.T
        return factor, product, np.trace(product)

    def functional(x):
        factor, product, trace = unpack(x)
        value = float(np.sum(product * total)) / trace
        gradient = 2.0 / trace * (total @ factor - value * factor)
        return value, gradient.ravel()

    def constraints(x):
        factor, product, trace = unpack(x)
        purity = float(np.sum(product * product)) / trace ** 2
        purity_gradient = 4.0 / trace ** 2 * (product @ factor - purity * trace * factor)
        values = np.array([purity - problem.mu, trace - 1.0])
        return values, np.vstack([purity_gradient.ravel(), 2.0 * factor.ravel()])

    return functional, constraints, unpack


def summarize(problem, rho):
    rho = (rho + rho.T) / 2.0
    x2, p2 = problem.moments(rho)
    residuals = {
        'trace': abs(float(np.trace(rho)) - 1.0),
        'purity': abs(float(np.sum(rho * rho)) - problem.mu),
        'negativity': max(0.0, -float(np.linalg.eigvalsh(rho)[0])),
    }
    return rho, x2 + p2, math.sqrt(x2 * p2), residuals


def minimize_matrix(problem, seed, restarts=DEFAULT_RESTARTS, runner=None):
    pure = problem.mu == 1.0
    rank = 1 if pure else problem.dim
    functional, constraints, unpack = matrix_functions(problem, rank)
    decay = np.exp(-np.arange(problem.dim) / 2.0)[:, None]

    def restart(rng):
        start = (rng.standard_normal((problem.dim, rank)) * decay).ravel()
        if pure:
            # A rank-one factor is pure for every value of it.
            x = minimize(functional, start, jac=True, method='L-BFGS-B', options={'gtol': PURE_GTOL}).x
        else:
            rough = penalty_ladder(functional, constraints, start)
            polished = constrained_polish(functional, constraints, rough)
            _, product, trace = unpack(polished)
            feasible = max(summarize(problem, product / trace)[3].values()) <= MATRIX_TOLERANCE
            x = polished if feasible else rough
        _, product, trace = unpack(x)
        rho, value, objective, residuals = summarize(problem, product / trace)
        return value, residuals, (rho, objective, residuals)

    outcomes = run_restarts(restart, seed, restarts, runner)
    rho, objective, residuals = best_of(outcomes, MATRIX_TOLERANCE, {'dim': problem.dim, 'mu': problem.mu})
    off_diagonal_norm = float(np.linalg.norm(rho - np.diag(np.diag(rho))))
    logger.info('Matrix oracle dim=%d mu=%r: objective=%r off-diagonal=%.3g',
                problem.dim, problem.mu, objective, off_diagonal_norm)
    return MatrixResult(
        problem,
        rho,
        objective,
        off_diagonal_norm,
        residuals,
        restart_objectives=[payload[1] for _, _, payload in outcomes],
    )
