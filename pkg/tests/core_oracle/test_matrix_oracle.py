import numpy as np
from pytest import approx, raises

from mixedstate.core.bounds import strict_bound
from mixedstate.core.error import DomainError
from mixedstate.core.oracle import MatrixProblem, minimize_matrix
from mixedstate.core.spectrum import build_spectrum


def test_operator_matrices():
    problem = MatrixProblem(6, 0.5)
    assert problem.x2_op[0, 0] == 0.5
    assert problem.x2_op[1, 3] == approx(np.sqrt(6.0) / 2)
    assert problem.p2_op[1, 3] == approx(-np.sqrt(6.0) / 2)


def test_pure_target_is_the_ground_state():
    result = minimize_matrix(MatrixProblem(12, 1.0), seed=0)
    assert result.objective == approx(0.5, abs=1e-6)
    assert result.rho[0, 0] == approx(1.0, abs=1e-6)
    assert result.off_diagonal_norm < 1e-4


def test_mixed_optimum_is_diagonal():
    result = minimize_matrix(MatrixProblem(12, 2.0 / 3.0), seed=7)
    assert result.objective == approx(0.711325, abs=1e-4)
    assert result.off_diagonal_norm < 1e-4
    assert result.diagonal[:2] == approx(build_spectrum(1, 1.5).shell_weights, abs=1e-3)
    assert result.residuals['purity'] < 1e-6
    assert result.residuals['negativity'] < 1e-10


def test_three_shell_optimum():
    result = minimize_matrix(MatrixProblem(12, 0.5), seed=7)
    assert result.objective == approx(strict_bound(1, 2.0).B, abs=1e-4)
    assert result.off_diagonal_norm < 1e-4


def test_invalid_problems():
    with raises(DomainError):
        MatrixProblem(1, 1.0)
    with raises(DomainError):
        MatrixProblem(4, 0.2)
    with raises(DomainError):
        MatrixProblem(4, 0.0)
