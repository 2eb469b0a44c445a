import numpy as np
from pytest import approx, raises

from mixedstate.core.bounds import strict_bound
from mixedstate.core.error import DomainError, TruncationError
from mixedstate.core.oracle import ShellProblem, default_truncation, minimize_shell
from mixedstate.core.runners import ThreadedRunner


def test_default_truncation():
    assert default_truncation(1, 2.0 / 3.0) == 8
    assert default_truncation(1, 1.0) == 6
    assert default_truncation(2, 1.0 / 3.0) == 8
    assert ShellProblem(3, 0.5).M == default_truncation(3, 0.5)


def test_pure_target():
    for s in (1, 2, 3):
        result = minimize_shell(ShellProblem(s, 1.0), seed=0)
        assert result.objective == 0.5
        assert list(result.weights[:2]) == [1.0, 0.0]


def test_two_shell_optimum():
    result = minimize_shell(ShellProblem(1, 2.0 / 3.0, M=8), seed=3)
    assert result.objective == approx(0.711325, abs=1e-5)
    assert result.weights[:3] == approx([0.788675, 0.211325, 0.0], abs=1e-4)
    assert max(result.residuals.values()) < 1e-8
    assert len(result.restart_objectives) == 16


def test_two_dimensional_optimum():
    result = minimize_shell(ShellProblem(2, 1.0 / 3.0, M=8), seed=11)
    assert result.objective == approx(strict_bound(2, 3.0).B, abs=1e-5)


def test_agrees_with_the_closed_form():
    for s in (1, 2, 3):
        for n_eff in (1.2, 2.5, 7.0):
            result = minimize_shell(ShellProblem(s, 1.0 / n_eff), seed=5)
            bound = strict_bound(s, n_eff).B
            assert abs(result.objective - bound) / bound < 1e-5


def test_reproducible_from_seed():
    problem = ShellProblem(1, 0.4)
    first = minimize_shell(problem, seed=42, restarts=4)
    second = minimize_shell(problem, seed=42, restarts=4, runner=ThreadedRunner(4))
    assert np.array_equal(first.weights, second.weights)
    assert first.restart_objectives == second.restart_objectives


def test_tight_truncation():
    with raises(TruncationError) as excinfo:
        minimize_shell(ShellProblem(1, 0.28, M=4), seed=1, restarts=4)
    assert excinfo.value.required_shells == 8


def test_infeasible_targets():
    with raises(DomainError):
        ShellProblem(1, 0.0)
    with raises(DomainError):
        ShellProblem(1, 1.5)
    with raises(DomainError):
        ShellProblem(1, 0.1, M=4)
