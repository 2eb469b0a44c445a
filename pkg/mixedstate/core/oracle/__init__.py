# flake8: noqa
from .base import (  # no import order
    DEFAULT_RESTARTS,
    PENALTY_LADDER,
    MatrixProblem,
    MatrixResult,
    ShellProblem,
    ShellResult,
    default_truncation,
)
from .shell import minimize_shell
from .matrix import minimize_matrix
from .audit import AuditReport, random_mixture_audit
