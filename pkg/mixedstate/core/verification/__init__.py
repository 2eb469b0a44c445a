import collections
import logging

from ..error import DomainError, format_error
from ..runners import SynchronousRunner
from . import suites as Suites

__all__ = ['SuiteReport', 'VerificationContext', 'specified_suites', 'verify']

logger = logging.getLogger(__name__)

specified_suites = collections.OrderedDict([
    ('shells', Suites.ShellsSuite),
    ('spectrum', Suites.SpectrumSuite),
    ('bounds', Suites.BoundsSuite),
    ('oracle', Suites.OracleSuite),
    ('quadrature', Suites.QuadratureSuite),
])


class VerificationContext(object):
    def __init__(self, seed, runner=None):
        self.seed = seed
        self.runner = runner or SynchronousRunner()


class SuiteReport(object):
    def __init__(self, name, cases, failures):
        self.name = name
        self.cases = cases
        self.failures = failures

    @property
    def passed(self):
        return not self.failures

    def as_dict(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'cases': self.cases,
            'failures': [format_error(failure) for failure in self.failures],
        }

    def __repr__(self):
        return '<SuiteReport {} cases={} failures={}>'.format(self.name, len(self.cases), len(self.failures))


def resolve_suites(names):
    if isinstance(names, str):
        names = [names]
    resolved = []
    for name in names:
        if name == 'all':
            resolved.extend(specified_suites)
        elif name in specified_suites:
            resolved.append(name)
        else:
            raise DomainError('Unknown verification suite.', {'suite': name, 'choices': ['all'] + list(specified_suites)})
    # Duplicates run once, in first-mention order.
    return list(collections.OrderedDict.fromkeys(resolved))


def verify(names, seed, runner=None):
    context = VerificationContext(seed, runner)
    reports = []
    for name in resolve_suites(names):
        logger.info('Running suite %s (seed %d)', name, seed)
        cases, failures = Suites.run_suite(specified_suites[name](context))
        report = SuiteReport(name, cases, failures)
        logger.info('Suite %s: %d cases, %d failures', name, len(cases), len(failures))
        reports.append(report)
    return reports
