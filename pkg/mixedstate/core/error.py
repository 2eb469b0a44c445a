__all__ = [
    'Error',
    'BoundError',
    'DomainError',
    'OutOfRangeError',
    'ShellOverflowError',
    'ConsistencyError',
    'ConvergenceError',
    'TruncationError',
    'VerificationFailure',
    'format_error',
]


class Error(Exception):
    pass


class BoundError(Error):
    def __init__(self, message, context=None):
        super(BoundError, self).__init__(message)
        self.message = message
        self.context = dict(context or {})

    def __str__(self):
        if not self.context:
            return self.message
        return '{} ({})'.format(self.message, format_context(self.context))


class DomainError(BoundError):
    pass


class OutOfRangeError(BoundError):
    pass


class ShellOverflowError(BoundError):
    pass


class ConsistencyError(BoundError):
    pass


class ConvergenceError(BoundError):
    def __init__(self, message, residuals=None, context=None):
        super(ConvergenceError, self).__init__(message, context)
        self.residuals = dict(residuals or {})


class TruncationError(BoundError):
    def __init__(self, message, required_shells, context=None):
        super(TruncationError, self).__init__(message, context)
        self.required_shells = required_shells


class VerificationFailure(BoundError):
    def __init__(self, suite, check, message, context=None):
        super(VerificationFailure, self).__init__(message, context)
        self.suite = suite
        self.check = check


def format_context(context):
    return ', '.join('{}={!r}'.format(key, context[key]) for key in sorted(context))


def format_error(error):
    formatted = {
        'message': getattr(error, 'message', str(error)),
        'context': dict(getattr(error, 'context', {})),
    }
    if isinstance(error, VerificationFailure):
        formatted['suite'] = error.suite
        formatted['check'] = error.check
    if isinstance(error, ConvergenceError):
        formatted['residuals'] = dict(error.residuals)
    return formatted
