"""Shell combinatorics for the s-dimensional oscillator basis.

A shell m collects every mode n = (n_1, ..., n_s) with total index
||n|| = n_1 + ... + n_s = m. All modes in a shell share one eigenvalue in
the minimal-uncertainty state, so most of the package works shell by shell
and only needs two integer sequences:

    g_s(m) = (m + s - 1)! / (m! (s - 1)!)          modes in shell m
    N(L)   = sum_{m < L} g_s(m)
           = (L + s - 1)! / ((L - 1)! s!)          modes in the first L shells

Both are computed with exact integer arithmetic. Counts that can no longer
be represented exactly as a double raise ShellOverflowError.
"""
import itertools
import logging
import math
import numbers

from scipy.special import gammaln

from .error import DomainError, ShellOverflowError

__all__ = [
    'DEFAULT_MAX_SHELL',
    'MAX_EXACT_COUNT',
    'ShellTable',
    'degeneracy',
    'mode_count',
    'multi_indices',
    'log_gamma',
    'log_binomial',
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_SHELL = 64

# Counts are compared against (and multiplied with) double-precision reals,
# which only represent integers exactly up to 2^53 - 1.
MAX_EXACT_COUNT = 9007199254740991


def check_dimension(s):
    if isinstance(s, bool) or not isinstance(s, numbers.Integral) or s < 1:
        raise DomainError('Dimension must be a positive integer.', {'s': s})


def check_exact(value, name, context):
    if value > MAX_EXACT_COUNT:
        context = dict(context, limit=MAX_EXACT_COUNT)
        raise ShellOverflowError('{} exceeds the exactly representable range.'.format(name), context)
    return value


def degeneracy(s, m):
    """Number of modes with total index m in s dimensions."""
    check_dimension(s)
    if m < 0:
        raise DomainError('Shell index must be non-negative.', {'s': s, 'm': m})
    return check_exact(math.comb(m + s - 1, s - 1), 'Shell degeneracy', {'s': s, 'm': m})


def mode_count(s, L):
    """Number of modes in the first L shells."""
    check_dimension(s)
    if L < 1:
        raise DomainError('Layer count must be at least 1.', {'s': s, 'L': L})
    return check_exact(math.comb(L + s - 1, s), 'Mode count', {'s': s, 'L': L})


def multi_indices(s, m):
    """All vector indices of shell m, in lexicographic order."""
    check_dimension(s)
    if m < 0:
        raise DomainError('Shell index must be non-negative.', {'s': s, 'm': m})
    if s == 1:
        return [(m,)]
    indices = []
    for head in range(m, -1, -1):
        for tail in multi_indices(s - 1, m - head):
            indices.append((head,) + tail)
    return indices


def brute_force_mode_count(s, L):
    # Only used to cross-check mode_count; grows as L^s.
    return sum(1 for n in itertools.product(range(L), repeat=s) if sum(n) < L)


def log_gamma(x):
    if not x > 0:
        raise DomainError('log_gamma is only defined for positive arguments.', {'x': x})
    return float(gammaln(x))


def log_binomial(n, k):
    """Log of the binomial coefficient for real n >= k >= 0."""
    if k < 0 or n < k:
        raise DomainError('Binomial coefficient needs n >= k >= 0.', {'n': n, 'k': k})
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0)


class ShellTable(object):
    """Degeneracies and cumulative mode counts for one dimension.

    Example:

        table = ShellTable(2, max_shell=8)
        table.degeneracy(3)   # 4
        table.mode_count(3)   # 6
    """

    def __init__(self, s, max_shell=DEFAULT_MAX_SHELL):
        check_dimension(s)
        if max_shell < 0:
            raise DomainError('max_shell must be non-negative.', {'max_shell': max_shell})
        self.s = s
        self.max_shell = max_shell
        self._degeneracy = tuple(degeneracy(s, m) for m in range(max_shell + 1))
        cumulative = [0]
        for g in self._degeneracy:
            cumulative.append(check_exact(cumulative[-1] + g, 'Mode count', {'s': s}))
        self._cumulative = tuple(cumulative)
        logger.debug('Built shell table s=%d max_shell=%d (%d modes)', s, max_shell, cumulative[-1])

    @property
    def degeneracies(self):
        return self._degeneracy

    @property
    def cumulative(self):
        # Index L holds N(L); index 0 is the empty sum.
        return self._cumulative

    def degeneracy(self, m):
        if not 0 <= m <= self.max_shell:
            return degeneracy(self.s, m)
        return self._degeneracy[m]

    def mode_count(self, L):
        if not 1 <= L <= self.max_shell + 1:
            return mode_count(self.s, L)
        return self._cumulative[L]

    def shell_of(self, index):
        """Shell holding the mode at position `index` in shell order."""
        if index < 0:
            raise DomainError('Mode position must be non-negative.', {'index': index})
        for m in range(self.max_shell + 1):
            if index < self._cumulative[m + 1]:
                return m
        raise DomainError('Mode position lies beyond the tabulated shells.', {
            'index': index,
            'max_shell': self.max_shell,
        })

    def check(self):
        """List the violated table invariants; empty when consistent."""
        s = self.s
        problems = []
        if self._degeneracy[0] != 1:
            problems.append('degeneracy[0] != 1')
        for m, g in enumerate(self._degeneracy):
            if g != math.comb(m + s - 1, s - 1):
                problems.append('degeneracy[{}] != C({}, {})'.format(m, m + s - 1, s - 1))
            if m and s >= 2 and g <= self._degeneracy[m - 1]:
                problems.append('degeneracy not increasing at {}'.format(m))
            if m and s == 1 and g != 1:
                problems.append('degeneracy[{}] != 1 for s = 1'.format(m))
        for L in range(1, self.max_shell + 2):
            closed = math.factorial(L + s - 1) // (math.factorial(L - 1) * math.factorial(s))
            if self._cumulative[L] != closed:
                problems.append('cumulative[{}] != closed form'.format(L))
            # N(L) = (L / s) g_s(L), checked without division.
            if s * self._cumulative[L] != L * degeneracy(s, L):
                problems.append('cumulative[{}] != (L/s) g_s(L)'.format(L))
        return problems

    def __repr__(self):
        return '<ShellTable s={} max_shell={}>'.format(self.s, self.max_shell)
