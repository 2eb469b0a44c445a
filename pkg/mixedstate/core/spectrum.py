"""Minimal-uncertainty eigenvalue spectra.

The state minimizing the product of position and momentum widths at a fixed
effective number of pure states N_eff is diagonal in the oscillator basis.
Its eigenvalues depend on the shell index m only, fall off linearly with m,
and vanish beyond the first L shells:

    a_m = (1 / N(L)) [1 + ((L - 1) s - m (s + 1)) f]
    f   = sqrt((N(L) - N_eff)(s + 2)) / sqrt(N_eff s (L + s)(L - 1))

and the width product is bounded below by

    B(N_eff, L) = (2L + s - 1) / (2 (s + 1))
                  - sqrt((N(L) - N_eff)(L + s)(L - 1)) / ((s + 1) sqrt(N_eff s (s + 2)))

L is chosen among the admissible layer counts (the ones keeping every a_m
real and non-negative) so that B is smallest.
"""
import collections
import logging
import math
from fractions import Fraction

from .error import ConsistencyError, DomainError
from .shells import check_dimension, check_exact, degeneracy, mode_count

__all__ = [
    'ADMISSIBILITY_RTOL',
    'CONSTRUCTION_TOLERANCE',
    'ModeSpectrum',
    'SpectrumMoments',
    'admissible_layers',
    'build_spectrum',
    'check_n_eff',
    'layer_bound',
    'layer_thresholds',
    'select_layer',
    'spectrum_from_weights',
    'spectrum_moments',
    'uniform_spectrum',
]

logger = logging.getLogger(__name__)

# Relative slack on the admissibility boundaries. Equality on the upper
# boundary (N_eff <= N(L)) is admissible, equality on the lower one is not.
ADMISSIBILITY_RTOL = 1e-12

# Largest trace or purity residual a constructed spectrum may carry.
CONSTRUCTION_TOLERANCE = 1e-10

# Bound values closer than this (relatively) count as a tie.
TIE_RTOL = 1e-14

SpectrumMoments = collections.namedtuple('SpectrumMoments', 'delta_x delta_q n_eff')


def check_n_eff(n_eff):
    if not n_eff >= 1:
        raise DomainError('The effective number of states must be at least 1.', {'n_eff': n_eff})
    if math.isinf(n_eff):
        raise DomainError('The effective number of states must be finite.', {'n_eff': n_eff})


def check_k(k):
    if not k > 0 or math.isinf(k):
        raise DomainError('The oscillator scale factor must be a positive real.', {'k': k})


def layer_thresholds(s, L):
    """Admissibility interval (lower, upper] on N_eff for the layer count L.

    upper is N(L); lower is (L + s - 1)! / ((L - 2)! (s + 1)!) (s + 2) / (s + 2 (L - 1)),
    taken as 0 for L = 1 where the pure state is the only member.
    """
    upper = mode_count(s, L)
    if L == 1:
        return 0.0, float(upper)
    lower = Fraction(math.comb(L + s - 1, s + 1) * (s + 2), s + 2 * (L - 1))
    check_exact(lower, 'Layer threshold', {'s': s, 'L': L})
    return float(lower), float(upper)


def satisfies_upper(s, n_eff, L):
    return n_eff <= mode_count(s, L) * (1.0 + ADMISSIBILITY_RTOL)


def satisfies_lower(s, n_eff, L):
    if L == 1:
        return True
    lower, _ = layer_thresholds(s, L)
    return n_eff > lower * (1.0 + ADMISSIBILITY_RTOL)


def first_layer(predicate, start=1):
    """Smallest L >= start with predicate(L), for predicates that stay true once true."""
    if predicate(start):
        return start
    low, high = start, start + 1
    while not predicate(high):
        low, high = high, 2 * high
    while high - low > 1:
        middle = (low + high) // 2
        if predicate(middle):
            high = middle
        else:
            low = middle
    return high


def admissible_layers(s, n_eff):
    """All layer counts L keeping the weights real and non-negative, in increasing order."""
    check_dimension(s)
    check_n_eff(n_eff)
    smallest = first_layer(lambda L: satisfies_upper(s, n_eff, L))
    # The lower threshold grows with L, so the admissible set ends just before
    # the first L >= 2 failing it.
    largest = first_layer(lambda L: not satisfies_lower(s, n_eff, L), start=2) - 1
    assert smallest <= largest, 'Empty admissible interval for s={}, n_eff={!r}'.format(s, n_eff)
    return tuple(range(smallest, largest + 1))


def layer_bound(s, n_eff, L):
    """Lower bound on the width product for a fixed layer count."""
    first = (2.0 * L + s - 1) / (2.0 * (s + 1))
    if L == 1:
        return first
    excess = max(0.0, mode_count(s, L) - n_eff)
    second = math.sqrt(excess * (L + s) * (L - 1)) / ((s + 1) * math.sqrt(n_eff * s * (s + 2)))
    return first - second


def select_layer(s, n_eff):
    """Admissible layer count with the smallest bound; ties go to the larger L."""
    best_layer, best_value = None, None
    for L in admissible_layers(s, n_eff):
        value = layer_bound(s, n_eff, L)
        if best_value is None or value <= best_value * (1.0 + TIE_RTOL):
            best_layer, best_value = L, value
    return best_layer


class ModeSpectrum(object):
    """Diagonal density-operator eigenvalues in the oscillator basis.

    `shell_weights[m]` is the eigenvalue shared by all g_s(m) modes of shell
    m, for the L occupied shells. `n_eff` is the effective number of states
    the spectrum was built for; `k` is the scale factor (reciprocal length)
    of the oscillator basis the weights refer to.
    """

    def __init__(self, s, shell_weights, k=1.0, n_eff=None):
        check_dimension(s)
        check_k(k)
        if not shell_weights:
            raise DomainError('A spectrum needs at least one occupied shell.', {'s': s})
        self.s = s
        self.k = float(k)
        self.shell_weights = tuple(float(weight) for weight in shell_weights)
        self.degeneracies = tuple(degeneracy(s, m) for m in range(len(self.shell_weights)))
        self.n_eff = float(n_eff) if n_eff is not None else 1.0 / self.purity()

    @property
    def L(self):
        return len(self.shell_weights)

    @property
    def n_modes(self):
        return sum(self.degeneracies)

    def trace(self):
        return math.fsum(g * w for g, w in zip(self.degeneracies, self.shell_weights))

    def purity(self):
        return math.fsum(g * w * w for g, w in zip(self.degeneracies, self.shell_weights))

    def residuals(self):
        return abs(self.trace() - 1.0), abs(self.purity() - 1.0 / self.n_eff)

    def mode_weights(self):
        weights = []
        for g, w in zip(self.degeneracies, self.shell_weights):
            weights.extend([w] * g)
        return weights

    def cumulative_probabilities(self):
        total, cumulative = [], 0.0
        for g, w in zip(self.degeneracies, self.shell_weights):
            cumulative += g * w
            total.append(cumulative)
        return total

    def __repr__(self):
        return '<ModeSpectrum s={} L={} n_eff={!r} k={!r}>'.format(self.s, self.L, self.n_eff, self.k)


def shell_weight(s, n_eff, L, m):
    """Eigenvalue formula for shell m, also valid outside the occupied shells."""
    count = mode_count(s, L)
    if L == 1:
        return 1.0 / count
    excess = max(0.0, count - n_eff)
    factor = math.sqrt(excess * (s + 2)) / math.sqrt(n_eff * s * (L + s) * (L - 1))
    return (1.0 + ((L - 1) * s - m * (s + 1)) * factor) / count


def build_spectrum(s, n_eff, k=1.0):
    """The minimal-uncertainty spectrum for the given dimension and N_eff."""
    check_k(k)
    L = select_layer(s, n_eff)
    weights = [shell_weight(s, n_eff, L, m) for m in range(L)]
    spectrum = ModeSpectrum(s, weights, k=k, n_eff=n_eff)

    trace_residual, purity_residual = spectrum.residuals()
    if max(trace_residual, purity_residual) > CONSTRUCTION_TOLERANCE or min(weights) < 0:
        raise ConsistencyError('Constructed spectrum violates its constraints.', {
            's': s,
            'n_eff': n_eff,
            'L': L,
            'trace_residual': trace_residual,
            'purity_residual': purity_residual,
            'min_weight': min(weights),
        })
    logger.debug('Spectrum s=%d n_eff=%r: L=%d residuals=(%.3g, %.3g)',
                 s, n_eff, L, trace_residual, purity_residual)
    return spectrum


def uniform_spectrum(s, L, k=1.0):
    """Equal-weight mixture over the modes of the first L shells."""
    count = mode_count(s, L)
    return ModeSpectrum(s, [1.0 / count] * L, k=k, n_eff=count)


def spectrum_from_weights(s, shell_weights, k=1.0):
    """Wrap arbitrary non-negative, normalized shell weights."""
    weights = [float(weight) for weight in shell_weights]
    # Trailing empty shells carry no information.
    while len(weights) > 1 and weights[-1] == 0.0:
        weights.pop()
    if min(weights) < 0:
        raise DomainError('Shell weights must be non-negative.', {'s': s, 'min_weight': min(weights)})
    spectrum = ModeSpectrum(s, weights, k=k)
    if abs(spectrum.trace() - 1.0) > CONSTRUCTION_TOLERANCE:
        raise DomainError('Shell weights must be normalized.', {'s': s, 'trace': spectrum.trace()})
    return spectrum


def spectrum_moments(spectrum):
    """Analytic widths and effective number of states of a diagonal spectrum."""
    s, k = spectrum.s, spectrum.k
    energy = math.fsum(
        g * w * (m + s / 2.0)
        for m, (g, w) in enumerate(zip(spectrum.degeneracies, spectrum.shell_weights))
    )
    delta_x = math.sqrt(energy / (s * k * k))
    delta_q = math.sqrt(k * k * energy / s)
    return SpectrumMoments(delta_x, delta_q, 1.0 / spectrum.purity())
