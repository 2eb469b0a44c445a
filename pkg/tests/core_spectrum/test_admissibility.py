import math

import numpy as np
from pytest import approx, raises

from mixedstate.core.error import DomainError
from mixedstate.core.shells import mode_count
from mixedstate.core.spectrum import admissible_layers, layer_bound, layer_thresholds, select_layer


def test_layer_thresholds():
    assert layer_thresholds(1, 1) == (0.0, 1.0)
    assert layer_thresholds(1, 2) == approx((1.0, 2.0))
    assert layer_thresholds(1, 3) == approx((1.8, 3.0))
    assert layer_thresholds(2, 3) == approx((8.0 / 3.0, 6.0))


def test_pure_state_has_only_one_layer():
    assert admissible_layers(1, 1.0) == (1,)
    assert admissible_layers(3, 1.0) == (1,)


def test_admissible_intervals():
    assert admissible_layers(1, 1.5) == (2,)
    assert admissible_layers(1, 2.0) == (2, 3)
    assert admissible_layers(2, 3.0) == (2, 3)


def test_admissible_set_is_contiguous_and_non_empty():
    for s in (1, 2, 3, 5):
        for n_eff in (1.0, 1.01, 1.3, 2.0, 2.9, 6.5, 17.0, 123.4, 5000.0):
            layers = admissible_layers(s, n_eff)
            assert layers
            assert list(layers) == list(range(layers[0], layers[-1] + 1))
            assert n_eff <= mode_count(s, layers[0]) * (1 + 1e-12)


def test_boundary_equalities():
    # N_eff equal to N(L) is admissible for L, N_eff equal to the lower threshold is not.
    assert 2 in admissible_layers(1, 2.0)
    assert 3 not in admissible_layers(1, 1.8)


def test_select_layer_takes_the_smallest_bound():
    assert select_layer(1, 1.5) == 2
    assert select_layer(1, 2.0) == 3
    assert select_layer(2, 3.0) == 3
    for s in (1, 2, 3):
        for n_eff in (1.2, 2.5, 7.0, 40.0):
            chosen = select_layer(s, n_eff)
            bounds = [layer_bound(s, n_eff, L) for L in admissible_layers(s, n_eff)]
            assert layer_bound(s, n_eff, chosen) <= min(bounds) * (1 + 1e-14)


def test_layer_bound_values():
    assert layer_bound(1, 1.0, 1) == 0.5
    assert layer_bound(1, 2.0, 2) == approx(1.0)
    assert layer_bound(1, 2.0, 3) == approx(1.5 - math.sqrt(8.0) / (2 * math.sqrt(6.0)))


def test_rejects_invalid_n_eff():
    for n_eff in (0.5, 0.999999, float('nan'), float('inf')):
        with raises(DomainError):
            admissible_layers(1, n_eff)


def test_select_layer_is_the_largest_admissible_minimizer():
    rng = np.random.default_rng(20)
    mismatches = []
    for _ in range(1000):
        s = int(rng.integers(1, 4))
        n_eff = float(rng.uniform(1.0, 200.0))
        layers = admissible_layers(s, n_eff)
        chosen = select_layer(s, n_eff)
        smallest = min(layer_bound(s, n_eff, L) for L in layers)
        if layer_bound(s, n_eff, chosen) > smallest * (1 + 1e-14) or chosen != layers[-1]:
            mismatches.append((s, n_eff))
    assert mismatches == []


def test_thresholds_beyond_exact_numerators():
    # comb(L + 2, 4) passes 2^53 here while the threshold itself stays exact.
    lower, upper = layer_thresholds(3, 26000)
    assert math.comb(26002, 4) > 2 ** 53
    assert lower == approx(26002 * 26001 * 26000 * 25999 / 24.0 * 5 / 52001.0, rel=1e-12)
    assert upper == math.comb(26002, 3)
