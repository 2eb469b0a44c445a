import math

from pytest import approx, raises

from mixedstate.core.bounds import approx_bound, max_neff, n_eff_grid, strict_bound
from mixedstate.core.bounds.approx import log_layer_n_eff
from mixedstate.core.error import DomainError, OutOfRangeError
from .fixtures import APPROX_VALUES


def test_reference_values():
    for s, n_eff, l_tilde, b_approx in APPROX_VALUES:
        bound = approx_bound(s, n_eff)
        assert bound.l_tilde == approx(l_tilde, abs=1e-10)
        assert bound.B_approx == approx(b_approx, abs=1e-9)


def test_root_residual_is_small():
    for s in (1, 2, 3, 6):
        for n_eff in (1.0001, 1.5, 20.0, 1e4, 1e8):
            bound = approx_bound(s, n_eff)
            assert bound.residual <= 1e-12
            assert math.exp(log_layer_n_eff(s, bound.l_tilde)) == approx(n_eff, rel=1e-10)


def test_pure_state():
    bound = approx_bound(4, 1.0)
    assert bound.l_tilde == 1.0
    assert bound.B_approx == 0.5
    assert bound.packing == 1.0


def test_approximation_is_close_to_the_strict_bound():
    for s in (1, 2, 3):
        for n_eff in (1.5, 10.0, 100.0):
            assert approx_bound(s, n_eff).B_approx == approx(strict_bound(s, n_eff).B, rel=0.05)


def test_bracket_limit():
    with raises(OutOfRangeError) as excinfo:
        approx_bound(1, 1e6, l_max=10.0)
    assert excinfo.value.context['needed_l_max'] > 10.0


def test_max_neff():
    assert max_neff(1, 0.5) == approx(1.0, rel=1e-12)
    assert max_neff(3, 0.5) == approx(1.0, rel=1e-12)
    assert max_neff(1, 0.706011) == approx(1.5, rel=1e-5)


def test_max_neff_inverts_the_approximation():
    for s in (1, 2, 3):
        for n_eff in n_eff_grid(1.0, 1e4, 100, log_spacing=True):
            assert max_neff(s, approx_bound(s, n_eff).B_approx) == approx(n_eff, rel=1e-9), (s, n_eff)


def test_max_neff_rejects_small_products():
    with raises(DomainError):
        max_neff(1, 0.4)
