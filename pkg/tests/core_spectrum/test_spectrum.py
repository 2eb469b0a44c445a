import math

from pytest import approx, raises

from mixedstate.core.error import DomainError
from mixedstate.core.spectrum import (
    ModeSpectrum,
    build_spectrum,
    shell_weight,
    spectrum_from_weights,
    spectrum_moments,
    uniform_spectrum,
)
from mixedstate.core.bounds import n_eff_grid, strict_bound


def test_pure_state_spectrum():
    spectrum = build_spectrum(1, 1.0)
    assert spectrum.L == 1
    assert spectrum.shell_weights == (1.0,)
    assert spectrum_moments(spectrum) == approx((math.sqrt(0.5), math.sqrt(0.5), 1.0))


def test_two_shell_spectrum():
    spectrum = build_spectrum(1, 1.5)
    assert spectrum.L == 2
    assert spectrum.shell_weights == approx((0.788675, 0.211325), abs=1e-6)
    assert spectrum.cumulative_probabilities() == approx([0.788675, 1.0], abs=1e-6)


def test_two_dimensional_spectrum():
    spectrum = build_spectrum(2, 3.0)
    assert spectrum.L == 3
    assert spectrum.degeneracies == (1, 2, 3)
    assert spectrum.shell_weights == approx((0.464809, 0.241202, 0.017595), abs=1e-6)
    assert len(spectrum.mode_weights()) == spectrum.n_modes == 6


def test_constraints_hold_everywhere():
    for s in (1, 2, 3, 4):
        for n_eff in (1.0, 1.2, 1.5, 2.0, 3.7, 10.0, 55.5, 400.0):
            spectrum = build_spectrum(s, n_eff)
            trace_residual, purity_residual = spectrum.residuals()
            assert trace_residual < 1e-10
            assert purity_residual < 1e-10
            assert min(spectrum.shell_weights) >= 0
            assert list(spectrum.shell_weights) == sorted(spectrum.shell_weights, reverse=True)


def test_first_unoccupied_shell_would_be_empty():
    for s in (1, 2, 3):
        for n_eff in (1.3, 2.0, 4.4, 20.0):
            spectrum = build_spectrum(s, n_eff)
            assert shell_weight(s, n_eff, spectrum.L, spectrum.L) <= 1e-12


def test_spectrum_realizes_the_strict_bound():
    for s in (1, 2, 3):
        for n_eff in n_eff_grid(1.0, 200.0, 300, log_spacing=True):
            spectrum = build_spectrum(s, n_eff)
            moments = spectrum_moments(spectrum)
            assert moments.delta_x * moments.delta_q == approx(strict_bound(s, n_eff).B, abs=1e-12), (s, n_eff)
            assert moments.n_eff == approx(n_eff, rel=1e-10)
            assert max(spectrum.residuals()) < 1e-10


def test_scale_factor_trades_widths():
    for s in (1, 2, 3):
        for n_eff in (1.0, 1.5, 7.0, 120.0):
            products = []
            for k in (0.5, 1.0, 2.0):
                moments = spectrum_moments(build_spectrum(s, n_eff, k=k))
                products.append(moments.delta_x * moments.delta_q)
            assert max(products) - min(products) <= 1e-14 * max(products)
    narrow = spectrum_moments(build_spectrum(1, 2.0, k=2.0))
    wide = spectrum_moments(build_spectrum(1, 2.0, k=1.0))
    assert narrow.delta_x == approx(wide.delta_x / 2)
    assert narrow.delta_q == approx(wide.delta_q * 2)
    assert narrow.delta_x * narrow.delta_q == approx(wide.delta_x * wide.delta_q)


def test_uniform_spectrum():
    spectrum = uniform_spectrum(1, 2)
    moments = spectrum_moments(spectrum)
    assert spectrum.n_eff == 2
    assert moments.delta_x * moments.delta_q == approx(1.0)
    assert moments.n_eff == approx(2.0)


def test_uniform_mixture_exceeds_the_bound():
    moments = spectrum_moments(uniform_spectrum(1, 2))
    assert moments.delta_x * moments.delta_q > strict_bound(1, 2.0).B + 0.07


def test_spectrum_from_weights():
    spectrum = spectrum_from_weights(1, [0.5, 0.5, 0.0, 0.0])
    assert spectrum.L == 2
    assert spectrum.n_eff == approx(2.0)
    with raises(DomainError):
        spectrum_from_weights(1, [1.2, -0.2])
    with raises(DomainError):
        spectrum_from_weights(1, [0.5, 0.4])


def test_rejects_bad_arguments():
    with raises(DomainError):
        build_spectrum(1, 0.5)
    with raises(DomainError):
        build_spectrum(1, 1.5, k=0.0)
    with raises(DomainError):
        build_spectrum(0, 1.5)
    with raises(DomainError):
        ModeSpectrum(1, [])
