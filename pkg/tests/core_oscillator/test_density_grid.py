import numpy as np
from pytest import approx, raises

from mixedstate.core.error import DomainError
from mixedstate.core.oscillator import (
    OscillatorBasis,
    build_density_grid,
    default_axis,
    required_half_width,
    swap_residual,
    symmetry_residual,
)
from mixedstate.core.spectrum import build_spectrum


def test_pure_state_grid_is_a_gaussian_product():
    grid = build_density_grid(build_spectrum(1, 1.0))
    ground = OscillatorBasis(1.0, 0).modes(grid.axes[0])[0]
    assert np.allclose(grid.values, np.outer(ground, ground), atol=1e-14)


def test_mixed_grid_trace_and_purity():
    grid = build_density_grid(build_spectrum(1, 1.5))
    weights = grid.weights()
    assert grid.trace() == approx(1.0, abs=1e-6)
    assert weights @ (grid.values ** 2) @ weights == approx(2.0 / 3.0, abs=1e-6)
    assert symmetry_residual(grid) == 0.0


def test_grid_is_read_only():
    grid = build_density_grid(build_spectrum(1, 1.5))
    with raises(ValueError):
        grid.values[0, 0] = 1.0


def test_required_half_width():
    spectrum = build_spectrum(1, 2.0)
    assert required_half_width(spectrum) == approx(np.sqrt(7.0) + 4.0)
    assert required_half_width(build_spectrum(1, 2.0, k=2.0)) == approx((np.sqrt(7.0) + 4.0) / 2)


def test_narrow_axis_is_rejected():
    spectrum = build_spectrum(1, 2.0)
    with raises(DomainError) as excinfo:
        build_density_grid(spectrum, [default_axis(points=201, half_width=5.0)])
    assert 'required_span' in excinfo.value.context


def test_unsupported_dimension():
    with raises(DomainError):
        build_density_grid(build_spectrum(3, 2.0))
    with raises(DomainError):
        build_density_grid(build_spectrum(1, 2.0), [default_axis(), default_axis()])


def test_two_dimensional_grid():
    grid = build_density_grid(build_spectrum(2, 3.0))
    assert grid.values.shape == (41 * 41, 41 * 41)
    assert grid.tensor().shape == (41, 41, 41, 41)
    assert grid.trace() == approx(1.0, abs=1e-6)
    assert swap_residual(grid) < 1e-10
    assert symmetry_residual(grid) == 0.0


def test_two_dimensional_index_order():
    grid = build_density_grid(build_spectrum(2, 1.0))
    basis = OscillatorBasis(1.0, 0)
    ground = basis.modes(grid.axes[0])[0]
    i1, i2, j1, j2 = 20, 23, 18, 25
    expected = ground[i1] * ground[i2] * ground[j1] * ground[j2]
    assert grid.tensor()[i1, i2, j1, j2] == approx(expected, rel=1e-12)
    assert grid.values[i1 * 41 + i2, j1 * 41 + j2] == grid.tensor()[i1, i2, j1, j2]


def test_swap_needs_two_dimensions():
    with raises(DomainError):
        swap_residual(build_density_grid(build_spectrum(1, 1.5)))
