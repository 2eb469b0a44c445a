# flake8: noqa
from .basis import (  # no import order
    DEFAULT_HALF_WIDTH,
    DEFAULT_N_MAX,
    DEFAULT_POINTS,
    OscillatorBasis,
    default_axis,
    mode_function,
    momentum_squared_matrix,
    orthonormality_matrix,
    position_squared_matrix,
    trapezoid_weights,
)
from .grid import (
    DEFAULT_HALF_WIDTH_2D,
    DEFAULT_POINTS_2D,
    DensityMatrixGrid,
    build_density_grid,
    required_half_width,
    swap_residual,
    symmetry_residual,
)
from .moments import (
    METHODS,
    QuadratureMoments,
    quadrature_moments,
)
