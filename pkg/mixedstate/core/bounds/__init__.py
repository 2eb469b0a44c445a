# flake8: noqa
from .strict import (  # no import order
    MARGIN_TOLERANCE,
    BoundEvaluation,
    is_realizable,
    packing_coefficient,
    strict_bound,
    strict_max_neff,
)
from .approx import (  # no import order
    ApproxBound,
    approx_bound,
    max_neff,
)
from .packing import (  # no import order
    CurvePoint,
    CurveRow,
    PackingCurve,
    approximation_gap,
    asymptotic_packing,
    n_eff_grid,
    packing_counterexamples,
    packing_curve,
    search_packing_counterexamples,
)
