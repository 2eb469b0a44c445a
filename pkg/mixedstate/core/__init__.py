from .bounds import approx_bound, strict_bound


def uncertainty_bound(s, n_eff):
    """Strict bound on Delta x Delta q for s dimensions at N_eff, with its smooth approximation."""
    evaluation = strict_bound(s, n_eff)
    evaluation.approx = approx_bound(s, n_eff)
    return evaluation
