import math

import numpy as np

from ..bounds import (approx_bound, approximation_gap, asymptotic_packing, max_neff, n_eff_grid, packing_curve,
                      search_packing_counterexamples, strict_bound, strict_max_neff)
from ..error import BoundError, ShellOverflowError, VerificationFailure
from ..oracle import MatrixProblem, ShellProblem, minimize_matrix, minimize_shell, random_mixture_audit
from ..oscillator import (OscillatorBasis, build_density_grid, default_axis, orthonormality_matrix,
                          quadrature_moments, swap_residual)
from ..shells import ShellTable, brute_force_mode_count, degeneracy, log_binomial, mode_count, multi_indices
from ..spectrum import admissible_layers, build_spectrum, layer_bound, select_layer, shell_weight, spectrum_moments

SPECTRUM_GRID = (1.0, 200.0, 300)
LAYER_RULE_SAMPLES = 1000
SCALE_FACTORS = (0.5, 1.0, 2.0)
INVERSE_GRID = (1.0, 1e4, 100)
CURVE_GRID = (1.0, 1e4, 400)
ORACLE_N_EFF = (1.2, 1.5, 2.0, 2.5, 4.0, 7.0)
MATRIX_CASES = ((12, 1.0), (12, 1.5), (12, 2.0))
QUADRATURE_N_EFF = (1.0, 1.5, 2.0, 3.7, 10.0)
DIFFERENCE_N_EFF = (1.0, 1.5, 2.0, 3.7)
AUDIT_COUNT = 10000


class VerificationSuite(object):
    """A named group of checks.

    Each check is a generator method listed in `checks`; it yields one flat
    dict per case it examined and a VerificationFailure for each case that
    failed.
    """
    name = None
    checks = ()

    def __init__(self, context):
        self.context = context

    def fail(self, check, message, **context):
        return VerificationFailure(self.name, check, message, context)


class ShellsSuite(VerificationSuite):
    name = 'shells'
    checks = ('check_tables', 'check_multi_indices', 'check_brute_force', 'check_log_counts', 'check_overflow')

    def check_tables(self):
        for s in range(1, 7):
            problems = ShellTable(s, max_shell=40).check()
            yield {'s': s, 'problems': len(problems)}
            for problem in problems:
                yield self.fail('check_tables', problem, s=s)

    def check_multi_indices(self):
        for s in range(1, 5):
            for m in range(9):
                indices = multi_indices(s, m)
                yield {'s': s, 'm': m, 'indices': len(indices)}
                if len(set(indices)) != degeneracy(s, m) or any(sum(n) != m for n in indices):
                    yield self.fail('check_multi_indices', 'Shell enumeration disagrees with g_s(m).', s=s, m=m)

    def check_brute_force(self):
        for s in range(1, 4):
            for L in range(1, 11):
                counted = brute_force_mode_count(s, L)
                yield {'s': s, 'L': L, 'count': counted}
                if counted != mode_count(s, L):
                    yield self.fail('check_brute_force', 'Mode count disagrees with enumeration.', s=s, L=L)

    def check_log_counts(self):
        for s in range(1, 7):
            for L in (1, 2, 10, 40):
                gap = abs(log_binomial(L + s - 1, s) - math.log(mode_count(s, L)))
                yield {'s': s, 'L': L, 'log_gap': gap}
                if gap > 1e-9:
                    yield self.fail('check_log_counts', 'Log-gamma count disagrees with the exact one.', s=s, L=L, gap=gap)

    def check_overflow(self):
        try:
            mode_count(40, 60)
        except ShellOverflowError:
            yield {'s': 40, 'L': 60, 'overflow': True}
        else:
            yield self.fail('check_overflow', 'Oversized count did not overflow.', s=40, L=60)


class SpectrumSuite(VerificationSuite):
    name = 'spectrum'
    checks = ('check_constraints', 'check_layer_rule', 'check_scale_invariance')

    def check_constraints(self):
        for s in (1, 2, 3):
            for n_eff in n_eff_grid(*SPECTRUM_GRID, log_spacing=True):
                spectrum = build_spectrum(s, n_eff)
                weights = spectrum.shell_weights
                trace_residual, purity_residual = spectrum.residuals()
                moments = spectrum_moments(spectrum)
                product_gap = abs(moments.delta_x * moments.delta_q - strict_bound(s, n_eff).B)
                tail = shell_weight(s, n_eff, spectrum.L, spectrum.L) if spectrum.L > 1 else 0.0
                yield {
                    's': s,
                    'n_eff': n_eff,
                    'L': spectrum.L,
                    'trace_residual': trace_residual,
                    'purity_residual': purity_residual,
                    'product_gap': product_gap,
                }
                if max(trace_residual, purity_residual) > 1e-10 or min(weights) < 0 or max(weights) > 1:
                    yield self.fail('check_constraints', 'Spectrum violates its constraints.', s=s, n_eff=n_eff)
                if any(b > a + 1e-15 for a, b in zip(weights, weights[1:])):
                    yield self.fail('check_constraints', 'Weights increase with the shell index.', s=s, n_eff=n_eff)
                if product_gap > 1e-12:
                    yield self.fail('check_constraints', 'Spectrum does not realize the bound.',
                                    s=s, n_eff=n_eff, product_gap=product_gap)
                if tail > 1e-12:
                    yield self.fail('check_constraints', 'A further shell would still be occupied.', s=s, n_eff=n_eff)

    def check_layer_rule(self):
        rng = np.random.default_rng(self.context.seed)
        mismatches = 0
        for _ in range(LAYER_RULE_SAMPLES):
            s = int(rng.integers(1, 4))
            n_eff = float(rng.uniform(*SPECTRUM_GRID[:2]))
            layers = admissible_layers(s, n_eff)
            bounds = [layer_bound(s, n_eff, L) for L in layers]
            chosen = select_layer(s, n_eff)
            if layer_bound(s, n_eff, chosen) > min(bounds) * (1.0 + 1e-14) or chosen != layers[-1]:
                mismatches += 1
                yield self.fail('check_layer_rule', 'Selected layer is not the largest admissible minimizer.',
                                s=s, n_eff=n_eff, L=chosen, admissible=[layers[0], layers[-1]])
        yield {'samples': LAYER_RULE_SAMPLES, 'mismatches': mismatches}

    def check_scale_invariance(self):
        for s in (1, 2, 3):
            for n_eff in (1.0, 1.5, 7.0, 120.0):
                products = []
                for k in SCALE_FACTORS:
                    moments = spectrum_moments(build_spectrum(s, n_eff, k=k))
                    products.append(moments.delta_x * moments.delta_q)
                spread = max(products) - min(products)
                yield {'s': s, 'n_eff': n_eff, 'spread': spread}
                if spread > 1e-14 * max(products):
                    yield self.fail('check_scale_invariance', 'Width product depends on k.', s=s, n_eff=n_eff, spread=spread)


class BoundsSuite(VerificationSuite):
    name = 'bounds'
    checks = (
        'check_values',
        'check_monotone',
        'check_inverses',
        'check_asymptote',
        'check_packing_curve',
        'check_approximation_gap',
        'check_counterexample',
    )

    def check_values(self):
        for s, n_eff, L, expected in ((1, 1.0, 1, 0.5), (1, 1.5, 2, 0.7113248654), (1, 2.0, 3, 0.9226497308)):
            bound = strict_bound(s, n_eff)
            yield {'s': s, 'n_eff': n_eff, 'L': bound.L, 'B_strict': bound.B}
            if bound.L != L or abs(bound.B - expected) > 1e-9:
                yield self.fail('check_values', 'Strict bound differs from its reference value.', s=s, n_eff=n_eff)
        for n_eff, l_tilde in ((1.5, (1 + math.sqrt(5)) / 2), (2.0, (5 + math.sqrt(73)) / 6)):
            approx = approx_bound(1, n_eff)
            expected = (1 + 2 * l_tilde) / 6
            yield {'s': 1, 'n_eff': n_eff, 'L_tilde': approx.l_tilde, 'B_approx': approx.B_approx}
            if abs(approx.l_tilde - l_tilde) > 1e-10 or abs(approx.B_approx - expected) > 1e-9:
                yield self.fail('check_values', 'Approximate bound differs from its reference value.', n_eff=n_eff)

    def check_monotone(self):
        grid = np.geomspace(1.0, 200.0, 300)
        for s in (1, 2, 3):
            values = [strict_bound(s, float(n_eff)).B for n_eff in grid]
            decreasing = sum(1 for a, b in zip(values, values[1:]) if b < a - 1e-12)
            yield {'s': s, 'points': len(values), 'decreasing_steps': decreasing}
            if decreasing:
                yield self.fail('check_monotone', 'Strict bound decreases with n_eff.', s=s)

    def check_inverses(self):
        for s in (1, 2, 3):
            worst = 0.0
            for n_eff in n_eff_grid(*INVERSE_GRID, log_spacing=True):
                error = abs(max_neff(s, approx_bound(s, n_eff).B_approx) - n_eff) / n_eff
                worst = max(worst, error)
                if error > 1e-9:
                    yield self.fail('check_inverses', 'Approximate inverse does not recover n_eff.', s=s, n_eff=n_eff)
            yield {'s': s, 'points': INVERSE_GRID[2], 'worst_relative_error': worst}
            for n_eff in (1.5, 4.0, 30.0):
                strict_back = strict_max_neff(s, strict_bound(s, n_eff).B)
                yield {'s': s, 'n_eff': n_eff, 'strict_inverse': strict_back}
                if abs(strict_back - n_eff) > 1e-8 * n_eff:
                    yield self.fail('check_inverses', 'Strict inverse does not recover n_eff.', s=s, n_eff=n_eff)

    def check_asymptote(self):
        for s in (1, 2, 3):
            packing = strict_bound(s, 1e4).packing
            relative = abs(packing - asymptotic_packing(s)) / asymptotic_packing(s)
            yield {'s': s, 'C_strict': packing, 'C_asymptotic': asymptotic_packing(s), 'relative_gap': relative}
            if relative > 1e-2:
                yield self.fail('check_asymptote', 'Packing coefficient far from its limit.', s=s)

    def check_packing_curve(self):
        curve = packing_curve([1, 2, 3], *CURVE_GRID, log_spacing=True, runner=self.context.runner)
        for s in curve.s_list:
            packings = curve.column(s, 'C_strict')
            increases = sum(1 for a, b in zip(packings, packings[1:]) if b > a * (1.0 + 1e-12))
            outside = sum(1 for packing in packings if not asymptotic_packing(s) < packing <= 1.0 + 1e-12)
            yield {'s': s, 'points': len(packings), 'increases': increases, 'outside_bracket': outside}
            if increases:
                yield self.fail('check_packing_curve', 'Packing coefficient increases with n_eff.', s=s, increases=increases)
            if outside:
                yield self.fail('check_packing_curve', 'Packing coefficient outside (C(s), 1].', s=s, outside=outside)

    def check_approximation_gap(self):
        near_gaps = []
        for s in (1, 2, 3):
            near = max(approximation_gap(s, n_eff_grid(1.0, 2.0, 200)))
            far = max(approximation_gap(s, n_eff_grid(2.0, 100.0, 400, log_spacing=True)))
            near_gaps.append(near)
            yield {'s': s, 'max_gap_1_2': near, 'max_gap_2_100': far}
            if near <= far:
                yield self.fail('check_approximation_gap', 'Approximation is not worst near n_eff = 1.', s=s, near=near, far=far)
        if any(b <= a for a, b in zip(near_gaps, near_gaps[1:])):
            yield self.fail('check_approximation_gap', 'Approximation gap does not grow with s.', gaps=near_gaps)

    def check_counterexample(self):
        limit, square = asymptotic_packing(2), asymptotic_packing(1) ** 2
        yield {'C_2': limit, 'C_1_squared': square}
        if limit > square:
            yield self.fail('check_counterexample', 'Asymptotic packing inequality C(2) <= C(1)^2 fails.')
        found, searched = search_packing_counterexamples(1, 2)
        case = {'s': 1, 'k': 2, 'searched_up_to': searched, 'counterexamples': len(found)}
        if found:
            case.update(n_eff_first=found[0].n_eff, n_eff_last=found[-1].n_eff)
        yield case
        if not found:
            yield self.fail('check_counterexample', 'No finite n_eff with C(2, N) > C(1, N)^2.', searched_up_to=searched)


class OracleSuite(VerificationSuite):
    name = 'oracle'
    checks = ('check_shell_oracle', 'check_matrix_oracle', 'check_audit')

    def check_shell_oracle(self):
        for s in (1, 2, 3):
            for n_eff in ORACLE_N_EFF:
                result = minimize_shell(ShellProblem(s, 1.0 / n_eff), self.context.seed, runner=self.context.runner)
                bound = strict_bound(s, n_eff).B
                delta = (result.objective - bound) / bound
                yield {'s': s, 'n_eff': n_eff, 'objective': result.objective, 'B_strict': bound, 'delta': delta}
                if abs(delta) > 1e-5:
                    yield self.fail('check_shell_oracle', 'Shell oracle disagrees with the strict bound.',
                                    s=s, n_eff=n_eff, delta=delta)

    def check_matrix_oracle(self):
        for dim, n_eff in MATRIX_CASES:
            result = minimize_matrix(MatrixProblem(dim, 1.0 / n_eff), self.context.seed, runner=self.context.runner)
            delta = result.objective - strict_bound(1, n_eff).B
            yield {'dim': dim, 'n_eff': n_eff, 'delta': delta, 'off_diagonal_norm': result.off_diagonal_norm}
            if abs(delta) > 1e-4 or result.off_diagonal_norm > 1e-5:
                yield self.fail('check_matrix_oracle', 'Matrix oracle minimum is not the diagonal bound.',
                                dim=dim, n_eff=n_eff, delta=delta, off_diagonal_norm=result.off_diagonal_norm)

    def check_audit(self):
        for s in (1, 2, 3):
            report = random_mixture_audit(s, AUDIT_COUNT, self.context.seed, runner=self.context.runner)
            yield {'s': s, 'count': report.count, 'violations': len(report.violations), 'min_margin': report.min_margin}
            for sample in report.violations:
                yield self.fail('check_audit', 'Random mixture below the strict boundary.', s=s, **sample.as_dict())


class QuadratureSuite(VerificationSuite):
    name = 'quadrature'
    checks = ('check_orthonormality', 'check_moments', 'check_difference_route', 'check_swap_symmetry')

    def check_orthonormality(self):
        deviation = float(np.max(np.abs(orthonormality_matrix(OscillatorBasis(1.0, 12), default_axis()) - np.eye(13))))
        yield {'n_max': 12, 'deviation': deviation}
        if deviation > 1e-8:
            yield self.fail('check_orthonormality', 'Modes are not orthonormal on the default grid.', deviation=deviation)

    def check_moments(self):
        for n_eff in QUADRATURE_N_EFF:
            spectrum = build_spectrum(1, n_eff)
            numeric = quadrature_moments(build_density_grid(spectrum))
            analytic = spectrum_moments(spectrum)
            gaps = {
                'delta_x': abs(numeric.delta_x - analytic.delta_x),
                'delta_q': abs(numeric.delta_q - analytic.delta_q),
                'n_eff': abs(numeric.n_eff - analytic.n_eff) / analytic.n_eff,
            }
            yield dict(gaps, n_eff_target=n_eff, trace=numeric.trace)
            if gaps['delta_x'] > 1e-6 or gaps['delta_q'] > 1e-6 or gaps['n_eff'] > 1e-5:
                yield self.fail('check_moments', 'Quadrature moments disagree with the analytic ones.',
                                n_eff=n_eff, **gaps)

    def check_difference_route(self):
        for n_eff in DIFFERENCE_N_EFF:
            grid = build_density_grid(build_spectrum(1, n_eff))
            gap = abs(quadrature_moments(grid, 'spectral').delta_q - quadrature_moments(grid, 'difference').delta_q)
            yield {'n_eff': n_eff, 'delta_q_gap': gap}
            if gap > 1e-4:
                yield self.fail('check_difference_route', 'Momentum routes disagree.', n_eff=n_eff, gap=gap)

    def check_swap_symmetry(self):
        grid = build_density_grid(build_spectrum(2, 3.0))
        residual = swap_residual(grid)
        yield {'s': 2, 'n_eff': 3.0, 'swap_residual': residual, 'trace': grid.trace()}
        if residual > 1e-10 or abs(grid.trace() - 1.0) > 1e-6:
            yield self.fail('check_swap_symmetry', 'Two-dimensional grid breaks coordinate exchange.', residual=residual)


def run_suite(suite):
    cases, failures = [], []
    for check in suite.checks:
        try:
            for item in getattr(suite, check)():
                if isinstance(item, VerificationFailure):
                    failures.append(item)
                else:
                    cases.append(dict(item, check=check))
        except BoundError as e:
            failures.append(VerificationFailure(suite.name, check, e.message, e.context))
    return cases, failures
