"""Self-check battery behind `secjam verify`.

Replays the brute-force oracles against the closed-form designs on seeded
random realizations of the default line geometry and reports one pass/fail
line per check.  Any tolerance violation turns the CLI exit code nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import ChannelParams, realize
from .design import (
    Mode,
    PowerMinProblem,
    RateMaxProblem,
    design_power_min,
    design_rate_max,
    direct_transmission_rate,
    ratemax_coeffs,
    ratemax_direction,
    secrecy_rate,
)
from .oracle import (
    analytic_max_eve_gain,
    grid_best_ps_powermin,
    grid_best_ps_ratemax,
    subspace_weight_search,
)
from .sim import effective_geometry, trial_rng

__all__ = ["CheckResult", "run_checks"]

DEFAULT_D_SE_CHECKS = (15.0, 25.0, 40.0, 60.0, 85.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _realizations(seed, d_se_values, antenna_counts, per_cell, alpha, sigma2,
                  d_sd, d_sr):
    for i, d_se in enumerate(d_se_values):
        geom = effective_geometry(d_sd, d_sr, d_se)
        for n in antenna_counts:
            params = ChannelParams(alpha=alpha, sigma2=sigma2, n=n)
            for t in range(per_cell):
                yield realize(geom, params, trial_rng(seed, i, n, t))


def run_checks(seed: int = 0, per_cell: int = 20,
               antenna_counts=(2, 4), d_se_values=DEFAULT_D_SE_CHECKS,
               d_sd: float = 50.0, d_sr: float = 25.0, alpha: float = 3.5,
               sigma2: float = 1e-10, p0: float = 1e-4, rs0: float = 1.0,
               subspace_samples: int = 100_000) -> list[CheckResult]:
    """Run every oracle check; returns one CheckResult per check."""
    results = []

    def run(name):
        def wrap(fn):
            try:
                detail = fn()
                results.append(CheckResult(name, True, detail or ""))
            except AssertionError as exc:
                results.append(CheckResult(name, False, str(exc)))
        return wrap

    states = list(_realizations(seed, d_se_values, antenna_counts, per_cell,
                                alpha, sigma2, d_sd, d_sr))

    @run("ratemax-vs-grid")
    def _():
        worst = math.inf
        for csi in states:
            out = design_rate_max(RateMaxProblem(csi, p0))
            _, grid_rate = grid_best_ps_ratemax(csi, p0)
            margin = out.secrecy_rate - grid_rate
            worst = min(worst, margin)
            assert margin >= -1e-9, (
                f"closed form lost to the grid by {-margin:.3e} bits")
            dt = direct_transmission_rate(csi, p0)
            assert out.secrecy_rate >= dt, "design fell below direct transmission"
        return f"{len(states)} realizations, worst margin {worst:.3e} bits"

    @run("powermin-vs-grid")
    def _():
        worst = math.inf
        checked = 0
        for csi in states:
            out = design_power_min(PowerMinProblem(csi, rs0))
            if out.mode is Mode.INFEASIBLE:
                continue
            _, grid_total = grid_best_ps_powermin(csi, rs0)
            margin = (grid_total - out.total_power) / grid_total
            worst = min(worst, margin)
            checked += 1
            assert out.total_power <= grid_total * (1.0 + 1e-9), (
                f"closed form beaten by grid by {-margin:.3e} relative")
            if out.mode is Mode.COOPERATIVE_JAMMING:
                rate = secrecy_rate(csi, out.ps, out.w, clamped=False)
                assert abs(rate - rs0) <= 1e-9, (
                    f"rate target missed by {rate - rs0:.3e}")
        return f"{checked} feasible realizations, worst margin {worst:.3e} rel"

    @run("constraint-exactness")
    def _():
        from .cvec import hermitian_inner, norm_sq
        jam = 0
        for csi in states:
            out = design_rate_max(RateMaxProblem(csi, p0))
            if out.mode is not Mode.COOPERATIVE_JAMMING:
                continue
            jam += 1
            leak = abs(hermitian_inner(out.w, csi.h_rd)) ** 2
            bound = 1e-24 * out.pj * norm_sq(csi.h_rd)
            assert leak <= bound, f"nulling leak {leak:.3e} > {bound:.3e}"
            assert abs(out.ps + out.pj - p0) <= 1e-12 * p0, "budget violated"
        return f"{jam} jamming outcomes checked"

    @run("subspace-search-bound")
    def _():
        import numpy as np
        rng = np.random.default_rng(seed)
        checked = 0
        for csi in states[:: max(1, len(states) // 6)]:
            best = subspace_weight_search(csi, p0 / 2, p0 / 2,
                                          subspace_samples, rng)
            opt = analytic_max_eve_gain(csi, p0 / 2)
            assert best <= opt * (1.0 + 1e-9), (
                f"sampling beat the closed form: {best:.6e} > {opt:.6e}")
            if csi.n <= 4:
                assert best >= 0.99 * opt, (
                    f"sampling reached only {best / opt:.4f} of the optimum")
            checked += 1
        return f"{checked} realizations, {subspace_samples} samples each"

    @run("stationarity")
    def _():
        checked = 0
        for csi in states:
            out = design_rate_max(RateMaxProblem(csi, p0))
            if out.mode is not Mode.COOPERATIVE_JAMMING:
                continue
            step = 1e-6 * p0
            if not (step < out.ps < p0 - step):
                continue
            coeffs = ratemax_coeffs(
                csi, ratemax_direction(csi.h_rd, csi.h_re), p0)
            deriv = (coeffs.ratio(out.ps + step)
                     - coeffs.ratio(out.ps - step)) / (2.0 * step)
            scale = coeffs.ratio(out.ps) / p0
            assert abs(deriv) <= 1e-4 * scale, (
                f"objective slope {deriv:.3e} at the reported optimum")
            checked += 1
        return f"{checked} interior optima checked"

    return results
