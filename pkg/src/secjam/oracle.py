"""Brute-force verifiers for the closed-form designs.

Everything here re-derives an optimum the slow way: dense one-dimensional
grids for the power splits, random sampling of the nulling subspace for the
weight vector.  The grid rate/power values are evaluated straight from the
defining secrecy-rate expression, independent of the rational-coefficient
route the designs use, so agreement is a real cross-check and not a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelState
from .cvec import hermitian_inner, norm_sq
from .design import (
    DegenerateChannels,
    InfeasiblePs,
    powermin_direction,
    ratemax_direction,
)

__all__ = [
    "GridSpec",
    "grid_best_ps_ratemax",
    "grid_best_ps_powermin",
    "subspace_weight_search",
    "analytic_max_eve_gain",
]


@dataclass(frozen=True)
class GridSpec:
    """Uniform search grid: ``points`` samples from lo to hi inclusive."""

    lo: float
    hi: float
    points: int = 10_000

    def __post_init__(self):
        if self.points < 2:
            raise ValueError("grid needs at least 2 points")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)
                and self.lo < self.hi):
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def grid_best_ps_ratemax(csi: ChannelState, p0: float,
                         grid: GridSpec | None = None) -> tuple[float, float]:
    """Best source power on a grid over (0, p0] for the nulling rate-max family.

    Evaluates the clamped secrecy rate of (ps, w = sqrt(p0 - ps) v) at every
    grid point and returns (argmax, max).  Propagates DegenerateChannels when
    no nulling direction exists.
    """
    if grid is None:
        grid = GridSpec(lo=p0 / 10_000, hi=p0, points=10_000)
    if not (grid.lo > 0.0 and grid.hi <= p0):
        raise ValueError("grid must lie within (0, p0]")
    v = ratemax_direction(csi.h_rd, csi.h_re)
    nd = _abs2(hermitian_inner(v, csi.h_rd))   # ~0 by construction
    ne = _abs2(hermitian_inner(v, csi.h_re))
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    s2 = csi.sigma2

    ps = grid.values()
    pj = p0 - ps
    rate = (np.log2(1.0 + ps * h2 / (pj * nd + s2))
            - np.log2(1.0 + ps * g2 / (pj * ne + s2)))
    np.maximum(rate, 0.0, out=rate)
    i = int(np.argmax(rate))
    return float(ps[i]), float(rate[i])


def grid_best_ps_powermin(csi: ChannelState, rs0: float,
                          grid: GridSpec | None = None) -> tuple[float, float]:
    """Cheapest total power on a grid for the nulling power-min family.

    For each grid ps the jamming power is the interference threshold needed
    to pin the rate at rs0 (clamped at zero when direct transmission already
    meets the target), costed through the actual weight norm.  Points where
    the target is unreachable are excluded; if none remain the feasible
    domain is empty and InfeasiblePs is raised.
    """
    v = powermin_direction(csi.h_rd, csi.h_re)
    nv2 = norm_sq(v)
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    s2 = csi.sigma2
    beta = 2.0 ** (-rs0)

    if grid is None:
        ps_min = s2 * (2.0 ** rs0 - 1.0) / h2
        # total power >= ps, so the minimum lies below the total at any probe
        probe = 2.0 * ps_min
        d_probe = beta * (1.0 + probe * h2 / s2) - 1.0
        hi = probe + max(probe * g2 / d_probe - s2, 0.0) * nv2
        grid = GridSpec(lo=ps_min * (1.0 + 1e-6), hi=hi, points=10_000)

    ps = grid.values()
    d = beta * (1.0 + ps * h2 / s2) - 1.0
    feasible = d > 0.0
    if not feasible.any():
        raise InfeasiblePs("no grid point can reach the rate target")
    ps = ps[feasible]
    rho = np.maximum(ps * g2 / d[feasible] - s2, 0.0)
    total = ps + rho * nv2
    i = int(np.argmin(total))
    return float(ps[i]), float(total[i])


def subspace_weight_search(csi: ChannelState, ps: float, pj: float,
                           samples: int, rng: np.random.Generator) -> float:
    """Monte Carlo lower bound on the best eavesdropper gain under nulling.

    Draws random complex-Gaussian directions, projects out h_rd, rescales to
    ||w||^2 = pj and returns the largest |w'h_re|^2 seen.  The objective does
    not involve the source power; ps is accepted to mirror the design-problem
    call shape.  Never exceeds the analytic optimum (up to rounding).
    """
    del ps
    n = csi.n
    if n < 2:
        raise DegenerateChannels("nulling subspace is empty for N < 2")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not (math.isfinite(pj) and pj > 0.0):
        raise ValueError(f"pj must be > 0, got {pj!r}")

    h_rd = np.array(csi.h_rd.entries, dtype=np.complex128)
    h_re = np.array(csi.h_re.entries, dtype=np.complex128)
    nrd2 = float(np.vdot(h_rd, h_rd).real)

    draws = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    # Gram-Schmidt step against h_rd
    coeff = draws @ h_rd.conj() / nrd2
    w = draws - np.outer(coeff, h_rd)
    norms2 = np.einsum("ij,ij->i", w.real, w.real) + np.einsum("ij,ij->i", w.imag, w.imag)
    keep = norms2 > 1e-300
    w = w[keep] * np.sqrt(pj / norms2[keep])[:, None]
    if w.shape[0] == 0:
        raise DegenerateChannels("all samples collapsed onto the nulled direction")
    gains = np.abs(w.conj() @ h_re) ** 2
    return float(gains.max())


def analytic_max_eve_gain(csi: ChannelState, pj: float) -> float:
    """Closed-form optimum the subspace search is bounded by: pj |v'h_re|^2."""
    v = ratemax_direction(csi.h_rd, csi.h_re)
    return pj * _abs2(hermitian_inner(v, csi.h_re))
