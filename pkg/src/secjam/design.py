"""Closed-form cooperative-jamming designs with destination nulling.

While the source transmits, a multi-antenna relay radiates a jamming signal
whose weight vector w is constrained to cancel at the destination
(w'h_rd = 0) while hitting the eavesdropper as hard as possible.  Under that
nulling constraint both design problems reduce to a one-dimensional power
split with a rational objective, solved in closed form:

* rate maximization: split a total budget p0 between source power ps and
  jamming power p0 - ps to maximize the secrecy rate;
* power minimization: find the cheapest (ps, w) meeting a secrecy-rate
  target rs0.

Direct transmission (all power at the source, no jamming) is always kept in
the candidate set, so a returned design never does worse than it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .channel import ChannelState
from .cvec import ComplexVector, axpy, hermitian_inner, norm_sq, scale, zero_vector

__all__ = [
    "DEGENERACY_TOL",
    "DegenerateChannels",
    "InfeasiblePs",
    "Mode",
    "RateMaxProblem",
    "PowerMinProblem",
    "DesignOutcome",
    "QuadCoeffs",
    "secrecy_rate",
    "direct_transmission_rate",
    "ratemax_direction",
    "ratemax_coeffs",
    "solve_power_split",
    "design_rate_max",
    "rho_threshold",
    "powermin_direction",
    "powermin_coeffs",
    "design_power_min",
]

# Channels count as parallel when the Gram determinant falls below this
# fraction of its scale ||h_rd||^2 ||h_re||^2 (scale-invariant threshold).
DEGENERACY_TOL = 1e-12


class DegenerateChannels(ValueError):
    """Relay channels are parallel (or N = 1): no nulling direction exists."""


class InfeasiblePs(ValueError):
    """Source power too low: no jamming level can reach the rate target."""


class Mode(Enum):
    COOPERATIVE_JAMMING = "cooperative_jamming"
    DIRECT_TRANSMISSION = "direct_transmission"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class RateMaxProblem:
    """Maximize secrecy rate subject to ps + ||w||^2 <= p0 (mW)."""

    csi: ChannelState
    p0: float

    def __post_init__(self):
        if not (math.isfinite(self.p0) and self.p0 > 0.0):
            raise ValueError(f"p0 must be > 0, got {self.p0!r}")


@dataclass(frozen=True)
class PowerMinProblem:
    """Minimize ps + ||w||^2 subject to secrecy rate >= rs0 (bits/s/Hz)."""

    csi: ChannelState
    rs0: float

    def __post_init__(self):
        if not (math.isfinite(self.rs0) and self.rs0 > 0.0):
            raise ValueError(f"rs0 must be > 0, got {self.rs0!r}")


@dataclass(frozen=True)
class DesignOutcome:
    """Chosen operating point.

    pj always equals norm_sq(w); total_power always equals ps + pj.  In
    INFEASIBLE outcomes every numeric field is zero and w is a zero vector.
    """

    mode: Mode
    ps: float
    w: ComplexVector
    pj: float
    secrecy_rate: float
    total_power: float


@dataclass(frozen=True)
class QuadCoeffs:
    """Coefficients of the rational objective (e0 + e1 ps + e2 ps^2) / (f0 + f1 ps).

    For rate maximization the ratio is 2**rate along the nulling family; for
    power minimization it is the total transmit power.  Units are mixed
    powers of mW and channel gain, fixed by the defining formulas.
    """

    e0: float
    e1: float
    e2: float
    f0: float
    f1: float

    def __post_init__(self):
        for name in ("e0", "e1", "e2", "f0", "f1"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"coefficient {name} is not finite")

    def ratio(self, ps: float) -> float:
        return (self.e0 + self.e1 * ps + self.e2 * ps * ps) / (self.f0 + self.f1 * ps)


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def _rate_value(h2: float, g2: float, sigma2: float, ps: float,
                ird: float, ire: float) -> float:
    """Unclamped secrecy rate from link gains and interference powers."""
    rd = math.log2(1.0 + ps * h2 / (ird + sigma2))
    re = math.log2(1.0 + ps * g2 / (ire + sigma2))
    return rd - re


def secrecy_rate(csi: ChannelState, ps: float, w: ComplexVector,
                 clamped: bool = True) -> float:
    """Secrecy rate (bits/s/Hz) for source power ps and relay weights w.

    The destination sees jamming power |w'h_rd|^2 and the eavesdropper
    |w'h_re|^2.  The reported rate is clamped at zero; pass clamped=False for
    the raw difference used inside the optimizers.
    """
    if not (math.isfinite(ps) and ps >= 0.0):
        raise ValueError(f"ps must be >= 0, got {ps!r}")
    ird = _abs2(hermitian_inner(w, csi.h_rd))
    ire = _abs2(hermitian_inner(w, csi.h_re))
    rate = _rate_value(_abs2(csi.h_sd), _abs2(csi.h_se), csi.sigma2, ps, ird, ire)
    return max(0.0, rate) if clamped else rate


def direct_transmission_rate(csi: ChannelState, p: float) -> float:
    """Baseline secrecy rate with all power at the source and no jamming."""
    return secrecy_rate(csi, p, zero_vector(csi.n))


def _gram(h_rd: ComplexVector, h_re: ComplexVector):
    nrd2 = norm_sq(h_rd)
    nre2 = norm_sq(h_re)
    c = hermitian_inner(h_rd, h_re)
    gram = nrd2 * nre2 - _abs2(c)
    return nrd2, nre2, c, gram


def _check_not_degenerate(n: int, nrd2: float, nre2: float, gram: float) -> None:
    if n < 2 or not (gram > DEGENERACY_TOL * (nrd2 * nre2)):
        raise DegenerateChannels(
            "relay channels span less than two dimensions; nulling plus "
            "jamming is impossible")


def ratemax_direction(h_rd: ComplexVector, h_re: ComplexVector) -> ComplexVector:
    """Unit vector orthogonal to h_rd maximizing |v'h_re| (rate-max weights).

    Raises DegenerateChannels when h_rd and h_re are (nearly) parallel or
    N = 1; callers fall back to direct transmission.
    """
    nrd2, nre2, c, gram = _gram(h_rd, h_re)
    _check_not_degenerate(len(h_rd), nrd2, nre2, gram)
    mu = 1.0 / math.sqrt(nrd2 * nrd2 * nre2 - nrd2 * _abs2(c))
    v = axpy(-(mu * c), h_rd, mu * nrd2, h_re)
    # The closed form is unit-norm only up to rounding; renormalize so the
    # power budget accounting downstream holds to ~1 ulp even for
    # ill-conditioned draws.
    nv = math.sqrt(norm_sq(v))
    return ComplexVector(e / nv for e in v)


def ratemax_coeffs(csi: ChannelState, v: ComplexVector, p0: float) -> QuadCoeffs:
    """Rational-objective coefficients for the rate-max power split.

    With w = sqrt(p0 - ps) v, 2**rate equals ratio(ps) on (0, p0].
    """
    a = _abs2(hermitian_inner(v, csi.h_re))
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    s2 = csi.sigma2
    e0 = s2 * (s2 + p0 * a)
    e1 = (h2 * p0 - s2) * a + h2 * s2
    e2 = -(h2 * a)
    f0 = e0
    f1 = s2 * (g2 - a)
    return QuadCoeffs(e0, e1, e2, f0, f1)


def _real_quadratic_roots(a: float, b: float, c: float) -> tuple[float, ...]:
    """Real roots of a x^2 + b x + c = 0, degrading to linear/constant.

    Uses the numerically stable form (larger-magnitude root first, companion
    root via the product of roots).  A discriminant that is negative by only
    a few ulps of the cancellation b*b - 4ac is treated as a double root.
    """
    if a == 0.0:
        if b == 0.0:
            return ()
        return (-c / b,)
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if disc > -8e-16 * (b * b + abs(4.0 * a * c)):
            disc = 0.0
        else:
            return ()
    sq = math.sqrt(disc)
    q = -0.5 * (b + sq) if b >= 0.0 else -0.5 * (b - sq)
    r1 = q / a
    if q == 0.0:
        return (r1,)
    return (r1, c / q)


def solve_power_split(coeffs: QuadCoeffs, p0: float) -> float:
    """Source power in (0, p0] maximizing the rate-max ratio.

    Stationary points solve e2 f1 ps^2 + 2 e2 f0 ps + (e1 f0 - e0 f1) = 0;
    the candidate set is the real roots inside (0, p0] plus the endpoint p0,
    so the budget endpoint wins whenever no interior root beats it.
    """
    qa = coeffs.e2 * coeffs.f1
    qb = 2.0 * (coeffs.e2 * coeffs.f0)
    qc = coeffs.e1 * coeffs.f0 - coeffs.e0 * coeffs.f1
    best = p0
    best_val = coeffs.ratio(p0)
    for r in _real_quadratic_roots(qa, qb, qc):
        if 0.0 < r <= p0:
            val = coeffs.ratio(r)
            if val > best_val:
                best, best_val = r, val
    return best


def design_rate_max(problem: RateMaxProblem) -> DesignOutcome:
    """Secrecy-rate-maximizing power split and null-steering weights.

    Falls back to direct transmission (ps = p0, w = 0) for degenerate
    channels or when the budget endpoint is the best candidate; the returned
    rate therefore never falls below the direct-transmission rate at p0.
    """
    csi, p0 = problem.csi, problem.p0
    n = csi.n
    dt_rate = _rate_value(_abs2(csi.h_sd), _abs2(csi.h_se), csi.sigma2,
                          p0, 0.0, 0.0)
    ps, w, rate = p0, zero_vector(n), dt_rate
    try:
        v = ratemax_direction(csi.h_rd, csi.h_re)
    except DegenerateChannels:
        v = None
    if v is not None:
        cand = solve_power_split(ratemax_coeffs(csi, v, p0), p0)
        if cand < p0:
            w_cand = scale(math.sqrt(p0 - cand), v)
            cand_rate = secrecy_rate(csi, cand, w_cand, clamped=False)
            # compare on the reported metric so dominance over direct
            # transmission holds exactly, not just analytically
            if cand_rate > dt_rate:
                ps, w, rate = cand, w_cand, cand_rate
    pj = norm_sq(w)
    mode = Mode.COOPERATIVE_JAMMING if pj > 0.0 else Mode.DIRECT_TRANSMISSION
    return DesignOutcome(mode=mode, ps=ps, w=w, pj=pj,
                         secrecy_rate=max(0.0, rate), total_power=ps + pj)


def rho_threshold(csi: ChannelState, ps: float, rs0: float) -> float:
    """Eavesdropper interference power needed to pin the rate at rs0.

    With nulling at the destination, |w'h_re|^2 = max(rho, 0) achieves
    exactly rs0 when rho >= 0; rho < 0 means direct transmission at ps
    already exceeds the target.  Raises InfeasiblePs when even infinite
    jamming cannot reach rs0 at this source power.
    """
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    s2 = csi.sigma2
    d = 2.0 ** (-rs0) * (1.0 + ps * h2 / s2) - 1.0
    if d <= 0.0:
        raise InfeasiblePs(f"rate target {rs0} unreachable at ps={ps}")
    return ps * g2 / d - s2


def powermin_direction(h_rd: ComplexVector, h_re: ComplexVector) -> ComplexVector:
    """Direction nulled at the destination with unit gain toward the eavesdropper.

    Satisfies v'h_rd = 0 and v'h_re = 1, so w = sqrt(rho) v delivers
    interference power rho at the eavesdropper with the least weight norm.
    """
    nrd2, nre2, c, gram = _gram(h_rd, h_re)
    _check_not_degenerate(len(h_rd), nrd2, nre2, gram)
    num = axpy(-c, h_rd, nrd2, h_re)
    return ComplexVector(e / gram for e in num)


def powermin_coeffs(csi: ChannelState, v: ComplexVector, rs0: float) -> QuadCoeffs:
    """Rational-objective coefficients for the power-min split.

    ratio(ps) equals the total power ps + rho(ps) ||v||^2 wherever the rate
    target is attainable and jamming is needed.
    """
    nv2 = norm_sq(v)
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    s2 = csi.sigma2
    beta = 2.0 ** (-rs0)
    bm1 = beta - 1.0
    e0 = -(bm1 * s2 * nv2)
    e1 = bm1 + (g2 - beta * h2) * nv2
    e2 = beta * h2 / s2
    f0 = bm1
    f1 = e2
    return QuadCoeffs(e0, e1, e2, f0, f1)


def design_power_min(problem: PowerMinProblem) -> DesignOutcome:
    """Cheapest design meeting the secrecy-rate target rs0.

    Candidates are the stationary points of the total-power ratio inside the
    feasible domain (target attainable, jamming actually needed) plus direct
    transmission whenever it can meet the target on its own; infeasibility is
    reported as a mode, not an exception.
    """
    csi, rs0 = problem.csi, problem.rs0
    n = csi.n
    s2 = csi.sigma2
    h2 = _abs2(csi.h_sd)
    g2 = _abs2(csi.h_se)
    r2 = 2.0 ** rs0
    dt_den = h2 - r2 * g2
    p_dt = s2 * (r2 - 1.0) / dt_den if dt_den > 0.0 else None

    try:
        v = powermin_direction(csi.h_rd, csi.h_re)
    except DegenerateChannels:
        v = None

    cj = None  # (ps, w, pj, total)
    if v is not None:
        coeffs = powermin_coeffs(csi, v, rs0)
        nv2 = norm_sq(v)
        qa = coeffs.e2 * coeffs.f1
        qb = 2.0 * (coeffs.e2 * coeffs.f0)
        qc = coeffs.e1 * coeffs.f0 - coeffs.e0 * coeffs.f1
        best_ps = best_rho = None
        best_total = math.inf
        for r in _real_quadratic_roots(qa, qb, qc):
            if r <= 0.0:
                continue
            try:
                rho = rho_threshold(csi, r, rs0)
            except InfeasiblePs:
                continue
            if rho <= 0.0:
                continue  # no jamming needed there; the p_dt candidate covers it
            total = r + rho * nv2
            if total < best_total:
                best_ps, best_rho, best_total = r, rho, total
        if best_ps is not None:
            w = scale(math.sqrt(best_rho), v)
            pj = norm_sq(w)
            cj = (best_ps, w, pj, best_ps + pj)

    # direct transmission wins ties: same power, simpler operation
    if p_dt is not None and (cj is None or p_dt <= cj[3]):
        rate = direct_transmission_rate(csi, p_dt)
        return DesignOutcome(mode=Mode.DIRECT_TRANSMISSION, ps=p_dt,
                             w=zero_vector(n), pj=0.0, secrecy_rate=rate,
                             total_power=p_dt)
    if cj is None:
        return DesignOutcome(mode=Mode.INFEASIBLE, ps=0.0, w=zero_vector(n),
                             pj=0.0, secrecy_rate=0.0, total_power=0.0)
    ps, w, pj, total = cj
    rate = secrecy_rate(csi, ps, w)
    return DesignOutcome(mode=Mode.COOPERATIVE_JAMMING, ps=ps, w=w, pj=pj,
                         secrecy_rate=rate, total_power=total)
