"""Monte Carlo geometry sweep: averaged design performance vs eavesdropper position.

Sweeps the source-eavesdropper distance over a line geometry, running many
independent channel realizations per position and antenna count, and averages
secrecy rate (rate-max mode) or total transmit power (power-min mode).  A
direct-transmission row (n_antennas = 0) accompanies every position; in this
deterministic path-loss model it depends on distances only.

Every trial draws from its own counter-based random stream keyed by
(seed, position index, antenna count, trial), so results are independent of
execution order and two runs with one seed match bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .channel import (
    TWO_PI,
    ChannelParams,
    Geometry,
    dbm_to_mw,
    los_magnitude,
    mw_to_dbm,
    phases_per_state,
    state_from_phases,
)
from .cvec import zero_vector
from .design import (
    Mode,
    PowerMinProblem,
    design_power_min,
    direct_transmission_rate,
    secrecy_rate,
)

__all__ = [
    "SweepConfig",
    "SweepRow",
    "run_sweep",
    "write_csv",
    "trial_rng",
    "effective_geometry",
    "DEFAULT_D_SE_VALUES",
]

# reference sweep: eavesdropper from 10 m to 90 m in 5 m steps
DEFAULT_D_SE_VALUES = tuple(float(d) for d in range(10, 95, 5))

# The pure path-loss gain diverges as a node pair's distance goes to zero, so
# an eavesdropper placed exactly on the relay (d_se == d_sr, a default sweep
# point) would be rejected by Geometry.  Positions closer to the relay than
# this standoff get nudged to the standoff distance.
MIN_NODE_SEPARATION_M = 1.0


@dataclass(frozen=True)
class SweepConfig:
    """Sweep settings; defaults reproduce the reference scenario."""

    d_sd: float = 50.0                 # source-destination distance (m)
    d_sr: float = 25.0                 # source-relay distance (m)
    d_se_values: tuple[float, ...] = DEFAULT_D_SE_VALUES
    alpha: float = 3.5                 # path-loss exponent
    sigma2_dbm: float = -100.0         # noise power
    mode: str = "ratemax"              # "ratemax" or "powermin"
    p0_dbm: float = -40.0              # total power budget (rate-max)
    rs0: float = 1.0                   # secrecy-rate target (power-min)
    antenna_counts: tuple[int, ...] = (2, 4)
    trials: int = 1000
    seed: int = 0
    min_separation: float = MIN_NODE_SEPARATION_M

    def __post_init__(self):
        if self.mode not in ("ratemax", "powermin"):
            raise ValueError(f"mode must be ratemax or powermin, got {self.mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.d_se_values:
            raise ValueError("d_se_values must be nonempty")
        if not self.antenna_counts:
            raise ValueError("antenna_counts must be nonempty")
        if any(n < 1 for n in self.antenna_counts):
            raise ValueError("antenna counts must be >= 1")
        if not self.rs0 > 0.0:
            raise ValueError("rs0 must be > 0")

    @property
    def sigma2_mw(self) -> float:
        return dbm_to_mw(self.sigma2_dbm)

    @property
    def p0_mw(self) -> float:
        return dbm_to_mw(self.p0_dbm)


@dataclass(frozen=True)
class SweepRow:
    """Averages for one (position, antenna count) cell; n = 0 marks direct transmission.

    Means cover feasible trials only.  The stderr fields and the unclamped
    mean are carried for analysis; the CSV schema stays fixed (the unclamped
    mean appears only as an optional debug column).
    """

    d_se: float
    n: int
    mean_secrecy_rate: float
    mean_total_power_dbm: float
    feasible_fraction: float
    trials: int
    mean_total_power_mw: float = math.nan
    mean_unclamped_rate: float = math.nan
    stderr_secrecy_rate: float = 0.0
    stderr_total_power_mw: float = 0.0


def effective_geometry(d_sd: float, d_sr: float, d_se: float,
                       min_separation: float = MIN_NODE_SEPARATION_M) -> Geometry:
    """Geometry with the eavesdropper nudged off the relay if they collide.

    Positions within min_separation of the relay move to min_separation past
    it (or before it when approached from the source side), keeping the pure
    path-loss model finite at the d_se == d_sr sweep point.
    """
    if abs(d_se - d_sr) < min_separation:
        if d_se >= d_sr or d_sr - min_separation <= 0.0:
            d_se = d_sr + min_separation
        else:
            d_se = d_sr - min_separation
    return Geometry(d_sd=d_sd, d_sr=d_sr, d_se=d_se)


def trial_rng(seed: int, dse_index: int, n: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one Monte Carlo trial."""
    key = np.random.SeedSequence(
        entropy=(seed & 0xFFFFFFFFFFFFFFFF, dse_index, n, trial))
    return np.random.Generator(np.random.Philox(key))


def _draw_phases(seed: int, dse_index: int, n: int, trials: int) -> np.ndarray:
    width = phases_per_state(n)
    out = np.empty((trials, width), dtype=np.float64)
    for t in range(trials):
        out[t] = trial_rng(seed, dse_index, n, t).uniform(0.0, TWO_PI, width)
    return out


def _channel_batch(mags, n: int, phases: np.ndarray):
    """Complex channel rows for every trial, shared by both kernel backends."""
    m_sd, m_se, m_sr, m_rd, m_re = mags
    unit = np.cos(phases) + 1j * np.sin(phases)
    h_sd = m_sd * unit[:, 0]
    h_se = m_se * unit[:, 1]
    h_sr = m_sr * unit[:, 2:2 + n]
    h_rd = m_rd * unit[:, 2 + n:2 + 2 * n]
    h_re = m_re * unit[:, 2 + 2 * n:2 + 3 * n]
    return h_sd, h_se, h_sr, h_rd, h_re


def _stderr(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(values.std(ddof=1) / math.sqrt(values.size))


def _power_dbm(mean_mw: float) -> float:
    return mw_to_dbm(mean_mw) if mean_mw > 0.0 else math.nan


def _direct_transmission_row(cfg: SweepConfig, geom: Geometry, d_se: float) -> SweepRow:
    # deterministic: rates/powers depend on link magnitudes only, so one
    # evaluation (zero phases) stands in for every trial
    params = ChannelParams(alpha=cfg.alpha, sigma2=cfg.sigma2_mw, n=1)
    csi = state_from_phases(geom, params, np.zeros(phases_per_state(1)))
    if cfg.mode == "ratemax":
        rate = direct_transmission_rate(csi, cfg.p0_mw)
        raw = secrecy_rate(csi, cfg.p0_mw, zero_vector(1), clamped=False)
        return SweepRow(d_se=d_se, n=0, mean_secrecy_rate=rate,
                        mean_total_power_dbm=_power_dbm(cfg.p0_mw),
                        feasible_fraction=1.0, trials=cfg.trials,
                        mean_total_power_mw=cfg.p0_mw, mean_unclamped_rate=raw)
    out = design_power_min(PowerMinProblem(csi, cfg.rs0))
    if out.mode is Mode.INFEASIBLE:
        return SweepRow(d_se=d_se, n=0, mean_secrecy_rate=math.nan,
                        mean_total_power_dbm=math.nan, feasible_fraction=0.0,
                        trials=cfg.trials)
    return SweepRow(d_se=d_se, n=0, mean_secrecy_rate=out.secrecy_rate,
                    mean_total_power_dbm=_power_dbm(out.total_power),
                    feasible_fraction=1.0, trials=cfg.trials,
                    mean_total_power_mw=out.total_power,
                    mean_unclamped_rate=out.secrecy_rate)


def run_sweep(cfg: SweepConfig, kernels=None) -> list[SweepRow]:
    """Run the configured sweep; returns rows ordered by position, then n, then DT."""
    if kernels is None:
        kernels = backend.get_backend()
    sigma2 = cfg.sigma2_mw
    rows: list[SweepRow] = []
    for i, d_se in enumerate(cfg.d_se_values):
        geom = effective_geometry(cfg.d_sd, cfg.d_sr, d_se, cfg.min_separation)
        mags = (los_magnitude(geom.d_sd, cfg.alpha),
                los_magnitude(geom.d_se, cfg.alpha),
                los_magnitude(geom.d_sr, cfg.alpha),
                los_magnitude(geom.d_rd, cfg.alpha),
                los_magnitude(geom.d_re, cfg.alpha))
        for n in cfg.antenna_counts:
            phases = _draw_phases(cfg.seed, i, n, cfg.trials)
            batch = _channel_batch(mags, n, phases)
            if cfg.mode == "ratemax":
                _, ps, pj, rate, rate_u = kernels.ratemax_trials(
                    *batch, sigma2, cfg.p0_mw)
                totals = ps + pj
                mean_total = float(totals.mean())
                rows.append(SweepRow(
                    d_se=d_se, n=n,
                    mean_secrecy_rate=float(rate.mean()),
                    mean_total_power_dbm=_power_dbm(mean_total),
                    feasible_fraction=1.0, trials=cfg.trials,
                    mean_total_power_mw=mean_total,
                    mean_unclamped_rate=float(rate_u.mean()),
                    stderr_secrecy_rate=_stderr(rate),
                    stderr_total_power_mw=_stderr(totals)))
            else:
                mode, _, _, total, rate = kernels.powermin_trials(
                    *batch, sigma2, cfg.rs0)
                feasible = mode != backend.MODE_INFEASIBLE
                frac = float(feasible.mean())
                if feasible.any():
                    tot_f = total[feasible]
                    rate_f = rate[feasible]
                    mean_total = float(tot_f.mean())
                    rows.append(SweepRow(
                        d_se=d_se, n=n,
                        mean_secrecy_rate=float(rate_f.mean()),
                        mean_total_power_dbm=_power_dbm(mean_total),
                        feasible_fraction=frac, trials=cfg.trials,
                        mean_total_power_mw=mean_total,
                        mean_unclamped_rate=float(rate_f.mean()),
                        stderr_secrecy_rate=_stderr(rate_f),
                        stderr_total_power_mw=_stderr(tot_f)))
                else:
                    rows.append(SweepRow(
                        d_se=d_se, n=n, mean_secrecy_rate=math.nan,
                        mean_total_power_dbm=math.nan,
                        feasible_fraction=0.0, trials=cfg.trials))
        rows.append(_direct_transmission_row(cfg, geom, d_se))
    return rows


CSV_HEADER = ("d_se_m,n_antennas,mean_secrecy_rate_bps_hz,"
              "mean_total_power_dbm,feasible_fraction,trials")
CSV_DEBUG_COLUMN = "mean_unclamped_secrecy_rate_bps_hz"


def write_csv(rows, path, include_unclamped: bool = False) -> None:
    """Write sweep rows as CSV (9 significant digits per numeric field)."""
    header = CSV_HEADER + ("," + CSV_DEBUG_COLUMN if include_unclamped else "")
    lines = [header]
    for row in rows:
        fields = [f"{row.d_se:.9g}", str(row.n),
                  f"{row.mean_secrecy_rate:.9g}",
                  f"{row.mean_total_power_dbm:.9g}",
                  f"{row.feasible_fraction:.9g}", str(row.trials)]
        if include_unclamped:
            fields.append(f"{row.mean_unclamped_rate:.9g}")
        lines.append(",".join(fields))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
