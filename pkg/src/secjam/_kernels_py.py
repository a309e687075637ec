"""Pure-Python sweep kernels: the reference design code run trial by trial.

Both kernel backends take pre-built complex channel batches (one row per
trial) and return per-trial design outcomes.  This one wraps each row in a
ChannelState and calls the reference design functions; slow but
authoritative.  The compiled kernels in _kernels.pyx mirror its arithmetic
operation for operation and must produce identical results.
"""

from __future__ import annotations

import numpy as np

from .backend import (
    MODE_COOPERATIVE_JAMMING,
    MODE_DIRECT_TRANSMISSION,
    MODE_INFEASIBLE,
)
from .channel import ChannelState
from .cvec import ComplexVector
from .design import (
    Mode,
    PowerMinProblem,
    RateMaxProblem,
    design_power_min,
    design_rate_max,
    secrecy_rate,
)

_MODE_CODE = {
    Mode.COOPERATIVE_JAMMING: MODE_COOPERATIVE_JAMMING,
    Mode.DIRECT_TRANSMISSION: MODE_DIRECT_TRANSMISSION,
    Mode.INFEASIBLE: MODE_INFEASIBLE,
}


def _states(h_sd, h_se, h_sr, h_rd, h_re, sigma2):
    for t in range(h_sd.shape[0]):
        yield ChannelState(
            complex(h_sd[t]), complex(h_se[t]),
            ComplexVector(complex(z) for z in h_sr[t]),
            ComplexVector(complex(z) for z in h_rd[t]),
            ComplexVector(complex(z) for z in h_re[t]),
            sigma2)


def ratemax_trials(h_sd, h_se, h_sr, h_rd, h_re, sigma2, p0):
    """Run the rate-max design on each channel row.

    Returns (mode, ps, pj, rate, rate_unclamped) arrays; one entry per trial.
    """
    trials = h_sd.shape[0]
    mode = np.empty(trials, dtype=np.int8)
    ps = np.empty(trials)
    pj = np.empty(trials)
    rate = np.empty(trials)
    rate_u = np.empty(trials)
    for t, csi in enumerate(_states(h_sd, h_se, h_sr, h_rd, h_re, sigma2)):
        out = design_rate_max(RateMaxProblem(csi, p0))
        mode[t] = _MODE_CODE[out.mode]
        ps[t] = out.ps
        pj[t] = out.pj
        rate[t] = out.secrecy_rate
        rate_u[t] = secrecy_rate(csi, out.ps, out.w, clamped=False)
    return mode, ps, pj, rate, rate_u


def powermin_trials(h_sd, h_se, h_sr, h_rd, h_re, sigma2, rs0):
    """Run the power-min design on each channel row.

    Returns (mode, ps, pj, total, rate) arrays; infeasible trials carry zeros.
    """
    trials = h_sd.shape[0]
    mode = np.empty(trials, dtype=np.int8)
    ps = np.empty(trials)
    pj = np.empty(trials)
    total = np.empty(trials)
    rate = np.empty(trials)
    for t, csi in enumerate(_states(h_sd, h_se, h_sr, h_rd, h_re, sigma2)):
        out = design_power_min(PowerMinProblem(csi, rs0))
        mode[t] = _MODE_CODE[out.mode]
        ps[t] = out.ps
        pj[t] = out.pj
        total[t] = out.total_power
        rate[t] = out.secrecy_rate
    return mode, ps, pj, total, rate
