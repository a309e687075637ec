"""Cooperative jamming with a multi-antenna relay: null-steering weight
designs, optimal source/jammer power allocation, brute-force oracles and a
Monte Carlo geometry-sweep harness."""

__version__ = "0.1.0"

from .channel import (
    ChannelParams,
    ChannelState,
    Geometry,
    dbm_to_mw,
    los_gain,
    los_magnitude,
    mw_to_dbm,
    realize,
)
from .cvec import ComplexScalar, ComplexVector, axpy, hermitian_inner, norm_sq
from .design import (
    DegenerateChannels,
    DesignOutcome,
    InfeasiblePs,
    Mode,
    PowerMinProblem,
    QuadCoeffs,
    RateMaxProblem,
    design_power_min,
    design_rate_max,
    direct_transmission_rate,
    powermin_coeffs,
    powermin_direction,
    ratemax_coeffs,
    ratemax_direction,
    rho_threshold,
    secrecy_rate,
    solve_power_split,
)
from .oracle import (
    GridSpec,
    grid_best_ps_powermin,
    grid_best_ps_ratemax,
    subspace_weight_search,
)
from .sim import SweepConfig, SweepRow, run_sweep, write_csv

__all__ = [
    "__version__",
    "ChannelParams", "ChannelState", "Geometry", "dbm_to_mw", "los_gain",
    "los_magnitude", "mw_to_dbm", "realize",
    "ComplexScalar", "ComplexVector", "axpy", "hermitian_inner", "norm_sq",
    "DegenerateChannels", "DesignOutcome", "InfeasiblePs", "Mode",
    "PowerMinProblem", "QuadCoeffs", "RateMaxProblem", "design_power_min",
    "design_rate_max", "direct_transmission_rate", "powermin_coeffs",
    "powermin_direction", "ratemax_coeffs", "ratemax_direction",
    "rho_threshold", "secrecy_rate", "solve_power_split",
    "GridSpec", "grid_best_ps_powermin", "grid_best_ps_ratemax",
    "subspace_weight_search",
    "SweepConfig", "SweepRow", "run_sweep", "write_csv",
]
