"""Line-geometry channel model: path-loss magnitudes with i.i.d. random phases.

All nodes sit on one line with the source at the origin and the destination,
relay and eavesdropper at positive coordinates.  A link of length d carries a
complex gain of magnitude d**(-alpha/2) (received power decays as d**-alpha)
and a phase drawn uniformly on [0, 2*pi).  The relay's antennas are co-located,
so the entries of a relay-side vector channel share one magnitude and differ
only in their independent phases.

Powers are linear milliwatts throughout; dBm conversions happen only at the
CLI/config boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cvec import ComplexVector

__all__ = [
    "Geometry",
    "ChannelParams",
    "ChannelState",
    "los_magnitude",
    "los_gain",
    "realize",
    "state_from_phases",
    "state_from_magnitudes",
    "phases_per_state",
    "dbm_to_mw",
    "mw_to_dbm",
]

TWO_PI = 2.0 * math.pi


def dbm_to_mw(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0)


def mw_to_dbm(mw: float) -> float:
    if not mw > 0.0:
        raise ValueError(f"power must be > 0 mW, got {mw!r}")
    return 10.0 * math.log10(mw)


@dataclass(frozen=True)
class Geometry:
    """Node positions on a line, given as distances from the source (m)."""

    d_sd: float   # source-destination
    d_sr: float   # source-relay
    d_se: float   # source-eavesdropper

    def __post_init__(self):
        for name in ("d_sd", "d_sr", "d_se"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and > 0, got {v!r}")
        if self.d_rd <= 0.0:
            raise ValueError("relay and destination coincide (d_rd = 0)")
        if self.d_re <= 0.0:
            raise ValueError("relay and eavesdropper coincide (d_re = 0)")

    @property
    def d_rd(self) -> float:
        """Relay-destination distance."""
        return abs(self.d_sd - self.d_sr)

    @property
    def d_re(self) -> float:
        """Relay-eavesdropper distance."""
        return abs(self.d_se - self.d_sr)


@dataclass(frozen=True)
class ChannelParams:
    """Propagation constants: path-loss exponent, noise power (mW), antennas."""

    alpha: float
    sigma2: float
    n: int

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be > 0, got {self.alpha!r}")
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise ValueError(f"sigma2 must be > 0, got {self.sigma2!r}")
        if self.n < 1:
            raise ValueError(f"antenna count must be >= 1, got {self.n!r}")


@dataclass(frozen=True)
class ChannelState:
    """One CSI snapshot.

    h_sr is defined by the system model but consumed by none of the designs
    (the relay only jams); it is carried for completeness.
    """

    h_sd: complex
    h_se: complex
    h_sr: ComplexVector
    h_rd: ComplexVector
    h_re: ComplexVector
    sigma2: float

    def __post_init__(self):
        n = len(self.h_sr)
        if len(self.h_rd) != n or len(self.h_re) != n:
            raise ValueError("vector channels must share one antenna count")
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise ValueError("sigma2 must be finite and > 0")
        for name in ("h_sd", "h_se"):
            z = getattr(self, name)
            if not (math.isfinite(abs(z)) and abs(z) > 0.0):
                raise ValueError(f"{name} must have finite nonzero magnitude")
        for name in ("h_sr", "h_rd", "h_re"):
            vec = getattr(self, name)
            mag2 = sum(e.real * e.real + e.imag * e.imag for e in vec)
            if not (math.isfinite(mag2) and mag2 > 0.0):
                raise ValueError(f"{name} must have finite nonzero norm")

    @property
    def n(self) -> int:
        return len(self.h_rd)


def los_magnitude(d: float, alpha: float) -> float:
    """Amplitude gain of a length-d link: d**(-alpha/2)."""
    if not (math.isfinite(d) and d > 0.0):
        raise ValueError(f"distance must be finite and > 0, got {d!r}")
    return d ** (-alpha / 2.0)


def _gain(magnitude: float, phase: float) -> complex:
    return magnitude * complex(math.cos(phase), math.sin(phase))


def los_gain(d: float, alpha: float, rng: np.random.Generator) -> complex:
    """Draw one line-of-sight gain: magnitude d**(-alpha/2), uniform phase."""
    return _gain(los_magnitude(d, alpha), rng.uniform(0.0, TWO_PI))


def phases_per_state(n: int) -> int:
    """Number of uniform phase draws one realization consumes."""
    return 2 + 3 * n


def realize(geom: Geometry, params: ChannelParams,
            rng: np.random.Generator) -> ChannelState:
    """Draw one CSI realization.

    Phases are consumed in a fixed order (h_sd, h_se, then the entries of
    h_sr, h_rd, h_re), so a given generator state maps to exactly one state.
    """
    a = params.alpha
    h_sd = los_gain(geom.d_sd, a, rng)
    h_se = los_gain(geom.d_se, a, rng)
    h_sr = ComplexVector(los_gain(geom.d_sr, a, rng) for _ in range(params.n))
    h_rd = ComplexVector(los_gain(geom.d_rd, a, rng) for _ in range(params.n))
    h_re = ComplexVector(los_gain(geom.d_re, a, rng) for _ in range(params.n))
    return ChannelState(h_sd, h_se, h_sr, h_rd, h_re, params.sigma2)


def state_from_phases(geom: Geometry, params: ChannelParams,
                      phases) -> ChannelState:
    """Assemble a ChannelState from pre-drawn phases.

    ``phases`` must hold phases_per_state(n) values in realize()'s draw
    order; the result equals realize() on the generator that produced them.
    """
    a = params.alpha
    mags = (los_magnitude(geom.d_sd, a), los_magnitude(geom.d_se, a),
            los_magnitude(geom.d_sr, a), los_magnitude(geom.d_rd, a),
            los_magnitude(geom.d_re, a))
    return state_from_magnitudes(mags, params.n, params.sigma2, phases)


def state_from_magnitudes(mags, n: int, sigma2: float, phases) -> ChannelState:
    """ChannelState from link magnitudes (sd, se, sr, rd, re) and raw phases."""
    if len(phases) != phases_per_state(n):
        raise ValueError(f"expected {phases_per_state(n)} phases, "
                         f"got {len(phases)}")
    m_sd, m_se, m_sr, m_rd, m_re = mags
    h_sd = _gain(m_sd, phases[0])
    h_se = _gain(m_se, phases[1])
    h_sr = ComplexVector(_gain(m_sr, phases[2 + k]) for k in range(n))
    h_rd = ComplexVector(_gain(m_rd, phases[2 + n + k]) for k in range(n))
    h_re = ComplexVector(_gain(m_re, phases[2 + 2 * n + k]) for k in range(n))
    return ChannelState(h_sd, h_se, h_sr, h_rd, h_re, sigma2)
