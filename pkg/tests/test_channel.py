import math

import numpy as np
import pytest

from secjam.channel import (
    TWO_PI,
    ChannelParams,
    Geometry,
    dbm_to_mw,
    los_gain,
    los_magnitude,
    mw_to_dbm,
    phases_per_state,
    realize,
    state_from_phases,
)


def _rng(seed=1234):
    return np.random.default_rng(seed)


class TestGeometry:
    def test_derived_distances(self):
        g = Geometry(d_sd=50, d_sr=25, d_se=40)
        assert g.d_rd == 25.0       # relay at the middle point
        assert g.d_re == 15.0

    def test_eavesdropper_beyond_destination(self):
        g = Geometry(d_sd=50, d_sr=25, d_se=90)
        assert g.d_re == 65.0

    @pytest.mark.parametrize("kwargs", [
        dict(d_sd=50, d_sr=50, d_se=40),   # relay on destination
        dict(d_sd=50, d_sr=25, d_se=25),   # eavesdropper on relay
        dict(d_sd=0, d_sr=25, d_se=40),
        dict(d_sd=50, d_sr=-1, d_se=40),
    ])
    def test_rejects_degenerate(self, kwargs):
        with pytest.raises(ValueError):
            Geometry(**kwargs)


class TestChannelParams:
    def test_validation(self):
        with pytest.raises(ValueError):
            ChannelParams(alpha=0, sigma2=1, n=2)
        with pytest.raises(ValueError):
            ChannelParams(alpha=3.5, sigma2=0, n=2)
        with pytest.raises(ValueError):
            ChannelParams(alpha=3.5, sigma2=1, n=0)
        assert ChannelParams(alpha=3.5, sigma2=1, n=1).n == 1


class TestLosGain:
    def test_unit_distance(self):
        assert los_magnitude(1.0, 3.5) == 1.0
        h = los_gain(1.0, 3.5, _rng())
        assert abs(abs(h) - 1.0) < 1e-12

    def test_reference_distance_power(self):
        # direct evaluation of the model: received power 50**-3.5
        h = los_gain(50.0, 3.5, _rng())
        got = abs(h) ** 2
        assert got == pytest.approx(50.0 ** -3.5, rel=1e-12)
        assert got == pytest.approx(1.13137085e-6, rel=1e-6)

    def test_deterministic_given_seed(self):
        assert los_gain(7.0, 3.5, _rng(42)) == los_gain(7.0, 3.5, _rng(42))

    def test_rejects_nonpositive_distance(self):
        with pytest.raises(ValueError):
            los_gain(0.0, 3.5, _rng())
        with pytest.raises(ValueError):
            los_magnitude(-2.0, 3.5)

    def test_phase_uniformity(self):
        # chi-square over 16 bins; 37.697 is the p = 0.001 critical value
        # for 15 degrees of freedom
        rng = _rng(7)
        draws = 10_000
        phases = np.array([math.atan2(h.imag, h.real) % TWO_PI
                           for h in (los_gain(5.0, 3.5, rng)
                                     for _ in range(draws))])
        counts, _ = np.histogram(phases, bins=16, range=(0.0, TWO_PI))
        expected = draws / 16
        stat = ((counts - expected) ** 2 / expected).sum()
        assert stat < 37.697


class TestRealize:
    GEOM = Geometry(d_sd=50, d_sr=25, d_se=40)
    PAR = ChannelParams(alpha=3.5, sigma2=1e-10, n=2)

    def test_colocated_magnitudes(self):
        csi = realize(self.GEOM, self.PAR, _rng())
        m = self.GEOM.d_rd ** (-3.5 / 2)
        assert abs(csi.h_rd[0]) == pytest.approx(m, rel=1e-12)
        assert abs(csi.h_rd[1]) == pytest.approx(m, rel=1e-12)
        assert csi.h_rd[0] != csi.h_rd[1]   # independent phases

    def test_scalar_magnitude_deterministic(self):
        a = realize(self.GEOM, self.PAR, _rng(1))
        b = realize(self.GEOM, self.PAR, _rng(2))
        assert abs(a.h_sd) == abs(b.h_sd)
        assert a.h_sd != b.h_sd

    def test_bit_reproducible(self):
        a = realize(self.GEOM, self.PAR, _rng(99))
        b = realize(self.GEOM, self.PAR, _rng(99))
        assert a == b

    def test_matches_pre_drawn_phases(self):
        # realize consumes one uniform per gain, in documented order; a bulk
        # draw from the same stream must reproduce the state exactly
        phases = _rng(5).uniform(0.0, TWO_PI, phases_per_state(self.PAR.n))
        assert state_from_phases(self.GEOM, self.PAR, phases) \
            == realize(self.GEOM, self.PAR, _rng(5))

    def test_phase_count_checked(self):
        with pytest.raises(ValueError, match="phases"):
            state_from_phases(self.GEOM, self.PAR, np.zeros(3))


class TestChannelState:
    def test_rejects_mismatched_lengths(self):
        from secjam.channel import ChannelState
        from secjam.cvec import ComplexVector
        with pytest.raises(ValueError, match="antenna count"):
            ChannelState(1 + 0j, 1 + 0j, ComplexVector([1, 1]),
                         ComplexVector([1, 1]), ComplexVector([1]), 1.0)

    def test_rejects_zero_channels(self):
        from secjam.channel import ChannelState
        from secjam.cvec import ComplexVector
        ones = ComplexVector([1, 1])
        with pytest.raises(ValueError, match="h_sd"):
            ChannelState(0j, 1 + 0j, ones, ones, ones, 1.0)
        with pytest.raises(ValueError, match="h_re"):
            ChannelState(1 + 0j, 1 + 0j, ones, ones,
                         ComplexVector([0, 0]), 1.0)
        with pytest.raises(ValueError, match="sigma2"):
            ChannelState(1 + 0j, 1 + 0j, ones, ones, ones, 0.0)


class TestUnits:
    def test_reference_conversions(self):
        assert dbm_to_mw(-100.0) == pytest.approx(1e-10, rel=1e-12)
        assert dbm_to_mw(-40.0) == pytest.approx(1e-4, rel=1e-12)
        assert dbm_to_mw(0.0) == 1.0

    def test_round_trip(self):
        for dbm in (-100.0, -40.0, -3.7, 0.0, 12.5):
            assert mw_to_dbm(dbm_to_mw(dbm)) == pytest.approx(dbm, abs=1e-9)

    def test_rejects_nonpositive_power(self):
        with pytest.raises(ValueError):
            mw_to_dbm(0.0)
