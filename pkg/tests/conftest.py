import numpy as np
import pytest

from secjam.channel import ChannelState
from secjam.cvec import ComplexVector


def make_csi(h_sd=1 + 0j, h_se=1 + 0j, h_rd=(1, 0), h_re=(0, 1),
             sigma2=1.0, h_sr=None) -> ChannelState:
    """Synthetic CSI for closed-form tests; h_sr defaults to all-ones."""
    h_rd = ComplexVector(h_rd)
    h_re = ComplexVector(h_re)
    if h_sr is None:
        h_sr = ComplexVector([1.0] * len(h_rd))
    else:
        h_sr = ComplexVector(h_sr)
    return ChannelState(complex(h_sd), complex(h_se), h_sr, h_rd, h_re, sigma2)


def random_csi(rng: np.random.Generator, n: int, sigma2=1e-10,
               scale_scalar=1e-3, scale_vec=1e-2) -> ChannelState:
    """Random complex-Gaussian CSI at roughly simulation scales."""
    def cplx(size=None):
        return rng.standard_normal(size) + 1j * rng.standard_normal(size)

    return ChannelState(
        complex(scale_scalar * cplx()), complex(scale_scalar * cplx()),
        ComplexVector(scale_vec * cplx(n)),
        ComplexVector(scale_vec * cplx(n)),
        ComplexVector(scale_vec * cplx(n)),
        sigma2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
