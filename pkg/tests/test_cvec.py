import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secjam.cvec import (
    ComplexVector,
    axpy,
    hermitian_inner,
    norm_sq,
    scale,
    zero_vector,
)

finite_complex = st.complex_numbers(allow_nan=False, allow_infinity=False,
                                    max_magnitude=1e3)


def vector_pairs(min_len=1, max_len=6):
    return st.integers(min_len, max_len).flatmap(
        lambda n: st.tuples(
            st.lists(finite_complex, min_size=n, max_size=n),
            st.lists(finite_complex, min_size=n, max_size=n)))


class TestHermitianInner:
    def test_unit_self_product(self):
        a = ComplexVector([1, 0])
        assert hermitian_inner(a, a) == 1 + 0j

    def test_conjugation(self):
        a = ComplexVector([1j, 0])
        assert hermitian_inner(a, a) == 1 + 0j

    def test_orthogonal_pair(self):
        a = ComplexVector([1, 1j])
        b = ComplexVector([1j, 1])
        assert hermitian_inner(a, b) == 0j

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            hermitian_inner(ComplexVector([1]), ComplexVector([1, 2]))

    @given(vector_pairs())
    @settings(max_examples=200)
    def test_conjugate_symmetry(self, pair):
        a, b = ComplexVector(pair[0]), ComplexVector(pair[1])
        assert hermitian_inner(a, b) == hermitian_inner(b, a).conjugate()

    @given(vector_pairs())
    @settings(max_examples=200)
    def test_cauchy_schwarz(self, pair):
        a, b = ComplexVector(pair[0]), ComplexVector(pair[1])
        lhs = abs(hermitian_inner(a, b)) ** 2
        # tiny slack: the exact-arithmetic bound can be crossed by rounding
        assert lhs <= norm_sq(a) * norm_sq(b) * (1 + 1e-12) + 1e-300


class TestNormSq:
    def test_examples(self):
        assert norm_sq(ComplexVector([3, 4])) == 25.0
        assert norm_sq(ComplexVector([1j])) == 1.0
        assert norm_sq(ComplexVector([0, 0])) == 0.0

    @given(st.lists(finite_complex, min_size=1, max_size=6))
    @settings(max_examples=200)
    def test_matches_self_inner_product(self, entries):
        a = ComplexVector(entries)
        assert norm_sq(a) == hermitian_inner(a, a).real
        assert hermitian_inner(a, a).imag == 0.0


class TestAxpy:
    def test_examples(self):
        assert axpy(1, ComplexVector([1, 0]), 1, ComplexVector([0, 1])) \
            == ComplexVector([1, 1])
        assert axpy(0, ComplexVector([2, 3]), 0, ComplexVector([4, 5])) \
            == zero_vector(2)
        assert axpy(2j, ComplexVector([1, 0]), -1, ComplexVector([1, 1])) \
            == ComplexVector([-1 + 2j, -1])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            axpy(1, ComplexVector([1]), 1, ComplexVector([1, 2]))

    @given(st.tuples(finite_complex, finite_complex), vector_pairs())
    @settings(max_examples=200)
    def test_norm_expands_bilinearly(self, coeffs, pair):
        alpha, beta = coeffs
        x, y = ComplexVector(pair[0]), ComplexVector(pair[1])
        got = norm_sq(axpy(alpha, x, beta, y))
        expected = (abs(alpha) ** 2 * norm_sq(x) + abs(beta) ** 2 * norm_sq(y)
                    + 2 * (alpha.conjugate() * beta
                           * hermitian_inner(x, y)).real)
        scale_ = (abs(alpha) ** 2 * norm_sq(x)
                  + abs(beta) ** 2 * norm_sq(y) + 1e-300)
        assert got == pytest.approx(expected, rel=1e-9, abs=1e-9 * scale_)


class TestComplexVector:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ComplexVector([])

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"),
                                     complex(0, float("nan"))])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValueError, match="non-finite"):
            ComplexVector([1, bad])

    def test_overflow_detected(self):
        big = ComplexVector([1e308, 1e308])
        with pytest.raises(ValueError, match="non-finite|overflow"):
            norm_sq(big)

    def test_immutable(self):
        a = ComplexVector([1, 2])
        with pytest.raises(AttributeError):
            a.entries = (3,)

    def test_value_semantics(self):
        assert ComplexVector([1, 2j]) == ComplexVector([1, 2j])
        assert hash(ComplexVector([1])) == hash(ComplexVector([1]))
        assert ComplexVector([1]) != ComplexVector([2])

    def test_scale(self):
        assert scale(2.0, ComplexVector([1, 1j])) == ComplexVector([2, 2j])
