"""Minimal exact-semantics complex vector arithmetic.

Vectors are immutable tuples of Python ``complex`` values; every operation
returns a new value and is safe to call concurrently.  This module is kept
deliberately free of numpy so the closed-form designs built on top of it have
plain, auditable double-precision semantics.
"""

from __future__ import annotations

import math
from typing import Iterable

__all__ = [
    "ComplexScalar",
    "ComplexVector",
    "hermitian_inner",
    "norm_sq",
    "axpy",
    "scale",
    "zero_vector",
]

# Channel gains are dimensionless complex scalars; the builtin complex type
# already has the right arithmetic, so we only add finiteness validation.
ComplexScalar = complex


def _is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def as_finite_complex(value) -> complex:
    """Coerce to complex, rejecting NaN/Inf components."""
    z = complex(value)
    if not _is_finite(z):
        raise ValueError(f"non-finite complex value: {value!r}")
    return z


class ComplexVector:
    """Immutable length-N complex vector (N >= 1) with finite entries."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[complex]):
        tup = tuple(complex(e) for e in entries)
        if not tup:
            raise ValueError("ComplexVector needs at least one entry")
        for e in tup:
            if not _is_finite(e):
                raise ValueError(f"non-finite vector entry: {e!r}")
        object.__setattr__(self, "_entries", tup)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexVector is immutable")

    @property
    def entries(self) -> tuple[complex, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, idx: int) -> complex:
        return self._entries[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"ComplexVector({list(self._entries)!r})"


def zero_vector(n: int) -> ComplexVector:
    """All-zeros vector of length n."""
    if n < 1:
        raise ValueError("vector length must be >= 1")
    return ComplexVector((0j,) * n)


def _check_same_length(a: ComplexVector, b: ComplexVector) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def hermitian_inner(a: ComplexVector, b: ComplexVector) -> complex:
    """Inner product sum_k conj(a_k) * b_k (conjugate-linear in ``a``)."""
    _check_same_length(a, b)
    total = 0j
    for x, y in zip(a, b):
        total += x.conjugate() * y
    if not _is_finite(total):
        raise ValueError("inner product overflowed to non-finite value")
    return total


def norm_sq(a: ComplexVector) -> float:
    """Squared 2-norm; bitwise equal to hermitian_inner(a, a).real."""
    total = 0.0
    for x in a:
        total += x.real * x.real + x.imag * x.imag
    if not math.isfinite(total):
        raise ValueError("squared norm overflowed to non-finite value")
    return total


def axpy(alpha: complex, x: ComplexVector, beta: complex,
         y: ComplexVector) -> ComplexVector:
    """Entrywise alpha*x + beta*y."""
    _check_same_length(x, y)
    return ComplexVector(alpha * xe + beta * ye for xe, ye in zip(x, y))


def scale(alpha, x: ComplexVector) -> ComplexVector:
    """Entrywise alpha*x (alpha may be real or complex)."""
    return ComplexVector(alpha * xe for xe in x)
