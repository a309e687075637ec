"""Sweep-kernel backend selection.

The Monte Carlo sweep spends nearly all its time in the per-trial
realize-then-design loop, so that loop exists twice: a Cython extension
(secjam._kernels) and a pure-Python fallback (secjam._kernels_py) that runs
the reference design code trial by trial.  Both expose the same
ratemax_trials / powermin_trials batch functions and agree to rounding
error; tests/test_backends.py checks that and benchmarks/bench_backends.py
compares their speed.

The compiled backend is picked when importable; set SECJAM_BACKEND=python
or =cython to force a choice.
"""

from __future__ import annotations

import os

__all__ = [
    "MODE_COOPERATIVE_JAMMING",
    "MODE_DIRECT_TRANSMISSION",
    "MODE_INFEASIBLE",
    "get_backend",
    "backend_name",
    "available_backends",
]

# integer outcome codes used by both kernel implementations
MODE_COOPERATIVE_JAMMING = 1
MODE_DIRECT_TRANSMISSION = 2
MODE_INFEASIBLE = 3


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name."""
    out = {}
    try:
        from . import _kernels
        out["cython"] = _kernels
    except ImportError:
        pass
    from . import _kernels_py
    out["python"] = _kernels_py
    return out


def get_backend(name: str | None = None):
    """Resolve a kernel module.

    name may be "auto" (default; compiled if available), "python" or
    "cython"; None falls back to the SECJAM_BACKEND environment variable.
    """
    if name is None:
        name = os.environ.get("SECJAM_BACKEND", "auto")
    if name not in ("auto", "python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    backends = available_backends()
    if name == "auto":
        return backends.get("cython", backends["python"])
    if name == "cython" and "cython" not in backends:
        raise RuntimeError("compiled kernels are not available; "
                           "reinstall with a C compiler or use SECJAM_BACKEND=python")
    return backends[name]


def backend_name(module) -> str:
    return "cython" if module.__name__.endswith("._kernels") else "python"
