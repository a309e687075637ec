import pytest

import secjam.verify as verify_mod
from secjam.design import DesignOutcome, Mode, design_rate_max
from secjam.verify import run_checks


def test_all_checks_pass_on_default_seed():
    results = run_checks(seed=0, per_cell=4, subspace_samples=20_000)
    assert [r.name for r in results] == [
        "ratemax-vs-grid", "powermin-vs-grid", "constraint-exactness",
        "subspace-search-bound", "stationarity"]
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]


def test_detects_a_broken_design(monkeypatch):
    # sanity-check the checker: a design that throws away its jamming
    # advantage must be flagged by the grid oracle
    def sabotaged(problem):
        out = design_rate_max(problem)
        return DesignOutcome(mode=out.mode, ps=out.ps, w=out.w, pj=out.pj,
                             secrecy_rate=0.5 * out.secrecy_rate,
                             total_power=out.total_power)

    monkeypatch.setattr(verify_mod, "design_rate_max", sabotaged)
    results = {r.name: r for r in run_checks(seed=0, per_cell=3,
                                             subspace_samples=1_000)}
    assert not results["ratemax-vs-grid"].ok
