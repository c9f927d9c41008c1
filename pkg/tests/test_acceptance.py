"""Acceptance suite: every release criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).
All checks are dual-route: a closed form or detector against an
independent oracle (witness search, constrained extremization over the
full parameter box, interior sampling, exact identities).
"""

import math
import time

from lightcone_envelopes.oracles import (
    cauchy_suite,
    inversion_suite,
    massgap_suite,
    max_principle_suite,
    mu_cone_plane_agreement,
    pflug_suite,
    shell_boundary_vs_minimization,
    shell_complement_consistency,
    spacelike_complement_oracle,
)


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


def test_criterion_1_inversion_properties():
    t0 = time.perf_counter()
    rep = inversion_suite(n=100000, seed=0)
    dt = time.perf_counter() - t0
    ok = (
        rep.max_dev <= 1e-9
        and rep.violations == 0
        and rep.details["diamond_violations"] == 0
        and dt < 5.0
    )
    _report(
        "inversion suite (1e5 samples, both diamond directions 1e4+)",
        ok,
        f"involution dev {rep.max_dev:.2e}, viol {rep.violations}, {dt:.2f}s (<5s)",
    )
    assert rep.max_dev <= 1e-9
    assert rep.violations == 0
    assert dt < 5.0


def test_criterion_2_mu_cone_oracle_agreement():
    t0 = time.perf_counter()
    rep = mu_cone_plane_agreement(n=1000, seed=7, mu=1.0, band=1e-3)
    dt = time.perf_counter() - t0
    ok = rep.details["agreement"] >= 0.999 and rep.violations == 0 and dt < 30.0
    _report(
        "cone closed form vs plane-witness search (1e3 spacelike-Im points)",
        ok,
        f"agreement {rep.details['agreement']:.4f}, out-of-band {rep.violations}, "
        f"{dt:.2f}s (<30s)",
    )
    assert rep.details["agreement"] >= 0.999
    assert rep.violations == 0
    assert dt < 30.0


def test_criterion_3_shell_boundary_vs_full_box_minimization():
    t0 = time.perf_counter()
    rep = shell_boundary_vs_minimization(grid_n=50, m1=1.0, m2=3.0)
    dt = time.perf_counter() - t0
    ok = rep.max_dev <= 1e-6 and dt < 60.0
    _report(
        "shell boundary curves vs (lambda, alpha)-box extremization (50x50 grid)",
        ok,
        f"max |closed - oracle| {rep.max_dev:.2e} (<=1e-6), {dt:.2f}s (<60s)",
    )
    assert rep.max_dev <= 1e-6
    assert dt < 60.0


def test_criterion_4_shell_complement_consistency():
    rep = shell_complement_consistency(m=1.0, grid_n=200, n=10000, seed=3)
    d = rep.details
    ok = rep.violations == 0
    _report(
        "shell-complement: real trace 200x200, cone/thickened compat 1e4, "
        "inversion equivalence 1e4",
        ok,
        f"violations: trace {d['real_trace_violations']}, "
        f"compat {d['cone_compatibility_violations']}/{d['cone_compatibility_tested']}, "
        f"transform {d['transform_violations']}",
    )
    assert d["real_trace_violations"] == 0
    assert d["cone_compatibility_violations"] == 0
    assert d["transform_violations"] == 0


def test_criterion_5_cauchy_quadrature():
    t0 = time.perf_counter()
    rep = cauchy_suite(nodes=256)
    dt = time.perf_counter() - t0
    d = rep.details
    ok = (
        d["err_nodes"] <= 1e-6
        and d["err_doubled"] <= d["err_nodes"] / 4.0
        and dt < 10.0
    )
    _report(
        "Cauchy kernel: rational suite at 256 nodes + doubling",
        ok,
        f"err {d['err_nodes']:.2e} (<=1e-6), doubled {d['err_doubled']:.2e} "
        f"(reduction {d['reduction']:.1f}x >= 4x), {dt:.2f}s (<10s)",
    )
    assert d["err_nodes"] <= 1e-6
    assert d["err_doubled"] <= d["err_nodes"] / 4.0
    assert dt < 10.0


def test_criterion_6_maximum_principle():
    rep = max_principle_suite(nfuncs=50, npatches=20, seed=13)
    ok = rep.violations == 0
    _report(
        "maximum principle: 50 holomorphic functions x 20 disc patches",
        ok,
        f"violations {rep.violations}, worst interior-boundary gap {rep.max_dev:.2e} "
        f"(<=1e-9), control violated: {rep.details['control_violated_as_expected']}",
    )
    assert rep.violations == 0
    assert rep.max_dev <= 1e-9


def test_criterion_7_growth_sandwich():
    rep = pflug_suite(n=10000, seed=5)
    ok = rep.violations == 0 and rep.max_dev <= 1e-12
    _report(
        "growth-scale sandwich delta^2 <= delta~ <= delta (1e4 samples)",
        ok,
        f"violations {rep.violations}, worst slack {-rep.max_dev:.2e} (>= -1e-12)",
    )
    assert rep.violations == 0
    assert rep.max_dev <= 1e-12


def test_criterion_8_spacelike_complement_oracle():
    rep = spacelike_complement_oracle(n=10000, seed=11, interior_samples=1000)
    ok = rep.violations == 0
    _report(
        "spacelike-complement closed form vs interior-sampling oracle (1e4 points)",
        ok,
        f"out-of-band disagreements {rep.violations} "
        f"(worst boundary distance {rep.max_dev:.2e})",
    )
    assert rep.violations == 0


def test_criterion_9_massgap_detector():
    t0 = time.perf_counter()
    rep = massgap_suite(seed=17, trials=20)
    dt = time.perf_counter() - t0
    ok = (
        rep.violations == 0
        and rep.max_dev <= 1e-9
        and rep.details["unbounded_band_refused"]
        and dt < 1.0
    )
    _report(
        "mass-gap detector: closed-form witness, unbounded-band refusal, "
        "20 random bands",
        ok,
        f"closed-form dev {rep.max_dev:.2e} (<=1e-9), violations {rep.violations}, "
        f"{dt:.2f}s (<1s)",
    )
    assert rep.violations == 0
    assert rep.max_dev <= 1e-9
    assert rep.details["unbounded_band_refused"]
    assert dt < 1.0
    _ = math  # keep math import for interactive tweaking
