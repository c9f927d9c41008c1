import math

import numpy as np
import pytest

from lightcone_envelopes import (
    BadGeometry,
    ComplexPoint2,
    Contour,
    RealPoint2,
    SpacelikeComplementOfDoubleCone,
    TargetTooClose,
    build_hyperbola_family,
    cauchy_continue,
    contains,
    continue_along_family,
    default_test_functions,
    max_principle_check,
)
from lightcone_envelopes.continuation import dist_to_spacelike_complement

S = RealPoint2(1, 0)
P = RealPoint2(-0.05, 1.0)
SLOPE = -0.8


def make_family(scale=0.05):
    return build_hyperbola_family(P, SLOPE, S, 1.0, scale=scale)


# ---------------------------------------------------------------------------
# contour quadrature
# ---------------------------------------------------------------------------


def test_cauchy_constant_and_identity():
    w = Contour.ellipse(0.0, 1.0, 1.0, 128)
    val, err = cauchy_continue(np.full(128, 3.0 - 2.0j), w, 0.1 + 0.2j)
    assert abs(val - (3.0 - 2.0j)) < 1e-12
    val, err = cauchy_continue(w.nodes.copy(), w, 0.2 + 0.1j)
    assert abs(val - (0.2 + 0.1j)) < 1e-12


def test_cauchy_rational_example():
    w = Contour.ellipse(0.0, 1.0, 1.0, 256)
    val, err = cauchy_continue(1.0 / (w.nodes - 5.0), w, 0.2)
    assert abs(val - 1.0 / (0.2 - 5.0)) < 1e-8
    assert val == pytest.approx(-0.2083333333, abs=1e-8)


def test_cauchy_target_too_close():
    w = Contour.ellipse(0.0, 1.0, 1.0, 64)
    with pytest.raises(TargetTooClose):
        cauchy_continue(np.ones(64), w, 0.999)


def test_cauchy_node_doubling_reduces_error():
    errs = {}
    for n in (256, 512):
        w = Contour.ellipse(0.0, 1.0, 1.0, n)
        val, _ = cauchy_continue(1.0 / (w.nodes - 1.06), w, 0.2)
        errs[n] = abs(val - 1.0 / (0.2 - 1.06))
    assert errs[256] <= 1e-6
    assert errs[512] <= errs[256] / 4.0


# ---------------------------------------------------------------------------
# curve family construction
# ---------------------------------------------------------------------------


def test_family_build_and_windows():
    fam = make_family()
    lo, hi = fam.bad_window
    assert lo < hi
    comp = SpacelikeComplementOfDoubleCone(RealPoint2(0, 0), S)
    # bad window genuinely leaves the complement, tails return to it
    mid = 0.5 * (lo + hi)
    assert not contains(comp, fam.point(mid))
    assert contains(comp, fam.point(lo - 1.0))
    assert contains(comp, fam.point(hi + 1.0))


def test_family_rejects_bad_slopes():
    with pytest.raises(BadGeometry):
        build_hyperbola_family(P, 1.0, S, 1.0)
    with pytest.raises(BadGeometry):
        build_hyperbola_family(P, -1.2, S, 1.0)
    with pytest.raises(BadGeometry):
        build_hyperbola_family(RealPoint2(2.0, 0.5), SLOPE, S, 1.0)  # not spacelike


def test_family_rejects_tangents_missing_the_cone():
    # a line with positive slope through the right wedge never meets the
    # mass-1 cone, and neither do the sweeping tangents near it
    with pytest.raises(BadGeometry):
        build_hyperbola_family(RealPoint2(0.5, 1.0), 0.5, S, 1.0)


def test_shift_moves_branch_into_complement():
    fam = make_family()
    comp = SpacelikeComplementOfDoubleCone(RealPoint2(0, 0), S)
    alpha = fam.alpha_star * 1.01
    for t in np.linspace(-6, 6, 301):
        assert contains(comp, fam.point(float(t), alpha))


def test_alpha_star_is_max_distance():
    fam = make_family()
    worst = max(
        dist_to_spacelike_complement(fam.point(float(t)), S)
        for t in np.linspace(-8, 8, 801)
    )
    assert fam.alpha_star == pytest.approx(worst)


def test_derivative_never_vanishes_on_strip():
    fam = make_family()
    for t in np.linspace(-4, 4, 41):
        for tau in (-0.4, -0.1, 0.1, 0.4):
            w = complex(t, tau)
            h = 1e-6
            d = fam.point_complex(w + h)
            base = fam.point_complex(w)
            dv = abs(d.t - base.t) + abs(d.x - base.x)
            assert dv / h > 1e-3


def test_imag_part_points_along_tangent():
    # Im h(t + i tau) = tau * K'(t) + O(tau^2)
    fam = make_family()
    for t in (-2.0, 0.0, 0.5):
        tangent = fam.tangent(t)
        errs = []
        for tau in (1e-3, 1e-4):
            z = fam.point_complex(complex(t, tau))
            im = z.im
            errs.append(
                math.hypot(im.t / tau - tangent.t, im.x / tau - tangent.x)
            )
        assert errs[0] <= 1e-2 * max(1.0, tangent.norm())
        assert errs[1] <= errs[0] / 5.0  # first-order error shrinks with tau


# ---------------------------------------------------------------------------
# continuation along the family
# ---------------------------------------------------------------------------


def test_continuation_matches_direct_values():
    fam = make_family()
    funcs = dict(default_test_functions(1.0))
    res = continue_along_family(funcs["rational_far_pole"], fam, [0.0, 0.5, 1.0])
    assert res.max_deviation <= 1e-6
    res = continue_along_family(funcs["poly3"], fam, [0.0])
    assert res.max_deviation <= 1e-10
    res = continue_along_family(funcs["rational_excluded_pole"], fam, [0.0, 1.0])
    assert res.max_deviation <= 1e-6


def test_continuation_error_estimates_cover_deviation():
    fam = make_family()
    funcs = dict(default_test_functions(1.0))
    res = continue_along_family(funcs["poly5"], fam, [0.0])
    sl = res.slices[0]
    assert np.all(np.abs(sl.values - sl.direct) <= np.maximum(sl.err_estimates, 1e-9))


# ---------------------------------------------------------------------------
# maximum principle
# ---------------------------------------------------------------------------


def quad_patch(lam):
    return ComplexPoint2(0.3 + lam + 0.1 * lam * lam, -0.2 + (1 - 0.4j) * lam)


def test_max_principle_holomorphic_pass():
    rep = max_principle_check(quad_patch, lambda z: z.t**3 - z.x, 0.2)
    assert rep.passed
    rep = max_principle_check(quad_patch, lambda z: 1.0 / (z.t - 8.0), 0.2)
    assert rep.passed


def test_max_principle_control_can_fail():
    center = quad_patch(0.5 + 0j)

    def bump(z):
        return math.exp(-abs(z.t - center.t) ** 2 - abs(z.x - center.x) ** 2)

    rep = max_principle_check(quad_patch, bump, 0.2)
    assert not rep.passed  # reported, not raised
