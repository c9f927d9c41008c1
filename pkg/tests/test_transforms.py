import math

import numpy as np
import pytest

from lightcone_envelopes import (
    ComplexPoint2,
    LightlikeSlope,
    MuCone,
    RealPoint2,
    SingularPoint,
    Wedge,
    check_phi_properties,
    contains,
    line_image,
    mink_square,
    phi,
    psi_phi,
    psi_phi_inverse,
)


def test_phi_examples():
    w = phi(RealPoint2(2, 0))
    assert w == RealPoint2(-0.5, -0.0)
    assert mink_square(w) > 0 and w.t < 0  # backward timelike
    assert phi(RealPoint2(-0.5, 0)) == RealPoint2(2, -0.0)
    # diamond vertex example: (-0.5, 0) in D_{(-1,0),0} maps into (1,0)+V+
    img = phi(RealPoint2(-0.5, 0))
    q = img - RealPoint2(1, 0)
    assert mink_square(q) > 0 and q.t > 0


def test_phi_involution_complex():
    z = ComplexPoint2(complex(1.3, 0.2), complex(0.4, -0.1))
    back = phi(phi(z))
    assert abs(back.t - z.t) + abs(back.x - z.x) < 1e-12


def test_phi_singular_guard():
    with pytest.raises(SingularPoint):
        phi(RealPoint2(1, 1))
    with pytest.raises(SingularPoint):
        phi(ComplexPoint2(0j, 0j))


def test_phi_preserves_spacelike():
    w = phi(RealPoint2(0, 1))
    assert mink_square(w) < 0


def test_psi_phi_example_and_inverse():
    z = psi_phi(RealPoint2(2, 0), 1.0)
    assert z.t == pytest.approx(0.0, abs=1e-15)
    assert z.x == pytest.approx(2.0)
    assert contains(Wedge(RealPoint2(0, 1)), z)
    rng = np.random.default_rng(1)
    for _ in range(300):
        x = ComplexPoint2(
            complex(rng.normal(), rng.normal()), complex(rng.normal(), rng.normal())
        )
        try:
            back = psi_phi_inverse(psi_phi(x, 1.0), 1.0)
        except SingularPoint:
            continue
        err = abs(back.t - x.t) + abs(back.x - x.x)
        assert err <= 1e-10 * (1 + x.norm())


def test_psi_phi_real_to_real():
    z = psi_phi(ComplexPoint2(complex(2.0), complex(0.3)), 1.0)
    assert z.im.norm() == 0.0


def test_psi_phi_cone_wedge_correspondence():
    mu = 1.0
    wedge = Wedge(RealPoint2(0, mu))
    cone = MuCone(0.0, RealPoint2(mu, 0))
    rng = np.random.default_rng(2)
    for _ in range(300):
        th = rng.uniform(-2, 2)
        m = rng.uniform(0.01, 4)
        x = RealPoint2(mu + m * math.cosh(th), m * math.sinh(th))
        assert contains(wedge, psi_phi(x, mu))
        r = rng.uniform(0.01, 4)
        z = RealPoint2(r * math.sinh(th), mu + r * math.cosh(th))
        assert contains(cone, psi_phi_inverse(z, mu))


def test_line_image_examples():
    hp = line_image(0.0, 2.0, 1.0)
    assert hp.center == RealPoint2(1.0, 2.0)
    assert hp.lam == 1.0
    assert hp.center.t == hp.center.x - 1.0
    assert line_image(2.0, 1.0, 1.0).lam < 0  # |slope| > 1
    assert line_image(0.5, 1.0, 1.0).lam > 0  # |slope| < 1
    with pytest.raises(LightlikeSlope):
        line_image(1.0, 0.0, 1.0)


def test_line_image_matches_mapped_points():
    sigma, c, mu = 0.3, 2.0, 1.0
    hp = line_image(sigma, c, mu)
    for x1 in np.linspace(-3, 3, 21):
        x = RealPoint2(sigma * x1 + c, float(x1))
        try:
            z = psi_phi(x, mu)
        except SingularPoint:
            continue
        lhs = (z.t - hp.center.t) ** 2 - (z.x - hp.center.x) ** 2
        assert abs(lhs - hp.lam) < 1e-10 * (1 + abs(hp.lam))


def test_check_phi_properties_small():
    rep = check_phi_properties(2000, seed=0)
    assert rep.passed
    assert rep.involution_dev <= 1e-9
