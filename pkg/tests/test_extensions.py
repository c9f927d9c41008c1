import math

import numpy as np
import pytest

from lightcone_envelopes import (
    DoubleCone,
    ForwardCone,
    NoTangent,
    PreconditionFailed,
    RealPoint2,
    UnionOf,
    UnsupportedConfiguration,
    contains,
    dhat,
    double_cone_theorem_hull,
    jld_excluded,
    mink_square,
    sample_interior,
    tangent_contact,
    tangent_parameters,
    two_double_cone_extension,
)
from lightcone_envelopes.config import SearchBudget
from lightcone_envelopes.transforms import phi
from lightcone_envelopes.minkowski import ComplexPoint2


def test_tangent_parameters_cases():
    # spacelike vertex: unique solution sinh(u) = 1/2
    us = tangent_parameters(RealPoint2(0, -2), 1.0)
    assert len(us) == 1
    u, contact = tangent_contact(RealPoint2(0, -2), 1.0)
    assert math.sinh(u) == pytest.approx(0.5)
    assert contact.t == pytest.approx(math.sqrt(5) / 2)
    assert contact.x == pytest.approx(0.5)
    # backward vertices have no tangent
    assert tangent_parameters(RealPoint2(-2, 0.5), 1.0) == []
    with pytest.raises(NoTangent):
        tangent_contact(RealPoint2(-2, 0.5), 1.0)
    # forward timelike below the hyperbola: two tangents
    assert len(tangent_parameters(RealPoint2(0.5, 0), 1.0)) == 2
    # forward above the hyperbola: none
    assert tangent_parameters(RealPoint2(2, 0), 1.0) == []
    # lightlike forward: one
    assert len(tangent_parameters(RealPoint2(0.5, 0.5), 1.0)) == 1


def test_tangent_line_touches_cone():
    for v in (RealPoint2(0, -2), RealPoint2(0.3, 1.2), RealPoint2(0.5, 0.5)):
        for u in tangent_parameters(v, 1.0):
            q = RealPoint2(math.cosh(u), math.sinh(u))
            # the line {x | x0 cosh u - x1 sinh u = 1} passes through both
            assert v.t * math.cosh(u) - v.x * math.sinh(u) == pytest.approx(1.0)
            assert q.t * math.cosh(u) - q.x * math.sinh(u) == pytest.approx(1.0)
            assert mink_square(q) == pytest.approx(1.0)


def test_dhat_cases():
    # diamond inside the forward cone: no enlargement
    dh = dhat(RealPoint2(0.5, 0), RealPoint2(1.5, 0), 1.0)
    assert dh.degenerate and dh.case == "inside_forward_cone"
    # both vertices in the closed past: construction degenerates
    dh = dhat(RealPoint2(-2, -0.5), RealPoint2(-0.5, -0.5), 1.0)
    assert dh.degenerate and dh.case == "both_vertices_past"
    # bottom vertex past, top spacelike: single top piece
    dh = dhat(RealPoint2(-2, -1.5), RealPoint2(-0.5, -1.5), 1.0)
    assert not dh.degenerate and dh.case == "top_piece_only"
    # both spacelike: two pieces
    dh = dhat(RealPoint2(0, -3), RealPoint2(1, -3), 1.0)
    assert not dh.degenerate and dh.case == "two_pieces"


def test_dhat_contains_diamond_and_enlarges():
    a, b = RealPoint2(0, -3), RealPoint2(1, -3)
    dh = dhat(a, b, 1.0)
    dc = DoubleCone(a, b)
    pts = sample_interior(dc, 300, seed=1)
    for t, x in pts:
        assert dh.contains(RealPoint2(float(t), float(x)))
    added = 0
    rng = np.random.default_rng(2)
    for _ in range(3000):
        p = RealPoint2(float(rng.uniform(-1, 2.5)), float(rng.uniform(-4, 0)))
        if dh.contains(p) and not contains(dc, p):
            added += 1
    assert added > 0


def test_double_cone_theorem_hull():
    cone = ForwardCone(RealPoint2(0, 0))
    hull = double_cone_theorem_hull(cone, RealPoint2(1, 0), RealPoint2(3, 0))
    assert hull == DoubleCone(RealPoint2(1, 0), RealPoint2(3, 0))
    with pytest.raises(PreconditionFailed):
        double_cone_theorem_hull(cone, RealPoint2(3, 0), RealPoint2(1, 0))
    # points in spacelike-separated parts fail the forward-cone precondition
    u = UnionOf(
        (
            DoubleCone(RealPoint2(0, -5), RealPoint2(1, -5)),
            DoubleCone(RealPoint2(0, 5), RealPoint2(1, 5)),
        )
    )
    with pytest.raises(PreconditionFailed):
        double_cone_theorem_hull(u, RealPoint2(0.5, -5), RealPoint2(0.8, 5))
    # timelike-order pair with no in-region path: detected by the search
    gap = UnionOf(
        (
            DoubleCone(RealPoint2(0, 0), RealPoint2(1, 0)),
            DoubleCone(RealPoint2(5, 0), RealPoint2(6, 0)),
        )
    )
    with pytest.raises(PreconditionFailed):
        double_cone_theorem_hull(gap, RealPoint2(0.5, 0), RealPoint2(5.5, 0))


def test_two_cone_extension_identity_cases():
    dc1 = DoubleCone(RealPoint2(-1, 0), RealPoint2(0, 0))
    res = two_double_cone_extension(dc1, DoubleCone(RealPoint2(0.2, 3), RealPoint2(0.8, 3)))
    assert not res.extended and res.reason == "spacelike-separated"
    res = two_double_cone_extension(dc1, DoubleCone(RealPoint2(1, 0.2), RealPoint2(2, 0.2)))
    assert not res.extended and res.reason == "inside-forward-cone"
    res = two_double_cone_extension(dc1, DoubleCone(RealPoint2(-4, 0.5), RealPoint2(-3, 0.5)))
    assert not res.extended and res.reason == "inside-past-shadow"


def test_two_cone_extension_rejects_lightcone_contact():
    dc1 = DoubleCone(RealPoint2(-1, 0), RealPoint2(0, 0))
    straddling = DoubleCone(RealPoint2(-0.2, 0.5), RealPoint2(0.8, 0.5))
    with pytest.raises(UnsupportedConfiguration):
        two_double_cone_extension(dc1, straddling)


def test_two_cone_extension_generic():
    dc1 = DoubleCone(RealPoint2(-1, 0), RealPoint2(0, 0))
    dc2 = DoubleCone(RealPoint2(0.2, 2), RealPoint2(1.2, 2))
    res = two_double_cone_extension(dc1, dc2)
    assert res.extended
    # the second diamond itself is kept
    for t, x in sample_interior(dc2, 200, seed=3):
        assert res.contains(RealPoint2(float(t), float(x)))
    # the enlargement is nonempty and its points pass the witness search in
    # the inverted configuration (cone + image diamond)
    added = res.sample_added_points(15, seed=4)
    assert len(added) == 15
    img_region = UnionOf(
        (ForwardCone(res.image_apex), DoubleCone(res.image_bottom, res.image_top))
    )
    budget = SearchBudget(psi_grid=32, lam_grid=32)
    for t, x in added:
        w = phi(RealPoint2(float(t), float(x)))
        v = jld_excluded(ComplexPoint2(complex(w.t), complex(w.x)), img_region, budget)
        assert v.is_inside


def test_two_cone_extension_requires_normalized_first_cone():
    with pytest.raises(PreconditionFailed):
        two_double_cone_extension(
            DoubleCone(RealPoint2(-1, 0.5), RealPoint2(0, 0.5)),
            DoubleCone(RealPoint2(0.2, 2), RealPoint2(1.2, 2)),
        )
