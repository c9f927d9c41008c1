import math

import pytest
from hypothesis import given, strategies as st

from lightcone_envelopes import (
    CausalClass,
    ComplexPoint2,
    NotSpacelike,
    RealPoint2,
    RealPoint4,
    classify,
    hat_dual,
    mink_dot,
    mink_square,
    reduce_rotational,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


def test_mink_dot_examples():
    assert mink_dot(RealPoint2(1, 0), RealPoint2(1, 0)) == 1
    assert mink_dot(RealPoint2(1, 1), RealPoint2(1, 1)) == 0
    assert mink_dot(RealPoint2(3, 1), RealPoint2(2, 2)) == 4


def test_mink_dot_complex_is_bilinear():
    z = ComplexPoint2(1 + 2j, 3 - 1j)
    assert mink_square(z) == (1 + 2j) ** 2 - (3 - 1j) ** 2


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        RealPoint2(math.nan, 0.0)
    with pytest.raises(ValueError):
        ComplexPoint2(complex(math.inf, 0), 0j)


def test_complex_reconstruction_exact():
    re = RealPoint2(1.25, -0.5)
    im = RealPoint2(0.125, 3.0)
    z = ComplexPoint2.from_parts(re, im)
    assert z.re == re and z.im == im


def test_hat_dual_examples():
    assert hat_dual(RealPoint2(0, 1)) == RealPoint2(1, 0)
    assert hat_dual(RealPoint2(0, -2)) == RealPoint2(1, 0)
    yh = hat_dual(RealPoint2(1, 2))
    assert yh.t == pytest.approx(1.1547005383792517, abs=1e-12)
    assert yh.x == pytest.approx(0.5773502691896258, abs=1e-12)


def test_hat_dual_rejects_non_spacelike():
    with pytest.raises(NotSpacelike):
        hat_dual(RealPoint2(2, 1))
    with pytest.raises(NotSpacelike):
        hat_dual(RealPoint2(1, 1))


@given(finite, finite)
def test_hat_dual_defining_properties(t, x):
    y = RealPoint2(t, x)
    if mink_square(y) >= -1e-6:
        return
    yh = hat_dual(y)
    scale = max(1.0, y.norm())
    assert abs(mink_square(yh) - 1.0) <= 1e-9
    assert abs(mink_dot(y, yh)) <= 1e-9 * scale
    assert classify(yh) is CausalClass.TIMELIKE_FORWARD


@given(finite, finite, finite, finite, finite, finite)
def test_mink_dot_symmetric_bilinear(a0, a1, b0, b1, c0, c1):
    a, b, c = RealPoint2(a0, a1), RealPoint2(b0, b1), RealPoint2(c0, c1)
    scale = max(1.0, a.norm() * b.norm(), a.norm() * c.norm())
    assert abs(mink_dot(a, b) - mink_dot(b, a)) <= 1e-12 * scale
    lhs = mink_dot(a, b + c)
    rhs = mink_dot(a, b) + mink_dot(a, c)
    assert abs(lhs - rhs) <= 1e-9 * scale


def test_classify_examples():
    assert classify(RealPoint2(2, 1)) is CausalClass.TIMELIKE_FORWARD
    assert classify(RealPoint2(0, 1)) is CausalClass.SPACELIKE
    assert classify(RealPoint2(-1, 1)) is CausalClass.LIGHTLIKE_BACKWARD
    assert classify(RealPoint2(-2, 1)) is CausalClass.TIMELIKE_BACKWARD
    assert classify(RealPoint2(1, 1)) is CausalClass.LIGHTLIKE_FORWARD
    assert classify(RealPoint2(0, 0)) is CausalClass.ZERO
    assert classify(RealPoint2(1e-12, -1e-12)) is CausalClass.ZERO


def test_reduce_rotational_examples():
    assert reduce_rotational(RealPoint4(1, 0, 0, 0)) == RealPoint2(1, 0)
    assert reduce_rotational(RealPoint4(2, 3, 0, 4)) == RealPoint2(2, 5)
    assert reduce_rotational(RealPoint4(0, 1, 2, 2)) == RealPoint2(0, 3)


@given(finite, finite, finite, finite)
def test_reduce_preserves_square(t, s1, s2, s3):
    p = RealPoint4(t, s1, s2, s3)
    sq4 = t * t - (s1 * s1 + s2 * s2 + s3 * s3)
    sq2 = mink_square(reduce_rotational(p))
    scale = max(1.0, t * t + s1 * s1 + s2 * s2 + s3 * s3)
    assert abs(sq4 - sq2) <= 1e-12 * scale
