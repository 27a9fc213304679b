from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from costar.scalar import (
    AlgebraMismatchError,
    GaussianRational,
    I,
    LambdaSeries,
    PoleError,
    RadialRational,
    UPoly,
    scalar_text,
)

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=6)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(lambda c: not c.is_zero())


def test_gaussian_basics():
    assert (GaussianRational(1, 1) * GaussianRational(1, -1)) == 2
    assert I * I == -1
    assert GaussianRational(Fraction(1, 2)) + GaussianRational(Fraction(1, 3)) == Fraction(5, 6)
    assert (GaussianRational(3, 4) / GaussianRational(3, 4)) == 1
    assert GaussianRational(2) ** -2 == Fraction(1, 4)
    assert (I ** 3) == GaussianRational(0, -1)


def test_gaussian_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(nonzero_gaussians)
def test_gaussian_multiplicative_inverse(a):
    assert a * (GaussianRational(1) / a) == 1
    assert a * a.conjugate() == GaussianRational(a.re * a.re + a.im * a.im)


def test_scalar_text_forms():
    assert scalar_text(GaussianRational(Fraction(-1, 2))) == "-1/2"
    assert scalar_text(I) == "I"
    assert scalar_text(-I) == "-I"
    assert scalar_text(GaussianRational(Fraction(1, 2), 3)) == "(1/2 + 3*I)"
    assert scalar_text(GaussianRational(1, -1)) == "(1 - I)"


def test_upoly_divmod_and_gcd():
    u = UPoly.u()
    p = (u - 2) * (u + 2)
    q, r = p.divmod(u - 2)
    assert q == u + 2 and r.is_zero()
    assert p.gcd(u - 2) == (u - 2).monic()
    assert (u ** 3).lcm(u ** 2 * (u + 1)) == u ** 3 * (u + 1)


def test_radial_rational_canonical_form():
    u = UPoly.u()
    r = RadialRational(u * u - 4, u - 2)
    assert r.num == u + 2 and r.den == UPoly.of(1)
    assert r.eval(2) == 4
    # denominator is normalized monic, numerator absorbs the unit
    s = RadialRational(UPoly.of(1), u.scale(2))
    assert s.den == u and s.num == UPoly.of(Fraction(1, 2))


def test_radial_rational_eval_and_poles():
    r = RadialRational(UPoly.of(1), UPoly.u())
    assert r.eval(1) == 1
    with pytest.raises(PoleError, match="u = 0"):
        r.eval(0)
    with pytest.raises(ZeroDivisionError):
        RadialRational(UPoly.of(1), UPoly())


def test_radial_rational_derivative():
    u = UPoly.u()
    r = RadialRational(UPoly.of(1), u)
    assert r.derivative() == RadialRational(UPoly.of(-1), u * u)
    assert RadialRational(u ** 2).derivative() == RadialRational(u.scale(2))


upolys = st.builds(
    lambda cs: UPoly(cs),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=0, max_size=3),
)
nonzero_upolys = upolys.filter(lambda p: not p.is_zero())


@given(upolys, nonzero_upolys, nonzero_upolys)
def test_radial_rational_canonical_uniqueness(n, d, g):
    assert RadialRational(n * g, d * g) == RadialRational(n, d)


@given(upolys, nonzero_upolys, upolys, nonzero_upolys)
def test_radial_rational_field_ops_pointwise(n1, d1, n2, d2):
    f = RadialRational(n1, d1)
    g = RadialRational(n2, d2)
    x = GaussianRational(5)
    try:
        fx, gx = f.eval(x), g.eval(x)
        sx, px = (f + g).eval(x), (f * g).eval(x)
    except PoleError:
        return
    assert sx == fx + gx
    assert px == fx * gx


def test_lambda_series_ring():
    one = GaussianRational(1)
    a = LambdaSeries((one, one, one - one))          # 1 + lambda
    b = LambdaSeries((one, -one, one - one))         # 1 - lambda
    assert (a * b).coeffs == (one, one - one, -one)  # 1 - lambda^2
    unit = LambdaSeries.constant(one, 2)
    assert unit * a == a


def test_lambda_series_truncation_to_min_order():
    one = GaussianRational(1)
    a = LambdaSeries.constant(one, 3)
    b = LambdaSeries.constant(one, 2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert a.truncated(1).order == 1


def test_lambda_series_mismatched_algebras():
    a = LambdaSeries.constant(GaussianRational(1), 2)
    b = LambdaSeries.constant(RadialRational.of(1), 2)
    with pytest.raises(AlgebraMismatchError):
        a + b


series3 = st.builds(
    lambda cs: LambdaSeries(tuple(GaussianRational(c) for c in cs)),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
)


@given(series3, series3, series3)
def test_lambda_series_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
