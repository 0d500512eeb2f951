import pytest
import dupy as dp
from hypothesis import given, strategies as st
from sympy import QQ


@pytest.fixture()
def Q():
    return dp.Field('rational')


@pytest.fixture()
def Q6():
    return dp.Field('cyclotomic', m=6)


def test_field_identity():
    assert dp.Field('cyclotomic', m=4) == dp.Field('cyclotomic', m=4)
    assert dp.Field('cyclotomic', m=4) != dp.Field('cyclotomic', m=6)
    with pytest.raises(ValueError):
        dp.Field('real')


@pytest.mark.parametrize(
        "text,formatted",
        [("1/2", "1/2"),
         ("-3", "-3"),
         ("4/6", "2/3"),
         ("0", "0")])
def test_rational_format(Q, text, formatted):
    assert Q.format(Q(text)) == formatted


def test_floats_are_rejected(Q):
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Q(True)


def test_cyclotomic_arithmetic(Q6):
    zeta = Q6.zeta
    assert Q6.is_one(Q6.pow(zeta, 6))
    assert not Q6.is_one(Q6.pow(zeta, 3))
    # Φ₆ = x² - x + 1
    assert Q6.equal(zeta * zeta, zeta - Q6.one)
    assert Q6.equal(Q6.parse("zeta^2"), zeta - 1)
    assert Q6.equal(Q6.inv(zeta), Q6.pow(zeta, 5))


def test_cyclotomic_format_reparses(Q6):
    value = Q6.parse("1/2 - 3*zeta")
    text = Q6.format(value)
    assert Q6.equal(Q6.parse(text), value)


def test_division_by_zero(Q):
    with pytest.raises(dp.DivisionByZeroError):
        Q.inv(Q.zero)


@pytest.mark.parametrize(
        "value,order",
        [("1", 1),
         ("-1", 2),
         ("2", None),
         ("1/3", None)])
def test_root_of_unity_order_rational(Q, value, order):
    assert dp.root_of_unity_order(Q(value), Q) == order


@pytest.mark.parametrize(
        "value,order",
        [("zeta", 6),
         ("zeta^2", 3),
         ("zeta^3", 2),
         ("1 + zeta", None)])
def test_root_of_unity_order_cyclotomic(Q6, value, order):
    assert dp.root_of_unity_order(Q6.parse(value), Q6) == order


def test_root_of_unity_order_zero(Q):
    with pytest.raises(dp.PreconditionError):
        dp.root_of_unity_order(Q.zero, Q)


@pytest.mark.parametrize(
        "r,s,relation",
        [("2", "1/2", (1, 1)),
         ("2", "4", (2, -1)),
         ("2", "3", None),
         ("-1", "3", (2, 0)),
         ("2", "-2", (2, -2)),
         ("6", "12", None)])
def test_mult_dependence(Q, r, s, relation):
    assert dp.mult_dependence(Q(r), Q(s), Q) == relation


def test_mult_dependence_roots_of_unity(Q6):
    zeta = Q6.zeta
    i, j = dp.mult_dependence(Q6.pow(zeta, 2), Q6.pow(zeta, 4), Q6)
    assert (i, j) != (0, 0)
    value = Q6.pow(Q6.pow(zeta, 2), i) * Q6.pow(Q6.pow(zeta, 4), j)
    assert Q6.is_one(value)


def test_mult_dependence_unsupported():
    Q4 = dp.Field('cyclotomic', m=4)
    with pytest.raises(dp.UnsupportedError):
        dp.mult_dependence(Q4.parse("1 + zeta"), Q4(2), Q4)


def test_quadratic_roots(Q):
    r, s = dp.quadratic_roots(Q, Q(5), Q(-6))
    assert (r, s) == (QQ(3), QQ(2))
    r, s = dp.quadratic_roots(Q, Q(2), Q(-1))
    assert r == s == QQ(1)
    assert dp.quadratic_roots(Q, Q(1), Q(1)) is None


def test_quadratic_roots_cyclotomic(Q6):
    # x² - x + 1 splits over ℚ(ζ₆)
    r, s = dp.quadratic_roots(Q6, Q6.one, -Q6.one)
    assert Q6.equal(r + s, Q6.one)
    assert Q6.equal(r * s, Q6.one)


def test_polynomial_roots(Q):
    # (x - 1)(x + 2)(x² + 1)
    coeffs = [Q(c) for c in (1, 1, -1, 1, -2)]
    assert dp.polynomial_roots(coeffs, Q) == [QQ(-2), QQ(1)]


def test_rational_grid():
    grid = dp.rational_grid(2)
    assert grid == sorted(grid)
    assert QQ(0) not in grid
    assert set(grid) == {QQ(-2), QQ(-1), QQ(-1, 2), QQ(1, 2), QQ(1), QQ(2)}


def test_parse_polynomial(Q):
    ring = Q.ring(['t1', 't2'])
    p = dp.parse_polynomial("(t1 + 1)^2 - t1*t2/2", ring, Q)
    t1, t2 = ring.gens
    assert p == t1**2 + 2*t1 + 1 - QQ(1, 2)*t1*t2
    assert dp.parse_polynomial(dp.format_poly(p, Q), ring, Q) == p


@pytest.mark.parametrize("text", ["t3", "t1 + 0.5", "x**", "sin(t1)"])
def test_parse_polynomial_errors(Q, text):
    ring = Q.ring(['t1', 't2'])
    with pytest.raises(dp.ParseError):
        dp.parse_polynomial(text, ring, Q)


@given(coeffs=st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       a=st.integers(-3, 3).filter(bool),
       b=st.integers(-3, 3),
       x=st.integers(-4, 4))
def test_substitute_affine_evaluates(coeffs, a, b, x):
    Q = dp.Field('rational')
    ring = Q.ring(['t1'])
    t = ring.gens[0]
    p = sum((c * t**k for k, c in enumerate(coeffs)), ring.zero)
    moved = dp.poly_substitute_affine(p, QQ(a), QQ(b))
    assert moved(x) == p(a * x + b)


def test_substitute_affine_needs_nonzero_a(Q):
    ring = Q.ring(['t1'])
    with pytest.raises(dp.PreconditionError):
        dp.poly_substitute_affine(ring.gens[0], QQ(0), QQ(1))
