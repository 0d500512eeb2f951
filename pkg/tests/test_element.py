import pytest
import dupy as dp
import numpy as np
from sympy import QQ


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


@pytest.fixture()
def quadratic():
    return dp.example_spec('quadratic')


def test_constants(generic):
    assert dp.Element.zero(generic) == 0
    assert not dp.Element.zero(generic)
    assert dp.Element.one(generic) == 1
    assert dp.Element.constant(generic, '1/2') == generic.element(QQ(1, 2))
    assert dp.Element.one(generic).is_scalar()
    assert not generic.t(1).is_scalar()


def test_monomial(generic):
    a = dp.Element.monomial(generic, 1, 2, 1, (3,), coeff=-2)
    assert str(a) == "-2*u*(d*u)^2*d*t1^3"
    assert a.coefficient(1, 2, 1, (3,)) == QQ(-2)
    assert a.coefficient(0, 0, 0) == QQ(0)
    with pytest.raises(ValueError):
        dp.Element.monomial(generic, 0, 0, 0, (1, 1))


def test_weighted_degree(generic, quadratic):
    assert (generic.u * generic.d).weighted_degree() == 2
    # w(u) = w(d) = deg φ
    assert (quadratic.u * quadratic.d).weighted_degree() == 4
    assert quadratic.t(1).weighted_degree() == 1
    assert dp.Element.zero(generic).weighted_degree() is None


def test_power(generic):
    d = generic.d
    assert d**0 == 1
    assert d**3 == d * d * d
    with pytest.raises(ValueError):
        d**-1


def test_commutator_with_t(generic):
    rng = np.random.default_rng(2)
    for _ in range(5):
        a = dp.random_element(generic, 3, 4, rng)
        assert dp.commutator(a, generic.t(1)) == 0


def test_relations_hold(generic):
    u, d, t = generic.u, generic.d, generic.t(1)
    alpha, beta = generic.alpha, generic.beta
    assert d*d*u == (d*u*d).scale(alpha) + (u*d*d).scale(beta) + t*d
    assert d*u*u == (u*d*u).scale(alpha) + (u*u*d).scale(beta) + t*u


def test_json_round_trip(generic):
    a = dp.parse_element("3*u^2*d*t1 - 1/2*(d*u) + 7", generic)
    data = a.to_json()
    assert data[0] == {'u': 0, 'du': 0, 'd': 0, 't': [0], 'coeff': '7'}
    assert dp.Element.from_json(data, generic) == a


def test_json_missing_key(generic):
    with pytest.raises(dp.ParseError):
        dp.Element.from_json([{'u': 1, 'd': 0, 'coeff': '1'}], generic)


@pytest.mark.parametrize(
        "maxdeg,count",
        [(0, 1),
         (1, 4),
         (2, 11)])
def test_pbw_basis_size(generic, maxdeg, count):
    assert len(dp.pbw_basis(generic, maxdeg)) == count
    assert dp.filtration_count(generic, maxdeg) == count


def test_pbw_basis_is_sorted(quadratic):
    basis = dp.pbw_basis(quadratic, 6)
    keys = [mono.sort_key(quadratic) for mono in basis]
    assert keys == sorted(keys)
    assert all(mono.degree(quadratic) <= 6 for mono in basis)


def test_helpers_agree_with_operators(generic):
    a, b = generic.u + generic.t(1), generic.d.scale(2)
    assert dp.elem_add(a, b) == a + b
    assert dp.elem_mul(a, b) == a * b
    assert dp.elem_scale(3, a) == a + a + a
    assert dp.elem_eq(a - a, dp.Element.zero(generic))
