import pytest
import dupy as dp
import numpy as np


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


@pytest.fixture()
def sigma(generic):
    return dp.sigma_of(generic)


def z(sigma, k=1):
    return dp.SkewLaurentElem.from_poly(sigma, sigma.ring.one, k)


def test_sigma_images(sigma, generic):
    x, y = sigma.x, sigma.y
    t = sigma.ring.gens[2]
    assert sigma(x) == y
    # y ↦ βx + αy + φ
    assert sigma(y) == x * generic.beta + y * generic.alpha + t
    assert sigma(t) == t
    assert sigma.inverse_check()


def test_sigma_inverse(sigma):
    x, y = sigma.x, sigma.y
    assert sigma(y, -1) == x
    assert sigma(sigma(x * y + 1, 3), -3) == x * y + 1


def test_sigma_not_invertible():
    sigma = dp.sigma_of(dp.example_spec('zero-divisor'))
    assert not sigma.invertible
    with pytest.raises(dp.PreconditionError):
        sigma(sigma.x, -1)


def test_unknown_reading(generic):
    with pytest.raises(ValueError):
        dp.SigmaAut(generic, 'transposed')


def test_commutation_rule(sigma):
    x = dp.SkewLaurentElem.from_poly(sigma, sigma.x)
    # r·z = z·σ(r)
    assert x * z(sigma) == dp.SkewLaurentElem.from_poly(sigma, sigma.y, 1)
    assert z(sigma) * z(sigma, -1) == dp.SkewLaurentElem.one(sigma)
    assert z(sigma, -1) * z(sigma) == dp.SkewLaurentElem.one(sigma)


def test_theta_generators(generic, sigma):
    u, d = generic.u, generic.d
    assert dp.theta(d) == z(sigma, -1)
    assert dp.theta(u * d) == dp.SkewLaurentElem.from_poly(sigma, sigma.x)
    assert dp.theta(d * u) == dp.SkewLaurentElem.from_poly(sigma, sigma.y)
    t = sigma.ring.gens[2]
    assert dp.theta(generic.t(1)) == dp.SkewLaurentElem.from_poly(sigma, t)


def test_theta_multiplicative(generic):
    rng = np.random.default_rng(7)
    for _ in range(10):
        a = dp.random_element(generic, 3, 3, rng)
        b = dp.random_element(generic, 3, 3, rng)
        assert dp.theta(a * b) == dp.theta(a) * dp.theta(b)


def test_theta_check(generic):
    result = dp.theta_check(generic, maxdeg=3, pairs=10,
                            rng=np.random.default_rng(1))
    assert result
    assert result.details['rank'] == result.details['size']


def test_theta_needs_beta():
    spec = dp.example_spec('zero-divisor')
    with pytest.raises(dp.PreconditionError):
        dp.theta(spec.u)
    with pytest.raises(dp.PreconditionError):
        dp.theta_check(spec, 2, 1)


@pytest.mark.parametrize("name", ['generic', 'quadratic', 'two-variables'])
def test_image_formula(name):
    assert dp.image_formula_check(dp.example_spec(name), 4)


def test_sigma_reading(generic):
    result = dp.sigma_reading_check(generic)
    assert result
    assert result.details['consistent'] is True
    assert result.details['as_printed'] is False


def test_json_round_trip(generic, sigma):
    p = dp.theta(dp.parse_element("u^2*d + 3*t1*d^2", generic))
    assert dp.SkewLaurentElem.from_json(p.to_json(), sigma) == p
    with pytest.raises(dp.ParseError):
        dp.SkewLaurentElem.from_json([{'z': 1}], sigma)


def test_mixed_rings(generic):
    other = dp.sigma_of(dp.example_spec('swapped'))
    with pytest.raises(dp.SpecMismatchError):
        z(dp.sigma_of(generic)) * z(other)
