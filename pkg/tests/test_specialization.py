import pytest
import dupy as dp
import numpy as np
from sympy import QQ
from dupy.specialization import _specialized


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


@pytest.fixture()
def localized():
    return dp.localize_spec(dp.example_spec('dependent'))


def test_specialized_spec(generic):
    target = dp.specialized_spec(generic, (2,))
    assert target.n == 0
    assert (target.alpha, target.beta) == (QQ(5), QQ(-6))
    assert target.phi == target.ring(2)
    assert dp.specialized_spec(generic, (2,)) is target
    assert dp.specialized_spec(generic, (QQ(4, 2),)) is target


def test_specialized_specs_are_bounded(generic):
    for k in range(300):
        dp.specialized_spec(generic, (k,))
    info = _specialized.cache_info()
    assert info.currsize <= info.maxsize == 128


def test_specialize_element(generic):
    image, target = dp.specialize(dp.parse_element("t1^2*u - d", generic),
                                  ('1/2',))
    assert image == dp.parse_element("1/4*u - d", target)


def test_specialize_arity(generic):
    with pytest.raises(dp.ArityError):
        dp.specialize(generic.u, (1, 2))


def test_specialize_check():
    spec = dp.example_spec('two-variables')
    assert dp.specialize_check(spec, (2, -1), pairs=10,
                               rng=np.random.default_rng(2))


def test_localized_spec(localized):
    assert localized.n == 0
    assert localized.field.arity == 1
    assert localized.has_roots
    H, K = dp.make_HK(localized)
    assert dp.is_central(H * K)


def test_localize_element(localized):
    spec = dp.example_spec('dependent')
    a = dp.localize(dp.parse_element("t1*u + d", spec))
    assert a == dp.parse_element("t1*u + d", localized)
    assert dp.localize(a, localized) is a


def test_localize_cyclotomic():
    with pytest.raises(dp.UnsupportedError):
        dp.localize_spec(dp.example_spec('equal-roots'))


def test_specialize_localized(localized):
    a = dp.parse_element("u/t1 + t1*d", localized)
    image, target = dp.specialize_localized(a, (3,))
    assert target.phi == target.ring(3)
    assert image == dp.parse_element("1/3*u + 3*d", target)


def test_specialize_localized_pole(localized):
    a = dp.parse_element("u/(t1 - 1)", localized)
    with pytest.raises(dp.DivisionByZeroError):
        dp.specialize_localized(a, (1,))
    with pytest.raises(dp.ArityError):
        dp.specialize_localized(a, (1, 2))
