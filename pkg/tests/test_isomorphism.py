import importlib
from functools import reduce
from math import gcd

import pytest
import dupy as dp
import numpy as np
from hypothesis import given, settings, strategies as st
from sympy import QQ
from dupy.isomorphism import _bezout


Q = dp.Field('rational')
RING = Q.ring(['t1'])
t = RING.gens[0]


def test_module_imports():
    module = importlib.import_module('dupy.isomorphism')
    assert module.affine_equiv is dp.affine_equiv
    assert module.iso_decide is dp.iso_decide


@pytest.mark.parametrize("gaps", [[3], [4, 6], [6, 10, 15], [5, 3, 2]])
def test_bezout(gaps):
    xs = _bezout(gaps)
    assert len(xs) == len(gaps)
    assert all(isinstance(x, int) for x in xs)
    assert sum(x * g for x, g in zip(xs, gaps)) == reduce(gcd, gaps)


@pytest.mark.parametrize(
        "phi1,phi2,expected",
        [(t, t, (1, 1, 0)),
         (t**2, (t + 1)**2, (1, 1, 1)),
         (t**2, 2*t**2, (QQ(1, 2), 1, 0)),
         (t, 2*t + 1, (QQ(1, 2), 1, QQ(1, 2))),
         (RING(3), RING(6), (QQ(1, 2), 1, 0)),
         (RING.zero, RING.zero, (1, 1, 0))])
def test_affine_equiv(phi1, phi2, expected):
    assert dp.affine_equiv(phi1, phi2, Q) == tuple(QQ(x) for x in expected)


@pytest.mark.parametrize(
        "phi1,phi2",
        [(t**2, t**2 + 1),
         (t**2, t**3),
         (t**3, t**3 + t),
         (RING.zero, t),
         (t**4 + t, t**4 + t**2)])
def test_not_affine_equiv(phi1, phi2):
    assert dp.affine_equiv(phi1, phi2, Q) is None


def test_affine_equiv_with_gap():
    phi1, phi2 = t**3 + t, 8*t**3 + 2*t
    eta, a, b = dp.affine_equiv(phi1, phi2, Q)
    assert abs(a) == 2 and b == 0
    assert dp.verify_affine(phi1, phi2, a, b) == eta


def test_affine_equiv_cyclotomic():
    F = dp.Field('cyclotomic', m=4)
    ring = F.ring(['t1'])
    x = ring.gens[0]
    # a⁴ = -1 has no root in ℚ(i), a² = -1 does
    assert dp.affine_equiv(x**4 + 1, x**4 - 1, F) is None
    eta, a, b = dp.affine_equiv(x**2 + 1, x**2 - 1, F)
    assert F.equal(a * a, -F.one)
    assert dp.verify_affine(x**2 + 1, x**2 - 1, a, b) == eta


def test_affine_equiv_arity():
    ring = Q.ring(['t1', 't2'])
    with pytest.raises(dp.ArityError):
        dp.affine_equiv(ring.gens[0], ring.gens[1], Q)


@settings(max_examples=40, deadline=None)
@given(coeffs=st.lists(st.integers(-4, 4), min_size=2, max_size=4)
       .filter(lambda c: c[-1] != 0),
       a=st.sampled_from(dp.rational_grid(3)),
       b=st.sampled_from([QQ(0)] + dp.rational_grid(3)),
       eta=st.sampled_from(dp.rational_grid(3)))
def test_constructed_pairs_are_found(coeffs, a, b, eta):
    phi2 = sum((c * t**k for k, c in enumerate(coeffs)), RING.zero)
    phi1 = dp.poly_substitute_affine(phi2, 1 / a, -b / a) * eta
    found = dp.affine_equiv(phi1, phi2, Q)
    assert found is not None
    assert dp.verify_affine(phi1, phi2, found[1], found[2]) == found[0]


def test_agreement_with_oracle():
    result = dp.affine_agreement_check(count=12, height=2,
                                       rng=np.random.default_rng(6))
    assert result
    assert result.details['equivalent'] >= 6


def test_bruteforce():
    assert dp.affine_equiv_bruteforce(t**2, (t + 1)**2, 2) is not None
    assert dp.affine_equiv_bruteforce(t**2, t**2 + 1, 2) is None


@pytest.mark.parametrize(
        "name1,name2,case,swap",
        [('generic', 'generic', '3a', False),
         ('generic', 'swapped', '3b', False),
         ('generic', 'inverted', '3d', True),
         ('dependent', 'dependent', '4', False),
         ('quadratic', 'shifted-square', '3a', False)])
def test_iso_decide(name1, name2, case, swap):
    spec1, spec2 = dp.example_spec(name1), dp.example_spec(name2)
    witness = dp.iso_decide(spec1, spec2)
    assert witness.case == case
    assert dp.hom_check(witness.images)
    sends_d_to_u = witness.images.d.coefficient(1, 0, 0) != 0
    assert sends_d_to_u == swap


def test_iso_decide_case_3c():
    spec1 = dp.example_spec('generic')
    spec2 = dp.AlgebraSpec.from_roots(1, Q, '1/3', '1/2', 't1')
    witness = dp.iso_decide(spec1, spec2)
    assert witness.case == '3c'
    # d ↦ -η·β₂·u, u ↦ d
    assert witness.images.u == spec2.d
    assert witness.images.d == spec2.u.scale(-(witness.eta * spec2.beta))


def test_iso_decide_shifted_phi():
    spec1 = dp.example_spec('generic')
    spec2 = dp.AlgebraSpec.from_roots(1, Q, 2, 3, '2*t1 + 1')
    witness = dp.iso_decide(spec1, spec2)
    assert witness.case == '3a'
    assert witness.to_json() == {
        'case': '3a', 'eta': '1/2', 'a': '1', 'b': '1/2',
        'images': {'u': 'u', 'd': '1/2*d', 't': ['1/2 + t1']}}


@pytest.mark.parametrize(
        "name1,name2",
        [('quadratic', 'quadratic-plus-one'),
         ('generic', 'dependent'),
         ('generic', 'quadratic'),
         ('generic', 'r-root')])
def test_not_isomorphic(name1, name2):
    assert dp.iso_decide(dp.example_spec(name1),
                         dp.example_spec(name2)) is None


def test_iso_decide_errors():
    generic = dp.example_spec('generic')
    with pytest.raises(dp.ArityError):
        dp.iso_decide(generic, dp.example_spec('two-variables'))
    with pytest.raises(dp.SpecMismatchError):
        dp.iso_decide(generic, dp.example_spec('equal-roots'))
    with pytest.raises(dp.MissingRootsError):
        dp.iso_decide(generic, dp.example_spec('irreducible'))
    power = dp.AlgebraSpec.from_roots(1, Q, 2, 4, 't1')
    with pytest.raises(dp.UndecidedError):
        dp.iso_decide(power, power)
