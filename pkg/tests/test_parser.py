import pytest
import dupy as dp
import numpy as np
from hypothesis import given, settings, strategies as st


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


def test_tokenize():
    tokens = list(dp.tokenize("2*u^3 + t1"))
    assert [tok.kind for tok in tokens] == ['nat', 'op', 'name', 'op', 'nat',
                                             'op', 'name']
    assert tokens[-1].text == 't1'
    assert tokens[-1].position == 8


def test_tree(generic):
    tree = dp.parse_expr("u + d - t1 + 2", generic)
    assert tree.kind == 'sum'
    assert len(tree.children) == 4
    assert tree.children[2].kind == 'neg'
    assert dp.parse_expr("u", generic) == dp.ExprAst('symbol', 'u')


@pytest.mark.parametrize(
        "left,right",
        [("d*(d*u)", "d^2*u"),
         ("(u + d)^2", "u^2 + u*d + d*u + d^2"),
         ("-u", "0 - u"),
         ("u/2", "1/2*u"),
         ("2*3*u", "6*u"),
         ("u^0", "1")])
def test_same_element(generic, left, right):
    assert dp.parse_element(left, generic) == dp.parse_element(right, generic)


def test_relation_is_zero(generic):
    assert dp.parse_element("d^2*u - 5*d*u*d + 6*u*d^2 - t1*d", generic) == 0


@pytest.mark.parametrize(
        "text,position",
        [("u + * d", 4),
         ("1.5*u", 1),
         ("t2", 0),
         ("x*u", 0),
         ("2^u", 2),
         ("u^-1", 2),
         ("(u + d", 6),
         ("u d", 2),
         ("", 0)])
def test_parse_errors(generic, text, position):
    with pytest.raises(dp.ParseError) as info:
        dp.parse_element(text, generic)
    assert info.value.position == position


@pytest.mark.parametrize("text", ["u/d", "u/0", "d/(t1 - t1)"])
def test_division_needs_scalar(generic, text):
    with pytest.raises(dp.ParseError):
        dp.parse_element(text, generic)


def test_zeta():
    spec = dp.example_spec('equal-roots')
    a = dp.parse_element("zeta*u", spec)
    assert a.coefficient(1, 0, 0) == spec.field.zeta
    assert dp.parse_element("zeta^6*u", spec) == spec.u
    with pytest.raises(dp.ParseError):
        dp.parse_element("zeta*u", dp.example_spec('generic'))


def test_H_and_K(generic):
    H, K = dp.make_HK(generic)
    assert dp.parse_element("H*K - K*H", generic) == H * K - K * H
    with pytest.raises(dp.MissingRootsError):
        dp.parse_element("H", dp.example_spec('irreducible'))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 2**16),
       name=st.sampled_from(['generic', 'two-variables', 'unipotent']))
def test_str_reparses(seed, name):
    spec = dp.example_spec(name)
    a = dp.random_element(spec, 4, 4, np.random.default_rng(seed))
    assert dp.parse_element(str(a), spec) == a
