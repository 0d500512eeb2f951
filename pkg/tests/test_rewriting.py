import pytest
import dupy as dp
import numpy as np
from sympy import QQ


@pytest.fixture()
def unipotent():
    return dp.example_spec('unipotent')


@pytest.fixture()
def cyclotomic():
    return dp.AlgebraSpec(2, dp.Field('cyclotomic', m=6), 'zeta', -1,
                          't1*t2', solve_roots=False)


def test_defining_relation_vanishes(unipotent):
    a = dp.parse_element("d^2*u - 2*d*u*d + u*d^2 - t1*d", unipotent)
    assert a == 0
    assert str(a) == "0"


@pytest.mark.parametrize(
        "word,normal",
        [("udd", "u*d^2"),
         ("du", "(d*u)"),
         ("dud", "(d*u)*d"),
         ("uudu", "u^2*(d*u)"),
         ("ddu", "d*t1 + 2*(d*u)*d - u*d^2")])
def test_reduce_word(unipotent, word, normal):
    assert str(dp.reduce_word(word, unipotent)) == normal


def test_word_parsing():
    word = dp.Word.from_string("d*t1*u", 2)
    assert word.letters == ('d', 't1', 'u')
    assert str(word) == "d*t1*u"
    with pytest.raises(dp.ParseError) as info:
        dp.Word.from_string("dux")
    assert info.value.position == 2


def test_word_with_coefficient(unipotent):
    a = unipotent.rewriter.apply(dp.Word.from_string("t1*du", 3))
    assert a == (unipotent.d * unipotent.u).scale(3) * unipotent.t(1)


@pytest.mark.parametrize("strategy", dp.STRATEGIES)
def test_strategies_agree(cyclotomic, strategy):
    expected = dp.reduce_word("dduudu", cyclotomic)
    assert dp.reduce_word("dduudu", cyclotomic, strategy) == expected


def test_bad_strategy(unipotent):
    with pytest.raises(ValueError):
        dp.Rewriter(unipotent, strategy='outermost')


def test_confluence(cyclotomic):
    result = dp.confluence_check(cyclotomic)
    assert result
    assert result.details['defect_matches_identity']
    assert result.details['ddu_first_normal'] == \
        result.details['duu_first_normal']


@pytest.mark.parametrize("beta", [0, -1, 3])
def test_confluence_over_Q(beta):
    spec = dp.AlgebraSpec(2, dp.Field('rational'), 1, beta, 't1^2',
                          solve_roots=False)
    assert dp.confluence_check(spec)


def test_strategy_check(cyclotomic):
    assert dp.strategy_check(cyclotomic, count=30,
                             rng=np.random.default_rng(3))


def test_memoized_product_matches_plain(unipotent):
    plain = dp.Rewriter(unipotent, memoize=False)
    rng = np.random.default_rng(1)
    for _ in range(20):
        a = dp.random_element(unipotent, 3, 3, rng)
        b = dp.random_element(unipotent, 3, 3, rng)
        assert a * b == plain.multiply(a, b)


def test_cache_size(unipotent):
    rewriter = dp.Rewriter(unipotent)
    rewriter.cache_size = 10
    rewriter.multiply(unipotent.d**3, unipotent.u**3)
    assert rewriter.cache_info().maxsize == 10


def test_normalize_is_identity_on_normal_forms(unipotent):
    a = dp.parse_element("u^2*d - 1/2*(d*u)*t1 + 3", unipotent)
    assert dp.normalize(a) == a
    assert a.coefficient(0, 0, 0) == QQ(3)
