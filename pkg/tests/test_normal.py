import pytest
import dupy as dp
from sympy import QQ


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


@pytest.fixture()
def homogeneous():
    return dp.AlgebraSpec.from_roots(1, dp.Field('rational'), 2, 3, 0)


@pytest.mark.parametrize(
        "expr,c_u,c_d",
        [("H", QQ(3), QQ(1, 3)),
         ("K", QQ(2), QQ(1, 2)),
         ("t1", QQ(1), QQ(1)),
         ("H^2*K*t1", QQ(18), QQ(1, 18))])
def test_twist(generic, expr, c_u, c_d):
    certificate = dp.twist_normal_check(dp.parse_element(expr, generic))
    assert certificate is not None
    assert (certificate.c_u, certificate.c_d) == (c_u, c_d)


@pytest.mark.parametrize("expr", ["u", "d", "H + K", "u*d"])
def test_not_normal(generic, expr):
    assert dp.twist_normal_check(dp.parse_element(expr, generic)) is None


def test_twist_of_zero(generic):
    with pytest.raises(dp.PreconditionError):
        dp.twist_normal_check(dp.Element.zero(generic))


def test_certificate_json(generic):
    certificate = dp.twist_normal_check(dp.make_H(generic))
    assert certificate.to_json(generic) == {'c_u': '3', 'c_d': '1/3'}


def test_search_dimension(homogeneous):
    spaces = dp.normal_search(homogeneous, 4)
    # t^m, then H, K times t^m, then H², HK, K²
    assert sum(space.dimension for space in spaces) == 14
    dimensions = {space.twist.format(homogeneous): space.dimension
                  for space in spaces}
    assert dimensions == {('1', '1'): 5, ('3', '1/3'): 3, ('2', '1/2'): 3,
                          ('9', '1/9'): 1, ('6', '1/6'): 1, ('4', '1/4'): 1}
    assert dp.closed_under_t(spaces, homogeneous, 4)


def test_search_matches_hk_span(generic):
    result = dp.hk_span_check(generic, 4)
    assert result
    assert result.details['found'] == result.details['expected']


def test_search_class_settings(homogeneous):
    search = dp.NormalSearch()
    search.grid_bound = 1
    spaces = search(homogeneous, maxdeg=4)
    twists = {space.twist.format(homogeneous) for space in spaces}
    assert ('9', '1/9') not in twists
    assert ('6', '1/6') in twists


def test_search_preconditions():
    with pytest.raises(dp.PreconditionError):
        dp.normal_search(dp.example_spec('unipotent'), 2)
    with pytest.raises(dp.MissingRootsError):
        dp.normal_search(dp.example_spec('irreducible'), 2)
    with pytest.raises(dp.PreconditionError):
        dp.hk_span_check(dp.example_spec('dependent'), 2)


def test_search_json(homogeneous):
    data = dp.search_to_json(dp.normal_search(homogeneous, 2), homogeneous)
    central = [entry for entry in data
               if entry['twist'] == {'c_u': '1', 'c_d': '1'}]
    assert central[0]['dimension'] == 3
    assert len(central[0]['basis']) == 3
