import pytest
import dupy as dp
from sympy import QQ
from sympy.polys.matrices import DomainMatrix


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


def elements(spec, *texts):
    return [dp.parse_element(text, spec) for text in texts]


def test_support(generic):
    monos = dp.support(elements(generic, "u + d", "d*u"))
    assert monos == [dp.PBWMonomial(0, 0, 1, (0,)),
                     dp.PBWMonomial(1, 0, 0, (0,)),
                     dp.PBWMonomial(0, 1, 0, (0,))]
    assert dp.support([]) == []


def test_rank(generic):
    assert dp.rank(elements(generic, "u", "d", "u + d")) == 2
    assert dp.rank(elements(generic, "0", "0")) == 0
    assert dp.independent(elements(generic, "u*d", "d*u", "t1"))
    assert not dp.independent(elements(generic, "t1*u", "2*t1*u"))


def test_in_span(generic):
    basis = elements(generic, "u*d + t1", "d*u")
    assert dp.in_span(basis, dp.parse_element("3*u*d - d*u + 3*t1", generic))
    assert not dp.in_span(basis, generic.u)


def test_coordinate_matrix(generic):
    matrix, monos = dp.coordinate_matrix(elements(generic, "2*u", "u - d"))
    assert matrix.shape == (2, 2)
    assert matrix.to_Matrix().tolist() == [[0, 2], [-1, 1]]
    with pytest.raises(ValueError):
        dp.coordinate_matrix(elements(generic, "t1"), monos)


def test_nullspace():
    matrix = DomainMatrix([[QQ(1), QQ(2)], [QQ(2), QQ(4)]], (2, 2), QQ)
    [vector] = dp.nullspace(matrix)
    assert vector[0] * 1 + vector[1] * 2 == 0
    empty = DomainMatrix.zeros((2, 0), QQ)
    assert dp.nullspace(empty) == [[QQ(1), QQ(0)], [QQ(0), QQ(1)]]


def test_solve_kernel(generic):
    # span of the monomials of degree ≤ 2 commuting with u*d
    candidates = dp.monomial_elements(generic, dp.pbw_basis(generic, 2))
    ud = generic.u * generic.d
    kernel = dp.solve_kernel(candidates, [lambda a: a * ud - ud * a])
    assert kernel
    for a in kernel:
        assert a * ud == ud * a
    assert dp.in_span(kernel, generic.d * generic.u)
    assert not dp.in_span(kernel, generic.u)


def test_combine(generic):
    a = dp.combine([QQ(2), QQ(0), QQ(-1)], elements(generic, "u", "d", "t1"))
    assert a == dp.parse_element("2*u - t1", generic)
