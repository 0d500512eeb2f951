import pytest
import dupy as dp


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


def scaled(spec, lambda1, lambda2, a, b=0):
    """ d ↦ λ₁d, u ↦ λ₂u, t ↦ at + b """
    t = spec.t(1).scale(a) + b
    return dp.GenImages(spec, spec, u=spec.u.scale(lambda2),
                        d=spec.d.scale(lambda1), t=[t])


def test_identity(generic):
    images = dp.identity_images(generic)
    a = dp.parse_element("u^2*d*t1 - 3*(d*u)", generic)
    assert dp.apply_morphism(images, a) == a
    assert dp.hom_check(images)


def test_apply(generic):
    images = scaled(generic, 2, 3, 6)
    a = dp.parse_element("d*u + t1", generic)
    assert dp.apply_morphism(images, a) == dp.parse_element("6*d*u + 6*t1",
                                                            generic)


def test_swap_images(generic):
    images = dp.GenImages(generic, generic, u=generic.d, d=generic.u,
                          t=[generic.t(1)])
    assert dp.apply_morphism(images, generic.u * generic.d) == \
        generic.d * generic.u


@pytest.mark.parametrize(
        "lambda1,lambda2,a,valid",
        [(2, 3, 6, True),
         (1, 1, 1, True),
         (-1, 5, -5, True),
         (2, 3, 1, False),
         (1, 1, 2, False)])
def test_hom_check(generic, lambda1, lambda2, a, valid):
    result = dp.hom_check(scaled(generic, lambda1, lambda2, a))
    assert bool(result) == valid
    if not valid:
        assert result.note == 'd^2*u relation'


def test_t_must_stay_central(generic):
    images = dp.GenImages(generic, generic, u=generic.u, d=generic.d,
                          t=[generic.t(1) + generic.u])
    result = dp.hom_check(images)
    assert not result


def test_wrong_number_of_t_images(generic):
    with pytest.raises(dp.ArityError):
        dp.GenImages(generic, generic, u=generic.u, d=generic.d, t=[])


def test_images_in_other_algebra(generic):
    other = dp.example_spec('swapped')
    with pytest.raises(dp.SpecMismatchError):
        dp.GenImages(generic, generic, u=other.u, d=generic.d,
                     t=[generic.t(1)])
    with pytest.raises(dp.SpecMismatchError):
        dp.apply_morphism(dp.identity_images(generic), other.u)


def test_compose(generic):
    first = scaled(generic, 2, 3, 6)
    second = scaled(generic, -1, 5, -5)
    composed = dp.compose_morphisms(first, second)
    assert composed.u == generic.u.scale(15)
    assert composed.d == generic.d.scale(-2)
    assert composed.t == [generic.t(1).scale(-30)]
    assert dp.hom_check(composed)


def test_between_algebras():
    # t ↦ 2t + 1 sends φ₁ = t to φ₂
    source = dp.example_spec('generic')
    target = dp.AlgebraSpec.from_roots(1, dp.Field('rational'), 2, 3,
                                       '2*t1 + 1')
    images = dp.GenImages(source, target, u=target.u, d=target.d,
                          t=[target.t(1).scale(2) + 1])
    assert dp.hom_check(images)
    assert images.to_json() == {'u': 'u', 'd': 'd', 't': ['1 + 2*t1']}
