import pytest
import dupy as dp


@pytest.fixture()
def generic():
    return dp.example_spec('generic')


@pytest.fixture()
def gwa(generic):
    return dp.GWARing(dp.sigma_of(generic), 'standard')


STANDARD = dp.ASSIGNMENTS['u->X-, d->X+']


def test_join(gwa):
    sigma = gwa.sigma
    assert gwa.join(-1, 1) == (sigma.x, 0)
    assert gwa.join(1, -1) == (sigma(sigma.x), 0)
    assert gwa.join(2, 3) == (sigma.ring.one, 5)


def test_shift(gwa):
    sigma = gwa.sigma
    assert gwa.shift(1, sigma.x) == sigma.y
    assert gwa.shift(-1, sigma.y) == sigma.x
    printed = dp.GWARing(sigma, 'as_printed')
    assert printed.shift(-1, sigma.x) == sigma.y


def test_words(gwa):
    sigma = gwa.sigma
    assert dp.gwa_word('ud', gwa, STANDARD) == gwa.element({0: sigma.x})
    assert dp.gwa_word('du', gwa, STANDARD) == gwa.element({0: sigma.y})
    assert dp.gwa_word('d', gwa, STANDARD) == gwa.generator(1)


def test_relations_map_to_zero(generic, gwa):
    relation = dp.parse_element("d^2*u - 5*d*u*d + 6*u*d^2 - t1*d", generic)
    assert relation == 0
    images = [dp.gwa_word(w, gwa, STANDARD) for w in ('ddu', 'dud', 'udd')]
    t = gwa.sigma.ring.gens[2]
    image = images[0] - images[1].scale(5) + images[2].scale(6) - \
        gwa.generator(1).scale(t)
    assert not image


@pytest.mark.parametrize("name", ['generic', 'quadratic', 'two-variables'])
def test_iso_check(name):
    result = dp.gwa_iso_check(dp.example_spec(name), 3)
    assert result
    assert result.details['verified'] == ['standard: u->X-, d->X+']
    findings = result.details['findings']
    assert not findings['standard: u->X+, d->X-']['ud = x']
    assert not findings['as_printed: u->X-, d->X+']['relations']


def test_iso_check_needs_beta():
    with pytest.raises(dp.PreconditionError):
        dp.gwa_iso_check(dp.example_spec('zero-divisor'))


def test_image_of_element(generic, gwa):
    a = dp.parse_element("3*u*d*t1", generic)
    image = dp.gwa_image(a, gwa, STANDARD)
    t = gwa.sigma.ring.gens[2]
    assert image == gwa.element({0: gwa.sigma.x * t * 3})
    assert image.to_json() == [{'X': 0, 'poly': '3*x*t1'}]
