import pytest
import dupy as dp


@pytest.mark.parametrize("name", dp.list_examples())
def test_examples_load(name):
    spec = dp.example_spec(name)
    assert spec.name == name
    assert dp.load_spec(f'example:{name}') is spec
    assert dp.relations_vanish(spec)


def test_roots():
    assert dp.example_spec('generic').has_roots
    assert not dp.example_spec('irreducible').has_roots
    spec = dp.example_spec('equal-roots')
    assert spec.field.equal(spec.r, spec.s)


def test_unknown_example():
    with pytest.raises(dp.SpecError) as info:
        dp.example_spec('nothing')
    assert 'generic' in str(info.value)
