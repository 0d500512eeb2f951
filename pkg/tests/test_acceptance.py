import pytest
import dupy as dp


def test_unknown_criterion():
    suite = dp.AcceptanceSuite(criteria=['confluence', 'telepathy'])
    with pytest.raises(ValueError):
        suite()


def test_confluence_specs():
    specs = dp.acceptance.confluence_specs()
    assert len(specs) == 12
    assert {spec.field.kind for spec in specs} == {'rational', 'cyclotomic'}
    assert all(spec.n == 2 for spec in specs)


def test_summary_table():
    results = [dp.CriterionResult('growth', True, 1.25, 'dimensions'),
               dp.CriterionResult('center', False, 0.5)]
    table = dp.summary_table(results)
    assert 'growth' in table
    assert 'FAIL' in table
    assert results[0].to_json() == {'criterion': 'growth', 'passed': True,
                                    'seconds': 1.25, 'note': 'dimensions'}


@pytest.mark.parametrize(
        "criterion",
        ['zero_divisors', 'polynomial_subalgebra', 'isomorphisms',
         'specialization', 'automorphisms'])
def test_fast_criteria(criterion):
    [result] = dp.AcceptanceSuite(criteria=[criterion])()
    assert result.name == criterion
    assert result.passed, result.note


@pytest.mark.slow
def test_all_criteria():
    suite = dp.AcceptanceSuite()
    results = suite()
    assert [result.name for result in results] == \
        list(dp.AcceptanceSuite.CRITERIA)
    failed = [result.name for result in results if not result.passed]
    assert not failed
