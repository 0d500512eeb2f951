import pytest
import dupy as dp
import numpy as np


def spec_with(n, phi='0'):
    return dp.AlgebraSpec.from_roots(n, dp.Field('rational'), 2, 3, phi)


def test_classical_counts():
    # f(N) = #{i + 2j + k ≤ N}
    counts = dp.filtration_counts(spec_with(0), 4)
    assert list(counts) == [1, 3, 7, 13, 22]


def test_step_differences():
    counts = np.array([1, 3, 7, 13, 22])
    assert list(dp.step_differences(counts, 2, 1)) == [1, 3, 6, 10, 15]
    assert list(dp.step_differences(counts, 2, 0)) == list(counts)


@pytest.mark.parametrize(
        "n,phi,maxN",
        [(0, '0', 10),
         (1, '0', 10),
         (1, 't1^2', 14),
         (2, 't1*t2', 18)])
def test_gk_dimension(n, phi, maxN):
    spec = spec_with(n, phi)
    report = dp.gk_probe(spec, maxN)
    assert report
    assert report.dimension == n + 3
    w = spec.weight
    assert report.differences[n + 3][-1] == 4 * (2 * w)**n
    assert report.to_json()['dimension'] == n + 3


def test_gk_inconclusive():
    report = dp.gk_probe(spec_with(2, 't1*t2'), 9)
    assert not report.conclusive
    assert report.dimension is None
    assert "inconclusive" in report.note


def test_gk_needs_range():
    with pytest.raises(dp.PreconditionError):
        dp.gk_probe(spec_with(1), 6)


def test_weighted_degree():
    spec = spec_with(1, 't1^3')
    assert dp.weighted_degree(spec.u * spec.t(1)) == 4
    assert dp.weighted_degree(dp.Element.zero(spec)) is None
