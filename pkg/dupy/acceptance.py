# -*- coding: utf-8 -*-
"""
The acceptance suite run by ``dupy verify``: one check per property the
toolkit certifies, each reduced to exact comparisons.
"""
from __future__ import annotations
import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import termtables as tt
from tqdm import tqdm

from .algebraspec import AlgebraSpec
from .automorphism import aut_agreement_check, composition_check
from .center import center_check
from .coeff import Field
from .constants import (AUT_COMPOSITIONS, AUT_DRAWS, BASIS_MAXDEG,
                        CENTER_MAXDEG, GK_MAXN, NORMAL_MAXDEG, RANDOM_PAIRS,
                        RANDOM_TRIPLES, SEED, SPECIALIZE_PAIRS, THETA_MAXDEG,
                        THETA_PAIRS)
from .examples import example_spec
from .growth import gk_probe
from .gwa import gwa_iso_check
from .isomorphism import affine_agreement_check, iso_decide
from .library import CheckResult
from .linalg import in_span
from .normal import hk_span_check, normal_search
from .rewriting import confluence_check, reduce_word
from .specialization import localize_spec, specialize_check
from .structure import (alternate_basis_check, basis_faithfulness,
                        domain_probe, hk_identities, is_central, make_HK,
                        polynomial_subalgebra_check, relations_vanish,
                        ring_axioms_check, zero_divisor_witness)
from .skewlaurent import theta_check

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

CENTER_EXAMPLES = ('equal-roots', 'unipotent', 'dependent', 'both-roots',
                   'r-trivial', 's-trivial', 'generic')
HK_EXAMPLES = ('generic', 'swapped', 'inverted', 'quadratic',
               'shifted-square', 'dependent', 'r-root', 's-root',
               'both-roots', 'equal-roots')


def confluence_specs() -> List[AlgebraSpec]:
    """ β = 0 and β ≠ 0, five shapes of φ, over ℚ and ℚ(ζ₆) """
    shapes = [(0, '0'), (0, 't1^2'), (0, 't1*t2'),
              (-1, '3'), (-1, 't1'), (-1, 't1*t2')]
    specs = []
    for field in (Field('rational'), Field('cyclotomic', m=6)):
        alpha = 'zeta' if field.m == 6 else 1
        for beta, phi in shapes:
            specs.append(AlgebraSpec(2, field, alpha, beta, phi,
                                     solve_roots=False))
    return specs


@dataclass
class CriterionResult:
    name: str
    passed: bool
    seconds: float
    note: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {'criterion': self.name, 'passed': self.passed,
                'seconds': round(self.seconds, 3), 'note': self.note}


class AcceptanceSuite:
    """ Run the acceptance criteria and collect a summary

    Usage:
        >>> suite = AcceptanceSuite()
        >>> suite.seed = 3
        >>> results = suite()
        >>> print(summary_table(results))

    Attributes:
        seed (int): Seed of every randomized property batch.
        criteria (list of str): Names of the criteria to run, in order.
            Defaults to all of them.
        progress (bool): Show a tqdm bar over the criteria.
    """
    CRITERIA = ('confluence', 'ring_axioms', 'growth', 'center',
                'zero_divisors', 'polynomial_subalgebra', 'embeddings',
                'hk_calculus', 'normal_elements', 'automorphisms',
                'isomorphisms', 'specialization')

    def __init__(self, seed: int = SEED,
                 criteria: Optional[Sequence[str]] = None,
                 progress: bool = False):
        self.seed = seed
        self.criteria = list(self.CRITERIA if criteria is None
                             else criteria)
        self.progress = progress

    def __call__(self, *args, **kwargs) -> List[CriterionResult]:
        """ Wrapper for :meth:`apply` """
        return self.apply(*args, **kwargs)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def apply(self) -> List[CriterionResult]:
        unknown = set(self.criteria) - set(self.CRITERIA)
        if unknown:
            raise ValueError(f"unknown criteria {sorted(unknown)}")
        results = []
        for name in tqdm(self.criteria, disable=not self.progress):
            start = time.perf_counter()
            try:
                outcome = getattr(self, name)()
            except (ArithmeticError, NotImplementedError, ValueError) as e:
                LOG.error("criterion %s raised %r", name, e)
                outcome = CheckResult(False, note=f"raised {e!r}")
            elapsed = time.perf_counter() - start
            results.append(CriterionResult(name, bool(outcome), elapsed,
                                           outcome.note))
            LOG.info("%s: %s (%.1f s)", name,
                     'pass' if outcome else 'FAIL', elapsed)
        LOG.debug("acceptance summary:\n%s", summary_table(results))
        return results

    # === criteria ===
    def confluence(self) -> CheckResult:
        """ dduu resolves, and both strategies agree on it """
        for spec in confluence_specs():
            result = confluence_check(spec)
            if not result:
                return CheckResult(False, witness=spec, note=result.note)
            if reduce_word('dduu', spec, 'leftmost') != \
                    reduce_word('dduu', spec, 'rightmost'):
                return CheckResult(False, witness=spec,
                                   note="strategies disagree on dduu")
        return CheckResult(True, note="12 specs")

    def ring_axioms(self) -> CheckResult:
        rng = self.rng()
        for spec in confluence_specs():
            for check in (relations_vanish(spec),
                          ring_axioms_check(spec, RANDOM_TRIPLES, 4, rng),
                          basis_faithfulness(spec, BASIS_MAXDEG)):
                if not check:
                    return CheckResult(False, witness=spec, note=check.note)
        return CheckResult(True, note="relations, axioms and basis on "
                                      "12 specs")

    def growth(self) -> CheckResult:
        dimensions = []
        for n in (0, 1, 2):
            spec = AlgebraSpec.from_roots(n, Field('rational'), 2, 3)
            report = gk_probe(spec, GK_MAXN)
            if not report:
                return CheckResult(False, witness=report, note=report.note)
            dimensions.append(report.dimension)
        return CheckResult(True, note=f"dimensions {dimensions}")

    def center(self) -> CheckResult:
        cases = []
        for name in CENTER_EXAMPLES:
            result = center_check(example_spec(name), CENTER_MAXDEG)
            if not result:
                return CheckResult(False, witness=name, note=result.note)
            cases.append(result.details['case'])
        return CheckResult(True, note=f"cases {sorted(set(cases))}")

    def zero_divisors(self) -> CheckResult:
        a, b = zero_divisor_witness(example_spec('zero-divisor'))
        if a * b or not a or not b:
            return CheckResult(False, note="beta = 0 witness fails")
        return domain_probe(example_spec('generic'), RANDOM_PAIRS,
                            rng=self.rng())

    def polynomial_subalgebra(self) -> CheckResult:
        for name in ('generic', 'zero-divisor'):
            result = polynomial_subalgebra_check(example_spec(name), 3)
            if not result:
                return CheckResult(False, witness=name, note=result.note)
        return CheckResult(True, note="beta ≠ 0 free, beta = 0 relation")

    def embeddings(self) -> CheckResult:
        spec = example_spec('generic')
        theta = theta_check(spec, THETA_MAXDEG, THETA_PAIRS, self.rng())
        if not theta:
            return CheckResult(False, note=f"theta: {theta.details}")
        gwa = gwa_iso_check(spec)
        verified = gwa.details['verified']
        return CheckResult(len(verified) == 1,
                           note=f"theta ok, GWA {gwa.note}")

    def hk_calculus(self) -> CheckResult:
        for name in HK_EXAMPLES:
            spec = example_spec(name)
            checks = [hk_identities(spec)]
            # H = K when r = s
            if not spec.field.equal(spec.r, spec.s):
                checks.append(alternate_basis_check(spec, 4))
            for check in checks:
                if not check:
                    return CheckResult(False, witness=name, note=check.note)
        return CheckResult(True, note=f"{len(HK_EXAMPLES)} specs")

    def normal_elements(self) -> CheckResult:
        spans = hk_span_check(example_spec('generic'), NORMAL_MAXDEG)
        if not spans:
            return spans
        spec = example_spec('dependent')
        spaces = normal_search(spec, NORMAL_MAXDEG)
        H, K = make_HK(spec)
        t = spec.t(1)
        for family in (H, K, t * H, t * K):
            if not any(in_span(space.basis, family) for space in spaces):
                return CheckResult(False, witness=family,
                                   note="family missing from the search")
        return CheckResult(True, note=spans.note)

    def automorphisms(self) -> CheckResult:
        spec = example_spec('generic')
        rng = self.rng()
        agreement = aut_agreement_check(spec, 2 * AUT_DRAWS, rng)
        if not agreement:
            return agreement
        composed = composition_check(spec, AUT_COMPOSITIONS, rng)
        if not composed:
            return composed
        return CheckResult(True, note=agreement.note)

    def isomorphisms(self) -> CheckResult:
        Q = Field('rational')
        base = example_spec('generic')
        expected = {
            '3a': AlgebraSpec.from_roots(1, Q, 2, 3, '2*t1 + 1'),
            '3b': example_spec('swapped'),
            '3c': AlgebraSpec.from_roots(1, Q, '1/3', '1/2', 't1'),
            '3d': example_spec('inverted'),
        }
        for case, other in expected.items():
            witness = iso_decide(base, other)
            if witness is None or witness.case != case:
                return CheckResult(False, witness=case,
                                   note=f"expected case {case}")
        if iso_decide(example_spec('quadratic'),
                      example_spec('quadratic-plus-one')) is not None:
            return CheckResult(False, note="t^2 and t^2 + 1 matched")
        if iso_decide(base, example_spec('dependent')) is not None:
            return CheckResult(False, note="centers of different size "
                                           "matched")
        return affine_agreement_check(rng=self.rng())

    def specialization(self) -> CheckResult:
        result = specialize_check(example_spec('two-variables'), (2, -1),
                                  SPECIALIZE_PAIRS, rng=self.rng())
        if not result:
            return result
        localized = localize_spec(example_spec('dependent'))
        H, K = make_HK(localized)
        central = is_central(H * K)
        return CheckResult(bool(central), note="HK central over Q(t1)")


def summary_table(results: Sequence[CriterionResult]) -> str:
    rows = [[index, result.name, 'pass' if result.passed else 'FAIL',
             f"{result.seconds:.1f}", result.note]
            for index, result in enumerate(results, 1)]
    return tt.to_string(rows, header=['#', 'criterion', 'result', 'seconds',
                                      'note'])
