# -*- coding: utf-8 -*-
"""
Weighted degrees, filtration counts and the Gelfand-Kirillov growth probe.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import termtables as tt

from .algebraspec import AlgebraSpec
from .element import Element, pbw_basis
from .library import PreconditionError

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


def weighted_degree(a: Element) -> Optional[int]:
    """ Maximal weighted degree of the monomials of `a`

    Returns:
        The degree, or None (standing for -∞) when a = 0.
    """
    return a.weighted_degree()


def filtration_counts(spec: AlgebraSpec, maxN: int) -> np.ndarray:
    """ Number of PBW monomials of weighted degree ≤ N for N = 0..maxN """
    degrees = [mono.degree(spec) for mono in pbw_basis(spec, maxN)]
    per_degree = np.bincount(np.asarray(degrees, dtype=np.int64),
                             minlength=maxN + 1)
    return np.cumsum(per_degree)


def filtration_count(spec: AlgebraSpec, N: int) -> int:
    """ Number of PBW monomials of weighted degree ≤ N """
    if N < 0:
        return 0
    return int(filtration_counts(spec, N)[N])


def step_differences(counts: np.ndarray, step: int,
                     order: int) -> np.ndarray:
    """ order-fold differences f(N) - f(N - step), with f(N < 0) = 0 """
    values = np.asarray(counts, dtype=object)
    for _ in range(order):
        shifted = np.concatenate([np.zeros(step, dtype=object),
                                  values[:-step]])[:len(values)]
        values = values - shifted
    return values


@dataclass
class GrowthReport:
    """ Outcome of :func:`gk_probe`

    Attributes:
        counts: f(N) for N = 0..maxN.
        step: Difference step 2w, the period of the count's
            quasi-polynomial behaviour.
        differences: order → list of the order-fold step differences.
        stable_from: order → first N from which that order must be
            constant (order n+3) or zero (order n+4).
        dimension: Inferred GK dimension, None when inconclusive.
        conclusive: Whether maxN reaches the stable range.
        expected: n + 3.
    """
    counts: List[int]
    step: int
    differences: Dict[int, List[int]] = field(default_factory=dict)
    stable_from: Dict[int, int] = field(default_factory=dict)
    dimension: Optional[int] = None
    conclusive: bool = False
    expected: int = 0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.conclusive and self.dimension == self.expected

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> Dict[str, Any]:
        return {'counts': self.counts, 'step': self.step,
                'differences': {str(k): v
                                for k, v in self.differences.items()},
                'stable_from': {str(k): v
                                for k, v in self.stable_from.items()},
                'dimension': self.dimension, 'conclusive': self.conclusive,
                'expected': self.expected, 'note': self.note}

    def table(self) -> str:
        orders = sorted(self.differences)
        header = ['N', 'f(N)'] + [f'Δ^{k}' for k in orders]
        rows = [[N, self.counts[N]] + [self.differences[k][N]
                                       for k in orders]
                for N in range(len(self.counts))]
        return tt.to_string(rows, header=header)


def gk_probe(spec: AlgebraSpec, maxN: int) -> GrowthReport:
    """ Infer the GK dimension from filtration counts

    The count f(N) is a quasi-polynomial of period 2w. Taking
    differences with step 2w, the (n+4)-fold difference vanishes for
    N ≥ 2w(n+2) - n and the (n+3)-fold difference is the constant
    4(2w)^n for N ≥ 2w + n(2w - 1). The probe checks both on the range
    up to maxN and reports n + 3.

    Args:
        spec: The algebra.
        maxN: Largest degree counted; at least n + 6.
    Returns:
        A GrowthReport, inconclusive when maxN is below the stable range.
    Raises:
        PreconditionError: If maxN < n + 6.
    """
    n, w = spec.n, spec.weight
    if maxN < n + 6:
        raise PreconditionError(f"gk_probe needs maxN ≥ n + 6 = {n + 6}")
    counts = filtration_counts(spec, maxN)
    step = 2 * w
    top = n + 4
    report = GrowthReport(counts=[int(c) for c in counts], step=step,
                          expected=n + 3)
    for order in range(top + 1):
        report.differences[order] = [
            int(v) for v in step_differences(counts, step, order)]
    report.stable_from = {top - 1: 2 * w + n * (2 * w - 1),
                          top: 2 * w * (n + 2) - n}

    zero_from = report.stable_from[top]
    const_from = report.stable_from[top - 1]
    if maxN < zero_from:
        report.note = (f"inconclusive: maxN = {maxN} is below {zero_from}, "
                       f"where the {top}-fold difference must vanish")
        LOG.info(report.note)
        return report
    report.conclusive = True
    vanishes = all(v == 0 for v in report.differences[top][zero_from:])
    tail = report.differences[top - 1][const_from:]
    constant = len(set(tail)) == 1 and tail[0] > 0
    if vanishes and constant:
        report.dimension = top - 1
        report.note = (f"{top}-fold difference vanishes from N = "
                       f"{zero_from}; {top - 1}-fold difference is "
                       f"{tail[0]} from N = {const_from}")
    else:
        report.note = "differences do not stabilise as expected"
        LOG.warning("growth probe failed for %s", spec)
    LOG.debug("growth table:\n%s", report.table())
    return report
