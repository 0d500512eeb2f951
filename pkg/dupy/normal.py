# -*- coding: utf-8 -*-
"""
Normal elements: scalar-twist certificates and a bounded-degree search.

An element N is twist-normal when N·u = c_u·u·N and N·d = c_d·d·N for
scalars c_u, c_d. The search solves these linear conditions over all
elements of bounded weighted degree, for every twist built from powers
of r and s.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import termtables as tt
from sympy.polys.matrices import DomainMatrix
from tqdm import tqdm

from .algebraspec import AlgebraSpec
from .coeff import FieldElem, mult_dependence
from .constants import NORMAL_MAXDEG
from .element import Element, PBWMonomial, pbw_basis, basis_element
from .library import CheckResult, PreconditionError, exponent_vectors
from .linalg import combine, nullspace, rank, in_span
from .structure import make_HK

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


@dataclass
class TwistCertificate:
    """ Scalars with N·u = c_u·u·N and N·d = c_d·d·N """
    c_u: FieldElem
    c_d: FieldElem

    def format(self, spec: AlgebraSpec) -> Tuple[str, str]:
        return spec.field.format(self.c_u), spec.field.format(self.c_d)

    def to_json(self, spec: AlgebraSpec) -> Dict[str, str]:
        c_u, c_d = self.format(spec)
        return {'c_u': c_u, 'c_d': c_d}


def _ratio(left: Element, right: Element) -> Optional[FieldElem]:
    """ The scalar c with left = c·right, or None """
    spec = left.spec
    if not right:
        return spec.field.one if not left else None
    mono, c_right = right.leading()
    c_left = left.coefficient(mono.i, mono.j, mono.k, mono.m)
    c = spec.field.div(c_left, c_right)
    return c if left == right.scale(c) else None


def twist_normal_check(N: Element) -> Optional[TwistCertificate]:
    """ Solve N·u = c_u·u·N and N·d = c_d·d·N for scalars

    The ratio is read off the leading monomial of u·N (resp. d·N) and
    then verified on the whole element.

    Returns:
        The certificate, or None when no scalar twist exists.
    Raises:
        PreconditionError: If N = 0.
    """
    if not N:
        raise PreconditionError("twist_normal_check needs N ≠ 0")
    spec = N.spec
    c_u = _ratio(N * spec.u, spec.u * N)
    if c_u is None:
        return None
    c_d = _ratio(N * spec.d, spec.d * N)
    if c_d is None:
        return None
    return TwistCertificate(c_u, c_d)


@dataclass
class NormalSpace:
    """ A twist and a basis of the normal elements carrying it """
    twist: TwistCertificate
    basis: List[Element] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)


class NormalSearch:
    """ Bounded-degree search for twist-normal elements

    Usage:
        >>> search = NormalSearch()
        >>> search.grid_bound = 2
        >>> spaces = search(spec, maxdeg=4)

    Attributes:
        grid_bound (int or None): Bound on |a|, |b| in the candidate
            twists r^a s^b. Defaults to maxdeg.
        progress (bool): Show a tqdm bar over the candidate twists.
    """
    def __init__(self, grid_bound: Optional[int] = None,
                 progress: bool = False):
        self.grid_bound = grid_bound
        self.progress = progress

    def __call__(self, *args, **kwargs) -> List[NormalSpace]:
        """ Wrapper for :meth:`apply` """
        return self.apply(*args, **kwargs)

    def twists(self, spec: AlgebraSpec, bound: int) -> List[FieldElem]:
        """ Distinct values r^a s^b with |a|, |b| ≤ bound """
        r, s = spec.require_roots()
        F = spec.field
        values: Dict[str, FieldElem] = {}
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                c = F.pow(r, a) * F.pow(s, b)
                values.setdefault(F.format(c), c)
        return sorted(values.values(), key=F.sort_key)

    def apply(self, spec: AlgebraSpec,
              maxdeg: int = NORMAL_MAXDEG) -> List[NormalSpace]:
        """ All nonempty twist-normal spaces of weighted degree ≤ maxdeg

        Args:
            spec: An algebra with roots r, s both different from 1.
            maxdeg: Weighted degree bound.
        Returns:
            One NormalSpace per twist pair with solutions.
        Raises:
            MissingRootsError: If the spec has no roots.
            PreconditionError: If r = 1 or s = 1.
        """
        r, s = spec.require_roots()
        F = spec.field
        if F.is_one(r) or F.is_one(s):
            raise PreconditionError("normal search needs r ≠ 1 and s ≠ 1")
        bound = maxdeg if self.grid_bound is None else self.grid_bound
        twists = self.twists(spec, bound)

        grades: Dict[int, List[Element]] = {}
        for mono in pbw_basis(spec, maxdeg):
            grades.setdefault(mono.k - mono.i, []).append(
                basis_element(spec, mono))
        images = {grade: _Images(spec, basis)
                  for grade, basis in grades.items()}

        found: Dict[Tuple[str, str], NormalSpace] = {}
        for c_u in tqdm(twists, disable=not self.progress):
            for grade, image in images.items():
                vectors = image.kernel('u', c_u)
                if not vectors:
                    continue
                for c_d in twists:
                    solutions = image.restrict('d', c_d, vectors)
                    if not solutions:
                        continue
                    twist = TwistCertificate(c_u, c_d)
                    space = found.setdefault(twist.format(spec),
                                             NormalSpace(twist))
                    space.basis.extend(solutions)
        spaces = sorted(found.values(),
                        key=lambda sp: (F.sort_key(sp.twist.c_u),
                                        F.sort_key(sp.twist.c_d)))
        LOG.debug("normal elements of %s up to degree %d:\n%s", spec, maxdeg,
                  search_table(spaces, spec))
        return spaces


class _Images:
    """ Products of a grade's basis with u and d on both sides """
    def __init__(self, spec: AlgebraSpec, basis: List[Element]):
        self.spec = spec
        self.basis = basis
        self.products = {
            'u': ([b * spec.u for b in basis], [spec.u * b for b in basis]),
            'd': ([b * spec.d for b in basis], [spec.d * b for b in basis])}

    def _matrix(self, right: Sequence[Element], left: Sequence[Element],
                c: FieldElem) -> DomainMatrix:
        columns: Dict[PBWMonomial, int] = {}
        rows: Dict[int, Dict[int, FieldElem]] = {}
        for row, (x, y) in enumerate(zip(right, left)):
            diff = x - y.scale(c)
            entries = {}
            for mono, value in diff.items():
                entries[columns.setdefault(mono, len(columns))] = value
            if entries:
                rows[row] = entries
        return DomainMatrix(rows, (len(right), len(columns)),
                            self.spec.field.domain)

    def kernel(self, letter: str, c: FieldElem) -> List[List[FieldElem]]:
        """ Coordinate vectors x with x·g = c·g·x for the generator g """
        right, left = self.products[letter]
        return nullspace(self._matrix(right, left, c))

    def restrict(self, letter: str, c: FieldElem,
                 vectors: List[List[FieldElem]]) -> List[Element]:
        """ Elements of span(vectors) with x·g = c·g·x """
        right, left = self.products[letter]
        combined_right = [combine(v, right) for v in vectors]
        combined_left = [combine(v, left) for v in vectors]
        kernel = nullspace(self._matrix(combined_right, combined_left, c))
        elements = [combine(v, self.basis) for v in vectors]
        return [combine(w, elements) for w in kernel]


def normal_search(spec: AlgebraSpec,
                  maxdeg: int = NORMAL_MAXDEG) -> List[NormalSpace]:
    """ Shorthand for ``NormalSearch()(spec, maxdeg)`` """
    return NormalSearch()(spec, maxdeg)


def search_table(spaces: Sequence[NormalSpace], spec: AlgebraSpec) -> str:
    if not spaces:
        return "(no normal elements)"
    rows = [[*space.twist.format(spec), space.dimension] for space in spaces]
    return tt.to_string(rows, header=['c_u', 'c_d', 'dimension'])


def hk_monomials(spec: AlgebraSpec, maxdeg: int) -> List[Element]:
    """ t^m H^i K^j of weighted degree ≤ maxdeg """
    H, K = make_HK(spec)
    w = spec.weight
    out = []
    for i in range(maxdeg // (2 * w) + 1):
        for j in range((maxdeg - 2 * w * i) // (2 * w) + 1):
            hk = H**i * K**j
            for m in exponent_vectors(spec.n, maxdeg - 2 * w * (i + j)):
                out.append(hk * Element.monomial(spec, 0, 0, 0, m))
    return out


def hk_span_check(spec: AlgebraSpec,
                  maxdeg: int = NORMAL_MAXDEG) -> CheckResult:
    """ For independent r, s the normal elements are exactly span{t^m H^i K^j}

    Raises:
        PreconditionError: If r, s are multiplicatively dependent.
    """
    r, s = spec.require_roots()
    if mult_dependence(r, s, spec.field) is not None:
        raise PreconditionError("hk_span_check needs independent r, s")
    spaces = normal_search(spec, maxdeg)
    found = [a for space in spaces for a in space.basis]
    expected = hk_monomials(spec, maxdeg)
    dim_found, dim_expected = rank(found), rank(expected)
    joint = rank(found + expected)
    ok = dim_found == dim_expected == joint == len(found)
    return CheckResult(ok, note=f"search found {dim_found}, "
                                f"t^m H^i K^j span {dim_expected}",
                       details={'found': dim_found,
                                'expected': dim_expected, 'joint': joint})


def closed_under_t(spaces: Sequence[NormalSpace], spec: AlgebraSpec,
                   maxdeg: int) -> bool:
    """ t_i·N stays in its twist space whenever its degree is ≤ maxdeg """
    for space in spaces:
        for a in space.basis:
            for index in range(1, spec.n + 1):
                b = a * spec.t(index)
                if b.weighted_degree() <= maxdeg and \
                        not in_span(space.basis, b):
                    return False
    return True


def search_to_json(spaces: Sequence[NormalSpace],
                   spec: AlgebraSpec) -> List[Dict[str, Any]]:
    return [{'twist': space.twist.to_json(spec),
             'dimension': space.dimension,
             'basis': [str(a) for a in space.basis]} for space in spaces]
