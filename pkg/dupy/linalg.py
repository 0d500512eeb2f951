# -*- coding: utf-8 -*-
"""
Exact linear algebra on spans of Elements, over the spec's field.

Elements are turned into coordinate vectors on their joint monomial
support and handled as sympy DomainMatrix objects.
"""
from __future__ import annotations
import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from .algebraspec import AlgebraSpec
from .coeff import FieldElem
from .element import Element, PBWMonomial, basis_element

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


def support(elements: Sequence[Element]) -> List[PBWMonomial]:
    """ Union of the monomials of the elements, in canonical order """
    if not elements:
        return []
    spec = elements[0].spec
    monos = {mono for a in elements for mono, _ in a.items()}
    return sorted(monos, key=lambda mono: mono.sort_key(spec))


def coordinate_matrix(elements: Sequence[Element],
                      monomials: Optional[Sequence[PBWMonomial]] = None
                      ) -> Tuple[DomainMatrix, List[PBWMonomial]]:
    """ Matrix whose rows are the coordinates of the elements

    Args:
        elements: Elements of a single spec.
        monomials: Column monomials; defaults to the joint support.
    Returns:
        The sparse matrix and the column monomials.
    """
    monomials = list(support(elements) if monomials is None else monomials)
    if not elements:
        raise ValueError("need at least one element")
    spec = elements[0].spec
    column = {mono: index for index, mono in enumerate(monomials)}
    rows: Dict[int, Dict[int, FieldElem]] = {}
    for row, a in enumerate(elements):
        entries = {}
        for mono, c in a.items():
            try:
                entries[column[mono]] = c
            except KeyError:
                raise ValueError(f"{mono} lies outside the given columns")
        if entries:
            rows[row] = entries
    matrix = DomainMatrix(rows, (len(elements), len(monomials)),
                          spec.field.domain)
    return matrix, monomials


def rank(elements: Sequence[Element]) -> int:
    """ Dimension of the span of the elements """
    nonzero = [a for a in elements if a]
    if not nonzero:
        return 0
    matrix, _ = coordinate_matrix(nonzero)
    return matrix.rank()


def independent(elements: Sequence[Element]) -> bool:
    return rank(elements) == len(elements)


def in_span(elements: Sequence[Element], target: Element) -> bool:
    return rank(list(elements) + [target]) == rank(elements)


def nullspace(matrix: DomainMatrix) -> List[List[FieldElem]]:
    """ Basis of {x : x·M = 0}, as lists of field elements

    The vectors x combine the rows of M.
    """
    nrows, ncols = matrix.shape
    domain = matrix.domain
    if ncols == 0 or nrows == 0:
        return [[domain.one if i == j else domain.zero for j in range(nrows)]
                for i in range(nrows)]
    kernel = matrix.transpose().nullspace()
    return kernel.to_list()


def combine(coeffs: Sequence[FieldElem],
            elements: Sequence[Element]) -> Element:
    """ Σ coeffs[i]·elements[i] """
    if not elements:
        raise ValueError("need at least one element")
    result = Element.zero(elements[0].spec)
    for c, a in zip(coeffs, elements):
        if c:
            result = result + a.scale(c)
    return result


def solve_kernel(candidates: Sequence[Element],
                 maps: Sequence[Callable[[Element], Element]]
                 ) -> List[Element]:
    """ Basis of the combinations x of candidates with f(x) = 0 for all f

    Each map must be linear. The images of every candidate are stacked
    side by side so one nullspace computation solves all equations.
    """
    if not candidates:
        return []
    spec = candidates[0].spec
    offset = 0
    columns: Dict[Tuple[int, PBWMonomial], int] = {}
    images = [[f(a) for f in maps] for a in candidates]
    rows: Dict[int, Dict[int, FieldElem]] = {}
    for row, per_map in enumerate(images):
        entries = {}
        for index, image in enumerate(per_map):
            for mono, c in image.items():
                key = (index, mono)
                if key not in columns:
                    columns[key] = offset
                    offset += 1
                entries[columns[key]] = c
        if entries:
            rows[row] = entries
    matrix = DomainMatrix(rows, (len(candidates), offset), spec.field.domain)
    return [combine(vector, candidates) for vector in nullspace(matrix)]


def monomial_elements(spec: AlgebraSpec,
                      monomials: Sequence[PBWMonomial]) -> List[Element]:
    return [basis_element(spec, mono) for mono in monomials]
