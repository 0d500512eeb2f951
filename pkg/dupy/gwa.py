# -*- coding: utf-8 -*-
"""
Generalized Weyl algebra R(σ, x) and its identification with A(α, β, φ).

R(σ, x) is generated over R = K[x, y, t₁..tₙ] by X⁺, X⁻ with
X⁻X⁺ = x and X⁺X⁻ = σ(x). Elements are kept as Σ r_e·X^e with
coefficients on the left, where X^e is (X⁺)^e for e > 0 and
(X⁻)^(-e) for e < 0.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import termtables as tt
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec
from .coeff import format_poly
from .element import Element, pbw_basis, basis_element, relation_images
from .library import CheckResult, SpecMismatchError
from .skewlaurent import SigmaAut, sigma_of

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

CONVENTIONS = ('standard', 'as_printed')
# letter images as X-exponents
ASSIGNMENTS = {'u->X-, d->X+': {'u': -1, 'd': 1},
               'u->X+, d->X-': {'u': 1, 'd': -1}}


@dataclass(frozen=True)
class GWARing:
    """ R(σ, x) with a commutation convention

    'standard' moves coefficients by X⁺r = σ(r)X⁺ and X⁻r = σ⁻¹(r)X⁻;
    'as_printed' uses σ for both.
    """
    sigma: SigmaAut
    convention: str = 'standard'

    def shift(self, e: int, q: PolyElement) -> PolyElement:
        """ The coefficient q' with X^e·q = q'·X^e """
        if self.convention == 'standard':
            return self.sigma.apply(q, e)
        return self.sigma.apply(q, abs(e))

    def join(self, e: int, f: int) -> Tuple[PolyElement, int]:
        """ X^e·X^f as coefficient·X^g """
        ring = self.sigma.ring
        if e == 0 or f == 0 or (e > 0) == (f > 0):
            return ring.one, e + f
        if e > 0:
            inner = self.sigma.apply(self.sigma.x)
            coeff, g = self.join(e - 1, f + 1)
            return self.shift(e - 1, inner) * coeff, g
        coeff, g = self.join(e + 1, f - 1)
        return self.shift(e + 1, self.sigma.x) * coeff, g

    def element(self, terms: Dict[int, PolyElement]) -> GWAElem:
        return GWAElem(self, terms)

    def generator(self, e: int) -> GWAElem:
        return GWAElem(self, {e: self.sigma.ring.one})


class GWAElem:
    """ Σ r_e·X^e in a generalized Weyl algebra """
    __slots__ = ('gwa', 'terms')

    def __init__(self, gwa: GWARing,
                 terms: Optional[Dict[int, PolyElement]] = None):
        self.gwa = gwa
        self.terms = {e: p for e, p in (terms or {}).items() if p}

    def _check(self, other: GWAElem) -> None:
        if self.gwa != other.gwa:
            raise SpecMismatchError("elements of different GWA rings")

    def __add__(self, other: GWAElem) -> GWAElem:
        self._check(other)
        terms = dict(self.terms)
        for e, p in other.terms.items():
            terms[e] = terms.get(e, self.gwa.sigma.ring.zero) + p
        return GWAElem(self.gwa, terms)

    def __neg__(self) -> GWAElem:
        return GWAElem(self.gwa, {e: -p for e, p in self.terms.items()})

    def __sub__(self, other: GWAElem) -> GWAElem:
        return self + (-other)

    def scale(self, c) -> GWAElem:
        """ Left multiplication by a scalar or a polynomial in t """
        sigma = self.gwa.sigma
        if isinstance(c, PolyElement):
            c = sigma.lift(c)
        else:
            c = sigma.ring(sigma.spec.field(c))
        return GWAElem(self.gwa, {e: c * p for e, p in self.terms.items()})

    def __mul__(self, other: GWAElem) -> GWAElem:
        """ (p·X^e)(q·X^f) = p·shift_e(q)·X^e·X^f """
        self._check(other)
        ring = self.gwa.sigma.ring
        terms: Dict[int, PolyElement] = {}
        for e, p in self.terms.items():
            for f, q in other.terms.items():
                coeff, g = self.gwa.join(e, f)
                value = p * self.gwa.shift(e, q) * coeff
                terms[g] = terms.get(g, ring.zero) + value
        return GWAElem(self.gwa, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GWAElem):
            return NotImplemented
        return self.gwa == other.gwa and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        field = self.gwa.sigma.spec.field
        pieces = []
        for e in sorted(self.terms):
            poly = format_poly(self.terms[e], field)
            if e == 0:
                pieces.append(poly)
                continue
            gen = 'Xp' if e > 0 else 'Xm'
            power = gen if abs(e) == 1 else f'{gen}^{abs(e)}'
            pieces.append(f'({poly})*{power}')
        return ' + '.join(pieces)

    def __repr__(self) -> str:
        return f"GWAElem({self})"

    def to_json(self) -> List[Dict[str, Any]]:
        field = self.gwa.sigma.spec.field
        return [{'X': e, 'poly': format_poly(self.terms[e], field)}
                for e in sorted(self.terms)]


def gwa_word(word: str, gwa: GWARing, assignment: Dict[str, int]) -> GWAElem:
    """ Image of a word over {u, d}, multiplied left to right """
    result = GWAElem(gwa, {0: gwa.sigma.ring.one})
    for letter in word:
        result = result * gwa.generator(assignment[letter])
    return result


def gwa_image(a: Element, gwa: GWARing,
              assignment: Dict[str, int]) -> GWAElem:
    """ Image of a normal-form element """
    result = GWAElem(gwa)
    for mono, c in a.items():
        image = gwa_word(mono.word(), gwa, assignment)
        t_part = Element.monomial(a.spec, 0, 0, 0, mono.m).terms[(0, 0, 0)]
        result = result + image.scale(t_part).scale(c)
    return result


def _gwa_rank(elements: List[GWAElem]) -> int:
    nonzero = [p for p in elements if p]
    if not nonzero:
        return 0
    columns: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    rows = {}
    for row, p in enumerate(nonzero):
        rows[row] = {columns.setdefault((e, monom), len(columns)): c
                     for e, poly in p.terms.items()
                     for monom, c in poly.terms()}
    domain = nonzero[0].gwa.sigma.spec.field.domain
    return DomainMatrix(rows, (len(nonzero), len(columns)), domain).rank()


def gwa_iso_check(spec: AlgebraSpec, maxdeg: int = 4) -> CheckResult:
    """ Realize A(α, β, φ) as R(σ, x), trying both conventions and both
    generator assignments

    For each combination the defining relations must map to 0, ud and
    du must map to x and σ(x), and the images of the PBW monomials of
    degree ≤ maxdeg must be linearly independent.

    Returns:
        A CheckResult that passes when some combination verifies; the
        details map each combination to its findings and name the
        verified ones.

    Raises:
        PreconditionError: If β = 0.
    """
    sigma = sigma_of(spec)
    sigma.require_inverse()
    x, sx = sigma.x, sigma.apply(sigma.x)
    monomials = [basis_element(spec, mono) for mono in pbw_basis(spec, maxdeg)]
    findings: Dict[str, Dict[str, bool]] = {}
    verified = []
    for convention in CONVENTIONS:
        gwa = GWARing(sigma, convention)
        for label, assignment in ASSIGNMENTS.items():
            word = lambda w: gwa_word(w, gwa, assignment)  # noqa: E731
            found = {
                'relations': all(not r for r in relation_images(spec, word)),
                'ud = x': word('ud') == GWAElem(gwa, {0: x}),
                'du = sigma(x)': word('du') == GWAElem(gwa, {0: sx}),
            }
            if all(found.values()):
                images = [gwa_image(a, gwa, assignment) for a in monomials]
                found['independent'] = _gwa_rank(images) == len(images)
            key = f'{convention}: {label}'
            findings[key] = found
            if all(found.values()):
                verified.append(key)

    rows = [[key] + [found.get(name, '-') for name in
                     ('relations', 'ud = x', 'du = sigma(x)', 'independent')]
            for key, found in findings.items()]
    LOG.debug("GWA conventions for %s:\n%s", spec, tt.to_string(
        rows, header=['combination', 'relations', 'ud = x', 'du = sigma(x)',
                      'independent']))
    if not verified:
        LOG.error("no GWA convention verifies for %s", spec)
    return CheckResult(bool(verified), witness=verified or None,
                       note=f"verified: {', '.join(verified) or 'none'}",
                       details={'findings': findings, 'verified': verified})
