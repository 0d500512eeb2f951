# -*- coding: utf-8 -*-
"""
The skew Laurent ring S = R[z, z⁻¹; σ] over R = K[x, y, t₁..tₙ] and the
embedding θ of a down-up algebra into it.

Elements of S are written Σ z^k·r_k with z-powers on the left, and
r·z = z·σ(r). θ sends u ↦ xz, d ↦ z⁻¹ and fixes the tᵢ.

---

This file is part of dupy, a python toolkit for down-up algebras
over polynomial base rings.

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
from __future__ import annotations
import logging
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement
from tqdm import tqdm

from .algebraspec import AlgebraSpec
from .coeff import format_poly, parse_polynomial
from .constants import THETA_MAXDEG, THETA_PAIRS
from .element import Element, random_element, relation_images
from .library import (CheckResult, ParseError, PreconditionError,
                      SpecMismatchError, exponent_vectors)

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


class SigmaAut:
    """ The automorphism σ of R = K[x, y, t₁..tₙ]

    x ↦ y, tᵢ ↦ tᵢ, and y ↦ βx + αy + φ in the consistent reading or
    y ↦ αx + βy + φ as printed. The inverse exists when the coefficient
    of x in σ(y) is nonzero.

    Attributes:
        spec: The down-up algebra σ is built from.
        reading: 'consistent' or 'as_printed'.
        ring: The sympy polynomial ring R.
    """
    READINGS = ('consistent', 'as_printed')

    def __init__(self, spec: AlgebraSpec, reading: str = 'consistent'):
        if reading not in self.READINGS:
            raise ValueError(f"unknown reading {reading!r}, "
                             f"expected one of {self.READINGS}")
        self.spec = spec
        self.reading = reading
        names = ('x', 'y') + tuple(f't{i}' for i in range(1, spec.n + 1))
        self.ring = spec.field.ring(names)
        self.x, self.y = self.ring.gens[:2]
        self.phi = spec.phi.set_ring(self.ring)
        if reading == 'consistent':
            self.cx, self.cy = spec.beta, spec.alpha
        else:
            self.cx, self.cy = spec.alpha, spec.beta
        x, y = self.x, self.y
        self.forward = [(x, y), (y, x * self.cx + y * self.cy + self.phi)]
        self.backward = None
        if self.invertible:
            inv = spec.field.inv(self.cx)
            self.backward = [(x, (y - x * self.cy - self.phi) * inv),
                             (y, x)]

    @property
    def invertible(self) -> bool:
        return not self.spec.field.is_zero(self.cx)

    def require_inverse(self) -> None:
        if not self.invertible:
            coefficient = 'beta' if self.reading == 'consistent' else 'alpha'
            raise PreconditionError(f"sigma is not invertible: {coefficient}"
                                    f" = 0 ({self.reading} reading)")

    def __call__(self, p: PolyElement, power: int = 1) -> PolyElement:
        return self.apply(p, power)

    def apply(self, p: PolyElement, power: int = 1) -> PolyElement:
        """ σ^power(p); negative powers apply σ⁻¹ """
        if power < 0:
            self.require_inverse()
            images = self.backward
        else:
            images = self.forward
        for _ in range(abs(power)):
            p = p.compose(images)
        return p

    def lift(self, poly: PolyElement) -> PolyElement:
        """ A polynomial in t₁..tₙ as an element of R """
        return poly.set_ring(self.ring)

    def inverse_check(self) -> bool:
        """ σ∘σ⁻¹ and σ⁻¹∘σ fix x, y and the tᵢ """
        self.require_inverse()
        return all(self.apply(self.apply(g, -1)) == g and
                   self.apply(self.apply(g), -1) == g
                   for g in self.ring.gens)


@lru_cache(maxsize=64)
def sigma_of(spec: AlgebraSpec, reading: str = 'consistent') -> SigmaAut:
    return SigmaAut(spec, reading)


class SkewLaurentElem:
    """ Σ z^k·r_k in S = R[z, z⁻¹; σ], kept as k → nonzero r_k """
    __slots__ = ('sigma', 'terms')

    def __init__(self, sigma: SigmaAut,
                 terms: Optional[Dict[int, PolyElement]] = None):
        self.sigma = sigma
        self.terms = {k: p for k, p in (terms or {}).items() if p}

    @classmethod
    def from_poly(cls, sigma: SigmaAut, p: PolyElement,
                  k: int = 0) -> SkewLaurentElem:
        """ z^k·p """
        return cls(sigma, {k: p})

    @classmethod
    def one(cls, sigma: SigmaAut) -> SkewLaurentElem:
        return cls(sigma, {0: sigma.ring.one})

    def _check(self, other: SkewLaurentElem) -> None:
        if self.sigma.spec != other.sigma.spec or \
                self.sigma.reading != other.sigma.reading:
            raise SpecMismatchError("skew Laurent elements of different "
                                    "rings")

    def __add__(self, other: SkewLaurentElem) -> SkewLaurentElem:
        self._check(other)
        terms = dict(self.terms)
        for k, p in other.terms.items():
            terms[k] = terms.get(k, self.sigma.ring.zero) + p
        return SkewLaurentElem(self.sigma, terms)

    def __neg__(self) -> SkewLaurentElem:
        return SkewLaurentElem(self.sigma,
                               {k: -p for k, p in self.terms.items()})

    def __sub__(self, other: SkewLaurentElem) -> SkewLaurentElem:
        return self + (-other)

    def scale(self, c) -> SkewLaurentElem:
        """ Multiply by a σ-fixed coefficient (a scalar or a polynomial in t)
        """
        if isinstance(c, PolyElement):
            c = self.sigma.lift(c)
        else:
            c = self.sigma.ring(self.sigma.spec.field(c))
        return SkewLaurentElem(self.sigma,
                               {k: p * c for k, p in self.terms.items()})

    def __mul__(self, other: SkewLaurentElem) -> SkewLaurentElem:
        return skew_mul(self, other)

    def __pow__(self, exponent: int) -> SkewLaurentElem:
        result = SkewLaurentElem.one(self.sigma)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewLaurentElem):
            return NotImplemented
        return self.sigma.spec == other.sigma.spec and \
            self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        field = self.sigma.spec.field
        pieces = []
        for k in sorted(self.terms):
            poly = format_poly(self.terms[k], field)
            z = '' if k == 0 else ('z' if k == 1 else
                                   f'z^{k}' if k > 0 else f'z^({k})')
            if not z:
                pieces.append(poly)
            else:
                pieces.append(f'{z}*({poly})')
        return ' + '.join(pieces)

    def __repr__(self) -> str:
        return f"SkewLaurentElem({self})"

    def to_json(self) -> List[Dict[str, Any]]:
        field = self.sigma.spec.field
        return [{'z': k, 'poly': format_poly(self.terms[k], field)}
                for k in sorted(self.terms)]

    @classmethod
    def from_json(cls, data: Iterable[Dict[str, Any]],
                  sigma: SigmaAut) -> SkewLaurentElem:
        terms: Dict[int, PolyElement] = {}
        for entry in data:
            try:
                k, text = int(entry['z']), entry['poly']
            except KeyError as e:
                raise ParseError(f"missing key {e} in {entry}") from e
            poly = parse_polynomial(text, sigma.ring, sigma.spec.field)
            terms[k] = terms.get(k, sigma.ring.zero) + poly
        return cls(sigma, terms)


def skew_mul(p: SkewLaurentElem, q: SkewLaurentElem) -> SkewLaurentElem:
    """ Product in S: (z^a·f)(z^b·g) = z^(a+b)·σ^b(f)·g

    Raises:
        SpecMismatchError: If p and q live in different rings.
        PreconditionError: If a negative z-power meets a non-invertible σ.
    """
    p._check(q)
    sigma = p.sigma
    terms: Dict[int, PolyElement] = {}
    for b, g in q.terms.items():
        if b < 0:
            sigma.require_inverse()
        for a, f in p.terms.items():
            value = sigma.apply(f, b) * g
            terms[a + b] = terms.get(a + b, sigma.ring.zero) + value
    return SkewLaurentElem(sigma, terms)


def _theta_generators(sigma: SigmaAut) -> Dict[str, SkewLaurentElem]:
    """ Images of u, d and du; xz is z·σ(x) = z·y in normal form """
    return {'u': SkewLaurentElem.from_poly(sigma, sigma.y, 1),
            'd': SkewLaurentElem.from_poly(sigma, sigma.ring.one, -1),
            'du': SkewLaurentElem.from_poly(sigma, sigma.y)}


def _require_theta(spec: AlgebraSpec, sigma: Optional[SigmaAut]) -> SigmaAut:
    sigma = sigma_of(spec) if sigma is None else sigma
    sigma.require_inverse()
    return sigma


def theta_word(word: str, spec: AlgebraSpec,
               sigma: Optional[SigmaAut] = None) -> SkewLaurentElem:
    """ θ of a word over {u, d} of the free algebra """
    sigma = _require_theta(spec, sigma)
    gens = _theta_generators(sigma)
    result = SkewLaurentElem.one(sigma)
    for letter in word:
        result = result * gens[letter]
    return result


def theta(a: Element, sigma: Optional[SigmaAut] = None) -> SkewLaurentElem:
    """ The image of a under u ↦ xz, d ↦ z⁻¹, tᵢ ↦ tᵢ

    Raises:
        PreconditionError: If β = 0, where σ is not invertible.
    """
    sigma = _require_theta(a.spec, sigma)
    gens = _theta_generators(sigma)
    result = SkewLaurentElem(sigma)
    for (i, j, k), poly in a.terms.items():
        image = gens['u']**i * gens['du']**j * gens['d']**k
        result = result + image.scale(poly)
    return result


def skew_rank(elements: Sequence[SkewLaurentElem]) -> int:
    """ Dimension over K of the span of the elements """
    nonzero = [p for p in elements if p]
    if not nonzero:
        return 0
    columns: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    rows = {}
    for row, p in enumerate(nonzero):
        entries = {}
        for k, poly in p.terms.items():
            for monom, c in poly.terms():
                entries[columns.setdefault((k, monom), len(columns))] = c
        rows[row] = entries
    domain = nonzero[0].sigma.spec.field.domain
    return DomainMatrix(rows, (len(nonzero), len(columns)), domain).rank()


def spanning_set(spec: AlgebraSpec, maxdeg: int
                 ) -> List[Tuple[Element, Tuple[str, int, int, int, Tuple]]]:
    """ (ud)^i (du)^j d^k t^m and (ud)^i (du)^j u^(k+1) t^m of degree ≤ maxdeg

    Each element comes with its shape ('d' or 'u', i, j, k, m).
    """
    w = spec.weight
    ud = Element.monomial(spec, 1, 0, 1)
    du = Element.monomial(spec, 0, 1, 0)
    out = []
    for i in range(maxdeg // (2 * w) + 1):
        for j in range((maxdeg - 2 * w * i) // (2 * w) + 1):
            base = ud**i * du**j
            rest = maxdeg - 2 * w * (i + j)
            for k in range(rest // w + 1):
                for m in exponent_vectors(spec.n, rest - w * k):
                    t = Element.monomial(spec, 0, 0, 0, m)
                    out.append((base * spec.d**k * t, ('d', i, j, k, m)))
            for k in range(rest // w):
                for m in exponent_vectors(spec.n, rest - w * (k + 1)):
                    t = Element.monomial(spec, 0, 0, 0, m)
                    out.append((base * spec.u**(k + 1) * t,
                                ('u', i, j, k, m)))
    return out


def image_formula(spec: AlgebraSpec, shape, sigma: SigmaAut
                  ) -> SkewLaurentElem:
    """ x^i y^j z^(-k) t^m or x^i y^j (xz)^(k+1) t^m, multiplied out in S """
    kind, i, j, k, m = shape
    ring = sigma.ring
    poly = ring({(i, j) + tuple(m): spec.field.one})
    left = SkewLaurentElem.from_poly(sigma, poly)
    gens = _theta_generators(sigma)
    if kind == 'd':
        return left * gens['d']**k
    return left * gens['u']**(k + 1)


def image_formula_check(spec: AlgebraSpec, maxdeg: int = 4) -> CheckResult:
    """ θ of each spanning monomial equals its closed-form image """
    sigma = _require_theta(spec, None)
    for element, shape in spanning_set(spec, maxdeg):
        if theta(element, sigma) != image_formula(spec, shape, sigma):
            return CheckResult(False, witness=element,
                               note=f"image of shape {shape} differs")
    return CheckResult(True, note=f"image formula up to degree {maxdeg}")


def theta_check(spec: AlgebraSpec, maxdeg: int = THETA_MAXDEG,
                pairs: int = THETA_PAIRS,
                rng: Optional[np.random.Generator] = None) -> CheckResult:
    """ θ kills the relations, is multiplicative and injective in degree ≤
    maxdeg

    Checks (a) both defining relations map to 0, (b) θ(ab) = θ(a)θ(b)
    on random pairs of degree ≤ 3, (c) the spanning set of degree
    ≤ maxdeg has linearly independent images.

    Raises:
        PreconditionError: If β = 0.
    """
    sigma = _require_theta(spec, None)
    rng = np.random.default_rng(0) if rng is None else rng
    details: Dict[str, Any] = {}

    relations = relation_images(spec, lambda w: theta_word(w, spec, sigma))
    details['relations'] = all(not r for r in relations)

    details['multiplicative'] = True
    for _ in tqdm(range(pairs), disable=not LOG.isEnabledFor(logging.INFO)):
        a = random_element(spec, 3, 3, rng)
        b = random_element(spec, 3, 3, rng)
        if theta(a * b, sigma) != theta(a, sigma) * theta(b, sigma):
            details['multiplicative'] = False
            details['witness'] = (str(a), str(b))
            break

    images = [theta(e, sigma) for e, _ in spanning_set(spec, maxdeg)]
    found = skew_rank(images)
    details['independent'] = found == len(images)
    details['rank'] = found
    details['size'] = len(images)
    ok = details['relations'] and details['multiplicative'] and \
        details['independent']
    return CheckResult(ok, note=f"theta up to degree {maxdeg}",
                       details=details)


def sigma_reading_check(spec: AlgebraSpec) -> CheckResult:
    """ Which readings of σ send both defining relations to 0 under θ

    The check passes when the consistent reading does.
    """
    details: Dict[str, Any] = {}
    for reading in SigmaAut.READINGS:
        sigma = sigma_of(spec, reading)
        if not sigma.invertible:
            details[reading] = 'not invertible'
            continue
        relations = relation_images(
            spec, lambda w: theta_word(w, spec, sigma))
        details[reading] = all(not r for r in relations)
    LOG.info("sigma readings for %s: %s", spec, details)
    return CheckResult(details['consistent'] is True,
                       note="sigma readings", details=details)
