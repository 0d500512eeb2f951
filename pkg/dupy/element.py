# -*- coding: utf-8 -*-
"""
Elements of a down-up algebra in PBW normal form.

An element is a finite combination of the basis monomials
u^i (du)^j d^k t₁^m₁…tₙ^mₙ. The t-part is kept as a polynomial in the
base ring, so an Element maps (i, j, k) to a nonzero polynomial.

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
from typing import (Any, Dict, Iterator, List, NamedTuple, Optional,
                    Sequence, Tuple)

import numpy as np
from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec, check_same_spec
from .coeff import FieldElem
from .library import exponent_vectors, ParseError, SpecMismatchError

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

Key = Tuple[int, int, int]


class PBWMonomial(NamedTuple):
    """ Exponents of u^i (du)^j d^k t^m """
    i: int
    j: int
    k: int
    m: Tuple[int, ...] = ()

    def degree(self, spec: AlgebraSpec) -> int:
        return spec.weighted_degree(self.i, self.j, self.k, self.m)

    def word(self) -> str:
        """ The u/d part as a word in the free algebra """
        return 'u' * self.i + 'du' * self.j + 'd' * self.k

    def sort_key(self, spec: AlgebraSpec) -> Tuple:
        return (self.degree(spec), self.i, self.j, self.k, self.m)

    def format(self) -> str:
        parts = []
        for name, e in (('u', self.i), ('(d*u)', self.j), ('d', self.k)):
            if e:
                parts.append(name if e == 1 else f'{name}^{e}')
        for index, e in enumerate(self.m, start=1):
            if e:
                parts.append(f't{index}' if e == 1 else f't{index}^{e}')
        return '*'.join(parts)


class Element:
    """ An element of A(α, β, φ) in PBW normal form

    Elements are immutable values. Arithmetic with ints, field
    elements and base-ring polynomials coerces them to constants;
    mixing elements of different specs raises SpecMismatchError.

    Attributes:
        spec: The algebra the element lives in.
        terms: Map (i, j, k) → nonzero polynomial in t₁..tₙ.
    """
    __slots__ = ('spec', 'terms')

    def __init__(self, spec: AlgebraSpec,
                 terms: Optional[Dict[Key, PolyElement]] = None):
        self.spec = spec
        self.terms: Dict[Key, PolyElement] = {
            key: poly for key, poly in (terms or {}).items() if poly}

    # === constructors ===
    @classmethod
    def zero(cls, spec: AlgebraSpec) -> Element:
        return cls(spec)

    @classmethod
    def one(cls, spec: AlgebraSpec) -> Element:
        return cls(spec, {(0, 0, 0): spec.ring.one})

    @classmethod
    def constant(cls, spec: AlgebraSpec, value) -> Element:
        """ A scalar or base-ring polynomial as an element """
        if isinstance(value, Element):
            check_same_spec(spec, value.spec)
            return value
        if isinstance(value, PolyElement):
            if value.ring != spec.ring:
                value = value.set_ring(spec.ring)
            return cls(spec, {(0, 0, 0): value})
        return cls(spec, {(0, 0, 0): spec.ring(spec.field(value))})

    @classmethod
    def monomial(cls, spec: AlgebraSpec, i: int, j: int, k: int,
                 m: Sequence[int] = (), coeff=1) -> Element:
        """ coeff · u^i (du)^j d^k t^m """
        m = tuple(m) or (0,) * spec.n
        if len(m) != spec.n:
            raise ValueError(f"exponent vector {m} does not have length "
                             f"n = {spec.n}")
        poly = spec.ring({m: spec.field(coeff)})
        return cls(spec, {(i, j, k): poly})

    # === arithmetic ===
    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            check_same_spec(self.spec, other.spec)
            return other
        return Element.constant(self.spec, other)

    def __add__(self, other) -> Element:
        other = self._coerce(other)
        terms = dict(self.terms)
        zero = self.spec.ring.zero
        for key, poly in other.terms.items():
            terms[key] = terms.get(key, zero) + poly
        return Element(self.spec, terms)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element(self.spec, {key: -p for key, p in self.terms.items()})

    def __sub__(self, other) -> Element:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Element:
        return self._coerce(other) - self

    def scale(self, c) -> Element:
        """ Multiply by a central scalar or base-ring polynomial """
        if isinstance(c, PolyElement):
            c = c if c.ring == self.spec.ring else c.set_ring(self.spec.ring)
        else:
            c = self.spec.ring(self.spec.field(c))
        return Element(self.spec, {key: p * c for key, p in self.terms.items()})

    def __mul__(self, other) -> Element:
        if not isinstance(other, Element):
            return self.scale(other)
        check_same_spec(self.spec, other.spec)
        return self.spec.rewriter.multiply(self, other)

    def __rmul__(self, other) -> Element:
        return self.scale(other)

    def __pow__(self, exponent: int) -> Element:
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = Element.one(self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            if self.spec != other.spec:
                return False
            return self.terms == other.terms
        try:
            return self == Element.constant(self.spec, other)
        except (TypeError, ParseError, SpecMismatchError):
            return NotImplemented

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # === inspection ===
    def items(self) -> Iterator[Tuple[PBWMonomial, FieldElem]]:
        """ (monomial, scalar) pairs in the canonical monomial order """
        flat = [(PBWMonomial(i, j, k, tuple(m)), c)
                for (i, j, k), poly in self.terms.items()
                for m, c in poly.terms()]
        flat.sort(key=lambda pair: pair[0].sort_key(self.spec))
        return iter(flat)

    def coefficient(self, i: int, j: int, k: int, m=()) -> FieldElem:
        poly = self.terms.get((i, j, k))
        if poly is None:
            return self.spec.field.zero
        m = tuple(m) or (0,) * self.spec.n
        return poly.get(m, self.spec.field.zero)

    def weighted_degree(self) -> Optional[int]:
        """ Maximal weighted degree, None for the zero element """
        degrees = [mono.degree(self.spec) for mono, _ in self.items()]
        return max(degrees) if degrees else None

    def leading(self) -> Tuple[PBWMonomial, FieldElem]:
        """ The maximal monomial in the canonical order and its scalar """
        if not self.terms:
            raise ValueError("zero has no leading monomial")
        return list(self.items())[-1]

    def is_scalar(self) -> bool:
        return set(self.terms) <= {(0, 0, 0)} and all(
            p.is_ground for p in self.terms.values())

    # === text and JSON ===
    def __str__(self) -> str:
        pieces = [(c, mono.format()) for mono, c in self.items()]
        return self.spec.field.format_terms(pieces)

    def __repr__(self) -> str:
        return f"Element({self})"

    def to_json(self) -> List[Dict[str, Any]]:
        """ JSON list of {u, du, d, t, coeff} in canonical order """
        fmt = self.spec.field.format
        return [{'u': mono.i, 'du': mono.j, 'd': mono.k, 't': list(mono.m),
                 'coeff': fmt(c)} for mono, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Dict[str, Any]],
                  spec: AlgebraSpec) -> Element:
        result = Element.zero(spec)
        for entry in data:
            try:
                mono = Element.monomial(spec, int(entry['u']),
                                        int(entry['du']), int(entry['d']),
                                        tuple(entry.get('t', ())),
                                        spec.field.parse(entry['coeff']))
            except KeyError as e:
                raise ParseError(f"missing key {e} in {entry}") from e
            result = result + mono
        return result


def elem_add(a: Element, b: Element) -> Element:
    return a + b


def elem_scale(c, a: Element) -> Element:
    return a.scale(c)


def elem_eq(a: Element, b: Element) -> bool:
    check_same_spec(a.spec, b.spec)
    return a == b


def elem_mul(a: Element, b: Element) -> Element:
    """ Product in normal form; raises SpecMismatchError across specs """
    if a.spec != b.spec:
        raise SpecMismatchError(f"cannot multiply elements of {a.spec} "
                                f"and {b.spec}")
    return a * b


def commutator(a: Element, b: Element) -> Element:
    """ ab - ba """
    return elem_mul(a, b) - elem_mul(b, a)


def pbw_basis(spec: AlgebraSpec, maxdeg: int) -> List[PBWMonomial]:
    """ All PBW monomials of weighted degree ≤ maxdeg, canonically sorted """
    w = spec.weight
    out = []
    for i in range(maxdeg // w + 1):
        for j in range((maxdeg - w * i) // (2 * w) + 1):
            for k in range((maxdeg - w * (i + 2 * j)) // w + 1):
                rest = maxdeg - w * (i + 2 * j + k)
                for m in exponent_vectors(spec.n, rest):
                    out.append(PBWMonomial(i, j, k, m))
    out.sort(key=lambda mono: mono.sort_key(spec))
    return out


def basis_element(spec: AlgebraSpec, mono: PBWMonomial) -> Element:
    return Element.monomial(spec, mono.i, mono.j, mono.k, mono.m)


def random_word(spec: AlgebraSpec, length: int,
                rng: np.random.Generator) -> str:
    """ A random word over {u, d} of exactly `length` letters """
    letters = rng.choice(['u', 'd'], size=length)
    return ''.join(letters)


def random_scalar(spec: AlgebraSpec, rng: np.random.Generator,
                  height: int = 3) -> FieldElem:
    """ A random nonzero scalar with small numerators

    Cyclotomic fields get random small coordinates in the power basis.
    """
    field = spec.field
    size = len(field.coefficients(field.one)) if not field.arity else 1
    while True:
        coords = rng.integers(-height, height + 1, size=size)
        value = field.from_coefficients([int(c) for c in coords])
        if not field.is_zero(value):
            return value


def random_element(spec: AlgebraSpec, terms: int, maxdeg: int,
                   rng: np.random.Generator,
                   nonzero: bool = False) -> Element:
    """ A random combination of at most `terms` basis monomials

    Args:
        spec: The algebra.
        terms: Number of monomials drawn (repeats are merged).
        maxdeg: Bound on the weighted degree of each monomial.
        rng: Source of randomness.
        nonzero: Redraw until the result is nonzero.
    """
    basis = pbw_basis(spec, maxdeg)
    while True:
        result = Element.zero(spec)
        for index in rng.integers(0, len(basis), size=terms):
            mono = basis[int(index)]
            result = result + Element.monomial(
                spec, mono.i, mono.j, mono.k, mono.m,
                random_scalar(spec, rng))
        if result or not nonzero:
            return result


# left-hand word and the α, β, φ words of each defining relation
RELATION_WORDS = (('ddu', 'dud', 'udd', 'd'),
                  ('duu', 'udu', 'uud', 'u'))


def relation_images(spec: AlgebraSpec, image_of_word,
                    phi_image=None) -> List:
    """ Images of d²u - αdud - βud² - φd and du² - αudu - βu²d - φu

    Args:
        spec: The algebra whose relations are mapped.
        image_of_word: Maps a word over {u, d} to its image; images must
            support subtraction and ``scale``.
        phi_image: Image of φ multiplied from the left. Defaults to
            scaling by φ itself, for maps that fix the tᵢ.
    """
    out = []
    for lead, w1, w2, w3 in RELATION_WORDS:
        last = image_of_word(w3)
        last = last.scale(spec.phi) if phi_image is None \
            else phi_image * last
        out.append(image_of_word(lead) - image_of_word(w1).scale(spec.alpha)
                   - image_of_word(w2).scale(spec.beta) - last)
    return out
