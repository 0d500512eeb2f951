# -*- coding: utf-8 -*-
"""
Algebra maps given by generator images, and their verification.

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
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec, check_same_spec
from .element import Element, commutator, relation_images
from .library import ArityError, CheckResult

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


@dataclass
class GenImages:
    """ Images of u, d, t₁..tₙ of `source` as elements of `target`

    Nothing is assumed about the images; :func:`hom_check` decides
    whether they define a homomorphism.
    """
    source: AlgebraSpec
    target: AlgebraSpec
    u: Element
    d: Element
    t: List[Element] = field(default_factory=list)

    def __post_init__(self):
        if len(self.t) != self.source.n:
            raise ArityError(f"{len(self.t)} images for t, expected "
                             f"n = {self.source.n}")
        for image in [self.u, self.d] + list(self.t):
            check_same_spec(self.target, image.spec)

    def letter(self, name: str) -> Element:
        if name == 'u':
            return self.u
        if name == 'd':
            return self.d
        return self.t[int(name[1:]) - 1]

    def word(self, word: str) -> Element:
        """ Image of a word over {u, d} """
        result = Element.one(self.target)
        for name in word:
            result = result * self.letter(name)
        return result

    def base(self, poly: PolyElement) -> Element:
        """ Image of a polynomial in t₁..tₙ """
        result = Element.zero(self.target)
        for monom, c in poly.terms():
            term = Element.constant(self.target, c)
            for image, e in zip(self.t, monom):
                term = term * image**e
            result = result + term
        return result

    def __str__(self) -> str:
        parts = [f"u -> {self.u}", f"d -> {self.d}"]
        parts += [f"t{i} -> {image}" for i, image in enumerate(self.t, 1)]
        return ", ".join(parts)

    def to_json(self) -> Dict[str, Any]:
        return {'u': str(self.u), 'd': str(self.d),
                't': [str(image) for image in self.t]}


def identity_images(spec: AlgebraSpec) -> GenImages:
    return GenImages(spec, spec, spec.u, spec.d,
                     [spec.t(i) for i in range(1, spec.n + 1)])


def apply_morphism(images: GenImages, a: Element) -> Element:
    """ Substitute the generator images into a and normalize

    Raises:
        SpecMismatchError: If a does not live in the source algebra.
    """
    check_same_spec(images.source, a.spec)
    powers: Dict[str, List[Element]] = {}

    def power(name: str, e: int) -> Element:
        cached = powers.setdefault(name, [Element.one(images.target)])
        while len(cached) <= e:
            cached.append(cached[-1] * images.letter(name))
        return cached[e]

    du = images.d * images.u
    result = Element.zero(images.target)
    for (i, j, k), poly in a.terms.items():
        head = power('u', i) * du**j * power('d', k)
        result = result + head * images.base(poly)
    return result


def hom_check(images: GenImages,
              source: Optional[AlgebraSpec] = None) -> CheckResult:
    """ Whether the images satisfy every defining relation of the source

    This covers both down-up relations and the centrality of the tᵢ.
    On failure the first nonzero image is the witness.
    """
    source = images.source if source is None else source
    check_same_spec(source, images.source)
    phi = images.base(source.phi)
    first, second = relation_images(source, images.word, phi_image=phi)
    for name, value in (('d^2*u relation', first), ('d*u^2 relation', second)):
        if value:
            return CheckResult(False, witness=value, note=name)
    gens = [('u', images.u), ('d', images.d)]
    gens += [(f't{i}', image) for i, image in enumerate(images.t, 1)]
    for i, t in enumerate(images.t, 1):
        for name, g in gens:
            if name == f't{i}':
                continue
            value = commutator(t, g)
            if value:
                return CheckResult(False, witness=value,
                                   note=f"[t{i}, {name}] image")
    return CheckResult(True, note="homomorphism")


def compose_morphisms(first: GenImages, second: GenImages) -> GenImages:
    """ second ∘ first """
    check_same_spec(first.target, second.source)
    return GenImages(first.source, second.target,
                     apply_morphism(second, first.u),
                     apply_morphism(second, first.d),
                     [apply_morphism(second, image) for image in first.t])
