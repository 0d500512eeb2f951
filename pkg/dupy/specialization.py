# -*- coding: utf-8 -*-
"""
Passage to classical down-up algebras: specialization tᵢ ↦ λᵢ and
localization at the nonzero polynomials in t.
"""
from __future__ import annotations
import logging
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec, check_same_spec
from .coeff import Field, FieldElem
from .constants import MAX_WORD_LENGTH, SPECIALIZE_PAIRS
from .element import Element, random_element, random_word
from .library import (ArityError, CheckResult, DivisionByZeroError,
                      UnsupportedError)

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


def _evaluate(poly: PolyElement, point: Sequence[FieldElem],
              field: Field) -> FieldElem:
    """ poly(point) in the field """
    value = field.zero
    for monom, c in poly.terms():
        term = field(c) if not field.domain.of_type(c) else c
        for x, e in zip(point, monom):
            term = term * field.pow(x, e)
        value = value + term
    return value


def _check_point(spec: AlgebraSpec, point: Sequence) -> Tuple[FieldElem, ...]:
    if len(point) != spec.n:
        raise ArityError(f"expected {spec.n} values for t1..t{spec.n}, "
                         f"got {len(point)}")
    return tuple(spec.field(x) for x in point)


def specialized_spec(spec: AlgebraSpec, point: Sequence) -> AlgebraSpec:
    """ The classical spec A(α, β, φ(λ)) for tᵢ = λᵢ

    Raises:
        ArityError: If the point does not have n coordinates.
    """
    point = _check_point(spec, point)
    return _specialized(spec, tuple(spec.field.format(x) for x in point))


@lru_cache(maxsize=128)
def _specialized(spec: AlgebraSpec, values: Tuple[str, ...]) -> AlgebraSpec:
    point = tuple(spec.field(v) for v in values)
    gamma = _evaluate(spec.phi, point, spec.field)
    name = f"{spec.name}|t=({', '.join(values)})" if spec.name else ''
    return AlgebraSpec(0, spec.field, spec.alpha, spec.beta, gamma,
                       r=spec.r, s=spec.s, name=name)


def specialize(a: Element, point: Sequence
               ) -> Tuple[Element, AlgebraSpec]:
    """ Substitute tᵢ = λᵢ into a

    Returns:
        The image and the classical spec it lives in.
    Raises:
        ArityError: If the point does not have n coordinates.
    """
    target = specialized_spec(a.spec, point)
    point = _check_point(a.spec, point)
    terms = {key: target.ring(_evaluate(poly, point, a.spec.field))
             for key, poly in a.terms.items()}
    return Element(target, terms), target


def specialize_check(spec: AlgebraSpec, point: Sequence,
                     pairs: int = SPECIALIZE_PAIRS, maxdeg: int = 3,
                     rng: Optional[np.random.Generator] = None
                     ) -> CheckResult:
    """ Specialization is multiplicative on random pairs and commutes
    with reducing random words """
    rng = np.random.default_rng(0) if rng is None else rng
    target = specialized_spec(spec, point)
    for _ in range(pairs):
        a = random_element(spec, 3, maxdeg, rng)
        b = random_element(spec, 3, maxdeg, rng)
        left, _ = specialize(a * b, point)
        right = specialize(a, point)[0] * specialize(b, point)[0]
        if left != right:
            return CheckResult(False, witness=(a, b),
                               note="specialization is not multiplicative")
    for _ in range(pairs):
        word = random_word(spec, int(rng.integers(1, MAX_WORD_LENGTH + 1)),
                           rng)
        image, _ = specialize(spec.rewriter.apply(word), point)
        if image != target.rewriter.apply(word):
            return CheckResult(False, witness=word,
                               note="specialization does not commute with "
                                    "reduction")
    return CheckResult(True, note=f"{pairs} random pairs and words into "
                                  f"{target}")


def localize_spec(spec: AlgebraSpec) -> AlgebraSpec:
    """ The classical spec over K(t₁..tₙ) with γ = φ

    Raises:
        UnsupportedError: For cyclotomic base fields.
    """
    if spec.field.arity:
        return spec
    if spec.field.domain is not QQ:
        raise UnsupportedError("localization is implemented over QQ only")
    target = Field('rational_function', arity=spec.n)

    def lift(x: FieldElem) -> FieldElem:
        return target.from_rational(QQ.convert(spec.field.rational_value(x)))

    r = None if spec.r is None else lift(spec.r)
    s = None if spec.s is None else lift(spec.s)
    gamma = _to_function(spec.phi, target)
    name = f"{spec.name}|localized" if spec.name else ''
    return AlgebraSpec(0, target, lift(spec.alpha), lift(spec.beta), gamma,
                       r=r, s=s, name=name)


def _to_function(poly: PolyElement, target: Field) -> FieldElem:
    gens = list(target.scalar_names().values())
    value = target.zero
    for monom, c in poly.terms():
        term = target.from_rational(QQ.convert(c))
        for g, e in zip(gens, monom):
            term = term * g**e
        value = value + term
    return value


def localize(a: Element, target: Optional[AlgebraSpec] = None) -> Element:
    """ Re-express a with coefficients in K(t₁..tₙ) """
    target = localize_spec(a.spec) if target is None else target
    if a.spec.field.arity:
        check_same_spec(target, a.spec)
        return a
    terms = {key: target.ring(_to_function(poly, target.field))
             for key, poly in a.terms.items()}
    return Element(target, terms)


def specialize_localized(a: Element, point: Sequence
                         ) -> Tuple[Element, AlgebraSpec]:
    """ Evaluate the K(t) coefficients of a localized element at a point

    Raises:
        ArityError: If the point does not match the field's arity.
        DivisionByZeroError: If a denominator vanishes at the point.
    """
    spec = a.spec
    field = spec.field
    if len(point) != field.arity:
        raise ArityError(f"expected {field.arity} values, got {len(point)}")
    point = tuple(QQ.convert(x) for x in point)

    def at(x: FieldElem):
        if not field.arity:
            return x
        denom = _evaluate(x.denom, point, Field('rational'))
        if not denom:
            raise DivisionByZeroError(f"{field.format(x)} has a pole at "
                                      f"{point}")
        return _evaluate(x.numer, point, Field('rational')) / denom

    base = Field('rational')
    r = None if spec.r is None else at(spec.r)
    s = None if spec.s is None else at(spec.s)
    gamma = at(spec.phi.get(spec.ring.zero_monom, field.zero))
    target = AlgebraSpec(0, base, at(spec.alpha), at(spec.beta), gamma,
                         r=r, s=s)
    terms = {key: target.ring(at(poly.get(spec.ring.zero_monom,
                                          field.zero)))
             for key, poly in a.terms.items()}
    return Element(target, terms), target
