# -*- coding: utf-8 -*-
"""
Isomorphisms between down-up algebras over K[t] (n = 1).

Two algebras with multiplicatively independent root pairs are
isomorphic exactly when the pairs match up to order or inversion and
the φ are affinely equivalent, φ₁(at + b) = η·φ₂(t).

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
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec
from .coeff import (Field, FieldElem, mult_dependence, poly_substitute_affine,
                    polynomial_roots, rational_grid)
from .constants import AFFINE_GRID_HEIGHT, AFFINE_PAIRS
from .element import Element
from .library import (ArityError, CheckResult, SpecMismatchError,
                      UndecidedError, UnsupportedError)
from .morphism import GenImages, hom_check

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

Affine = Tuple[FieldElem, FieldElem, FieldElem]


def _univariate(p: PolyElement) -> None:
    if p.ring.ngens != 1:
        raise ArityError(f"expected a univariate polynomial, "
                         f"got {p.ring.ngens} variables")


def _coefficients(p: PolyElement) -> List[FieldElem]:
    """ Coefficients of p, lowest degree first """
    zero = p.ring.domain.zero
    return [p.get((k,), zero) for k in range(p.degree() + 1)]


def _depress(p: PolyElement, field: Field) -> Tuple[FieldElem, PolyElement]:
    """ h and ψ(t) = p(t + h) with vanishing subleading coefficient """
    n = p.degree()
    coeffs = _coefficients(p)
    h = field.div(-coeffs[n - 1], field(n) * coeffs[n])
    return h, poly_substitute_affine(p, field.one, h)


def verify_affine(phi1: PolyElement, phi2: PolyElement, a: FieldElem,
                  b: FieldElem) -> Optional[FieldElem]:
    """ η with φ₁(at + b) = η·φ₂(t), or None """
    moved = poly_substitute_affine(phi1, a, b)
    if not phi2:
        return phi2.ring.domain.one if not moved else None
    eta = moved.LC / phi2.LC
    if not eta or moved != phi2 * eta:
        return None
    return eta


def _preference(candidate: Affine, field: Field) -> Tuple:
    """ Smaller a-denominator first, then smaller |b| """
    _, a, b = candidate
    qa, qb = field.rational_value(a), field.rational_value(b)
    return (qa is None, QQ.denom(qa) if qa is not None else 0,
            qb is None, abs(qb) if qb is not None else 0,
            field.sort_key(a), field.sort_key(b))


def _bezout(gaps: List[int]) -> List[int]:
    """ Integers x with Σ xₖ·gapsₖ = gcd(gaps) """
    xs = [1]
    g = gaps[0]
    for gap in gaps[1:]:
        x, y, g = (int(v) for v in ZZ.gcdex(ZZ(g), ZZ(gap)))
        xs = [c * x for c in xs] + [y]
    return xs


def affine_equiv(phi1: PolyElement, phi2: PolyElement,
                 field: Field) -> Optional[Affine]:
    """ Decide whether φ₁(at + b) = η·φ₂(t) for some η, a ≠ 0 and b

    Both polynomials are depressed by the shift that kills their
    subleading coefficient, which pins b = h₁ - a·h₂. The remaining
    equations e₁ₖ·a^k = η·e₂ₖ fix a^(n-k) for every supported k, hence
    a^g for the gcd g of the exponent gaps; a is then a g-th root found
    by factoring over the field. Every candidate is verified by
    substitution.

    Args:
        phi1, phi2: Univariate polynomials over the same ring.
        field: The coefficient field of that ring.
    Returns:
        (η, a, b) with the smallest a-denominator, then the smallest
        |b|, or None when no such triple exists.
    Raises:
        ArityError: If a polynomial is not univariate.
        UndecidedError: If the g-th roots cannot be extracted in the
            field.
    """
    _univariate(phi1)
    _univariate(phi2)
    if phi1.ring != phi2.ring:
        phi2 = phi2.set_ring(phi1.ring)
    one, zero = field.one, field.zero
    if not phi1 or not phi2:
        return (one, one, zero) if not phi1 and not phi2 else None
    n = phi1.degree()
    if n != phi2.degree():
        return None
    if n == 0:
        return field.div(phi1.LC, phi2.LC), one, zero

    h1, psi1 = _depress(phi1, field)
    h2, psi2 = _depress(phi2, field)
    e1, e2 = _coefficients(psi1), _coefficients(psi2)
    support = [k for k in range(n) if e1[k]]
    if support != [k for k in range(n) if e2[k]]:
        return None

    if not support:
        values = [one]
        if h1 and h2:
            values.append(field.div(h1, h2))
    else:
        gaps = [n - k for k in support]
        ratios = [field.div(e1[k] * e2[n], e1[n] * e2[k]) for k in support]
        g = reduce(gcd, gaps)
        c = one
        for ratio, x in zip(ratios, _bezout(gaps)):
            c = c * field.pow(ratio, x)
        try:
            values = polynomial_roots([one] + [zero] * (g - 1) + [-c], field)
        except UnsupportedError as e:
            raise UndecidedError(f"cannot extract a {g}-th root of "
                                 f"{field.format(c)} in {field}") from e

    candidates = []
    for a in values:
        if field.is_zero(a):
            continue
        b = h1 - a * h2
        eta = verify_affine(phi1, phi2, a, b)
        if eta is not None:
            candidates.append((eta, a, b))
    if not candidates:
        return None
    return min(candidates, key=lambda c: _preference(c, field))


def affine_equiv_bruteforce(phi1: PolyElement, phi2: PolyElement,
                            height: int = AFFINE_GRID_HEIGHT
                            ) -> Optional[Affine]:
    """ Search a, b and η over the rationals p/q with |p|, q ≤ height

    Only meant as an oracle for :func:`affine_equiv` over ℚ.
    """
    grid = rational_grid(height)
    etas = set(grid)
    for a in grid:
        for b in [QQ.zero] + grid:
            eta = verify_affine(phi1, phi2, a, b)
            if eta is not None and (eta in etas or not phi2):
                return eta, a, b
    return None


def _random_poly(ring, rng: np.random.Generator, degree: int,
                 height: int) -> PolyElement:
    t = ring.gens[0]
    p = ring.zero
    for k in range(degree + 1):
        p += int(rng.integers(-height, height + 1)) * t**k
    return p


def affine_agreement_check(count: int = AFFINE_PAIRS,
                           height: int = AFFINE_GRID_HEIGHT,
                           rng: Optional[np.random.Generator] = None
                           ) -> CheckResult:
    """ affine_equiv against the grid oracle on random rational instances

    Half of the pairs are random polynomials of degree ≤ 3 with integer
    coefficients of height ≤ `height`; the other half are built as
    φ₁(x) = η·φ₂((x - b)/a) from grid values, so they are equivalent.
    Every answer of affine_equiv must verify, and it must find one
    whenever the oracle does.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    field = Field('rational')
    ring = field.ring(['t1'])
    grid = rational_grid(height)
    found = 0
    for index in range(count):
        degree = int(rng.integers(0, 4))
        phi2 = _random_poly(ring, rng, degree, height)
        if index % 2:
            phi1 = _random_poly(ring, rng, degree, height)
        else:
            a, b, eta = (grid[int(rng.integers(len(grid)))]
                         for _ in range(3))
            phi1 = poly_substitute_affine(phi2, 1 / a, -b / a) * eta
        fast = affine_equiv(phi1, phi2, field)
        slow = affine_equiv_bruteforce(phi1, phi2, height)
        if fast is not None and verify_affine(phi1, phi2, *fast[1:]) is None:
            return CheckResult(False, witness=(phi1, phi2),
                               note="affine_equiv returned an unverified "
                                    "triple")
        if slow is not None and fast is None:
            return CheckResult(False, witness=(phi1, phi2),
                               note=f"oracle found {slow}, affine_equiv none")
        found += fast is not None
    return CheckResult(True, note=f"{count} pairs, {found} equivalent",
                       details={'pairs': count, 'equivalent': found})


@dataclass
class IsoWitness:
    """ An explicit isomorphism A(r₁, s₁, φ₁) → A(r₂, s₂, φ₂)

    Attributes:
        case: Which matching of the roots applies: '3a'..'3d' for
            independent pairs, '4' for pairs {r, r⁻¹}.
        eta, a, b: φ₁(at + b) = η·φ₂(t).
        images: The generator images, verified by hom_check.
    """
    case: str
    eta: FieldElem
    a: FieldElem
    b: FieldElem
    images: GenImages

    def to_json(self) -> Dict[str, Any]:
        fmt = self.images.source.field.format
        return {'case': self.case, 'eta': fmt(self.eta), 'a': fmt(self.a),
                'b': fmt(self.b), 'images': self.images.to_json()}


def _matchings(r1, s1, r2, s2, field: Field) -> List[Tuple[str, bool]]:
    """ Root matchings that hold, with whether d is sent to u """
    eq = field.equal
    inv = field.inv
    conditions = [('3a', eq(r1, r2) and eq(s1, s2), False),
                  ('3b', eq(r1, s2) and eq(r2, s1), False),
                  ('3c', eq(r1, inv(s2)) and eq(r2, inv(s1)), True),
                  ('3d', eq(r1, inv(r2)) and eq(s1, inv(s2)), True)]
    return [(case, swap) for case, holds, swap in conditions if holds]


def _witness(case: str, swap: bool, affine: Affine, spec1: AlgebraSpec,
             spec2: AlgebraSpec) -> IsoWitness:
    eta, a, b = affine
    F = spec2.field
    t = spec2.t(1).scale(a) + Element.constant(spec2, b)
    if swap:
        d = spec2.u.scale(-(eta * spec2.beta))
        u = spec2.d
    else:
        d, u = spec2.d.scale(eta), spec2.u
    images = GenImages(spec1, spec2, u=u, d=d, t=[t])
    result = hom_check(images)
    assert result, (f"case {case} witness fails: {result.note} -> "
                    f"{result.witness}")
    LOG.debug("case %s: eta=%s, a=%s, b=%s", case, F.format(eta),
              F.format(a), F.format(b))
    return IsoWitness(case, eta, a, b, images)


def iso_decide(spec1: AlgebraSpec,
               spec2: AlgebraSpec) -> Optional[IsoWitness]:
    """ Decide whether spec1 and spec2 define isomorphic algebras

    Returns:
        A verified witness, or None when the algebras are not
        isomorphic. Exactly one independent root pair means the centers
        differ in size, so the answer is None.
    Raises:
        ArityError: Unless n = 1 for both.
        SpecMismatchError: If the fields differ.
        MissingRootsError: If a spec has no roots.
        UnsupportedError: If multiplicative dependence is undecidable.
        UndecidedError: For dependent pairs other than {r, r⁻¹}, or if
            affine equivalence cannot be decided.
    """
    for spec in (spec1, spec2):
        if spec.n != 1:
            raise ArityError(f"isomorphisms are decided for n = 1, got "
                             f"n = {spec.n}")
    if spec1.field != spec2.field:
        raise SpecMismatchError(f"fields differ: {spec1.field} and "
                                f"{spec2.field}")
    F = spec1.field
    r1, s1 = spec1.require_roots()
    r2, s2 = spec2.require_roots()
    independent1 = mult_dependence(r1, s1, F) is None
    independent2 = mult_dependence(r2, s2, F) is None
    if independent1 != independent2:
        LOG.info("exactly one root pair is independent; the centers differ")
        return None

    if independent1:
        matchings = _matchings(r1, s1, r2, s2, F)
    elif (F.is_one(r1 * s1) and F.is_one(r2 * s2) and
          (F.equal(r1, r2) or F.equal(r1, s2))):
        matchings = [('4', False)]
    else:
        raise UndecidedError(
            f"dependent root pairs ({F.format(r1)}, {F.format(s1)}) and "
            f"({F.format(r2)}, {F.format(s2)}) are outside the decided "
            f"regimes")
    if not matchings:
        LOG.info("no matching of the roots")
        return None

    affine = affine_equiv(spec1.phi, spec2.phi, F)
    if affine is None:
        LOG.info("phi1 and phi2 are not affinely equivalent")
        return None
    case, swap = matchings[0]
    return _witness(case, swap, affine, spec1, spec2)
