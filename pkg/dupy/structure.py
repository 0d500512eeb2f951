# -*- coding: utf-8 -*-
"""
Structural elements and checks: the normal elements H and K, centrality,
the β = 0 zero divisor, regularity of the base ring, the domain property
and the polynomial subalgebra generated by ud, du and the tᵢ.

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
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from .algebraspec import AlgebraSpec
from .constants import RANDOM_PAIRS, RANDOM_TRIPLES, BASIS_MAXDEG
from .element import (Element, commutator, pbw_basis, basis_element,
                      random_element, relation_images)
from .library import (CheckResult, DivisionByZeroError, PreconditionError,
                      exponent_vectors)
from .linalg import independent, rank

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


def du(spec: AlgebraSpec) -> Element:
    return Element.monomial(spec, 0, 1, 0)


def ud(spec: AlgebraSpec) -> Element:
    return Element.monomial(spec, 1, 0, 1)


def _normal_element(spec: AlgebraSpec, coeff, root, name: str) -> Element:
    """ du - coeff·ud + φ/(root - 1) """
    field = spec.field
    base = du(spec) - ud(spec).scale(coeff)
    if not spec.phi:
        return base
    if field.equal(root, field.one):
        case = 7 if name == 'H' else 8
        raise DivisionByZeroError(
            f"{name} divides phi by zero; with phi nonzero this is the "
            f"regime of center case ({case})")
    return base + Element.constant(spec, spec.phi * field.inv(root - 1))


def make_H(spec: AlgebraSpec) -> Element:
    """ H = du - r·ud + φ/(s - 1)

    Raises:
        MissingRootsError: If the spec has no roots.
        DivisionByZeroError: If s = 1 while φ ≠ 0.
    """
    r, s = spec.require_roots()
    return _normal_element(spec, r, s, 'H')


def make_K(spec: AlgebraSpec) -> Element:
    """ K = du - s·ud + φ/(r - 1) """
    r, s = spec.require_roots()
    return _normal_element(spec, s, r, 'K')


def make_HK(spec: AlgebraSpec) -> Tuple[Element, Element]:
    return make_H(spec), make_K(spec)


def is_central(a: Element) -> CheckResult:
    """ Whether a commutes with u, d and every tᵢ

    On failure the nonzero commutator is the witness.
    """
    spec = a.spec
    gens = [('u', spec.u), ('d', spec.d)]
    gens += [(f't{i}', spec.t(i)) for i in range(1, spec.n + 1)]
    for name, g in gens:
        c = commutator(a, g)
        if c:
            return CheckResult(False, witness=c, note=f"[a, {name}] ≠ 0")
    return CheckResult(True, note="central")


def zero_divisor_witness(spec: AlgebraSpec) -> Tuple[Element, Element]:
    """ The pair (d, du - α·ud - φ) whose product vanishes when β = 0

    Raises:
        PreconditionError: If β ≠ 0.
    """
    if not spec.field.is_zero(spec.beta):
        raise PreconditionError("the zero-divisor witness needs beta = 0")
    b = du(spec) - ud(spec).scale(spec.alpha) - Element.constant(spec,
                                                                 spec.phi)
    return spec.d, b


def hk_identities(spec: AlgebraSpec) -> CheckResult:
    """ dH = s·Hd, Hu = s·uH, dK = r·Kd, Ku = r·uK

    [H, K] is measured and reported in the details but not asserted.
    """
    r, s = spec.require_roots()
    H, K = make_HK(spec)
    u, d = spec.u, spec.d
    identities = {
        'dH = s*H*d': d * H == (H * d).scale(s),
        'H*u = s*u*H': H * u == (u * H).scale(s),
        'd*K = r*K*d': d * K == (K * d).scale(r),
        'K*u = r*u*K': K * u == (u * K).scale(r),
    }
    hk = commutator(H, K)
    details = dict(identities)
    details['[H, K]'] = str(hk)
    details['H'] = str(H)
    details['K'] = str(K)
    if hk:
        LOG.info("[H, K] = %s is nonzero for %s", hk, spec)
    failed = [name for name, ok in identities.items() if not ok]
    return CheckResult(not failed, witness=failed or None,
                       note="H/K commutation", details=details)


def alternate_basis(spec: AlgebraSpec, maxdeg: int) -> List[Element]:
    """ {H^i K^j u^k t^m, H^i K^j d^(k+1) t^m} of weighted degree ≤ maxdeg """
    H, K = make_HK(spec)
    w = spec.weight
    out = []
    for i in range(maxdeg // (2 * w) + 1):
        for j in range((maxdeg - 2 * w * i) // (2 * w) + 1):
            hk = H**i * K**j
            used = 2 * w * (i + j)
            for k in range((maxdeg - used) // w + 1):
                for m in exponent_vectors(spec.n, maxdeg - used - w * k):
                    out.append(hk * Element.monomial(spec, k, 0, 0, m))
            for k in range(1, (maxdeg - used) // w + 1):
                for m in exponent_vectors(spec.n, maxdeg - used - w * k):
                    out.append(hk * Element.monomial(spec, 0, 0, k, m))
    return out


def alternate_basis_check(spec: AlgebraSpec, maxdeg: int = 4) -> CheckResult:
    """ The alternate monomials are linearly independent and as many as
    the PBW monomials of the same degree bound """
    elements = alternate_basis(spec, maxdeg)
    found = rank(elements)
    expected = len(pbw_basis(spec, maxdeg))
    return CheckResult(found == len(elements) == expected,
                       note=f"rank {found} of {len(elements)} elements, "
                            f"{expected} PBW monomials",
                       details={'rank': found, 'size': len(elements),
                                'pbw': expected})


def regularity_check(spec: AlgebraSpec, maxdeg: int = 4, count: int = 20,
                     rng: Optional[np.random.Generator] = None
                     ) -> CheckResult:
    """ Nonzero f(t) are regular central elements

    For random f: [f, a] = 0 for random a, and a ↦ f·a is injective on
    the span of the PBW monomials of degree ≤ maxdeg.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    basis = [basis_element(spec, mono) for mono in pbw_basis(spec, maxdeg)]
    for _ in range(count):
        f = _random_base_poly(spec, rng)
        a = random_element(spec, 3, maxdeg, rng)
        if commutator(f, a):
            return CheckResult(False, witness=(f, a), note="[f, a] ≠ 0")
        if not independent([f * b for b in basis]):
            return CheckResult(False, witness=f, note="f is a zero divisor")
    return CheckResult(True, note=f"{count} random f(t)")


def _random_base_poly(spec: AlgebraSpec, rng: np.random.Generator,
                      degree: int = 2) -> Element:
    while True:
        f = Element.zero(spec)
        for m in exponent_vectors(spec.n, degree):
            c = int(rng.integers(-3, 4))
            if c:
                f = f + Element.monomial(spec, 0, 0, 0, m, c)
        if f:
            return f


def domain_probe(spec: AlgebraSpec, pairs: int = RANDOM_PAIRS,
                 maxdeg: int = 3,
                 rng: Optional[np.random.Generator] = None) -> CheckResult:
    """ Zero products: none among random pairs if β ≠ 0, the witness if β = 0
    """
    if spec.field.is_zero(spec.beta):
        a, b = zero_divisor_witness(spec)
        product = a * b
        return CheckResult(not product and bool(a) and bool(b),
                           witness=(a, b),
                           note="beta = 0: d*(du - alpha*ud - phi) = 0")
    rng = np.random.default_rng(0) if rng is None else rng
    for _ in tqdm(range(pairs), disable=not LOG.isEnabledFor(logging.INFO)):
        a = random_element(spec, 3, maxdeg, rng, nonzero=True)
        b = random_element(spec, 3, maxdeg, rng, nonzero=True)
        if not a * b:
            return CheckResult(False, witness=(a, b), note="zero product")
    return CheckResult(True, note=f"{pairs} random nonzero pairs")


def polynomial_subalgebra_check(spec: AlgebraSpec,
                                bound: int = 3) -> CheckResult:
    """ ud, du and the tᵢ: free for β ≠ 0, a derived relation for β = 0

    For β ≠ 0 the monomials (ud)^a (du)^b t^m with a + b + |m| ≤ bound
    are linearly independent. For β = 0 the relation
    (ud)(du) - α(ud)² - φ(ud) = 0 holds.
    """
    x, y = ud(spec), du(spec)
    if spec.field.is_zero(spec.beta):
        relation = x * y - (x * x).scale(spec.alpha) - x.scale(spec.phi)
        return CheckResult(not relation, witness=relation or None,
                           note="(ud)(du) - alpha*(ud)^2 - phi*(ud) = 0")
    monomials = []
    for vector in exponent_vectors(spec.n + 2, bound):
        a, b, m = vector[0], vector[1], vector[2:]
        monomials.append(x**a * y**b * Element.monomial(spec, 0, 0, 0, m))
    found = rank(monomials)
    return CheckResult(found == len(monomials),
                       note=f"rank {found} of {len(monomials)} monomials")


def basis_faithfulness(spec: AlgebraSpec,
                       maxdeg: int = BASIS_MAXDEG) -> CheckResult:
    """ PBW monomials reduce to themselves """
    from .rewriting import normalize
    for mono in pbw_basis(spec, maxdeg):
        a = basis_element(spec, mono)
        if normalize(a) != a or spec.rewriter.apply(mono.word()) != \
                Element.monomial(spec, mono.i, mono.j, mono.k):
            return CheckResult(False, witness=mono, note="not fixed")
    return CheckResult(True, note=f"monomials of degree ≤ {maxdeg}")


def relations_vanish(spec: AlgebraSpec) -> CheckResult:
    """ Both defining relations reduce to zero """
    first, second = relation_images(spec, spec.rewriter.apply)
    ok = not first and not second
    return CheckResult(ok, witness=None if ok else (first, second),
                       note="defining relations")


def ring_axioms_check(spec: AlgebraSpec, triples: int = RANDOM_TRIPLES,
                      maxdeg: int = 4,
                      rng: Optional[np.random.Generator] = None
                      ) -> CheckResult:
    """ Associativity and both distributive laws on random triples """
    rng = np.random.default_rng(0) if rng is None else rng
    for _ in tqdm(range(triples),
                  disable=not LOG.isEnabledFor(logging.INFO)):
        a, b, c = (random_element(spec, 3, maxdeg, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            return CheckResult(False, witness=(a, b, c),
                               note="not associative")
        if a * (b + c) != a * b + a * c or (a + b) * c != a * c + b * c:
            return CheckResult(False, witness=(a, b, c),
                               note="not distributive")
    return CheckResult(True, note=f"{triples} random triples")
