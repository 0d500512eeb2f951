# -*- coding: utf-8 -*-
"""
Automorphisms of A(α, β, φ) over K[t] (n = 1) from their parameters.

Generic form: d ↦ λ₁d, u ↦ λ₂u, t ↦ at + b with λ₁λ₂φ(t) = φ(at + b).
When r = s⁻¹, HK is central, t may move to at + g(HK), and the swapped
form d ↦ λ₁u, u ↦ λ₂d is allowed as well.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional, Sequence

import numpy as np
from tqdm import tqdm

from .algebraspec import AlgebraSpec
from .coeff import FieldElem
from .constants import AUT_COMPOSITIONS, AUT_DRAWS
from .element import Element, random_scalar
from .library import (ArityError, CheckResult, ConstraintViolationError,
                      PreconditionError)
from .morphism import GenImages, compose_morphisms, hom_check
from .structure import make_HK

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


@dataclass
class AutSpec:
    """ Parameters of a candidate automorphism

    Attributes:
        lambda1: Scalar in the image of d.
        lambda2: Scalar in the image of u.
        a: Nonzero scalar multiplying t.
        b: Constant shift of t.
        g: Coefficients c₀, c₁, … of g(HK) = Σ cₖ(HK)^k, replacing b;
            only for r = s⁻¹.
        swap: Send d ↦ λ₁u and u ↦ λ₂d; only for r = s⁻¹.
    """
    lambda1: FieldElem
    lambda2: FieldElem
    a: FieldElem
    b: FieldElem = 0
    g: Optional[Sequence[FieldElem]] = None
    swap: bool = False

    def to_json(self, spec: AlgebraSpec) -> Dict[str, Any]:
        fmt = lambda x: spec.field.format(spec.field(x))  # noqa: E731
        out = {'lambda1': fmt(self.lambda1), 'lambda2': fmt(self.lambda2),
               'a': fmt(self.a), 'b': fmt(self.b), 'swap': self.swap}
        if self.g is not None:
            out['g'] = [fmt(c) for c in self.g]
        return out


def _needs_inverse_roots(p: AutSpec) -> bool:
    return p.swap or p.g is not None


def _check_params(p: AutSpec, spec: AlgebraSpec) -> None:
    if spec.n != 1:
        raise ArityError(f"automorphisms are built for n = 1, got "
                         f"n = {spec.n}")
    F = spec.field
    r, s = spec.require_roots()
    for name in ('lambda1', 'lambda2', 'a'):
        if F.is_zero(F(getattr(p, name))):
            raise PreconditionError(f"{name} must be nonzero")
    if _needs_inverse_roots(p) and not F.is_one(r * s):
        raise PreconditionError("swap and g(HK) forms need r = s^-1")


def t_image(p: AutSpec, spec: AlgebraSpec) -> Element:
    """ a·t + b, or a·t + g(HK) """
    F = spec.field
    image = spec.t(1).scale(F(p.a))
    if p.g is None:
        return image + Element.constant(spec, F(p.b))
    H, K = make_HK(spec)
    hk = H * K
    power = Element.one(spec)
    for c in p.g:
        image = image + power.scale(F(c))
        power = power * hk
    return image


def aut_images(p: AutSpec, spec: AlgebraSpec) -> GenImages:
    """ Generator images of p, without validation """
    _check_params(p, spec)
    F = spec.field
    first, second = (spec.u, spec.d) if p.swap else (spec.d, spec.u)
    return GenImages(spec, spec, u=second.scale(F(p.lambda2)),
                     d=first.scale(F(p.lambda1)), t=[t_image(p, spec)])


def aut_constraint(p: AutSpec, spec: AlgebraSpec) -> bool:
    """ λ₁λ₂φ(t) = φ(σ(t)), evaluated in the algebra """
    images = aut_images(p, spec)
    F = spec.field
    left = Element.constant(spec, spec.phi).scale(F(p.lambda1) *
                                                  F(p.lambda2))
    return left == images.base(spec.phi)


def aut_from_params(p: AutSpec, spec: AlgebraSpec) -> GenImages:
    """ Build and validate the automorphism with parameters p

    Raises:
        ArityError: If n ≠ 1.
        MissingRootsError: If the spec has no roots.
        PreconditionError: For zero scalars, or a swap / g(HK) form
            outside r = s⁻¹.
        ConstraintViolationError: If λ₁λ₂φ(t) ≠ φ(σ(t)) or a defining
            relation is not preserved.
    """
    images = aut_images(p, spec)
    shift = 'g(HK)' if p.g is not None else 'b'
    identity = f"lambda1*lambda2*phi(t) = phi(a*t + {shift})"
    if not aut_constraint(p, spec):
        raise ConstraintViolationError(f"{identity} fails for "
                                       f"{p.to_json(spec)}", identity)
    result = hom_check(images)
    if not result:
        raise ConstraintViolationError(f"{result.note} is not preserved: "
                                       f"{result.witness}", result.note)
    return images


def random_autspec(spec: AlgebraSpec, rng: np.random.Generator,
                   valid: bool = True) -> AutSpec:
    """ Draw parameters; valid draws satisfy the φ-constraint

    For a valid draw, a is drawn and b kept at 0 unless φ is constant, so
    that φ(at + b) is a scalar multiple c·φ(t); then λ₂ = c/λ₁. Invalid
    draws shift λ₂ by a random nonzero scalar, redrawing until the
    shifted value is nonzero.
    """
    F = spec.field
    phi = spec.phi
    a = random_scalar(spec, rng)
    b = random_scalar(spec, rng) if phi.is_ground else F.zero
    lambda1 = random_scalar(spec, rng)
    c = _phi_ratio(spec, a, b)
    if c is None:
        a, b, c = F.one, F.zero, F.one
    lambda2 = F.div(c, lambda1)
    while not valid:
        shifted = lambda2 + random_scalar(spec, rng)
        if not F.is_zero(shifted):
            lambda2 = shifted
            break
    return AutSpec(lambda1, lambda2, a, b)


def _phi_ratio(spec: AlgebraSpec, a, b) -> Optional[FieldElem]:
    """ c with φ(at + b) = c·φ(t), or None """
    phi = spec.phi
    F = spec.field
    if not phi:
        return F.one
    t = phi.ring.gens[0]
    moved = phi.compose(t, t * a + phi.ring(b))
    c = F.div(moved.LC, phi.LC)
    return c if moved == phi * c else None


def aut_agreement_check(spec: AlgebraSpec, draws: int = AUT_DRAWS,
                        rng: Optional[np.random.Generator] = None
                        ) -> CheckResult:
    """ The φ-constraint and hom_check agree on valid and perturbed draws
    """
    rng = np.random.default_rng(0) if rng is None else rng
    counts = {'valid': 0, 'invalid': 0}
    disable = not LOG.isEnabledFor(logging.INFO)
    for index in tqdm(range(draws), disable=disable):
        p = random_autspec(spec, rng, valid=index % 2 == 0)
        constraint = aut_constraint(p, spec)
        hom = bool(hom_check(aut_images(p, spec)))
        if constraint != hom:
            return CheckResult(False, witness=p,
                               note=f"constraint {constraint}, "
                                    f"hom_check {hom}")
        counts['valid' if hom else 'invalid'] += 1
    return CheckResult(True, note=f"{counts['valid']} valid, "
                                  f"{counts['invalid']} invalid draws",
                       details=counts)


def composition_check(spec: AlgebraSpec, count: int = AUT_COMPOSITIONS,
                      rng: Optional[np.random.Generator] = None
                      ) -> CheckResult:
    """ Composites of valid automorphisms are valid and their parameters
    multiply

    For σ' ∘ σ with σ(t) = at + b and σ'(t) = a't + b' the parameters
    are λ₁λ₁', λ₂λ₂', aa' and ab' + b.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    F = spec.field
    for _ in range(count):
        p = random_autspec(spec, rng)
        q = random_autspec(spec, rng)
        first, second = aut_from_params(p, spec), aut_from_params(q, spec)
        composed = compose_morphisms(first, second)
        expected = AutSpec(F(p.lambda1) * F(q.lambda1),
                           F(p.lambda2) * F(q.lambda2),
                           F(p.a) * F(q.a), F(p.a) * F(q.b) + F(p.b))
        product = aut_images(expected, spec)
        if not hom_check(composed) or composed.u != product.u or \
                composed.d != product.d or composed.t != product.t:
            return CheckResult(False, witness=(p, q),
                               note="composition does not match")
    return CheckResult(True, note=f"{count} compositions")


def inverse_params(p: AutSpec, spec: AlgebraSpec) -> AutSpec:
    """ Parameters of σ⁻¹ for the unswapped affine form """
    if _needs_inverse_roots(p):
        raise PreconditionError("inverse parameters are computed for the "
                                "unswapped affine form only")
    F = spec.field
    a_inv = F.inv(F(p.a))
    return replace(p, lambda1=F.inv(F(p.lambda1)),
                   lambda2=F.inv(F(p.lambda2)), a=a_inv,
                   b=-(F(p.b) * a_inv))
