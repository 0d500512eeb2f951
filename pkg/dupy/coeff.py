# -*- coding: utf-8 -*-
"""
Exact coefficient arithmetic for down-up algebras.

A :class:`Field` selects one level of the tower ℚ ⊂ ℚ(ζ_m) ⊂ ℚ(t₁,…,tₙ)
and wraps the matching sympy domain. Field elements are the domain's own
element type (rationals, dense polynomials modulo Φ_m, or reduced
fractions of polynomials), so all arithmetic is exact and canonical.
Polynomials in t₁..tₙ (the base ring of an algebra) are sympy
``PolyElement`` objects over the field's domain.

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
from tokenize import TokenError
from itertools import product
from math import gcd, lcm
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from sympy import (QQ, Poly, Symbol, Float, I, exp, pi, divisors,
                   factorint, zoo, nan, oo)
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (parse_expr, standard_transformations,
                                        convert_xor)
from sympy.polys.polyerrors import (CoercionFailed, DomainError,
                                    NotInvertible, PolynomialError)
from sympy.polys.rings import PolyRing, PolyElement

from .library import (ParseError, DivisionByZeroError, UnsupportedError,
                      PreconditionError, ArityError)

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

ZETA = Symbol('zeta')
X = Symbol('x')
TRANSFORMATIONS = standard_transformations + (convert_xor,)

FieldElem = Any


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Poly:
    """ The m-th cyclotomic polynomial Φ_m in the variable `zeta`

    Computed by dividing zeta^m - 1 by Φ_d for every proper divisor d
    of m.

    Args:
        m: Positive order.
    Returns:
        Φ_m as a monic Poly over QQ.
    """
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    poly = Poly(ZETA**m - 1, ZETA, domain=QQ)
    for d in divisors(m)[:-1]:
        poly = poly.exquo(cyclotomic_polynomial(d))
    return poly


class Field:
    """ Descriptor of a coefficient field and its exact arithmetic

    Attributes:
        kind: One of 'rational', 'cyclotomic' or 'rational_function'.
        m: Order of the adjoined root of unity (1 unless cyclotomic).
        arity: Number of function-field variables (0 unless
            rational_function).
        minpoly: Φ_m for cyclotomic fields, otherwise None.
        domain: The sympy domain holding the elements.
    """
    KINDS = ('rational', 'cyclotomic', 'rational_function')

    def __init__(self, kind: str = 'rational', m: int = 1, arity: int = 0):
        if kind not in self.KINDS:
            raise ValueError(f"unknown field kind {kind!r}, "
                             f"expected one of {self.KINDS}")
        if kind == 'cyclotomic' and int(m) < 1:
            raise ValueError(f"cyclotomic order must be ≥ 1, got {m}")
        if kind == 'rational_function' and int(arity) < 0:
            raise ValueError(f"arity must be ≥ 0, got {arity}")
        self.kind = kind
        self.m = int(m) if kind == 'cyclotomic' else 1
        self.arity = int(arity) if kind == 'rational_function' else 0
        self.minpoly: Optional[Poly] = None
        self.symbols: Tuple[Symbol, ...] = ()

        if kind == 'cyclotomic':
            self.minpoly = cyclotomic_polynomial(self.m)
        if self.m > 2:
            self.domain = QQ.algebraic_field(
                (self.minpoly, exp(2*pi*I/self.m)), alias='zeta')
            self._zeta = self.domain.unit
        else:
            self.domain = QQ
            self._zeta = QQ(1) if self.m == 1 else QQ(-1)
        if self.arity > 0:
            self.symbols = tuple(Symbol(f't{i}')
                                 for i in range(1, self.arity + 1))
            self.domain = QQ.frac_field(*self.symbols)

    # === identity ===
    def key(self) -> Tuple[str, int, int]:
        return (self.kind, self.m, self.arity)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Field(kind={self.kind!r}, m={self.m}, arity={self.arity})"

    def __str__(self) -> str:
        if self.kind == 'cyclotomic':
            return f"QQ(zeta_{self.m})"
        if self.kind == 'rational_function':
            names = ", ".join(str(s) for s in self.symbols)
            return f"QQ({names})" if names else "QQ"
        return "QQ"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {'kind': self.kind}
        if self.kind == 'cyclotomic':
            out['m'] = self.m
        if self.kind == 'rational_function':
            out['arity'] = self.arity
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Field:
        return cls(data.get('kind', 'rational'), m=data.get('m', 1),
                   arity=data.get('arity', 0))

    # === elements ===
    @property
    def zero(self) -> FieldElem:
        return self.domain.zero

    @property
    def one(self) -> FieldElem:
        return self.domain.one

    @property
    def zeta(self) -> FieldElem:
        """ The primitive root of unity ζ_m (1 for non-cyclotomic fields) """
        if self.arity:
            return self.one
        return self._zeta

    def __call__(self, value) -> FieldElem:
        """ Convert an int, a rational, a string or a field element """
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, float):
            raise TypeError(f"floating point value {value} is not exact")
        if isinstance(value, int):
            return self.domain.convert(value)
        if self.domain.of_type(value):
            return value
        try:
            return self.from_rational(QQ.convert(value))
        except CoercionFailed as e:
            raise TypeError(f"cannot convert {value!r} into {self}") from e

    def from_rational(self, q) -> FieldElem:
        """ Embed an element of QQ """
        if self.domain is QQ:
            return q
        return self.domain.convert_from(q, QQ)

    def is_zero(self, a: FieldElem) -> bool:
        return self.domain.is_zero(a)

    def is_one(self, a: FieldElem) -> bool:
        return self.domain.is_one(a)

    def equal(self, a: FieldElem, b: FieldElem) -> bool:
        return self.domain.is_zero(a - b)

    def inv(self, a: FieldElem) -> FieldElem:
        if self.is_zero(a):
            raise DivisionByZeroError(f"inverse of zero in {self}")
        return self.one / a

    def div(self, a: FieldElem, b: FieldElem) -> FieldElem:
        if self.is_zero(b):
            raise DivisionByZeroError(f"division by zero in {self}")
        return a / b

    def pow(self, a: FieldElem, n: int) -> FieldElem:
        n = int(n)
        if n < 0:
            return self.inv(a)**(-n)
        return a**n

    def rational_value(self, a: FieldElem):
        """ The element as a member of QQ, or None if it is not rational """
        if self.domain is QQ:
            return a
        if self.arity:
            if not (a.numer.is_ground and a.denom.is_ground):
                return None
            return a.numer.LC / a.denom.LC
        coeffs = a.to_list()
        if len(coeffs) > 1:
            return None
        return coeffs[0] if coeffs else QQ.zero

    def is_constant(self, a: FieldElem) -> bool:
        """ Whether `a` lies in the constant subfield (always for ℚ, ℚ(ζ)) """
        if not self.arity:
            return True
        return a.numer.is_ground and a.denom.is_ground

    def coefficients(self, a: FieldElem) -> List:
        """ Rational coordinates of a cyclotomic element, lowest degree first

        The list has length deg Φ_m (length 1 for ℚ).
        """
        if self.arity:
            raise UnsupportedError("rational functions have no coordinates")
        if self.domain is QQ:
            return [a]
        size = self.minpoly.degree()
        coeffs = list(reversed(a.to_list()))
        return coeffs + [QQ.zero] * (size - len(coeffs))

    def from_coefficients(self, coeffs: Sequence) -> FieldElem:
        """ Inverse of :meth:`coefficients`: Σ c_k ζ^k """
        value = self.zero
        power = self.one
        for c in coeffs:
            value = value + power * self.from_rational(QQ.convert(c))
            power = power * self.zeta
        return value

    def sort_key(self, a: FieldElem) -> Tuple:
        """ Canonical total order used for deterministic tie-breaking

        Rationals compare numerically, cyclotomic elements by their
        coordinate vector (lowest degree first), rational functions by
        their sorted numerator and denominator terms.
        """
        if self.arity:
            numer = tuple(sorted(a.numer.terms()))
            denom = tuple(sorted(a.denom.terms()))
            return (len(numer) + len(denom), numer, denom)
        return tuple(self.coefficients(a))

    # === text ===
    def format(self, a: FieldElem) -> str:
        """ Serialize an element: "p/q", "1 - 2*zeta^3" or "num / den" """
        if self.arity:
            numer = format_poly(a.numer, _RATIONAL)
            if a.denom == 1:
                return numer
            denom = format_poly(a.denom, _RATIONAL)
            return f"{_wrap(numer, True)} / {_wrap(denom, False)}"
        if self.domain is QQ:
            return _format_rational(a)
        pieces = []
        for k, c in enumerate(self.coefficients(a)):
            if c:
                mono = '' if k == 0 else ('zeta' if k == 1 else f'zeta^{k}')
                pieces.append((c, mono))
        return _RATIONAL.format_terms(pieces)

    def format_terms(self, pieces: Sequence[Tuple[FieldElem, str]]) -> str:
        """ Join (coefficient, monomial) pairs into a re-parsable sum """
        out = ''
        for coeff, mono in pieces:
            text = self.format(coeff)
            compound = is_compound(text)
            if mono:
                if text == '1':
                    text = mono
                elif text == '-1':
                    text = '-' + mono
                elif compound or ' / ' in text:
                    text = f'({text})*{mono}'
                else:
                    text = f'{text}*{mono}'
            elif compound and out:
                text = f'({text})'
            if not out:
                out = text
            elif text.startswith('-'):
                out += ' - ' + text[1:]
            else:
                out += ' + ' + text
        return out or '0'

    def scalar_names(self) -> Dict[str, FieldElem]:
        """ Symbols that denote field constants in parsed text """
        names: Dict[str, FieldElem] = {}
        if self.kind == 'cyclotomic' and not self.arity:
            names['zeta'] = self.zeta
        if self.arity:
            for sym, gen in zip(self.symbols, self.domain.field.gens):
                names[str(sym)] = gen
        return names

    def parse(self, text: str) -> FieldElem:
        """ Parse a scalar such as "2/3", "1 - zeta^2" or "t1/(t1 + 1)" """
        ring = self.ring(())
        value = parse_polynomial(text, ring, self)
        return value.get(ring.zero_monom, self.zero)

    def ring(self, names: Sequence[str]) -> PolyRing:
        """ Polynomial ring over this field in the given variable names """
        return PolyRing(tuple(names), self.domain)


_RATIONAL = Field('rational')


def _format_rational(q) -> str:
    p, d = int(QQ.numer(q)), int(QQ.denom(q))
    return str(p) if d == 1 else f"{p}/{d}"


def is_compound(text: str) -> bool:
    """ Whether a printed value is a sum at parenthesis depth zero """
    depth = 0
    for pos, char in enumerate(text):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif char in '+-' and depth == 0 and pos > 0:
            return True
    return False


def _wrap(text: str, numerator: bool) -> str:
    if is_compound(text) or (not numerator and ('*' in text or '/' in text)):
        return f"({text})"
    return text


def _monomial(names: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return '*'.join(parts)


def format_poly(p: PolyElement, field: Field) -> str:
    """ Print a polynomial, highest terms first, in re-parsable form """
    names = [str(s) for s in p.ring.symbols]
    pieces = [(coeff, _monomial(names, monom)) for monom, coeff in p.terms()]
    return field.format_terms(pieces)


def parse_polynomial(text: str, ring: PolyRing, field: Field) -> PolyElement:
    """ Parse text into `ring`, resolving scalars in `field`

    Variables of `ring` are taken by name; `zeta` and function-field
    variables denote constants. Negative powers are allowed on scalars
    only. Floats and unknown symbols are rejected.

    Raises:
        ParseError: On malformed text or unknown symbols.
        DivisionByZeroError: On division by a zero scalar.
    """
    if not isinstance(text, str):
        text = str(text)
    gens = {str(s): g for s, g in zip(ring.symbols, ring.gens)}
    scalars = field.scalar_names()
    local = {name: Symbol(name) for name in list(gens) + list(scalars)}
    try:
        expr = parse_expr(text, local_dict=local,
                          transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, SympifyError, TokenError) as e:
        raise ParseError(f"cannot parse {text!r}: {e}") from e
    if expr.has(zoo, nan, oo):
        raise DivisionByZeroError(f"division by zero in {text!r}")
    if expr.has(Float):
        raise ParseError(f"floating point literal in {text!r}")
    return _sympy_to_ring(expr, ring, field, gens, scalars)


def _sympy_to_ring(expr, ring, field, gens, scalars) -> PolyElement:
    if expr.is_Rational:
        return ring(field.from_rational(QQ.from_sympy(expr)))
    if expr.is_Symbol:
        name = str(expr)
        if name in gens:
            return gens[name]
        if name in scalars:
            return ring(scalars[name])
        raise ParseError(f"unknown symbol {name!r}")
    args = [_sympy_to_ring(arg, ring, field, gens, scalars)
            for arg in expr.args] if (expr.is_Add or expr.is_Mul) else None
    if expr.is_Add:
        return sum(args[1:], args[0])
    if expr.is_Mul:
        result = ring.one
        for arg in args:
            result = result * arg
        return result
    if expr.is_Pow:
        base, power = expr.args
        if not power.is_Integer:
            raise ParseError(f"non-integer exponent in {expr}")
        value = _sympy_to_ring(base, ring, field, gens, scalars)
        power = int(power)
        if power >= 0:
            return value**power
        if not value.is_ground:
            raise ParseError(f"negative power of a non-scalar {base}")
        scalar = value.get(ring.zero_monom, field.zero)
        return ring(field.pow(scalar, power))
    raise ParseError(f"unsupported expression {expr}")


def cyclotomic_construct(m: int) -> Field:
    """ Descriptor of ℚ(ζ_m) carrying Φ_m """
    if m < 1:
        raise PreconditionError(f"cyclotomic order must be ≥ 1, got {m}")
    return Field('cyclotomic', m=m)


_ARITH: Dict[str, Callable] = {
    'add': lambda F, a, b: a + b,
    'sub': lambda F, a, b: a - b,
    'mul': lambda F, a, b: a * b,
    'div': lambda F, a, b: F.div(a, b),
    'inv': lambda F, a, b: F.inv(a),
    'pow': lambda F, a, b: F.pow(a, b),
    'eq': lambda F, a, b: F.equal(a, b),
}


def field_arith(op: str, a: FieldElem, b=None, field: Field = _RATIONAL):
    """ Exact arithmetic dispatched by operation name

    Args:
        op: One of add, sub, mul, div, inv, pow, eq.
        a: Left operand.
        b: Right operand (an integer exponent for pow, ignored for inv).
        field: The field both operands belong to.
    Returns:
        A field element, or a bool for eq.
    Raises:
        DivisionByZeroError: For div/inv by zero.
    """
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    a = field(a)
    if op not in ('pow', 'inv'):
        b = field(b)
    return fn(field, a, b)


def _constant_or_raise(x: FieldElem, field: Field, what: str):
    if field.arity and not field.is_constant(x):
        raise UnsupportedError(
            f"{what} is undefined for the non-constant rational "
            f"function {field.format(x)}")


def root_of_unity_order(x: FieldElem, field: Field) -> Optional[int]:
    """ Least m with x^m = 1, or None if x is not a root of unity

    Only orders dividing the field's root-of-unity bound are possible:
    {1, 2} for ℚ, divisors of lcm(2, M) for ℚ(ζ_M).

    Raises:
        PreconditionError: If x is zero.
        UnsupportedError: For non-constant rational functions.
    """
    if field.is_zero(x):
        raise PreconditionError("root_of_unity_order of zero")
    _constant_or_raise(x, field, "root_of_unity_order")
    for d in divisors(lcm(2, field.m)):
        if field.is_one(field.pow(x, d)):
            return int(d)
    return None


def _prime_vector(q) -> Dict[int, int]:
    vector: Dict[int, int] = {}
    for p, e in factorint(abs(int(QQ.numer(q)))).items():
        vector[p] = vector.get(p, 0) + e
    for p, e in factorint(int(QQ.denom(q))).items():
        vector[p] = vector.get(p, 0) - e
    return vector


def _preferred(candidates: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    return min(candidates, key=lambda ij: (abs(ij[0]) + abs(ij[1]),
                                           ij[0] < 0, ij[1]))


def _holds(r, s, i: int, j: int, field: Field) -> bool:
    return field.is_one(field.pow(r, i) * field.pow(s, j))


def mult_dependence(r: FieldElem, s: FieldElem,
                    field: Field) -> Optional[Tuple[int, int]]:
    """ Decide whether r^i s^j = 1 for some nonzero (i, j)

    Returns:
        None when r, s are multiplicatively independent, otherwise the
        relation (i, j) of minimal |i| + |j|, preferring i ≥ 0 and then
        the smaller j.
    Raises:
        PreconditionError: If r or s is zero.
        UnsupportedError: If r, s are neither rational nor roots of unity.
    """
    if field.is_zero(r) or field.is_zero(s):
        raise PreconditionError("mult_dependence needs nonzero r, s")
    _constant_or_raise(r, field, "mult_dependence")
    _constant_or_raise(s, field, "mult_dependence")
    ord_r = root_of_unity_order(r, field)
    ord_s = root_of_unity_order(s, field)

    if ord_r is not None and ord_s is not None:
        bound = ord_r + ord_s
        for total in range(1, bound + 1):
            hits = [(i, j) for i in range(-total, total + 1)
                    for j in (total - abs(i), abs(i) - total)
                    if _holds(r, s, i, j, field)]
            if hits:
                return _preferred(hits)
        raise AssertionError("torsion pair without relation")  # unreachable

    qr, qs = field.rational_value(r), field.rational_value(s)
    if ord_r is not None and qs is not None:
        return (ord_r, 0)
    if ord_s is not None and qr is not None:
        return _preferred([(0, ord_s), (0, -ord_s)])
    if qr is None or qs is None:
        raise UnsupportedError(
            f"multiplicative dependence of {field.format(r)} and "
            f"{field.format(s)} is outside the decidable classes")

    vr, vs = _prime_vector(qr), _prime_vector(qs)
    primes = sorted(set(vr) | set(vs))
    pivot = primes[0]
    a, b = vr.get(pivot, 0), vs.get(pivot, 0)
    g = gcd(a, b)
    i, j = b // g, -a // g
    if any(i * vr.get(p, 0) + j * vs.get(p, 0) for p in primes):
        return None
    if not _holds(r, s, i, j, field):
        i, j = 2 * i, 2 * j
    assert _holds(r, s, i, j, field), "prime vector relation failed"
    return _preferred([(i, j), (-i, -j)])


def poly_substitute_affine(p: PolyElement, a: FieldElem,
                           b: FieldElem) -> PolyElement:
    """ Return p(a·t + b) for a univariate polynomial p

    Raises:
        ArityError: If p is not univariate.
        PreconditionError: If a is zero.
    """
    ring = p.ring
    if ring.ngens != 1:
        raise ArityError(f"expected a univariate polynomial, "
                         f"got {ring.ngens} variables")
    if ring.domain.is_zero(a):
        raise PreconditionError("affine substitution needs a ≠ 0")
    t = ring.gens[0]
    return p.compose(t, t * a + ring(b))


def polynomial_roots(coeffs: Sequence[FieldElem],
                     field: Field) -> List[FieldElem]:
    """ Distinct roots in `field` of Σ coeffs[k] x^(deg-k)

    Args:
        coeffs: Coefficients, highest degree first.
        field: The field to factor over.
    Returns:
        The roots, sorted by :meth:`Field.sort_key`.
    Raises:
        UnsupportedError: If sympy cannot factor over this domain.
    """
    poly = Poly.from_list(list(coeffs), X, domain=field.domain)
    if poly.degree() < 1:
        return []
    try:
        _, factors = poly.factor_list()
    except (DomainError, NotImplementedError, PolynomialError,
            NotInvertible) as e:
        raise UnsupportedError(f"cannot factor over {field}: {e}") from e
    roots = []
    for factor, _ in factors:
        if factor.degree() != 1:
            continue
        c1, c0 = factor.rep.to_list()
        root = -c0 / c1
        if not any(field.equal(root, other) for other in roots):
            roots.append(root)
    return sorted(roots, key=field.sort_key)


def quadratic_roots(field: Field, alpha: FieldElem,
                    beta: FieldElem) -> Optional[Tuple[FieldElem, FieldElem]]:
    """ Roots (r, s) of x² - αx - β in the field, r the larger one

    A double root gives r = s. Returns None when the polynomial is
    irreducible over the field.
    """
    try:
        roots = polynomial_roots([field.one, -alpha, -beta], field)
    except UnsupportedError:
        LOG.info("could not factor x^2 - (%s)x - (%s) over %s",
                 field.format(alpha), field.format(beta), field)
        return None
    if not roots:
        return None
    if len(roots) == 1:
        return roots[0], roots[0]
    s, r = roots
    return r, s


def rational_grid(height: int) -> List:
    """ Nonzero rationals p/q with |p|, q ≤ height, without repeats """
    seen = set()
    out = []
    for p, q in product(range(-height, height + 1), range(1, height + 1)):
        value = QQ(p, q)
        if p and value not in seen:
            seen.add(value)
            out.append(value)
    return sorted(out)
