# -*- coding: utf-8 -*-
"""
The parameters of one down-up algebra A(α, β, φ) over K[t₁,…,tₙ]:
the field, α and β, the optional roots r, s of x² - αx - β and
the polynomial φ. Specs are loaded from TOML text.

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
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from .coeff import Field, FieldElem, parse_polynomial, format_poly, \
    quadratic_roots
from .library import (SpecError, ParseError, MissingRootsError, ArityError,
                      SpecMismatchError)

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


class AlgebraSpec:
    """ Parameters of the down-up algebra A(α, β, φ) over K[t₁..tₙ]

    Two specs are equal when field, arity and all parameters agree; the
    optional `name` is ignored. Elements carry their spec, and
    operations between elements of unequal specs are refused.

    Attributes:
        n: Number of central variables t₁..tₙ (0 gives the classical
            down-up algebra).
        field: The coefficient field.
        alpha, beta: The parameters α, β.
        r, s: Roots of x² - αx - β with r + s = α and rs = -β, or None.
        phi: φ as a polynomial in `ring`.
        ring: The base ring K[t₁..tₙ] (a sympy PolyRing).
        weight: w(u) = w(d) = max(deg φ, 1); each tᵢ has weight 1.
        name: Optional label.
    """
    def __init__(self, n: int, field: Field, alpha, beta, phi=0,
                 r=None, s=None, name: str = '', solve_roots: bool = True):
        if n < 0:
            raise SpecError(f"n must be ≥ 0, got {n}")
        if field.arity and n:
            raise SpecError("algebras over a rational function field are "
                            "classical (n = 0); their variables belong to "
                            "the field")
        self.n = int(n)
        self.field = field
        self.ring = field.ring([f't{i}' for i in range(1, self.n + 1)])
        self.name = name
        self.alpha = self._scalar(alpha, 'alpha')
        self.beta = self._scalar(beta, 'beta')
        self.phi = self._polynomial(phi)

        if (r is None) != (s is None):
            raise SpecError("give both roots r and s, or neither")
        if r is not None:
            self.r = self._scalar(r, 'r')
            self.s = self._scalar(s, 's')
            if not field.equal(self.r + self.s, self.alpha):
                raise SpecError(f"r + s = {field.format(self.r + self.s)} "
                                f"differs from alpha = "
                                f"{field.format(self.alpha)}")
            if not field.equal(self.r * self.s, -self.beta):
                raise SpecError(f"r*s = {field.format(self.r * self.s)} "
                                f"differs from -beta = "
                                f"{field.format(-self.beta)}")
        elif solve_roots:
            roots = quadratic_roots(field, self.alpha, self.beta)
            self.r, self.s = roots if roots is not None else (None, None)
            if roots is None:
                LOG.info("x^2 - (%s)x - (%s) has no roots in %s",
                         field.format(self.alpha), field.format(self.beta),
                         field)
        else:
            self.r = self.s = None

        if self.phi:
            self.phi_degree = max(sum(m) for m in self.phi.monoms())
        else:
            self.phi_degree = 0
        self.weight = max(self.phi_degree, 1)
        self._rewriter = None

    @classmethod
    def from_roots(cls, n: int, field: Field, r, s, phi=0,
                   name: str = '') -> AlgebraSpec:
        """ Build the spec with α = r + s and β = -rs """
        r, s = field(r), field(s)
        return cls(n, field, r + s, -(r * s), phi, r=r, s=s, name=name)

    def _scalar(self, value, key: str) -> FieldElem:
        return read_scalar(value, self.field, key)

    def _polynomial(self, value) -> PolyElement:
        if isinstance(value, PolyElement):
            if value.ring == self.ring:
                return value
            if value.ring.ngens != self.n:
                raise ArityError(f"phi has {value.ring.ngens} variables, "
                                 f"expected n = {self.n}")
            return value.set_ring(self.ring)
        if isinstance(value, str):
            try:
                return parse_polynomial(value, self.ring, self.field)
            except ParseError as e:
                raise ArityError(f"cannot read phi in t1..t{self.n}: "
                                 f"{e}") from e
        return self.ring(self._scalar(value, 'phi'))

    # === identity ===
    def key(self) -> Tuple:
        fmt = self.field.format
        roots = None if self.r is None else (fmt(self.r), fmt(self.s))
        return (self.field.key(), self.n, fmt(self.alpha), fmt(self.beta),
                format_poly(self.phi, self.field), roots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return self is other or self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"AlgebraSpec({self})"

    def __str__(self) -> str:
        fmt = self.field.format
        text = (f"A(alpha={fmt(self.alpha)}, beta={fmt(self.beta)}, "
                f"phi={format_poly(self.phi, self.field)}) over {self.field}"
                f"[{', '.join(str(s) for s in self.ring.symbols)}]")
        if self.r is not None:
            text += f", r={fmt(self.r)}, s={fmt(self.s)}"
        return f"{self.name}: {text}" if self.name else text

    def to_dict(self) -> Dict[str, Any]:
        """ JSON-ready description with scalars as strings """
        fmt = self.field.format
        out = {'n': self.n, 'field': self.field.to_dict(),
               'alpha': fmt(self.alpha), 'beta': fmt(self.beta),
               'phi': format_poly(self.phi, self.field)}
        if self.r is not None:
            out['r'], out['s'] = fmt(self.r), fmt(self.s)
        if self.name:
            out['name'] = self.name
        return out

    # === derived objects ===
    @property
    def has_roots(self) -> bool:
        return self.r is not None

    def require_roots(self) -> Tuple[FieldElem, FieldElem]:
        """ The roots (r, s)

        Raises:
            MissingRootsError: If the spec carries no roots.
        """
        if self.r is None:
            raise MissingRootsError("roots r,s required: x^2 - alpha*x - beta"
                                    f" does not split over {self.field}")
        return self.r, self.s

    @property
    def rewriter(self):
        """ The memoizing reduction engine shared by this spec's elements """
        if self._rewriter is None:
            from .rewriting import Rewriter
            self._rewriter = Rewriter(self)
        return self._rewriter

    def weighted_degree(self, i: int, j: int, k: int, m=()) -> int:
        return self.weight * (i + 2 * j + k) + sum(m)

    def gen(self, name: str):
        """ Generator u, d or tᵢ as an Element """
        from .element import Element
        if name == 'u':
            return Element.monomial(self, 1, 0, 0)
        if name == 'd':
            return Element.monomial(self, 0, 0, 1)
        if name.startswith('t') and name[1:].isdigit():
            index = int(name[1:])
            if not 1 <= index <= self.n:
                raise ArityError(f"{name} is out of range for n = {self.n}")
            return Element.constant(self, self.ring.gens[index - 1])
        raise ValueError(f"unknown generator {name!r}")

    @property
    def u(self):
        return self.gen('u')

    @property
    def d(self):
        return self.gen('d')

    def t(self, index: int):
        return self.gen(f't{index}')

    def element(self, value=0):
        """ Coerce a scalar, a base-ring polynomial or text to an Element """
        from .element import Element
        if isinstance(value, str):
            from .parser import parse_element
            return parse_element(value, self)
        return Element.constant(self, value)


def read_scalar(value, field: Field, key: str) -> FieldElem:
    """ Read an exact scalar from an int, a string or a field element """
    if isinstance(value, (bool, float)):
        raise SpecError(f"{key} must be an exact integer or a string, "
                        f"got {value!r}")
    try:
        return field(value)
    except (ParseError, TypeError) as e:
        raise SpecError(f"cannot read {key}: {e}") from e


def _field_from_toml(data: Dict[str, Any]) -> Field:
    raw = data.get('field', 'rational')
    if isinstance(raw, str):
        raw = {'kind': raw}
    if not isinstance(raw, dict):
        raise SpecError(f"field must be a string or a table, got {raw!r}")
    try:
        return Field(raw.get('kind', 'rational'), m=int(raw.get('m', 1)),
                     arity=int(raw.get('arity', 0)))
    except (TypeError, ValueError) as e:
        raise SpecError(f"bad field description {raw!r}: {e}") from e


def spec_from_dict(data: Dict[str, Any]) -> AlgebraSpec:
    """ Validate a mapping of spec keys into an AlgebraSpec

    Keys are n, field (kind, m, arity), alpha, beta, r, s, phi and name.
    Either r and s, or alpha and beta (or all four) must be given.

    Raises:
        SpecError: On missing, malformed or inconsistent values.
    """
    unknown = set(data) - {'n', 'field', 'alpha', 'beta', 'r', 's', 'phi',
                           'name'}
    if unknown:
        raise SpecError(f"unknown keys {sorted(unknown)}")
    if 'n' not in data:
        raise SpecError("missing key n")
    n = data['n']
    if isinstance(n, bool) or not isinstance(n, int):
        raise SpecError(f"n must be an integer, got {n!r}")
    field = _field_from_toml(data)
    name = str(data.get('name', ''))
    phi = data.get('phi', 0)
    has_roots = 'r' in data or 's' in data
    has_params = 'alpha' in data or 'beta' in data
    if has_roots:
        if 'r' not in data or 's' not in data:
            raise SpecError("give both roots r and s")
        r = read_scalar(data["r"], field, "r")
        s = read_scalar(data["s"], field, "s")
        alpha = data.get('alpha', r + s)
        beta = data.get('beta', -(r * s))
        return AlgebraSpec(n, field, alpha, beta, phi, r=r, s=s, name=name)
    if not has_params or 'alpha' not in data or 'beta' not in data:
        raise SpecError("give alpha and beta, or the roots r and s")
    return AlgebraSpec(n, field, data['alpha'], data['beta'], phi, name=name)


def spec_load(source: str) -> AlgebraSpec:
    """ Parse TOML text into a validated AlgebraSpec

    Raises:
        ParseError: If the text is not valid TOML.
        SpecError: If the keys are inconsistent.
    """
    try:
        data = tomllib.loads(source)
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"invalid spec file: {e}") from e
    return spec_from_dict(data)


def load_spec(path: Union[str, Path]) -> AlgebraSpec:
    """ Read a spec from a TOML file, or `example:<name>` """
    path = str(path)
    if path.startswith('example:'):
        from .examples import example_spec
        return example_spec(path.split(':', 1)[1])
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise SpecError(f"cannot read spec file {path}: {e}") from e
    spec = spec_load(text)
    LOG.debug("loaded %s from %s", spec, path)
    return spec


def classical(field: Field, alpha, beta, gamma,
              name: str = '') -> AlgebraSpec:
    """ The classical down-up algebra A(α, β, γ) with n = 0 """
    return AlgebraSpec(0, field, alpha, beta, gamma, name=name)


def check_same_spec(spec: AlgebraSpec,
                    other: Optional[AlgebraSpec]) -> None:
    """ Refuse to combine objects of two different specs """
    if other is not None and spec is not other and spec != other:
        raise SpecMismatchError(f"cannot combine {spec} with {other}")
