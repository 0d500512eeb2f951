# -*- coding: utf-8 -*-
"""
Generators of the center, dispatched over the nine parameter regimes,
and a bounded-degree completeness probe.

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
from math import lcm
from typing import Any, Dict, List, Tuple

import termtables as tt

from .algebraspec import AlgebraSpec
from .centercase import CenterCase
from .coeff import mult_dependence, root_of_unity_order
from .constants import CENTER_MAXDEG
from .element import Element, commutator, pbw_basis, basis_element
from .library import CheckResult
from .linalg import rank, solve_kernel
from .structure import du, ud, is_central, make_H, make_K

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)


@dataclass
class CenterDescription:
    """ Generators of Z(A) for one spec

    Only membership in the center is certified; whether the list
    generates all of Z(A) is probed by :func:`center_check`.

    Attributes:
        case: The parameter regime.
        generators: Central generators, the tᵢ last.
        labels: Human readable name of each generator.
        central: is_central outcome of each generator.
        note: How the regime was selected.
    """
    case: CenterCase
    generators: List[Element] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    central: List[bool] = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return all(self.central)

    def add(self, label: str, generator: Element) -> None:
        self.labels.append(label)
        self.generators.append(generator)
        result = is_central(generator)
        if not result:
            LOG.warning("generator %s of case %d is not central: %s",
                        label, self.case.value, result.witness)
        self.central.append(result.ok)

    def to_json(self) -> Dict[str, Any]:
        return {'case': self.case.value, 'regime': str(self.case),
                'note': self.note,
                'generators': [{'label': label, 'element': str(g),
                                'central': ok}
                               for label, g, ok in zip(self.labels,
                                                       self.generators,
                                                       self.central)]}

    def table(self) -> str:
        rows = [[label, str(g), ok] for label, g, ok
                in zip(self.labels, self.generators, self.central)]
        return tt.to_string(rows, header=['generator', 'element', 'central'])


def _hk_label(i: int, j: int) -> str:
    parts = [name if e == 1 else f'{name}^{e}'
             for name, e in (('H', i), ('K', j)) if e]
    return '*'.join(parts)


def _minimal_relations(r, s, m: int, field_) -> List[Tuple[int, int]]:
    """ Minimal nonzero (i, j) ≥ 0 with s^i r^j = 1, i, j ≤ m """
    hits = [(i, j) for i in range(m + 1) for j in range(m + 1)
            if (i, j) != (0, 0)
            and field_.is_one(field_.pow(s, i) * field_.pow(r, j))]
    return [(i, j) for i, j in hits
            if not any((a, b) != (i, j) and a <= i and b <= j
                       for a, b in hits)]


def _classify(spec: AlgebraSpec) -> Tuple[CenterCase, Dict[str, Any]]:
    field_ = spec.field
    r, s = spec.require_roots()
    phi_zero = not spec.phi
    ord_r = root_of_unity_order(r, field_)
    ord_s = root_of_unity_order(s, field_)

    if field_.equal(r, s):
        if field_.is_one(r) and not phi_zero:
            return CenterCase.UNIPOTENT, {}
        if ord_r is not None and (ord_r >= 2 or phi_zero):
            return CenterCase.EQUAL_ROOTS, {'m': ord_r}
        return CenterCase.POLYNOMIAL, {}
    if ord_r is not None and ord_s is not None:
        if not phi_zero and ord_r == 1:
            return CenterCase.R_TRIVIAL, {'m': ord_s}
        if not phi_zero and ord_s == 1:
            return CenterCase.S_TRIVIAL, {'m': ord_r}
        return CenterCase.BOTH_ROOTS_OF_UNITY, {'m': lcm(ord_r, ord_s)}
    if ord_r is not None:
        if ord_r >= 2 or phi_zero:
            return CenterCase.R_ROOT_OF_UNITY, {'m': ord_r}
        return CenterCase.POLYNOMIAL, {}
    if ord_s is not None:
        if ord_s >= 2 or phi_zero:
            return CenterCase.S_ROOT_OF_UNITY, {'m': ord_s}
        return CenterCase.POLYNOMIAL, {}

    relation = mult_dependence(r, s, field_)
    if relation is None:
        return CenterCase.POLYNOMIAL, {}
    i, j = relation
    if i < 0 and j < 0:
        i, j = -i, -j
    if i < 0 or j < 0:
        return CenterCase.POLYNOMIAL, {'relation': (i, j)}
    return CenterCase.DEPENDENT, {'relation': (i, j)}


def center_generators(spec: AlgebraSpec) -> CenterDescription:
    """ Central generators for the regime of (r, s, φ)

    Each generator is passed through :func:`is_central` and the outcome
    is recorded, so a failing generator is reported rather than dropped.

    Raises:
        MissingRootsError: If the spec has no roots r, s.
        UnsupportedError: If the dispatch needs an undecidable
            multiplicative-dependence query.
    """
    r, s = spec.require_roots()
    case, info = _classify(spec)
    description = CenterDescription(case)
    m = info.get('m')

    if case == CenterCase.UNIPOTENT:
        x, y = ud(spec), du(spec)
        phi = Element.constant(spec, spec.phi)
        description.add('(du-ud)^2-phi*(du+ud)',
                        (y - x)**2 - phi * (y + x))
    elif case in (CenterCase.EQUAL_ROOTS, CenterCase.S_ROOT_OF_UNITY,
                  CenterCase.R_TRIVIAL):
        description.add(_hk_label(m, 0), make_H(spec)**m)
    elif case in (CenterCase.R_ROOT_OF_UNITY, CenterCase.S_TRIVIAL):
        description.add(_hk_label(0, m), make_K(spec)**m)
    elif case == CenterCase.DEPENDENT:
        # r^i s^j = 1 makes H^j K^i central
        i, j = info['relation']
        description.add(_hk_label(j, i), make_H(spec)**j * make_K(spec)**i)
    elif case == CenterCase.BOTH_ROOTS_OF_UNITY:
        description.add(f'd^{m}', spec.d**m)
        description.add(f'u^{m}', spec.u**m)
        H, K = make_H(spec), make_K(spec)
        for i, j in _minimal_relations(r, s, m, spec.field):
            description.add(_hk_label(i, j), H**i * K**j)

    for index in range(1, spec.n + 1):
        description.add(f't{index}', spec.t(index))
    description.note = f"case ({case.value}): {case}"
    if 'relation' in info:
        description.note += f", relation r^{info['relation'][0]} " \
                            f"s^{info['relation'][1]} = 1"
    LOG.debug("center of %s:\n%s", spec, description.table())
    return description


def central_space(spec: AlgebraSpec, maxdeg: int) -> List[Element]:
    """ Basis of the central elements of weighted degree ≤ maxdeg

    Commutators with u and d shift the grade #d - #u by one, so the
    system is solved one grade at a time.
    """
    by_grade: Dict[int, List[Element]] = {}
    for mono in pbw_basis(spec, maxdeg):
        by_grade.setdefault(mono.k - mono.i, []).append(
            basis_element(spec, mono))
    maps = [lambda x: commutator(x, spec.u), lambda x: commutator(x, spec.d)]
    out = []
    for grade in sorted(by_grade):
        out.extend(solve_kernel(by_grade[grade], maps))
    return out


def generated_space(description: CenterDescription, spec: AlgebraSpec,
                    maxdeg: int) -> List[Element]:
    """ Monomials in the generators whose degrees sum to at most maxdeg """
    gens = [(g, g.weighted_degree()) for g in description.generators if g]
    out = []

    def extend(start: int, product: Element, budget: int) -> None:
        out.append(product)
        for index in range(start, len(gens)):
            g, degree = gens[index]
            if 0 < degree <= budget:
                extend(index, product * g, budget - degree)

    extend(0, Element.one(spec), maxdeg)
    return out


def center_check(spec: AlgebraSpec,
                 maxdeg: int = CENTER_MAXDEG) -> CheckResult:
    """ Compare the degree ≤ maxdeg central space with the truncated
    subalgebra generated by :func:`center_generators`

    The check passes when every generator is central and both spaces
    have the same span.
    """
    description = center_generators(spec)
    central = central_space(spec, maxdeg)
    generated = generated_space(description, spec, maxdeg)
    rank_z = rank(central)
    rank_g = rank(generated)
    rank_both = rank(central + generated)
    ok = description.ok and rank_z == rank_g == rank_both
    note = (f"case ({description.case.value}): central space of degree "
            f"≤ {maxdeg} has dimension {rank_z}, generated part {rank_g}, "
            f"joint {rank_both}")
    return CheckResult(ok, witness=None if ok else description, note=note,
                       details={'case': description.case.value,
                                'central_dimension': rank_z,
                                'generated_dimension': rank_g,
                                'joint_dimension': rank_both})
