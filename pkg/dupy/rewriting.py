# -*- coding: utf-8 -*-
"""
Rewriting of words in u, d, t₁..tₙ to PBW normal form.

The defining relations, read with leading words ddu and duu under the
degree-lexicographic order with u < d, give the rules

    ddu → α·dud + β·udd + φ·d
    duu → α·udu + β·uud + φ·u

The tᵢ are central and are collected into the coefficient. Words that
avoid both leading words are exactly u^i (du)^j d^k.

Terms are processed largest word first. Every rule replaces a word by
strictly smaller ones, so each word is expanded once with its full
accumulated coefficient.

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
import heapq
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple, Union

import numpy as np
from sympy.polys.rings import PolyElement

from .algebraspec import AlgebraSpec
from .constants import CACHE_SIZE, STRATEGIES, RANDOM_WORDS, MAX_WORD_LENGTH
from .element import Element, random_word
from .library import CheckResult, ParseError

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

NORMAL = re.compile(r'^(u*)((?:du)*)(d*)$')
REDEX = re.compile(r'(?=d[du]u)')
LETTER = re.compile(r'\s*(?:(u|d|t(\d+))\s*\*?)')
_ORDER = str.maketrans({'u': '1', 'd': '0'})

CoreTerms = Tuple[Tuple[Tuple[int, int, int], PolyElement], ...]


@dataclass(frozen=True)
class Word:
    """ A monomial of the free algebra K⟨u, d, t₁..tₙ⟩ with a prefactor

    Attributes:
        letters: Sequence of 'u', 'd' and 't<i>' tokens.
        coeff: Scalar prefactor; an int or a field element.
    """
    letters: Tuple[str, ...]
    coeff: object = 1

    @classmethod
    def from_string(cls, text: str, coeff=1) -> Word:
        """ Read "ddu", "d*d*u" or "d*t1*u" into a word """
        letters = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            match = LETTER.match(text, pos)
            if match is None or match.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r} in "
                                 f"word {text!r}", pos)
            letters.append(match.group(1))
            pos = match.end()
        return cls(tuple(letters), coeff)

    def __str__(self) -> str:
        return '*'.join(self.letters) or '1'


class Rewriter:
    """ Reduction engine for one algebra spec

    Attributes:
        spec: The algebra whose relations are applied.
        strategy: 'leftmost' or 'rightmost': which redex is rewritten
            first. Normal forms do not depend on it.
        memoize: Whether products straighten through the memo table of
            core words (du)^j d^k u^i' (du)^j'. When False, products
            reduce the full concatenated word.
        cache_size: Capacity of the memo table.
    """
    def __init__(self, spec: AlgebraSpec, strategy: str = 'leftmost',
                 memoize: bool = True):
        self.spec = spec
        self.strategy = strategy
        self.memoize = memoize
        self._cache_size = CACHE_SIZE
        self._core_cached = lru_cache(maxsize=self._cache_size)(self._core)
        ring = spec.ring
        self._alpha = ring(spec.alpha)
        self._beta = ring(spec.beta)
        self._phi = spec.phi

    @property
    def cache_size(self) -> int:
        return self._cache_size

    @cache_size.setter
    def cache_size(self, size: int) -> None:
        self._cache_size = size
        self._core_cached = lru_cache(maxsize=size)(self._core)

    @property
    def strategy(self) -> str:
        return self._strategy

    @strategy.setter
    def strategy(self, strategy: str) -> None:
        if strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        self._strategy = strategy

    def cache_info(self):
        return self._core_cached.cache_info()

    def __call__(self, word: Union[Word, str]) -> Element:
        """ Wrapper for self.apply() """
        return self.apply(word)

    def apply(self, word: Union[Word, str]) -> Element:
        """ Reduce a word to its PBW normal form

        Args:
            word: A Word, or text such as "d*d*u*t1".
        Returns:
            The normal form as an Element.
        Raises:
            ParseError: On letters outside u, d, t₁..tₙ.
        """
        if isinstance(word, str):
            word = Word.from_string(word)
        spec = self.spec
        exps = [0] * spec.n
        ud = []
        for letter in word.letters:
            if letter in ('u', 'd'):
                ud.append(letter)
                continue
            index = int(letter[1:])
            if not 1 <= index <= spec.n:
                raise ParseError(f"{letter} is out of range for n = {spec.n}")
            exps[index - 1] += 1
        coeff = spec.ring({tuple(exps): spec.field(word.coeff)})
        return self.reduce_terms({''.join(ud): coeff})

    # === rules ===
    def redex(self, word: str) -> Optional[int]:
        """ Position of the redex selected by the strategy, if any """
        positions = [m.start() for m in REDEX.finditer(word)]
        if not positions:
            return None
        return positions[0] if self.strategy == 'leftmost' else positions[-1]

    def step(self, word: str, position: int) -> Dict[str, PolyElement]:
        """ Rewrite the leading word at `position` once """
        head, tail = word[:position], word[position + 3:]
        lead = word[position:position + 3]
        if lead == 'ddu':
            images = (('dud', self._alpha), ('udd', self._beta),
                      ('d', self._phi))
        elif lead == 'duu':
            images = (('udu', self._alpha), ('uud', self._beta),
                      ('u', self._phi))
        else:
            raise ValueError(f"no leading word at {position} in {word!r}")
        return {head + middle + tail: coeff
                for middle, coeff in images if coeff}

    def reduce_terms(self, terms: Dict[str, PolyElement]) -> Element:
        """ Normal form of Σ word·coefficient over words in u, d """
        pending: Dict[str, PolyElement] = {}
        heap = []

        def push(word: str, coeff: PolyElement) -> None:
            if word in pending:
                pending[word] = pending[word] + coeff
            else:
                pending[word] = coeff
                heapq.heappush(heap, (-len(word), word.translate(_ORDER),
                                      word))

        for word, coeff in terms.items():
            if coeff:
                push(word, coeff)

        zero = self.spec.ring.zero
        result: Dict[Tuple[int, int, int], PolyElement] = {}
        while heap:
            *_, word = heapq.heappop(heap)
            coeff = pending.pop(word)
            if not coeff:
                continue
            normal = NORMAL.match(word)
            if normal:
                i, du, k = (len(g) for g in normal.groups())
                key = (i, du // 2, k)
                result[key] = result.get(key, zero) + coeff
                continue
            for image, c in self.step(word, self.redex(word)).items():
                push(image, coeff * c)
        return Element(self.spec, result)

    # === products ===
    def _core(self, j: int, k: int, i2: int, j2: int) -> CoreTerms:
        word = 'du' * j + 'd' * k + 'u' * i2 + 'du' * j2
        reduced = self.reduce_terms({word: self.spec.ring.one})
        return tuple(reduced.terms.items())

    def core(self, j: int, k: int, i2: int, j2: int) -> CoreTerms:
        """ Normal form of (du)^j d^k u^i2 (du)^j2 as (key, poly) pairs """
        if k == 0 and i2 == 0:
            return (((0, j + j2, 0), self.spec.ring.one),)
        if self.memoize:
            return self._core_cached(j, k, i2, j2)
        return self._core(j, k, i2, j2)

    def multiply(self, a: Element, b: Element) -> Element:
        """ Product of two normal forms

        Only the middle of u^i (du)^j d^k · u^i' (du)^j' d^k' needs
        straightening; the outer u^i and d^k' are carried along.
        """
        if not self.memoize:
            terms: Dict[str, PolyElement] = {}
            zero = self.spec.ring.zero
            for (i, j, k), p in a.terms.items():
                for (i2, j2, k2), q in b.terms.items():
                    word = ('u' * i + 'du' * j + 'd' * k
                            + 'u' * i2 + 'du' * j2 + 'd' * k2)
                    terms[word] = terms.get(word, zero) + p * q
            return self.reduce_terms(terms)

        zero = self.spec.ring.zero
        result: Dict[Tuple[int, int, int], PolyElement] = {}
        for (i, j, k), p in a.terms.items():
            for (i2, j2, k2), q in b.terms.items():
                pq = p * q
                for (ci, cj, ck), c in self.core(j, k, i2, j2):
                    key = (i + ci, cj, ck + k2)
                    result[key] = result.get(key, zero) + c * pq
        return Element(self.spec, result)


def reduce_word(word: Union[Word, str], spec: AlgebraSpec,
                strategy: str = 'leftmost') -> Element:
    """ The unique PBW normal form of a word """
    if strategy == 'leftmost':
        return spec.rewriter.apply(word)
    return Rewriter(spec, strategy=strategy, memoize=False).apply(word)


def normalize(element: Element) -> Element:
    """ Re-reduce every basis word of an element; the identity on PBW forms """
    spec = element.spec
    terms = {'u' * i + 'du' * j + 'd' * k: poly
             for (i, j, k), poly in element.terms.items()}
    return spec.rewriter.reduce_terms(terms)


def format_word_sum(terms: Dict[str, PolyElement], spec: AlgebraSpec) -> str:
    """ Print Σ word·coefficient without reducing it """
    names = [str(s) for s in spec.ring.symbols]
    pieces = []
    for word in sorted(terms, key=lambda w: (-len(w), w.translate(_ORDER))):
        for m, c in terms[word].terms():
            letters = list(word)
            letters += [name if e == 1 else f'{name}^{e}'
                        for name, e in zip(names, m) if e]
            pieces.append((c, '*'.join(letters)))
    return spec.field.format_terms(pieces)


CONFLUENCE_IDENTITY = ("(d^2*u - alpha*d*u*d - beta*u*d^2 - phi*d)*u"
                       " - d*(d*u^2 - alpha*u*d*u - beta*u^2*d - phi*u)"
                       " = beta*(u*d^2*u - d*u^2*d)")


def confluence_check(spec: AlgebraSpec) -> CheckResult:
    """ Resolve the single overlap ambiguity dduu both ways

    The word dduu contains the leading word ddu at position 0 and duu
    at position 1. Each is rewritten first, the rest is reduced by an
    unmemoized engine, and the two normal forms are compared. The two
    one-step expansions must differ by β(ud²u - du²d).

    Returns:
        A CheckResult whose details hold both expansions, both normal
        forms and the echoed identity.
    """
    rewriter = Rewriter(spec, memoize=False)
    ddu_first = rewriter.step('dduu', 0)
    duu_first = rewriter.step('dduu', 1)
    left = rewriter.reduce_terms(ddu_first)
    right = rewriter.reduce_terms(duu_first)

    ring = spec.ring
    difference = dict(ddu_first)
    for word, coeff in duu_first.items():
        difference[word] = difference.get(word, ring.zero) - coeff
    difference = {w: c for w, c in difference.items() if c}
    beta = ring(spec.beta)
    expected = {w: c for w, c in {'uddu': beta, 'duud': -beta}.items() if c}

    ok = left == right
    details = {
        'ddu_first': format_word_sum(ddu_first, spec),
        'duu_first': format_word_sum(duu_first, spec),
        'ddu_first_normal': str(left),
        'duu_first_normal': str(right),
        'overlap_defect': format_word_sum(difference, spec),
        'defect_matches_identity': difference == expected,
        'identity': CONFLUENCE_IDENTITY,
    }
    if not ok:
        LOG.error("dduu resolves differently: %s vs %s", left, right)
    return CheckResult(ok and details['defect_matches_identity'],
                       witness=None if ok else left - right,
                       note="overlap dduu", details=details)


def strategy_check(spec: AlgebraSpec, count: int = RANDOM_WORDS,
                   max_length: int = MAX_WORD_LENGTH,
                   rng: Optional[np.random.Generator] = None) -> CheckResult:
    """ Leftmost and rightmost reduction agree on random words """
    rng = np.random.default_rng(0) if rng is None else rng
    left = Rewriter(spec, 'leftmost', memoize=False)
    right = Rewriter(spec, 'rightmost', memoize=False)
    for _ in range(count):
        word = random_word(spec, int(rng.integers(0, max_length + 1)), rng)
        a = left.reduce_terms({word: spec.ring.one})
        b = right.reduce_terms({word: spec.ring.one})
        if a != b:
            return CheckResult(False, witness=word,
                               note="strategies disagree")
    return CheckResult(True, note=f"{count} random words")
