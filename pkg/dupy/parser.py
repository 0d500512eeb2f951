# -*- coding: utf-8 -*-
"""
Expression language for elements of A(α, β, φ).

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' NAT)?
    atom   := NAT | 'u' | 'd' | 't'NAT | 'H' | 'K' | 'zeta' | '(' expr ')'

Products are noncommutative and evaluated left to right. Division is
only by scalar-valued factors. Implicit multiplication is not allowed.
"""
from __future__ import annotations
import logging
import re
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .algebraspec import AlgebraSpec
from .element import Element
from .library import ParseError

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z]\w*)"
                   r"|(?P<op>[-+*/^()]))")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


class ExprAst(NamedTuple):
    """ Node of a parsed expression

    kind is one of 'sum', 'neg', 'product', 'inverse', 'power',
    'scalar' and 'symbol'. Leaves keep their text in `value`, powers
    their exponent.
    """
    kind: str
    value: Optional[object] = None
    children: Tuple[ExprAst, ...] = ()
    position: int = 0


def tokenize(text: str) -> Iterator[Token]:
    pos = 0
    while pos < len(text):
        if text[pos:].isspace():
            return
        match = TOKEN.match(text, pos)
        if match is None:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character "
                             f"{text[pos + offset]!r}", pos + offset)
        kind = match.lastgroup
        yield Token(kind, match.group(kind), match.start(kind))
        pos = match.end()


class _Parser:
    """ Recursive descent over the token list """
    def __init__(self, text: str, spec: AlgebraSpec):
        self.text = text
        self.spec = spec
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    def peek(self) -> Optional[Token]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def position(self) -> int:
        token = self.peek()
        return len(self.text) if token is None else token.position

    def take(self, text: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of expression",
                             len(self.text))
        if text is not None and token.text != text:
            raise ParseError(f"expected {text!r}, got {token.text!r}",
                             token.position)
        self.index += 1
        return token

    def at(self, *texts: str) -> bool:
        token = self.peek()
        return token is not None and token.kind == 'op' and \
            token.text in texts

    def parse(self) -> ExprAst:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        tree = self.expr()
        if self.peek() is not None:
            token = self.peek()
            raise ParseError(f"unexpected {token.text!r}", token.position)
        return tree

    def expr(self) -> ExprAst:
        start = self.position()
        terms = []
        sign = '+'
        if self.at('+', '-'):
            sign = self.take().text
        while True:
            term = self.term()
            terms.append(ExprAst('neg', children=(term,),
                                 position=term.position)
                         if sign == '-' else term)
            if not self.at('+', '-'):
                break
            sign = self.take().text
        if len(terms) == 1 and terms[0].kind != 'neg':
            return terms[0]
        return ExprAst('sum', children=tuple(terms), position=start)

    def term(self) -> ExprAst:
        start = self.position()
        factors = [self.factor()]
        while self.at('*', '/'):
            op = self.take().text
            factor = self.factor()
            if op == '/':
                factor = ExprAst('inverse', children=(factor,),
                                 position=factor.position)
            factors.append(factor)
        if len(factors) == 1:
            return factors[0]
        return ExprAst('product', children=tuple(factors), position=start)

    def factor(self) -> ExprAst:
        base = self.atom()
        if not self.at('^'):
            return base
        self.take('^')
        token = self.take()
        if token.kind != 'nat':
            raise ParseError(f"exponent must be a non-negative integer, "
                             f"got {token.text!r}", token.position)
        return ExprAst('power', int(token.text), (base,), base.position)

    def atom(self) -> ExprAst:
        token = self.take()
        if token.kind == 'nat':
            return ExprAst('scalar', token.text, position=token.position)
        if token.kind == 'name':
            self._check_symbol(token)
            return ExprAst('symbol', token.text, position=token.position)
        if token.text == '(':
            inner = self.expr()
            self.take(')')
            return inner
        raise ParseError(f"unexpected {token.text!r}", token.position)

    def _check_symbol(self, token: Token) -> None:
        name = token.text
        if name in ('u', 'd', 'H', 'K') or \
                name in self.spec.field.scalar_names():
            return
        match = re.fullmatch(r't(\d+)', name)
        if match is None:
            raise ParseError(f"unknown symbol {name!r}", token.position)
        index = int(match.group(1))
        if not 1 <= index <= self.spec.n:
            raise ParseError(f"{name} is out of range for n = "
                             f"{self.spec.n}", token.position)


def parse_expr(text: str, spec: AlgebraSpec) -> ExprAst:
    """ Parse text into an ExprAst for the given spec

    Raises:
        ParseError: On syntax errors, unknown symbols or tᵢ with i > n;
            the error carries the position.
    """
    return _Parser(text, spec).parse()


def _symbol(name: str, spec: AlgebraSpec) -> Element:
    if name in ('H', 'K'):
        from .structure import make_H, make_K
        return make_H(spec) if name == 'H' else make_K(spec)
    scalars = spec.field.scalar_names()
    if name in scalars:
        return Element.constant(spec, scalars[name])
    return spec.gen(name)


def evaluate(tree: ExprAst, spec: AlgebraSpec) -> Element:
    """ Evaluate a parsed expression into normal form

    Raises:
        ParseError: When dividing by a factor that is not a nonzero
            scalar.
        MissingRootsError: If H or K is used without roots.
    """
    kind = tree.kind
    if kind == 'scalar':
        return Element.constant(spec, int(tree.value))
    if kind == 'symbol':
        return _symbol(tree.value, spec)
    if kind == 'sum':
        result = Element.zero(spec)
        for child in tree.children:
            result = result + evaluate(child, spec)
        return result
    if kind == 'neg':
        return -evaluate(tree.children[0], spec)
    if kind == 'product':
        result = Element.one(spec)
        for child in tree.children:
            result = result * evaluate(child, spec)
        return result
    if kind == 'power':
        return evaluate(tree.children[0], spec)**tree.value
    if kind == 'inverse':
        value = evaluate(tree.children[0], spec)
        if not value.is_scalar() or not value:
            raise ParseError("division by a factor that is not a nonzero "
                             "scalar", tree.position)
        scalar = value.terms[(0, 0, 0)].LC
        return Element.constant(spec, spec.field.inv(scalar))
    raise AssertionError(f"unknown node kind {kind!r}")


def parse_element(text: str, spec: AlgebraSpec) -> Element:
    """ Parse and evaluate text into an Element of spec """
    return evaluate(parse_expr(text, spec), spec)
