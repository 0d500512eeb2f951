# -*- coding: utf-8 -*-
"""
Library of utility classes and functions shared by the dupy modules:
the exception hierarchy, check results and small combinatorial helpers.

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
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Optional, Tuple


class ParseError(ValueError):
    """ Raised on malformed expressions, with the offending position """
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SpecError(ValueError):
    """ Raised when an algebra spec is malformed or inconsistent """


class MissingRootsError(SpecError):
    """ Raised when an operation needs the roots r, s of x² - αx - β """


class ArityError(SpecError):
    """ Raised when a polynomial has the wrong number of variables """


class SpecMismatchError(ValueError):
    """ Raised when objects belonging to different algebras are mixed """


class PreconditionError(ValueError):
    """ Raised when a documented precondition does not hold """


class DivisionByZeroError(ZeroDivisionError):
    """ Raised on exact division by zero """


class UnsupportedError(NotImplementedError):
    """ Raised outside the classes of input the algorithms can decide """


class UndecidedError(UnsupportedError):
    """ Raised when a decision procedure cannot settle a regime """


class ConstraintViolationError(ValueError):
    """ Raised when automorphism parameters break the φ-constraint

    Attributes:
        identity: Human readable form of the failed identity.
    """
    def __init__(self, message: str, identity: str = ""):
        super().__init__(message)
        self.identity = identity


@dataclass
class CheckResult:
    """ Outcome of a verification with an optional witness

    Truthiness follows `ok`, so results can be used directly in
    conditions and asserts.

    Attributes:
        ok: Whether the check passed.
        witness: The offending object when the check failed.
        note: Free text describing what was checked.
        details: Extra named values for reports.
    """
    ok: bool
    witness: Any = None
    note: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.ok)


def exponent_vectors(n: int, total: int) -> Iterator[Tuple[int, ...]]:
    """ All exponent vectors of length n with entries summing to ≤ total

    Vectors are produced by increasing total degree, lexicographically
    inside a degree.
    """
    if total < 0:
        return
    for degree in range(total + 1):
        yield from _vectors_of_degree(n, degree)


def _vectors_of_degree(n: int, degree: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in _vectors_of_degree(n - 1, degree - first):
            yield (first,) + rest


def parse_csv(text: str) -> Tuple[str, ...]:
    """ Split a comma separated command-line list, dropping blanks """
    return tuple(item.strip() for item in text.split(',') if item.strip())
