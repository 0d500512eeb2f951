# -*- coding: utf-8 -*-
"""
This file contains definitions of constants that are
used in various places in the code.

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

# === serialization ===
SCHEMA = "dua/1"

# === rewriting engine ===
# Entries kept in the memoized straightening table of each spec
CACHE_SIZE = 10_000
STRATEGIES = ('leftmost', 'rightmost')

# === randomized checks ===
SEED = 0
RANDOM_WORDS = 200       # strategy independence
RANDOM_TRIPLES = 200     # associativity / distributivity
RANDOM_PAIRS = 200       # zero products for β ≠ 0
THETA_PAIRS = 100        # multiplicativity of θ
SPECIALIZE_PAIRS = 100   # specialization homomorphism
AUT_DRAWS = 50           # valid and perturbed automorphisms
AUT_COMPOSITIONS = 20
MAX_WORD_LENGTH = 8
MAX_TERMS = 4

# === default degree bounds ===
THETA_MAXDEG = 5
CENTER_MAXDEG = 4
NORMAL_MAXDEG = 4
BASIS_MAXDEG = 6
GK_MAXN = 14

# Height of the rational grid used by the brute-force affine oracle
AFFINE_GRID_HEIGHT = 4
AFFINE_PAIRS = 40        # random pairs against the grid oracle
