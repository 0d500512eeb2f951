# -*- coding: utf-8 -*-
"""
Named algebra specs shipped with dupy, one per regime the tools tell
apart. Any `--spec` argument accepts `example:<name>`.
"""
from __future__ import annotations
import logging
from typing import Any, Dict, List

from .algebraspec import AlgebraSpec, spec_from_dict
from .library import SpecError

LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

ZETA6 = {'kind': 'cyclotomic', 'm': 6}
ZETA4 = {'kind': 'cyclotomic', 'm': 4}

EXAMPLES: Dict[str, Dict[str, Any]] = {
    # center regimes, by the case they fall in
    'equal-roots': {'n': 1, 'field': ZETA6, 'r': 'zeta', 's': 'zeta',
                    'phi': 't1'},
    'unipotent': {'n': 1, 'alpha': 2, 'beta': -1, 'phi': 't1'},
    'r-root': {'n': 1, 'r': -1, 's': 2, 'phi': 't1'},
    's-root': {'n': 1, 'r': 2, 's': -1, 'phi': 't1'},
    'dependent': {'n': 1, 'r': 2, 's': '1/2', 'phi': 't1'},
    'both-roots': {'n': 1, 'field': ZETA6, 'r': 'zeta^2', 's': 'zeta^4',
                   'phi': 't1'},
    'r-trivial': {'n': 1, 'field': ZETA4, 'r': 1, 's': 'zeta', 'phi': 't1'},
    's-trivial': {'n': 1, 'field': ZETA4, 'r': 'zeta', 's': 1, 'phi': 't1'},
    'generic': {'n': 1, 'r': 2, 's': 3, 'phi': 't1'},
    # partners for the isomorphism decision
    'swapped': {'n': 1, 'r': 3, 's': 2, 'phi': 't1'},
    'inverted': {'n': 1, 'r': '1/2', 's': '1/3', 'phi': 't1'},
    'quadratic': {'n': 1, 'r': 2, 's': 3, 'phi': 't1^2'},
    'shifted-square': {'n': 1, 'r': 2, 's': 3, 'phi': '(t1 + 1)^2'},
    'quadratic-plus-one': {'n': 1, 'r': 2, 's': 3, 'phi': 't1^2 + 1'},
    # other shapes
    'zero-divisor': {'n': 1, 'alpha': 2, 'beta': 0, 'phi': 't1'},
    'two-variables': {'n': 2, 'alpha': 2, 'beta': 1, 'phi': 't1*t2'},
    'classical': {'n': 0, 'alpha': 0, 'beta': 1, 'phi': 1},
    'irreducible': {'n': 1, 'alpha': 1, 'beta': 1, 'phi': 't1'},
}


def list_examples() -> List[str]:
    return sorted(EXAMPLES)


_LOADED: Dict[str, AlgebraSpec] = {}


def example_spec(name: str) -> AlgebraSpec:
    """ The bundled spec `name`

    Raises:
        SpecError: If there is no example of that name.
    """
    if name not in EXAMPLES:
        raise SpecError(f"no example named {name!r}; available: "
                        f"{', '.join(list_examples())}")
    if name not in _LOADED:
        data = dict(EXAMPLES[name], name=name)
        _LOADED[name] = spec_from_dict(data)
        LOG.debug("loaded example %s", _LOADED[name])
    return _LOADED[name]
