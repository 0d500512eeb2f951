# Version control taken from numpy
# We first need to detect if we're being called as part of the dupy setup
# procedure itself in a reliable manner.
try:
    __DUPY_SETUP__
except NameError:
    __DUPY_SETUP__ = False

if __DUPY_SETUP__:
    import sys
    sys.stderr.write('Running from dupy source directory.\n')
else:
    from .version import git_revision as __git_revision__
    from .version import version as __version__
    from .version import full_version as __full_version__


# Simply import all functions and classes from all files to make them available
# at the package level
from .library import *
from .coeff import *
from .algebraspec import AlgebraSpec, spec_from_dict, spec_load, load_spec, \
    classical, check_same_spec
from .element import *
from .rewriting import *
from .parser import ExprAst, parse_expr, evaluate, parse_element, tokenize
from .linalg import *
from .growth import *
from .centercase import CenterCase
from .structure import *
from .center import *
from .normal import *
from .skewlaurent import *
from .gwa import *
from .specialization import *
from .morphism import *
from .automorphism import *
from .isomorphism import *
from .examples import EXAMPLES, list_examples, example_spec
from .acceptance import AcceptanceSuite, CriterionResult, summary_table
from .cli import run_command
from .introspection import logging
