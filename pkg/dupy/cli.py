# -*- coding: utf-8 -*-
"""
Command line interface: ``dupy <command> --spec FILE ...``

Exit codes are 0 for success or a true property, 1 for a false property
or an empty answer, 2 for usage, parse, spec and precondition errors and
3 for unsupported or undecided inputs.
"""
from __future__ import annotations
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, \
    Tuple

import numpy as np

from .acceptance import AcceptanceSuite, summary_table
from .algebraspec import AlgebraSpec, load_spec
from .automorphism import AutSpec, aut_from_params
from .center import center_generators
from .constants import (GK_MAXN, NORMAL_MAXDEG, SCHEMA, SEED, STRATEGIES,
                        THETA_MAXDEG, THETA_PAIRS)
from .examples import example_spec, list_examples
from .growth import gk_probe
from .gwa import gwa_iso_check
from .introspection import get_logger, shows_progress, verbosity_level
from .isomorphism import iso_decide
from .library import (CheckResult, ConstraintViolationError,
                      DivisionByZeroError, ParseError, PreconditionError,
                      SpecError, SpecMismatchError, UnsupportedError,
                      parse_csv)
from .normal import NormalSearch, search_table, search_to_json, \
    twist_normal_check
from .parser import parse_element
from .rewriting import Rewriter, confluence_check
from .skewlaurent import theta_check
from .specialization import specialize, specialize_check
from .structure import hk_identities, is_central


LOG = logging.getLogger(__name__)
logging.captureWarnings(True)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3

Outcome = Tuple[int, Dict[str, Any], str]


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _check_outcome(result: CheckResult) -> Outcome:
    payload = {'ok': result.ok, 'note': result.note,
               'details': _jsonable(result.details)}
    text = f"{'true' if result else 'false'}: {result.note}"
    if result.witness is not None and not result:
        payload['witness'] = _jsonable(result.witness)
        text += f"\nwitness: {result.witness}"
    return (EXIT_OK if result else EXIT_FALSE), payload, text


def _expr(args, spec: AlgebraSpec):
    if args.expr is None:
        raise ParseError("--expr is required for this command")
    return parse_element(args.expr, spec)


def _values(text: Optional[str], spec: AlgebraSpec, flag: str,
            count: Optional[int] = None) -> List:
    if text is None:
        raise ParseError(f"{flag} is required for this command")
    items = parse_csv(text)
    if count is not None and len(items) != count:
        raise ParseError(f"{flag} expects {count} values, got {len(items)}")
    return [spec.field(item) for item in items]


# === commands ===
def cmd_normalize(args) -> Outcome:
    spec = args.spec
    a = _expr(args, spec)
    if args.strategy != 'leftmost':
        rewriter = Rewriter(spec, strategy=args.strategy, memoize=False)
        a = rewriter.reduce_terms({'u' * i + 'du' * j + 'd' * k: poly
                                   for (i, j, k), poly in a.terms.items()})
    return EXIT_OK, {'element': a.to_json(), 'text': str(a)}, str(a)


def cmd_central(args) -> Outcome:
    return _check_outcome(is_central(_expr(args, args.spec)))


def cmd_normal_check(args) -> Outcome:
    spec = args.spec
    certificate = twist_normal_check(_expr(args, spec))
    if certificate is None:
        return EXIT_FALSE, {'normal': False}, "false: no scalar twist"
    c_u, c_d = certificate.format(spec)
    return (EXIT_OK, {'normal': True, 'twist': certificate.to_json(spec)},
            f"true: N*u = ({c_u})*u*N, N*d = ({c_d})*d*N")


def cmd_center_gens(args) -> Outcome:
    description = center_generators(args.spec)
    code = EXIT_OK if description.ok else EXIT_FALSE
    return (code, description.to_json(),
            f"{description.note}\n{description.table()}")


def cmd_hk(args) -> Outcome:
    return _check_outcome(hk_identities(args.spec))


def cmd_gk(args) -> Outcome:
    report = gk_probe(args.spec, args.max_degree or GK_MAXN)
    text = (f"GK dimension: {report.dimension} (expected "
            f"{report.expected}), {report.note}\n{report.table()}")
    return (EXIT_OK if report else EXIT_FALSE), report.to_json(), text


def cmd_theta_check(args) -> Outcome:
    return _check_outcome(theta_check(args.spec,
                                      args.max_degree or THETA_MAXDEG,
                                      THETA_PAIRS,
                                      np.random.default_rng(args.seed)))


def cmd_gwa_check(args) -> Outcome:
    return _check_outcome(gwa_iso_check(args.spec, args.max_degree or 4))


def cmd_specialize(args) -> Outcome:
    spec = args.spec
    point = _values(args.lambda_, spec, '--lambda', spec.n)
    if args.expr is None:
        return _check_outcome(specialize_check(
            spec, point, rng=np.random.default_rng(args.seed)))
    image, target = specialize(_expr(args, spec), point)
    return (EXIT_OK, {'target': target.to_dict(),
                      'element': image.to_json(),
                      'text': str(image)}, f"{target}\n{image}")


def cmd_aut_check(args) -> Outcome:
    spec = args.spec
    lambda1, lambda2 = _values(args.lambda_, spec, '--lambda', 2)
    a, b = _values(args.affine or '1,0', spec, '--affine', 2)
    g = None if args.g is None else _values(args.g, spec, '--g')
    params = AutSpec(lambda1, lambda2, a, b, g=g, swap=args.swap)
    try:
        images = aut_from_params(params, spec)
    except ConstraintViolationError as e:
        return (EXIT_FALSE, {'valid': False, 'identity': e.identity,
                             'message': str(e)}, f"false: {e}")
    return (EXIT_OK, {'valid': True, 'params': params.to_json(spec),
                      'images': images.to_json()}, f"true: {images}")


def cmd_iso(args) -> Outcome:
    witness = iso_decide(args.spec1, args.spec2)
    if witness is None:
        return EXIT_FALSE, {'isomorphic': False}, "false: not isomorphic"
    payload = witness.to_json()
    F = args.spec1.field
    text = (f"true: case {witness.case}, eta = {F.format(witness.eta)}, "
            f"a = {F.format(witness.a)}, b = {F.format(witness.b)}\n"
            f"{witness.images}")
    return EXIT_OK, dict(payload, isomorphic=True), text


def cmd_search_normal(args) -> Outcome:
    spec = args.spec
    search = NormalSearch(progress=shows_progress(LOG))
    maxdeg = args.max_degree or NORMAL_MAXDEG
    spaces = search(spec, maxdeg)
    code = EXIT_OK if spaces else EXIT_FALSE
    return (code, {'spaces': search_to_json(spaces, spec)},
            search_table(spaces, spec))


def cmd_confluence(args) -> Outcome:
    return _check_outcome(confluence_check(args.spec))


def cmd_verify(args) -> Outcome:
    suite = AcceptanceSuite(progress=shows_progress(LOG))
    suite.seed = args.seed
    results = suite()
    ok = all(result.passed for result in results)
    return ((EXIT_OK if ok else EXIT_FALSE),
            {'passed': ok, 'seed': args.seed,
             'criteria': [result.to_json() for result in results]},
            summary_table(results))


def cmd_examples(args) -> Outcome:
    specs = {name: example_spec(name) for name in list_examples()}
    text = "\n".join(f"{name}: {spec}" for name, spec in specs.items())
    return (EXIT_OK, {'examples': {name: spec.to_dict()
                                   for name, spec in specs.items()}}, text)


COMMANDS: Dict[str, Tuple[Callable[[Any], Outcome], str]] = {
    'normalize': (cmd_normalize, "reduce an expression to PBW normal form"),
    'central': (cmd_central, "decide whether an expression is central"),
    'normal-check': (cmd_normal_check, "find the twist of a normal element"),
    'center-gens': (cmd_center_gens, "central generators of the algebra"),
    'hk': (cmd_hk, "commutation identities of H and K"),
    'gk': (cmd_gk, "Gelfand-Kirillov dimension from growth counts"),
    'theta-check': (cmd_theta_check, "embedding into the skew Laurent ring"),
    'gwa-check': (cmd_gwa_check, "identification with R(sigma, x)"),
    'specialize': (cmd_specialize, "substitute t_i = lambda_i"),
    'aut-check': (cmd_aut_check, "validate automorphism parameters"),
    'iso': (cmd_iso, "decide isomorphism of two specs (n = 1)"),
    'search-normal': (cmd_search_normal, "search twist-normal elements"),
    'confluence': (cmd_confluence, "resolve the overlap ambiguity dduu"),
    'verify': (cmd_verify, "run the acceptance suite"),
    'examples': (cmd_examples, "list the bundled example specs"),
}
NEEDS_SPEC = set(COMMANDS) - {'iso', 'verify', 'examples'}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help="print a JSON document instead of text")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log at INFO, or DEBUG when repeated")
    common.add_argument('--seed', type=int, default=SEED,
                        help="seed of randomized checks (default: %(default)s)")
    common.add_argument('--max-degree', type=int, default=None,
                        help="degree bound of the command's search")

    parser = argparse.ArgumentParser(
        prog='dupy', description="Down-up algebras over K[t1..tn].")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True
    for name, (_, help_text) in COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if name in NEEDS_SPEC:
            sub.add_argument('--spec', required=True,
                             help="TOML spec file or example:<name>")
        if name in ('normalize', 'central', 'normal-check', 'specialize'):
            sub.add_argument('--expr', help="element expression")
        if name == 'normalize':
            sub.add_argument('--strategy', choices=STRATEGIES,
                             default='leftmost')
        if name in ('specialize', 'aut-check'):
            sub.add_argument('--lambda', dest='lambda_',
                             help='comma separated values "v1,v2,.."')
        if name == 'aut-check':
            sub.add_argument('--affine', help='"a,b" for t -> a*t + b')
            sub.add_argument('--g', help='"c0,c1,.." for t -> a*t + g(HK)')
            sub.add_argument('--swap', action='store_true',
                             help="send d to a multiple of u")
        if name == 'iso':
            sub.add_argument('--spec1', required=True)
            sub.add_argument('--spec2', required=True)
    return parser


def _error(code: int, e: Exception, as_json: bool, stream: TextIO) -> int:
    if as_json:
        print(json.dumps({'schema': SCHEMA, 'error': type(e).__name__,
                          'message': str(e)}, ensure_ascii=False),
              file=stream)
    else:
        print(f"error: {e}", file=sys.stderr)
    return code


def run_command(argv: Sequence[str],
                stream: Optional[TextIO] = None) -> int:
    """ Parse argv, run the command, print its output and return the
    exit code """
    stream = sys.stdout if stream is None else stream
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.verbose:
        get_logger('dupy', verbosity_level(args.verbose))

    handler, _ = COMMANDS[args.command]
    try:
        for key in ('spec', 'spec1', 'spec2'):
            if getattr(args, key, None) is not None:
                setattr(args, key, load_spec(getattr(args, key)))
        code, payload, text = handler(args)
    except UnsupportedError as e:
        return _error(EXIT_UNSUPPORTED, e, args.json, stream)
    except (ParseError, SpecError, PreconditionError,
            SpecMismatchError, DivisionByZeroError) as e:
        return _error(EXIT_USAGE, e, args.json, stream)

    if args.json:
        document = {'schema': SCHEMA, 'command': args.command}
        if getattr(args, 'spec', None) is not None:
            document['spec'] = args.spec.to_dict()
        document.update(payload)
        print(json.dumps(document, indent=2, ensure_ascii=False),
              file=stream)
    else:
        print(text, file=stream)
    return code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))
