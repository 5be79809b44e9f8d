"""Command-line front end.

Every subcommand loads its input, calls one library operation and
formats the result; exit status is 0 on success, 1 on input errors or
failed checks, 2 when a size cap refuses the input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import corpus
from .algebra import CARRIER_CAP, algebra_from_dict, algebra_to_dict, verify_axioms
from .completeness import find_model_via_ultrafilter
from .errors import SizeError, StoneworkError
from .filters import enumerate_ultrafilters
from .lindenbaum import build_lt_algebra, class_of, consistency, representative_formula
from .logic import VAR_CAP, format_assignment, parse, parse_theory, pretty, truth_table, variables
from .stone import build_stone_representation, verify_stone_embedding

EXIT_OK, EXIT_INPUT, EXIT_SIZE = 0, 1, 2


class InputError(StoneworkError):
    pass


def _load_algebra(path, cap):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    return algebra_from_dict(doc, cap=cap)


def _load_theory(path):
    try:
        return parse_theory(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, doc, text):
    if args.format == "structured":
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_check_axioms(args):
    A = _load_algebra(args.algebra, args.carrier_cap)
    report = verify_axioms(A, cap=args.carrier_cap, seed=args.seed)
    _emit(args, report.to_dict(), report.render())
    return EXIT_OK if report.passed else EXIT_INPUT


def cmd_ultrafilters(args):
    A = _load_algebra(args.algebra, args.carrier_cap)
    ults = enumerate_ultrafilters(A, cap=args.carrier_cap)
    doc = {"size": A.size, "count": len(ults), "ultrafilters": [u.names() for u in ults]}
    lines = [f"{len(ults)} ultrafilter(s) of an algebra with {A.size} element(s)"]
    lines += [f"p{i} = {{{', '.join(u.names())}}}" for i, u in enumerate(ults)]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_stone(args):
    A = _load_algebra(args.algebra, args.carrier_cap)
    report = verify_stone_embedding(A, cap=args.carrier_cap)
    image = build_stone_representation(A, cap=args.carrier_cap)
    doc = report.to_dict()
    doc["isomorphic_to_image"] = image.is_isomorphism
    text = report.render() + f"\nisomorphic to its image algebra of sets: {'yes' if image.is_isomorphism else 'no'}"
    _emit(args, doc, text)
    return EXIT_OK if report.passed and image.is_isomorphism else EXIT_INPUT


def cmd_lt(args):
    T = _load_theory(args.theory)
    lt = build_lt_algebra(T, cap=args.carrier_cap, var_cap=args.var_cap)
    doc = lt.to_dict()
    doc["classes"] = []
    lines = [
        f"universe: {' '.join(T.universe)}",
        f"models of T: {len(lt.models)}",
        f"carrier size: {lt.size}",
        f"consistent: {'yes' if consistency(lt) else 'no'}",
    ]
    for f in T.formulas:
        c = class_of(lt, f)
        rep = pretty(representative_formula(lt, c)) if T.universe else None
        doc["classes"].append({"formula": pretty(f), "model_set": sorted(c.model_set), "representative": rep})
        lines.append(f"[{pretty(f)}] = {lt.algebra.names[c.element]}  ~  {rep}")
    if args.export:
        Path(args.export).write_text(json.dumps(algebra_to_dict(lt.algebra), indent=2) + "\n", encoding="utf-8")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_find_model(args):
    T = _load_theory(args.theory)
    model = find_model_via_ultrafilter(T, cap=args.carrier_cap, var_cap=args.var_cap)
    if model is None:
        _emit(args, {"consistent": False, "model": None}, "inconsistent")
    else:
        _emit(args, {"consistent": True, "model": model}, format_assignment(model, T.universe))
    return EXIT_OK


def cmd_truth_table(args):
    f = parse(args.formula, args.vars.split() if args.vars else None)
    V = args.vars.split() if args.vars else sorted(variables(f))
    rows = truth_table(f, V, cap=args.var_cap)
    doc = {"formula": pretty(f), "vars": V, "rows": [{"assignment": h, "value": v} for h, v in rows]}
    lines = [" ".join(V) + " | " + pretty(f)]
    lines += [" ".join("1" if h[v] else "0" for v in V) + " | " + ("1" if value else "0") for h, value in rows]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_corpus(args):
    doc = corpus.run_corpus(args.seed, exhaustive=not args.no_exhaustive, random_count=args.random_count)
    s = doc["summary"]
    text = "\n".join(f"{k}: {v}" for k, v in s.items())
    _emit(args, doc, text)
    return EXIT_OK if s["passed"] else EXIT_INPUT


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--carrier-cap", type=_positive, default=CARRIER_CAP)
    common.add_argument("--var-cap", type=_positive, default=VAR_CAP)
    common.add_argument("--seed", type=int, default=None,
                        help="seed for sampled checks and random corpora (default: $STONEWORK_SEED or a fixed value)")

    parser = argparse.ArgumentParser(prog="stonework", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-axioms", parents=[common], help="verify B1-B5 for an algebra file")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("ultrafilters", parents=[common], help="list the ultrafilters of an algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_ultrafilters)

    p = sub.add_parser("stone", parents=[common], help="verify the Stone embedding of an algebra")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_stone)

    p = sub.add_parser("lt", parents=[common], help="summarize the Lindenbaum-Tarski algebra of a theory")
    p.add_argument("theory")
    p.add_argument("--export", metavar="PATH", help="write the algebra in table format to PATH")
    p.set_defaults(func=cmd_lt)

    p = sub.add_parser("find-model", parents=[common], help="extract a model of a theory through an ultrafilter")
    p.add_argument("theory")
    p.set_defaults(func=cmd_find_model)

    p = sub.add_parser("truth-table", parents=[common], help="print the truth table of a formula")
    p.add_argument("formula")
    p.add_argument("--vars", help="space-separated variable order")
    p.set_defaults(func=cmd_truth_table)

    p = sub.add_parser("corpus", parents=[common], help="run the completeness corpus against the brute-force oracle")
    p.add_argument("--random-count", type=int, default=500)
    p.add_argument("--no-exhaustive", action="store_true", help="skip the exhaustive depth-3 theories")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is None:
        env = os.environ.get("STONEWORK_SEED")
        try:
            args.seed = int(env) if env is not None else corpus.DEFAULT_SEED
        except ValueError:
            print(f"error: STONEWORK_SEED={env!r} is not an integer", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except StoneworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
