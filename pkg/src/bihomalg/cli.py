"""Command-line interface.

Exit codes: 0 = all requested checks passed / operation succeeded,
1 = an axiom check failed (violations are printed), 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bimodules, families, pseudotwistors, rota_baxter, search, trees
from .errors import BiHomAlgError, InputAxiomsFail, SpecFileError
from .linalg import Vector
from .scalars import scalar_to_str
from .specfile import KIND_TABLES, parse_spec, serialize
from .structures import (check_structure, quadri_projections, tensor_quadri,
                         yau_twist)


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    try:
        return parse_spec(text)
    except SpecFileError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc


def _print_report(rep) -> int:
    for axiom, idx, lhs, rhs in rep.violations:
        lhs_s = ", ".join(scalar_to_str(x) for x in lhs.coords)
        rhs_s = ", ".join(scalar_to_str(x) for x in rhs.coords)
        print(f"violation: {axiom} at {idx}: [{lhs_s}] != [{rhs_s}]")
    for name, ok in rep.sub_checks.items():
        print(f"sub-check {name}: {'yes' if ok else 'no'}")
    if rep.passed:
        print("passed")
        return 0
    print(f"failed: {len(rep.violations)} violation(s) "
          f"in {', '.join(rep.failed_axioms())}")
    return 1


def _emit(parts: dict, out_path: str | None) -> None:
    text = serialize(parts)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_check(args) -> int:
    parts = _load(args.spec)
    structure = parts["structure"]
    if args.kind:
        from .specfile import _structure_kind
        if _structure_kind(structure) != args.kind:
            print(f"spec file holds a {_structure_kind(structure)} structure, "
                  f"not {args.kind}", file=sys.stderr)
            return 2
    return _print_report(check_structure(structure))


def _matrix_arg(field, text, name):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"--{name}: {exc}") from exc
    from .specfile import _matrix
    return _matrix(field, rows, len(rows), len(rows[0]) if rows else 0, name)


def cmd_derive(args) -> int:
    parts = _load(args.spec)
    S = parts["structure"]
    via = args.via
    if via == "rb-tridend":
        R = _need(parts, "rota_baxter")
        _emit({"structure": rota_baxter.rb_derive(S, R)}, args.output)
    elif via == "rb-double":
        R = _need(parts, "rota_baxter")
        _emit({"structure": rota_baxter.rb_double_product(S, R)}, args.output)
    elif via == "yau":
        if not args.atilde or not args.btilde:
            print("--via yau needs --atilde and --btilde", file=sys.stderr)
            return 2
        at = _matrix_arg(S.field, args.atilde, "atilde")
        bt = _matrix_arg(S.field, args.btilde, "btilde")
        _emit({"structure": yau_twist(S, at, bt)}, args.output)
    elif via == "tensor-quadri":
        if not args.second:
            print("--via tensor-quadri needs a second spec file", file=sys.stderr)
            return 2
        other = _load(args.second)["structure"]
        _emit({"structure": tensor_quadri(S, other)}, args.output)
    elif via in ("quadri-h", "quadri-v"):
        horizontal, vertical = quadri_projections(S)
        _emit({"structure": horizontal if via == "quadri-h" else vertical},
              args.output)
    elif via == "split-null":
        M = _need(parts, "bimodule")
        _emit({"structure": bimodules.split_null_extension(S, M)}, args.output)
    elif via == "grb-dend":
        M = _need(parts, "bimodule")
        pi = _need(parts, "grb")
        _emit({"structure": bimodules.grb_to_dendriform(M, pi)}, args.output)
    elif via == "rb-twistor":
        R = _need(parts, "rota_baxter")
        W = pseudotwistors.rb_pseudotwistor(S, R)
        _emit({"structure": pseudotwistors.twisted_algebra(S, W),
               "twistor": W}, args.output)
    elif via == "compose-twistor":
        if not args.second:
            print("--via compose-twistor needs a second spec file", file=sys.stderr)
            return 2
        W1 = _need(parts, "twistor")
        W2 = _need(_load(args.second), "twistor")
        composite = pseudotwistors.compose_pseudotwistors(S, W1, W2, args.mode)
        _emit({"structure": pseudotwistors.twisted_algebra(S, composite),
               "twistor": composite}, args.output)
    elif via == "pair-quadri":
        if not args.second:
            print("--via pair-quadri needs a second spec file", file=sys.stderr)
            return 2
        R = _need(parts, "rota_baxter")
        P = _need(_load(args.second), "rota_baxter")
        _emit({"structure": rota_baxter.commuting_pair_quadri(S, R, P)},
              args.output)
    else:
        print(f"unknown derivation {via!r}", file=sys.stderr)
        return 2
    return 0


def _need(parts: dict, key: str):
    if key not in parts:
        raise SpecFileError(f"spec file lacks the required {key!r} block")
    return parts[key]


def cmd_trees(args) -> int:
    if args.tree_cmd == "enumerate":
        for t in trees.enumerate_trees(args.n):
            print(trees.serialize_tree(t))
        return 0
    if args.tree_cmd == "act":
        parts = _load(args.spec)
        A = parts["structure"]
        t = trees.parse_tree(args.tree)
        try:
            raw = json.loads(args.elements)
        except json.JSONDecodeError as exc:
            raise SpecFileError(f"elements: {exc}") from exc
        elements = [Vector(A.field, tuple(A.field.parse(str(x)) for x in coords))
                    for coords in raw]
        R = parts.get("rota_baxter") if isinstance(t, trees.RBAugTree) else None
        result = trees.action_eval(t, elements, A, R)
        print("[" + ", ".join(scalar_to_str(x) for x in result.coords) + "]")
        return 0
    if args.tree_cmd == "reduce":
        with open(args.element_file) as fh:
            doc = json.load(fh)
        from .specfile import _parse_field
        field = _parse_field(doc["field"], "field")
        x = trees.FreeElement.zero(field, doc["rank"])
        for term in doc["terms"]:
            tree = trees.parse_tree(term["tree"])
            x = x + trees.FreeElement.generator(
                field, doc["rank"], tree, tuple(term["word"]),
                field.parse(term["coeff"]))
        bounds = {"max_leaves": args.max_leaves, "max_ab_power": args.max_ab,
                  "max_r_power": args.max_r}
        reduced = trees.truncated_ideal_reduce(x, bounds)
        out = [{"tree": trees.serialize_tree(tree), "word": list(word),
                "coeff": scalar_to_str(c)}
               for tree, word, c in
               (reduced.terms[k] for k in sorted(reduced.terms))]
        print(json.dumps({"field": doc["field"], "rank": doc["rank"],
                          "terms": out}, indent=2))
        return 0
    print(f"unknown trees subcommand {args.tree_cmd!r}", file=sys.stderr)
    return 2


def cmd_search(args) -> int:
    parts = _load(args.spec)
    A = parts["structure"]
    if args.what == "rb":
        weight = A.field.parse(args.weight)
        result = search.enumerate_rb(A, weight, jobs=args.jobs)
    else:
        result = search.enumerate_baxter(A, args.side, jobs=args.jobs)
    for m in result.operators:
        print(json.dumps([[scalar_to_str(x) for x in row] for row in m.entries]))
    print(f"examined {result.examined}, found {result.found}, "
          f"elapsed {result.elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_verify_family(args) -> int:
    samples = None
    if args.mode == "sampled":
        if not args.samples:
            print("sampled mode needs --samples", file=sys.stderr)
            return 2
        raw = json.loads(args.samples)
        samples = [{k: Fraction(str(v)) for k, v in s.items()} for s in raw]
    rep = families.verify_parametric_family(args.family, args.mode, samples)
    return _print_report(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihomalg",
        description="Exact checkers and constructors for BiHom-type algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the axiom checker on a spec file")
    p.add_argument("spec")
    p.add_argument("--kind", choices=sorted(KIND_TABLES))
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("derive", help="build a derived structure")
    p.add_argument("spec")
    p.add_argument("--via", required=True,
                   choices=["rb-tridend", "rb-double", "yau", "tensor-quadri",
                            "quadri-h", "quadri-v", "split-null", "grb-dend",
                            "rb-twistor", "compose-twistor", "pair-quadri"])
    p.add_argument("second", nargs="?", help="second spec file where needed")
    p.add_argument("--atilde", help="matrix as JSON, for --via yau")
    p.add_argument("--btilde", help="matrix as JSON, for --via yau")
    p.add_argument("--mode", choices=["general", "commuting"],
                   default="general", help="for --via compose-twistor")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("trees", help="tree enumeration, action, reduction")
    tsub = p.add_subparsers(dest="tree_cmd", required=True)
    t = tsub.add_parser("enumerate")
    t.add_argument("-n", type=int, required=True)
    t = tsub.add_parser("act")
    t.add_argument("tree")
    t.add_argument("spec")
    t.add_argument("elements", help="JSON list of coordinate lists")
    t = tsub.add_parser("reduce")
    t.add_argument("element_file")
    t.add_argument("--max-leaves", type=int, required=True)
    t.add_argument("--max-ab", type=int, required=True)
    t.add_argument("--max-r", type=int, required=True)
    p.set_defaults(fn=cmd_trees)

    p = sub.add_parser("search", help="brute-force operator enumeration")
    p.add_argument("what", choices=["rb", "baxter"])
    p.add_argument("spec")
    p.add_argument("--weight", default="0")
    p.add_argument("--side", choices=["left", "right"], default="right")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify-family",
                       help="verify a built-in parametric Rota-Baxter family")
    p.add_argument("family", choices=list(families.FAMILY_IDS))
    p.add_argument("--mode", choices=["symbolic", "sampled"], default="symbolic")
    p.add_argument("--samples", help="JSON list of parameter assignments")
    p.set_defaults(fn=cmd_verify_family)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputAxiomsFail as exc:
        print(f"axiom failure: {exc}", file=sys.stderr)
        if exc.report is not None:
            _print_report(exc.report)
        return 1
    except BiHomAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
