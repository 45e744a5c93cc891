"""Command-line front end.

Verbs: `gen` (emit algebra / family-module JSON), `check` (Lie axioms
plus declared-decomposition certificates), `verify` (full
representation pipeline), `enumerate` (valid parameter tuples),
`classify` (solution-space survey), `decompose` (degree stripes of a
triangular map). `-` stands for stdin/stdout. Exit codes: 0 all checks
pass, 1 a verification check failed (the report is still written),
2 malformed input or arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classification_report
from .exact import rat
from .family import (
    ModuleParams,
    build_family_module,
    enumerate_params,
    validate_params,
    verify_family,
)
from .graded import degree_components, is_triangular
from .jsonio import (
    algebra_to_json,
    algebra_from_json,
    dumps,
    graded_map_from_json,
    jsonable,
    matrix_to_json,
    representation_from_json,
    representation_to_json,
)
from .liealg import build_sl2_lambda, check_axioms, verify_levi_data
from .rep import verify_representation


class InputError(Exception):
    """Malformed input or arguments (exit code 2)."""


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}")


def _write(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _parse_scalars(raw: str) -> tuple:
    if not raw:
        return ()
    try:
        return tuple(rat(part.strip()) for part in raw.split(","))
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar list {raw!r}: {exc}")


def _cmd_gen(args) -> int:
    if args.what == "sl2l":
        if args.lam < 1:
            raise InputError("--lambda must be >= 1")
        L, D = build_sl2_lambda(args.lam)
        _write(dumps(algebra_to_json(L, D)), args.output)
        return 0
    params = ModuleParams(
        args.lam, args.m, args.n, args.s, args.big_n, _parse_scalars(args.a)
    )
    ok, problems = validate_params(params)
    if not ok:
        raise InputError("invalid parameters: " + "; ".join(problems))
    module = build_family_module(params, paper_literal=args.paper_literal)
    extra = {
        "family_params": {
            "lambda": params.lam,
            "m": params.m,
            "n": params.n,
            "s": params.s,
            "N": params.big_n,
            "a": [jsonable(x) for x in params.a],
            "paper_literal": args.paper_literal,
        }
    }
    _write(
        dumps(representation_to_json(module.representation, extra)),
        args.output,
    )
    return 0


def _cmd_check(args) -> int:
    doc = _read_json(args.input)
    try:
        L, D = algebra_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad algebra document: {exc}")
    axioms = check_axioms(L)
    levi = verify_levi_data(L, D)
    report = {
        "axioms": jsonable(axioms),
        "levi_data": jsonable(levi),
        "all_pass": axioms["all_pass"] and levi["all_pass"],
    }
    _write(dumps(report), args.output)
    return 0 if report["all_pass"] else 1


def _family_params_from_doc(doc: dict) -> ModuleParams:
    try:
        fp = doc["family_params"]
        return ModuleParams(
            int(fp["lambda"]),
            int(fp["m"]),
            int(fp["n"]),
            int(fp["s"]),
            int(fp["N"]),
            tuple(rat(x) for x in fp["a"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"document carries no usable family_params: {exc}")


def _cmd_verify(args) -> int:
    doc = _read_json(args.input)
    if args.paper_literal:
        # re-derive the module from its parameters under the printed
        # e-action coefficient, rather than trusting the serialized
        # matrices (which may come from either reading)
        params = _family_params_from_doc(doc)
        report = verify_family(params, paper_literal=True)
        out = jsonable(report)
        _write(dumps(out), args.output)
        return 0 if report["all_pass"] else 1
    try:
        rho = representation_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad representation document: {exc}")
    report = verify_representation(rho)
    irr = report["irreducible_components"]
    gate = (
        report["homomorphism"]
        and report["triangular_all"]
        and report["condition_i"]
        and report["condition_ii"]
        and (irr is None or all(irr))
    )
    out = jsonable(report)
    out["all_pass"] = gate
    _write(dumps(out), args.output)
    return 0 if gate else 1


def _cmd_enumerate(args) -> int:
    try:
        tuples = enumerate_params(args.lam, args.max_m, args.max_n)
    except ValueError as exc:
        raise InputError(str(exc))
    lines = "".join(f"{m} {n} {s} {big_n}\n" for m, n, s, big_n in tuples)
    _write(lines, args.output)
    return 0


def _cmd_classify(args) -> int:
    if args.lam < 1 or args.max_n < 0 or args.max_m < 0:
        raise InputError("need --lambda >= 1 and nonnegative bounds")
    report = classification_report(args.lam, args.max_n, args.max_m)
    if args.table:
        width = 6
        header = "".join(
            h.rjust(width) for h in ("n", "m", "dim", "cg", "agree")
        )
        lines = [header]
        for cell in report["cells"]:
            lines.append(
                "".join(
                    str(v).rjust(width)
                    for v in (
                        cell["n"],
                        cell["m"],
                        cell["dim"],
                        cell["cg"],
                        cell["agree"],
                    )
                )
            )
        _write("\n".join(lines) + "\n", args.output)
    else:
        _write(dumps(jsonable(report)), args.output)
    agree = all(cell["agree"] for cell in report["cells"])
    return 0 if agree else 1


def _cmd_decompose(args) -> int:
    doc = _read_json(args.input)
    try:
        g = graded_map_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graded-map document: {exc}")
    ok, witness = is_triangular(g)
    if not ok:
        _write(
            dumps({"triangular": False, "witness": list(witness)}),
            args.output,
        )
        return 1
    comps = degree_components(g)
    report = {
        "triangular": True,
        "components": {
            str(j): matrix_to_json(comps[j].matrix) for j in sorted(comps)
        },
    }
    _write(dumps(report), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilie",
        description="exact graded Lie representation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit algebra or module JSON")
    gensub = gen.add_subparsers(dest="what", required=True)
    g_alg = gensub.add_parser("sl2l", help="the sl2^Λ algebra")
    g_alg.add_argument("--lambda", dest="lam", type=int, required=True)
    g_alg.add_argument("-o", "--output", default="-")
    g_fam = gensub.add_parser("family", help="a family module representation")
    g_fam.add_argument("--lambda", dest="lam", type=int, required=True)
    g_fam.add_argument("--m", type=int, required=True)
    g_fam.add_argument("--n", type=int, required=True)
    g_fam.add_argument("--s", type=int, required=True)
    g_fam.add_argument("--bigN", dest="big_n", type=int, required=True)
    g_fam.add_argument("--a", default="", help="comma-separated rationals")
    g_fam.add_argument("--paper-literal", action="store_true")
    g_fam.add_argument("-o", "--output", default="-")

    c = sub.add_parser("check", help="Lie axioms + declared decomposition")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("-o", "--output", default="-")

    v = sub.add_parser("verify", help="full representation pipeline")
    v.add_argument("input", nargs="?", default="-")
    v.add_argument("--paper-literal", action="store_true")
    v.add_argument("-o", "--output", default="-")

    e = sub.add_parser("enumerate", help="valid parameter tuples")
    e.add_argument("--lambda", dest="lam", type=int, required=True)
    e.add_argument("--max-m", dest="max_m", type=int, required=True)
    e.add_argument("--max-n", dest="max_n", type=int, required=True)
    e.add_argument("-o", "--output", default="-")

    k = sub.add_parser("classify", help="solution-space survey")
    k.add_argument("--lambda", dest="lam", type=int, required=True)
    k.add_argument("--max-n", dest="max_n", type=int, required=True)
    k.add_argument("--max-m", dest="max_m", type=int, required=True)
    fmt = k.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--table", action="store_true")
    k.add_argument("-o", "--output", default="-")

    d = sub.add_parser("decompose", help="degree stripes of a triangular map")
    d.add_argument("input", nargs="?", default="-")
    d.add_argument("-o", "--output", default="-")

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "decompose": _cmd_decompose,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
