"""
Command-line front end.

    webbasis enumerate webs --n 3 --r 0
    webbasis map psi --tableau '[[1,2,3],[4,5]]'
    webbasis matrix --shape 3,3 --format pretty
    webbasis hasse --shape 3,3 --side tableaux
    webbasis check --shape 4,2 all
    webbasis oracle action --shape 3,3 --i 2

Exit status: 0 when every selected check passes, 1 when a check fails,
2 for usage errors. The palindromicity check only affects the exit status
under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import transition as tr
from .hecke import (
    DEFAULT_ORACLE_BOUND, OracleBoundError, action_matrix_standard, check_key_lemma,
    standard_basis,
)
from .tableaux import Partition, StandardTableau, enumerate_std, superstandard
from .webs import Web, enumerate_webs, hasse_edges, nest, nest_via_prime, phi, psi

CHECKS = ("bijection", "hecke-relations", "order-iso", "unitriangular", "positive",
          "palindromic", "equivariance", "eigen", "resolvers")


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------------

def parse_shape(text: str) -> Partition:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"bad shape {text!r}; expected a,b")
    if not parts or len(parts) > 2 or any(p < 0 for p in parts):
        raise UsageError(f"bad shape {text!r}; expected a,b with 0 <= b <= a")
    if len(parts) == 2 and parts[1] > parts[0]:
        raise UsageError(f"bad shape {text!r}; need b <= a")
    shape = Partition(parts)
    if shape.d == 0:
        raise UsageError("empty shape")
    return shape


def shape_from_args(args) -> Partition:
    if getattr(args, "shape", None):
        return parse_shape(args.shape)
    n, r = getattr(args, "n", None), getattr(args, "r", None)
    if n is None and r is None:
        raise UsageError("give --shape a,b or --n/--r")
    n, r = n or 0, r or 0
    if n < 0 or r < 0 or n + r == 0:
        raise UsageError("need n, r >= 0 and n + r > 0")
    return Partition((n + r, n))


def read_input(value: str | None) -> str:
    text = value if value is not None else sys.stdin.read()
    text = text.strip()
    if not text:
        raise UsageError("no input")
    return text


def parse_tableau(text: str) -> StandardTableau:
    try:
        return StandardTableau.from_json(json.loads(text))
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad tableau {text!r}: {exc}")


def parse_web(text: str) -> Web:
    try:
        if text.startswith("{"):
            return Web.from_json(json.loads(text))
        return Web(text)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"bad web {text!r}: {exc}")


# -- commands ------------------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    fmt = args.format or "pretty"
    if args.kind == "webs":
        shape = shape_from_args(args)
        n, r = tr.two_row(shape)
        for w in enumerate_webs(n, r):
            out.append(json.dumps(w.to_json(), separators=(",", ":")) if fmt == "json" else str(w))
    else:
        shape = shape_from_args(args)
        if args.transpose:
            shape = shape.transpose()
        for t in enumerate_std(shape):
            if fmt == "json":
                out.append(json.dumps(t.to_json(compact=args.compact), separators=(",", ":")))
            else:
                out.append(str(t))
    return 0


def cmd_map(args, out) -> int:
    if args.direction == "psi":
        t = parse_tableau(read_input(args.tableau))
        if len(t.rows) > 2:
            raise UsageError("psi needs a tableau with at most two rows")
        w = psi(t)
        out.append(json.dumps(w.to_json(), separators=(",", ":")) if args.format == "json" else str(w))
    else:
        w = parse_web(read_input(args.web))
        t = phi(w)
        if args.format == "json":
            out.append(json.dumps(t.to_json(), separators=(",", ":")))
        else:
            out.append(str(t))
    return 0


def cmd_nest(args, out) -> int:
    w = parse_web(read_input(args.web))
    if args.format == "json":
        out.append(json.dumps({"word": str(w), "nest": nest(w), "nest_prime": nest_via_prime(w)},
                              separators=(",", ":")))
    else:
        out.append(f"nest({w}) = {nest(w)}")
        out.append(f"nest'({w}) = {nest_via_prime(w)}")
    return 0


def cmd_matrix(args, out) -> int:
    shape = shape_from_args(args)
    tr.two_row(shape)
    method = args.method or "algebraic"
    fmt = args.format or "pretty"
    if fmt not in ("json", "pretty"):
        raise UsageError("matrix output is json or pretty")
    methods = tr.METHODS if method == "all" else (method,)
    mats = [tr.transition_matrix(shape, m) for m in methods]
    out.append(tr.serialize(mats[0], fmt))
    if any(m != mats[0] for m in mats[1:]):
        out.append("methods disagree")
        return 1
    return 0


def _dot_id(label: str) -> str:
    return '"' + label.replace('"', '\\"') + '"'


def cmd_hasse(args, out) -> int:
    shape = shape_from_args(args)
    n, r = tr.two_row(shape)
    out.append(f"digraph {_dot_id(args.side + ' ' + str(shape))} {{")
    if args.side == "webs":
        for w in enumerate_webs(n, r):
            out.append(f"  {_dot_id(str(w))} [label={_dot_id(f'{w} nest={nest(w)}')}];")
        for w, i, u in hasse_edges(n, r):
            out.append(f"  {_dot_id(str(w))} -> {_dot_id(str(u))} [label=\"{i}\"];")
    else:
        for t in enumerate_std(shape.transpose()):
            out.append(f"  {_dot_id(str(t))};")
        for t, i, u in tr.tableau_cover_edges(shape):
            out.append(f"  {_dot_id(str(t))} -> {_dot_id(str(u))} [label=\"{i}\"];")
    out.append("}")
    return 0


def _shapes_upto(d: int) -> list[Partition]:
    return [Partition((m - b, b)) for m in range(1, d + 1) for b in range(0, m // 2 + 1)]


def _run_checks(shape: Partition, which: Sequence[str], args) -> list[tr.Report]:
    bound = args.oracle_bound
    reports = []
    matrix = None

    def m():
        nonlocal matrix
        if matrix is None:
            matrix = tr.transition_matrix(shape, args.method if args.method in tr.METHODS else "algebraic")
        return matrix

    for name in which:
        if name == "bijection":
            reports.append(tr.check_bijection(shape))
        elif name == "hecke-relations":
            reports.append(tr.check_module_relations(shape))
        elif name == "order-iso":
            reports.append(tr.check_order_isomorphism(shape))
        elif name == "unitriangular":
            reports.append(tr.check_unitriangular(m()))
        elif name == "positive":
            reports.append(tr.check_positive(m()))
            reports.append(tr.check_q_one(m()))
        elif name == "palindromic":
            reports.append(tr.check_palindromic(m()))
        elif name == "equivariance":
            if shape.d > bound:
                rep = tr.Report(f"equivariance {shape}", True)
                rep.notes.append(f"skipped: d={shape.d} exceeds the oracle bound {bound}")
                reports.append(rep)
            else:
                reports.append(tr.check_equivariance(shape, bound))
        elif name == "eigen":
            reports.append(tr.check_eigen_relation(shape))
            if shape.d <= bound:
                reports.append(tr.check_key_lemma_report(shape, bound))
        elif name == "resolvers":
            reports.append(tr.check_resolvers(shape))
    return reports


def cmd_check(args, out) -> int:
    which = list(CHECKS) if "all" in args.which else list(dict.fromkeys(args.which))
    if args.all_upto is not None:
        if args.all_upto < 1:
            raise UsageError("--all-upto needs d >= 1")
        shapes = _shapes_upto(args.all_upto)
    else:
        shapes = [shape_from_args(args)]
        for s in shapes:
            tr.two_row(s)
    failed = False
    open_failures = 0
    for shape in shapes:
        for rep in _run_checks(shape, which, args):
            out.extend(rep.lines())
            conjecture = rep.name.startswith("palindromic")
            if not rep.passed and (not conjecture or args.strict):
                failed = True
            elif not rep.passed:
                open_failures += 1
    result = "result: " + ("FAIL" if failed else "pass")
    if open_failures:
        result += f" ({open_failures} conjecture report(s) failed; use --strict to count them)"
    out.append(result)
    return 1 if failed else 0


def cmd_oracle(args, out) -> int:
    shape = shape_from_args(args)
    bound = args.oracle_bound
    fmt = args.format or "pretty"
    try:
        if args.what == "key-lemma":
            c = check_key_lemma(shape, bound)
            out.append(json.dumps(c.to_json()) if fmt == "json" else f"z y = ({c}) z")
        elif args.what == "basis":
            for t, v in standard_basis(shape, bound):
                if fmt == "json":
                    out.append(json.dumps({"tableau": t.to_json(), "vector": v.to_json()},
                                          separators=(",", ":")))
                else:
                    out.append(f"{t}: {len(v.terms)} terms")
        else:
            if args.i is None:
                raise UsageError("oracle action needs --i")
            if not 1 <= args.i < shape.d:
                raise UsageError(f"--i must lie in 1..{shape.d - 1}")
            b = action_matrix_standard(shape, args.i, bound)
            if fmt == "json":
                out.append(json.dumps([[c.to_json() for c in row] for row in b],
                                      separators=(",", ":")))
            else:
                cells = [[str(c) for c in row] for row in b]
                width = max(len(x) for row in cells for x in row)
                out.extend("  ".join(x.rjust(width) for x in row) for row in cells)
    except OracleBoundError as exc:
        raise UsageError(f"{exc}; raise --oracle-bound to continue")
    return 0


# -- parser --------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, default):
    p.add_argument("--format", choices=("json", "pretty", "dot"), default=default)
    p.add_argument("--method", choices=tr.METHODS + ("all",), default=default)
    p.add_argument("--oracle-bound", type=int, default=default)
    p.add_argument("--strict", action="store_true", default=default)


def _add_shape(p: argparse.ArgumentParser):
    p.add_argument("--shape", help="two-row shape a,b")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="webbasis",
                                     description="Standard and web bases of two-row Specht modules.")
    _add_common(parser, None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list tableaux or webs")
    p.add_argument("kind", choices=("tableaux", "webs"))
    _add_shape(p)
    p.add_argument("--transpose", action="store_true", help="tableaux of the transposed shape")
    p.add_argument("--compact", action="store_true", help="two-column JSON encoding")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply psi (tableau to web) or phi (web to tableau)")
    p.add_argument("direction", choices=("psi", "phi"))
    p.add_argument("--tableau")
    p.add_argument("--web")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("nest", help="nesting number of a web")
    p.add_argument("--web")
    p.set_defaults(func=cmd_nest)

    p = sub.add_parser("matrix", help="transition matrix from the standard basis to webs")
    _add_shape(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("hasse", help="cover digraph in DOT")
    _add_shape(p)
    p.add_argument("--side", choices=("webs", "tableaux"), default="tableaux")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("check", help="run theorem checks")
    p.add_argument("which", nargs="+", choices=CHECKS + ("all",))
    _add_shape(p)
    p.add_argument("--all-upto", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="the Hecke algebra Specht module oracle")
    p.add_argument("what", choices=("action", "key-lemma", "basis"))
    _add_shape(p)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_oracle)

    for name, sp in sub.choices.items():
        _add_common(sp, argparse.SUPPRESS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.oracle_bound is None:
        args.oracle_bound = DEFAULT_ORACLE_BOUND
    args.strict = bool(args.strict)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"webbasis: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"webbasis: error: {exc}", file=sys.stderr)
        return 2
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
