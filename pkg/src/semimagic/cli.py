"""Command-line interface.

Squares are given as ``--a 2,3,4,0,1,0`` (any sextuple representative),
``--matrix "2,5,3;4,2,4;4,3,3"``, ``--cg m,n,k,i,j`` or ``--input`` with a
JSON object (``{"matrix": ...}`` or ``{"a": ...}``; ``-`` reads stdin, a
leading ``@`` reads a file).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import cg, core, enumeration, group, poset, verify
from .errors import SemiMagicError


class UsageError(Exception):
    pass


def _ints(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(sep) if x != ""]
    except ValueError:
        raise UsageError(f"expected integers separated by {sep!r}, got {text!r}") from None


def _read_square(args) -> core.SemiMagicSquare:
    given = [x for x in (args.a, args.matrix, args.cg, args.input) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --a, --matrix, --cg, --input")
    if args.a is not None:
        a = _ints(args.a)
        if len(a) != 6:
            raise UsageError("--a needs six integers")
        return core.from_sextuple(core.upshift(a))
    if args.matrix is not None:
        rows = [_ints(r) for r in args.matrix.split(";")]
        return core.validate_square(rows)
    if args.cg is not None:
        vals = _ints(args.cg)
        if len(vals) != 5:
            raise UsageError("--cg needs m,n,k,i,j")
        return cg.square_from_cg(cg.CGIndex(*vals))
    text = args.input
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON input: {exc}") from None
    if "m" in obj and "n" in obj:
        return cg.square_from_cg(cg.CGIndex(*(obj[x] for x in "mnkij")))
    return core.square_from_json(obj)


def _square_text(M: core.SemiMagicSquare) -> str:
    a = M.sextuple
    return f"matrix:\n{M}\nrectangle:\n{a.rectangle()}\nsextuple: {a}  rho: {M.rho}"


# each command returns (text, json_obj)


def cmd_convert(args):
    M = _read_square(args)
    idx = cg.cg_from_square(M)
    obj = {
        "matrix": M.to_json()["matrix"],
        "a": list(M.sextuple.a),
        "rho": M.rho,
        "cg": idx.to_json(),
    }
    text = _square_text(M) + (
        f"\ncg index: m={idx.m} n={idx.n} k={idx.k} i={idx.i} j={idx.j} m'={idx.m_prime}"
        f"\n3j: {idx.three_j_text()}"
    )
    return text, obj


def cmd_reduce(args):
    M = _read_square(args)
    dec = core.reduce(M.sextuple)
    text = f"m0 = {dec.m0}\nreduced:\n{dec.reduced.rectangle()}\nM_red:\n{core.from_sextuple(dec.reduced)}"
    return text, dec.to_json()


def cmd_dual(args):
    M = _read_square(args)
    d = core.dual(M.sextuple, args.s)
    D = core.from_sextuple(d)
    return _square_text(D), {"matrix": D.to_json()["matrix"], "a": list(d.a), "rho": D.rho}


def cmd_v(args):
    M = _read_square(args)
    v = enumeration.path_number(M.sextuple)
    return str(v), {"a": list(M.sextuple.a), "v": str(v)}


def cmd_poly(args):
    M = _read_square(args)
    poly = enumeration.path_polynomial(M.sextuple)
    terms = " + ".join(f"{c}" + (f"·z^{t}" if t else "") for t, c in enumerate(poly.coeffs))
    text = f"F(M,z) = {terms}\nF(M,1) = {poly(1)}\nF(M,-1) = {poly(-1)}"
    obj = poly.to_json() | {"at_1": str(poly(1)), "at_minus_1": str(poly(-1))}
    return text, obj


def cmd_orbit(args):
    M = _read_square(args)
    rep = group.orbit(M)
    text = (
        f"size: {rep.size}\nstabilizer order: {rep.stabilizer_order} ({rep.stabilizer_type})\n"
        f"class: {rep.orbit_class}\ncanonical: {rep.representative}\n"
        f"preferred:\n{rep.preferred.rectangle()}"
    )
    return text, rep.to_json()


def cmd_poset(args):
    P = poset.build(args.s)
    if args.dot:
        return poset.export_dot(P, args.labels), None
    if args.json:
        return json.dumps(P.to_json()), P.to_json()
    lines = [f"M(3,{args.s}): {len(P)} elements, {len(P.edges())} cover edges"]
    for k, rows in enumerate(poset.orbit_table(P)):
        parts = ", ".join(f"{rep}[{size}, v={v}]" for rep, size, v in rows)
        lines.append(f"rank {k}: {len(P.levels[k])} elements; orbits {parts}")
    return "\n".join(lines), P.to_json()


def cmd_convolve(args):
    P = poset.build(args.s)
    ks = [args.k] if args.k is not None else range(P.rank + 1)
    reports = [poset.vandermonde_check(P, k) for k in ks]
    text = "\n".join(
        (f"rank {r.k}: " if args.k is None else "") + r.text() for r in reports
    )
    return text, [r.to_json() for r in reports]


def cmd_sequences(args):
    rows = enumeration.sequence_rows(args.max)
    if args.csv:
        return enumeration.sequences_csv(args.max).rstrip("\n"), None
    fmt = "{:>3}  {:>12}  {:>24}  {:>9}  {:>9}"
    lines = [fmt.format("s", "franel", "p(s)", "F-rec", "p-rec")]
    for r in rows:
        flags = ["-" if r[x] is None else ("ok" if r[x] else "FAIL") for x in ("franel_recurrence", "p_recurrence")]
        lines.append(fmt.format(r["s"], r["franel"], r["p"], *flags))
    obj = [{k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in r.items()} for r in rows]
    return "\n".join(lines), obj


def cmd_rowsum(args):
    if args.csv:
        return enumeration.row_sums_csv(args.t).rstrip("\n"), None
    lhs, rhs = enumeration.row_sum_check(args.t)
    text = f"6^{args.t} = {lhs}; sum of v over rho={args.t}: {rhs}; {'equal' if lhs == rhs else 'DIFFERENT'}"
    return text, {"t": args.t, "lhs": str(lhs), "rhs": str(rhs), "equal": lhs == rhs}


def cmd_cg(args):
    M = _read_square(args)
    idx = cg.cg_from_square(M)
    c = cg.cg_coefficient(M)
    text = f"c_{{{idx.m},{idx.n},{idx.k}}}({idx.i},{idx.j}) = {c}"
    return text, {"cg": idx.to_json(), "C": str(c)}


def cmd_reciprocity(args):
    M = _read_square(args)
    lhs, rhs, v = cg.reciprocity_check(M.sextuple)
    text = f"F(M,-1) = {lhs}\n(-1)^a2·multinom·C(M) = {rhs}\nF(M,1) = v(M) = {v}\n{'holds' if lhs == rhs else 'FAILS'}"
    return text, {"lhs": str(lhs), "rhs": str(rhs), "v": str(v), "holds": lhs == rhs}


def cmd_regge(args):
    M = _read_square(args)
    if args.all:
        ids = cg.regge_orbit_table(M.sextuple)
    else:
        try:
            g = group.parse_element(args.g or "e")
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        ids = [cg.regge_identity(g, M.sextuple)]
    return "\n".join(i.render() for i in ids), [i.to_json() for i in ids]


def cmd_verify(args):
    try:
        results = verify.run(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    lines = [f"[{'PASS' if ok else 'FAIL'}] {suite}: {label}" for suite, label, ok in results]
    obj = [{"suite": s, "check": l, "ok": ok} for s, l, ok in results]
    args._failed = not all(ok for _, _, ok in results)
    return "\n".join(lines), obj


def _square_inputs(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("square input")
    g.add_argument("--a", help="sextuple a1,...,a6 (any representative)")
    g.add_argument("--matrix", help='rows separated by ";", e.g. "1,0,0;0,1,0;0,0,1"')
    g.add_argument("--cg", help="tensor-product indices m,n,k,i,j")
    g.add_argument("--input", help="JSON object, '-' for stdin, '@FILE' to read a file")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="semimagic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, square=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if square:
            _square_inputs(p)
        p.set_defaults(func=func)
        return p

    add("convert", cmd_convert, "show a square as matrix, sextuple and CG indices")
    add("reduce", cmd_reduce, "split off the multiple of J")
    add("dual", cmd_dual, "complement s*J - M").add_argument("--s", type=int, required=True)
    add("v", cmd_v, "path number")
    add("poly", cmd_poly, "path polynomial F(M,z)")
    add("orbit", cmd_orbit, "orbit under the 72-element group")
    p = add("poset", cmd_poset, "the graded poset M(3,s)", square=False)
    p.add_argument("--s", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--dot", action="store_true")
    mode.add_argument("--json", action="store_true")
    p.add_argument("--labels", choices=poset.LABEL_STYLES, default="path-number")
    p = add("convolve", cmd_convolve, "Vandermonde convolution in M(3,s)", square=False)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int)
    p = add("sequences", cmd_sequences, "Franel numbers and p(s)", square=False)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p = add("rowsum", cmd_rowsum, "check that path numbers at rank t sum to 6^t", square=False)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="table for 0..t")
    add("cg", cmd_cg, "un-normalized Clebsch-Gordan coefficient C(M)")
    add("reciprocity", cmd_reciprocity, "compare F(M,-1) with the signed C(M)")
    p = add("regge", cmd_regge, "Regge-type identities from the group action")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--g", help='"(14)(25)(36)" or "R=321,C=123,T=0"')
    which.add_argument("--all", action="store_true")
    p = add("verify", cmd_verify, "run an invariant suite", square=False)
    p.add_argument("--suite", default="all", help="core, group, enumeration, poset, cg or all")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, obj = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (SemiMagicError, ValueError, OSError) as exc:
        name = type(exc).__name__
        if args.format == "json":
            print(json.dumps({"error": name, "message": str(exc)}), file=sys.stderr)
        else:
            print(f"error: {name}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json" and obj is not None:
        text = json.dumps(obj, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 1 if getattr(args, "_failed", False) else 0


if __name__ == "__main__":
    sys.exit(main())
