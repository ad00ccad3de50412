"""Command-line front end: ``gorlink <command> ...``.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import catalog, dimension, liaison, theorems
from .errors import GorlinkError
from .hvector import (
    HVector,
    c2_obstruction,
    curve_degree_genus,
    first_half,
    g3_obstruction,
    scheme_invariants,
)

GRAMMAR = "h-vector grammar: comma-separated nonnegative integers, no spaces, e.g. 1,3,6,3,1"
UNVERIFIED = "derived, unverified against paper"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _hvec(text: str) -> HVector:
    try:
        return HVector.parse(text)
    except GorlinkError:
        raise argparse.ArgumentTypeError(f"invalid h-vector {text!r}; {GRAMMAR}") from None


def _out(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands ------------------------------------------------------------------


def cmd_check(args) -> int:
    h = args.h
    c2 = c2_obstruction(h)
    g3 = g3_obstruction(h)
    payload = {"h": str(h), "c2_admissible": c2 is None, "g3_admissible": g3 is None,
               "c2_reason": c2, "g3_reason": g3}
    lines = [f"h = {{{h}}}",
             "C2-admissible" if c2 is None else f"not C2-admissible: {c2}",
             "G3-admissible" if g3 is None else f"not G3-admissible: {g3}"]
    _out(args, payload, "\n".join(lines))
    return 0 if c2 is None or g3 is None else 1


def cmd_invariants(args) -> int:
    inv = scheme_invariants(args.h)
    d = inv.as_dict()
    _out(args, d, "\n".join(f"{k}: {v}" for k, v in d.items()))
    return 0


def cmd_first_half(args) -> int:
    k = first_half(args.h)
    _out(args, {"h": str(args.h), "k": str(k)}, str(k))
    return 0


def cmd_link(args) -> int:
    r = liaison.g_link(args.hX, args.hV)
    _out(args, {"hX": str(args.hX), "hV": str(args.hV), "residual": str(r)}, str(r))
    return 0


def cmd_biliaison(args) -> int:
    r = liaison.biliaison(args.hC, args.hV, args.height)
    _out(args, {"hC": str(args.hC), "hV": str(args.hV), "height": args.height, "result": str(r)}, str(r))
    return 0


def cmd_mhk(args) -> int:
    hz = liaison.ag_from_curve(args.c, args.m)
    d, g = curve_degree_genus(args.c)
    _out(args, {"c": str(args.c), "m": args.m, "h": str(hz), "d": hz.degree, "dtilde": d, "gtilde": g},
         str(hz))
    return 0


def cmd_represent(args) -> int:
    curves = liaison.representing_curves(args.h)
    rows = []
    for c in curves:
        d, g = curve_degree_genus(c)
        rows.append({"htilde": str(c), "dtilde": d, "gtilde": g})
    _out(args, {"h": str(args.h), "m": args.h.socle_degree - 1, "curves": rows},
         "\n".join(f"{r['htilde']}  (d,g)=({r['dtilde']},{r['gtilde']})" for r in rows)
         or "no representing curves")
    return 0


def cmd_dim_pgor(args) -> int:
    rep = dimension.dim_pgor(args.h)
    lines = [str(rep.value)]
    if args.trace:
        for st in rep.chain:
            lines.append(f"  {{{st.h}}}  s={st.s} t={st.t}  ->  {{{st.h_next}}}")
    _out(args, rep.as_dict(), "\n".join(lines))
    return 0


def cmd_dim_acm(args) -> int:
    rep = dimension.dim_acm(args.c)
    _out(args, rep.as_dict(), str(rep.value))
    return 0


def cmd_gcm(args) -> int:
    v = dimension.g_cm(args.d, args.s)
    _out(args, {"d": args.d, "s": args.s, "G_CM": v}, str(v))
    return 0


def cmd_enumerate(args) -> int:
    hs = catalog.enumerate_ag(args.max_degree, nondegenerate=not args.all)
    _out(args, [{"d": h.degree, "h": str(h)} for h in hs],
         "\n".join(f"{h.degree}\t{h}" for h in hs))
    return 0


def cmd_table(args) -> int:
    rows = catalog.build_table(args.max_degree, args.data)
    sys.stdout.write(catalog.render(rows, args.format))
    return 0


def _verdict_sets(verdicts):
    open_ = [v.n for v in verdicts if not v.ruled_out]
    return open_, [v.n for v in verdicts if v.ruled_out]


def _label(n: int) -> str:
    return f" [{UNVERIFIED}]" if n <= 34 else ""


def cmd_verify_dl(args) -> int:
    vs = theorems.sweep(theorems.verify_no_descending_liaison, args.start, args.stop)
    open_, _ = _verdict_sets(vs)
    payload = {"from": args.start, "to": args.stop, "not_ruled_out": open_,
               "verdicts": [dict(v.as_dict(), note=UNVERIFIED) if v.n <= 34 else v.as_dict() for v in vs]}
    lines = [f"not ruled out: {{{','.join(map(str, open_))}}}"]
    if args.verbose:
        for v in vs:
            tag = "ruled out" if v.ruled_out else "not ruled out: " + ", ".join(
                f"{w.kind}{w.params} dim {w.dim} >= {w.bound}" for w in v.witnesses)
            lines.append(f"n={v.n} s={v.s} a={v.a}: {tag}{_label(v.n)}")
    elif args.start <= 34:
        lines.append(f"note: verdicts for n <= 34 are {UNVERIFIED}")
    _out(args, payload, "\n".join(lines))
    return 0


def cmd_verify_db(args) -> int:
    vs = theorems.sweep(theorems.verify_no_descending_biliaison, args.start, args.stop, refined=args.refined)
    open_, _ = _verdict_sets(vs)
    payload = {"from": args.start, "to": args.stop, "refined": args.refined, "not_ruled_out": open_,
               "verdicts": [v.as_dict() for v in vs]}
    lines = [f"not ruled out: {{{','.join(map(str, open_))}}}"]
    if args.verbose:
        for v in vs:
            tag = "ruled out" if v.ruled_out else "not ruled out: " + ", ".join(
                f"h_C={w.params['h_C']}" for w in v.witnesses)
            lines.append(f"n={v.n}: {tag}")
    _out(args, payload, "\n".join(lines))
    return 0


def cmd_glicci(args) -> int:
    partners = catalog.load_glicci_catalog(args.catalog)
    chain = theorems.glicci_descent(args.n, partners)
    lines = [
        f"{st.n} points --[{{{st.partner}}}, d={st.partner.degree}]--> {st.residual} points"
        for st in chain.steps
    ]
    lines.append(f"terminal: {chain.terminal}")
    _out(args, chain.as_dict(), "\n".join(lines))
    return 0


def cmd_chain(args) -> int:
    links = liaison.ci_biliaison_chain(args.h)
    payload = [{"h": str(c.h), "s": c.s, "t": c.t} for c in links]
    lines = [f"{{{c.h}}}  s={c.s}" + ("  (terminal)" if c.terminal else f" t={c.t}") for c in links]
    _out(args, payload, "\n".join(lines))
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gorlink", description="h-vector calculus for AG zero-schemes in P^3")
    p.add_argument("--version", action="version", version="gorlink 0.1.0")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    add("check", cmd_check, "C2/G3 admissibility report").add_argument("h", type=_hvec)
    add("invariants", cmd_invariants, "degree, socle degree, m, s, first half").add_argument("h", type=_hvec)
    add("first-half", cmd_first_half, "the first half of a G3-admissible h").add_argument("h", type=_hvec)
    sp = add("link", cmd_link, "G-link hV inside the AG scheme hX")
    sp.add_argument("hX", type=_hvec)
    sp.add_argument("hV", type=_hvec)
    sp = add("biliaison", cmd_biliaison, "elementary biliaison on an ACM curve")
    sp.add_argument("hC", type=_hvec)
    sp.add_argument("hV", type=_hvec)
    sp.add_argument("--height", type=int, default=1)
    sp = add("mhk", cmd_mhk, "h-vector of mH-K on a curve")
    sp.add_argument("c", type=_hvec)
    sp.add_argument("m", type=int)
    add("represent", cmd_represent, "curves carrying h as mH-K").add_argument("h", type=_hvec)
    sp = add("dim-pgor", cmd_dim_pgor, "dimension of PGor(h)")
    sp.add_argument("h", type=_hvec)
    sp.add_argument("--trace", action="store_true", help="print the recursion chain")
    add("dim-acm", cmd_dim_acm, "dimension of the ACM curve family").add_argument("c", type=_hvec)
    sp = add("gcm", cmd_gcm, "maximal genus of ACM curves")
    sp.add_argument("d", type=int)
    sp.add_argument("s", type=int)
    sp = add("enumerate", cmd_enumerate, "all AG h-vectors up to a degree")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="include degenerate h-vectors")
    sp = add("table", cmd_table, "the catalog table")
    sp.add_argument("--max-degree", type=int, default=30)
    sp.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    sp.add_argument("--data", default=None, help="paper data file (default: $GORLINK_DATA or bundled)")
    for name, fn, extra in (("verify-dl", cmd_verify_dl, None), ("verify-db", cmd_verify_db, "--refined")):
        sp = add(name, fn, "descending " + ("liaison" if name == "verify-dl" else "biliaison") + " sweep")
        sp.add_argument("--from", dest="start", type=int, required=True)
        sp.add_argument("--to", dest="stop", type=int, required=True)
        sp.add_argument("-v", "--verbose", action="store_true")
        if extra:
            sp.add_argument(extra, action="store_true")
    sp = add("glicci", cmd_glicci, "descend n general points through the partner catalog")
    sp.add_argument("n", type=int)
    sp.add_argument("--catalog", default=None)
    add("chain", cmd_chain, "CI-biliaison descent").add_argument("h", type=_hvec)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"gorlink: usage error: {exc}", file=sys.stderr)
        if GRAMMAR not in str(exc):
            print(GRAMMAR, file=sys.stderr)
        return 2
    if args.command in ("verify-dl", "verify-db") and args.start > args.stop:
        print(f"gorlink: usage error: --from {args.start} exceeds --to {args.stop}", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except GorlinkError as exc:
        print(f"gorlink: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"gorlink: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
