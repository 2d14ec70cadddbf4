"""Command-line surface.

Verbs: table, factorize, build, verify, compseries, certify, ledger.
Exit codes: 0 all verifications passed, 1 a verification failed,
2 parse/usage errors, 3 a size cap was exceeded.  All output is
byte-deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .catexpr import CatExpr, center, cpq_category, fpdim, is_integral, is_pointed, rep_g, tambara_yamagami, vec_g
from .certificates import a6_simplicity_check, family_simplicity_check
from .cocycles import trivial_paired_cocycles
from .exact import make_abelian_sequence, make_group_quotient_sequence, verify_exact_sequence, dualize_sequence
from .groups import (
    CapExceeded,
    GroupError,
    PermGroup,
    exact_factorizations,
    iso_label,
    named_group,
    subgroup_classes,
)
from .hopf import HopfError, bicrossed_product, drinfeld_double, dual_group_algebra, group_algebra, verify_hopf_axioms
from .io_formats import FormatError, dump_group, dump_hopf, load_group, load_hopf
from .matched import from_factorization
from .perm import PermParseError, parse_cycles
from .series_cat import comp_series_cat

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_CAP = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        self.code = code
        super().__init__(message)


def _resolve_group(spec: str, cap: int) -> PermGroup:
    path = Path(spec)
    if path.suffix == ".grp" or path.exists():
        try:
            return load_group(path.read_text(), name=path.stem)
        except OSError as exc:
            raise CliError(f"cannot read {spec}: {exc}", EXIT_PARSE)
        except FormatError as exc:
            raise CliError(f"{spec}: {exc}", EXIT_PARSE)
    try:
        G = named_group(spec)
    except GroupError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP)
    if G.order > cap:
        raise CliError(f"group order {G.order} exceeds cap {cap}", EXIT_CAP)
    return G


def _parse_expr(spec: str, cap: int) -> CatExpr:
    spec = spec.strip()
    low = spec.lower()
    if low.startswith("center:"):
        return center(_parse_expr(spec[len("center:"):], cap))
    if low.startswith("vec:"):
        return vec_g(_resolve_group(spec[4:], cap))
    if low.startswith("rep:"):
        return rep_g(_resolve_group(spec[4:], cap))
    if low.startswith("ty:"):
        try:
            return tambara_yamagami(int(spec[3:]))
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE)
    if low.startswith("cpq:"):
        try:
            p, q = (int(t) for t in spec[4:].split(","))
            return cpq_category(p, q)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE)
    if low == "vecs6":
        return vec_g(named_group("s6"))
    if low == "center-vecs6":
        return center(vec_g(named_group("s6")))
    raise CliError(f"cannot parse category expression {spec!r}", EXIT_PARSE)


# ---------------------------------------------------------------------------
# verb implementations


def _emit_table(rows, fmt: str, out) -> None:
    header = ("iso_label", "order", "char_group_order", "normalizer_index")
    data = [(r.iso_label, r.order, r.char_group_order, r.normalizer_index) for r in rows]
    if fmt == "csv":
        print(",".join(header), file=out)
        for row in data:
            print(",".join(str(c) for c in row), file=out)
    elif fmt == "markdown":
        print("| " + " | ".join(header) + " |", file=out)
        print("|" + "|".join("---" for _ in header) + "|", file=out)
        for row in data:
            print("| " + " | ".join(str(c) for c in row) + " |", file=out)
    else:
        for row in data:
            print("  ".join(str(c) for c in row), file=out)


def _table_sort_key(row):
    # group rows by the largest prime dividing |T|, then by order; the
    # trivial class leads
    n = row.order
    largest = 1
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            largest = d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        largest = m
    return (largest, row.order, row.iso_label, -row.normalizer_index)


def cmd_table(args, out) -> int:
    G = _resolve_group(args.target, args.cap_order)
    try:
        rows = subgroup_classes(G)
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP)
    rows = sorted(rows, key=_table_sort_key)
    _emit_table(rows, args.format, out)
    return EXIT_OK


def cmd_factorize(args, out) -> int:
    G = _resolve_group(args.target, args.cap_order)
    try:
        facts = exact_factorizations(G, proper_only=not args.all)
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP)
    print(f"# exact factorizations of {iso_label(G)} "
          f"({'all' if args.all else 'proper'}): {len(facts)}", file=out)
    for f in facts:
        la, lb = f.labels()
        print(f"{la} (order {f.left.order}) . {lb} (order {f.right.order})", file=out)
    return EXIT_OK


def _build_algebra(args):
    kind = args.kind
    if kind == "double":
        return drinfeld_double(_resolve_group(args.target, args.cap_order))
    if kind == "group":
        return group_algebra(_resolve_group(args.target, args.cap_order))
    if kind == "dual":
        return dual_group_algebra(_resolve_group(args.target, args.cap_order))
    if kind == "bicrossed":
        E = _resolve_group(args.target, args.cap_order)
        if not (args.g_gens and args.gamma_gens):
            raise CliError("bicrossed needs --g-gens and --gamma-gens", EXIT_PARSE)
        try:
            gg = [parse_cycles(t, E.degree) for t in args.g_gens.split(";")]
            hg = [parse_cycles(t, E.degree) for t in args.gamma_gens.split(";")]
            G = E.subgroup(gg)
            Gamma = E.subgroup(hg)
        except (PermParseError, GroupError) as exc:
            raise CliError(str(exc), EXIT_PARSE)
        mp = from_factorization(E, G, Gamma)
        return bicrossed_product(mp, trivial_paired_cocycles(G, Gamma, args.conductor),
                                 conductor=args.conductor)
    raise CliError(f"unknown build kind {kind!r}", EXIT_PARSE)


def cmd_build(args, out) -> int:
    try:
        H = _build_algebra(args)
    except HopfError as exc:
        raise CliError(str(exc), EXIT_CAP if "cap" in str(exc) else EXIT_VERIFY)
    except GroupError as exc:
        raise CliError(str(exc), EXIT_PARSE)
    report = verify_hopf_axioms(H)
    print(f"dim {H.dim}, conductor {H.field.conductor}, "
          f"axioms {'PASS' if report.ok else 'FAIL'}", file=out)
    if args.output:
        Path(args.output).write_text(dump_hopf(H))
        print(f"wrote {args.output}", file=out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_verify(args, out) -> int:
    if args.what == "hopf":
        try:
            H = load_hopf(Path(args.target).read_text())
        except OSError as exc:
            raise CliError(str(exc), EXIT_PARSE)
        except FormatError as exc:
            raise CliError(f"{args.target}: {exc}", EXIT_PARSE)
        report = verify_hopf_axioms(H)
        if report.ok:
            print(f"dim {H.dim}: all Hopf axioms PASS", file=out)
            return EXIT_OK
        for v in report.violations[:20]:
            print(f"FAIL {v}", file=out)
        return EXIT_VERIFY
    if args.what == "sequence":
        if args.target.startswith("double:"):
            G = _resolve_group(args.target[len("double:"):], args.cap_order)
            seq = make_abelian_sequence(drinfeld_double(G))
        elif args.target.startswith("quotient:"):
            spec = args.target[len("quotient:"):]
            gname, _, gens = spec.partition(":")
            G = _resolve_group(gname, args.cap_order)
            try:
                N = G.subgroup([parse_cycles(t, G.degree) for t in gens.split(";")])
            except (PermParseError, GroupError) as exc:
                raise CliError(str(exc), EXIT_PARSE)
            seq = make_group_quotient_sequence(G, N)
        else:
            raise CliError("sequence target must be double:<group> or "
                           "quotient:<group>:<gens>", EXIT_PARSE)
        status = verify_exact_sequence(seq)
        dual_status = verify_exact_sequence(dualize_sequence(seq))
        for key, val in status.items():
            if key == "witness":
                continue
            print(f"{key}: {'PASS' if val else 'FAIL'}", file=out)
        for key, val in sorted(status["witness"].items()):
            print(f"  witness {key} = {val}", file=out)
        print(f"dual_exact: {'PASS' if dual_status['exact'] else 'FAIL'}", file=out)
        return EXIT_OK if status["exact"] and dual_status["exact"] else EXIT_VERIFY
    raise CliError(f"unknown verify target {args.what!r}", EXIT_PARSE)


def cmd_compseries(args, out) -> int:
    expr = _parse_expr(args.target, args.cap_order)
    if args.chain == "both":
        s1 = comp_series_cat(expr, "a6")
        s2 = comp_series_cat(expr, "iterated")
        for name, ser in (("a6", s1), ("iterated", s2)):
            print(f"chain={name} length={ser.length()}", file=out)
            for f, st in zip(ser.factors, ser.terminal_status):
                print(f"  {f.describe()} [{st}]", file=out)
        same = s1.factor_multiset() == s2.factor_multiset()
        print("factor multisets " + ("agree" if same else "differ"), file=out)
        return EXIT_OK
    ser = comp_series_cat(expr, args.chain)
    print(f"chain={args.chain} length={ser.length()}", file=out)
    for f, st in zip(ser.factors, ser.terminal_status):
        print(f"  {f.describe()} [{st}]", file=out)
    for line in ser.rule_trace:
        print(f"# {line}", file=out)
    return EXIT_OK


def cmd_certify(args, out) -> int:
    target = args.target.lower()
    if target == "a6-simple":
        cert = a6_simplicity_check()
    elif target.startswith("ty:"):
        cert = family_simplicity_check(tambara_yamagami(int(target[3:])))
    elif target.startswith("cpq:"):
        p, q = (int(t) for t in target[4:].split(","))
        cert = family_simplicity_check(cpq_category(p, q))
    else:
        raise CliError(f"unknown certificate target {args.target!r}", EXIT_PARSE)
    print(f"target: {cert.target}", file=out)
    print(f"verdict: {cert.verdict}", file=out)
    for entry in cert.trace:
        print(f"-- {entry.case}", file=out)
        for k, v in sorted(entry.values.items()):
            print(f"   {k} = {v}", file=out)
        print(f"   {entry.reason}", file=out)
        for ax in entry.axioms:
            print(f"   uses: {ax}", file=out)
    print("machine trace:", file=out)
    for line in cert.machine_lines():
        print(f"  {line}", file=out)
    return EXIT_OK if cert.verdict == "SIMPLE" else EXIT_VERIFY


def cmd_ledger(args, out) -> int:
    expr = _parse_expr(args.target, args.cap_order)
    print(f"expr: {expr.describe()}", file=out)
    print(f"fpdim: {fpdim(expr)}", file=out)
    print(f"integral: {is_integral(expr)}", file=out)
    print(f"pointed: {is_pointed(expr)}", file=out)
    return EXIT_OK


def cmd_group(args, out) -> int:
    G = _resolve_group(args.target, args.cap_order)
    if args.output:
        Path(args.output).write_text(dump_group(G))
        print(f"wrote {args.output}", file=out)
    print(f"order {G.order}, degree {G.degree}, label {iso_label(G)}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hopfseq",
        description="exact sequences of Hopf algebras and fusion-category "
                    "dimension arithmetic")
    ap.add_argument("--version", action="version", version=__version__)
    default_cap = int(os.environ.get("HOPFSEQ_CAP", "10000"))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-order", type=int, default=default_cap,
                        help="largest allowed group order (env HOPFSEQ_CAP)")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("table", help="subgroup classes of a group", parents=[common])
    p.add_argument("target")
    p.add_argument("--format", choices=("markdown", "csv", "text"), default="markdown")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("factorize", help="exact factorizations", parents=[common])
    p.add_argument("target")
    p.add_argument("--all", action="store_true", help="include improper pairs")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("build", help="construct and verify a Hopf algebra",
                       parents=[common])
    p.add_argument("kind", choices=("group", "dual", "double", "bicrossed"))
    p.add_argument("target")
    p.add_argument("--g-gens", default="")
    p.add_argument("--gamma-gens", default="")
    p.add_argument("--conductor", type=int, default=1)
    p.add_argument("-o", "--output", default="")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="verify a dump or a canonical sequence",
                       parents=[common])
    p.add_argument("what", choices=("hopf", "sequence"))
    p.add_argument("target")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compseries", help="categorical composition series",
                       parents=[common])
    p.add_argument("target")
    p.add_argument("--chain", choices=("a6", "iterated", "both"), default="both")
    p.set_defaults(func=cmd_compseries)

    p = sub.add_parser("certify", help="simplicity certificates", parents=[common])
    p.add_argument("target")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("ledger", help="ledger facts of a category expression",
                       parents=[common])
    p.add_argument("target")
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("group", help="inspect or export a named group",
                       parents=[common])
    p.add_argument("target")
    p.add_argument("-o", "--output", default="")
    p.set_defaults(func=cmd_group)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=out)
        return exc.code
    except CapExceeded as exc:
        print(f"error: {exc}", file=out)
        return EXIT_CAP
    except FormatError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
