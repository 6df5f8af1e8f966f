"""Command-line driver.

Exit codes: 0 success (checked / equal); 1 well-formed input whose judgment
fails (ill-typed, not equal); 2 parse or scoping error; 3 reduction budget
exhausted.
"""

import argparse
import sys

from lfkit import adequacy_fol as fol
from lfkit import canonical as cn
from lfkit import typecheck as tc
from lfkit.errors import (
    CheckError,
    FuelExhaustedError,
    LfError,
    NotEqualError,
    ParseError,
)
from lfkit.frontend import parser as par
from lfkit.frontend import printer as pr
from lfkit.reduction import DEFAULT_FUEL
from lfkit.syntax import Context, FamConst

EXIT_OK = 0
EXIT_JUDGMENT = 1
EXIT_SYNTAX = 2
EXIT_FUEL = 3


def _add_common(sub):
    sub.add_argument("--ctx", default="", metavar="BINDINGS",
                     help="ambient context, written 'x:A, y:B'")
    sub.add_argument("--fuel", type=int, default=DEFAULT_FUEL, metavar="N",
                     help="reduction step budget (default %d)" % DEFAULT_FUEL)


def build_parser():
    p = argparse.ArgumentParser(
        prog="lfkit",
        description="Check signatures, synthesize types, decide equality, "
                    "and extract canonical forms.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a signature file")
    c.add_argument("file")

    s = sub.add_parser("synth", help="synthesize the type of an object")
    s.add_argument("file")
    s.add_argument("term")
    _add_common(s)

    e = sub.add_parser("eq", help="decide definitional equality of two objects")
    e.add_argument("file")
    e.add_argument("--type", required=True, dest="type_", metavar="T")
    e.add_argument("m")
    e.add_argument("n")
    _add_common(e)

    k = sub.add_parser("canon", help="print the quasi-canonical form of an object")
    k.add_argument("file")
    k.add_argument("--type", required=True, dest="type_", metavar="T")
    k.add_argument("m")
    _add_common(k)

    d = sub.add_parser("fol-demo",
                       help="round-trip a first-order formula through its encoding")
    d.add_argument("file")
    d.add_argument("formula")
    d.add_argument("--fuel", type=int, default=DEFAULT_FUEL, metavar="N")
    return p


def _load_signature(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from None
    return par.parse_signature(text)


def _session(args):
    sig = _load_signature(args.file)
    checked = tc.check_signature(sig)
    ctx = par.parse_context(getattr(args, "ctx", ""), checked)
    tc.check_context(checked, ctx)
    return checked, ctx


def _cmd_check(args, out):
    sig = _load_signature(args.file)
    tc.check_signature(sig)
    print("ok: %d declarations" % len(sig), file=out)
    return EXIT_OK


def _cmd_synth(args, out):
    checked, ctx = _session(args)
    m = par.parse_object(args.term, checked, ctx)
    fam = tc.synth_object(checked, ctx, m, args.fuel)
    print(pr.print_term(fam), file=out)
    return EXIT_OK


def _cmd_eq(args, out):
    checked, ctx = _session(args)
    fam = par.parse_family(args.type_, checked, ctx)
    m = par.parse_object(args.m, checked, ctx)
    n = par.parse_object(args.n, checked, ctx)
    outcome = tc.def_equal_objects(checked, ctx, m, n, fam, args.fuel)
    if outcome.ok:
        print("equal", file=out)
        return EXIT_OK
    print("not equal", file=out)
    print(str(outcome.mismatch), file=sys.stderr)
    return EXIT_JUDGMENT


def _cmd_canon(args, out):
    checked, ctx = _session(args)
    fam = par.parse_family(args.type_, checked, ctx)
    m = par.parse_object(args.m, checked, ctx)
    q = cn.canonicalize(checked, ctx, m, fam, args.fuel)
    print(pr.print_term(q), file=out)
    return EXIT_OK


def _cmd_fol_demo(args, out):
    sig = _load_signature(args.file)
    checked = tc.check_signature(sig)
    tbl = fol.derive_table(sig)
    formula = fol.parse_formula(tbl, args.formula)
    names = fol.fol_free_names(formula)
    ctx = Context(tuple((x, FamConst(fol.TERM_TYPE)) for x in names))
    encoded = fol.encode(tbl, list(names), formula)
    elaborated = cn.elaborate_qc(checked, ctx, encoded, FamConst(fol.FORMULA_TYPE), args.fuel)
    tc.check_object(checked, ctx, elaborated, FamConst(fol.FORMULA_TYPE), args.fuel)
    recovered = cn.canonicalize(checked, ctx, elaborated, FamConst(fol.FORMULA_TYPE), args.fuel)
    decoded = fol.decode(tbl, list(names), recovered, fol.FORMULA_TYPE)
    print("encoded: %s" % pr.print_term(encoded), file=out)
    print("elaborated: %s" % pr.print_term(elaborated), file=out)
    print("decoded: %s" % fol.print_formula(decoded), file=out)
    if decoded != formula:
        print("round trip failed", file=sys.stderr)
        return EXIT_JUDGMENT
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "synth": _cmd_synth,
    "eq": _cmd_eq,
    "canon": _cmd_canon,
    "fol-demo": _cmd_fol_demo,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    # Deeply nested input would otherwise hit the interpreter's default
    # recursion limit before the checker can answer.
    sys.setrecursionlimit(20000)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_SYNTAX
    except FuelExhaustedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FUEL
    except (CheckError, NotEqualError, fol.AdequacyError, LfError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_JUDGMENT


if __name__ == "__main__":
    sys.exit(main())
