"""Command-line interface.

Every subcommand prints one record (or one record per line for lists) as
either an aligned table or JSON lines.  The default output mode comes from
``$OPTB_OUTPUT`` (``table`` or ``json``), else ``table``.

Exit codes: 0 success, 1 domain error, 2 usage error.

Arguments starting with ``-`` that are not plain integers must be attached
with ``=``, e.g. ``--slope=-19/3`` or ``--d-range=-2:2``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys

from optb import __version__
from optb.decider import decide_optb, scan_family
from optb.errors import OptbError
from optb.gof import gof_count
from optb.lens import homeo_class, is_homeomorphic, make_lens
from optb.records import RECORD_FIELDS, dumps, scan_record, scan_to_file
from optb.torus import SurgeryDescription, moser_forward, trefoil_surgeries
from optb.words import (
    MonodromyType,
    candidate_family,
    h1_binding_surgery,
    h1_open_book,
    h1_table,
    parse_word,
    reduce_binding_surgery,
    table_summary,
    trivial_h1_candidates,
    word_of_type,
    word_to_matrix,
)

OUTPUT_ENV = "OPTB_OUTPUT"

SCAN_EPILOG = (
    "With --out, records are appended to a JSON-lines file whose first line is "
    '{"format": "optb-scan", "version": 1, "beta": B, "primes_only": P}. '
    "Each record has the fields " + ", ".join(RECORD_FIELDS) + ". "
    "Re-running with the same file only computes m values not yet recorded."
)


def _slope(text):
    try:
        p, q = text.split("/")
        return int(p), int(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P/Q, got {text!r}") from None


def _interval(text):
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def _int_list(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _group_fields(group):
    return {"group": str(group), **group.to_record()}


def cmd_h1(args):
    word = parse_word(args.word)
    record = {"word": str(word), "matrix": word_to_matrix(word).rows()}
    if args.surgery is None:
        record.update(_group_fields(h1_open_book(word)))
    else:
        p, q = args.surgery
        record["surgery"] = f"{p}/{q}"
        record.update(_group_fields(h1_binding_surgery(word, p, q)))
    return record


def cmd_h1_type(args):
    if args.type in ("A", "B"):
        if args.m is not None:
            raise OptbUsage(f"--m is not used by type {args.type}; pass --a")
        t = MonodromyType(args.type, args.d, a=args.a or ())
    else:
        if args.a is not None:
            raise OptbUsage(f"--a is not used by type {args.type}; pass --m")
        t = MonodromyType(args.type, args.d, m=args.m)
    kind, value = table_summary(t)
    return {"type": str(t), "word": str(word_of_type(t)),
            "table": kind if value is None else f"{kind} {value}",
            **_group_fields(h1_table(t))}


def cmd_candidates(args):
    return [
        {"type": str(t), "word": str(word_of_type(t)), "family": candidate_family(t)}
        for t in trivial_h1_candidates(args.d_range, args.bound)
    ]


def cmd_reduce(args):
    p, q = args.slope
    knot, p, q2 = reduce_binding_surgery(args.family, args.d, p, q)
    return {"knot": knot, "p": p, "q": q2, "slope": f"{p}/{q2}"}


def cmd_gof(args):
    lens = make_lens(args.m, args.n)
    return {"lens": str(lens), **gof_count(lens).to_record()}


def cmd_moser(args):
    desc = SurgeryDescription(args.r, args.s, args.p, args.q)
    lens = moser_forward(desc)
    return {"surgery": str(desc), "lens_yielding": desc.lens_yielding,
            "lens": None if lens is None else str(lens),
            "canonical": None if lens is None else f"L({lens.m},{lens.canonical})"}


def cmd_trefoil(args):
    lens = make_lens(args.m, args.n)
    return [{"lens": str(lens), "surgery": str(s), "p": s.p, "q": s.q}
            for s in trefoil_surgeries(lens)]


def cmd_optb(args):
    return decide_optb(make_lens(args.m, args.n), allow_composite=args.allow_composite).to_record()


def cmd_scan(args):
    if args.max_m < args.beta + 1:
        raise OptbUsage("--max-m must be at least --beta + 1")
    if args.out:
        return scan_to_file(args.out, args.beta, args.max_m, args.primes_only, args.workers)
    return [scan_record(v) for _, v in
            scan_family(args.beta, args.max_m, args.primes_only, workers=args.workers)]


def cmd_homeo(args):
    a, b = make_lens(args.m1, args.n1), make_lens(args.m2, args.n2)
    return {"a": str(a), "b": str(b), "homeomorphic": is_homeomorphic(a, b)}


def cmd_class(args):
    lens = make_lens(args.m, args.n)
    return {"lens": str(lens), "canonical": lens.canonical, "class": homeo_class(lens)}


class OptbUsage(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="optb",
        description="Lens spaces and knots with once-punctured torus bundle exteriors.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    mode = os.environ.get(OUTPUT_ENV, "table")
    if mode not in ("table", "json"):
        mode = "table"
    parser.add_argument("--format", choices=("table", "json"), default=mode,
                        help=f"output mode (default from ${OUTPUT_ENV}, else table)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("h1", help="first homology of an open book or a binding surgery")
    p.add_argument("--word", required=True, help='monodromy word, e.g. "x y^3 x"')
    p.add_argument("--surgery", type=_slope, metavar="P/Q", help="p/q surgery on the binding, p > 1")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("h1-type", help="homology of a normal-form monodromy, checked against the table")
    p.add_argument("--type", required=True, choices=list("ABCDEF"))
    p.add_argument("--d", type=int, default=0, help="boundary twist exponent")
    p.add_argument("--a", type=_int_list, metavar="A1,A2,...", help="exponents for types A and B")
    p.add_argument("--m", type=int, help="parameter for types C-F")
    p.set_defaults(func=cmd_h1_type)

    p = sub.add_parser("candidates", help="normal forms with trivial H1")
    p.add_argument("--d-range", type=_interval, required=True, metavar="LO:HI")
    p.add_argument("--bound", type=int, required=True, help="cap on n, a_i and |m|")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("reduce", help="rewrite binding surgery as surgery on a d = 0 binding")
    p.add_argument("--family", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--slope", type=_slope, required=True, metavar="P/Q")
    p.set_defaults(func=cmd_reduce)

    for name, func, help_ in (
        ("gof", cmd_gof, "number of genus one fibered knots in L(M,N)"),
        ("trefoil", cmd_trefoil, "trefoil surgeries producing L(M,N)"),
        ("class", cmd_class, "homeomorphism class of L(M,N)"),
        ("optb", cmd_optb, "does L(M,N) contain a knot with OPTB exterior"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("m", type=int, metavar="M")
        p.add_argument("n", type=int, metavar="N")
        p.set_defaults(func=func)
        if name == "optb":
            p.add_argument("--allow-composite", action="store_true",
                           help="decide composite M heuristically instead of failing")

    p = sub.add_parser("moser", help="lens space from p/q surgery on T(R,S)")
    for arg in ("r", "s", "p", "q"):
        p.add_argument(arg, type=int, metavar=arg.upper())
    p.set_defaults(func=cmd_moser)

    p = sub.add_parser("scan", help="decide L(m, BETA) for all m up to MAX_M", epilog=SCAN_EPILOG)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--out", metavar="FILE", help="JSON-lines records file, resumed if present")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("homeo", help="are L(M1,N1) and L(M2,N2) homeomorphic")
    for arg in ("m1", "n1", "m2", "n2"):
        p.add_argument(arg, type=int, metavar=arg.upper())
    p.set_defaults(func=cmd_homeo)
    return parser


def _cell(value):
    if isinstance(value, str):
        return value
    return json.dumps(value)


def format_table(records):
    if isinstance(records, dict):
        width = max(map(len, records), default=0)
        return "\n".join(f"{k.ljust(width)}  {_cell(v)}" for k, v in records.items())
    if not records:
        return "(none)"
    keys = list(records[0])
    rows = [keys] + [[_cell(r.get(k)) for k in keys] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(keys))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)


def format_json(records):
    if isinstance(records, dict):
        records = [records]
    return "\n".join(dumps(r) for r in records)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except OptbUsage as exc:
        print(f"optb {args.command}: usage error: {exc}", file=stderr)
        return 2
    except (OptbError, ValueError) as exc:
        print(f"optb {args.command}: error: {exc}", file=stderr)
        return 1
    text = format_json(result) if args.format == "json" else format_table(result)
    if text:
        print(text, file=stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
