"""Command-line front end over newline-delimited integer streams.

Input files hold one decimal integer per line (term n on the n-th data line);
blank lines and lines starting with ``#`` are skipped. Exit codes: 0 success,
1 domain failure (not realizable, not integral, degenerate matrix), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence, TextIO

from fixcount import realizability, seqgen, timechange, zeta

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_sequence(lines: Iterable[str]) -> tuple[int, ...]:
    out = []
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append(int(s))
        except ValueError:
            raise UsageError(f"line {lineno}: not an integer: {s!r}") from None
    if not out:
        raise UsageError("input has no data lines")
    return tuple(out)


def write_sequence(seq: Iterable[int], out: TextIO) -> None:
    for x in seq:
        out.write(f"{x}\n")


def parse_matrix(text: str) -> seqgen.IntMatrix:
    try:
        return seqgen.as_matrix([[int(x) for x in row.split(",")] for row in text.split(";")])
    except ValueError as exc:
        raise UsageError(f"bad matrix {text!r}: {exc}") from None


def _input(args) -> tuple[int, ...]:
    if args.infile and args.infile != "-":
        with open(args.infile, encoding="utf-8") as fh:
            return read_sequence(fh)
    return read_sequence(sys.stdin)


def _require(value, flag: str, name: str):
    if value is None:
        raise UsageError(f"generator {name} requires {flag}")
    return value


def cmd_gen(args, out: TextIO) -> int:
    name, N = args.name, args.n
    if name == "full-shift":
        seq = seqgen.full_shift(_require(args.a, "--a", name), N)
    elif name == "constant":
        seq = seqgen.constant_system(_require(args.size, "--size", name), N)
    elif name == "golden-mean":
        seq = seqgen.golden_mean(N)
    elif name == "sigma":
        seq = seqgen.sigma_system(N)
    elif name == "single-orbit":
        seq = seqgen.single_orbit(_require(args.len, "--len", name), N)
    elif name == "lehmer-pierce":
        matrix = parse_matrix(_require(args.matrix, "--matrix", name))
        try:
            seq = seqgen.lehmer_pierce(matrix, N)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
    elif name == "negated-shift":
        seq = seqgen.negated_shift(_require(args.a, "--a", name), N)
    else:  # argparse choices make this unreachable
        raise UsageError(f"unknown generator {name!r}")
    write_sequence(seq, out)
    return EXIT_OK


def cmd_timechange(args, out: TextIO) -> int:
    try:
        h = timechange.compose_all(timechange.parse_timechange(e) for e in args.h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    a = _input(args)
    try:
        b = timechange.apply(h, a)
    except timechange.EmptyTimeChange as exc:
        raise UsageError(str(exc)) from None
    except timechange.OutOfDomain as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if len(b) < len(a):
        print(f"warning: {len(a)} input terms gave {len(b)} output terms under {h}", file=sys.stderr)
    write_sequence(b, out)
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    report = realizability.check_realizable(_input(args))
    out.write((report.to_json() if args.json else report.describe()) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_orbits(args, out: TextIO) -> int:
    result = realizability.orbit_counts(_input(args))
    if isinstance(result, realizability.WitnessReport):
        print(f"error: not realizable: {result.describe()}", file=sys.stderr)
        print(result.to_json(), file=sys.stderr)
        return EXIT_FAIL
    write_sequence(result, out)
    return EXIT_OK


def cmd_fix(args, out: TextIO) -> int:
    o = _input(args)
    try:
        a = realizability.fix_from_orbits(o)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    write_sequence(a, out)
    return EXIT_OK


def cmd_zeta(args, out: TextIO) -> int:
    if args.rational:
        if args.terms is None:
            raise UsageError("--rational requires --terms")
        try:
            f = zeta.RationalFunction.parse(args.rational)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        series = zeta.expand_rational(f, args.terms)
    else:
        a = _input(args)
        terms = len(a) if args.terms is None else args.terms
        if terms > len(a):
            raise UsageError(f"--terms {terms} needs {terms} input terms, got {len(a)}")
        series = zeta.zeta_exp(a, terms)
    if args.json:
        out.write(zeta.series_to_json(series) + "\n")
    else:
        for i, c in enumerate(series):
            out.write(f"{i}\t{zeta.format_coefficient(c)}\n")
    if args.check_integral:
        result = zeta.integrality_check(series)
        if not result.passed:
            i = result.first_nonintegral_index
            print(f"not integral: coefficient {i} is {zeta.format_coefficient(series[i])}", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


GENERATORS = ["full-shift", "constant", "golden-mean", "sigma", "single-orbit", "lehmer-pierce", "negated-shift"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fixcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--in", dest="infile", metavar="PATH", help="read input from PATH instead of stdin")
        p.add_argument("--out", dest="outfile", metavar="PATH", help="write output to PATH instead of stdout")

    p = sub.add_parser("gen", help="generate fix counts of a named system")
    p.add_argument("name", choices=GENERATORS)
    p.add_argument("--n", type=int, required=True, help="number of terms")
    p.add_argument("--a", type=int, help="alphabet size (full-shift, negated-shift)")
    p.add_argument("--size", type=int, help="number of points (constant)")
    p.add_argument("--len", type=int, help="orbit length (single-orbit)")
    p.add_argument("--matrix", help='integer matrix, rows split by ";" (lehmer-pierce), e.g. "0,1;1,1"')
    p.add_argument("--out", dest="outfile", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("timechange", help="sample a sequence along h")
    p.add_argument("--h", action="append", required=True, metavar="EXPR",
                   help="time-change expression; repeat to compose (first flag is outermost)")
    add_io(p)
    p.set_defaults(func=cmd_timechange)

    p = sub.add_parser("check", help="test the realizability congruences on a prefix")
    p.add_argument("--json", action="store_true")
    add_io(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbits", help="fix counts -> closed-orbit counts")
    add_io(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("fix", help="closed-orbit counts -> fix counts")
    add_io(p)
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("zeta", help="Taylor coefficients of the zeta function")
    p.add_argument("--terms", type=int, help="highest degree (default: input length)")
    p.add_argument("--rational", metavar="NUM;DEN",
                   help='expand a rational function instead, e.g. "1;1,-1,-1"; factors may be joined by "*"')
    p.add_argument("--check-integral", action="store_true", help="exit 1 unless every coefficient is an integer")
    p.add_argument("--json", action="store_true", help="print a JSON array of coefficient strings")
    add_io(p)
    p.set_defaults(func=cmd_zeta)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "outfile", None):
            with open(args.outfile, "w", encoding="utf-8") as fh:
                return args.func(args, fh)
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad generator parameters and similar argument errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
