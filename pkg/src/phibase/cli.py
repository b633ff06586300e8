"""Command-line interface: ``phibase {encode,decode,zeckendorf,table,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 digit string that does not denote an integer.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import tables
from .codec import decode, encode, parse
from .errors import MalformedDigitString, NonCanonical, NotPositive
from .verify import SUITES, verify
from .zeckendorf import zeck_encode

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NOT_INTEGER = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None
    if n < 1:
        raise UsageError(f"expected a positive integer, got {n}")
    return n


def cmd_encode(args: argparse.Namespace) -> int:
    n = _positive(args.n)
    print(encode(n))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    try:
        digits = parse(args.digits)
    except MalformedDigitString as exc:
        raise UsageError(f"MalformedDigitString at position {exc.position}: {exc.reason}") from None
    except NonCanonical as exc:
        raise UsageError(f"NonCanonical at index {exc.index}: {exc.reason}") from None
    value = decode(digits)
    if value.phi_coeff:
        print(value)
        print(f"warning: NotAnInteger: {args.digits} denotes {value}", file=sys.stderr)
        return EXIT_NOT_INTEGER
    print(value.unit_coeff)
    return EXIT_OK


def cmd_zeckendorf(args: argparse.Namespace) -> int:
    n = _positive(args.n)
    print(f"{n} = {zeck_encode(n)}")
    return EXIT_OK


def render_table(max_n: int, kind: str, fmt: str) -> str:
    rows = tables.table(max_n, kind)
    notes = tables.discrepancies(2, max_n)
    if fmt == "json":
        payload = {
            "kind": kind,
            "rows": [{"n": r.n, "offsets": list(r.offsets), "row": r.text} for r in rows],
            "footnotes": [d.to_dict() for d in notes],
        }
        return json.dumps(payload, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "offsets", "row"])
        for r in rows:
            w.writerow([r.n, " ".join(map(str, r.offsets)), r.text])
        return buf.getvalue()
    lines = [r.text for r in rows]
    if notes:
        lines += ["", "Footnotes (printed rows that fail exact verification):"]
        for k, d in enumerate(notes, 1):
            lines.append(f"[{k}] {d.location}: printed {d.paper_value!r}; {d.witness}")
    return "\n".join(lines) + "\n"


def cmd_table(args: argparse.Namespace) -> int:
    if not 2 <= args.max <= 10**6:
        raise UsageError(f"--max must be in [2, 1000000], got {args.max}")
    _emit(render_table(args.max, args.kind, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.lo <= args.hi:
        raise UsageError(f"need 1 <= LO <= HI, got {args.lo} {args.hi}")
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    bad = [s for s in suites if s not in SUITES]
    if bad or not suites:
        raise UsageError(f"--suites must be a subset of {','.join(SUITES)}")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    report = verify(args.lo, args.hi, suites, workers=args.workers)
    _emit(report.render(args.format), args.out)
    if args.out is not None and args.format != "text":
        sys.stdout.write(report.to_text(max_failures=10))
    return EXIT_OK if report.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phibase", description="Exact golden-ratio-base numeration tools.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("encode", help="print the base-phi digit string of N")
    e.add_argument("n")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="print the value of a base-phi digit string")
    d.add_argument("digits")
    d.set_defaults(func=cmd_decode)

    z = sub.add_parser("zeckendorf", help="print the Zeckendorf representation of N")
    z.add_argument("n")
    z.set_defaults(func=cmd_zeckendorf)

    t = sub.add_parser("table", help="regenerate phi-expansion / F_n / L_n multiple tables")
    t.add_argument("--kind", choices=tables.KINDS, default="fib")
    t.add_argument("--max", type=int, default=12)
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="verify identities for N in [LO, HI]")
    v.add_argument("lo", type=int)
    v.add_argument("hi", type=int)
    v.add_argument("--suites", default=",".join(SUITES))
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("text", "csv", "json"), default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NotPositive) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
