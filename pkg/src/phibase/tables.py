"""Regenerate the classical multiple-of-Fibonacci tables and audit printed ones.

The printed rows below are transcribed from the literature exactly as
typeset.  :func:`discrepancies` re-derives each one with exact arithmetic and
reports every row whose right-hand side does not equal the left.
"""
from __future__ import annotations

import re
from dataclasses import asdict, dataclass

from .ring import GoldenInt, sum_phi_powers
from .sequences import fib
from .zeckendorf import shift_expansion, zeck_encode

KINDS = ("phi", "fib", "lucas")

PRINTED_ZECKENDORF = (
    "6 = F_2 + F_5",
    "7 = F_3 + F_6",
    "8 = F_6",
    "9 = F_2 + F_6",
    "10 = F_3 + F_6",
)

PRINTED_FIB_MULTIPLES = (
    "2F_n = F_{n+1} + F_{n-2}",
    "3F_n = F_{n+2} + F_{n-2}",
    "4F_n = F_{n+2} + F_n + F_{n-2}",
    "5F_n = F_{n+3} + F_{n-1} + F_{n-4}",
    "6F_n = F_{n+3} + F_{n+1} + F_{n-4}",
    "7F_n = F_{n+4} + F_{n-4}",
    "8F_n = F_{n+4} + F_{n} + F_{n-4}",
    "9F_n = F_{n+4} + F_{n+1} + F_{n-2} + F_{n-4}",
    "10F_n = F_{n+4} + F_{n+2} + F_{n-2} + F_{n-4}",
    "11F_n = F_{n+4} + F_{n+2} + F_{n} + F_{n-2} + F_{n-4}",
    "12F_n = F_{n+5} + F_{n+1} + F_{n} + F_{n-3} + F_{n-6}",
)

PRINTED_PHI_EXPANSIONS = (
    r"2 = \varphi^{1} + \varphi^{-2}",
    r"3 = \varphi^{2} + \varphi^{-2}",
    r"4 = \varphi^{2} + \varphi^0 + \varphi^{-2}",
    r"5 = \varphi^{3} + \varphi^{-1} + \varphi^{-4}",
    r"6 = \varphi^{3} + \varphi^{+1} + \varphi^{-4}",
    r"7 = \varphi^{4} + \varphi^{-4}",
    r"8 = \varphi^{4} + \varphi^{0} + \varphi^{-4}",
    r"9 = \varphi^{4} + \varphi^{1} + \varphi^{-2} + \varphi^{-4}",
    r"10 = \varphi^{4} + \varphi^{2} + \varphi^{-2} + \varphi^{-4}",
    r"11 = \varphi^{4} + \varphi^{2} + \varphi^{0} + \varphi^{-2} + \varphi^{-4}",
    r"12 = \varphi^{5} + \varphi^{1} + \varphi^{0} + \varphi^{-3} + \varphi^{-6}",
)

PRINTED_LUCAS_MULTIPLES = (
    "2L_n = L_{n+1} + L_{n-2}",
    "3L_n = L_{n+2} + L_{n-2}",
    "4L_n = L_{n+2} + L_n + L_{n-2}",
    "5L_n = L_{n+3} + L_{n-1} + L_{n-4}",
    "6L_n = L_{n+3} + L_{n+1} + L_{n-4}",
    "7L_n = L_{n+4} + L_{n-4}",
    "8L_n = L_{n+4} + L_{n} + L_{n-4}",
    "9L_n = L_{n+4} + L_{n+1} + L_{n-2} + L_{n-4}",
    "10L_n = L_{n+4} + L_{n+2} + L_{n-2} + L_{n-4}",
    "11L_n = L_{n+4} + L_{n+2} + L_{n} + L_{n-2} + L_{n-4}",
    "12L_n = L_{n+5} + L_{n+1} + L_{n} + L_{n-3} + L_{n-6}",
)

PRINTED = {
    "phi": PRINTED_PHI_EXPANSIONS,
    "fib": PRINTED_FIB_MULTIPLES,
    "lucas": PRINTED_LUCAS_MULTIPLES,
}

TABLE_NAMES = {
    "phi": "phi-expansions",
    "fib": "fibonacci-multiples",
    "lucas": "lucas-multiples",
    "zeckendorf": "zeckendorf-examples",
}

_LEAD = re.compile(r"\s*(\d+)")
_SHIFT_TERM = re.compile(r"[FL]_(?:n|\{n\}|\{n([+-]\d+)\})")
_POWER_TERM = re.compile(r"(?:\\varphi|phi)\^(?:\{([+-]?\d+)\}|([+-]?\d+))")
_FIB_TERM = re.compile(r"F_\{?(\d+)\}?")


def parse_row(kind: str, text: str) -> tuple[int, tuple[int, ...]]:
    """Return ``(N, offsets)`` of a row, offsets in printed order."""
    n = int(_LEAD.match(text).group(1))
    rhs = text.split("=", 1)[1]
    if kind == "phi":
        offs = [int(m.group(1) or m.group(2)) for m in _POWER_TERM.finditer(rhs)]
    elif kind in ("fib", "lucas"):
        offs = [int(m.group(1) or 0) for m in _SHIFT_TERM.finditer(rhs)]
    elif kind == "zeckendorf":
        offs = [int(m.group(1)) for m in _FIB_TERM.finditer(rhs)]
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    return n, tuple(offs)


def _shift(letter: str, i: int) -> str:
    if i == 0:
        return f"{letter}_n"
    return f"{letter}_{{n{i:+d}}}"


def render_row(kind: str, n: int, offsets) -> str:
    """Text row with terms in descending order, e.g. ``2F_n = F_{n+1} + F_{n-2}``."""
    offs = sorted(offsets, reverse=True)
    if kind == "phi":
        return f"{n} = " + " + ".join(f"phi^{{{i}}}" for i in offs)
    if kind in ("fib", "lucas"):
        letter = "F" if kind == "fib" else "L"
        return f"{n}{letter}_n = " + " + ".join(_shift(letter, i) for i in offs)
    raise ValueError(f"unknown table kind {kind!r}")


@dataclass(frozen=True)
class TableRow:
    n: int
    offsets: tuple[int, ...]
    text: str


def table(max_n: int, kind: str) -> list[TableRow]:
    """Rows ``N = 2..max_n`` of the requested table, derived from base-phi exponents."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    rows = []
    for n in range(2, max_n + 1):
        offs = tuple(sorted(shift_expansion(n), reverse=True))
        rows.append(TableRow(n, offs, render_row(kind, n, offs)))
    return rows


@dataclass(frozen=True)
class Discrepancy:
    location: str
    paper_value: str
    computed_value: str
    witness: str

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> Discrepancy:
        return cls(**data)


def _audit_shift_row(kind: str, text: str) -> tuple[int, tuple[int, ...], GoldenInt, int] | None:
    """Exact audit of one printed row; ``None`` when it is correct.

    Otherwise returns ``(N, offsets, actual, witness_n)`` where the printed
    right-hand side equals ``actual`` times the left sequence for every index.
    """
    n, offs = parse_row(kind, text)
    value = sum_phi_powers(offs)
    if value == n:
        return None
    # a phi-power sum equal to an integer M gives sum(F[k+i]) == M*F[k] for all k
    return n, offs, value, 1 - min(offs)


def _shift_witness(actual: GoldenInt, k: int, lhs: int, rhs: int) -> str:
    at = f"at n={k}: {rhs} != {lhs}"
    if actual.phi_coeff:
        return f"printed phi-powers sum to {actual}, not an integer; {at}"
    m = actual.unit_coeff
    return f"printed phi-powers sum to {m}, so the right side is {m}*F_n; {at}"


def discrepancies(lo: int = 1, hi: int | None = None) -> list[Discrepancy]:
    """Printed rows with ``lo <= N <= hi`` that fail exact verification.

    Rows of the three shift tables that print the same wrong offsets for the
    same ``N`` describe one error and are merged into a single entry.
    """
    found: list[Discrepancy] = []

    def in_range(n: int) -> bool:
        return n >= lo and (hi is None or n <= hi)

    for text in PRINTED_ZECKENDORF:
        n, idx = parse_row("zeckendorf", text)
        if not in_range(n):
            continue
        total = sum(fib(k) for k in idx)
        if total != n:
            terms = " + ".join(str(fib(k)) for k in idx)
            found.append(
                Discrepancy(
                    location=f"{TABLE_NAMES['zeckendorf']}:{n}",
                    paper_value=text,
                    computed_value=f"{n} = {zeck_encode(n)}",
                    witness=f"{' + '.join(f'F_{k}' for k in idx)} = {terms} = {total} != {n}",
                )
            )

    merged: dict[tuple[int, tuple[int, ...]], list[str]] = {}
    details: dict[tuple[int, tuple[int, ...]], tuple[str, GoldenInt, int]] = {}
    for kind in ("fib", "phi", "lucas"):
        for text in PRINTED[kind]:
            audit = _audit_shift_row(kind, text)
            if audit is None or not in_range(audit[0]):
                continue
            n, offs, actual, k = audit
            key = (n, tuple(sorted(offs)))
            merged.setdefault(key, []).append(kind)
            details.setdefault(key, (text, actual, k))

    for key, kinds in merged.items():
        n, offs = key
        text, actual, k = details[key]
        first = kinds[0]
        loc = f"{TABLE_NAMES[first]}:{n}"
        if len(kinds) > 1:
            loc += " (same row in " + ", ".join(f"{TABLE_NAMES[x]}:{n}" for x in kinds[1:]) + ")"
        lhs = n * fib(k)
        rhs = sum(fib(k + i) for i in offs)
        found.append(
            Discrepancy(
                location=loc,
                paper_value=text,
                computed_value=render_row(first, n, shift_expansion(n)),
                witness=_shift_witness(actual, k, lhs, rhs),
            )
        )
    return found
