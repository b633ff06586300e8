"""Batch verification of the base-phi identities over a range of integers."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Union

from .codec import PhiDigits, decode_integer, encode, index_set, parse, split
from .reconstruct import (
    double_from_lucas,
    from_negative,
    from_positive,
    lemma1_gap,
    lemma2_sign,
    negative_tail,
    parity_hint,
    positive_conjugate_tail,
)
from .ring import sum_phi_powers
from .tables import Discrepancy, discrepancies
from .zeckendorf import nf_identity, nl_identity

SUITES = ("roundtrip", "thm1", "thm2", "corollary", "prop1", "lemmas")
SHIFT_RANGE = range(-15, 16)

Value = Union[int, str]


@dataclass
class Check:
    n_value: int
    check_name: str
    lhs: Value
    rhs: Value
    passed: bool

    def to_dict(self) -> dict:
        return {
            "n_value": self.n_value,
            "check_name": self.check_name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Check:
        return cls(data["n_value"], data["check_name"], data["lhs"], data["rhs"], data["pass"])


def _check(n: int, name: str, lhs: Value, rhs: Value) -> Check:
    return Check(n, name, lhs, rhs, lhs == rhs)


def _roundtrip(n: int, d: PhiDigits) -> list[Check]:
    return [
        _check(n, "roundtrip.decode", decode_integer(d), n),
        _check(n, "roundtrip.text", decode_integer(parse(str(d))), n),
    ]


def _thm1(n: int, d: PhiDigits) -> list[Check]:
    s = split(d)
    return [_check(n, "thm1.from_positive", from_positive(s.beta_plus, s.d0), n)]


def _thm2(n: int, d: PhiDigits) -> list[Check]:
    s = split(d)
    return [_check(n, "thm2.from_negative", from_negative(s.beta_minus, s.d0, parity_hint(d)), n)]


def _corollary(n: int, d: PhiDigits) -> list[Check]:
    s = split(d)
    hint = parity_hint(d)
    both = double_from_lucas(d)
    parts = from_positive(s.beta_plus, s.d0) + from_negative(s.beta_minus, s.d0, hint)
    return [
        _check(n, "corollary.double", both, 2 * n),
        _check(n, "corollary.sum_of_theorems", parts, both),
    ]


def _prop1(n: int, d: PhiDigits) -> list[Check]:
    offs = tuple(index_set(d))
    value = sum_phi_powers(offs)
    out = [_check(n, "prop1.phi_sum", value.unit_coeff if not value.phi_coeff else str(value), n)]
    for k in SHIFT_RANGE:
        lhs, rhs = nf_identity(n, k, offs)
        out.append(_check(n, f"prop1.nf[n={k}]", lhs, rhs))
    for k in SHIFT_RANGE:
        lhs, rhs = nl_identity(n, k, offs)
        out.append(_check(n, f"prop1.nl[n={k}]", lhs, rhs))
    return out


def _lemmas(n: int, d: PhiDigits) -> list[Check]:
    idx = d.ones
    out = [
        _check(n, "lemmas.lemma1", lemma1_gap(idx).sign(), 1),
        _check(n, "lemmas.lemma2", lemma2_sign(idx), 1 if idx[-1] % 2 == 0 else -1),
    ]
    tail = negative_tail(d)
    if tail:
        out.append(_check(n, "lemmas.negative_tail>0", tail.sign(), 1))
        out.append(_check(n, "lemmas.negative_tail<1", (1 - tail).sign(), 1))
    pos = [i for i in idx if i > 0]
    if pos:
        t = positive_conjugate_tail(d)
        if pos[0] % 2:
            out.append(_check(n, "lemmas.conjugate_tail>0", t.sign(), 1))
            out.append(_check(n, "lemmas.conjugate_tail<1", (1 - t).sign(), 1))
        else:
            out.append(_check(n, "lemmas.conjugate_tail<0", t.sign(), -1))
            out.append(_check(n, "lemmas.conjugate_tail>-1", (t + 1).sign(), 1))
    return out


SUITE_FUNCS: dict[str, Callable[[int, PhiDigits], list[Check]]] = {
    "roundtrip": _roundtrip,
    "thm1": _thm1,
    "thm2": _thm2,
    "corollary": _corollary,
    "prop1": _prop1,
    "lemmas": _lemmas,
}


def run_checks(lo: int, hi: int, suites: Iterable[str]) -> list[Check]:
    """Checks for every ``N`` in ``[lo, hi]``, ordered by ``N`` then suite."""
    funcs = [SUITE_FUNCS[s] for s in suites]
    out: list[Check] = []
    for n in range(lo, hi + 1):
        d = encode(n)
        for f in funcs:
            out.extend(f(n, d))
    return out


def _run_chunk(args: tuple[int, int, tuple[str, ...]]) -> list[Check]:
    return run_checks(*args)


@dataclass
class VerifyReport:
    range: tuple[int, int]
    suites: tuple[str, ...]
    checks: list[Check] = field(default_factory=list)
    paper_discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def summary(self) -> dict:
        return {"total": self.total, "failed": self.failed}

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "range": list(self.range),
            "suites": list(self.suites),
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
            "paper_discrepancies": [d.to_dict() for d in self.paper_discrepancies],
        }

    @classmethod
    def from_dict(cls, data: dict) -> VerifyReport:
        rep = cls(
            range=tuple(data["range"]),
            suites=tuple(data["suites"]),
            checks=[Check.from_dict(c) for c in data["checks"]],
            paper_discrepancies=[Discrepancy.from_dict(d) for d in data["paper_discrepancies"]],
        )
        if rep.summary != data["summary"]:
            raise ValueError(f"summary {data['summary']} disagrees with checks {rep.summary}")
        return rep

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_json(cls, text: str) -> VerifyReport:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n_value", "check_name", "lhs", "rhs", "pass"])
        for c in self.checks:
            w.writerow([c.n_value, c.check_name, c.lhs, c.rhs, str(c.passed).lower()])
        return buf.getvalue()

    def to_text(self, max_failures: int = 50) -> str:
        lo, hi = self.range
        lines = [
            f"verify {lo}..{hi} suites={','.join(self.suites)}",
            f"checks: {self.total}  failed: {self.failed}",
        ]
        bad = self.failures()
        for c in bad[:max_failures]:
            lines.append(f"FAIL N={c.n_value} {c.check_name}: {c.lhs} != {c.rhs}")
        if len(bad) > max_failures:
            lines.append(f"... {len(bad) - max_failures} more failures")
        if self.paper_discrepancies:
            lines.append("")
            lines.append("Printed rows failing exact verification:")
            for d in self.paper_discrepancies:
                lines.append(f"  [{d.location}] printed: {d.paper_value}")
                lines.append(f"      corrected: {d.computed_value}")
                lines.append(f"      proof: {d.witness}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown report format {fmt!r}")


def _chunks(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    size = -(-(hi - lo + 1) // parts)
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def verify(lo: int, hi: int, suites: Iterable[str] = SUITES, workers: int = 1) -> VerifyReport:
    """Run the selected suites over ``[lo, hi]``.

    Work is split into contiguous sub-ranges and merged in order, so the
    report is identical for any worker count.
    """
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got {lo}..{hi}")
    suites = tuple(suites)
    unknown = [s for s in suites if s not in SUITE_FUNCS]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if workers <= 1 or hi == lo:
        checks = run_checks(lo, hi, suites)
    else:
        jobs = [(a, b, suites) for a, b in _chunks(lo, hi, workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            checks = [c for part in pool.map(_run_chunk, jobs) for c in part]
    return VerifyReport((lo, hi), suites, checks, discrepancies(lo, hi))
