"""Canonical base-phi digit strings.

A positive integer ``N`` has exactly one expansion ``N = sum(d_i * phi**i)``
with digits in ``{0, 1}`` and no two adjacent ones.  It is written
``d_L ... d_1 d_0 . d_-1 ... d_R``; the radix point is omitted when ``R == 0``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    MalformedDigitString,
    NonCanonical,
    NonTerminating,
    NotAnInteger,
    NotPositive,
)
from .ring import GoldenInt, phi_pow, sum_phi_powers


def check_gaps(indices: Iterable[int]) -> tuple[int, ...]:
    """Sort ``indices`` ascending and return them; raise ``ValueError`` on adjacency."""
    out = tuple(sorted(indices))
    for lo, hi in zip(out, out[1:]):
        if hi - lo < 2:
            raise ValueError(f"indices {lo} and {hi} are not separated by a gap of 2")
    return out


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing integer exponents, consecutive entries at least 2 apart."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", check_gaps(self.exponents))

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __contains__(self, k: object) -> bool:
        return k in self.exponents

    def shifted(self, n: int) -> IndexSet:
        return IndexSet(tuple(k + n for k in self.exponents))


@dataclass(frozen=True)
class PhiDigits:
    """A canonical base-phi digit string, stored as the set of indices holding a one."""

    ones: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            ones = check_gaps(self.ones)
        except ValueError as exc:
            raise NonCanonical(str(self.ones), _first_adjacent(self.ones), str(exc)) from None
        object.__setattr__(self, "ones", ones)

    @property
    def L(self) -> int:
        return max(self.ones[-1], 0) if self.ones else 0

    @property
    def R(self) -> int:
        return min(self.ones[0], 0) if self.ones else 0

    def digit(self, i: int) -> int:
        return 1 if i in self.ones else 0

    @property
    def digits(self) -> dict[int, int]:
        """Map from every index in ``[R, L]`` to its digit."""
        return {i: self.digit(i) for i in range(self.R, self.L + 1)}

    def __str__(self) -> str:
        return format_digits(self)


def _first_adjacent(ones: Iterable[int]) -> int:
    s = sorted(ones)
    for lo, hi in zip(s, s[1:]):
        if hi - lo < 2:
            return hi
    return s[0] if s else 0


@dataclass(frozen=True)
class BetaSplit:
    """``beta_plus`` holds digits for indices ``L..1``, ``beta_minus`` for ``-1..R``.

    ``d0`` is kept on its own; render it after ``beta_plus`` for the
    conventional ``beta+`` string.
    """

    beta_plus: tuple[int, ...]
    d0: int
    beta_minus: tuple[int, ...]

    def join(self) -> PhiDigits:
        L = len(self.beta_plus)
        ones = [L - k for k, d in enumerate(self.beta_plus) if d]
        if self.d0:
            ones.append(0)
        ones += [-(k + 1) for k, d in enumerate(self.beta_minus) if d]
        return PhiDigits(tuple(ones))

    def plus_text(self) -> str:
        return "".join(map(str, self.beta_plus)) + str(self.d0)

    def minus_text(self) -> str:
        return "".join(map(str, self.beta_minus))


def _top_exponent(n: int) -> int:
    """Largest ``k`` with ``phi**k <= n`` for integer ``n >= 1``."""
    # log_phi(2) ~ 1.44: integer estimate, then exact correction
    k = n.bit_length() * 144 // 100
    while phi_pow(k) > n:
        k -= 1
    while phi_pow(k + 1) <= n:
        k += 1
    return k


def encode(n: int) -> PhiDigits:
    """Base-phi digits of a positive integer via greedy largest-power subtraction.

    >>> str(encode(6))
    '1010.0001'
    """
    n = int(n)
    if n < 1:
        raise NotPositive(f"encode needs a positive integer, got {n}")
    top = _top_exponent(n)
    guard = 4 * (2 * top + 16)
    ra, rb = n, 0  # remainder as ra + rb*phi
    ones: list[int] = []
    k = top
    steps = 0
    while ra or rb:
        steps += 1
        if steps > guard:
            raise NonTerminating(f"greedy expansion of {n} did not terminate")
        p = phi_pow(k)
        da, db = ra - p.unit_coeff, rb - p.phi_coeff
        if GoldenInt(da, db).sign() >= 0:
            ones.append(k)
            ra, rb = da, db
            k -= 2  # remainder is now below phi**(k-1)
        else:
            k -= 1
    return PhiDigits(tuple(ones))


def decode(d: PhiDigits) -> GoldenInt:
    """Exact value of a digit string."""
    return sum_phi_powers(d.ones)


def decode_integer(d: PhiDigits, positive: bool = False) -> int:
    value = decode(d)
    if value.phi_coeff:
        raise NotAnInteger(f"{format_digits(d)} denotes {value}, not an integer")
    n = value.unit_coeff
    if positive and n < 1:
        raise NotPositive(f"{format_digits(d)} denotes {n}")
    return n


_SYNTAX = re.compile(r"[01]+(\.[01]+)?\Z")


def parse(text: str) -> PhiDigits:
    """Parse the canonical textual form; the inverse of :func:`format_digits`.

    Raises :class:`MalformedDigitString` for bad syntax and
    :class:`NonCanonical` for well-formed strings that are not canonical.
    """
    if not isinstance(text, str):
        raise TypeError("parse expects a string")
    if not _SYNTAX.match(text):
        raise MalformedDigitString(text, *_syntax_error(text))
    whole, _, frac = text.partition(".")
    if len(whole) > 1 and whole[0] == "0":
        raise NonCanonical(text, len(whole) - 1, "leading zero in integer part")
    if frac and frac[-1] == "0":
        raise NonCanonical(text, -len(frac), "trailing zero in fractional part")
    ones: list[int] = []
    for pos, ch in enumerate(whole):
        if ch == "1":
            ones.append(len(whole) - 1 - pos)
    for pos, ch in enumerate(frac):
        if ch == "1":
            ones.append(-(pos + 1))
    ones.sort()
    for lo, hi in zip(ones, ones[1:]):
        if hi - lo < 2:
            raise NonCanonical(text, hi, f"adjacent ones at indices {hi} and {lo}")
    return PhiDigits(tuple(ones))


def _syntax_error(text: str) -> tuple[int, str]:
    if text == "":
        return 0, "empty string"
    if text[0] == ".":
        return 0, "empty integer part"
    seen_point = False
    for pos, ch in enumerate(text):
        if ch == ".":
            if seen_point:
                return pos, "more than one radix point"
            seen_point = True
        elif ch not in "01":
            return pos, f"non-binary character {ch!r}"
    return len(text), "empty fractional part"


def format_digits(d: PhiDigits) -> str:
    L, R = d.L, d.R
    whole = "".join(str(d.digit(i)) for i in range(L, -1, -1))
    if R == 0:
        return whole
    return whole + "." + "".join(str(d.digit(i)) for i in range(-1, R - 1, -1))


def split(d: PhiDigits) -> BetaSplit:
    return BetaSplit(
        beta_plus=tuple(d.digit(i) for i in range(d.L, 0, -1)),
        d0=d.digit(0),
        beta_minus=tuple(d.digit(i) for i in range(-1, d.R - 1, -1)),
    )


def first_positive_index(d: PhiDigits) -> int | None:
    """Smallest ``i > 0`` with ``d_i == 1``, or ``None``."""
    return next((i for i in d.ones if i > 0), None)


def index_set(d: PhiDigits) -> IndexSet:
    return IndexSet(d.ones)
