"""Recover ``N`` from part of its base-phi digit string.

With ``i`` the smallest positive index carrying a one:

* positive digits: ``N = sum(d_k * L[k], k >= 1) + d_0 + (1 if i odd else 0)``
* negative digits: ``N = sum(d_-j * (-1)**j * L[j], j >= 1) + d_0 - (1 if i odd else 0)``
* both together:   ``2N = sum(d_k * L[k], k >= 1) + 2*d_0 + sum(d_-j * (-1)**j * L[j])``

``N = 1`` is the only positive integer without a positive digit; it takes the
even branch in both formulas.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .codec import IndexSet, PhiDigits, decode_integer, encode, first_positive_index, split
from .errors import InvalidDigits, InvalidGaps
from .ring import GoldenInt, phi_pow, sum_phi_powers
from .sequences import lucas

Digits = Union[Sequence[int], str]


class ParityHint(enum.Enum):
    ODD = "odd"
    EVEN = "even"
    NONE = "none"

    @classmethod
    def of(cls, i: int | None) -> ParityHint:
        if i is None:
            return cls.NONE
        return cls.ODD if i % 2 else cls.EVEN

    def flipped(self) -> ParityHint:
        return ParityHint.EVEN if self is ParityHint.ODD else ParityHint.ODD


def parity_hint(d: PhiDigits) -> ParityHint:
    return ParityHint.of(first_positive_index(d))


def _as_digits(digits: Digits, what: str) -> tuple[int, ...]:
    out = tuple(int(c) for c in digits)
    if any(c not in (0, 1) for c in out):
        raise InvalidDigits(f"{what} contains a digit other than 0/1")
    return out


def _check_bit(d0: int) -> int:
    if d0 not in (0, 1):
        raise InvalidDigits(f"d0 must be 0 or 1, got {d0!r}")
    return int(d0)


def _check_adjacent(bits: Sequence[int], what: str) -> None:
    for k in range(len(bits) - 1):
        if bits[k] and bits[k + 1]:
            raise InvalidDigits(f"adjacent ones in {what}")


def from_positive(beta_plus: Digits, d0: int) -> int:
    """Reconstruct ``N`` from digits at indices ``L..1`` (most significant first) and ``d0``."""
    plus = _as_digits(beta_plus, "beta_plus")
    d0 = _check_bit(d0)
    _check_adjacent(plus + (d0,), "beta_plus/d0")
    top = len(plus)
    set_idx = [top - k for k, bit in enumerate(plus) if bit]
    total = sum(lucas(k) for k in set_idx) + d0
    if set_idx and min(set_idx) % 2:
        total += 1
    return total


def from_negative(beta_minus: Digits, d0: int, hint: ParityHint | str) -> int:
    """Reconstruct ``N`` from digits at indices ``-1..R``, ``d0`` and the parity hint."""
    minus = _as_digits(beta_minus, "beta_minus")
    d0 = _check_bit(d0)
    hint = ParityHint(hint)
    _check_adjacent((d0,) + minus, "d0/beta_minus")
    total = d0
    for k, bit in enumerate(minus):
        if bit:
            j = k + 1
            total += -lucas(j) if j % 2 else lucas(j)
    if hint is ParityHint.ODD:
        total -= 1
    return total


def double_from_lucas(d: PhiDigits) -> int:
    """``2N`` from the whole digit string, with no parity information needed."""
    total = 0
    for i in d.ones:
        if i > 0:
            total += lucas(i)
        elif i == 0:
            total += 2
        else:
            total += lucas(i)  # L[-j] == (-1)**j * L[j]
    return total


def _validated(idx: IndexSet | Iterable[int]) -> tuple[int, ...]:
    if isinstance(idx, IndexSet):
        ks = idx.exponents
    else:
        ks = tuple(sorted(idx))
        for lo, hi in zip(ks, ks[1:]):
            if hi - lo < 2:
                raise InvalidGaps(f"indices {lo} and {hi} differ by less than 2")
    if not ks:
        raise InvalidGaps("index set must be nonempty")
    return ks


def lemma1_gap(idx: IndexSet | Iterable[int]) -> GoldenInt:
    """``phi**(max+1) - sum(phi**k)``; strictly positive for every valid set."""
    ks = _validated(idx)
    return phi_pow(ks[-1] + 1) - sum_phi_powers(ks)


def lemma1_check(idx: IndexSet | Iterable[int]) -> bool:
    """Decide ``sum(phi**k) < phi**(max+1)`` exactly."""
    return lemma1_gap(idx).sign() > 0


def lemma2_sign(idx: IndexSet | Iterable[int]) -> int:
    """Exact sign of ``sum((-1)**k * phi**k)``; +1 iff the largest index is even."""
    return sum_phi_powers(_validated(idx), alternating=True).sign()


def negative_tail(d: PhiDigits) -> GoldenInt:
    """Exact value of the fractional digits alone, ``sum(phi**-j)``."""
    return sum_phi_powers(i for i in d.ones if i < 0)


def positive_conjugate_tail(d: PhiDigits) -> GoldenInt:
    """``-sum((-1)**i * phi**-i)`` over the positive indices ``i``.

    This is the non-integer remainder left after replacing each ``phi**i``
    by ``L[i]``; it lies in ``(0, 1)`` when the smallest positive index is
    odd and in ``(-1, 0)`` when it is even.
    """
    return -sum_phi_powers((-i for i in d.ones if i > 0), alternating=True)


@dataclass
class ConsistencyReport:
    n: int
    digits: str
    hint: ParityHint
    from_positive: int
    from_negative: int
    double: int
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def theorem_consistency(n: int) -> ConsistencyReport:
    """Run all three reconstructions on ``encode(n)`` and collect disagreements."""
    d = encode(n)
    parts = split(d)
    hint = parity_hint(d)
    rep = ConsistencyReport(
        n=n,
        digits=str(d),
        hint=hint,
        from_positive=from_positive(parts.beta_plus, parts.d0),
        from_negative=from_negative(parts.beta_minus, parts.d0, hint),
        double=double_from_lucas(d),
    )
    if decode_integer(d) != n:
        rep.failures.append(f"decode: {decode_integer(d)} != {n}")
    if rep.from_positive != n:
        rep.failures.append(f"from_positive: {rep.from_positive} != {n}")
    if rep.from_negative != n:
        rep.failures.append(f"from_negative: {rep.from_negative} != {n}")
    if rep.double != 2 * n:
        rep.failures.append(f"double_from_lucas: {rep.double} != {2 * n}")
    if rep.from_positive + rep.from_negative != rep.double:
        rep.failures.append("from_positive + from_negative != double_from_lucas")
    return rep
