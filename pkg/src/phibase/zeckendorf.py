"""Zeckendorf codec and the shift identities for multiples of F[n] and L[n].

For a positive integer ``N`` with base-phi exponents ``i_1 < ... < i_m``::

    N * F[n] = F[n + i_1] + ... + F[n + i_m]
    N * L[n] = L[n + i_1] + ... + L[n + i_m]

hold for every integer ``n``, and ``N = phi**i_1 + ... + phi**i_m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codec import IndexSet, check_gaps, encode, index_set
from .errors import NotPositive
from .ring import sum_phi_powers
from .sequences import fib, lucas


@dataclass(frozen=True)
class ZeckendorfRep:
    """Fibonacci indices ``>= 2``, strictly increasing with gaps of at least 2."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = check_gaps(self.indices)
        if idx and idx[0] < 2:
            raise ValueError(f"Zeckendorf indices must be >= 2, got {idx[0]}")
        object.__setattr__(self, "indices", idx)

    def __str__(self) -> str:
        return " + ".join(f"F_{k}" for k in self.indices)


def zeck_encode(n: int) -> ZeckendorfRep:
    """Greedy largest-Fibonacci decomposition.

    >>> zeck_encode(6).indices
    (2, 5)
    """
    n = int(n)
    if n < 1:
        raise NotPositive(f"zeck_encode needs a positive integer, got {n}")
    fibs = [1, 2]  # F_2, F_3, ...
    while fibs[-1] <= n:
        fibs.append(fibs[-1] + fibs[-2])
    out = []
    for pos in range(len(fibs) - 1, -1, -1):
        if fibs[pos] <= n:
            n -= fibs[pos]
            out.append(pos + 2)
            if not n:
                break
    return ZeckendorfRep(tuple(out))


def zeck_decode(rep: ZeckendorfRep) -> int:
    return sum(fib(k) for k in rep.indices)


def shift_expansion(n: int) -> IndexSet:
    """Offsets ``i`` with ``n*F[k] == sum(F[k+i])`` for all ``k``: the base-phi exponents."""
    return index_set(encode(n))


def _offsets(n: int, offsets: Iterable[int] | None) -> tuple[int, ...]:
    return tuple(shift_expansion(n)) if offsets is None else tuple(offsets)


def nf_identity(n: int, k: int, offsets: Iterable[int] | None = None) -> tuple[int, int]:
    """Both sides of ``n*F[k] = sum(F[k+i])``; defaults to the base-phi offsets of ``n``."""
    return n * fib(k), sum(fib(k + i) for i in _offsets(n, offsets))


def nl_identity(n: int, k: int, offsets: Iterable[int] | None = None) -> tuple[int, int]:
    """Both sides of ``n*L[k] = sum(L[k+i])``."""
    return n * lucas(k), sum(lucas(k + i) for i in _offsets(n, offsets))


def phi_sum_check(idx: Iterable[int], n: int) -> bool:
    """True iff ``sum(phi**i for i in idx)`` equals ``n`` exactly."""
    return sum_phi_powers(idx) == n
