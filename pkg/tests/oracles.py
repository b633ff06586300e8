"""Reference computations that share no code path with the library internals.

Each oracle uses the most direct method available: repeated multiplication,
explicit recurrence tables, or exhaustive enumeration.
"""
from __future__ import annotations

import itertools

import mpmath

from phibase.ring import GoldenInt

PHI = GoldenInt(0, 1)
PHI_INV = GoldenInt(-1, 1)  # phi - 1


def phi_pow_by_multiplication(n: int) -> GoldenInt:
    x = GoldenInt(1, 0)
    step = PHI if n >= 0 else PHI_INV
    for _ in range(abs(n)):
        x = x * step
    return x


def recurrence_table(x0: int, x1: int, lo: int, hi: int) -> dict[int, int]:
    """Values of X with X[0]=x0, X[1]=x1 for indices in [lo, hi], by the recurrence."""
    t = {0: x0, 1: x1}
    for k in range(2, hi + 1):
        t[k] = t[k - 1] + t[k - 2]
    for k in range(-1, lo - 1, -1):
        t[k] = t[k + 2] - t[k + 1]
    return t


def numeric(x: GoldenInt, dps: int = 120):
    with mpmath.workdps(dps):
        return mpmath.mpf(x.unit_coeff) + mpmath.mpf(x.phi_coeff) * (1 + mpmath.sqrt(5)) / 2


def gap_subsets(lo: int, hi: int):
    """Every subset of [lo, hi] with no two adjacent members, as (indices, value)."""
    powers = {k: phi_pow_by_multiplication(k) for k in range(lo, hi + 1)}

    def walk(k: int, chosen: tuple[int, ...], a: int, b: int):
        if k > hi:
            yield chosen, GoldenInt(a, b)
            return
        yield from walk(k + 1, chosen, a, b)
        p = powers[k]
        yield from walk(k + 2, chosen + (k,), a + p.unit_coeff, b + p.phi_coeff)

    yield from walk(lo, (), 0, 0)


def representations_by_enumeration(max_n: int, lo: int = -12, hi: int = 12) -> dict[int, list[tuple[int, ...]]]:
    found: dict[int, list[tuple[int, ...]]] = {n: [] for n in range(1, max_n + 1)}
    for idx, value in gap_subsets(lo, hi):
        if value.phi_coeff == 0 and 1 <= value.unit_coeff <= max_n:
            found[value.unit_coeff].append(idx)
    return found


def zeckendorf_by_enumeration(max_n: int, top: int = 14) -> dict[int, list[tuple[int, ...]]]:
    fibs = recurrence_table(0, 1, 0, top)
    found: dict[int, list[tuple[int, ...]]] = {n: [] for n in range(1, max_n + 1)}
    ks = range(2, top + 1)
    for r in range(1, len(ks) + 1):
        for combo in itertools.combinations(ks, r):
            if any(b - a < 2 for a, b in zip(combo, combo[1:])):
                continue
            s = sum(fibs[k] for k in combo)
            if s <= max_n:
                found[s].append(combo)
    return found
