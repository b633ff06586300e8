"""Fibonacci and Lucas numbers for every integer index.

Both sequences satisfy ``X[n+1] = X[n] + X[n-1]`` for all integers ``n`` once
extended to negative indices by

    F[-n] = (-1)**(n+1) * F[n]        L[-n] = (-1)**n * L[n]
"""
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .ring import GoldenInt

# Above this index the linear pass is replaced by fast doubling.
DOUBLING_THRESHOLD = 10_000
# Negative indices closer to zero than this run the recurrence backward;
# farther ones use the reflection formulas.
BACKWARD_LIMIT = 64


def _fib_pair_linear(n: int) -> tuple[int, int]:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a, b


def _fib_pair_doubling(n: int) -> tuple[int, int]:
    """Return ``(F[n], F[n+1])`` for ``n >= 0`` by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(n: int) -> tuple[int, int]:
    """``(F[n], F[n+1])`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("fib_pair needs a non-negative index")
    if n > DOUBLING_THRESHOLD:
        return _fib_pair_doubling(n)
    return _fib_pair_linear(n)


def _backward(n: int, x0: int, x1: int) -> int:
    # walk X[k-1] = X[k+1] - X[k] from (X[0], X[1]) down to X[n], n < 0
    lo, hi = x0, x1
    for _ in range(-n):
        lo, hi = hi - lo, lo
    return lo


def fib(n: int) -> int:
    """Fibonacci number ``F[n]`` for any integer ``n``.

    >>> [fib(k) for k in range(-4, 5)]
    [-3, 2, -1, 1, 0, 1, 1, 2, 3]
    """
    n = int(n)
    if n >= 0:
        return fib_pair(n)[0]
    if n >= -BACKWARD_LIMIT:
        return _backward(n, 0, 1)
    f = fib_pair(-n)[0]
    return f if n % 2 else -f


def lucas(n: int) -> int:
    """Lucas number ``L[n]`` for any integer ``n``.

    >>> [lucas(k) for k in range(-3, 6)]
    [-4, 3, -1, 2, 1, 3, 4, 7, 11]
    """
    n = int(n)
    if n >= 0:
        f, g = fib_pair(n)
        return 2 * g - f
    if n >= -BACKWARD_LIMIT:
        return _backward(n, 2, 1)
    v = lucas(-n)
    return -v if n % 2 else v


def binet_residual(n: int) -> GoldenInt:
    """``phi**n + conj(phi)**n - L[n]`` computed exactly; always zero."""
    from .ring import GoldenInt, phi_pow

    if abs(n) > 512:
        raise ValueError("binet_residual is guarded to |n| <= 512")
    p = phi_pow(n)
    return p + p.conj() - GoldenInt(lucas(n), 0)


def binet_fib_residual(n: int) -> GoldenInt:
    """``phi**n - conj(phi)**n - sqrt(5) * F[n]``; always zero.

    In the ``{1, phi}`` basis ``sqrt(5) = 2*phi - 1``, so the subtracted term
    is ``-F[n] + 2*F[n]*phi``.
    """
    from .ring import GoldenInt, phi_pow

    if abs(n) > 512:
        raise ValueError("binet_fib_residual is guarded to |n| <= 512")
    p = phi_pow(n)
    f = fib(n)
    return p - p.conj() - GoldenInt(-f, 2 * f)
