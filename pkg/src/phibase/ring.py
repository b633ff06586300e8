"""Exact arithmetic in the ring of golden integers ``a + b*phi``.

Every finite sum of integer powers of the golden ratio lives in this ring, so
all comparisons below are decided with integer arithmetic only.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Union

from .errors import NotAnInteger
from .sequences import fib

Operand = Union["GoldenInt", int]


def _sign_of_sqrt5_form(p: int, q: int) -> int:
    """Sign of ``p + q*sqrt(5)`` for integers ``p`` and ``q``."""
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1
    # mixed signs; p*p == 5*q*q has no nonzero integer solution
    if p > 0:
        return 1 if p * p > 5 * q * q else -1
    return 1 if 5 * q * q > p * p else -1


@total_ordering
class GoldenInt:
    """Immutable element ``a + b*phi`` with arbitrary-precision ``a`` and ``b``."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "_a", int(a))
        object.__setattr__(self, "_b", int(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenInt is immutable")

    @property
    def unit_coeff(self) -> int:
        return self._a

    @property
    def phi_coeff(self) -> int:
        return self._b

    @classmethod
    def coerce(cls, x: Operand) -> GoldenInt:
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot use {type(x).__name__} as a golden integer")

    @classmethod
    def from_sqrt5(cls, x: Fraction | int, y: Fraction | int) -> GoldenInt:
        """Build from ``x + y*sqrt(5)``; ``x``, ``y`` may be half-integers."""
        x, y = Fraction(x), Fraction(y)
        a, b = x - y, 2 * y
        if a.denominator != 1 or b.denominator != 1:
            raise ValueError(f"{x} + {y}*sqrt(5) is not a golden integer")
        return cls(int(a), int(b))

    def to_sqrt5(self) -> tuple[Fraction, Fraction]:
        """Return ``(x, y)`` with ``self == x + y*sqrt(5)``."""
        half_b = Fraction(self._b, 2)
        return self._a + half_b, half_b

    def __repr__(self) -> str:
        return f"GoldenInt({self._a}, {self._b})"

    def __str__(self) -> str:
        return f"{self._a}{self._b:+d}*phi"

    @classmethod
    def parse(cls, text: str) -> GoldenInt:
        """Inverse of ``str``: accepts ``"a+b*phi"`` / ``"a-b*phi"``."""
        body = text.strip()
        if not body.endswith("*phi"):
            raise ValueError(f"not a golden integer literal: {text!r}")
        body = body[: -len("*phi")]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            raise ValueError(f"not a golden integer literal: {text!r}")
        return cls(int(body[:cut]), int(body[cut:]))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenInt):
            return self._a == other._a and self._b == other._b
        if isinstance(other, int):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._a) if self._b == 0 else hash((self._a, self._b))

    def __lt__(self, other: Operand) -> bool:
        if not isinstance(other, (GoldenInt, int)):
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self) -> bool:
        return bool(self._a or self._b)

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self._a, -self._b)

    def __pos__(self) -> GoldenInt:
        return self

    def __add__(self, other: Operand) -> GoldenInt:
        if not isinstance(other, (GoldenInt, int)):
            return NotImplemented
        o = GoldenInt.coerce(other)
        return GoldenInt(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> GoldenInt:
        if not isinstance(other, (GoldenInt, int)):
            return NotImplemented
        o = GoldenInt.coerce(other)
        return GoldenInt(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: Operand) -> GoldenInt:
        return GoldenInt.coerce(other) - self

    def __mul__(self, other: Operand) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self._a * other, self._b * other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        # (a + b phi)(c + d phi) with phi^2 = phi + 1
        a, b, c, d = self._a, self._b, other._a, other._b
        bd = b * d
        return GoldenInt(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GoldenInt:
        if n < 0:
            return self.inverse() ** -n
        result, base = GoldenInt(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> GoldenInt:
        """Algebraic conjugate: ``phi -> 1 - phi``."""
        return GoldenInt(self._a + self._b, -self._b)

    def norm(self) -> int:
        """``x * conj(x)``, always a rational integer."""
        a, b = self._a, self._b
        return a * a + a * b - b * b

    def trace(self) -> int:
        """``x + conj(x)``."""
        return 2 * self._a + self._b

    def inverse(self) -> GoldenInt:
        """Multiplicative inverse; only units (norm +-1) are invertible."""
        nrm = self.norm()
        if nrm not in (1, -1):
            raise ZeroDivisionError(f"{self} is not a unit")
        return self.conj() * nrm

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*phi`` in ``{-1, 0, 1}``."""
        # a + b*phi == ((2a + b) + b*sqrt(5)) / 2
        return _sign_of_sqrt5_form(2 * self._a + self._b, self._b)

    def to_int(self) -> int:
        if self._b != 0:
            raise NotAnInteger(f"{self} is not a rational integer")
        return self._a

    def __int__(self) -> int:
        return self.to_int()

    def approx(self, dps: int = 50):
        """High-precision float value (diagnostic only, never used for decisions)."""
        import mpmath

        with mpmath.workdps(dps):
            phi = (1 + mpmath.sqrt(5)) / 2
            return +(self._a + self._b * phi)


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
PHI = GoldenInt(0, 1)
PHI_BAR = PHI.conj()


@lru_cache(maxsize=4096)
def phi_pow(n: int) -> GoldenInt:
    """Exact ``phi**n`` for any integer ``n``: ``F[n]*phi + F[n-1]``.

    >>> phi_pow(3), phi_pow(-4)
    (GoldenInt(1, 2), GoldenInt(5, -3))
    """
    return GoldenInt(fib(n - 1), fib(n))


def sum_phi_powers(exponents: Iterable[int], alternating: bool = False) -> GoldenInt:
    """``sum(phi**k)`` or, with ``alternating``, ``sum((-1)**k * phi**k)``."""
    a = b = 0
    for k in exponents:
        p = phi_pow(k)
        if alternating and k % 2:
            a -= p.unit_coeff
            b -= p.phi_coeff
        else:
            a += p.unit_coeff
            b += p.phi_coeff
    return GoldenInt(a, b)


def sign(x: Operand) -> int:
    return GoldenInt.coerce(x).sign()


def cmp(x: Operand, y: Operand) -> int:
    """Three-way comparison: -1, 0 or 1 as ``x`` is less, equal or greater."""
    return (GoldenInt.coerce(x) - GoldenInt.coerce(y)).sign()
