"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain values (rationals, or ints in ``[0, p)``), not wrapper
objects; the field object supplies the arithmetic.  This keeps the inner
loops of the Groebner engine free of per-element dispatch.  Rational
scalars use ``gmpy2.mpq`` when available (noticeably faster on the large
numerators that show up mid-reduction) and ``fractions.Fraction``
otherwise; both are exact and print identically.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is optional
    _rat = Fraction


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers with exact arbitrary-precision scalars."""

    characteristic = 0

    def __init__(self):
        self.zero = _rat(0)
        self.one = _rat(1)

    def scalar(self, numerator: int, denominator: int = 1):
        if denominator == 0:
            raise InputError("zero denominator")
        return _rat(numerator, denominator)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero scalar")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    @staticmethod
    def format(a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """F_p for a prime p; scalars are ints reduced into ``[0, p)``."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise InputError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def scalar(self, numerator: int, denominator: int = 1):
        num = numerator % self.p
        if denominator == 1:
            return num
        den = denominator % self.p
        if den == 0:
            raise InputError(f"denominator {denominator} is not invertible mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero scalar")
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        return self.div(1, a)

    @staticmethod
    def format(a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()
