"""Exact coefficient rings: integers, rationals and prime fields.

Every module-level container (Schubert vectors, polynomials) carries one of
these ring descriptors and funnels its coefficient arithmetic through it.
Elements are plain Python values: ``int`` for Z and F_p (stored reduced to
``0..p-1``), ``fractions.Fraction`` for Q.  Rings are never mixed inside one
container.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class IntegerRing:
    name = "Z"
    char = 0
    is_field = False
    zero = 0
    one = 1

    def promote(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, int):
            return x
        if isinstance(x, (Fraction, str)):
            q = Fraction(x)
            if q.denominator != 1:
                raise ValueError(f"{x!r} is not an integer")
            return q.numerator
        raise TypeError(f"cannot coerce {x!r} into Z")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"{a} is not divisible by {b} in Z")
        return q

    def is_zero(self, a):
        return a == 0

    def to_json(self, a):
        return a


@dataclass(frozen=True)
class RationalRing:
    name = "Q"
    char = 0
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def promote(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, (int, Fraction, str)):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def to_json(self, a):
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self):
        return f"F{self.p}"

    @property
    def char(self):
        return self.p

    is_field = True
    zero = 0
    one = 1

    def promote(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, (Fraction, str)):
            q = Fraction(x)
            if q.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x!r} has no image in F_{self.p}")
            return q.numerator * pow(q.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def to_json(self, a):
        return a % self.p


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


ZZ = IntegerRing()
QQ = RationalRing()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_ring(name: str):
    """Parse a ring name: "Z", "Q" or "F<p>"."""
    name = name.strip()
    if name == "Z":
        return ZZ
    if name == "Q":
        return QQ
    if name.startswith("F") and name[1:].isdigit():
        return GF(int(name[1:]))
    raise ValueError(f"unknown coefficient ring {name!r} (expected Z, Q or F<p>)")
