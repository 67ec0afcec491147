"""Exact arithmetic in quadratic extensions of prime fields.

The field with p^2 elements is modeled as F_p[theta] with theta^2 = u*theta
+ v for a fixed irreducible choice: for odd p, theta^2 = s with s the least
positive quadratic non-residue; for p = 2, theta^2 = theta + 1.  The model
is deterministic, so printed elements are stable across runs.

Primes are expected at desk scale (p <= 10^4 or so); multiplicative orders
factor p^2 - 1 by trial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OddPrimeRequired, ZeroElement
from .rings import _is_prime


@dataclass(frozen=True)
class QuadraticField:
    """Descriptor of F_{p^2} = F_p[theta], theta^2 = u*theta + v."""

    p: int
    u: int
    v: int

    def modulus_tag(self) -> str:
        if self.u == 0:
            return f"theta^2={self.v}"
        return f"theta^2={self.u}*theta+{self.v}"


@lru_cache(maxsize=None)
def quadratic_field(p: int) -> QuadraticField:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return QuadraticField(2, 1, 1)
    s = next(s for s in range(2, p) if pow(s, (p - 1) // 2, p) == p - 1)
    return QuadraticField(p, 0, s)


@dataclass(frozen=True)
class Fp2Element:
    """x + y*theta with components reduced modulo p."""

    field: QuadraticField
    x: int
    y: int

    def __post_init__(self):
        p = self.field.p
        object.__setattr__(self, "x", self.x % p)
        object.__setattr__(self, "y", self.y % p)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def in_prime_field(self) -> bool:
        return self.y == 0

    def __add__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.field, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.field, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Fp2Element":
        return Fp2Element(self.field, -self.x, -self.y)

    def __mul__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        p, u, v = self.field.p, self.field.u, self.field.v
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        cross = x1 * y2 + x2 * y1
        sq = y1 * y2  # coefficient of theta^2 = u*theta + v
        return Fp2Element(self.field, (x1 * x2 + sq * v) % p, (cross + sq * u) % p)

    def conjugate(self) -> "Fp2Element":
        # the other root of the modulus is u - theta
        return Fp2Element(self.field, self.x + self.y * self.field.u, -self.y)

    def norm(self) -> int:
        p = self.field.p
        prod = self * self.conjugate()
        assert prod.y == 0
        return prod.x % p

    def inverse(self) -> "Fp2Element":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n_inv = pow(self.norm(), -1, self.field.p)
        conj = self.conjugate()
        return Fp2Element(self.field, conj.x * n_inv, conj.y * n_inv)

    def __pow__(self, n: int) -> "Fp2Element":
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = one(self.field)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _check(self, other):
        if self.field != other.field:
            raise ValueError("elements from different fields")

    def __str__(self) -> str:
        f = self.field
        return f"{self.x} + {self.y}*theta (mod {f.p}, {f.modulus_tag()})"


def embed(field: QuadraticField, x: int) -> Fp2Element:
    return Fp2Element(field, x, 0)


def zero(field: QuadraticField) -> Fp2Element:
    return Fp2Element(field, 0, 0)


def one(field: QuadraticField) -> Fp2Element:
    return Fp2Element(field, 1, 0)


def _sqrt_in_prime_field(value: int, p: int):
    """Smallest square root of a residue mod p, or None (p at desk scale)."""
    value %= p
    for r in range(p):
        if r * r % p == value:
            return r
    return None


def sqrt_fp2(value: int, p: int) -> Fp2Element:
    """A square root of a prime-field value, inside F_p if possible.

    Odd p only.  For a non-residue the root is a pure theta multiple, since
    theta^2 is itself a non-residue.
    """
    if p == 2:
        raise OddPrimeRequired("square roots here are defined for odd p")
    field = quadratic_field(p)
    value %= p
    r = _sqrt_in_prime_field(value, p)
    if r is not None:
        return Fp2Element(field, r, 0)
    y = _sqrt_in_prime_field(value * pow(field.v, -1, p) % p, p)
    assert y is not None
    return Fp2Element(field, 0, y)


def quadratic_roots(b: int, c: int, p: int):
    """Both roots of the monic polynomial x^2 + b x + c over F_{p^2}.

    Completing the square for odd p; exhaustive search over the four
    elements for p = 2.  The sum and product are verified against the
    coefficients before returning.
    """
    field = quadratic_field(p)
    if p == 2:
        roots = [
            e
            for x in range(2)
            for y in range(2)
            for e in [Fp2Element(field, x, y)]
            if (e * e + embed(field, b) * e + embed(field, c)).is_zero()
        ]
        if len(roots) == 1:
            roots = roots * 2
        assert len(roots) == 2
        r1, r2 = roots
    else:
        disc = (b * b - 4 * c) % p
        root = sqrt_fp2(disc, p)
        inv2 = pow(2, -1, p)
        r1 = Fp2Element(field, (-b) * inv2, 0) + root * embed(field, inv2)
        r2 = Fp2Element(field, (-b) * inv2, 0) - root * embed(field, inv2)
    assert (r1 + r2) == embed(field, -b)
    assert (r1 * r2) == embed(field, c)
    return r1, r2


def _trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(e: Fp2Element) -> int:
    """Least n >= 1 with e^n = 1, by divisor descent through p^2 - 1."""
    if e.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    group = e.field.p ** 2 - 1
    order = group
    for q in _trial_factor(group):
        while order % q == 0 and (e ** (order // q)) == one(e.field):
            order //= q
    assert (e ** order) == one(e.field)
    return order
