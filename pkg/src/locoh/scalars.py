"""Exact scalar domains: rationals, prime fields, and the integers.

A :class:`ScalarDomain` bundles the arithmetic of one of the three base
domains behind a small ring protocol (``zero``/``one``/``add``/``mul``/
``exact_div``/...).  Elements are plain Python values: ``Fraction`` over the
rationals, ``int`` over the integers and over a prime field (reduced mod p).
Every operation is exact; nothing in the package touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatch, NotAField

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"
INTEGERS = "integers"

_MAX_MODULUS = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic primality test for machine-word moduli.

    Miller-Rabin with witness set {2, 3, 5, 7} is exact below 3.2e9, which
    covers every modulus this package accepts.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ScalarDomain:
    """One of Q, F_p, or Z, with exact arithmetic on its elements."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if self.p is None or not (2 <= self.p < _MAX_MODULUS):
                raise DomainMismatch(f"modulus {self.p} out of range")
            if not is_prime(self.p):
                raise DomainMismatch(f"modulus {self.p} is not prime")
        elif self.kind not in (RATIONALS, INTEGERS):
            raise DomainMismatch(f"unknown scalar domain kind {self.kind!r}")

    # -- structure ----------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME_FIELD else 0

    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def from_int(self, n: int):
        if self.kind == RATIONALS:
            return Fraction(n)
        if self.kind == PRIME_FIELD:
            return n % self.p
        return int(n)

    def normalize(self, x):
        """Coerce ``x`` into canonical form, raising DomainMismatch if foreign."""
        if isinstance(x, bool):
            raise DomainMismatch("booleans are not scalars")
        if self.kind == RATIONALS:
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise DomainMismatch(f"{x!r} is not a rational")
        if not isinstance(x, int):
            if self.kind == INTEGERS and isinstance(x, Fraction) and x.denominator == 1:
                return int(x)
            raise DomainMismatch(f"{x!r} is not an element of {self}")
        return x % self.p if self.kind == PRIME_FIELD else x

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        c = a + b
        return c % self.p if self.kind == PRIME_FIELD else c

    def sub(self, a, b):
        c = a - b
        return c % self.p if self.kind == PRIME_FIELD else c

    def neg(self, a):
        return -a % self.p if self.kind == PRIME_FIELD else -a

    def mul(self, a, b):
        c = a * b
        return c % self.p if self.kind == PRIME_FIELD else c

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def is_unit(self, a) -> bool:
        if self.kind == INTEGERS:
            return a in (1, -1)
        return a != 0

    def inv(self, a):
        if self.kind == RATIONALS:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if self.kind == PRIME_FIELD:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, -1, self.p)
        raise NotAField("Z has no general inverses")

    def exact_div(self, a, b):
        """Divide ``a`` by ``b``, which must be exact in this domain."""
        if self.kind == RATIONALS:
            return Fraction(a) / b
        if self.kind == PRIME_FIELD:
            return a * pow(b, -1, self.p) % self.p
        q, r = divmod(a, b)
        if r:
            raise DomainMismatch(f"{a} is not divisible by {b} over Z")
        return q

    # -- presentation ---------------------------------------------------------

    def to_str(self, a) -> str:
        if self.kind == RATIONALS and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def __str__(self):
        if self.kind == RATIONALS:
            return "QQ"
        if self.kind == INTEGERS:
            return "ZZ"
        return f"GF({self.p})"


QQ = ScalarDomain(RATIONALS)
ZZ = ScalarDomain(INTEGERS)


def GF(p: int) -> ScalarDomain:
    """The prime field with ``p`` elements (p prime, p < 2**31)."""
    return ScalarDomain(PRIME_FIELD, p)
