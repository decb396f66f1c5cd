"""Exact arithmetic in the base fields: the rationals and GF(p) for odd p.

Field elements are plain Python values (fractions.Fraction over the
rationals, ints in [0, p) over a prime field) and a Field instance
supplies the arithmetic.  Nothing in this package ever touches floating
point.  Characteristic 2 is rejected at construction time: the form
computations downstream divide by 2 freely.
"""

from __future__ import annotations

import math
from fractions import Fraction

from sympy import factorint, isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .errors import FieldMismatchError, WittcError


class Field:
    """Common interface of Rationals and PrimeField.

    Subclasses supply char, zero, one and the arithmetic methods; values
    are raw Python objects, not wrappers.
    """

    char: int

    def coerce(self, x):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def require_same(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError(f"field mismatch: {self} vs {other}")


class Rationals(Field):
    """The field of rational numbers; elements are Fraction instances."""

    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def is_square(self, q):
        """Return a square root of q, or None if q is not a square."""
        q = self.coerce(q)
        if q < 0:
            return None
        n, d = q.numerator, q.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def square_class(self, q) -> int:
        """Canonical square-class representative: signed square-free integer."""
        q = self.coerce(q)
        if q == 0:
            raise WittcError("square class of 0 is undefined")
        n = abs(q.numerator * q.denominator)
        rep = 1
        for p, e in factorint(n).items():
            if e % 2:
                rep *= p
        return rep if q > 0 else -rep

    def sign(self, q) -> int:
        return (q > 0) - (q < 0)

    def elem_to_str(self, a) -> str:
        a = self.coerce(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def elem_from_str(self, s: str):
        return Fraction(s)

    def random_elem(self, rng, bound: int = 9):
        return Fraction(rng.randint(-bound, bound))

    def random_unit(self, rng, bound: int = 9):
        while True:
            a = self.random_elem(rng, bound)
            if a != 0:
                return a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """GF(p) for an odd prime p; elements are ints reduced mod p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not isprime(p):
            raise WittcError(f"{p} is not prime")
        if p == 2:
            raise WittcError(
                "characteristic 2 is not supported: all constructions here "
                "assume an odd characteristic"
            )
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1
        n = 2
        while pow(n, (p - 1) // 2, p) == 1:
            n += 1
        self._nonresidue = n

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def legendre(self, a) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    def is_square(self, q):
        """Return a square root of q (Euler criterion, then sqrt_mod), else None."""
        q = self.coerce(q)
        if q == 0:
            return 0
        if self.legendre(q) != 1:
            return None
        return int(sqrt_mod(q, self.p))

    def nonresidue(self) -> int:
        """Smallest positive quadratic nonresidue; the canonical nontrivial square class."""
        return self._nonresidue

    def square_class(self, q) -> int:
        q = self.coerce(q)
        if q == 0:
            raise WittcError("square class of 0 is undefined")
        return 1 if self.legendre(q) == 1 else self.nonresidue()

    def elem_to_str(self, a) -> str:
        return str(self.coerce(a))

    def elem_from_str(self, s: str):
        return self.coerce(Fraction(s))

    def random_elem(self, rng, bound: int | None = None):
        return rng.randrange(self.p)

    def random_unit(self, rng, bound: int | None = None):
        return rng.randrange(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


def elem_is_square(field: Field, q):
    """Decide whether q is a square in the field, with a witness.

    Returns (True, w) with w*w == q, or (False, None).  Raises on q == 0,
    whose class is neither a unit square nor a nonsquare.
    """
    q = field.coerce(q)
    if field.is_zero(q):
        raise WittcError("is_square is undefined at 0")
    w = field.is_square(q)
    if w is None:
        return False, None
    return True, w
