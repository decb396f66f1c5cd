"""Finite quotient algebras E = k[t]/(f) with f monic of degree >= 1.

Elements are fixed-length tuples of field values (coefficients of
1, t, ..., t^(d-1)), so matrices over E compose with the generic helpers
in linalg.  The algebra object doubles as the ring context for them.
The distinguished point object is k[t]/(t), i.e. the base field itself.
"""

from __future__ import annotations

from .errors import NonUnitError, WittcError
from .fields import Field
from .poly import Poly, poly_ext_gcd, poly_gcd


class FiniteAlgebra:
    """The quotient ring k[t]/(modulus); also a linalg ring context."""

    __slots__ = ("field", "modulus", "degree", "zero", "one", "gen", "_red0", "_red")

    def __init__(self, field: Field, modulus: Poly):
        if modulus.field != field:
            raise WittcError("modulus is over a different field")
        if modulus.degree < 1 or not modulus.is_monic():
            raise WittcError("modulus must be monic of degree >= 1")
        d = modulus.degree
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "degree", d)
        object.__setattr__(self, "zero", (field.zero,) * d)
        one = (field.one,) + (field.zero,) * (d - 1)
        object.__setattr__(self, "one", one)
        # t^d mod f, and iterated t^(d+e) mod f for the multiplication fold
        red0 = tuple(field.neg(c) for c in modulus.coeffs[:d])
        red = [red0]
        for _ in range(d - 2):
            prev = red[-1]
            top = prev[d - 1]
            shifted = [field.zero] + list(prev[: d - 1])
            red.append(
                tuple(
                    field.add(shifted[i], field.mul(top, red0[i])) for i in range(d)
                )
            )
        object.__setattr__(self, "_red0", red0)
        object.__setattr__(self, "_red", tuple(red))
        if d == 1:
            gen = (red0[0],)
        else:
            gen = (field.zero, field.one) + (field.zero,) * (d - 2)
        object.__setattr__(self, "gen", gen)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteAlgebra is immutable")

    # -- element construction ------------------------------------------------

    def from_poly(self, p: Poly):
        if p.field != self.field:
            raise WittcError("polynomial over a different field")
        r = p % self.modulus
        return tuple(r.coeff(k) for k in range(self.degree))

    def from_coeffs(self, coeffs):
        vals = [self.field.coerce(c) for c in coeffs]
        if len(vals) > self.degree:
            return self.from_poly(Poly(self.field, vals))
        vals += [self.field.zero] * (self.degree - len(vals))
        return tuple(vals)

    def scalar(self, c):
        return self.from_coeffs([c])

    def lift(self, a) -> Poly:
        return Poly(self.field, a)

    # -- ring context --------------------------------------------------------

    def add(self, a, b):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.field
        return tuple(F.neg(x) for x in a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def scalar_mul(self, c, a):
        F = self.field
        c = F.coerce(c)
        return tuple(F.mul(c, x) for x in a)

    def mul(self, a, b):
        F = self.field
        d = self.degree
        if d == 1:
            return (F.mul(a[0], b[0]),)
        conv = [F.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            for j, y in enumerate(b):
                conv[i + j] = F.add(conv[i + j], F.mul(x, y))
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if F.is_zero(c):
                continue
            row = self._red[k - d]
            for e in range(d):
                conv[e] = F.add(conv[e], F.mul(c, row[e]))
        return tuple(conv[:d])

    def mul_by_t(self, a):
        F = self.field
        d = self.degree
        top = a[d - 1]
        shifted = (F.zero,) + a[: d - 1]
        if F.is_zero(top):
            return shifted
        return tuple(
            F.add(shifted[i], F.mul(top, self._red0[i])) for i in range(d)
        )

    def is_unit(self, a) -> bool:
        lifted = self.lift(a)
        if lifted.is_zero():
            return False
        return poly_gcd(lifted, self.modulus).degree == 0

    def inv(self, a):
        lifted = self.lift(a)
        if lifted.is_zero():
            raise NonUnitError("zero is not a unit")
        g, u, _ = poly_ext_gcd(lifted, self.modulus)
        if g.degree != 0:
            raise NonUnitError(
                f"{lifted!r} is not a unit modulo {self.modulus!r}"
            )
        return self.from_poly(u)

    def eval_poly(self, p: Poly, a):
        """Horner evaluation of a field polynomial at an algebra element."""
        acc = self.zero
        for c in reversed(p.coeffs):
            acc = self.add(self.mul(acc, a), self.scalar(c))
        return acc

    def mult_matrix(self, a):
        """Matrix of multiplication by a on the monomial basis (columns a*t^e)."""
        d = self.degree
        cols = [a]
        for _ in range(d - 1):
            cols.append(self.mul_by_t(cols[-1]))
        return tuple(tuple(cols[e][r] for e in range(d)) for r in range(d))

    def trace(self, a):
        F = self.field
        d = self.degree
        z = a
        tot = z[0]
        for e in range(1, d):
            z = self.mul_by_t(z)
            tot = F.add(tot, z[e])
        return tot

    # -- misc ------------------------------------------------------------------

    @property
    def is_point(self) -> bool:
        return self.modulus == Poly.t(self.field)

    def random_elem(self, rng):
        return tuple(self.field.random_elem(rng) for _ in range(self.degree))

    def random_unit(self, rng):
        while True:
            a = self.random_elem(rng)
            if self.is_unit(a):
                return a

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and other.field == self.field
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.field, self.modulus))

    def __repr__(self):
        from .poly import poly_to_str

        return f"FiniteAlgebra({self.field!r}, {poly_to_str(self.modulus)})"


def point_algebra(field: Field) -> FiniteAlgebra:
    """The point object: k[t]/(t)."""
    return FiniteAlgebra(field, Poly.t(field))
