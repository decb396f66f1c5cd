"""Exact univariate polynomials over a base field.

Coefficients are stored in ascending degree order and the top coefficient
is nonzero; the zero polynomial is the empty tuple, with degree -1.  All
operations are pure and return new Poly values.
"""

from __future__ import annotations

import re

from .errors import FieldMismatchError, WittcError
from .fields import Field


class Poly:
    """Immutable univariate polynomial in t over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        vals = [field.coerce(c) for c in coeffs]
        while vals and field.is_zero(vals[-1]):
            vals.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def t(cls, field: Field) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: Field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, k: int, c=1) -> "Poly":
        return cls(field, (field.zero,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def leading(self):
        if not self.coeffs:
            raise WittcError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        """Coefficient of t^k (zero beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self.coeff(k), other.coeff(k)) for k in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.sub(self.coeff(k), other.coeff(k)) for k in range(n)])

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c) -> "Poly":
        F = self.field
        c = F.coerce(c)
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = F.inv(other.leading())
        quo = [F.zero] * max(len(rem) - db, 0)
        for k in range(len(rem) - db - 1, -1, -1):
            c = F.mul(rem[k + db], lead_inv)
            if F.is_zero(c):
                continue
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = F.sub(rem[k + j], F.mul(c, b))
        return Poly(F, quo), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise WittcError("negative polynomial power")
        out = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Evaluate at a field element by Horner's rule."""
        F = self.field
        x = F.coerce(x)
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for k in range(1, len(self.coeffs)):
            kf = F.coerce(k)
            out.append(F.mul(kf, self.coeffs[k]))
        return Poly(F, out)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise WittcError("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.leading()))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field!r}, {poly_to_str(self)!r})"


def poly_divmod(a: Poly, b: Poly):
    """Quotient and remainder with deg(remainder) < deg(b); exact."""
    return divmod(a, b)


def poly_ext_gcd(a: Poly, b: Poly):
    """Extended Euclid: returns (g, u, v) with g monic, u*a + v*b = g."""
    if a.is_zero() and b.is_zero():
        raise WittcError("gcd(0, 0) is undefined")
    a._check(b)
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = F.inv(r0.leading())
    return r0.scale(lead), s0.scale(lead), t0.scale(lead)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    return poly_ext_gcd(a, b)[0]


def poly_derivative(f: Poly) -> Poly:
    """Formal derivative (coefficient k picks up a factor of k mod char)."""
    return f.derivative()


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?:t(?:\^(?P<exp>\d+))?)?"
)


def parse_poly(field: Field, text: str) -> Poly:
    """Parse the restricted human syntax, e.g. "t^3-t" or "2t^2+3".

    Integer coefficients only, single variable t.  Intended for CLI
    ergonomics; structured input should use the JSON encoding.
    """
    s = text.replace(" ", "")
    if not s:
        raise WittcError("empty polynomial")
    pos = 0
    terms = {}
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise WittcError(f"cannot parse polynomial at ...{s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = m.group("coef")
        has_t = "t" in m.group(0)
        if coef is None and not has_t:
            raise WittcError(f"cannot parse polynomial at ...{s[pos:]!r}")
        c = sign * (int(coef) if coef is not None else 1)
        if has_t:
            e = int(m.group("exp")) if m.group("exp") else 1
        else:
            e = 0
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    deg = max(terms)
    return Poly(field, [terms.get(k, 0) for k in range(deg + 1)])


def poly_to_str(f: Poly) -> str:
    """Human-readable form matching the syntax accepted by parse_poly."""
    if f.is_zero():
        return "0"
    F = f.field
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if F.is_zero(c):
            continue
        cs = F.elem_to_str(c)
        neg = cs.startswith("-")
        mag = cs[1:] if neg else cs
        if k == 0:
            term = mag
        else:
            var = "t" if k == 1 else f"t^{k}"
            term = var if mag == "1" else f"{mag}{var}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("-" if neg else "+") + term)
    return "".join(parts)
