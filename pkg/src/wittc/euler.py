"""Quadratic spaces and transfers built from a monic polynomial.

For monic f of degree n the difference quotient (f(x) - f(y))/(x - y)
expands as sum b_ij x^i y^j with b_ij = coeff(f, i+j+1), an invertible
Hankel matrix.  That matrix presents the duality isomorphism from the
dual of k[t]/(f) onto k[t]/(f) in the monomial bases, so the Gram matrix
of the induced symmetric form on k[t]/(f) is its *inverse*.  For
separable f this Gram coincides entrywise with the scaled trace form
<a, b> = tr(a*b/f'), which scaled_trace_form computes independently via
multiplication-operator traces; for non-separable f (powers e^n in
particular) the Hankel-inverse Gram is still defined and nondegenerate,
which is what the nilpotent-space lemmas operate on.

Requiring f monic keeps the whole zero locus at finite distance; a
non-monic input is rejected rather than compactified.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra
from .corresp import Correspondence
from .errors import WittcError
from .linalg import is_nonsingular, mat_inverse, mat_mul, mat_scale, mat_transpose
from .poly import Poly, poly_ext_gcd, poly_gcd
from .quadform import QuadSpace


def bezout_matrix(f: Poly):
    """Coefficient matrix of (f(x) - f(y))/(x - y): b_ij = coeff(f, i+j+1)."""
    if f.degree < 1 or not f.is_monic():
        raise WittcError("bezout matrix requires a monic polynomial of degree >= 1")
    n = f.degree
    return tuple(
        tuple(f.coeff(i + j + 1) for j in range(n)) for i in range(n)
    )


def bezoutian_form(f: Poly, unit=1) -> QuadSpace:
    """The symmetric form on k[t]/(f) induced by the difference quotient,
    rescaled by a nonzero unit (the freedom of the trivialization)."""
    F = f.field
    unit = F.coerce(unit)
    if F.is_zero(unit):
        raise WittcError("the twist unit must be nonzero")
    B = bezout_matrix(f)
    gram = mat_inverse(F, B)
    if gram is None:  # cannot happen: B is anti-triangular with unit antidiagonal
        raise WittcError("bezout matrix unexpectedly singular")
    return QuadSpace(F, mat_scale(F, unit, gram))


def scaled_trace_form(f: Poly, unit=1) -> QuadSpace:
    """Gram of <a, b> = tr(a*b*u/f') on the monomial basis of k[t]/(f).

    Computed via traces of multiplication operators; independent of
    bezoutian_form, and defined only for separable f.
    """
    F = f.field
    unit = F.coerce(unit)
    if F.is_zero(unit):
        raise WittcError("the twist unit must be nonzero")
    if f.degree < 1 or not f.is_monic():
        raise WittcError("scaled trace form requires a monic polynomial")
    df = f.derivative()
    if poly_gcd(f, df).degree != 0:
        raise WittcError("polynomial is not separable: f' is not invertible mod f")
    A = FiniteAlgebra(F, f)
    w = A.scalar_mul(unit, A.inv(A.from_poly(df)))
    n = f.degree
    traces = []
    z = w
    for _ in range(2 * n - 1):
        traces.append(A.trace(z))
        z = A.mul_by_t(z)
    return QuadSpace(F, [[traces[i + j] for j in range(n)] for i in range(n)])


def plain_trace_form(f: Poly) -> QuadSpace:
    """Gram of the unscaled pairing <a, b> = tr(a*b) on k[t]/(f).

    Surfaced for comparison only: it is generally *not* the form of the
    transfer construction, and its Witt class can differ from the
    bezoutian class (already for cubic fields).
    """
    F = f.field
    if f.degree < 1 or not f.is_monic():
        raise WittcError("plain trace form requires a monic polynomial")
    A = FiniteAlgebra(F, f)
    n = f.degree
    traces = []
    z = A.one
    for _ in range(2 * n - 1):
        traces.append(A.trace(z))
        z = A.mul_by_t(z)
    return QuadSpace(F, [[traces[i + j] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class SplitResult:
    """Orthogonal splitting along a coprime factorization, with certificate.

    basis_change C satisfies C^t G C = diag(first.gram, second.gram) exactly;
    its columns are the idempotent-multiplied monomials of both factors.
    """

    first: QuadSpace
    second: QuadSpace
    basis_change: tuple
    idempotent: Poly


def split_by_factors(s: QuadSpace, f1: Poly, f2: Poly) -> SplitResult:
    """Split a form on k[t]/(f1*f2) along the coprime factors f1, f2."""
    F = s.field
    if f1.field != F or f2.field != F:
        raise WittcError("factors over a different field")
    for fi in (f1, f2):
        if fi.is_zero() or not fi.is_monic():
            raise WittcError("factors must be monic")
    f = f1 * f2
    if f.degree != s.rank:
        raise WittcError("rank mismatch: the form does not live on k[t]/(f1*f2)")
    g, _, v = poly_ext_gcd(f1, f2)
    if g.degree != 0:
        raise WittcError("factors are not coprime")
    e1 = (v * f2) % f if f.degree else Poly.one(F)
    d1, d2 = f1.degree, f2.degree
    n = f.degree

    def coords(p: Poly):
        return [p.coeff(k) for k in range(n)]

    cols = []
    tpow = Poly.one(F)
    e2 = Poly.one(F) - e1
    for i in range(d1):
        cols.append(coords((e1 * tpow) % f))
        tpow = tpow * Poly.t(F)
    tpow = Poly.one(F)
    for i in range(d2):
        cols.append(coords((e2 * tpow) % f))
        tpow = tpow * Poly.t(F)
    C = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    if not is_nonsingular(F, C):
        raise WittcError("idempotent basis is degenerate; invalid input form")
    big = mat_mul(F, mat_transpose(C), mat_mul(F, s.gram, C))
    for i in range(d1):
        for j in range(d1, n):
            if not F.is_zero(big[i][j]):
                raise WittcError(
                    "factor pieces are not orthogonal; form is not balanced "
                    "on k[t]/(f1*f2)"
                )
    first = QuadSpace(F, [row[:d1] for row in big[:d1]])
    second = QuadSpace(F, [row[d1:] for row in big[d1:]])
    return SplitResult(first=first, second=second, basis_change=C, idempotent=e1)


@dataclass(frozen=True)
class EulerDatum:
    """Input for the transfer construction: a monic polynomial, a unit
    rescaling the trivialization, and optionally a target algebra with the
    image of its generator in k[t]/(f)."""

    f: Poly
    unit: object = 1
    target: FiniteAlgebra | None = None
    g: Poly | None = None

    def validate(self) -> None:
        F = self.f.field
        if self.f.degree < 1 or not self.f.is_monic():
            raise WittcError("euler datum requires a monic f of degree >= 1")
        if F.is_zero(F.coerce(self.unit)):
            raise WittcError("the twist unit must be nonzero")
        if self.target is not None:
            if self.g is None:
                raise WittcError("a target needs the image g of its generator")
            if self.target.field != F or self.g.field != F:
                raise WittcError("target data over a different field")
            A = FiniteAlgebra(F, self.f)
            img = A.from_poly(self.g)
            if not A.is_zero(A.eval_poly(self.target.modulus, img)):
                raise WittcError(
                    "g does not satisfy the target modulus modulo f"
                )


def euler_correspondence(datum: EulerDatum) -> Correspondence:
    """The transfer from the point to the target algebra.

    Rank deg(f) over the point; the action is the multiplication-by-g
    matrix on the monomial basis of k[t]/(f) and the Gram is the
    bezoutian form, which is balanced against every multiplication
    operator.
    """
    datum.validate()
    if datum.target is None:
        raise WittcError("euler correspondence needs a target")
    from .algebra import point_algebra

    F = datum.f.field
    A = FiniteAlgebra(F, datum.f)
    img = A.from_poly(datum.g)
    n = datum.f.degree
    cols = [img]
    basis_elem = img
    # multiplication matrix of g: columns g * t^e
    for _ in range(n - 1):
        basis_elem = A.mul_by_t(basis_elem)
        cols.append(basis_elem)
    T = [[(cols[e][r],) for e in range(n)] for r in range(n)]
    gram = bezoutian_form(datum.f, datum.unit).gram
    pt = point_algebra(F)
    return Correspondence(pt, datum.target, T, [[(x,) for x in row] for row in gram])
