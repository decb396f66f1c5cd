"""Proof engines at desk scale: ideal orthogonals in nilpotent quotients,
lagrangian and sublagrangian reduction, square-unit twists, and the
homotopy-pencil check of Witt-class constancy along a monic family.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteAlgebra
from .errors import NonUnitError, WittcError
from .euler import bezoutian_form
from .fields import Field, Rationals, elem_is_square
from .linalg import kernel_basis, mat_mul, mat_transpose
from .poly import Poly
from .quadform import (
    QuadSpace,
    WittInvariants,
    is_witt_trivial,
    witt_equal,
    witt_invariants,
)


class NilpotentSpace:
    """A form on k[t]/(e^n), presented on the monomial basis.

    The Gram matrix must be symmetric, nondegenerate, and balanced against
    multiplication by t; the orthogonal of the ideal (e^i) is then the
    ideal (e^(n-i)), which drives both reductions below.
    """

    __slots__ = ("e", "n", "space", "_alg")

    def __init__(self, e: Poly, n: int, space: QuadSpace):
        if e.degree < 1 or not e.is_monic():
            raise WittcError("e must be monic of degree >= 1")
        if n < 1:
            raise WittcError("n must be positive")
        if space.field != e.field:
            raise WittcError("space over a different field")
        alg = FiniteAlgebra(e.field, e**n)
        if space.rank != alg.degree:
            raise WittcError("rank must equal n * deg(e)")
        space.validate()
        mt = alg.mult_matrix(alg.gen)
        F = e.field
        gt = mat_mul(F, space.gram, mt)
        tg = mat_mul(F, mat_transpose(mt), space.gram)
        if gt != tg:
            raise WittcError("gram is not balanced against multiplication by t")
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "_alg", alg)

    def __setattr__(self, name, value):
        raise AttributeError("NilpotentSpace is immutable")

    @classmethod
    def from_power(cls, e: Poly, n: int, unit=1) -> "NilpotentSpace":
        """The bezoutian space of e^n with a unit twist."""
        return cls(e, n, bezoutian_form(e**n, unit))

    def ideal_basis(self, i: int):
        """Coordinate vectors of e^i * t^j, j < (n-i)*deg(e); a basis of (e^i)."""
        if not 0 <= i <= self.n:
            raise WittcError("ideal exponent out of range")
        F = self.e.field
        rank = self.space.rank
        d = self.e.degree
        vecs = []
        p = self.e**i
        for _ in range((self.n - i) * d):
            vecs.append(tuple(p.coeff(k) for k in range(rank)))
            p = p * Poly.t(F)
        return tuple(vecs)


def ideal_orthogonal(s: NilpotentSpace, i: int):
    """Basis of the orthogonal complement of the ideal (e^i) inside the space.

    Computed by an exact kernel computation against the Gram pairing.  For a
    balanced form this equals the ideal (e^(n-i)); tests assert exactly that.
    """
    F = s.e.field
    gens = s.ideal_basis(i)
    if not gens:
        n = s.space.rank
        return tuple(
            tuple(F.one if a == b else F.zero for b in range(n)) for a in range(n)
        )
    constraints = mat_mul(F, gens, s.space.gram)
    return tuple(kernel_basis(F, constraints))


def lagrangian_split(s: NilpotentSpace):
    """For even n = 2l: the ideal (e^l) as a verified lagrangian.

    Returns the basis; raises if it fails to be totally isotropic of half
    rank, or if the Witt-triviality decision disagrees (either signals an
    invalid input space).
    """
    if s.n % 2:
        raise WittcError("lagrangian splitting needs even n")
    F = s.e.field
    basis = s.ideal_basis(s.n // 2)
    if len(basis) * 2 != s.space.rank:
        raise WittcError("candidate lagrangian does not have half rank")
    pairing = mat_mul(F, basis, mat_mul(F, s.space.gram, mat_transpose(basis)))
    if any(not F.is_zero(x) for row in pairing for x in row):
        raise WittcError("candidate lagrangian is not totally isotropic")
    if not is_witt_trivial(s.space):
        raise WittcError("space with a lagrangian is not decided Witt-trivial")
    return basis


def sublagrangian_reduce(s: NilpotentSpace) -> QuadSpace:
    """For odd n = 2l+1: the induced form on (e^l)/(e^(l+1)).

    Presented on the basis e^l * t^j, j < deg(e); Witt-equal to the input
    space (tests assert the class equality).
    """
    if s.n % 2 == 0:
        raise WittcError("sublagrangian reduction needs odd n")
    F = s.e.field
    l = s.n // 2
    d = s.e.degree
    vecs = s.ideal_basis(l)[:d]
    gram = mat_mul(F, vecs, mat_mul(F, s.space.gram, mat_transpose(vecs)))
    out = QuadSpace(F, gram)
    out.validate()
    return out


@dataclass(frozen=True)
class SqmetResult:
    """Outcome of reducing the e^n space: metabolic, or a reduced form.

    When the reduced form has rank one its entry's square class is reported
    as lam; it is never asserted against any predicted value.
    """

    metabolic: bool
    reduced: QuadSpace | None
    lam: int | None


def sqmet_class(e: Poly, n: int, unit=1) -> SqmetResult:
    """Classify the bezoutian space of e^n: metabolic for even n, reduced
    to a form on k[t]/(e) for odd n."""
    s = NilpotentSpace.from_power(e, n, unit)
    if n % 2 == 0:
        lagrangian_split(s)
        return SqmetResult(metabolic=True, reduced=None, lam=None)
    reduced = sublagrangian_reduce(s)
    lam = None
    if reduced.rank == 1:
        lam = e.field.square_class(reduced.gram[0][0])
    return SqmetResult(metabolic=False, reduced=reduced, lam=lam)


def square_unit_is_identity(E: FiniteAlgebra, q):
    """Decide whether the twist by q is isometric to the identity.

    Implemented for degree-one algebras (fields) only: q is a square w^2
    exactly when multiplication by w is the isometry.  Returns (True, w)
    or (False, None).
    """
    if E.degree != 1:
        raise WittcError(
            "square-unit decision is implemented over fields only "
            "(degree-one algebras)"
        )
    q = E.from_coeffs(q)
    if not E.is_unit(q):
        raise NonUnitError("q must be a unit")
    ok, w = elem_is_square(E.field, q[0])
    if not ok:
        return False, None
    return True, w


class HomotopyPencil:
    """The monic family (1-lam)*f0 + lam*f1 of constant degree."""

    __slots__ = ("f0", "f1", "unit")

    def __init__(self, f0: Poly, f1: Poly, unit=1):
        if f0.field != f1.field:
            raise WittcError("pencil endpoints over different fields")
        F = f0.field
        if f0.degree < 1 or not f0.is_monic() or not f1.is_monic():
            raise WittcError("pencil endpoints must be monic of degree >= 1")
        if f0.degree != f1.degree:
            raise WittcError("pencil endpoints must have the same degree")
        unit = F.coerce(unit)
        if F.is_zero(unit):
            raise WittcError("the twist unit must be nonzero")
        object.__setattr__(self, "f0", f0)
        object.__setattr__(self, "f1", f1)
        object.__setattr__(self, "unit", unit)

    def __setattr__(self, name, value):
        raise AttributeError("HomotopyPencil is immutable")

    @property
    def field(self) -> Field:
        return self.f0.field

    def specialize(self, lam) -> Poly:
        F = self.field
        lam = F.coerce(lam)
        return self.f0.scale(F.sub(F.one, lam)) + self.f1.scale(lam)


def default_samples(field: Field):
    """Interior sample points: a handful over Q, everything over small GF(p)."""
    if isinstance(field, Rationals):
        from fractions import Fraction

        return (Fraction(2), Fraction(-1), Fraction(1, 2))
    p = field.p
    if p <= 13:
        return tuple(range(p))
    return (2, p - 1, (p + 1) // 2)


@dataclass(frozen=True)
class PencilReport:
    """Specializations of the pencil and the verdict of class constancy."""

    lambdas: tuple
    witt_equal: bool
    invariants: WittInvariants | None
    first_mismatch: object | None


def pencil_check(pencil: HomotopyPencil, samples=None) -> PencilReport:
    """Specialize the pencil at 0, 1 and the samples and compare Witt classes.

    Every specialization stays monic of full degree, so no degenerate form
    can arise; the report carries the common invariants when all classes
    agree, and the first offending sample otherwise.
    """
    F = pencil.field
    if samples is None:
        samples = default_samples(F)
    lambdas = [F.zero, F.one]
    for s in samples:
        s = F.coerce(s)
        if s not in lambdas:
            lambdas.append(s)
    base = bezoutian_form(pencil.specialize(lambdas[0]), pencil.unit)
    mismatch = None
    for lam in lambdas[1:]:
        form = bezoutian_form(pencil.specialize(lam), pencil.unit)
        if not witt_equal(base, form):
            mismatch = lam
            break
    if mismatch is not None:
        return PencilReport(
            lambdas=tuple(lambdas),
            witt_equal=False,
            invariants=None,
            first_mismatch=mismatch,
        )
    return PencilReport(
        lambdas=tuple(lambdas),
        witt_equal=True,
        invariants=witt_invariants(base),
        first_mismatch=None,
    )
