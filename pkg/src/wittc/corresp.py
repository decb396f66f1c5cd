"""Zero-dimensional correspondences: quadratic spaces with a two-sided
module structure.

A correspondence from X to Y is a free module of finite rank over the
source algebra E_X = k[t]/(f_X), carrying

  * an action matrix T (the image of the target generator) with
    f_Y(T) = 0, making the module an E_Y-module, and
  * a symmetric Gram matrix G over E_X whose determinant is a unit and
    which is balanced against the action: G*T = T^t*G.

Composition tensors the modules over the middle algebra.  With the
basis of a tensor product ordered outer-factor-major, composition is
given blockwise: the (j, l) Gram block of g after f is
G_f * H_jl(T_f), and the (l, j) action block is S_lj(T_f), where H and S
are the Gram and action of g, and a polynomial over the middle algebra
is evaluated at the matrix T_f.  Under this ordering the unit laws and
the reassociation of triple composites are literal matrix identities,
and duality (inverse Gram, transposed action) distributes over
composition entrywise.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra, point_algebra
from .errors import CompositionError, NonUnitError, ValidationError, WittcError
from .linalg import is_nonsingular, mat_inverse
from .quadform import QuadSpace


class Correspondence:
    """A free quadratic module presenting a morphism between two algebras."""

    __slots__ = ("source", "target", "action", "gram")

    def __init__(self, source: FiniteAlgebra, target: FiniteAlgebra, action, gram):
        if source.field != target.field:
            raise WittcError("source and target algebras over different fields")
        act = tuple(tuple(source.from_coeffs(x) for x in row) for row in action)
        grm = tuple(tuple(source.from_coeffs(x) for x in row) for row in gram)
        r = len(grm)
        if len(act) != r or any(len(row) != r for row in act) or any(
            len(row) != r for row in grm
        ):
            raise WittcError("action and gram must be square of equal rank")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "action", act)
        object.__setattr__(self, "gram", grm)

    def __setattr__(self, name, value):
        raise AttributeError("Correspondence is immutable")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __eq__(self, other):
        return (
            isinstance(other, Correspondence)
            and other.source == self.source
            and other.target == self.target
            and other.action == self.action
            and other.gram == self.gram
        )

    def __repr__(self):
        return (
            f"Correspondence({self.source!r} -> {self.target!r}, rank={self.rank})"
        )


# -- matrix helpers over the source algebra -----------------------------------


def alg_mat_mul(E: FiniteAlgebra, A, B):
    n, inner = len(A), len(B)
    m = len(B[0]) if inner else 0
    Bt = list(zip(*B)) if inner else []
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = E.zero
            col = Bt[j]
            for k in range(inner):
                a = A[i][k]
                if not E.is_zero(a):
                    acc = E.add(acc, E.mul(a, col[k]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def alg_mat_transpose(A):
    return tuple(zip(*A)) if A else ()


def alg_identity(E: FiniteAlgebra, n: int):
    return tuple(
        tuple(E.one if i == j else E.zero for j in range(n)) for i in range(n)
    )


def action_powers(E: FiniteAlgebra, T, count: int):
    """[I, T, T^2, ...] with ``count`` entries."""
    powers = [alg_identity(E, len(T))]
    for _ in range(count - 1):
        powers.append(alg_mat_mul(E, powers[-1], T))
    return powers


def eval_at_action(E: FiniteAlgebra, powers, coeffs):
    """Evaluate sum(coeffs[e] * T^e) from precomputed powers.

    ``coeffs`` are base-field scalars (the coefficient vector of an element
    of the middle algebra, or of a field polynomial).
    """
    F = E.field
    n = len(powers[0])
    out = [[E.zero] * n for _ in range(n)]
    for e, c in enumerate(coeffs):
        c = F.coerce(c)
        if F.is_zero(c):
            continue
        Pe = powers[e]
        for i in range(n):
            row = out[i]
            prow = Pe[i]
            for j in range(n):
                row[j] = E.add(row[j], E.scalar_mul(c, prow[j]))
    return tuple(tuple(row) for row in out)


def _klinear_matrix(E: FiniteAlgebra, M):
    """The matrix of M: E^r -> E^r as a base-field linear map."""
    d = E.degree
    r = len(M)
    K = [[E.field.zero] * (r * d) for _ in range(r * d)]
    for i in range(r):
        for j in range(r):
            mm = E.mult_matrix(M[i][j])
            for a in range(d):
                Krow = K[i * d + a]
                mrow = mm[a]
                for b in range(d):
                    Krow[j * d + b] = mrow[b]
    return K


def alg_mat_is_invertible(E: FiniteAlgebra, M) -> bool:
    """Invertibility over E, decided on the underlying base-field map.

    Equivalent to det(M) being a unit of E: an E-linear endomorphism of a
    free module is invertible iff it is bijective k-linearly, and its
    inverse map is then automatically E-linear.
    """
    return is_nonsingular(E.field, _klinear_matrix(E, M))


def alg_mat_inverse(E: FiniteAlgebra, M):
    """Inverse of a matrix over E, or None; computed k-linearly.

    The inverse of the base-field matrix is E-linear, so its E-entries can
    be read off its action on the module basis vectors.
    """
    d = E.degree
    r = len(M)
    Kinv = mat_inverse(E.field, _klinear_matrix(E, M))
    if Kinv is None:
        return None
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            row.append(tuple(Kinv[i * d + a][j * d] for a in range(d)))
        out.append(tuple(row))
    return tuple(out)


# -- the operations ------------------------------------------------------------


def validate(c: Correspondence) -> list:
    """Check the structural invariants; returns a list of violations."""
    E = c.source
    r = c.rank
    violations = []
    if r:
        dY = c.target.modulus.degree
        powers = action_powers(E, c.action, dY + 1)
        fY_at_T = eval_at_action(E, powers, c.target.modulus.coeffs)
        if any(not E.is_zero(x) for row in fY_at_T for x in row):
            violations.append("target modulus does not annihilate the action")
        sym = all(
            c.gram[i][j] == c.gram[j][i] for i in range(r) for j in range(i + 1, r)
        )
        if not sym:
            violations.append("gram matrix is not symmetric")
        gt = alg_mat_mul(E, c.gram, c.action)
        tg = alg_mat_mul(E, alg_mat_transpose(c.action), c.gram)
        if gt != tg:
            violations.append("gram is not balanced against the action (G*T != T^t*G)")
        if not alg_mat_is_invertible(E, c.gram):
            violations.append("gram determinant is not a unit of the source algebra")
    return violations


def ensure_valid(c: Correspondence) -> Correspondence:
    violations = validate(c)
    if violations:
        raise ValidationError(violations)
    return c


def identity(E: FiniteAlgebra) -> Correspondence:
    """The diagonal module with the unit form: rank 1, action t, Gram (1)."""
    return Correspondence(E, E, ((E.gen,),), ((E.one,),))


def graph(source: FiniteAlgebra, target: FiniteAlgebra, g) -> Correspondence:
    """The correspondence of the algebra map sending the target generator to g."""
    g = source.from_coeffs(g)
    if not source.is_zero(source.eval_poly(target.modulus, g)):
        raise WittcError(
            "no algebra map: the image does not satisfy the target modulus"
        )
    return Correspondence(source, target, ((g,),), ((source.one,),))


def point_projection(E: FiniteAlgebra) -> Correspondence:
    """The correspondence of the structure map to the point."""
    return graph(E, point_algebra(E.field), E.zero)


def twist(E: FiniteAlgebra, q) -> Correspondence:
    """Identity correspondence with the unit form rescaled by a unit q."""
    q = E.from_coeffs(q)
    if not E.is_unit(q):
        raise NonUnitError("twist requires a unit")
    return Correspondence(E, E, ((E.gen,),), ((q,),))


def compose(g: Correspondence, f: Correspondence) -> Correspondence:
    """The composite g after f, by the blockwise tensor formula."""
    if f.target != g.source:
        raise CompositionError(
            "cannot compose: target of the first factor differs from the "
            "source of the second"
        )
    E = f.source
    r, s = f.rank, g.rank
    dY = f.target.degree
    powers = action_powers(E, f.action, dY)
    n = r * s

    def h_at_T(elem):
        return eval_at_action(E, powers, elem)

    gram = [[E.zero] * n for _ in range(n)]
    action = [[E.zero] * n for _ in range(n)]
    for j in range(s):
        for l in range(s):
            Hblock = alg_mat_mul(E, f.gram, h_at_T(g.gram[j][l]))
            Sblock = h_at_T(g.action[j][l])
            for i in range(r):
                for k in range(r):
                    gram[j * r + i][l * r + k] = Hblock[i][k]
                    action[j * r + i][l * r + k] = Sblock[i][k]
    out = Correspondence(E, g.target, action, gram)
    return ensure_valid(out)


def dual(c: Correspondence) -> Correspondence:
    """The dual space: inverse Gram on the dual basis, transposed action."""
    E = c.source
    ginv = alg_mat_inverse(E, c.gram)
    if ginv is None:
        raise NonUnitError("gram determinant is not a unit: no dual form")
    return Correspondence(E, c.target, alg_mat_transpose(c.action), ginv)


def dual_compose_witness(g: Correspondence, f: Correspondence):
    """Explicit compatibility isomorphism between dual(g o f) and dual(g) o dual(f).

    In the outer-major tensor bases the natural isomorphism is the identity
    matrix; it is returned after verifying entrywise that it intertwines the
    Grams and the actions of the two sides.
    """
    left = dual(compose(g, f))
    right = compose(dual(g), dual(f))
    E = left.source
    W = alg_identity(E, left.rank)
    wt_gw = alg_mat_mul(E, alg_mat_transpose(W), alg_mat_mul(E, left.gram, W))
    if wt_gw != right.gram or alg_mat_mul(E, left.action, W) != alg_mat_mul(
        E, W, right.action
    ):
        raise WittcError("duality compatibility witness failed to verify")
    return W


def underlying_form(c: Correspondence) -> QuadSpace:
    """Forget the target action of a correspondence out of the point."""
    if not c.source.is_point:
        raise WittcError("underlying form requires the point as source")
    return QuadSpace(c.source.field, [[x[0] for x in row] for row in c.gram])


def twist_square_isometry(f: Correspondence, w):
    """Isometry witness for absorbing a square-unit twist of the target.

    For a unit w of the target algebra, returns V = w(T_f), which satisfies
    V^t G_f V = Gram(compose(twist(target, w^2), f)) and commutes with the
    action; its inverse is w^{-1}(T_f).  Verified before returning.
    """
    EY = f.target
    E = f.source
    w = EY.from_coeffs(w)
    if not EY.is_unit(w):
        raise NonUnitError("twist witness requires a unit")
    q = EY.mul(w, w)
    comp = compose(twist(EY, q), f)
    powers = action_powers(E, f.action, EY.degree)
    V = eval_at_action(E, powers, w)
    Vinv = eval_at_action(E, powers, EY.inv(w))
    if alg_mat_mul(E, V, Vinv) != alg_identity(E, f.rank):
        raise WittcError("twist witness is not invertible")
    vt_gv = alg_mat_mul(E, alg_mat_transpose(V), alg_mat_mul(E, f.gram, V))
    if vt_gv != comp.gram:
        raise WittcError("twist witness does not carry the form onto the composite")
    if alg_mat_mul(E, f.action, V) != alg_mat_mul(E, V, comp.action):
        raise WittcError("twist witness does not intertwine the actions")
    return V
