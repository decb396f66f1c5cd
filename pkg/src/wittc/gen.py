"""Seeded random generators for property tests and the self-check suite.

Everything is driven by a caller-supplied random.Random, so identical
seeds reproduce identical objects.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import FiniteAlgebra
from .corresp import (
    Correspondence,
    alg_identity,
    alg_mat_mul,
    alg_mat_transpose,
)
from .euler import bezoutian_form
from .fields import Field, PrimeField, Rationals
from .linalg import is_nonsingular, mat_mul, mat_transpose
from .poly import Poly, poly_gcd
from .quadform import QuadSpace


def random_monic(field: Field, rng, deg: int, bound: int = 5) -> Poly:
    coeffs = [field.random_elem(rng, bound) for _ in range(deg)]
    coeffs.append(field.one)
    return Poly(field, coeffs)


def random_separable_monic(field: Field, rng, deg: int, bound: int = 5) -> Poly:
    while True:
        f = random_monic(field, rng, deg, bound)
        df = f.derivative()
        if not df.is_zero() and poly_gcd(f, df).degree == 0:
            return f


def random_nonzero_rational(rng, bound: int = 200) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_symmetric_nonsingular(field: Field, rng, n: int, bound: int = 4):
    while True:
        m = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = field.random_elem(rng, bound)
                m[i][j] = v
                m[j][i] = v
        if is_nonsingular(field, m):
            return QuadSpace(field, m)


def random_unimodular(field: Field, rng, n: int):
    """Product of elementary column operations; determinant +-1."""
    P = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for _ in range(2 * n + 2):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = field.coerce(rng.choice([-1, 1, 2]))
        for r in range(n):
            P[r][i] = field.add(P[r][i], field.mul(c, P[r][j]))
    return tuple(tuple(row) for row in P)


def split_modulus(field: Field, rng, deg: int) -> Poly:
    """Monic polynomial with deg distinct roots in the base field."""
    roots = set()
    pool_bound = 8 if isinstance(field, Rationals) else field.p
    if not isinstance(field, Rationals) and deg > field.p:
        raise ValueError("not enough distinct roots available")
    while len(roots) < deg:
        roots.add(field.random_elem(rng, pool_bound))
    f = Poly.one(field)
    for r in roots:
        f = f * Poly(field, [field.neg(r), field.one])
    return f


def irreducible_monic(field: PrimeField, rng, deg: int) -> Poly:
    """Random irreducible monic over GF(p), by trial division."""
    from itertools import product

    p = field.p
    low = []
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            low.append(Poly(field, list(tail) + [1]))
    while True:
        f = random_monic(field, rng, deg)
        if any((f % g).is_zero() for g in low):
            continue
        return f


def random_unimodular_alg(E: FiniteAlgebra, rng, n: int):
    """Unimodular matrix over the algebra and its inverse, from elementaries."""
    P = [list(row) for row in alg_identity(E, n)]
    Pinv = [list(row) for row in alg_identity(E, n)]
    if n <= 1:
        return alg_identity(E, n), alg_identity(E, n)
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        coeffs = [rng.choice([-1, 0, 1]) for _ in range(E.degree)]
        c = E.from_coeffs(coeffs)
        if E.is_zero(c):
            continue
        # column op on P: col_i += c * col_j;  row op on Pinv: row_j -= c * row_i
        for r in range(n):
            P[r][i] = E.add(P[r][i], E.mul(c, P[r][j]))
        for s in range(n):
            Pinv[j][s] = E.sub(Pinv[j][s], E.mul(c, Pinv[i][s]))
    return tuple(tuple(r) for r in P), tuple(tuple(r) for r in Pinv)


def _companion_piece(source: FiniteAlgebra, target: FiniteAlgebra):
    """The base-changed transfer block: companion action, bezoutian Gram."""
    fY = target.modulus
    n = fY.degree
    comp = [[source.field.zero] * n for _ in range(n)]
    for e in range(n - 1):
        comp[e + 1][e] = source.field.one
    for r in range(n):
        comp[r][n - 1] = source.field.neg(fY.coeff(r))
    gram = bezoutian_form(fY, 1).gram
    T = [[source.scalar(comp[r][e]) for e in range(n)] for r in range(n)]
    G = [[source.scalar(x) for x in row] for row in gram]
    return T, G


def _roots_in_field(f: Poly, rng, tries: int = 40):
    """Roots of f among small field elements (used for graph pieces)."""
    F = f.field
    found = []
    if isinstance(F, Rationals):
        candidates = [Fraction(k) for k in range(-8, 9)]
    else:
        candidates = list(range(F.p))
    for c in candidates:
        if F.is_zero(f(c)):
            found.append(F.coerce(c))
    return found


def random_correspondence(
    rng, source: FiniteAlgebra, target: FiniteAlgebra, max_rank: int = 3
) -> Correspondence:
    """A valid correspondence of rank <= max_rank, densified by a random
    unimodular change of basis and unit twists."""
    E = source
    fY = target.modulus
    dY = fY.degree
    roots = _roots_in_field(fY, rng)
    pieces = []
    budget = rng.randint(1, max_rank)
    while budget > 0:
        options = []
        if dY <= budget:
            options.append("companion")
        if roots and budget >= 1:
            options.append("graph")
        if not options:
            break
        kind = rng.choice(options)
        if kind == "companion":
            pieces.append(_companion_piece(E, target))
            budget -= dY
        else:
            c = rng.choice(roots)
            pieces.append((((E.scalar(c),),), ((E.one,),)))
            budget -= 1
    if not pieces:
        pieces.append(_companion_piece(E, target))
    # orthogonal sum of the pieces, each twisted by a random unit
    n = sum(len(T) for T, _ in pieces)
    T = [[E.zero] * n for _ in range(n)]
    G = [[E.zero] * n for _ in range(n)]
    off = 0
    for Tp, Gp in pieces:
        u = E.random_unit(rng)
        m = len(Tp)
        for a in range(m):
            for b in range(m):
                T[off + a][off + b] = Tp[a][b]
                G[off + a][off + b] = E.mul(u, Gp[a][b])
        off += m
    P, Pinv = random_unimodular_alg(E, rng, n)
    G = alg_mat_mul(E, alg_mat_transpose(P), alg_mat_mul(E, G, P))
    T = alg_mat_mul(E, Pinv, alg_mat_mul(E, T, P))
    return Correspondence(source, target, T, G)


def random_algebra(field: Field, rng, max_deg: int = 3, split_bias: float = 0.6):
    deg = rng.randint(1, max_deg)
    if rng.random() < split_bias:
        try:
            return FiniteAlgebra(field, split_modulus(field, rng, deg))
        except ValueError:
            pass
    return FiniteAlgebra(field, random_monic(field, rng, deg, bound=3))


def random_chain(field: Field, rng, length: int, max_deg: int = 3, max_rank: int = 3):
    """Objects E_0 .. E_length and correspondences E_i -> E_(i+1)."""
    algebras = [random_algebra(field, rng, max_deg) for _ in range(length + 1)]
    maps = [
        random_correspondence(rng, algebras[i], algebras[i + 1], max_rank)
        for i in range(length)
    ]
    return algebras, maps


def random_quadspace_congruent(field: Field, rng, s: QuadSpace) -> QuadSpace:
    P = random_unimodular(field, rng, s.rank)
    return QuadSpace(field, mat_mul(field, mat_transpose(P), mat_mul(field, s.gram, P)))
