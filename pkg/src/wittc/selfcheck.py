"""Invariant suites behind ``wittc selfcheck``.

Each suite runs randomized checks of one module's contract and returns
(name, ok, detail).  Counts scale with the ``iters`` knob; everything is
deterministic for a fixed seed.
"""

from __future__ import annotations

import random

from . import gen
from .corresp import (
    compose,
    dual,
    dual_compose_witness,
    identity,
    twist_square_isometry,
    validate,
)
from .euler import bezoutian_form, scaled_trace_form, split_by_factors
from .fields import PrimeField, Rationals, elem_is_square
from .jsonio import (
    correspondence_from_json,
    correspondence_to_json,
    quadspace_from_json,
    quadspace_to_json,
)
from .linalg import mat_mul, mat_transpose
from .poly import Poly, poly_ext_gcd
from .quadform import (
    INF_PLACE,
    QuadSpace,
    diagonalize,
    hilbert_symbol,
    is_witt_trivial,
    orthogonal_sum,
    witt_equal,
    witt_invariants,
)
from .rigidity import HomotopyPencil, NilpotentSpace, pencil_check, sqmet_class

FIELDS = (Rationals(), PrimeField(5), PrimeField(7))


def _fail(detail):
    return False, detail


def check_poly_arith(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        a = gen.random_monic(F, rng, rng.randint(0, 5))
        b = gen.random_monic(F, rng, rng.randint(0, 4))
        q, r = divmod(a, b)
        if b * q + r != a or r.degree >= b.degree:
            return _fail(f"divmod reconstruction failed for {a!r}, {b!r}")
        g, u, v = poly_ext_gcd(a, b)
        if u * a + v * b != g or not (a % g).is_zero() or not (b % g).is_zero():
            return _fail(f"ext gcd identity failed for {a!r}, {b!r}")
        c = gen.random_monic(F, rng, rng.randint(0, 4))
        if (a * c).derivative() != a.derivative() * c + a * c.derivative():
            return _fail("Leibniz rule failed")
        if (a + c).derivative() != a.derivative() + c.derivative():
            return _fail("derivative additivity failed")
    return True, f"{iters} cases"


def check_squares(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        a = F.random_unit(rng)
        sq = F.mul(a, a)
        ok, w = elem_is_square(F, sq)
        if not ok or F.mul(w, w) != sq:
            return _fail(f"square witness failed for {sq!r}")
    return True, f"{iters} cases"


def check_diagonalize(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        s = gen.random_symmetric_nonsingular(F, rng, rng.randint(1, 5))
        d = diagonalize(s)
        P = d.basis_change
        target = mat_mul(F, mat_transpose(P), mat_mul(F, s.gram, P))
        expect = [
            [d.entries[i] if i == j else F.zero for j in range(s.rank)]
            for i in range(s.rank)
        ]
        if [list(r) for r in target] != expect:
            return _fail("P^t G P is not the diagonal of the entries")
        if any(F.is_zero(e) for e in d.entries):
            return _fail("zero diagonal entry")
    return True, f"{iters} cases"


def check_hilbert(rng, iters):
    for _ in range(iters):
        a = gen.random_nonzero_rational(rng, 60)
        b = gen.random_nonzero_rational(rng, 60)
        c = gen.random_nonzero_rational(rng, 60)
        places = {2, INF_PLACE}
        for x in (a, b, c):
            from sympy import factorint

            places |= set(factorint(abs(x.numerator * x.denominator)))
        for v in places:
            if hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v):
                return _fail(f"symmetry failed at {v}")
            lhs = hilbert_symbol(a * c, b, v)
            rhs = hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v)
            if lhs != rhs:
                return _fail(f"multiplicativity failed at {v}")
            if hilbert_symbol(a * c * c, b, v) != hilbert_symbol(a, b, v):
                return _fail(f"square-class dependence failed at {v}")
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        if prod != 1:
            return _fail(f"product formula failed for {a}, {b}")
    return True, f"{iters} cases"


def check_witt(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        s = gen.random_symmetric_nonsingular(F, rng, rng.randint(1, 4))
        t = gen.random_quadspace_congruent(F, rng, s)
        if witt_invariants(s) != witt_invariants(t):
            return _fail("invariants not congruence-invariant")
        if not is_witt_trivial(orthogonal_sum(s, s.neg())):
            return _fail("s + (-s) not split")
        h = QuadSpace(F, [[F.one, F.zero], [F.zero, F.neg(F.one)]])
        if not witt_equal(s, orthogonal_sum(s, h)):
            return _fail("adding a hyperbolic plane changed the class")
    return True, f"{iters} cases"


def check_oracle(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        f = gen.random_separable_monic(F, rng, rng.randint(1, 6))
        u = F.random_unit(rng)
        if bezoutian_form(f, u).gram != scaled_trace_form(f, u).gram:
            return _fail(f"oracle mismatch for {f!r}")
    return True, f"{iters} cases"


def check_splitting(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        while True:
            f1 = gen.random_monic(F, rng, rng.randint(1, 3))
            f2 = gen.random_monic(F, rng, rng.randint(1, 3))
            from .poly import poly_gcd

            if poly_gcd(f1, f2).degree == 0:
                break
        s = bezoutian_form(f1 * f2)
        res = split_by_factors(s, f1, f2)
        inv_sum = witt_invariants(orthogonal_sum(res.first, res.second))
        if inv_sum != witt_invariants(s):
            return _fail("split pieces do not reproduce the invariants")
    return True, f"{iters} cases"


def check_category(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        algebras, maps = gen.random_chain(F, rng, 3, max_deg=2, max_rank=2)
        f, g, h = maps
        if validate(f) or validate(g) or validate(h):
            return _fail("generated correspondence failed validation")
        if compose(identity(f.target), f) != f:
            return _fail("left unit law failed")
        if compose(f, identity(f.source)) != f:
            return _fail("right unit law failed")
        if compose(h, compose(g, f)) != compose(compose(h, g), f):
            return _fail("associativity failed")
    return True, f"{iters} cases"


def check_duality(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        algebras, maps = gen.random_chain(F, rng, 2, max_deg=2, max_rank=2)
        f, g = maps
        dual_compose_witness(g, f)
        if dual(dual(f)) != f:
            return _fail("double dual is not the identity presentation")
    return True, f"{iters} cases"


def check_twist(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        algebras, maps = gen.random_chain(F, rng, 1, max_deg=2, max_rank=2)
        f = maps[0]
        w = f.target.random_unit(rng)
        twist_square_isometry(f, w)
    return True, f"{iters} cases"


def check_lemma(rng, iters):
    from .poly import parse_poly

    F = rng.choice(FIELDS)
    for e_text in ("t", "t-1"):
        e = parse_poly(F, e_text)
        for n in (1, 2, 3, 4):
            u = F.random_unit(rng)
            res = sqmet_class(e, n, u)
            if (n % 2 == 0) != res.metabolic:
                return _fail(f"parity of {e_text}^{n} wrong")
            if n % 2:
                s = NilpotentSpace.from_power(e, n, u)
                if not witt_equal(res.reduced, s.space):
                    return _fail("reduced form class changed")
    return True, "e in {t, t-1}, n <= 4"


def check_rigidity(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        n = rng.randint(1, 5)
        f = gen.random_monic(F, rng, n)
        if not witt_equal(bezoutian_form(f), bezoutian_form(Poly.monomial(F, n))):
            return _fail(f"class of {f!r} differs from the monomial class")
    return True, f"{iters} cases"


def check_homotopy(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        n = rng.randint(1, 4)
        p = HomotopyPencil(
            gen.random_monic(F, rng, n), gen.random_monic(F, rng, n), F.random_unit(rng)
        )
        if not pencil_check(p).witt_equal:
            return _fail("pencil specializations disagree")
    return True, f"{iters} cases"


def check_json_roundtrip(rng, iters):
    for _ in range(iters):
        F = rng.choice(FIELDS)
        s = gen.random_symmetric_nonsingular(F, rng, rng.randint(1, 3))
        if quadspace_from_json(quadspace_to_json(s)) != s:
            return _fail("quadratic space round-trip failed")
        algebras, maps = gen.random_chain(F, rng, 1, max_deg=2, max_rank=2)
        c = maps[0]
        if correspondence_from_json(correspondence_to_json(c)) != c:
            return _fail("correspondence round-trip failed")
    return True, f"{iters} cases"


SUITES = (
    ("poly-arith", check_poly_arith, 1.0),
    ("squares", check_squares, 1.0),
    ("diagonalize", check_diagonalize, 1.0),
    ("hilbert", check_hilbert, 0.5),
    ("witt", check_witt, 0.5),
    ("oracle", check_oracle, 0.5),
    ("splitting", check_splitting, 0.5),
    ("category", check_category, 0.25),
    ("duality", check_duality, 0.25),
    ("twist", check_twist, 0.25),
    ("lemma", check_lemma, 0.1),
    ("rigidity", check_rigidity, 0.5),
    ("homotopy", check_homotopy, 0.25),
    ("json-roundtrip", check_json_roundtrip, 0.25),
)


def run_selfcheck(seed: int, iters: int = 20, inject_fault: str | None = None):
    """Run every suite; returns (all_ok, [(name, ok, detail), ...])."""
    results = []
    all_ok = True
    for name, fn, scale in SUITES:
        rng = random.Random((seed, name).__repr__())
        count = max(1, int(iters * scale))
        try:
            ok, detail = fn(rng, count)
        except Exception as exc:  # a crash is a failed invariant, not a usage error
            ok, detail = False, f"exception: {exc}"
        if inject_fault == name:
            ok, detail = False, "injected fault"
        results.append((name, ok, detail))
        all_ok = all_ok and ok
    return all_ok, results
