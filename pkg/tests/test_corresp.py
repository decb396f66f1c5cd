import random

import pytest

from wittc import (
    CompositionError,
    FiniteAlgebra,
    NonUnitError,
    Poly,
    PrimeField,
    Rationals,
    ValidationError,
    WittcError,
    compose,
    dual,
    dual_compose_witness,
    graph,
    identity,
    parse_poly,
    point_algebra,
    point_projection,
    twist,
    twist_square_isometry,
    underlying_form,
    validate,
    witt_invariants,
)
from wittc.corresp import alg_mat_is_invertible
from wittc.gen import random_algebra, random_chain, random_correspondence
from wittc.linalg import berkowitz_det
from wittc.poly import poly_gcd


Q = Rationals()
F5 = PrimeField(5)
FIELDS = (Q, F5, PrimeField(7))


def test_validate_identity_ok():
    for field in FIELDS:
        E = FiniteAlgebra(field, parse_poly(field, "t^2+1"))
        assert validate(identity(E)) == []


def test_validate_degenerate_gram():
    # G = [[t]] over k[t]/(t^2) has nilpotent determinant
    E = FiniteAlgebra(Q, parse_poly(Q, "t^2"))
    from wittc.corresp import Correspondence

    bad = Correspondence(E, E, ((E.gen,),), ((E.gen,),))
    report = validate(bad)
    assert any("unit" in v for v in report)


def test_validate_wrong_target_modulus():
    from wittc.corresp import Correspondence

    pt = point_algebra(Q)
    good_target = FiniteAlgebra(Q, parse_poly(Q, "t-2"))
    bad_target = FiniteAlgebra(Q, parse_poly(Q, "t-3"))
    T = (((Q.coerce(2),),),)
    G = (((Q.one,),),)
    assert validate(Correspondence(pt, good_target, T, G)) == []
    report = validate(Correspondence(pt, bad_target, T, G))
    assert any("annihilate" in v for v in report)


def test_identity_examples():
    pt = point_algebra(Q)
    i = identity(pt)
    assert i.rank == 1
    assert i.action == (((Q.zero,),),)
    assert i.gram == (((Q.one,),),)

    E = FiniteAlgebra(Q, parse_poly(Q, "t^2-2"))
    j = identity(E)
    assert j.rank == 1 and j.action[0][0] == E.gen and j.gram[0][0] == E.one

    rng = random.Random(21)
    for _ in range(10):
        field = rng.choice(FIELDS)
        E = random_algebra(field, rng)
        assert validate(identity(E)) == []


def test_graph_examples():
    target = FiniteAlgebra(Q, parse_poly(Q, "t-4"))
    c = graph(point_algebra(Q), target, [4])
    assert c.rank == 1 and c.action[0][0] == (Q.coerce(4),)

    E = FiniteAlgebra(Q, parse_poly(Q, "t^2+3"))
    assert graph(E, E, E.gen) == identity(E)

    with pytest.raises(WittcError):
        graph(point_algebra(Q), FiniteAlgebra(Q, parse_poly(Q, "t^2+1")), [0])


def test_twist_examples():
    E = FiniteAlgebra(Q, parse_poly(Q, "t^2-2"))
    assert twist(E, [1]) == identity(E)
    with pytest.raises(NonUnitError):
        twist(FiniteAlgebra(Q, parse_poly(Q, "t^2")), [0, 1])


def test_compose_unit_laws_exact():
    rng = random.Random(22)
    for _ in range(15):
        field = rng.choice(FIELDS)
        _, maps = random_chain(field, rng, 1)
        f = maps[0]
        assert compose(identity(f.target), f) == f
        assert compose(f, identity(f.source)) == f


def test_compose_object_mismatch():
    f = identity(point_algebra(Q))
    g = identity(FiniteAlgebra(Q, parse_poly(Q, "t^2+1")))
    with pytest.raises(CompositionError):
        compose(g, f)


def test_compose_graphs_functorially():
    # pt -> Y -> Z through constants: the composite is the graph of the
    # composite algebra map
    pt = point_algebra(Q)
    Y = FiniteAlgebra(Q, parse_poly(Q, "t-2"))
    Z = FiniteAlgebra(Q, parse_poly(Q, "t-7"))
    f = graph(pt, Y, [2])
    g = graph(Y, Z, [7])  # t -> 7 = constant in E_Y
    comp = compose(g, f)
    assert comp == graph(pt, Z, [7])


def test_associativity_exact_and_valid():
    rng = random.Random(23)
    for _ in range(12):
        field = rng.choice(FIELDS)
        _, maps = random_chain(field, rng, 3, max_deg=2, max_rank=2)
        f, g, h = maps
        a = compose(h, compose(g, f))
        b = compose(compose(h, g), f)
        assert a == b
        assert validate(a) == []


def test_presheaf_contravariance_at_point():
    rng = random.Random(24)
    for _ in range(8):
        field = rng.choice(FIELDS)
        pt = point_algebra(field)
        X = random_algebra(field, rng, max_deg=2)
        Y = random_algebra(field, rng, max_deg=2)
        Z = random_algebra(field, rng, max_deg=2)
        f = random_correspondence(rng, X, Y, max_rank=2)
        g = random_correspondence(rng, Y, Z, max_rank=2)
        w = random_correspondence(rng, Z, pt, max_rank=2)
        lhs = compose(compose(w, g), f)
        rhs = compose(w, compose(g, f))
        assert lhs == rhs


def test_underlying_invariants_of_point_composites():
    rng = random.Random(25)
    for _ in range(6):
        field = rng.choice(FIELDS)
        pt = point_algebra(field)
        Y = random_algebra(field, rng, max_deg=2)
        Z = random_algebra(field, rng, max_deg=2)
        f = random_correspondence(rng, pt, Y, max_rank=2)
        g = random_correspondence(rng, Y, Z, max_rank=2)
        w = random_correspondence(rng, Z, pt, max_rank=2)
        a = compose(w, compose(g, f))
        b = compose(compose(w, g), f)
        assert witt_invariants(underlying_form(a)) == witt_invariants(
            underlying_form(b)
        )


def test_dual_examples():
    E = FiniteAlgebra(Q, parse_poly(Q, "t^2+1"))
    assert dual(identity(E)) == identity(E)

    q = E.from_coeffs([2, 1])
    assert dual(twist(E, q)) == twist(E, E.inv(q))

    rng = random.Random(26)
    for _ in range(10):
        field = rng.choice(FIELDS)
        _, maps = random_chain(field, rng, 1)
        c = maps[0]
        assert dual(dual(c)) == c
        assert validate(dual(c)) == []


def test_dual_compose_compatibility():
    rng = random.Random(27)
    for _ in range(12):
        field = rng.choice(FIELDS)
        _, maps = random_chain(field, rng, 2)
        f, g = maps
        W = dual_compose_witness(g, f)
        assert len(W) == f.rank * g.rank


def test_underlying_form_examples():
    pt = point_algebra(Q)
    assert underlying_form(identity(pt)).gram == ((Q.one,),)
    E = FiniteAlgebra(Q, parse_poly(Q, "t^2+1"))
    with pytest.raises(WittcError):
        underlying_form(identity(E))


def test_point_composite_shape():
    rng = random.Random(28)
    field = Q
    pt = point_algebra(field)
    Y = random_algebra(field, rng, max_deg=2)
    f = random_correspondence(rng, pt, Y, max_rank=3)
    w = random_correspondence(rng, Y, pt, max_rank=2)
    comp = compose(w, f)
    s = underlying_form(comp)
    assert s.rank == f.rank * w.rank


def test_twist_square_isometry():
    rng = random.Random(29)
    for _ in range(10):
        field = rng.choice(FIELDS)
        _, maps = random_chain(field, rng, 1)
        f = maps[0]
        w = f.target.random_unit(rng)
        V = twist_square_isometry(f, w)
        assert len(V) == f.rank


def test_unit_determinant_two_routes_agree():
    # berkowitz determinant + gcd with the modulus against the k-linear
    # invertibility decision
    rng = random.Random(30)
    for _ in range(12):
        field = rng.choice(FIELDS)
        E = random_algebra(field, rng, max_deg=3)
        n = rng.randint(1, 3)
        M = tuple(
            tuple(E.random_elem(rng) for _ in range(n)) for _ in range(n)
        )
        det = berkowitz_det(E, M)
        via_gcd = (
            not E.is_zero(det)
            and poly_gcd(E.lift(det), E.modulus).degree == 0
        )
        assert via_gcd == alg_mat_is_invertible(E, M)


def test_compose_invalid_composite_rejected():
    # composing with a degenerate middle form must fail validation
    from wittc.corresp import Correspondence

    E = FiniteAlgebra(Q, parse_poly(Q, "t^2"))
    bad = Correspondence(E, E, ((E.gen,),), ((E.gen,),))
    with pytest.raises(ValidationError):
        compose(bad, identity(E))
