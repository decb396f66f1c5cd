import random
from fractions import Fraction

import pytest

from wittc import (
    Poly,
    PrimeField,
    Rationals,
    WittcError,
    parse_poly,
    poly_derivative,
    poly_divmod,
    poly_ext_gcd,
    poly_to_str,
)
from wittc.gen import random_monic


Q = Rationals()
F5 = PrimeField(5)


def P(field, text):
    return parse_poly(field, text)


def test_divmod_examples():
    q, r = poly_divmod(P(Q, "t^3-t"), P(Q, "t-1"))
    assert q == P(Q, "t^2+t") and r.is_zero()

    f = P(Q, "3t^4-2t+7")
    q, r = poly_divmod(f, Poly.one(Q))
    assert q == f and r.is_zero()

    q, r = poly_divmod(P(F5, "t^2+1"), P(F5, "t+2"))
    assert q == P(F5, "t+3") and r.is_zero()


def test_divmod_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(P(Q, "t"), Poly.zero(Q))


def test_mismatched_fields_rejected():
    from wittc import FieldMismatchError

    with pytest.raises(FieldMismatchError):
        poly_divmod(P(Q, "t^2"), P(F5, "t"))
    with pytest.raises(FieldMismatchError):
        P(Q, "t") + P(F5, "t")


def test_ext_gcd_examples():
    g, u, v = poly_ext_gcd(P(Q, "t^2"), P(Q, "t"))
    assert g == P(Q, "t") and u.is_zero() and v == Poly.one(Q)

    g, u, v = poly_ext_gcd(P(Q, "t-1"), P(Q, "t+1"))
    assert g == Poly.one(Q)
    assert u == Poly.constant(Q, Fraction(-1, 2))
    assert v == Poly.constant(Q, Fraction(1, 2))

    g, u, v = poly_ext_gcd(P(Q, "t^2-1"), P(Q, "t^3-t"))
    assert g == P(Q, "t^2-1") and u == Poly.one(Q) and v.is_zero()


def test_ext_gcd_rejects_double_zero():
    with pytest.raises(WittcError):
        poly_ext_gcd(Poly.zero(Q), Poly.zero(Q))


def test_derivative_examples():
    assert poly_derivative(P(Q, "t^3-t")) == P(Q, "3t^2-1")
    assert poly_derivative(Poly.constant(Q, 5)).is_zero()
    F3 = PrimeField(3)
    assert poly_derivative(P(F3, "t^3+t")) == Poly.one(F3)


def test_divmod_reconstruction_property():
    rng = random.Random(5)
    for field in (Q, F5):
        for _ in range(60):
            a = random_monic(field, rng, rng.randint(0, 6))
            b = random_monic(field, rng, rng.randint(0, 5))
            q, r = poly_divmod(a, b)
            assert b * q + r == a
            assert r.degree < b.degree


def test_bezout_identity_property():
    rng = random.Random(6)
    for field in (Q, F5):
        for _ in range(60):
            a = random_monic(field, rng, rng.randint(0, 5))
            b = random_monic(field, rng, rng.randint(0, 5))
            g, u, v = poly_ext_gcd(a, b)
            assert u * a + v * b == g
            assert g.is_monic()
            assert (a % g).is_zero() and (b % g).is_zero()


def test_derivative_is_additive_and_leibniz():
    rng = random.Random(7)
    for field in (Q, PrimeField(3)):
        for _ in range(40):
            a = random_monic(field, rng, rng.randint(0, 4))
            b = random_monic(field, rng, rng.randint(0, 4))
            assert (a + b).derivative() == a.derivative() + b.derivative()
            assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_parse_and_print_roundtrip():
    for text in ("t^3-t", "t^2+1", "2t^4-3t^2+5", "t-1", "7"):
        f = parse_poly(Q, text)
        assert parse_poly(Q, poly_to_str(f)) == f


def test_zero_polynomial_is_empty():
    assert Poly(Q, [0, 0, 0]).coeffs == ()
    assert Poly(Q, [0, 0, 0]).degree == -1
