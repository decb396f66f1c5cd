"""Quadratic spaces over Q or GF(p) and a complete Witt-class decision.

A QuadSpace is a symmetric nondegenerate Gram matrix.  Witt classes are
decided by invariants: rank parity, signature, discriminant and Hasse
symbols over Q (complete by Hasse-Minkowski), rank parity and
discriminant over a prime field.  The local Hilbert symbols use the
classical closed formulas; no approximation is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime

from .errors import DegenerateFormError, FieldMismatchError, WittcError
from .fields import Field, PrimeField
from .linalg import is_nonsingular, is_symmetric

INF_PLACE = "inf"


class QuadSpace:
    """Symmetric Gram matrix over a field; rank 0 is allowed."""

    __slots__ = ("field", "gram")

    def __init__(self, field: Field, gram):
        rows = [tuple(field.coerce(x) for x in row) for row in gram]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise WittcError("gram matrix must be square")
        if not is_symmetric(rows):
            raise WittcError("gram matrix must be symmetric")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "gram", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("QuadSpace is immutable")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def neg(self) -> "QuadSpace":
        F = self.field
        return QuadSpace(F, [[F.neg(x) for x in row] for row in self.gram])

    def validate(self) -> None:
        """Raise DegenerateFormError unless the Gram matrix is invertible."""
        if not is_nonsingular(self.field, self.gram):
            raise DegenerateFormError("gram matrix is singular")

    def __eq__(self, other):
        return (
            isinstance(other, QuadSpace)
            and other.field == self.field
            and other.gram == self.gram
        )

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        return f"QuadSpace({self.field!r}, rank={self.rank})"


@dataclass(frozen=True)
class DiagForm:
    """Diagonalization certificate: entries d_i and P with P^T G P = diag(d)."""

    field: Field
    entries: tuple
    basis_change: tuple


def diag_space(field: Field, entries) -> QuadSpace:
    entries = [field.coerce(e) for e in entries]
    n = len(entries)
    return QuadSpace(
        field,
        [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)],
    )


def diagonalize(s: QuadSpace) -> DiagForm:
    """Congruence diagonalization with a deterministic pivot rule.

    At each step the first nonzero diagonal entry of the trailing block is
    used as pivot; if the diagonal is entirely zero, the lexicographically
    first nonzero off-diagonal entry (i, j) triggers the basis change
    e_i <- e_i + e_j (valid because the characteristic is odd).
    """
    F = s.field
    n = s.rank
    G = [list(row) for row in s.gram]
    P = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]

    def add_col(dst, src, c):
        # e_dst <- e_dst + c * e_src, applied to G (congruence) and P
        for r in range(n):
            G[r][dst] = F.add(G[r][dst], F.mul(c, G[r][src]))
        for r in range(n):
            G[dst][r] = F.add(G[dst][r], F.mul(c, G[src][r]))
        for r in range(n):
            P[r][dst] = F.add(P[r][dst], F.mul(c, P[r][src]))

    def swap(i, j):
        for r in range(n):
            G[r][i], G[r][j] = G[r][j], G[r][i]
        G[i], G[j] = G[j], G[i]
        for r in range(n):
            P[r][i], P[r][j] = P[r][j], P[r][i]

    entries = []
    for m in range(n):
        piv = None
        for i in range(m, n):
            if not F.is_zero(G[i][i]):
                piv = i
                break
        if piv is None:
            pair = None
            for i in range(m, n):
                for j in range(i + 1, n):
                    if not F.is_zero(G[i][j]):
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                raise DegenerateFormError("gram matrix is singular")
            i, j = pair
            add_col(i, j, F.one)
            piv = i
        if piv != m:
            swap(m, piv)
        d = G[m][m]
        for k in range(m + 1, n):
            if not F.is_zero(G[m][k]):
                add_col(k, m, F.neg(F.div(G[m][k], d)))
        entries.append(d)
    return DiagForm(F, tuple(entries), tuple(tuple(row) for row in P))


def diag_entries(s: QuadSpace) -> tuple:
    return diagonalize(s).entries


def orthogonal_sum(a: QuadSpace, b: QuadSpace) -> QuadSpace:
    if a.field != b.field:
        raise FieldMismatchError("orthogonal sum over different fields")
    F = a.field
    na, nb = a.rank, b.rank
    gram = []
    for i in range(na):
        gram.append(list(a.gram[i]) + [F.zero] * nb)
    for i in range(nb):
        gram.append([F.zero] * na + list(b.gram[i]))
    return QuadSpace(F, gram)


def _padic(x: Fraction, p: int):
    """Valuation and unit part of a nonzero rational at p."""
    n, d = x.numerator, x.denominator
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v, Fraction(n, d)


def _eps2(u: Fraction) -> int:
    # (u - 1)/2 mod 2 for an odd rational unit u, read off u mod 8
    u8 = (u.numerator * u.denominator) % 8
    return ((u8 - 1) // 2) % 2


def _omega2(u: Fraction) -> int:
    # (u^2 - 1)/8 mod 2: 0 for u = +-1 mod 8, 1 for u = +-3 mod 8
    u8 = (u.numerator * u.denominator) % 8
    return 0 if u8 in (1, 7) else 1


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """Local Hilbert symbol (a, b) at a finite prime or the real place.

    ``place`` is 2, an odd prime, or the string "inf".
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise WittcError("Hilbert symbol requires nonzero arguments")
    if place == INF_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    if p < 2 or not isprime(p):
        raise WittcError(f"{place} is not a valid place")
    alpha, u = _padic(a, p)
    beta, w = _padic(b, p)
    if p == 2:
        e = (_eps2(u) * _eps2(w) + alpha * _omega2(w) + beta * _omega2(u)) % 2
        return -1 if e else 1
    lu = _legendre(u.numerator * u.denominator, p)
    lw = _legendre(w.numerator * w.denominator, p)
    eps_p = ((p - 1) // 2) % 2
    res = 1
    if (alpha * beta * eps_p) % 2:
        res = -res
    if beta % 2 and lu == -1:
        res = -res
    if alpha % 2 and lw == -1:
        res = -res
    return res


def _odd_bad_primes(entries) -> set:
    """Odd primes dividing the square-free part of some diagonal entry."""
    bad = set()
    for e in entries:
        n = abs(e.numerator * e.denominator)
        for p, k in factorint(n).items():
            if p != 2 and k % 2:
                bad.add(p)
    return bad


@dataclass(frozen=True, eq=False)
class WittInvariants:
    """Complete decision data for a Witt class.

    Over Q all four fields are set; over GF(p) the signature and Hasse
    data are None and the discriminant alone (with rank parity) decides.
    The hasse map lists the form's own bad places; comparisons treat every
    unlisted place as +1, so two descriptions of one class compare equal
    even when their bad sets differ.
    """

    rank: int
    signature: int | None
    disc: int
    hasse: dict | None

    def __eq__(self, other):
        if not isinstance(other, WittInvariants):
            return NotImplemented
        if (self.rank, self.signature, self.disc) != (
            other.rank,
            other.signature,
            other.disc,
        ):
            return False
        if (self.hasse is None) != (other.hasse is None):
            return False
        if self.hasse is None:
            return True
        places = set(self.hasse) | set(other.hasse)
        return all(self.hasse.get(v, 1) == other.hasse.get(v, 1) for v in places)

    def __hash__(self):
        minus = (
            None
            if self.hasse is None
            else frozenset(v for v, s in self.hasse.items() if s == -1)
        )
        return hash((self.rank, self.signature, self.disc, minus))


def _invariants_from_entries(field: Field, entries) -> WittInvariants:
    n = len(entries)
    det = field.one
    for e in entries:
        det = field.mul(det, e)
    disc = field.square_class(det) if n else 1
    if isinstance(field, PrimeField):
        return WittInvariants(rank=n, signature=None, disc=disc, hasse=None)
    signature = sum(field.sign(e) for e in entries)
    places = [2, INF_PLACE] + sorted(_odd_bad_primes(entries))
    hasse = {}
    for v in places:
        h = 1
        for i in range(n):
            for j in range(i + 1, n):
                h *= hilbert_symbol(entries[i], entries[j], v)
        hasse[v] = h
    return WittInvariants(rank=n, signature=signature, disc=disc, hasse=hasse)


def witt_invariants(s: QuadSpace) -> WittInvariants:
    """Rank, signature, discriminant class and Hasse symbols of the form."""
    return _invariants_from_entries(s.field, diag_entries(s))


def _trivial_from_entries(field: Field, entries) -> bool:
    n = len(entries)
    if n % 2:
        return False
    m = n // 2
    target_disc = field.square_class(field.coerce((-1) ** m)) if n else 1
    if isinstance(field, PrimeField):
        if n == 0:
            return True
        det = field.one
        for e in entries:
            det = field.mul(det, e)
        return field.square_class(det) == target_disc
    if n == 0:
        return True
    if sum(field.sign(e) for e in entries) != 0:
        return False
    det = field.one
    for e in entries:
        det = field.mul(det, e)
    if field.square_class(det) != target_disc:
        return False
    # Hasse symbols must match those of m copies of the hyperbolic plane:
    # (-1,-1)_v ^ (m(m-1)/2) at every place in the bad set.
    exp = (m * (m - 1) // 2) % 2
    for v in [2, INF_PLACE] + sorted(_odd_bad_primes(entries)):
        h = 1
        for i in range(n):
            for j in range(i + 1, n):
                h *= hilbert_symbol(entries[i], entries[j], v)
        expected = hilbert_symbol(-1, -1, v) if exp else 1
        if h != expected:
            return False
    return True


def is_witt_trivial(s: QuadSpace) -> bool:
    """True iff the form is metabolic (zero in the Witt group)."""
    return _trivial_from_entries(s.field, diag_entries(s))


def witt_equal(a: QuadSpace, b: QuadSpace) -> bool:
    """Equality of Witt classes, decided on a (+) -b by the invariants."""
    if a.field != b.field:
        raise FieldMismatchError("witt_equal over different fields")
    F = a.field
    entries = list(diag_entries(a)) + [F.neg(e) for e in diag_entries(b)]
    return _trivial_from_entries(F, entries)
