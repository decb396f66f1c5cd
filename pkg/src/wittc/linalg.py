"""Exact dense linear algebra over a field or a finite algebra.

All matrices are sequences of rows.  Functions taking a ``ctx`` argument
work over any commutative ring context exposing zero/one/add/sub/mul/neg/
is_zero (Field instances and FiniteAlgebra instances both qualify);
functions that divide require an actual Field.
"""

from __future__ import annotations

from math import lcm

from .fields import Field, PrimeField

# Large primes for one-sided nonsingularity certification over Q: a matrix
# that is invertible mod one of these is invertible over Q.  The converse
# direction always falls back to an exact fraction-free elimination.
_CERT_PRIMES = (2**61 - 1, 2**31 - 1, 1000000007)


def mat_identity(ctx, n: int):
    return tuple(
        tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)
    )


def mat_transpose(A):
    return tuple(zip(*A)) if A else ()


def mat_eq(A, B) -> bool:
    return [list(r) for r in A] == [list(r) for r in B]


def is_symmetric(A) -> bool:
    n = len(A)
    return all(A[i][j] == A[j][i] for i in range(n) for j in range(i + 1, n))


def mat_neg(ctx, A):
    return tuple(tuple(ctx.neg(x) for x in row) for row in A)


def mat_scale(ctx, c, A):
    return tuple(tuple(ctx.mul(c, x) for x in row) for row in A)


def mat_add(ctx, A, B):
    return tuple(
        tuple(ctx.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def mat_mul(ctx, A, B):
    n = len(A)
    inner = len(B)
    m = len(B[0]) if inner else 0
    Bt = list(zip(*B)) if inner else []
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            col = Bt[j]
            acc = ctx.zero
            for k in range(inner):
                a = Ai[k]
                if not ctx.is_zero(a):
                    acc = ctx.add(acc, ctx.mul(a, col[k]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(ctx, A, v):
    out = []
    for row in A:
        acc = ctx.zero
        for a, x in zip(row, v):
            if not ctx.is_zero(a):
                acc = ctx.add(acc, ctx.mul(a, x))
        out.append(acc)
    return tuple(out)


def dot(ctx, u, v):
    acc = ctx.zero
    for a, b in zip(u, v):
        acc = ctx.add(acc, ctx.mul(a, b))
    return acc


def mat_inverse(field: Field, A):
    """Gauss-Jordan inverse over a field; None if A is singular."""
    F = field
    n = len(A)
    aug = [
        [F.coerce(x) for x in row] + [F.one if i == j else F.zero for j in range(n)]
        for i, row in enumerate(A)
    ]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if not F.is_zero(aug[i][c]):
                piv = i
                break
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = F.inv(aug[c][c])
        aug[c] = [F.mul(inv, v) for v in aug[c]]
        for i in range(n):
            if i != c and not F.is_zero(aug[i][c]):
                f = aug[i][c]
                row, prow = aug[i], aug[c]
                aug[i] = [F.sub(row[j], F.mul(f, prow[j])) for j in range(2 * n)]
    return tuple(tuple(row[n:]) for row in aug)


def kernel_basis(field: Field, A, ncols: int | None = None):
    """Basis of the right kernel {x : A x = 0}, via reduced row echelon form."""
    F = field
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if m else 0)
    R = [[F.coerce(x) for x in row] for row in A]
    piv_cols = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if not F.is_zero(R[i][c]):
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, v) for v in R[r]]
        for i in range(m):
            if i != r and not F.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [F.sub(R[i][j], F.mul(f, R[r][j])) for j in range(n)]
        piv_cols.append(c)
        r += 1
    piv_set = set(piv_cols)
    basis = []
    for fc in (c for c in range(n) if c not in piv_set):
        v = [F.zero] * n
        v[fc] = F.one
        for row_idx, pc in enumerate(piv_cols):
            v[pc] = F.neg(R[row_idx][fc])
        basis.append(tuple(v))
    return basis


def _rank_mod_p(rows, p: int) -> int:
    M = [[v % p for v in row] for row in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    for c in range(n):
        if rank == m:
            break
        piv = None
        for i in range(rank, m):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        prow = [v * inv % p for v in M[rank]]
        M[rank] = prow
        for i in range(rank + 1, m):
            f = M[i][c]
            if f:
                row = M[i]
                M[i] = [(row[j] - f * prow[j]) % p for j in range(n)]
        rank += 1
    return rank


def _bareiss_nonsingular(rows) -> bool:
    """Exact nonsingularity of an integer matrix (fraction-free elimination)."""
    M = [list(row) for row in rows]
    n = len(M)
    prev = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if M[i][k]:
                piv = i
                break
        if piv is None:
            return False
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
        pk = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            mik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - mik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return True


def is_nonsingular(field: Field, A) -> bool:
    """Exact invertibility test, fast-pathed for large rational matrices."""
    n = len(A)
    if n == 0:
        return True
    if isinstance(field, PrimeField):
        return _rank_mod_p([[int(x) for x in row] for row in A], field.p) == n
    den = 1
    for row in A:
        for x in row:
            den = lcm(den, x.denominator)
    M = [[int(x * den) for x in row] for row in A]
    if n <= 24:
        return _bareiss_nonsingular(M)
    for p in _CERT_PRIMES:
        if _rank_mod_p(M, p) == n:
            return True
    return _bareiss_nonsingular(M)


def berkowitz_det(ctx, A):
    """Division-free determinant over any commutative ring context.

    Computes the characteristic polynomial vector by the Berkowitz
    recursion and reads the determinant off its constant term.
    """
    n = len(A)
    if n == 0:
        return ctx.one
    V = [ctx.one, ctx.neg(A[0][0])]
    for k in range(1, n):
        a = A[k][k]
        R = [A[k][j] for j in range(k)]
        C = [A[i][k] for i in range(k)]
        sub = [[A[i][j] for j in range(k)] for i in range(k)]
        diags = [ctx.one, ctx.neg(a)]
        vec = C
        for i in range(k):
            diags.append(ctx.neg(dot(ctx, R, vec)))
            if i < k - 1:
                vec = mat_vec(ctx, sub, vec)
        newV = []
        for i in range(k + 2):
            acc = ctx.zero
            for j in range(min(i, k) + 1):
                d = i - j
                if d < len(diags):
                    acc = ctx.add(acc, ctx.mul(diags[d], V[j]))
            newV.append(acc)
        V = newV
    det = V[n]
    if n % 2:
        det = ctx.neg(det)
    return det
