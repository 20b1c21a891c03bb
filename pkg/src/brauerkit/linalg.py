"""Dense exact linear algebra over a Field (lists of lists of raw values)."""
from __future__ import annotations

from .errors import ValidationError


def zeros(F, r, c):
    return [[F.zero] * c for _ in range(r)]


def identity(F, n):
    M = zeros(F, n, n)
    for i in range(n):
        M[i][i] = F.one
    return M


def matmul(F, A, B):
    if A and len(A[0]) != len(B):
        raise ValidationError("matrix shapes do not match")
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [F.zero] * cols
        for a, brow in zip(row, B):
            if a == F.zero:
                continue
            for j, b in enumerate(brow):
                if b != F.zero:
                    acc[j] = F.add(acc[j], F.mul(a, b))
        out.append(acc)
    return out


def matvec(F, A, v):
    return [F.sum(F.mul(a, x) for a, x in zip(row, v)) for row in A]


def transpose(M):
    return [list(r) for r in zip(*M)]


def rref(F, M):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    R = [list(r) for r in M]
    pivots = []
    rows = len(R)
    cols = len(R[0]) if R else 0
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i][c] != F.zero), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        pivot_row = R[r]
        nz = [j for j in range(c, cols) if pivot_row[j] != F.zero]
        for i in range(rows):
            if i != r:
                f = R[i][c]
                if f != F.zero:
                    row = R[i]
                    for j in nz:
                        row[j] = F.sub(row[j], F.mul(f, pivot_row[j]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F, M) -> int:
    return len(rref(F, M)[1]) if M else 0


def row_space(F, vectors):
    """Echelon basis of the span of ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    return rref(F, vectors)[0]


def kernel(F, M, ncols=None):
    """Basis of ``{v : M v = 0}``."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    R, pivots = rref(F, M)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * n
        v[f] = F.one
        for row, p in zip(R, pivots):
            v[p] = F.neg(row[f])
        basis.append(v)
    return basis


def solve(F, A, b):
    """One solution of ``A x = b`` or ``None``."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug)
    if n in pivots:
        return None
    x = [F.zero] * n
    for row, p in zip(R, pivots):
        x[p] = row[n]
    return x


def det(F, M):
    n = len(M)
    A = [list(r) for r in M]
    d = F.one
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != F.zero), None)
        if p is None:
            return F.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = F.neg(d)
        d = F.mul(d, A[c][c])
        inv = F.inv(A[c][c])
        for i in range(c + 1, n):
            f = F.mul(A[i][c], inv)
            if f != F.zero:
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[c])]
    return d


def inverse(F, M):
    n = len(M)
    aug = [list(r) + e for r, e in zip(M, identity(F, n))]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValidationError("matrix is singular")
    return [row[n:] for row in R]


def charpoly(F, M):
    """Characteristic polynomial ``det(x I - M)``, constant term first via an upper Hessenberg reduction."""
    n = len(M)
    H = [list(r) for r in M]
    # reduce to upper Hessenberg form by similarity
    for c in range(n - 2):
        p = next((i for i in range(c + 1, n) if H[i][c] != F.zero), None)
        if p is None:
            continue
        if p != c + 1:
            H[c + 1], H[p] = H[p], H[c + 1]
            for row in H:
                row[c + 1], row[p] = row[p], row[c + 1]
        inv = F.inv(H[c + 1][c])
        for i in range(c + 2, n):
            f = F.mul(H[i][c], inv)
            if f == F.zero:
                continue
            H[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(H[i], H[c + 1])]
            for row in H:
                row[c + 1] = F.add(row[c + 1], F.mul(f, row[i]))
    from .fields import poly
    polys = [(F.one,)]
    for k in range(1, n + 1):
        pk = poly.mul(F, (F.neg(H[k - 1][k - 1]), F.one), polys[k - 1])
        t = F.one
        for i in range(1, k):
            t = F.mul(t, H[k - i][k - i - 1])
            c = F.mul(t, H[k - i - 1][k - 1])
            pk = poly.sub(F, pk, poly.scale(F, c, polys[k - i - 1]))
        polys.append(pk)
    return polys[n]
