"""Independent reference implementations used by the tests.

Nothing here imports brauerkit.  Finite fields are encoded the same way
as the library (base-p digits, constant coefficient first) so values can be
compared directly, but the arithmetic is plain schoolbook polynomial code.
"""
from fractions import Fraction
from itertools import product
from math import gcd


# -- prime-power fields -------------------------------------------------------

def _polymulmod(a, b, mod, p):
    k = len(mod) - 1
    out = [0] * (2 * k)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    for d in range(len(out) - 1, k - 1, -1):
        c = out[d]
        if c:
            for i in range(k + 1):
                out[d - k + i] = (out[d - k + i] - c * mod[i]) % p
    return out[:k]


def _has_root_free_factorization(mod, p):
    """Brute-force irreducibility: no monic factor of degree 1..k//2."""
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            f = list(low) + [1]
            # divide mod by f
            r = list(mod)
            for top in range(k, d - 1, -1):
                c = r[top]
                if c:
                    for i in range(d + 1):
                        r[top - d + i] = (r[top - d + i] - c * f[i]) % p
            if not any(r[:d]):
                return False
    return True


def smallest_irreducible(p, k):
    """Lexicographically smallest monic irreducible, coefficients compared constant first."""
    if k == 1:
        return (0, 1)
    for low in product(range(p), repeat=k):
        mod = tuple(low) + (1,)
        if low[0] != 0 and _has_root_free_factorization(mod, p):
            return mod
    raise AssertionError("no irreducible polynomial")


class GF:
    """``F_{p^k}`` with elements encoded as integers ``sum c_i p^i``."""

    def __init__(self, p, k=1):
        self.p, self.k = p, k
        self.q = p ** k
        self.mod = smallest_irreducible(p, k)

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def encode(self, ds):
        return sum(c * self.p ** i for i, c in enumerate(ds))

    def add(self, a, b):
        return self.encode([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.encode([(-x) % self.p for x in self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        return self.encode(_polymulmod(self.digits(a), self.digits(b), self.mod, self.p))

    def pow(self, a, e):
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def inv(self, a):
        for b in self.nonzero():
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError


def gf_norm_to_prime(F, x):
    """``N(x) = x^(1 + p + ... + p^(k-1))`` in ``F_{p^k}`` (lands in ``F_p``)."""
    e = sum(F.p ** i for i in range(F.k))
    return F.pow(x, e)


def gf_trace_to_prime(F, x):
    t = 0
    y = x
    for _ in range(F.k):
        t = F.add(t, y)
        y = F.pow(y, F.p)
    return t


def norm_image_size(q, m):
    """Size of the image of the norm ``F_{q^m}* -> F_q*`` via cyclic-group orders."""
    order = q ** m - 1
    e = (q ** m - 1) // (q - 1)
    return order // gcd(order, e)


# -- projective points ----------------------------------------------------------

def projective_point_count(n, q):
    return sum(q ** i for i in range(n + 1))


def projective_orbits(F, n):
    """Scalar orbits of nonzero vectors in ``F^(n+1)`` as frozensets."""
    seen = set()
    for v in product(F.elements(), repeat=n + 1):
        if any(v):
            seen.add(frozenset(tuple(F.mul(c, x) for x in v) for c in F.nonzero()))
    return seen


def eigen_orbits(F, M):
    """Orbits of nonzero ``v`` with ``M v`` parallel to ``v`` (all 2x2 minors vanish)."""
    N = len(M)
    out = set()
    for orb in projective_orbits(F, N - 1):
        v = next(iter(orb))
        Mv = [0] * N
        for i in range(N):
            for j in range(N):
                Mv[i] = F.add(Mv[i], F.mul(M[i][j], v[j]))
        if all(F.mul(Mv[i], v[j]) == F.mul(Mv[j], v[i]) for i in range(N) for j in range(N)):
            out.add(orb)
    return out


# -- matrices over Z/p -----------------------------------------------------------

def matmul_mod(A, B, p):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n)] for i in range(n)]


def matrix_unit(n, a, b):
    return [[1 if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)]


def rank_mod(rows, p):
    M = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], -1, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col] % p:
                c = M[i][col]
                M[i] = [(x - c * y) % p for x, y in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def rank_q(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        M[rank] = [x / M[rank][col] for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col] != 0:
                c = M[i][col]
                M[i] = [x - c * y for x, y in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def right_ideal_dims_matrix(n, p):
    """Dimensions of ``X M_n`` for every ``X``: ``n * rank(X)``."""
    dims = set()
    for entries in product(range(p), repeat=n * n):
        X = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        dims.add(n * rank_mod(X, p))
    return dims


# -- quaternions -----------------------------------------------------------------

def hamilton_mul(x, y, a=-1, b=-1):
    """Product in ``(a, b)`` on the basis ``1, i, j, k`` with ``k = ij``."""
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def quaternion_norm(x, a=-1, b=-1):
    x0, x1, x2, x3 = x
    return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3


# -- sums of two squares -----------------------------------------------------------

def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_sum_of_two_rational_squares(a):
    """Fermat: ``a > 0`` is a norm from Q(i) iff primes 3 mod 4 divide ``num*den`` evenly."""
    a = Fraction(a)
    if a <= 0:
        return False
    n = a.numerator * a.denominator
    return all(e % 2 == 0 for pr, e in _factor(n).items() if pr % 4 == 3)


# -- groups ----------------------------------------------------------------------

def perm_compose(p, q):
    return tuple(p[q[x]] for x in range(len(q)))


def conjugacy_orbits_of_edges(elems, mul, inv, gens):
    """Edges ``(gamma, g)``; ``h`` acts by ``(h gamma, h g h^-1)``.  Returns the orbits."""
    edges = {(x, g) for x in elems for g in gens}
    orbits = []
    left = set(edges)
    while left:
        e = left.pop()
        orb = {(mul(h, e[0]), mul(mul(h, e[1]), inv(h))) for h in elems}
        left -= orb
        orbits.append(orb)
    return orbits


# -- divisibility rule ------------------------------------------------------------

def curve_rule(ind, deg, chi):
    """Odd index: ``ind`` divides both degree and Euler characteristic.
    Even index: ``ind`` divides ``deg + chi`` and ``ind/2`` divides ``chi``."""
    if ind % 2:
        return deg % ind == 0 and chi % ind == 0
    return (deg + chi) % ind == 0 and (2 * chi) % ind == 0


def function_field_period(m, d):
    """Period of ``t^d`` for ``F_{p^m}(t)/F_p(t)``: norms have ``t``-degree divisible by ``m``."""
    return m // gcd(m, d)
