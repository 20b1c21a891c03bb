"""Projective spaces over finite fields: points, tangent sections, summands, ideals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg as la
from .algebra import Subspace, matrix_algebra, right_ideal, left_ideal
from .errors import InternalError, SizeLimitExceeded, ValidationError
from .fields import finite_field, poly

POINT_LIMIT = 1 << 20


@dataclass(frozen=True)
class ProjectivePoint:
    """Normalized so the first nonzero coordinate is 1.

    Points order as they are enumerated: by the position of the leading 1,
    then lexicographically in the remaining coordinates.
    """

    coords: tuple

    @property
    def sort_key(self):
        lead = next(i for i, c in enumerate(self.coords) if c == 1 or c == Fraction(1))
        return (lead, self.coords)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def format(self, F=None) -> str:
        fmt = F.format if F is not None else str
        return "(" + ":".join(fmt(c) for c in self.coords) + ")"

    def __str__(self):
        return self.format()


def _field(q):
    return finite_field(q) if isinstance(q, int) else q


def normalize(F, v) -> ProjectivePoint:
    v = tuple(v)
    lead = next((c for c in v if c != F.zero), None)
    if lead is None:
        raise ValidationError("the zero vector is not a projective point")
    inv = F.inv(lead)
    return ProjectivePoint(tuple(F.mul(inv, c) for c in v))


def projective_points(n: int, q) -> list[ProjectivePoint]:
    """All points of ``P^n(F_q)``, lexicographic in normalized coordinates."""
    F = _field(q)
    if n < 0:
        raise ValidationError("n must be >= 0")
    count = (F.order ** (n + 1) - 1) // (F.order - 1)
    if count > POINT_LIMIT:
        raise SizeLimitExceeded(f"P^{n}(F_{F.order}) has {count} points")
    elems = list(F.elements())
    pts = []
    for lead in range(n + 1):
        for tail in product(elems, repeat=n - lead):
            pts.append(ProjectivePoint((F.zero,) * lead + (F.one,) + tail))
    return pts


# -- tangent sections -------------------------------------------------------------------

class TangentSection:
    """A global vector field on ``P^n`` as an ``(n+1)x(n+1)`` matrix modulo scalars.

    The stored representative is traceless when the characteristic does not
    divide ``n+1``; otherwise the matrix is kept as given and equality is
    tested modulo scalar matrices.
    """

    def __init__(self, F, matrix):
        self.field = F
        M = [[F.coerce(c) for c in row] for row in matrix]
        N = len(M)
        if N == 0 or any(len(r) != N for r in M):
            raise ValidationError("tangent section needs a square matrix")
        self.n = N - 1
        if F.characteristic == 0 or N % F.characteristic:
            tr = F.sum(M[i][i] for i in range(N))
            shift = F.div(tr, F.from_int(N))
            M = [[F.sub(c, shift) if i == j else c for j, c in enumerate(row)] for i, row in enumerate(M)]
            self.traceless = True
        else:
            self.traceless = False
        self.matrix = M

    def is_scalar(self) -> bool:
        F, M = self.field, self.matrix
        d = M[0][0]
        return all(M[i][j] == (d if i == j else F.zero) for i in range(self.n + 1) for j in range(self.n + 1))

    def __eq__(self, other):
        if not isinstance(other, TangentSection) or other.field != self.field or other.n != self.n:
            return False
        F = self.field
        diff = [[F.sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)]
        return TangentSection(F, diff).is_scalar() if not self.traceless else self.matrix == other.matrix

    def __hash__(self):
        return hash((self.n, self.traceless))


@dataclass(frozen=True)
class ScalarSection:
    """Outcome for the zero vector field: it vanishes everywhere."""

    n: int

    def __str__(self):
        return "all points (scalar matrix, zero section)"


def _in_span(F, Av, v) -> bool:
    # v is normalized, so Av lies on the line iff Av = (Av)_lead * v
    lead = next(i for i, c in enumerate(v) if c != F.zero)
    s = Av[lead]
    return all(a == F.mul(s, c) for a, c in zip(Av, v))


def _locus_direct(F, M, n):
    return [p for p in projective_points(n, F) if _in_span(F, la.matvec(F, M, p.coords), p.coords)]


def _locus_eigen(F, M, n):
    """Eigenvectors for the roots of the characteristic polynomial in ``F``."""
    cp = la.charpoly(F, M)
    pts = set()
    N = n + 1
    for lam in poly.roots(F, cp):
        shifted = [[F.sub(M[i][j], lam) if i == j else M[i][j] for j in range(N)] for i in range(N)]
        basis = la.kernel(F, shifted, N)
        for coeffs in product(list(F.elements()), repeat=len(basis)):
            v = [F.zero] * N
            for c, b in zip(coeffs, basis):
                if c != F.zero:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            if any(x != F.zero for x in v):
                pts.add(normalize(F, v))
    return sorted(pts)


def section_zero_locus(A, n: int | None = None, q=None):
    """Points where the vector field of ``A`` vanishes: the eigenvectors of ``A``.

    Computed by a direct test ``A p in span(p)`` over all points and by eigen
    analysis through the characteristic polynomial; the two must agree.
    Returns :class:`ScalarSection` for scalar ``A``.
    """
    if not isinstance(A, TangentSection):
        A = TangentSection(_field(q), A)
    F = A.field
    if n is not None and n != A.n:
        raise ValidationError(f"matrix size {A.n + 1} does not match n={n}")
    if A.is_scalar():
        return ScalarSection(A.n)
    direct = _locus_direct(F, A.matrix, A.n)
    eigen = _locus_eigen(F, A.matrix, A.n)
    if direct != eigen:
        raise InternalError("direct and eigenvector zero loci disagree")
    return direct


def brute_force_locus(F, M, n):
    """Independent oracle: test every point without the tangent-section wrapper."""
    out = []
    for p in projective_points(n, F):
        Ap = la.matvec(F, M, p.coords)
        if all(F.sub(F.mul(Ap[i], p.coords[j]), F.mul(Ap[j], p.coords[i])) == F.zero
               for i in range(n + 1) for j in range(i + 1, n + 1)):
            out.append(p)
    return out


@dataclass
class ZeroCountStats:
    n: int
    q: int
    diagonal_counts: list
    random_counts: dict

    @property
    def diagonal_exact(self) -> bool:
        return all(c == self.n + 1 for c in self.diagonal_counts)


def general_section_zero_count(n: int, q, trials: int = 20, rng=None) -> ZeroCountStats:
    """Zero counts of diagonal sections with distinct entries (always ``n+1``)
    and a histogram over random non-scalar sections."""
    import random
    F = _field(q)
    if F.order <= n + 1:
        raise ValidationError(f"need q > n+1 for distinct diagonal entries, got q={F.order}")
    rng = rng or random.Random(0)
    elems = list(F.elements())
    diag = []
    for _ in range(trials):
        vals = rng.sample(elems, n + 1)
        M = [[vals[i] if i == j else F.zero for j in range(n + 1)] for i in range(n + 1)]
        diag.append(len(section_zero_locus(TangentSection(F, M))))
    hist = {}
    done = 0
    while done < trials:
        M = [[rng.choice(elems) for _ in range(n + 1)] for _ in range(n + 1)]
        S = TangentSection(F, M)
        if S.is_scalar():
            continue
        c = len(section_zero_locus(S))
        hist[c] = hist.get(c, 0) + 1
        done += 1
    return ZeroCountStats(n, F.order, diag, dict(sorted(hist.items())))


def summand_to_span(B, n: int | None = None, q=None, r: int | None = None):
    """Span of the eigenvectors of ``B`` for its simple nonzero eigenvalues.

    ``B`` must have ``r+1`` distinct nonzero eigenvalues in the field, each
    with a one-dimensional eigenspace, and a kernel of dimension ``n-r``.
    Returns the echelon basis of the span (a linear ``P^r`` in ``P^n``).
    """
    F = _field(q)
    B = [[F.coerce(c) for c in row] for row in B]
    N = len(B)
    if n is not None and n + 1 != N:
        raise ValidationError("matrix size does not match n")
    n = N - 1
    cp = la.charpoly(F, B)
    nonzero_roots = [lam for lam in poly.roots(F, cp) if lam != F.zero]
    # multiplicity of each nonzero root in the characteristic polynomial
    vectors = []
    for lam in nonzero_roots:
        lin = (F.neg(lam), F.one)
        mult, rest = 0, cp
        while True:
            qt, rem = poly.divmod_(F, rest, lin)
            if rem:
                break
            rest, mult = qt, mult + 1
        if mult != 1:
            raise ValidationError(f"eigenvalue {F.format(lam)} is not simple")
        shifted = [[F.sub(B[i][j], lam) if i == j else B[i][j] for j in range(N)] for i in range(N)]
        vectors.extend(la.kernel(F, shifted, N))
    kdim = len(la.kernel(F, B, N))
    if len(nonzero_roots) + kdim != N:
        raise ValidationError("eigenvalues outside the field or a non-semisimple kernel part")
    if r is not None and len(nonzero_roots) != r + 1:
        raise ValidationError(f"expected {r + 1} nonzero eigenvalues, found {len(nonzero_roots)}")
    if not vectors:
        raise ValidationError("B has no nonzero eigenvalue")
    return la.row_space(F, vectors)


# -- ideals and points -------------------------------------------------------------------

@dataclass
class IdealPointDictionary:
    n: int
    q: int
    points: list
    right_ideals: list  # (point, Subspace) pairs: matrices with column space in the line
    left_ideals: list  # (point, Subspace) pairs: matrices with row space in the line
    method: str

    @property
    def bijective(self) -> bool:
        return len(self.points) == len(self.right_ideals) == len(self.left_ideals)


def _outer(F, v, w):
    return [F.mul(a, b) for a in v for b in w]


def ideal_point_dictionary(n: int, q) -> IdealPointDictionary:
    """Minimal right ideals of ``M_{n+1}(F_q)`` against points of ``P^n(F_q)``.

    The ideal of a point ``p`` is ``{M : column space of M in the line p}``,
    generated by ``p e_1^T``.  When ``q^((n+1)^2)`` is small every element's
    right ideal is enumerated and the minimal ones are collected; otherwise
    the rank-one generators ``v w^T`` are enumerated (every minimal right
    ideal is generated by a rank-one matrix).  The left-ideal variant, read
    through the opposite algebra, uses row spaces and is reported alongside.
    """
    F = _field(q)
    N = n + 1
    A = matrix_algebra(F, N)
    pts = projective_points(n, F)
    e1 = [F.one] + [F.zero] * n
    expected_r = {tuple(right_ideal(A, _outer(F, p.coords, e1)).basis): p for p in pts}
    expected_l = {tuple(left_ideal(A, _outer(F, e1, p.coords)).basis): p for p in pts}
    if F.order ** (N * N) <= 1 << 12:
        method = "exhaustive"
        gens = list(A.elements())
    else:
        method = "rank-one generators"
        vecs = list(product(list(F.elements()), repeat=N))[1:]
        gens = [_outer(F, v, w) for v in vecs for w in vecs]
    found_r, found_l = {}, {}
    for x in gens:
        if A.is_zero(x):
            continue
        R = right_ideal(A, x)
        if R.dim == N:
            found_r.setdefault(tuple(R.basis), R)
        L = left_ideal(A, x)
        if L.dim == N:
            found_l.setdefault(tuple(L.basis), L)
    if set(found_r) != set(expected_r) or set(found_l) != set(expected_l):
        raise InternalError("minimal ideals do not match the points")
    right = sorted(((expected_r[k], found_r[k]) for k in found_r), key=lambda t: t[0])
    left = sorted(((expected_l[k], found_l[k]) for k in found_l), key=lambda t: t[0])
    for p, R in right:
        # every matrix in R has its columns on the line p
        for b in R.basis:
            cols = [[b[i * N + j] for i in range(N)] for j in range(N)]
            if any(la.rank(F, [c, list(p.coords)]) > 1 for c in cols if any(x != F.zero for x in c)):
                raise InternalError("right ideal has a column off its line")
    return IdealPointDictionary(n, F.order, pts, right, left, method)
