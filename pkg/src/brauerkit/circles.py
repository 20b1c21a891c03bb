"""Circles of rational curves, bundles given by gluing data, and universal curves.

Orientation: node ``i`` glues ``infinity`` of component ``i-1`` to ``0`` of
component ``i`` (indices mod the length).  A rank ``r`` bundle on a Galois
circle for ``K/k`` is ``K^r`` with a sigma-semilinear gluing map
``Lambda(w) = M sigma(w)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from . import linalg as la
from .algebra import StructureConstantAlgebra
from .cyclic import CyclicBrauerClass
from .errors import DescriptorMismatch, InternalError, ValidationError
from .fields import hilbert90_witness


@dataclass(frozen=True)
class SplitCircle:
    """``C(m, k)``: a cycle of ``m`` copies of ``P^1`` over ``k``; ``m = 1`` is the nodal cubic."""

    m: int
    field: object

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError("a circle needs at least one component")


@dataclass(frozen=True)
class GaloisCircle:
    """``C(K/k)``: ``m = [K:k]`` components permuted cyclically by sigma."""

    ext: object

    def __post_init__(self):
        if not getattr(self.ext, "is_cyclic", False):
            raise DescriptorMismatch("a Galois circle needs a cyclic extension")

    @property
    def m(self) -> int:
        return self.ext.degree

    @property
    def field(self):
        return self.ext.base


class SplitLineBundle:
    """Degree-0 line bundle on ``C(m, k)`` with ``lambda(e_i) = lambda_i e_{i+1}``."""

    def __init__(self, circle: SplitCircle, lambdas):
        F = circle.field
        lam = tuple(F.coerce(c) for c in lambdas)
        if len(lam) != circle.m:
            raise ValidationError(f"need {circle.m} gluing values, got {len(lam)}")
        if any(c == F.zero for c in lam):
            raise ValidationError("gluing values must be nonzero")
        self.circle = circle
        self.lambdas = lam

    @property
    def field(self):
        return self.circle.field

    def trivializing_section(self):
        """``alpha`` with ``alpha_0 = 1``, ``alpha_{i+1} = lambda_i alpha_i``, if it closes up."""
        F = self.field
        alpha = [F.one]
        for lam in self.lambdas[:-1]:
            alpha.append(F.mul(lam, alpha[-1]))
        if F.mul(self.lambdas[-1], alpha[-1]) != alpha[0]:
            return None
        return tuple(alpha)


class GaloisLineBundle:
    """Line bundle on ``C(K/k)`` determined by ``lambda(1) in K*``."""

    def __init__(self, circle: GaloisCircle, lambda1):
        K = circle.ext
        lam = K.coerce(lambda1)
        if lam == K.zero:
            raise ValidationError("lambda(1) must be nonzero")
        self.circle = circle
        self.lambda1 = lam


@dataclass
class Triviality:
    invariant: object
    trivial: bool
    witness: object = None


def c1_split(L: SplitLineBundle) -> Triviality:
    """``prod lambda_i``; the bundle is trivial iff it equals 1."""
    F = L.field
    c = F.prod(L.lambdas)
    alpha = L.trivializing_section()
    if (alpha is not None) != (c == F.one):
        raise InternalError("section recurrence disagrees with the product of gluing values")
    return Triviality(c, c == F.one, alpha)


def galois_class(L: GaloisLineBundle) -> Triviality:
    """``norm(lambda(1))``; trivial iff 1, witnessed by ``f`` with ``lambda(1) = f/sigma(f)``."""
    K = L.circle.ext
    c = K.norm(L.lambda1)
    if c != K.base.one:
        return Triviality(c, False)
    f = hilbert90_witness(K, L.lambda1)
    return Triviality(c, True, f)


def pullback(L: GaloisLineBundle) -> SplitLineBundle:
    """Base change to ``K``: gluing values ``sigma^i(lambda(1))``."""
    K = L.circle.ext
    return SplitLineBundle(SplitCircle(K.degree, K), K.conjugates(L.lambda1))


# -- higher rank ------------------------------------------------------------------

class GluedBundle:
    """Rank ``r`` bundle on a Galois circle with gluing ``w -> M sigma(w)``."""

    def __init__(self, circle: GaloisCircle, matrix):
        K = circle.ext
        M = [[K.coerce(c) for c in row] for row in matrix]
        r = len(M)
        if r == 0 or any(len(row) != r for row in M):
            raise ValidationError("gluing matrix must be square")
        if la.rank(K, M) != r:
            raise ValidationError("gluing map must be invertible")
        self.circle = circle
        self.matrix = M
        self.rank = r

    def apply(self, w):
        K = self.circle.ext
        return la.matvec(K, self.matrix, [K.sigma(x) for x in w])

    def monodromy(self):
        """``M sigma(M) ... sigma^{m-1}(M)``: the K-linear map ``Lambda^m``."""
        K = self.circle.ext
        T = la.identity(K, self.rank)
        S = self.matrix
        for _ in range(K.degree):
            T = la.matmul(K, T, S)
            S = [[K.sigma(c) for c in row] for row in S]
        return T

    def base_change_summands(self, candidates):
        """Eigenspace dimensions of the monodromy for the given candidate values.

        Over ``K`` the circle splits into ``m`` components and the bundle has
        monodromy ``T``; it is a direct sum of line bundles with ``c_1`` equal to
        the candidates exactly when these dimensions add up to the rank.
        """
        K = self.circle.ext
        T = self.monodromy()
        out = {}
        for c in candidates:
            if c in out:
                continue
            shifted = [[K.sub(T[i][j], c) if i == j else T[i][j] for j in range(self.rank)] for i in range(self.rank)]
            out[c] = len(la.kernel(K, shifted, self.rank))
        return out


@dataclass
class PushforwardResult:
    bundle: GluedBundle
    product: object  # prod lambda_i in K
    summands: dict  # eigenvalue -> multiplicity of the base-changed monodromy
    decomposes: bool
    geometrically_split: bool


def pushforward(L: SplitLineBundle, ext=None) -> PushforwardResult:
    """Push a line bundle on ``C(m, K)`` down to the Galois circle ``C(K/k)``.

    Gluing: ``Lambda(w)_{i+1} = sigma^{i+1}(lambda_i) sigma(w_i)``.  The base
    change then has monodromy ``diag(sigma^i(prod lambda))``, so it splits as
    the sum of the conjugate line bundles, and it is geometrically split iff
    ``prod lambda`` lies in ``k``.
    """
    K = ext if ext is not None else L.field
    if not getattr(K, "is_cyclic", False) or L.field != K:
        raise DescriptorMismatch("pushforward needs a bundle over a cyclic extension K")
    m = K.degree
    if L.circle.m != m:
        raise ValidationError(f"circle length {L.circle.m} does not match [K:k] = {m}")
    M = la.zeros(K, m, m)
    for i, lam in enumerate(L.lambdas):
        M[(i + 1) % m][i] = K.sigma_pow(lam, i + 1)
    B = GluedBundle(GaloisCircle(K), M)
    c = K.prod(L.lambdas)
    conj = K.conjugates(c)
    summands = B.base_change_summands(conj)
    decomposes = sum(summands.values()) == m and all(
        summands[x] == conj.count(x) for x in summands)
    if not decomposes:
        raise InternalError("base change of the pushforward is not the sum of the conjugate bundles")
    return PushforwardResult(B, c, summands, decomposes, K.in_base(c))


def global_end_algebra(B: GluedBundle) -> StructureConstantAlgebra:
    """``{Phi in M_r(K) : Phi M = M sigma(Phi)}`` as an algebra over ``k``.

    Solved as a linear system in the ``r^2 m`` k-coordinates of ``Phi``; the
    structure constants come from expressing products in the solution basis.
    """
    K = B.circle.ext
    k = K.base
    r, m = B.rank, K.degree
    M = B.matrix
    xs = K.basis()

    def unknown(a, b, j):
        P = la.zeros(K, r, r)
        P[a][b] = xs[j]
        return P

    def flatten(P):
        return [c for row in P for x in row for c in K.to_coords(x)]

    cols = []
    for a in range(r):
        for b in range(r):
            for j in range(m):
                P = unknown(a, b, j)
                sP = [[K.sigma(x) for x in row] for row in P]
                D = [[K.sub(u, v) for u, v in zip(r1, r2)]
                     for r1, r2 in zip(la.matmul(K, P, M), la.matmul(K, M, sP))]
                cols.append(flatten(D))
    system = la.transpose(cols)
    sols = la.kernel(k, system, r * r * m)
    if not sols:
        raise InternalError("the identity must commute with the gluing map")

    def to_matrix(v):
        P = la.zeros(K, r, r)
        idx = 0
        for a in range(r):
            for b in range(r):
                P[a][b] = K.from_coords(tuple(v[idx:idx + m]))
                idx += m
        return P

    mats = [to_matrix(v) for v in sols]
    d = len(mats)
    basis_cols = la.transpose([list(v) for v in sols])

    def coords_of(P):
        x = la.solve(k, basis_cols, flatten(P))
        if x is None:
            raise InternalError("endomorphism algebra is not closed under products")
        return x

    table = [[coords_of(la.matmul(K, mats[i], mats[j])) for j in range(d)] for i in range(d)]
    unit = coords_of(la.identity(K, r))
    A = StructureConstantAlgebra(k, table, unit, [f"phi{i}" for i in range(d)])
    A.matrices = mats
    return A


def class_of_circle_bundle(L: SplitLineBundle, ext=None) -> CyclicBrauerClass:
    """``(K/k, prod lambda_i)`` for a bundle whose product lies in ``k``."""
    K = ext if ext is not None else L.field
    if not getattr(K, "is_cyclic", False) or L.field != K:
        raise DescriptorMismatch("bundle must be over the cyclic extension K")
    c = K.prod(L.lambdas)
    if not K.in_base(c):
        raise ValidationError(f"prod lambda = {K.format(c)} is not in {K.base.name}")
    return CyclicBrauerClass(K, K.project(c))


# -- Abel-style invariants -----------------------------------------------------------

def _check_divisor(F, zeros, poles):
    if len(zeros) != len(poles):
        raise ValidationError("need zero and pole lists for every component")
    for j, (a, c) in enumerate(zip(zeros, poles)):
        if len(a) != len(c):
            raise ValidationError(f"component {j} has {len(a)} zeros but {len(c)} poles")
        if any(x == F.zero for x in list(a) + list(c)):
            raise ValidationError("points must avoid the nodes 0 and infinity")


def abel_invariant(circle, zeros, poles):
    """``prod c / prod a`` for zeros ``a`` and poles ``c``.

    Split circle: ``zeros[j]``, ``poles[j]`` list the points on component ``j``.
    Galois circle: the lists describe component ``0`` (points in ``K``); the
    other components carry the conjugates, and the invariant is
    ``norm(prod c / prod a)``.
    """
    if isinstance(circle, GaloisCircle):
        K = circle.ext
        zs = [K.coerce(x) for x in zeros]
        ps = [K.coerce(x) for x in poles]
        _check_divisor(K, [zs], [ps])
        return K.norm(K.div(K.prod(ps), K.prod(zs)))
    F = circle.field
    zs = [[F.coerce(x) for x in comp] for comp in zeros]
    ps = [[F.coerce(x) for x in comp] for comp in poles]
    if len(zs) != circle.m:
        raise ValidationError(f"need data for {circle.m} components")
    _check_divisor(F, zs, ps)
    num = F.prod(x for comp in ps for x in comp)
    den = F.prod(x for comp in zs for x in comp)
    return F.div(num, den)


def section_with_divisor(circle: SplitCircle, zeros, poles):
    """Scalars ``b_j`` so that ``f_j = b_j prod(z - a)/prod(z - c)`` glue, or ``None``.

    Gluing ``f_{j-1}(infinity) = f_j(0)`` reads ``b_{j-1} = b_j prod a_j / prod c_j``.
    """
    F = circle.field
    inv = abel_invariant(circle, zeros, poles)
    zeros = [[F.coerce(x) for x in comp] for comp in zeros]
    poles = [[F.coerce(x) for x in comp] for comp in poles]
    b = [F.one]
    for j in range(1, circle.m):
        ratio = F.div(F.prod(poles[j]), F.prod(zeros[j]))
        b.append(F.mul(b[-1], ratio))
    closes = b[-1] == F.mul(b[0], F.div(F.prod(zeros[0]), F.prod(poles[0])))
    if closes != (inv == F.one):
        raise InternalError("gluing recurrence disagrees with the invariant")
    return tuple(b) if closes else None


# -- universal curves --------------------------------------------------------------------

@dataclass
class CurveGraph:
    """Nodes are ``Gamma = G``; each component ``C(gamma, g)`` joins ``gamma`` to ``g gamma``."""

    table: list
    gens: tuple
    nodes: list
    components: list  # (gamma, g, gamma', orbit label)
    orbits: dict  # label -> list of component indices

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def component_count(self) -> int:
        return len(self.components)

    def adjacency(self):
        out = {v: [] for v in self.nodes}
        for idx, (s, g, t, _) in enumerate(self.components):
            out[s].append((idx, "0"))
            out[t].append((idx, "inf"))
        return out

    def is_connected(self) -> bool:
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        nbrs = {v: set() for v in self.nodes}
        for s, _, t, _ in self.components:
            nbrs[s].add(t)
            nbrs[t].add(s)
        while stack:
            v = stack.pop()
            for w in nbrs[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == len(self.nodes)


def _identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise ValidationError("table has no identity element")


def _check_group(table):
    n = len(table)
    if any(len(row) != n or sorted(row) != list(range(n)) for row in table):
        raise ValidationError("multiplication table must be a Latin square on 0..n-1")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValidationError("multiplication table is not associative")
    e = _identity(table)
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    return e, inv


def cyclic_group(n: int) -> list:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group(n: int):
    """Multiplication table of ``S_n`` (composition ``(p q)(x) = p(q(x))``) and its elements."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in elems] for p in elems]
    return table, elems


def transpositions(elems) -> list[int]:
    return [i for i, p in enumerate(elems) if sum(1 for x, y in enumerate(p) if x != y) == 2]


def build_universal_curve(table, gens) -> CurveGraph:
    """Combinatorial universal curve for a group and a conjugation-invariant generating set."""
    e, inv = _check_group(table)
    n = len(table)
    gens = tuple(sorted(set(gens)))
    if not gens or any(not 0 <= g < n for g in gens):
        raise ValidationError("generating set must be a nonempty set of element indices")
    for g in gens:
        for h in range(n):
            if table[table[h][g]][inv[h]] not in gens:
                raise ValidationError("generating set is not conjugation invariant")
    reach = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = table[g][x]
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    if len(reach) != n:
        raise ValidationError("set does not generate the group")
    nodes = list(range(n))
    comps = []
    orbits = {}
    for gamma in nodes:
        for g in gens:
            label = table[table[inv[gamma]][g]][gamma]  # gamma^-1 g gamma
            comps.append((gamma, g, table[g][gamma], label))
    for idx, c in enumerate(comps):
        orbits.setdefault(c[3], []).append(idx)
    C = CurveGraph(table, gens, nodes, comps, dict(sorted(orbits.items())))
    check_universal_curve(C)
    return C


def check_universal_curve(C: CurveGraph) -> dict:
    """Verify the combinatorial properties of the construction; returns the counts."""
    table = C.table
    n = len(table)
    k = len(C.gens)
    pos = {(s, g): i for i, (s, g, _, _) in enumerate(C.components)}
    # G acts on components by h(gamma, g gamma) = (h gamma, h g h^-1 (h gamma))
    _, inv = _check_group(table)
    for h in range(n):
        for s, g, t, label in C.components:
            g2 = table[table[h][g]][inv[h]]
            s2 = table[h][s]
            img = C.components[pos[(s2, g2)]]
            if img[2] != table[h][t] or img[3] != label:
                raise InternalError("group action does not preserve the component set")
    if not C.is_connected():
        raise InternalError("curve is not connected")
    if C.node_count != n or C.component_count != n * k:
        raise InternalError("wrong node or component count")
    if len(C.orbits) != k:
        raise InternalError("wrong number of component orbits")
    for label, idxs in C.orbits.items():
        # free and transitive: the G-images of one component are all distinct and fill the orbit
        s, g, _, _ = C.components[idxs[0]]
        images = {pos[(table[h][s], table[table[h][g]][inv[h]])] for h in range(n)}
        if images != set(idxs) or len(idxs) != n:
            raise InternalError("component orbit is not a principal homogeneous space")
    adj = C.adjacency()
    if any(len(v) != 2 * k for v in adj.values()):
        raise InternalError("each node must meet 2|g| branches")
    for s, g, t, _ in C.components:
        if t != table[g][s]:
            raise InternalError("component endpoints are wrong")
    # nodes form one free orbit under left multiplication
    if any(len({table[h][v] for h in range(n)}) != n for v in C.nodes):
        raise InternalError("nodes are not a principal homogeneous space")
    return {"nodes": n, "components": n * k, "orbits": k, "branches_per_node": 2 * k}
