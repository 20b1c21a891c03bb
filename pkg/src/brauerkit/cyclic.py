"""Cyclic algebras (K/k, sigma, a) and arithmetic of their Brauer classes.

Basis convention: ``x^j u^i`` sits at index ``i*m + j`` (``i`` major), with
``u x = sigma(x) u`` and ``u^m = a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations

from sympy import divisors, factorint

from . import linalg as la
from .algebra import StructureConstantAlgebra, Subspace, right_ideal
from .errors import DescriptorMismatch, InternalError, ValidationError
from .fields import Rationals, norm_membership, nth_root
from .verdict import Verdict

SYMBOLIC_NRD_MAX_DEGREE = 4
FULL_VERIFY_MAX_DIM = 9


def _check_class_data(ext, a):
    if not getattr(ext, "is_cyclic", False):
        raise DescriptorMismatch(f"{ext!r} is not a cyclic extension")
    a = ext.base.coerce(a)
    if a == ext.base.zero:
        raise ValidationError("a must be nonzero")
    return a


# -- reduced norm forms ------------------------------------------------------

class ReducedNormForm:
    """Homogeneous form given as ``{exponent tuple: coefficient}`` over ``field``."""

    def __init__(self, field, nvars: int, terms: dict):
        self.field = field
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c != field.zero}
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise InternalError("reduced norm form is not homogeneous")
        self.degree = degs.pop() if degs else 0
        self._compiled = [(c, [(i, k) for i, k in enumerate(e) if k]) for e, c in sorted(self.terms.items())]

    @classmethod
    def diagonal(cls, field, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 2
            terms[tuple(e)] = c
        return cls(field, n, terms)

    def value(self, x):
        F = self.field
        total = F.zero
        for c, mono in self._compiled:
            t = c
            for i, k in mono:
                xi = x[i]
                if xi == F.zero:
                    t = F.zero
                    break
                t = F.mul(t, F.pow(xi, k) if k > 1 else xi)
            if t != F.zero:
                total = F.add(total, t)
        return total

    def gram_matrix(self):
        """Symmetric matrix of a quadratic form (characteristic not 2)."""
        F = self.field
        if self.degree != 2:
            raise ValidationError("Gram matrix needs a quadratic form")
        half = F.inv(F.from_int(2))
        S = la.zeros(F, self.nvars, self.nvars)
        for e, c in self.terms.items():
            idx = [i for i, k in enumerate(e) for _ in range(k)]
            i, j = idx
            if i == j:
                S[i][i] = F.add(S[i][i], c)
            else:
                h = F.mul(c, half)
                S[i][j] = F.add(S[i][j], h)
                S[j][i] = F.add(S[j][i], h)
        return S

    def definiteness_certificate(self):
        """Leading principal minors when the form is positive definite over Q."""
        if self.degree != 2 or not isinstance(self.field, Rationals):
            return None
        S = self.gram_matrix()
        minors = [la.det(self.field, [row[:k] for row in S[:k]]) for k in range(1, self.nvars + 1)]
        if all(d > 0 for d in minors):
            return {"form": self.format(), "leading_minors": minors}
        return None

    def format(self, names=None) -> str:
        F = self.field
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            s = F.format(c)
            if c == F.one:
                parts.append(mono)
            elif c == F.neg(F.one):
                parts.append(f"-{mono}")
            else:
                parts.append(f"({s})*{mono}" if any(ch in s[1:] for ch in "+-/") else f"{s}*{mono}")
        text = " + ".join(parts) if parts else "0"
        return text.replace("+ -", "- ")

    def to_json(self):
        F = self.field
        return [{"exponents": list(e), "coefficient": F.to_json(c)} for e, c in sorted(self.terms.items())]


QuadraticNormForm = ReducedNormForm.diagonal


# -- construction ------------------------------------------------------------

def basis_names(ext):
    m = ext.degree
    g = ext.gen_name

    def xpow(j):
        return "" if j == 0 else (g if j == 1 else f"{g}^{j}")

    def upow(i):
        return "" if i == 0 else ("u" if i == 1 else f"u^{i}")

    out = []
    for i in range(m):
        for j in range(m):
            s = "*".join(p for p in (xpow(j), upow(i)) if p)
            out.append(s or "1")
    return out


def build_cyclic_algebra(ext, a) -> StructureConstantAlgebra:
    """The algebra generated by ``K`` and ``u`` with ``u x = sigma(x) u``, ``u^m = a``."""
    a = _check_class_data(ext, a)
    k = ext.base
    m = ext.degree
    n = m * m
    xs = ext.basis()
    a_K = ext.embed(a)
    # sigma^i(x^l) for all i, l
    sig = [[ext.sigma_pow(xs[l], i) for l in range(m)] for i in range(m)]
    table = [[None] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            for s in range(m):
                for l in range(m):
                    c = ext.mul(xs[j], sig[i][l])
                    if i + s >= m:
                        c = ext.mul(c, a_K)
                    v = [k.zero] * n
                    off = ((i + s) % m) * m
                    for jj, cc in enumerate(ext.to_coords(c)):
                        v[off + jj] = cc
                    table[i * m + j][s * m + l] = v
    unit = [k.zero] * n
    unit[0] = k.one
    A = StructureConstantAlgebra(k, table, unit, basis_names(ext), check=n <= FULL_VERIFY_MAX_DIM,
                                  trusted=True)
    A.cyclic = (ext, a)
    rep = SplittingRepresentation(ext, a)
    rep.verify_homomorphism(A)
    if m <= SYMBOLIC_NRD_MAX_DEGREE:
        A.nrd = reduced_norm(ext, a)
    return A


class SplittingRepresentation:
    """``x -> diag(x, sigma x, ..., sigma^{m-1} x)``, ``u -> U`` with ``U^m = a``.

    ``U`` has ones on the superdiagonal and ``a`` in the bottom-left corner.
    """

    def __init__(self, ext, a):
        self.ext = ext
        self.a = _check_class_data(ext, a)
        m = ext.degree
        K = ext
        self.U = la.zeros(K, m, m)
        for r in range(m - 1):
            self.U[r][r + 1] = K.one
        self.U[m - 1][0] = K.embed(self.a)
        self.U_pows = [la.identity(K, m)]
        for _ in range(1, m):
            self.U_pows.append(la.matmul(K, self.U_pows[-1], self.U))

    def diag(self, x):
        K = self.ext
        m = K.degree
        D = la.zeros(K, m, m)
        for r, c in enumerate(K.conjugates(x)):
            D[r][r] = c
        return D

    def image(self, coords):
        """Matrix over ``K`` of the algebra element with the given coordinates."""
        K = self.ext
        m = K.degree
        coords = list(coords)
        if len(coords) != m * m:
            raise DescriptorMismatch("coordinate length must be m^2")
        M = la.zeros(K, m, m)
        for i in range(m):
            beta = K.from_coords(tuple(coords[i * m:(i + 1) * m]))
            if beta == K.zero:
                continue
            conj = K.conjugates(beta)
            P = self.U_pows[i]
            for r in range(m):
                for c in range(m):
                    if P[r][c] != K.zero:
                        M[r][c] = K.add(M[r][c], K.mul(conj[r], P[r][c]))
        return M

    def verify_homomorphism(self, A):
        """All basis pairs up to ``FULL_VERIFY_MAX_DIM``, the defining relations above it.

        For large tables built by ``build_cyclic_algebra`` the products are
        ``x_j sigma^i(x_l) u^(i+s)``, so ``U^m = a`` and ``U D(x) = D(sigma x) U``
        suffice; injectivity reduces to the conjugate matrix of the basis.
        """
        K = self.ext
        if A.dim > FULL_VERIFY_MAX_DIM:
            return self._verify_relations(A)
        imgs = [self.image(A.basis_vector(i)) for i in range(A.dim)]
        for i in range(A.dim):
            for j in range(A.dim):
                if la.matmul(K, imgs[i], imgs[j]) != self.image(A.table[i][j]):
                    raise InternalError(f"splitting representation fails on basis pair ({i}, {j})")
        if la.rank(K, [sum(M, []) for M in imgs]) != A.dim:
            raise InternalError("splitting representation is not injective")
        return True


    def _verify_relations(self, A):
        K = self.ext
        m = K.degree
        if A.dim != m * m:
            raise DescriptorMismatch("coordinate length must be m^2")
        Um = la.matmul(K, self.U_pows[-1], self.U)
        aI = la.zeros(K, m, m)
        for r in range(m):
            aI[r][r] = K.embed(self.a)
        if Um != aI:
            raise InternalError("U^m differs from a")
        xs = K.basis()
        for x in xs:
            if la.matmul(K, self.U, self.diag(x)) != la.matmul(K, self.diag(K.sigma(x)), self.U):
                raise InternalError("U does not twist the diagonal by sigma")
        # products with the generators x_l and u, against the images
        imgs = [self.image(A.basis_vector(i)) for i in range(A.dim)]
        for p in range(A.dim):
            for g in list(range(m)) + [m]:
                if la.matmul(K, imgs[p], imgs[g]) != self.image(A.table[p][g]):
                    raise InternalError(f"splitting representation fails on basis pair ({p}, {g})")
        if la.rank(K, [K.conjugates(x) for x in xs]) != m:
            raise InternalError("splitting representation is not injective")
        return True


def splitting_representation(ext, a) -> SplittingRepresentation:
    return SplittingRepresentation(ext, a)


def nrd_value(ext, a, coords):
    """``det`` of the splitting image, as a base-field value."""
    rep = SplittingRepresentation(ext, a)
    return ext.project(la.det(ext, rep.image(coords)))


def reduced_norm(ext, a) -> ReducedNormForm:
    """Symbolic ``Nrd`` on the coordinates ``x_{i*m+j}`` via a Leibniz expansion.

    Each entry of the splitting image is a linear form over ``K``; the
    determinant's coefficients are checked to lie in ``k``.
    """
    a = _check_class_data(ext, a)
    K = ext
    m = K.degree
    if m > SYMBOLIC_NRD_MAX_DEGREE:
        raise ValidationError(f"symbolic reduced norm limited to degree <= {SYMBOLIC_NRD_MAX_DEGREE}")
    n = m * m
    a_K = K.embed(a)
    xs = K.basis()
    conj = [K.conjugates(x) for x in xs]  # conj[j][r] = sigma^r(x^j)

    def entry(r, c):
        i = (c - r) % m
        scale = a_K if r + i >= m else K.one
        return {i * m + j: K.mul(conj[j][r], scale) for j in range(m)}

    total = {}
    for perm in permutations(range(m)):
        sign = _perm_sign(perm)
        terms = {(): K.one if sign > 0 else K.neg(K.one)}
        for r in range(m):
            lin = entry(r, perm[r])
            nxt = {}
            for mono, c in terms.items():
                for var, d in lin.items():
                    key = tuple(sorted(mono + (var,)))
                    nxt[key] = K.add(nxt.get(key, K.zero), K.mul(c, d))
            terms = nxt
        for mono, c in terms.items():
            total[mono] = K.add(total.get(mono, K.zero), c)
    out = {}
    for mono, c in total.items():
        if c == K.zero:
            continue
        e = [0] * n
        for v in mono:
            e[v] += 1
        out[tuple(e)] = K.project(c)
    form = ReducedNormForm(K.base, n, out)
    one = [K.base.zero] * n
    one[0] = K.base.one
    if form.value(one) != K.base.one:
        raise InternalError("Nrd(1) != 1")
    return form


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


# -- Brauer classes ----------------------------------------------------------

@dataclass(frozen=True)
class CyclicBrauerClass:
    """The class of ``(K/k, sigma, a)`` in ``k*/N(K*)``."""

    ext: object
    a: object = dc_field()

    def __post_init__(self):
        object.__setattr__(self, "a", _check_class_data(self.ext, self.a))

    @property
    def degree(self) -> int:
        return self.ext.degree

    def algebra(self) -> StructureConstantAlgebra:
        return build_cyclic_algebra(self.ext, self.a)

    def __mul__(self, other):
        return multiply_classes(self, other)

    def inverse(self):
        return invert_class(self)

    def power(self, e: int):
        return CyclicBrauerClass(self.ext, self.ext.base.pow(self.a, e))

    def format(self) -> str:
        from .fields import extension_name
        return f"({extension_name(self.ext)},{self.ext.base.format(self.a)})"

    def equals(self, other, bound: int = 10) -> Verdict:
        """Whether ``a1/a2`` is a norm (Verdict-valued over infinite fields)."""
        _same_ext(self, other)
        return norm_membership(self.ext, self.ext.base.div(self.a, other.a), bound)


def _same_ext(c1, c2):
    if c1.ext != c2.ext:
        raise DescriptorMismatch("classes over different cyclic extensions are not composable")


def multiply_classes(c1: CyclicBrauerClass, c2: CyclicBrauerClass) -> CyclicBrauerClass:
    _same_ext(c1, c2)
    return CyclicBrauerClass(c1.ext, c1.ext.base.mul(c1.a, c2.a))


def invert_class(c: CyclicBrauerClass) -> CyclicBrauerClass:
    return CyclicBrauerClass(c.ext, c.ext.base.inv(c.a))


def norm_zero_divisor(ext, a, f):
    """Zero divisors from ``a = N(f)``: ``w = f^-1 u`` has ``w^m = 1``.

    Returns ``(A, x, y)`` with ``x = w - 1`` and ``y = 1 + w + ... + w^{m-1}``.
    """
    A = build_cyclic_algebra(ext, a)
    m = ext.degree
    k = ext.base
    finv = ext.inv(f)
    w = [k.zero] * A.dim
    for j, c in enumerate(ext.to_coords(finv)):
        w[m + j] = c  # f^-1 * u
    w = tuple(w)
    x = A.sub(w, A.unit)
    y, p = A.unit, A.unit
    for _ in range(1, m):
        p = A.mul(p, w)
        y = A.add(y, p)
    if A.is_zero(x) or A.is_zero(y) or not A.is_zero(A.mul(x, y)):
        raise InternalError("zero divisor from the norm witness failed to verify")
    return A, x, y


def is_split(c: CyclicBrauerClass, bound: int = 10) -> Verdict:
    """Norm membership of ``a``; PROVED also exhibits a verified zero divisor."""
    v = norm_membership(c.ext, c.a, bound)
    if not v.is_proved:
        return v
    f = v.payload
    if c.degree == 1:
        return Verdict.proved({"norm_witness": f}, v.kind)
    _, x, y = norm_zero_divisor(c.ext, c.a, f)
    return Verdict.proved({"norm_witness": f, "zero_divisor": {"x": x, "y": y}}, v.kind)


def period(c: CyclicBrauerClass, bound: int = 10) -> Verdict:
    """Least ``d`` with ``a^d`` a norm; it divides ``m``.

    PROVED(d) needs every smaller divisor of ``m`` refuted.  Otherwise the
    payload of UNKNOWN carries ``lower`` and ``upper`` (a divisor of ``m``
    known to be a multiple of the period).
    """
    m = c.degree
    k = c.ext.base
    status = {}
    kinds = []
    for d in divisors(m):
        v = norm_membership(c.ext, k.pow(c.a, d), bound)
        status[d] = v
        if v.is_proved:
            break
        if v.is_refuted:
            kinds.append(v.kind)
    proved = [d for d, v in status.items() if v.is_proved]
    upper = proved[0] if proved else m
    if proved and all(status[d].is_refuted for d in divisors(upper) if d != upper):
        kind = kinds[0] if kinds and len(set(kinds)) == 1 else (", ".join(sorted(set(kinds))) or status[upper].kind)
        if m % upper:
            raise InternalError("period does not divide the degree")
        return Verdict.proved(upper, kind)
    refuted = {d for d, v in status.items() if v.is_refuted}
    open_ = [d for d in divisors(upper) if d not in refuted]
    return Verdict.unknown(bound, {"lower": open_[0], "upper": upper})


@dataclass(frozen=True)
class IndexBounds:
    lower: int
    upper: int
    period: Verdict
    ideals: tuple = ()

    @property
    def decisive(self) -> bool:
        return self.lower == self.upper

    def as_tuple(self):
        return (self.lower, self.upper)


def index_bounds(c: CyclicBrauerClass, bound: int = 10) -> IndexBounds:
    """Bounds ``lower <= ind <= upper``.

    ``lower`` is the period when decisive.  ``upper`` starts at ``m`` and
    drops to ``gcd(upper, s)`` for every right ideal of dimension ``m*s``
    exhibited explicitly: from a norm witness of ``a``, or from an ``r``-th
    root ``b`` of ``a`` in ``k`` (``r*s = m``), where ``z = b^-1 u^s`` has
    ``z^r = 1``.
    """
    from math import gcd
    m = c.degree
    k = c.ext.base
    per = period(c, bound)
    lower = per.payload if per.is_proved else per.payload["lower"]
    upper = m
    found = []
    if m > 1:
        A = None
        split = norm_membership(c.ext, c.a, bound)
        if split.is_proved:
            A, _, y = norm_zero_divisor(c.ext, c.a, split.payload)
            found.append(_record_ideal(A, y, m))
        else:
            for s in divisors(m)[1:-1]:
                r = m // s
                b = nth_root(k, c.a, r)
                if b is None:
                    continue
                A = A or build_cyclic_algebra(c.ext, c.a)
                y = _power_sum(A, _scaled_u_power(c.ext, A, k.inv(b), s), r)
                found.append(_record_ideal(A, y, m))
        for dim, _ in found:
            upper = gcd(upper, dim // m)
    else:
        upper = 1
    if upper % lower or m % upper:
        raise InternalError(f"inconsistent index bounds ({lower}, {upper}) for degree {m}")
    return IndexBounds(lower, upper, per, tuple(found))


def _scaled_u_power(ext, A, c, s):
    m = ext.degree
    z = [ext.base.zero] * A.dim
    z[s * m] = c
    return tuple(z)


def _power_sum(A, z, r):
    y, p = A.unit, A.unit
    for _ in range(1, r):
        p = A.mul(p, z)
        y = A.add(y, p)
    if not A.is_zero(A.sub(A.mul(p, z), A.unit)):
        raise InternalError("z^r != 1 for the root-of-a element")
    return y


def _record_ideal(A, y, m):
    I = right_ideal(A, y)
    if I.dim % m or I.dim == 0 or I.dim == A.dim:
        raise InternalError(f"right ideal of dimension {I.dim} in a degree-{m} algebra")
    return (I.dim, y)


def primary_decomposition(c: CyclicBrauerClass, bound: int = 10) -> list[CyclicBrauerClass]:
    """Parts ``(ext, a^(e_i a_i))`` with ``a_i = n/p_i^c_i`` and ``sum e_i a_i = 1``.

    Each part's period is recomputed and must equal ``p_i^c_i``.
    """
    per = period(c, bound)
    if not per.is_proved:
        raise ValidationError("primary decomposition needs a decisive period")
    n = per.payload
    if n == 1:
        return []
    fac = factorint(n)
    primes = sorted(fac)
    a_i = [n // p ** fac[p] for p in primes]
    e_i = _bezout(a_i)
    if sum(e * a for e, a in zip(e_i, a_i)) != 1:
        raise InternalError("Bezout coefficients are wrong")
    parts = [c.power(e * a) for e, a in zip(e_i, a_i)]
    for part, p in zip(parts, primes):
        pp = period(part, bound)
        if not (pp.is_proved and pp.payload == p ** fac[p]):
            raise InternalError(f"part for {p} does not have period {p ** fac[p]}")
    prod = parts[0]
    for part in parts[1:]:
        prod = prod * part
    if not prod.equals(c, bound).is_proved:
        raise InternalError("product of primary parts is not the original class")
    return parts


def _bezout(values):
    """Integers ``e`` with ``sum e_i v_i = gcd(values)``."""
    coeffs = [1]
    g = values[0]
    for v in values[1:]:
        d, s, t = _xgcd(g, v)
        coeffs = [s * x for x in coeffs] + [t]
        g = d
    return coeffs


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def curve_constraints(ind: int, degC: int, chi: int) -> bool:
    """Divisibility a curve in a Severi-Brauer variety of index ``ind`` must satisfy."""
    if ind < 1:
        raise ValidationError("index must be positive")
    if ind % 2:
        return degC % ind == 0 and chi % ind == 0
    return (degC + chi) % ind == 0 and chi % (ind // 2) == 0
