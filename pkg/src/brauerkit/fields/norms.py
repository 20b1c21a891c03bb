"""Norms, traces, norm equations and constructive Hilbert 90 for cyclic extensions."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from ..errors import DescriptorMismatch, InternalError, ValidationError
from ..verdict import Verdict
from . import poly
from .extension import Extension, imaginary_quadratic_discriminant
from .finite import FiniteExtension
from .funcfield import ConstantFieldExtension
from .irreducible import factor_monic
from .rationals import Rationals

DEFAULT_BOUND = 10
RATIONAL_SEARCH_BUDGET = 250_000


def _require_cyclic(ext):
    if not getattr(ext, "is_cyclic", False):
        raise DescriptorMismatch(f"{ext!r} is not a cyclic extension descriptor")


def norm(ext, x):
    """``prod_{i<m} sigma^i(x)``, a value of the base field."""
    _require_cyclic(ext)
    return ext.norm(x)


def trace(ext, x):
    """``sum_{i<m} sigma^i(x)``, a value of the base field."""
    _require_cyclic(ext)
    return ext.trace(x)


def rationals_by_height(H: int) -> list[Fraction]:
    """Rationals of height at most ``H``, ordered by (height, |value|, sign)."""
    out = {Fraction(0)}
    for d in range(1, H + 1):
        for n in range(0, H + 1):
            if gcd(n, d) == 1:
                out.add(Fraction(n, d))
                out.add(Fraction(-n, d))
    return sorted(out, key=lambda r: (Rationals.height(r), abs(r), r < 0))


def elements_by_height(ext: Extension, bound: int):
    """Extension elements over Q in order of increasing height, up to ``bound``."""
    levels = rationals_by_height(bound)
    for H in range(0, bound + 1):
        small = [r for r in levels if Rationals.height(r) <= H]
        for coords in product(small, repeat=ext.degree):
            if max(Rationals.height(c) for c in coords) == H:
                yield coords


def norm_membership(ext, a, bound: int = DEFAULT_BOUND) -> Verdict:
    """Decide whether ``a`` (in the base) is a norm from ``ext``.

    PROVED carries ``f`` with ``norm(f) == a``.  REFUTED only comes with one of
    three certificates: exhaustive enumeration (finite base), a degree count
    (constant-field extensions of ``F_q(t)``), or a sign argument (imaginary
    quadratic fields over Q).  Everything else is UNKNOWN.
    """
    _require_cyclic(ext)
    k = ext.base
    k.check(a)
    if a == k.zero:
        raise ValidationError("0 is never a norm of a unit")
    if a == k.one:
        return Verdict.proved(ext.one, "norm witness")
    if isinstance(ext, FiniteExtension):
        return _finite_membership(ext, a)
    if isinstance(ext, ConstantFieldExtension):
        return _constant_extension_membership(ext, a, bound)
    if isinstance(ext, Extension) and isinstance(k, Rationals):
        if imaginary_quadratic_discriminant(ext) is not None and a < 0:
            return Verdict.refuted({"a": a, "reason": "norm form is positive definite"}, "sign certificate")
        return _rational_search(ext, a, bound)
    return Verdict.unknown(bound)


def _finite_membership(ext: FiniteExtension, a) -> Verdict:
    N = ext.order - 1
    s = N // (ext.q - 1)
    la = ext.log(ext.embed(a))
    if la % s == 0:
        f = ext.tables[0][la // s]
        if ext.norm(f) != a:
            raise InternalError("logarithmic norm preimage failed to verify")
        return Verdict.proved(f, "norm witness")
    for f in ext.nonzero_elements():
        if ext.norm(f) == a:
            return Verdict.proved(f, "norm witness")
    return Verdict.refuted({"searched": N}, "exhaustive enumeration")


def _rational_search(ext: Extension, a, bound: int) -> Verdict:
    for i, coords in enumerate(elements_by_height(ext, bound)):
        if i >= RATIONAL_SEARCH_BUDGET:
            break
        if ext.norm(coords) == a:
            return Verdict.proved(coords, "norm witness")
    return Verdict.unknown(bound)


def _constant_extension_membership(ext: ConstantFieldExtension, a, bound: int) -> Verdict:
    m = ext.degree
    d = ext.base.degree(a)
    if d % m:
        return Verdict.refuted({"degree": d, "m": m}, "degree certificate")
    f = _constant_extension_witness(ext, a, bound)
    if f is None:
        return Verdict.unknown(bound)
    return Verdict.proved(f, "norm witness")


def _constant_extension_witness(ext: ConstantFieldExtension, a, bound: int):
    """Build a norm preimage from the factorization of ``a`` over ``F_q``.

    A monic irreducible ``P`` of degree ``d`` splits over ``F_{q^m}`` into
    ``g = gcd(d, m)`` conjugate factors ``Q`` with ``norm(Q) = P^(m/g)``.
    """
    B = ext.constant_base
    K0 = ext.constant_field
    m = ext.degree
    num, den = a
    lead = num[-1]
    G_num, G_den = (K0.one,), (K0.one,)
    for part, sign in ((num, 1), (den, -1)):
        factors = factor_monic(B, part, max_degree=bound)
        if factors is None:
            return None
        for P, e in factors:
            g = gcd(poly.deg(P), m)
            if e % (m // g):
                return None
            Q = _factor_over_extension(K0, P, poly.deg(P) // g, bound)
            if Q is None:
                return None
            Qe = poly.power(K0, Q, e // (m // g))
            if sign > 0:
                G_num = poly.mul(K0, G_num, Qe)
            else:
                G_den = poly.mul(K0, G_den, Qe)
    c = _finite_membership(K0, lead)
    if not c.is_proved:
        return None
    G_num = poly.scale(K0, c.payload, G_num)
    # clear the F_{q^m}-denominator using its conjugates
    conj = (K0.one,)
    for i in range(1, m):
        conj = poly.mul(K0, conj, tuple(K0.sigma_pow(x, i) for x in G_den))
    D = poly.mul(K0, G_den, conj)
    if any(not K0.in_base(x) for x in D):
        raise InternalError("norm of a polynomial left F_q[t]")
    f = ext.unsplit(poly.mul(K0, G_num, conj), tuple(K0.project(x) for x in D))
    if ext.norm(f) != a:
        raise InternalError("constructed norm witness failed to verify")
    return f


def _factor_over_extension(K0, P, degree: int, bound: int):
    Pk = tuple(K0.embed(c) for c in P)
    if degree == poly.deg(P):
        return Pk
    if K0.order ** degree > 10 ** 5 or degree > bound:
        return None
    for Q in poly.monic_polys(K0, degree):
        if not poly.rem(K0, Pk, Q):
            return Q
    return None


def hilbert90_witness(ext, lam):
    """Nonzero ``f`` with ``lam = f / sigma(f)``, for ``lam`` of norm 1.

    Uses the resolvent ``f = sum_i (prod_{j<i} sigma^j(lam)) sigma^i(c)`` for
    ``c`` running over the standard basis of the extension.
    """
    _require_cyclic(ext)
    ext.check(lam)
    if lam == ext.zero or ext.norm(lam) != ext.base.one:
        raise ValidationError("Hilbert 90 needs an element of norm 1")
    if lam == ext.one:
        return ext.one
    m = ext.degree
    partial = [ext.one]
    for i in range(1, m):
        partial.append(ext.mul(partial[-1], ext.sigma_pow(lam, i - 1)))
    for c in ext.basis():
        conj = ext.conjugates(c)
        f = ext.sum(ext.mul(partial[i], conj[i]) for i in range(m))
        if f != ext.zero:
            if ext.mul(lam, ext.sigma(f)) != f:
                raise InternalError("Hilbert 90 resolvent failed to verify")
            return f
    raise InternalError("every resolvent vanished; the basis must span the extension")


def nth_root(F, a, r: int):
    """Some ``b`` in ``F`` with ``b^r == a``, or ``None`` if there is none.

    Supported over Q, finite fields, and ``F_q(t)``.
    """
    from sympy import integer_nthroot

    from ..errors import UnsupportedError
    from .funcfield import RationalFunctions
    if r < 1:
        raise ValidationError("root order must be positive")
    if r == 1 or a == F.zero or a == F.one:
        return a
    if isinstance(F, Rationals):
        n, d = a.numerator, a.denominator
        if n < 0 and r % 2 == 0:
            return None
        rn, exact_n = integer_nthroot(abs(n), r)
        rd, exact_d = integer_nthroot(d, r)
        if not (exact_n and exact_d):
            return None
        return Fraction(-rn if n < 0 else rn, rd)
    if F.is_finite:
        for b in F.nonzero_elements():
            if F.pow(b, r) == a:
                return b
        return None
    if isinstance(F, RationalFunctions) and F.base.is_finite:
        B = F.base
        num, den = a
        c = nth_root(B, num[-1], r)
        if c is None:
            return None
        parts = []
        for f in (num, den):
            acc = (B.one,)
            factors = factor_monic(B, f)
            if factors is None:
                raise UnsupportedError("polynomial too large to factor")
            for P, e in factors:
                if e % r:
                    return None
                acc = poly.mul(B, acc, poly.power(B, P, e // r))
            parts.append(acc)
        return F.make(poly.scale(B, c, parts[0]), parts[1])
    raise UnsupportedError(f"roots in {F.name} are not implemented")
