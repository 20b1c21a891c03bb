"""Irreducibility tests for univariate polynomials."""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd as igcd, lcm

from sympy import divisors

from ..errors import UnsupportedError, ValidationError
from . import poly

RATIONAL_MAX_DEGREE = 5
FINITE_MAX_DEGREE = 24


def is_irreducible(f, F) -> bool:
    """Decide irreducibility of a monic polynomial ``f`` over ``F``.

    Finite fields: exhaustive trial division by monic polynomials of degree at
    most ``deg f // 2``.  The rationals: rational roots plus a Kronecker search
    for quadratic factors, up to degree ``RATIONAL_MAX_DEGREE``.
    """
    f = poly.trim(F, f)
    if len(f) < 2:
        raise ValidationError("irreducibility needs a polynomial of degree >= 1")
    if f[-1] != F.one:
        raise ValidationError("polynomial must be monic")
    n = poly.deg(f)
    if n == 1:
        return True
    if F.is_finite:
        if n > FINITE_MAX_DEGREE:
            raise UnsupportedError(f"trial division limited to degree {FINITE_MAX_DEGREE}")
        return _finite_trial_division(F, f)
    if F.characteristic == 0 and F.key == ("Q",):
        return _rational_irreducible(f)
    raise UnsupportedError(f"no irreducibility test over {F.name}")


def _finite_trial_division(F, f) -> bool:
    n = poly.deg(f)
    if f[0] == F.zero:
        return False
    for x in F.elements():
        if poly.evaluate(F, f, x) == F.zero:
            return False
    for d in range(2, n // 2 + 1):
        for g in poly.monic_polys(F, d):
            if not poly.rem(F, f, g):
                return False
    return True


def _integer_primitive(f) -> list[int]:
    den = lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = igcd(g, c)
    return [c // g for c in ints]


def _eval_int(coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _rational_irreducible(f) -> bool:
    n = poly.deg(f)
    if n > RATIONAL_MAX_DEGREE:
        raise UnsupportedError(f"rational irreducibility limited to degree {RATIONAL_MAX_DEGREE}")
    ints = _integer_primitive(f)
    a0, an = ints[0], ints[-1]
    if a0 == 0:
        return False
    for p in divisors(abs(a0)):
        for q in divisors(abs(an)):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if _eval_int([Fraction(c) for c in ints], r) == 0:
                    return False
    if n <= 3:
        return True
    return not _has_quadratic_factor(ints)


def _has_quadratic_factor(ints: list[int]) -> bool:
    """Kronecker: a quadratic factor is fixed by its values at three points."""
    points = []
    x = 0
    while len(points) < 3:
        v = _eval_int(ints, x)
        if v != 0:
            points.append((x, v))
        x = -x if x > 0 else -x + 1
    choices = []
    for _, v in points:
        ds = divisors(abs(v))
        choices.append([d for d in ds] + [-d for d in ds])
    from .rationals import QQ
    F = QQ
    target = tuple(Fraction(c) for c in ints)
    for vals in product(*choices):
        # Lagrange interpolation through the three points
        g = ()
        for i, (xi, _) in enumerate(points):
            term = (Fraction(vals[i]),)
            for j, (xj, _) in enumerate(points):
                if i != j:
                    term = poly.mul(F, term, (Fraction(-xj, xi - xj), Fraction(1, xi - xj)))
            g = poly.add(F, g, term)
        if poly.deg(g) != 2:
            continue
        if not poly.rem(F, target, g):
            return True
    return False


def factor_monic(F, f, max_degree: int = FINITE_MAX_DEGREE) -> list[tuple[tuple, int]] | None:
    """Factor a nonzero polynomial over a finite field into monic irreducibles.

    Returns ``[(P, e), ...]`` sorted by (degree, coefficients) or ``None`` if a
    factor of degree above ``max_degree`` would have to be tested.  The leading
    coefficient is not included.
    """
    if not F.is_finite:
        raise UnsupportedError("factorization is implemented over finite fields only")
    rest = poly.monic(F, poly.trim(F, f))
    if not rest:
        raise ValidationError("cannot factor the zero polynomial")
    out = []
    d = 1
    while poly.deg(rest) >= 2 * d:
        if d > max_degree:
            return None
        for g in poly.monic_polys(F, d):
            e = 0
            while True:
                q, r = poly.divmod_(F, rest, g)
                if r:
                    break
                rest, e = q, e + 1
            if e:
                out.append((g, e))
        d += 1
    if poly.deg(rest) >= 1:
        if poly.deg(rest) > max_degree:
            return None
        out.append((rest, 1))
    out.sort(key=lambda pe: (len(pe[0]), pe[0]))
    return out
