"""Univariate polynomials over a field.

A polynomial is a tuple of raw field values, constant term first, with no
trailing zeros; ``()`` is the zero polynomial.
"""
from __future__ import annotations

from itertools import product

from ..errors import ValidationError


def trim(F, coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == F.zero:
        coeffs.pop()
    return tuple(coeffs)


def deg(f) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(f) - 1


def const(F, c) -> tuple:
    return () if c == F.zero else (c,)


def monomial(F, c, n: int) -> tuple:
    if c == F.zero:
        return ()
    return (F.zero,) * n + (c,)


def add(F, f, g) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F, f) -> tuple:
    return tuple(F.neg(c) for c in f)


def sub(F, f, g) -> tuple:
    return add(F, f, neg(F, g))


def scale(F, c, f) -> tuple:
    if c == F.zero:
        return ()
    return tuple(F.mul(c, a) for a in f)


def mul(F, f, g) -> tuple:
    if not f or not g:
        return ()
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == F.zero:
            continue
        for j, b in enumerate(g):
            if b != F.zero:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def divmod_(F, f, g) -> tuple[tuple, tuple]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lc_inv = F.inv(g[-1])
    q = [F.zero] * max(len(f) - dg, 0)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = r[i + dg]
        if c == F.zero:
            continue
        c = F.mul(c, lc_inv)
        q[i] = c
        for j, b in enumerate(g):
            r[i + j] = F.sub(r[i + j], F.mul(c, b))
    return trim(F, q), trim(F, r[:dg] if dg else [])


def rem(F, f, g) -> tuple:
    return divmod_(F, f, g)[1]


def monic(F, f) -> tuple:
    if not f:
        return ()
    if f[-1] == F.one:
        return f
    return scale(F, F.inv(f[-1]), f)


def gcd(F, f, g) -> tuple:
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return ``(d, s, t)`` with ``s*f + t*g = d`` and ``d`` monic."""
    r0, r1 = f, g
    s0, s1 = const(F, F.one), ()
    t0, t1 = (), const(F, F.one)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return scale(F, c, r0), scale(F, c, s0), scale(F, c, t0)


def evaluate(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def compose(F, f, g) -> tuple:
    """``f(g(t))``."""
    acc: tuple = ()
    for c in reversed(f):
        acc = add(F, mul(F, acc, g), const(F, c))
    return acc


def power(F, f, e: int) -> tuple:
    result = const(F, F.one)
    while e:
        if e & 1:
            result = mul(F, result, f)
        e >>= 1
        if e:
            f = mul(F, f, f)
    return result


def powmod(F, f, e: int, m) -> tuple:
    result = const(F, F.one)
    f = rem(F, f, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, f), m)
        e >>= 1
        if e:
            f = rem(F, mul(F, f, f), m)
    return result


def derivative(F, f) -> tuple:
    return trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def monic_polys(F, degree: int):
    """All monic polynomials of exactly ``degree`` over a finite field.

    Ordered lexicographically on the coefficient tuple, constant first and
    by the field's element order.
    """
    elems = list(F.elements())
    # product varies the last slot fastest, so c0 is the most significant
    for head in product(elems, repeat=degree):
        yield head + (F.one,)


def roots(F, f) -> list:
    """Roots of ``f`` in a finite field by exhaustive evaluation."""
    if not f:
        raise ValidationError("the zero polynomial has every element as a root")
    return [x for x in F.elements() if evaluate(F, f, x) == F.zero]


def fmt(F, f, var: str = "t") -> str:
    if not f:
        return "0"
    terms = []
    for i, c in enumerate(f):
        if c == F.zero:
            continue
        cs = F.format(c)
        atomic = all(ch.isalnum() or ch == "/" for ch in cs) and not cs.startswith("-")
        if not atomic:
            cs = f"({cs})"
        if i == 0:
            terms.append(F.format(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == F.one else f"{cs}*{mono}")
    return "+".join(terms)
