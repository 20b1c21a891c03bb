"""Finite fields as towers ``F_q[x]/(f)`` with table-driven arithmetic.

An element of ``F_{q^m}`` over a finite base ``F_q`` is encoded as the integer
``c_0 + c_1 q + ... + c_{m-1} q^{m-1}`` where ``c_j`` are the base-field
encodings of its coordinates.  The same integer is the element's position in
the canonical enumeration order.
"""
from __future__ import annotations

import functools

from sympy import factorint

from ..errors import SizeLimitExceeded, ValidationError
from . import poly
from .base import Field
from .cyclicbase import CyclicExtensionMixin
from .irreducible import is_irreducible
from .prime import PrimeField, prime_field

FINITE_FIELD_LIMIT = 1 << 20

_GEN_NAMES = ("x", "y", "z", "v", "s")


def canonical_modulus(base: Field, degree: int) -> tuple:
    """Lexicographically smallest monic irreducible polynomial of ``degree``.

    Coefficients compare constant term first, field elements by their
    integer encoding.
    """
    if degree < 1:
        raise ValidationError("degree must be positive")
    if degree == 1:
        return (base.zero, base.one)
    for f in poly.monic_polys(base, degree):
        if is_irreducible(f, base):
            return f
    raise AssertionError("irreducible polynomials exist in every degree")


def _pick_gen_name(base: Field) -> str:
    taken = set(base.symbols())
    return next(n for n in _GEN_NAMES if n not in taken)


class FiniteExtension(CyclicExtensionMixin, Field):
    """``F_{q^m}`` over a finite base ``F_q`` with ``sigma(v) = v^q``."""

    zero = 0
    one = 1

    def __init__(self, base: Field, degree: int, modulus=None, gen_name: str | None = None):
        if not base.is_finite:
            raise ValidationError("FiniteExtension needs a finite base field")
        if degree < 1:
            raise ValidationError("degree must be positive")
        q = base.order
        if q ** degree > FINITE_FIELD_LIMIT:
            raise SizeLimitExceeded(f"field of order {q}^{degree} exceeds limit {FINITE_FIELD_LIMIT}")
        if modulus is None:
            modulus = canonical_modulus(base, degree)
        else:
            modulus = poly.trim(base, modulus)
            if poly.deg(modulus) != degree or modulus[-1] != base.one:
                raise ValidationError("modulus must be monic of the stated degree")
            if not is_irreducible(modulus, base):
                raise ValidationError("modulus is reducible")
        self.base = base
        self.degree = degree
        self.modulus = modulus
        self.q = q
        self.order = q ** degree
        self.characteristic = base.characteristic
        self.gen_name = gen_name or _pick_gen_name(base)
        self._tables = None

    # -- identity -------------------------------------------------------
    @property
    def key(self):
        return ("Fq", self.base.key, self.degree, self.modulus)

    @property
    def name(self):
        if isinstance(self.base, PrimeField):
            return f"F{self.order}"
        return f"F{self.order}/F{self.q}"

    @property
    def prime(self) -> int:
        return self.characteristic

    # -- coordinates ----------------------------------------------------
    def to_coords(self, v) -> tuple:
        q = self.q
        out = []
        for _ in range(self.degree):
            v, c = divmod(v, q)
            out.append(c)
        return tuple(out)

    def from_coords(self, coords) -> int:
        coords = tuple(coords)
        if len(coords) > self.degree:
            raise ValidationError("too many coordinates")
        v = 0
        for c in reversed(coords):
            v = v * self.q + c
        return v

    def embed(self, b):
        return b

    def in_base(self, v) -> bool:
        return v < self.q

    def project(self, v):
        if v >= self.q:
            return super().project(v)
        return v

    @property
    def gen(self):
        return self.from_coords((self.base.zero, self.base.one)) if self.degree > 1 else self._root_of_linear()

    def _root_of_linear(self):
        return self.base.neg(self.modulus[0])

    # -- slow reference arithmetic on coordinate tuples -----------------
    def slow_mul(self, a: int, b: int) -> int:
        """Multiplication by polynomial arithmetic, independent of the tables."""
        B = self.base
        prod = poly.mul(B, poly.trim(B, self.to_coords(a)), poly.trim(B, self.to_coords(b)))
        r = poly.rem(B, prod, self.modulus)
        return self.from_coords(r)

    def slow_add(self, a: int, b: int) -> int:
        B = self.base
        return self.from_coords(tuple(B.add(x, y) for x, y in zip(self.to_coords(a), self.to_coords(b))))

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.slow_mul(result, a)
            e >>= 1
            if e:
                a = self.slow_mul(a, a)
        return result

    def _times_gen(self, a: int) -> int:
        # multiply by x: shift coordinates and reduce the overflow term
        B = self.base
        c = self.to_coords(a)
        top = c[-1]
        shifted = (B.zero,) + c[:-1]
        if top == B.zero:
            return self.from_coords(shifted)
        return self.from_coords(tuple(B.sub(s, B.mul(top, m)) for s, m in zip(shifted, self.modulus)))

    def _scale(self, c, a):
        B = self.base
        return self.from_coords(tuple(B.mul(c, x) for x in self.to_coords(a)))

    # -- tables -----------------------------------------------------------
    def _build_tables(self):
        N = self.order - 1
        primes = list(factorint(N)) if N > 1 else []

        def is_primitive(g):
            return all(self._slow_pow(g, N // r) != 1 for r in primes)

        B = self.base
        step = None
        if self.degree > 1:
            # try x + c first: multiplying by it is a shift plus a scalar multiple
            for c in B.elements():
                g = self.slow_add(self.gen, self.from_coords((c,) + (B.zero,) * (self.degree - 1)))
                if is_primitive(g):
                    step = (lambda a, c=c: self.slow_add(self._times_gen(a), self._scale(c, a)))
                    break
        if step is None:
            g = next(c for c in range(1, self.order) if is_primitive(c))
            step = (lambda a: self.slow_mul(a, g))
        exp = [0] * N
        log = [-1] * self.order
        v = 1
        for i in range(N):
            exp[i] = v
            log[v] = i
            v = step(v)
        if v != 1:
            raise AssertionError("primitive element has wrong order")
        # Zech logarithms: zech[n] = log(1 + g^n), -1 when 1 + g^n = 0
        q = self.q
        zech = [-1] * N
        for n in range(N):
            w = exp[n]
            c0 = w % q
            s = w - c0 + B.add(c0, B.one)
            zech[n] = log[s] if s else -1
        half = 0 if self.characteristic == 2 else N // 2
        self._tables = (exp, log, zech, N, half)
        self.primitive = g
        return self._tables

    @property
    def tables(self):
        return self._tables or self._build_tables()

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech, N, _ = self._tables or self._build_tables()
        la = log[a]
        z = zech[(log[b] - la) % N]
        if z < 0:
            return 0
        return exp[(la + z) % N]

    def neg(self, a):
        if a == 0 or self.characteristic == 2:
            return a
        exp, log, _, N, half = self._tables or self._build_tables()
        return exp[(log[a] + half) % N]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        exp, log, _, N, _ = self._tables or self._build_tables()
        return exp[(log[a] + log[b]) % N]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        exp, log, _, N, _ = self._tables or self._build_tables()
        return exp[(-log[a]) % N]

    def pow(self, a, e):
        if a == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return 0
        exp, log, _, N, _ = self._tables or self._build_tables()
        return exp[(log[a] * e) % N]

    def log(self, a) -> int:
        """Discrete logarithm to the base ``self.primitive``."""
        if a == 0:
            raise ValidationError("log of 0")
        return self.tables[1][a]

    def sigma(self, v):
        return self.pow(v, self.q)

    def sigma_pow(self, v, i):
        return self.pow(v, pow(self.q, i % self.degree, self.order - 1) if self.order > 2 else 1)

    def from_int(self, n):
        return self.base.from_int(n)

    def contains(self, v):
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.order

    def elements(self):
        return iter(range(self.order))

    def index(self, v) -> int:
        return v

    def element(self, i: int):
        return i

    def random_element(self, rng):
        return rng.randrange(self.order)

    def symbols(self):
        out = {k: self.embed(v) for k, v in self.base.symbols().items()}
        if self.degree > 1:
            out[self.gen_name] = self.gen
        return out

    # -- serialization --------------------------------------------------
    def format(self, v):
        if v < self.q:
            return self.base.format(v)
        return poly.fmt(self.base, poly.trim(self.base, self.to_coords(v)), self.gen_name)

    def to_json(self, v):
        return [self.base.to_json(c) for c in self.to_coords(v)]

    def from_json(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool) and isinstance(self.base, PrimeField):
            return self.embed(self.base.from_json(obj))
        if not isinstance(obj, list) or len(obj) > self.degree:
            raise ValidationError(f"expected a coefficient array of length <= {self.degree}, got {obj!r}")
        coords = [self.base.from_json(c) for c in obj]
        coords += [self.base.zero] * (self.degree - len(coords))
        return self.from_coords(coords)

    def descriptor(self):
        mod = [self.base.to_json(c) for c in self.modulus]
        if isinstance(self.base, PrimeField):
            return {"kind": "finite", "p": self.base.p, "k": self.degree, "modulus": mod}
        return {"kind": "cyclic", "base": self.base.descriptor(), "degree": self.degree,
                "modulus": mod, "sigma": "frobenius"}


@functools.lru_cache(maxsize=None)
def _finite_extension(base: Field, degree: int) -> FiniteExtension:
    return FiniteExtension(base, degree)


def make_finite_field(p: int, k: int = 1):
    """``F_{p^k}`` with the canonical modulus over ``F_p``; ``F_p`` itself when ``k == 1``."""
    F = prime_field(p)
    if not isinstance(k, int) or k < 1:
        raise ValidationError("k must be a positive integer")
    if p ** k > FINITE_FIELD_LIMIT:
        raise SizeLimitExceeded(f"{p}^{k} exceeds the finite field limit {FINITE_FIELD_LIMIT}")
    if k == 1:
        return F
    return _finite_extension(F, k)


def finite_field(q: int):
    """The field with ``q`` elements; ``q`` must be a prime power."""
    if not isinstance(q, int) or q < 2:
        raise ValidationError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValidationError(f"{q} is not a prime power")
    (p, k), = f.items()
    return make_finite_field(p, k)


def finite_cyclic_extension(base: Field, m: int) -> FiniteExtension:
    """``F_{q^m} / F_q`` with Frobenius ``v -> v^q`` as generator."""
    if m < 1:
        raise ValidationError("degree must be positive")
    return _finite_extension(base, m)
