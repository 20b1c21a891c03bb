"""Rational function fields ``F(t)`` and constant-field extensions ``F_{q^m}(t)/F_q(t)``."""
from __future__ import annotations

import functools

from ..errors import ValidationError
from . import poly
from .base import Field
from .extension import Extension
from .finite import finite_cyclic_extension


class RationalFunctions(Field):
    """``F(t)``; values are ``(num, den)`` polynomial pairs, coprime, ``den`` monic."""

    def __init__(self, base: Field, var: str = "t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic
        self.order = None
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    @property
    def key(self):
        return ("F(t)", self.base.key, self.var)

    @property
    def name(self):
        return f"{self.base.name}({self.var})"

    def make(self, num, den=None):
        """Canonical value of ``num/den``."""
        B = self.base
        num = poly.trim(B, num)
        den = (B.one,) if den is None else poly.trim(B, den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = poly.gcd(B, num, den)
        if g != (B.one,):
            num = poly.divmod_(B, num, g)[0]
            den = poly.divmod_(B, den, g)[0]
        lc = den[-1]
        if lc != B.one:
            c = B.inv(lc)
            num, den = poly.scale(B, c, num), poly.scale(B, c, den)
        return (num, den)

    def add(self, a, b):
        B = self.base
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self.make(poly.add(B, an, bn), ad)
        return self.make(poly.add(B, poly.mul(B, an, bd), poly.mul(B, bn, ad)), poly.mul(B, ad, bd))

    def neg(self, a):
        return (poly.neg(self.base, a[0]), a[1])

    def mul(self, a, b):
        B = self.base
        if not a[0] or not b[0]:
            return self.zero
        return self.make(poly.mul(B, a[0], b[0]), poly.mul(B, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        return self.make(a[1], a[0])

    def from_int(self, n):
        return self.make(poly.const(self.base, self.base.from_int(n)))

    def constant(self, c):
        return self.make(poly.const(self.base, c))

    @property
    def t(self):
        return self.make((self.base.zero, self.base.one))

    def contains(self, v):
        if not (isinstance(v, tuple) and len(v) == 2):
            return False
        num, den = v
        if not isinstance(num, tuple) or not isinstance(den, tuple) or not den:
            return False
        if not all(self.base.contains(c) for c in num + den):
            return False
        return self.make(num, den) == v

    def degree(self, v) -> int:
        """``deg num - deg den``; the negative valuation at infinity."""
        if not v[0]:
            raise ValidationError("degree of 0 is undefined")
        return poly.deg(v[0]) - poly.deg(v[1])

    def evaluate(self, v, x):
        B = self.base
        d = poly.evaluate(B, v[1], x)
        if d == B.zero:
            raise ZeroDivisionError("pole at evaluation point")
        return B.div(poly.evaluate(B, v[0], x), d)

    def random_element(self, rng, max_deg: int = 2):
        B = self.base
        while True:
            num = tuple(B.random_element(rng) for _ in range(rng.randint(0, max_deg + 1)))
            den = tuple(B.random_element(rng) for _ in range(rng.randint(0, max_deg))) + (B.one,)
            try:
                return self.make(num, den)
            except ZeroDivisionError:
                continue

    def symbols(self):
        out = {k: self.constant(v) for k, v in self.base.symbols().items()}
        out[self.var] = self.t
        return out

    def format(self, v):
        num, den = v
        ns = poly.fmt(self.base, num, self.var)
        if den == (self.base.one,):
            return ns
        ds = poly.fmt(self.base, den, self.var)

        def wrap(text, f):
            simple = len([c for c in f if c != self.base.zero]) == 1 and "*" not in text.lstrip("-")
            return text if simple else f"({text})"

        return f"{wrap(ns, num)}/{wrap(ds, den)}"

    def to_json(self, v):
        return {"num": [self.base.to_json(c) for c in v[0]], "den": [self.base.to_json(c) for c in v[1]]}

    def from_json(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.constant(self.base.from_json(obj))
        if not isinstance(obj, dict) or set(obj) - {"num", "den"} or "num" not in obj:
            raise ValidationError(f"rational-function literal needs num/den arrays, got {obj!r}")
        num = [self.base.from_json(c) for c in obj["num"]]
        den = [self.base.from_json(c) for c in obj.get("den", [self.base.to_json(self.base.one)])]
        den_t = poly.trim(self.base, den)
        if not den_t or den_t[-1] != self.base.one:
            raise ValidationError("rational-function denominator must be monic")
        v = self.make(num, den_t)
        if v != (poly.trim(self.base, num), den_t) and poly.trim(self.base, num):
            raise ValidationError("rational-function literal is not in lowest terms")
        return v

    def descriptor(self):
        return {"kind": "rational_functions", "base": self.base.descriptor(), "var": self.var}


@functools.lru_cache(maxsize=None)
def rational_functions(base: Field, var: str = "t") -> RationalFunctions:
    return RationalFunctions(base, var)


class ConstantFieldExtension(Extension):
    """``F_{q^m}(t) / F_q(t)`` presented over ``F_q(t)`` with Frobenius on constants."""

    def __init__(self, base_constants: Field, m: int):
        K0 = finite_cyclic_extension(base_constants, m)
        Ft = rational_functions(base_constants)
        modulus = tuple(Ft.constant(c) for c in K0.modulus)
        self.constant_field = K0
        self.constant_base = base_constants
        # sigma(x) = x^q expressed in the basis 1, x, ..., x^{m-1}
        xq = K0.pow(K0.gen, K0.q) if m > 1 else K0.gen
        sigma_image = tuple(Ft.constant(c) for c in K0.to_coords(xq))
        super().__init__(Ft, modulus, sigma_image, gen_name=K0.gen_name)

    @property
    def key(self):
        return ("constext", self.constant_base.key, self.degree)

    @property
    def name(self):
        return f"{self.constant_field.name}(t)"

    def split(self, v):
        """Write ``v = G/D`` with ``G`` over ``F_{q^m}`` and ``D`` monic over ``F_q``."""
        B = self.constant_base
        K0 = self.constant_field
        den = (B.one,)
        for c in v:
            den = poly.mul(B, den, poly.divmod_(B, c[1], poly.gcd(B, den, c[1]))[0])
        nums = [poly.mul(B, c[0], poly.divmod_(B, den, c[1])[0]) for c in v]
        length = max((len(n) for n in nums), default=0)
        G = []
        for i in range(length):
            G.append(K0.from_coords(tuple(n[i] if i < len(n) else B.zero for n in nums)))
        return poly.trim(K0, G), den

    def unsplit(self, G, D=None):
        """Inverse of :meth:`split`."""
        B = self.constant_base
        K0 = self.constant_field
        Ft = self.base
        D = (B.one,) if D is None else D
        coords = []
        for j in range(self.degree):
            num = poly.trim(B, [K0.to_coords(g)[j] for g in G])
            coords.append(Ft.make(num, D))
        return tuple(coords)

    def t_degree(self, v) -> int:
        G, D = self.split(v)
        if not G:
            raise ValidationError("degree of 0 is undefined")
        return poly.deg(G) - poly.deg(D)

    def descriptor(self):
        return {"kind": "constant_extension", "base": self.constant_base.descriptor(), "degree": self.degree}


@functools.lru_cache(maxsize=None)
def constant_field_extension(base_constants: Field, m: int) -> ConstantFieldExtension:
    return ConstantFieldExtension(base_constants, m)
