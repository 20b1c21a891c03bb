"""Cyclic extensions ``k[x]/(f)`` of infinite fields with an explicit generator ``sigma``."""
from __future__ import annotations

import functools
from fractions import Fraction

from ..errors import UnsupportedError, ValidationError
from . import poly
from .base import Field
from .cyclicbase import CyclicExtensionMixin
from .irreducible import is_irreducible
from .rationals import QQ, Rationals


class Extension(CyclicExtensionMixin, Field):
    """Values are coordinate tuples of length ``degree`` over ``base``.

    ``sigma_image`` gives the coordinates of ``sigma(x)``; it is validated to be
    a root of the modulus and to generate a group of order ``degree``.
    """

    def __init__(self, base: Field, modulus, sigma_image, gen_name: str = "x", check_irreducible=True):
        modulus = poly.trim(base, modulus)
        m = poly.deg(modulus)
        if m < 1 or modulus[-1] != base.one:
            raise ValidationError("modulus must be monic of positive degree")
        self.base = base
        self.degree = m
        self.modulus = modulus
        self.gen_name = gen_name
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order ** m
        self.zero = (base.zero,) * m
        self.one = (base.one,) + (base.zero,) * (m - 1)
        # x^k mod f for m <= k <= 2m - 2
        self._reductions = []
        cur = tuple(base.neg(c) for c in modulus[:-1])
        for _ in range(max(m - 1, 0)):
            self._reductions.append(cur)
            cur = self._shift(cur)
        if check_irreducible:
            self._check_irreducible()
        sigma_image = tuple(sigma_image) + (base.zero,) * (m - len(tuple(sigma_image)))
        self.sigma_image = sigma_image
        self._sigma_cols = []
        p = self.one
        for _ in range(m):
            self._sigma_cols.append(p)
            p = self.mul(p, sigma_image)
        self._check_sigma()

    def _shift(self, c):
        # multiply coordinates by x and reduce once
        B = self.base
        top = c[-1]
        out = (B.zero,) + c[:-1]
        if top == B.zero:
            return out
        return tuple(B.sub(o, B.mul(top, f)) for o, f in zip(out, self.modulus))

    def _check_irreducible(self):
        B = self.base
        from .funcfield import RationalFunctions
        if isinstance(B, Rationals) or B.is_finite:
            ok = is_irreducible(self.modulus, B)
        elif isinstance(B, RationalFunctions) and all(poly.deg(c[0]) <= 0 and c[1] == (B.base.one,) for c in self.modulus):
            # constant polynomials: irreducible over F iff over F(t)
            consts = tuple(c[0][0] if c[0] else B.base.zero for c in self.modulus)
            ok = is_irreducible(consts, B.base)
        else:
            raise UnsupportedError(f"cannot validate a modulus over {B.name}")
        if not ok:
            raise ValidationError("modulus is reducible")

    def _check_sigma(self):
        x = self.gen
        img = self.sigma_image
        if poly.evaluate(self, tuple(self.embed(c) for c in self.modulus), img) != self.zero:
            raise ValidationError("sigma(x) is not a root of the modulus")
        v = x
        for i in range(1, self.degree + 1):
            v = self.sigma(v)
            if (v == x) != (i == self.degree):
                raise ValidationError(f"sigma does not have order {self.degree}")

    @property
    def key(self):
        return ("ext", self.base.key, self.modulus, self.sigma_image)

    @property
    def name(self):
        return f"{self.base.name}[{self.gen_name}]/({poly.fmt(self.base, self.modulus, self.gen_name)})"

    @property
    def gen(self):
        if self.degree == 1:
            return (self.base.neg(self.modulus[0]),)
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.degree - 2)

    def to_coords(self, v):
        return v

    def from_coords(self, coords):
        coords = tuple(coords)
        if len(coords) > self.degree:
            raise ValidationError("too many coordinates")
        return coords + (self.base.zero,) * (self.degree - len(coords))

    def embed(self, b):
        return (b,) + (self.base.zero,) * (self.degree - 1)

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        m = self.degree
        prod = [B.zero] * (2 * m - 1)
        for i, x in enumerate(a):
            if x == B.zero:
                continue
            for j, y in enumerate(b):
                if y != B.zero:
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        out = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c != B.zero:
                red = self._reductions[k - m]
                for j in range(m):
                    if red[j] != B.zero:
                        out[j] = B.add(out[j], B.mul(c, red[j]))
        return tuple(out)

    def inv(self, a):
        B = self.base
        f = poly.trim(B, a)
        if not f:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        d, s, _ = poly.xgcd(B, f, self.modulus)
        if d != (B.one,):
            raise ZeroDivisionError("element not invertible (modulus reducible?)")
        return self.from_coords(poly.rem(B, s, self.modulus))

    def scale(self, c, a):
        """Multiply by a base-field scalar."""
        B = self.base
        return tuple(B.mul(c, x) for x in a)

    def sigma(self, v):
        B = self.base
        acc = [B.zero] * self.degree
        for c, col in zip(v, self._sigma_cols):
            if c == B.zero:
                continue
            for j in range(self.degree):
                if col[j] != B.zero:
                    acc[j] = B.add(acc[j], B.mul(c, col[j]))
        return tuple(acc)

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def contains(self, v):
        return isinstance(v, tuple) and len(v) == self.degree and all(self.base.contains(c) for c in v)

    def elements(self):
        if not self.is_finite:
            return super().elements()
        from itertools import product
        for tail in product(list(self.base.elements()), repeat=self.degree):
            yield tuple(reversed(tail))

    def random_element(self, rng):
        return tuple(self.base.random_element(rng) for _ in range(self.degree))

    def height(self, v) -> int:
        if not isinstance(self.base, Rationals):
            raise UnsupportedError("height is defined over Q only")
        return max(Rationals.height(c) for c in v)

    def symbols(self):
        out = {k: self.embed(v) for k, v in self.base.symbols().items()}
        out[self.gen_name] = self.gen
        return out

    # -- serialization --------------------------------------------------
    def format(self, v):
        if self.in_base(v):
            return self.base.format(v[0])
        return poly.fmt(self.base, poly.trim(self.base, v), self.gen_name)

    def to_json(self, v):
        return [self.base.to_json(c) for c in v]

    def from_json(self, obj):
        if not isinstance(obj, list) or len(obj) > self.degree:
            raise ValidationError(f"expected a coefficient array of length <= {self.degree}, got {obj!r}")
        return self.from_coords([self.base.from_json(c) for c in obj])

    def descriptor(self):
        return {"kind": "cyclic", "base": self.base.descriptor(), "degree": self.degree,
                "modulus": [self.base.to_json(c) for c in self.modulus],
                "sigma": [self.base.to_json(c) for c in self.sigma_image],
                "gen": self.gen_name}


@functools.lru_cache(maxsize=None)
def quadratic_extension(d: int, gen_name: str | None = None) -> Extension:
    """``Q(sqrt d)/Q`` with ``sigma(x) = -x``; ``d`` a non-square integer."""
    if d in (0, 1):
        raise ValidationError("d must be a non-square")
    name = gen_name or ("i" if d == -1 else "r")
    return Extension(QQ, (Fraction(-d), Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1)), name)


def gaussian_rationals() -> Extension:
    """``Q(i)/Q`` with complex conjugation."""
    return quadratic_extension(-1, "i")


def imaginary_quadratic_discriminant(ext) -> Fraction | None:
    """Discriminant of a degree-2 extension of Q when it is negative, else None."""
    if not isinstance(ext, Extension) or not isinstance(ext.base, Rationals) or ext.degree != 2:
        return None
    c, b, _ = ext.modulus
    disc = b * b - 4 * c
    return disc if disc < 0 else None
