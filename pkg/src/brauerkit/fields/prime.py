"""Prime fields Z/p."""
from __future__ import annotations

import functools

from sympy import isprime

from ..errors import ValidationError
from .base import Field


class PrimeField(Field):
    """The field with ``p`` elements; values are ints ``0..p-1``."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise ValidationError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.base_order = p

    @property
    def key(self):
        return ("Fp", self.p)

    @property
    def name(self):
        return f"F{self.p}"

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a):
        return (self.p - a) if a else 0

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in F{self.p}")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def from_int(self, n):
        return n % self.p

    def contains(self, v):
        return isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.p

    def elements(self):
        return iter(range(self.p))

    def index(self, v) -> int:
        return v

    def element(self, i: int):
        return i

    def random_element(self, rng):
        return rng.randrange(self.p)

    def format(self, v):
        return str(v)

    def to_json(self, v):
        return v

    def from_json(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool) and 0 <= obj < self.p:
            return obj
        raise ValidationError(f"prime-field literal must be an integer in 0..{self.p - 1}, got {obj!r}")

    def descriptor(self):
        return {"kind": "prime", "p": self.p}


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)
