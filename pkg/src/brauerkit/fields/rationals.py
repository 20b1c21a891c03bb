"""The rational numbers."""
from __future__ import annotations

from fractions import Fraction

from ..errors import ValidationError
from .base import Field


class Rationals(Field):
    characteristic = 0
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def key(self):
        return ("Q",)

    @property
    def name(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by 0 in Q")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def contains(self, v):
        return isinstance(v, Fraction)

    def random_element(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    @staticmethod
    def height(v: Fraction) -> int:
        return max(abs(v.numerator), v.denominator)

    def format(self, v):
        return str(v)

    def to_json(self, v):
        return f"{v.numerator}/{v.denominator}"

    def from_json(self, obj):
        if isinstance(obj, bool):
            raise ValidationError("booleans are not rationals")
        if isinstance(obj, int):
            return Fraction(obj)
        if isinstance(obj, str):
            text = obj.strip()
            num, sep, den = text.partition("/")
            try:
                n = int(num)
                d = int(den) if sep else 1
            except ValueError:
                raise ValidationError(f"malformed rational literal {obj!r}") from None
            if d <= 0:
                raise ValidationError(f"rational literal {obj!r} needs a positive denominator")
            return Fraction(n, d)
        raise ValidationError(f"malformed rational literal {obj!r}")

    def descriptor(self):
        return {"kind": "rationals"}


QQ = Rationals()
