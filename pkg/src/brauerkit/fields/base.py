"""Abstract field interface.

Field objects do arithmetic on *raw values* (ints, Fractions, tuples); values
carry no reference to their field.  Every value has exactly one canonical
representation, so ``==`` on raw values is field equality.
"""
from __future__ import annotations

from typing import Any, Iterator

from ..errors import DescriptorMismatch, ValidationError


class Field:
    """Base class for exact fields.

    Subclasses implement ``add``, ``neg``, ``mul``, ``inv``, ``from_int``,
    ``contains``, ``format``, ``to_json``, ``from_json`` and ``descriptor``.
    """

    characteristic: int = 0
    order: int | None = None
    zero: Any
    one: Any

    # -- identity -------------------------------------------------------
    @property
    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # -- arithmetic -----------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, values):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total

    def prod(self, values):
        total = self.one
        for v in values:
            total = self.mul(total, v)
        return total

    def from_int(self, n: int):
        raise NotImplementedError

    def __call__(self, x):
        """Coerce an int, a literal string, or an existing value."""
        if isinstance(x, bool):
            raise ValidationError("booleans are not field elements")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, str):
            from .parse import parse_element
            return parse_element(self, x)
        self.check(x)
        return x

    def coerce(self, x):
        """Raw values pass through; ints and strings are read as literals."""
        return x if self.contains(x) else self(x)

    # -- membership / enumeration ---------------------------------------
    def contains(self, v) -> bool:
        raise NotImplementedError

    def check(self, v) -> None:
        if not self.contains(v):
            raise DescriptorMismatch(f"{v!r} is not an element of {self.name}")

    def elements(self) -> Iterator:
        """All elements in canonical order (finite fields only)."""
        raise ValidationError(f"{self.name} is infinite")

    def nonzero_elements(self) -> Iterator:
        for v in self.elements():
            if v != self.zero:
                yield v

    def random_element(self, rng):
        raise NotImplementedError

    def symbols(self) -> dict[str, Any]:
        """Generator names usable in element literals."""
        return {}

    # -- serialization --------------------------------------------------
    def format(self, v) -> str:
        raise NotImplementedError

    def to_json(self, v):
        raise NotImplementedError

    def from_json(self, obj):
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError
