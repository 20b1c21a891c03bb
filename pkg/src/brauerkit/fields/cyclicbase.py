"""Shared behaviour of cyclic Galois extensions ``K/k`` with a chosen generator."""
from __future__ import annotations

from ..errors import DescriptorMismatch, InternalError


class CyclicExtensionMixin:
    """Mixed into fields presented as ``base[x]/(modulus)`` with automorphism ``sigma``.

    Subclasses provide ``base``, ``degree``, ``to_coords``, ``from_coords`` and
    ``sigma``.
    """

    base = None
    degree: int = 1

    def embed(self, b):
        """Image of a base-field value in the extension."""
        return self.from_coords((b,) + (self.base.zero,) * (self.degree - 1))

    def in_base(self, v) -> bool:
        return all(c == self.base.zero for c in self.to_coords(v)[1:])

    def project(self, v):
        """Base-field value of an extension value lying in the base."""
        coords = self.to_coords(v)
        if any(c != self.base.zero for c in coords[1:]):
            raise DescriptorMismatch(f"{self.format(v)} does not lie in {self.base.name}")
        return coords[0]

    def basis(self) -> list:
        zero, one = self.base.zero, self.base.one
        out = []
        for j in range(self.degree):
            c = [zero] * self.degree
            c[j] = one
            out.append(self.from_coords(tuple(c)))
        return out

    def sigma_pow(self, v, i: int):
        i %= self.degree
        for _ in range(i):
            v = self.sigma(v)
        return v

    def conjugates(self, v) -> list:
        out = [v]
        for _ in range(self.degree - 1):
            out.append(self.sigma(out[-1]))
        return out

    def norm(self, v):
        """``prod_i sigma^i(v)`` as a base-field value."""
        self.check(v)
        n = self.prod(self.conjugates(v))
        if not self.in_base(n):
            raise InternalError("norm left the base field")
        return self.project(n)

    def trace(self, v):
        self.check(v)
        s = self.sum(self.conjugates(v))
        if not self.in_base(s):
            raise InternalError("trace left the base field")
        return self.project(s)

    @property
    def is_cyclic(self) -> bool:
        return True
