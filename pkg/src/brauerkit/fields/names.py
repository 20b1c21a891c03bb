"""Field and extension lookup from short names and JSON descriptors.

Names: ``Q``, ``F9``, ``F3t`` (rational functions over F3), ``Q(i)``,
``Q(sqrt(-2))``.  Extensions: ``F9/F3``, ``F64/F4``, ``F9t/F3t``, ``Q(i)/Q``,
``Q(sqrt(5))/Q``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from ..errors import DescriptorMismatch, ValidationError
from .base import Field
from .extension import Extension, gaussian_rationals, quadratic_extension
from .finite import FiniteExtension, finite_cyclic_extension, finite_field, make_finite_field
from .funcfield import constant_field_extension, rational_functions
from .prime import prime_field
from .rationals import QQ

_FIN = re.compile(r"^F(\d+)$")
_FIN_T = re.compile(r"^F(\d+)t$")
_SQRT = re.compile(r"^Q\(sqrt\((-?\d+)\)\)$")


def _quadratic(d: int) -> Extension:
    if d == -1:
        return gaussian_rationals()
    if d >= 0 and isqrt(d) ** 2 == d:
        raise ValidationError(f"Q(sqrt({d})) is not a quadratic field")
    return quadratic_extension(d)


def parse_field(name: str) -> Field:
    s = name.replace(" ", "")
    if s in ("Q", "QQ"):
        return QQ
    if s == "Q(i)":
        return gaussian_rationals()
    m = _SQRT.match(s)
    if m:
        return _quadratic(int(m.group(1)))
    m = _FIN.match(s)
    if m:
        return finite_field(int(m.group(1)))
    m = _FIN_T.match(s)
    if m:
        return rational_functions(finite_field(int(m.group(1))))
    raise ValidationError(f"unknown field name {name!r}")


def parse_extension(name: str):
    """A cyclic extension ``K/k`` from a name such as ``F9/F3``."""
    s = name.replace(" ", "")
    if s.count("/") != 1:
        raise ValidationError(f"extension names look like 'F9/F3', got {name!r}")
    top, bottom = s.split("/")
    if bottom in ("Q", "QQ"):
        K = parse_field(top)
        if not isinstance(K, Extension):
            raise ValidationError(f"{top} is not an extension of Q")
        return K
    m_top, m_bot = _FIN.match(top), _FIN.match(bottom)
    constant = False
    if not (m_top and m_bot):
        m_top, m_bot = _FIN_T.match(top), _FIN_T.match(bottom)
        constant = True
    if not (m_top and m_bot):
        raise ValidationError(f"unknown extension {name!r}")
    Q, q = int(m_top.group(1)), int(m_bot.group(1))
    k = finite_field(q)
    deg, acc = 0, 1
    while acc < Q:
        acc *= q
        deg += 1
    if acc != Q or deg < 1:
        raise ValidationError(f"{top} is not an extension of {bottom}")
    if constant:
        return constant_field_extension(k, deg)
    return finite_cyclic_extension(k, deg)


def field_from_descriptor(desc) -> Field:
    """Inverse of ``Field.descriptor()``; strings are treated as names."""
    if isinstance(desc, str):
        return parse_field(desc)
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValidationError(f"bad field descriptor {desc!r}")
    kind = desc["kind"]
    if kind == "rationals":
        return QQ
    if kind == "prime":
        return prime_field(int(desc["p"]))
    if kind == "finite":
        F = make_finite_field(int(desc["p"]), int(desc["k"]))
        _check_modulus(F, desc)
        return F
    if kind == "rational_functions":
        return rational_functions(field_from_descriptor(desc["base"]), desc.get("var", "t"))
    if kind == "constant_extension":
        return constant_field_extension(field_from_descriptor(desc["base"]), int(desc["degree"]))
    if kind == "cyclic":
        base = field_from_descriptor(desc["base"])
        if desc.get("sigma") == "frobenius":
            F = finite_cyclic_extension(base, int(desc["degree"]))
            _check_modulus(F, desc)
            return F
        modulus = [base.from_json(c) for c in desc["modulus"]]
        sigma = [base.from_json(c) for c in desc["sigma"]]
        if base == QQ and len(modulus) == 3 and modulus[1] == 0 and sigma == [Fraction(0), Fraction(-1)]:
            d = -modulus[0]
            if d.denominator == 1:
                return quadratic_extension(int(d), desc.get("gen"))
        return Extension(base, modulus, sigma, desc.get("gen", "x"))
    raise ValidationError(f"unknown field kind {kind!r}")


def _check_modulus(F, desc):
    if "modulus" in desc and isinstance(F, FiniteExtension):
        given = tuple(F.base.from_json(c) for c in desc["modulus"])
        if given != tuple(F.modulus):
            raise DescriptorMismatch(f"{F.name} uses the canonical modulus {list(F.modulus)}, got {list(given)}")


def short_name(F) -> str:
    """Compact human name used in CLI output."""
    from .funcfield import ConstantFieldExtension, RationalFunctions
    from .prime import PrimeField
    if F == QQ:
        return "Q"
    if isinstance(F, (PrimeField, FiniteExtension)):
        return f"F{F.order}"
    if isinstance(F, ConstantFieldExtension):
        return f"F{F.constant_field.order}t"
    if isinstance(F, RationalFunctions):
        return f"{short_name(F.base)}t"
    if isinstance(F, Extension) and F.base == QQ and F.degree == 2 and F.modulus[1] == 0:
        d = -F.modulus[0]
        return "Q(i)" if d == -1 else f"Q(sqrt({d}))"
    return F.name


def extension_name(K) -> str:
    return f"{short_name(K)}/{short_name(K.base)}"
