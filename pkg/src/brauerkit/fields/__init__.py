"""Exact fields: Q, finite fields, F_q(t), and cyclic extensions of these."""
from .base import Field
from .extension import Extension, gaussian_rationals, imaginary_quadratic_discriminant, quadratic_extension
from .finite import FiniteExtension, canonical_modulus, finite_cyclic_extension, finite_field, make_finite_field
from .funcfield import ConstantFieldExtension, RationalFunctions, constant_field_extension, rational_functions
from .irreducible import factor_monic, is_irreducible
from .names import extension_name, field_from_descriptor, parse_extension, parse_field, short_name
from .norms import hilbert90_witness, norm, norm_membership, nth_root, trace
from .parse import parse_element
from .prime import PrimeField, prime_field
from .rationals import QQ, Rationals

__all__ = [
    "Field", "Extension", "FiniteExtension", "PrimeField", "Rationals", "RationalFunctions",
    "ConstantFieldExtension", "QQ", "gaussian_rationals", "quadratic_extension",
    "imaginary_quadratic_discriminant", "canonical_modulus", "finite_cyclic_extension",
    "finite_field", "make_finite_field", "constant_field_extension", "rational_functions",
    "factor_monic", "is_irreducible", "parse_field", "parse_extension", "field_from_descriptor",
    "short_name", "extension_name", "norm", "trace", "norm_membership", "hilbert90_witness", "nth_root",
    "parse_element", "prime_field",
]
