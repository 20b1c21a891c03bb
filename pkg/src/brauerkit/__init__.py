"""Exact computations with cyclic algebras, Brauer classes, and circle bundles."""
__version__ = "0.1.0"
