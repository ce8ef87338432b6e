"""Exact integer, n-adic, Laurent-polynomial and matrix arithmetic."""

from ascent_lab.exact.laurent import LaurentPolynomial, parse_laurent
from ascent_lab.exact.matrix import (
    IntegerMatrix,
    SmithDecomposition,
    image_membership,
    parse_matrix,
    smith_normal_form,
    vector_outside_image,
)
from ascent_lab.exact.nadic import NAdicFraction


def laurent_arith(p, q, op):
    """Dispatch ``op`` in {"add", "mul", "evaluate"}; for "evaluate" ``q`` is an integer."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "evaluate":
        return p.evaluate(q)
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "IntegerMatrix",
    "LaurentPolynomial",
    "NAdicFraction",
    "SmithDecomposition",
    "image_membership",
    "laurent_arith",
    "parse_laurent",
    "parse_matrix",
    "smith_normal_form",
    "vector_outside_image",
]
