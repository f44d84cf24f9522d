"""Exact Drinfeld-twist quantization of the extended Schrödinger-Virasoro algebra."""

from .lie import Family, Gen, L, M, N, Y, TwistContext, lie_bracket, jacobi_check
from .poly import UPoly, TensorPoly, tensor, delta0, s0, eps
from .expr import parse_expression, render

__all__ = [
    "Family", "Gen", "L", "M", "N", "Y", "TwistContext", "lie_bracket", "jacobi_check",
    "UPoly", "TensorPoly", "tensor", "delta0", "s0", "eps", "parse_expression", "render",
]
