"""Exact algebra: scalar fields, polynomials, binary forms and linear algebra."""

from .fields import (
    FF,
    FF2,
    GF,
    GF2,
    QQ,
    FieldMismatch,
    common_field,
    field_of,
    format_scalar,
    is_prime,
    parse_scalar,
)
from .forms import (
    BinaryForm,
    count_roots_fq,
    gcd_forms,
    gcd_many,
    rational_roots,
    root_count,
    roots_fq,
    squarefree_decomposition,
    squarefree_part,
)
from .linalg import (
    Matrix,
    det,
    dot,
    intersect_spans,
    inverse,
    kernel_basis,
    matmul,
    matvec,
    rank,
    rref,
    solve,
    span_basis,
    transpose,
)
from .poly import MultiPoly, resultant, sylvester_matrix

__all__ = [
    "FF", "FF2", "GF", "GF2", "QQ", "FieldMismatch", "common_field", "field_of",
    "format_scalar", "is_prime", "parse_scalar", "BinaryForm", "count_roots_fq",
    "gcd_forms", "gcd_many", "rational_roots", "root_count", "roots_fq",
    "squarefree_decomposition", "squarefree_part", "Matrix", "det", "dot",
    "intersect_spans", "inverse", "kernel_basis", "matmul", "matvec", "rank",
    "rref", "solve", "span_basis", "transpose", "MultiPoly", "resultant",
    "sylvester_matrix",
]
