"""Exact dense linear algebra over Q, F_q and F_{q^2}.

Matrices are lists of rows. Over Q the rank uses fraction-free (Bareiss)
elimination on an integer copy; elsewhere plain Gauss elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .fields import FieldMismatch, QQ, common_field, field_of
from .upoly import inv


class Matrix:
    """Thin immutable wrapper; most functions below also accept raw row lists."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def field(self):
        return common_field(x for r in self.rows for x in r)

    @property
    def T(self) -> Matrix:
        return Matrix(list(zip(*self.rows)), self.nrows) if self.rows else Matrix([], 0)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(matmul(self.rows, other.rows), other.ncols)
        return matvec(self.rows, other)

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> Matrix:
        return Matrix([[c * a for a in r] for r in self.rows])

    def rank(self) -> int:
        return rank(self.rows)

    def det(self):
        return det(self.rows)

    def inverse(self) -> Matrix:
        return Matrix(inverse(self.rows))

    def kernel(self) -> list[list]:
        return kernel_basis(self.rows, self.ncols)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.tolist()!r})"


def _rows(m):
    return m.rows if isinstance(m, Matrix) else m


def check_field(rows) -> object:
    """Return the common field of all entries, raising FieldMismatch on mixtures."""
    return common_field(x for r in rows for x in r)


def matmul(a, b):
    a, b = _rows(a), _rows(b)
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), 0) for c in bt] for r in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(r, v)), 0) for r in _rows(a)]


def dot(u, v):
    return sum((x * y for x, y in zip(u, v)), 0)


def transpose(a):
    return [list(c) for c in zip(*_rows(a))]


def _integer_rows(rows):
    out = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        d = lcm(*[x.denominator for x in fr]) if fr else 1
        out.append([int(x * d) for x in fr])
    return out


def _bareiss_rank(rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nr:
            break
    return r


def rref(rows):
    """Reduced row echelon form and pivot columns (Gauss-Jordan)."""
    rows = _rows(rows)
    check_field(rows)
    m = [list(r) for r in rows]
    if not m:
        return [], []
    nr, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        ic = inv(m[r][c])
        m[r] = [x * ic for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m[:r], pivots


def rank(rows) -> int:
    rows = _rows(rows)
    if not rows or not rows[0]:
        return 0
    K = check_field(rows)
    if K is QQ:
        return _bareiss_rank(_integer_rows(rows))
    return len(rref(rows)[1])


def kernel_basis(rows, ncols: int | None = None) -> list[list]:
    """Basis of {v : A v = 0}, one vector per free column."""
    rows = _rows(rows)
    if ncols is None:
        if not rows:
            raise ValueError("column count needed for an empty matrix")
        ncols = len(rows[0])
    K = check_field(rows) if rows else QQ
    zero, one = K.zero, K.one
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        out.append(v)
    return out


def det(rows):
    rows = _rows(rows)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    K = check_field(rows)
    if K is QQ:
        ints = _integer_rows(rows)
        scale = Fraction(1)
        for r in rows:
            fr = [Fraction(x) for x in r]
            scale *= lcm(*[x.denominator for x in fr])
        return Fraction(_bareiss_det_int(ints)) / scale
    m = [list(r) for r in rows]
    d = K.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return K.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c]
        ic = inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * ic
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def _bareiss_det_int(m) -> int:
    m = [list(r) for r in m]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if sw is None:
                return 0
            m[k], m[sw] = m[sw], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(rows):
    rows = _rows(rows)
    n = len(rows)
    K = check_field(rows)
    aug = [list(r) + [K.one if i == j else K.zero for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def solve(rows, b):
    """One solution x of A x = b, or None if inconsistent."""
    rows = _rows(rows)
    n = len(rows[0]) if rows else 0
    K = check_field(list(rows) + [list(b)])
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, piv = rref(aug)
    if n in piv:
        return None
    x = [K.zero] * n
    for i, p in enumerate(piv):
        x[p] = red[i][n]
    return x


def span_basis(vectors: Sequence[Sequence]) -> list[list]:
    """Row-reduced basis of the span of the given vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    return rref(vectors)[0]


def intersect_spans(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    ka = len(a)
    # solve sum x_i a_i = sum y_j b_j
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    m = transpose(cols)
    ker = kernel_basis(m, len(cols))
    out = [[sum((k[i] * a[i][c] for i in range(ka)), 0) for c in range(len(a[0]))] for k in ker]
    return span_basis(out)


def annihilator(rows, ncols: int | None = None) -> list[list]:
    """Basis of the linear forms vanishing on the span of rows."""
    return kernel_basis(rows, ncols)


__all__ = [
    "FieldMismatch",
    "Matrix",
    "annihilator",
    "check_field",
    "det",
    "dot",
    "field_of",
    "intersect_spans",
    "inverse",
    "kernel_basis",
    "matmul",
    "matvec",
    "rank",
    "rref",
    "solve",
    "span_basis",
    "transpose",
]
