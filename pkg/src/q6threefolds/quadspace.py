"""Bilinear geometry of Q6 = {x1x8 - x2x7 + x3x6 - x4x5 = 0} in P^7.

The Gram matrix G has x^T G x = 2 q(x), so every entry is an integer and
plain ints act as scalars of any field. Indices in docstrings are 1-based,
code is 0-based.
"""

from __future__ import annotations

import enum
import random
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import linalg
from .algebra.fields import FF, QQ, GF, common_field, format_scalar, parse_scalar
from .algebra.upoly import inv

N = 8

# (i, j, sign): G[i][j] = G[j][i] = sign
_PAIRS = ((0, 7, 1), (1, 6, -1), (2, 5, 1), (3, 4, -1))

GRAM = tuple(
    tuple(next((s for i, j, s in _PAIRS if {r, c} == {i, j}), 0) for c in range(N)) for r in range(N)
)


class IsoType(str, enum.Enum):
    HORIZONTAL = "Horizontal"
    VERTICAL = "Vertical"

    def other(self) -> IsoType:
        return IsoType.VERTICAL if self is IsoType.HORIZONTAL else IsoType.HORIZONTAL


class GeometryError(ValueError):
    """Input violates a geometric precondition (not isotropic, wrong dimension...)."""


def gdual(v: Sequence) -> list:
    """The row vector v^T G, so that bilinear(v, w) = gdual(v) . w."""
    return [v[7], -v[6], v[5], -v[4], -v[3], v[2], -v[1], v[0]]


def bilinear(v: Sequence, w: Sequence):
    """x^T G y."""
    return (
        v[0] * w[7] + v[7] * w[0]
        - v[1] * w[6] - v[6] * w[1]
        + v[2] * w[5] + v[5] * w[2]
        - v[3] * w[4] - v[4] * w[3]
    )


def qform(v: Sequence):
    """x1x8 - x2x7 + x3x6 - x4x5."""
    return v[0] * v[7] - v[1] * v[6] + v[2] * v[5] - v[3] * v[4]


def on_q6(v: Sequence) -> bool:
    return qform(v) == 0


def unit(i: int, n: int = N) -> list:
    """Standard basis vector e_{i+1} (0-based index i)."""
    return [1 if k == i else 0 for k in range(n)]


class LinearSubspace:
    """A linear subspace of K^n, stored by its reduced row echelon basis.

    Dimensions are linear (projective dimension is ``dim - 1``).
    """

    __slots__ = ("basis", "n", "field")

    def __init__(self, vectors: Iterable[Sequence], n: int = N, field=None):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"expected vectors of length {n}, got {len(v)}")
        if field is None:
            field = common_field(x for v in vectors for x in v)
        self.field = field
        self.n = n
        if vectors:
            rows, _ = linalg.rref([[field(x) for x in v] for v in vectors])
        else:
            rows = []
        self.basis = tuple(tuple(r) for r in rows)

    # constructors
    @classmethod
    def span(cls, vectors, n: int = N, field=None) -> LinearSubspace:
        return cls(vectors, n, field)

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int = N, field=QQ) -> LinearSubspace:
        """Span of e_i for 1-based indices."""
        return cls([unit(i - 1, n) for i in indices], n, field)

    @classmethod
    def from_equations(cls, equations: Sequence[Sequence], n: int = N, field=None) -> LinearSubspace:
        equations = [list(e) for e in equations]
        if field is None:
            field = common_field(x for e in equations for x in e)
        if not equations:
            return cls.full(n, field)
        return cls(linalg.kernel_basis([[field(x) for x in e] for e in equations], n), n, field)

    @classmethod
    def full(cls, n: int = N, field=QQ) -> LinearSubspace:
        return cls([unit(i, n) for i in range(n)], n, field)

    @classmethod
    def zero(cls, n: int = N, field=QQ) -> LinearSubspace:
        return cls([], n, field)

    # queries
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def proj_dim(self) -> int:
        return self.dim - 1

    def equations(self) -> list[list]:
        """Row vectors e with e . x = 0 exactly on the subspace."""
        if not self.basis:
            return [list(map(self.field, unit(i, self.n))) for i in range(self.n)]
        return linalg.kernel_basis(self.basis, self.n)

    def contains(self, v: Sequence) -> bool:
        if all(x == 0 for x in v):
            return True
        return linalg.rank(list(self.basis) + [list(v)]) == self.dim

    def contains_space(self, other: LinearSubspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def intersect(self, other: LinearSubspace) -> LinearSubspace:
        field = self._common(other)
        if not self.basis or not other.basis:
            return LinearSubspace.zero(self.n, field)
        return LinearSubspace(linalg.intersect_spans(self.basis, other.basis), self.n, field)

    def join(self, other: LinearSubspace) -> LinearSubspace:
        return LinearSubspace(list(self.basis) + list(other.basis), self.n, self._common(other))

    def _common(self, other: LinearSubspace):
        if self.field is not other.field:
            # ints-only subspaces live over QQ; promote them to a finite field if needed
            if other.field is QQ and _integral(other):
                return self.field
            if self.field is QQ and _integral(self):
                return other.field
            raise linalg.FieldMismatch(f"subspaces over {self.field} and {other.field}")
        return self.field

    def over(self, field) -> LinearSubspace:
        """Reduce an integral/rational subspace to another field (e.g. F_q)."""
        return LinearSubspace([[field(x) for x in v] for v in self.basis], self.n, field)

    def gram(self) -> list[list]:
        """B G B^T for the stored basis B."""
        duals = [gdual(v) for v in self.basis]
        return [[linalg.dot(d, w) for w in self.basis] for d in duals]

    def is_isotropic(self) -> bool:
        return all(x == 0 for r in self.gram() for x in r)

    def random_vector(self, rng: random.Random, bound: int = 20) -> list:
        coeffs = [self.field.random(rng, bound) for _ in self.basis]
        return [sum((c * v[j] for c, v in zip(coeffs, self.basis)), self.field.zero) for j in range(self.n)]

    def __eq__(self, other):
        return isinstance(other, LinearSubspace) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        rows = ["(" + ", ".join(format_scalar(x) for x in r) + ")" for r in self.basis]
        return f"LinearSubspace(dim={self.dim}, [{'; '.join(rows)}])"

    def to_json(self) -> dict:
        return {"basis": [[format_scalar(x) for x in r] for r in self.basis]}

    @classmethod
    def from_json(cls, payload: dict) -> LinearSubspace:
        if "basis" in payload:
            rows = [[parse_scalar(x) for x in r] for r in payload["basis"]]
            sub = cls(rows)
            if sub.dim != len(rows):
                raise ValueError("basis rows are linearly dependent")
            return sub
        if "equations" in payload:
            return cls.from_equations([[parse_scalar(x) for x in r] for r in payload["equations"]], field=QQ)
        raise ValueError("subspace JSON needs 'basis' or 'equations'")


def _integral(s: LinearSubspace) -> bool:
    return all(Fraction(x).denominator == 1 for r in s.basis for x in r)


class ProjPoint:
    """A point of P^{n-1}; coordinates scaled so the first nonzero one is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = list(coords)
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        il = inv(lead)
        self.coords = tuple(c * il for c in coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return "(" + ":".join(format_scalar(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coords]


# reference subspaces
V0 = LinearSubspace.coordinate([1, 2, 3, 4])  # {x5=x6=x7=x8=0}, vertical
H0 = LinearSubspace.coordinate([1, 2, 3, 5])  # {x4=x6=x7=x8=0}, horizontal
LINE_L = LinearSubspace.coordinate([1, 2])  # vertex line of Q4
P5_Q4 = LinearSubspace.coordinate([1, 2, 3, 4, 5, 6])  # {x7=x8=0}


def annihilator(S: LinearSubspace) -> LinearSubspace:
    """{y : x^T G y = 0 for all x in S}."""
    if not S.basis:
        return LinearSubspace.full(S.n, S.field)
    return LinearSubspace.from_equations([gdual(v) for v in S.basis], S.n, S.field)


def restrict_rank(S: LinearSubspace) -> int:
    """Rank of the quadratic form restricted to S."""
    if not S.basis:
        return 0
    return linalg.rank(S.gram())


def max_isotropic_dim(S: LinearSubspace) -> int:
    """Largest linear dimension of an isotropic subspace of S over an algebraically closed field."""
    r = restrict_rank(S)
    return (S.dim - r) + r // 2


def iso_type(U: LinearSubspace) -> IsoType:
    if U.n != N or U.dim != 4:
        raise GeometryError(f"expected a 4-dimensional subspace of K^8, got dimension {U.dim}")
    if not U.is_isotropic():
        raise GeometryError("subspace is not isotropic")
    ref = V0 if U.field is QQ else V0.over(U.field)
    return IsoType.VERTICAL if U.intersect(ref).dim % 2 == 0 else IsoType.HORIZONTAL


def _isotropic_lines_2d(c1, c2, field):
    """The two isotropic directions (x, y) of q(x c1 + y c2), a split binary form."""
    a = bilinear(c1, c1)
    b = bilinear(c1, c2)
    c = bilinear(c2, c2)
    # x^2 a + 2 x y b + y^2 c = 0 (twice the quadratic form)
    disc = b * b - a * c
    root = field.sqrt(disc)
    if root is None or disc == 0:
        raise ArithmeticError("induced form on Ann(W)/W is not split of rank 2")
    if a != 0:
        return [(-b + root, a), (-b - root, a)]
    # a = 0: y = 0 or 2 b x + c y = 0
    return [(field.one, field.zero), (c, -2 * b)]


def extend_isotropic_plane(W: LinearSubspace) -> dict[IsoType, LinearSubspace]:
    """The two maximal isotropic subspaces containing an isotropic 3-space W."""
    if W.n != N or W.dim != 3:
        raise GeometryError(f"expected a 3-dimensional subspace of K^8, got dimension {W.dim}")
    if not W.is_isotropic():
        raise GeometryError("subspace is not isotropic")
    A = annihilator(W)
    comp = []
    acc = list(W.basis)
    for v in A.basis:
        if linalg.rank(acc + [list(v)]) > len(acc):
            acc.append(list(v))
            comp.append(list(v))
    if len(comp) != 2:
        raise ArithmeticError("annihilator has unexpected dimension")
    out = {}
    for x, y in _isotropic_lines_2d(comp[0], comp[1], W.field):
        v = [x * s + y * t for s, t in zip(comp[0], comp[1])]
        U = LinearSubspace(list(W.basis) + [v], N, W.field)
        out[iso_type(U)] = U
    if len(out) != 2:
        raise ArithmeticError("both extensions have the same type")
    return out


def eichler(e: Sequence, u: Sequence) -> list[list]:
    """Matrix of x -> x + B(x,e) u - B(x,u) e - q(u) B(x,e) e  (e isotropic, u orthogonal to e).

    A unipotent isometry of the form, integral when e and u are.
    """
    qu = qform(u)
    de, du = gdual(e), gdual(u)
    cols = []
    for k in range(N):
        x = unit(k)
        bxe, bxu = linalg.dot(de, x), linalg.dot(du, x)
        cols.append([x[i] + bxe * u[i] - bxu * e[i] - qu * bxe * e[i] for i in range(N)])
    return linalg.transpose(cols)


def apply(M: Sequence[Sequence], S: LinearSubspace) -> LinearSubspace:
    return LinearSubspace([linalg.matvec(M, v) for v in S.basis], S.n, S.field)


def random_isometry(rng: random.Random, factors: int = 6, bound: int = 3) -> list[list]:
    """Product of random integral Eichler transformations; lies in the identity component."""
    M = [unit(i) for i in range(N)]
    for _ in range(factors):
        i = rng.randrange(N)
        e = unit(i)
        u = [rng.randint(-bound, bound) for _ in range(N)]
        u[i] = 0
        u[N - 1 - i] = 0  # B(e_i, u) involves only the partner coordinate
        M = linalg.matmul(eichler(e, u), M)
    return M


def random_max_isotropic(kind: IsoType | str, field=QQ, seed: int = 0) -> LinearSubspace:
    """A random maximal isotropic subspace of the requested type.

    Over F_q: greedy isotropic extension followed by extend_isotropic_plane.
    Over Q: an integral isometry applied to the reference subspace of that type
    (random rational isotropic vectors are not reachable by bounded sampling).
    """
    kind = IsoType(kind)
    rng = random.Random(seed)
    if field is QQ:
        base = V0 if kind is IsoType.VERTICAL else H0
        while True:
            U = apply(random_isometry(rng), base)
            if U.dim == 4:
                return U
    W = LinearSubspace.zero(N, field)
    A = annihilator(W)
    while W.dim < 3:
        v = A.random_vector(rng)
        if qform(v) == 0 and not W.contains(v):
            W = LinearSubspace(list(W.basis) + [v], N, field)
            A = annihilator(W)
    return extend_isotropic_plane(W)[kind]


def random_subspace(dim: int, field=QQ, seed: int = 0, bound: int = 20) -> LinearSubspace:
    """A random linear subspace of K^8 with integer (or F_q) entries."""
    rng = random.Random(seed)
    while True:
        rows = [[field.random(rng, bound) for _ in range(N)] for _ in range(dim)]
        S = LinearSubspace(rows, N, field)
        if S.dim == dim:
            return S


def finite_field(q: int | None):
    return QQ if q is None else GF(q)


__all__ = [
    "FF",
    "GRAM",
    "GeometryError",
    "H0",
    "IsoType",
    "LINE_L",
    "LinearSubspace",
    "N",
    "P5_Q4",
    "ProjPoint",
    "V0",
    "annihilator",
    "apply",
    "bilinear",
    "eichler",
    "extend_isotropic_plane",
    "finite_field",
    "gdual",
    "iso_type",
    "max_isotropic_dim",
    "on_q6",
    "qform",
    "random_isometry",
    "random_max_isotropic",
    "random_subspace",
    "restrict_rank",
    "unit",
]
