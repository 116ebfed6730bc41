"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .fields import common_field, format_scalar
from . import upoly


class MultiPoly:
    """A polynomial over an exact field in an ordered list of named variables.

    Terms are stored as ``{exponent tuple: coefficient}`` with no zero
    coefficients. Arithmetic requires identical variable lists; there is no
    implicit reordering.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            if c != 0:
                clean[e] = c
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c, variables: Sequence[str]) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables: Sequence[str]) -> MultiPoly:
        return cls(variables, {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str], coeff=1) -> MultiPoly:
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: coeff})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list[MultiPoly]:
        return [cls.var(v, variables) for v in variables]

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    @property
    def field(self):
        return common_field(self.terms.values())

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max((sum(w * k for w, k in zip(weights, e)) for e in self.terms), default=-1)

    def degree(self, var: str) -> int:
        i = self._index(var)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        weights = weights or (1,) * len(self.vars)
        degs = {sum(w * k for w, k in zip(weights, e)) for e in self.terms}
        return len(degs) <= 1

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"variable {var!r} not in {self.vars}") from None

    def _check(self, other: MultiPoly):
        if other.vars != self.vars:
            raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(other, self.vars)

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return MultiPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, t)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            return self.exact_div(c)
        ic = upoly.inv(c)
        return self * ic

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return self == MultiPoly.const(other, self.vars)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def leading(self) -> tuple[tuple, object]:
        """Lexicographically largest term (variables in declared order)."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading()
        li = upoly.inv(lc)
        rem = dict(self.terms)
        quo = {}
        while rem:
            e = max(rem)
            d = tuple(a - b for a, b in zip(e, le))
            if any(x < 0 for x in d):
                raise ArithmeticError("inexact polynomial division")
            qc = rem[e] * li
            quo[d] = qc
            for oe, oc in other.terms.items():
                ne = tuple(a + b for a, b in zip(d, oe))
                v = rem.get(ne, 0) - qc * oc
                if v == 0:
                    rem.pop(ne, None)
                else:
                    rem[ne] = v
        return MultiPoly(self.vars, quo)

    def divides(self, other: MultiPoly) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # calculus and substitution
    def diff(self, var: str) -> MultiPoly:
        i = self._index(var)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                t[ne] = c * e[i]
        return MultiPoly(self.vars, t)

    def coeffs_in(self, var: str) -> list[MultiPoly]:
        """Coefficients as polynomials (same variable list) of var^0, var^1, ..."""
        i = self._index(var)
        d = self.degree(var)
        buckets = [dict() for _ in range(max(d + 1, 0))]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    def evaluate(self, values):
        """Evaluate at a point given as a sequence (variable order) or a mapping."""
        if isinstance(values, Mapping):
            values = [values[v] for v in self.vars]
        values = list(values)
        if len(values) != len(self.vars):
            raise ValueError("wrong number of values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(values, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def compose(self, images: Sequence[MultiPoly], variables: Sequence[str] | None = None) -> MultiPoly:
        """Substitute ``images[i]`` for the i-th variable.

        All images must share one variable list, which becomes the result's.
        """
        images = list(images)
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        target = tuple(variables) if variables is not None else None
        for im in images:
            if isinstance(im, MultiPoly):
                target = target or im.vars
        if target is None:
            return MultiPoly.const(self.evaluate(images), ())
        images = [im if isinstance(im, MultiPoly) else MultiPoly.const(im, target) for im in images]
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(1, target)} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        out: dict = {}
        for e, c in self.terms.items():
            term = MultiPoly.const(c, target)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for te, tc in term.terms.items():
                out[te] = out.get(te, 0) + tc
        return MultiPoly(target, out)

    def subs(self, mapping: Mapping[str, object]) -> MultiPoly:
        """Substitute scalars or polynomials (in this variable list) for some variables."""
        images = []
        for v in self.vars:
            if v in mapping:
                x = mapping[v]
                images.append(x if isinstance(x, MultiPoly) else MultiPoly.const(x, self.vars))
            else:
                images.append(MultiPoly.var(v, self.vars))
        return self.compose(images, self.vars)

    def rename(self, variables: Sequence[str]) -> MultiPoly:
        if len(variables) != len(self.vars):
            raise ValueError("rename needs the same number of variables")
        return MultiPoly(variables, self.terms)

    def embed(self, variables: Sequence[str]) -> MultiPoly:
        """Re-express in a larger variable list containing all current variables."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.vars]
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in zip(idx, e):
                ne[i] = k
            t[tuple(ne)] = c
        return MultiPoly(variables, t)

    def drop(self, variables: Sequence[str]) -> MultiPoly:
        """Re-express in a smaller variable list; the dropped variables must not occur."""
        variables = tuple(variables)
        idx = [self.vars.index(v) for v in variables]
        keep = set(idx)
        t = {}
        for e, c in self.terms.items():
            if any(k for i, k in enumerate(e) if i not in keep):
                raise ValueError("polynomial involves a dropped variable")
            t[tuple(e[i] for i in idx)] = c
        return MultiPoly(variables, t)

    def map_coeffs(self, fn) -> MultiPoly:
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def to_upoly(self, var: str | None = None) -> list:
        """Dense coefficient list in a single variable (others must be absent)."""
        if var is None:
            if len(self.vars) != 1:
                raise ValueError("to_upoly needs a variable name for multivariate input")
            var = self.vars[0]
        i = self._index(var)
        out = [0] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial is not univariate in " + var)
            out[e[i]] = c
        return upoly.trim(out)

    @classmethod
    def from_upoly(cls, coeffs, var: str, variables: Sequence[str] | None = None) -> MultiPoly:
        variables = tuple(variables) if variables is not None else (var,)
        i = variables.index(var)
        t = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(variables)
            e[i] = k
            t[tuple(e)] = c
        return cls(variables, t)

    def __repr__(self):
        return f"MultiPoly({self.to_str()!r}, vars={self.vars})"

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            cs = format_scalar(c) if isinstance(c, (int, Fraction)) else repr(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: str) -> list[list[MultiPoly]]:
    """Rows: n shifted copies of f's coefficients, then m shifted copies of g's (highest power first)."""
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MultiPoly.zero(f.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return rows


def bareiss_det(rows, zero, one, div):
    """Fraction-free determinant over an integral domain with exact division ``div``."""
    n = len(rows)
    if n == 0:
        return one
    a = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def poly_det(rows: list[list[MultiPoly]], variables: Sequence[str]) -> MultiPoly:
    return bareiss_det(
        rows,
        MultiPoly.zero(variables),
        MultiPoly.const(1, variables),
        lambda a, b: a.exact_div(b),
    )


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant eliminating ``var``.

    Sign convention: the determinant of :func:`sylvester_matrix` with f's rows
    first, so ``res_x(x - a, x - b) = a - b``. Callers only rely on vanishing
    and degree.
    """
    f._check(g)
    if var not in f.vars:
        raise ValueError(f"variable {var!r} not in {f.vars}")
    if f.degree(var) <= 0 and g.degree(var) <= 0:
        raise ValueError("resultant needs at least one polynomial involving the variable")
    if f.is_zero() or g.is_zero():
        return MultiPoly.zero(f.vars)
    return poly_det(sylvester_matrix(f, g, var), f.vars)


def poly_gcd_univariate(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    var = f.vars[0]
    return MultiPoly.from_upoly(upoly.gcd(f.to_upoly(var), g.to_upoly(var)), var, f.vars)


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """Squarefree part f / gcd(f, f') of a univariate polynomial."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if len(f.vars) != 1:
        raise ValueError("squarefree_part expects a univariate polynomial")
    var = f.vars[0]
    return MultiPoly.from_upoly(upoly.squarefree_part(f.to_upoly(var)), var, f.vars)


def root_count(f: MultiPoly) -> tuple[int, int]:
    """(roots with multiplicity, distinct roots) over the algebraic closure."""
    if f.is_zero():
        raise ValueError("root count of the zero polynomial")
    return f.total_degree(), squarefree_part(f).total_degree()


def polys_from_scalars(values: Iterable, variables: Sequence[str]) -> list[MultiPoly]:
    return [MultiPoly.const(v, variables) for v in values]

