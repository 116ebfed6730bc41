"""Homogeneous binary forms.

A form of degree d is stored as coefficients c_0..c_d of
``sum c_i * X^(d-i) * Y^i``. Dehomogenizing at X = 1 gives the univariate
polynomial ``sum c_i t^i`` whose roots t are the projective roots (1 : t);
a deficit between d and that polynomial's degree is the multiplicity of
the root (0 : 1) at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import upoly
from .fields import GF, GF2, common_field, format_scalar
from .poly import MultiPoly


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple
    names: tuple = ("X", "Y")

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "names", tuple(self.names))
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    # construction
    @classmethod
    def zero(cls, d: int, names=("X", "Y")) -> BinaryForm:
        return cls((0,) * (d + 1), names)

    @classmethod
    def const(cls, c, names=("X", "Y")) -> BinaryForm:
        return cls((c,), names)

    @classmethod
    def linear_through(cls, a, b, names=("X", "Y")) -> BinaryForm:
        """The linear form b*X - a*Y vanishing at (a : b)."""
        return cls((b, -a), names)

    @classmethod
    def from_upoly(cls, coeffs, d: int, names=("X", "Y")) -> BinaryForm:
        coeffs = list(coeffs)
        if len(coeffs) > d + 1:
            raise ValueError("polynomial degree exceeds form degree")
        return cls(tuple(coeffs) + (0,) * (d + 1 - len(coeffs)), names)

    @classmethod
    def from_multipoly(cls, p: MultiPoly, d: int | None = None, names=None) -> BinaryForm:
        if len(p.vars) != 2:
            raise ValueError("binary forms need exactly two variables")
        if not p.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        if d is None:
            d = max(p.total_degree(), 0)
        c = [0] * (d + 1)
        for (i, j), v in p.terms.items():
            if i + j != d:
                raise ValueError("polynomial degree does not match the form degree")
            c[j] = v
        return cls(tuple(c), names or p.vars)

    # queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def field(self):
        return common_field(self.coeffs)

    def __call__(self, x, y):
        d = self.degree
        total = 0
        for i, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * x ** (d - i) * y ** i
        return total

    def to_upoly(self) -> list:
        return upoly.trim(self.coeffs)

    def infinity_multiplicity(self) -> int:
        if self.is_zero:
            raise ValueError("zero form")
        return self.degree - upoly.deg(self.to_upoly())

    def to_multipoly(self, variables: Sequence[str] | None = None) -> MultiPoly:
        variables = tuple(variables or self.names)
        d = self.degree
        return MultiPoly(variables, {(d - i, i): c for i, c in enumerate(self.coeffs)})

    def rename(self, names) -> BinaryForm:
        return BinaryForm(self.coeffs, names)

    # arithmetic
    def _same(self, other: BinaryForm):
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other: BinaryForm) -> BinaryForm:
        self._same(other)
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.names)

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        self._same(other)
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.names)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(tuple(-a for a in self.coeffs), self.names)

    def __mul__(self, other) -> BinaryForm:
        if isinstance(other, BinaryForm):
            out = [0] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(tuple(out), self.names)
        return BinaryForm(tuple(a * other for a in self.coeffs), self.names)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BinaryForm:
        result = BinaryForm.const(1, self.names)
        for _ in range(n):
            result = result * self
        return result

    def exact_div(self, other: BinaryForm) -> BinaryForm:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero form")
        d = self.degree - other.degree
        if d < 0:
            raise ArithmeticError("divisor has larger degree")
        if self.is_zero:
            return BinaryForm.zero(d, self.names)
        # strip common powers of X (roots at infinity) before dividing at X = 1
        mi_self = self.infinity_multiplicity()
        mi_other = other.infinity_multiplicity()
        if mi_other > mi_self:
            raise ArithmeticError("inexact form division")
        q = upoly.exact_div(self.to_upoly(), other.to_upoly())
        return BinaryForm.from_upoly(q, d, self.names)

    def divides(self, other: BinaryForm) -> bool:
        try:
            other.exact_div(self)
        except ArithmeticError:
            return False
        return True

    def normalized(self) -> BinaryForm:
        """Scale so the first nonzero coefficient is 1 (zero form unchanged)."""
        for c in self.coeffs:
            if c != 0:
                ic = upoly.inv(c)
                return BinaryForm(tuple(a * ic for a in self.coeffs), self.names)
        return self

    def content_normalized(self) -> BinaryForm:
        """For rational forms, scale to coprime integers with positive leading entry."""
        if self.is_zero or self.field.characteristic != 0:
            return self.normalized()
        from math import gcd, lcm

        fr = [Fraction(c) for c in self.coeffs]
        den = lcm(*[f.denominator for f in fr])
        ints = [int(f * den) for f in fr]
        g = 0
        for x in ints:
            g = gcd(g, x)
        lead = next(x for x in ints if x != 0)
        sign = 1 if lead > 0 else -1
        return BinaryForm(tuple(Fraction(sign * x // g) for x in ints), self.names)

    def diff_x(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm.zero(0, self.names)
        return BinaryForm(tuple((d - i) * c for i, c in enumerate(self.coeffs[:-1])), self.names)

    def diff_y(self) -> BinaryForm:
        if self.degree == 0:
            return BinaryForm.zero(0, self.names)
        return BinaryForm(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0), self.names)

    def reduce_mod(self, q: int) -> BinaryForm:
        F = GF(q)
        return BinaryForm(tuple(F(Fraction(c)) for c in self.coeffs), self.names)

    def to_str(self) -> str:
        return self.to_multipoly().to_str()

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Normalized gcd; degree 0 means no common projective root."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    mi = min(f.infinity_multiplicity(), g.infinity_multiplicity())
    h = upoly.gcd(f.to_upoly(), g.to_upoly())
    d = upoly.deg(h) + mi
    return BinaryForm.from_upoly(h, d, f.names).normalized()


def gcd_many(forms: Sequence[BinaryForm]) -> BinaryForm | None:
    """gcd of all nonzero forms in the list; None when all are zero."""
    acc = None
    for f in forms:
        if f.is_zero:
            continue
        acc = f.normalized() if acc is None else gcd_forms(acc, f)
    return acc


def squarefree_decomposition(f: BinaryForm) -> list[tuple[BinaryForm, int]]:
    """Pairs (s, m): f = c * prod s^m with s squarefree and pairwise coprime.

    The root at infinity contributes the factor X with its multiplicity.
    """
    if f.is_zero:
        raise ValueError("squarefree decomposition of the zero form")
    out: dict[int, BinaryForm] = {}
    for s, m in upoly.squarefree_decomposition(f.to_upoly()):
        out[m] = BinaryForm.from_upoly(s, upoly.deg(s), f.names)
    mi = f.infinity_multiplicity()
    if mi:
        xf = BinaryForm((1, 0), f.names)
        out[mi] = out[mi] * xf if mi in out else xf
    return sorted(((s.normalized(), m) for m, s in out.items()), key=lambda t: t[1])


def squarefree_part(f: BinaryForm) -> BinaryForm:
    acc = BinaryForm.const(1, f.names)
    for s, _ in squarefree_decomposition(f):
        acc = acc * s
    return acc.normalized()


def root_count(f: BinaryForm) -> tuple[int, int]:
    """(projective roots with multiplicity, distinct roots) over the algebraic closure."""
    if f.is_zero:
        raise ValueError("root count of the zero form")
    return f.degree, squarefree_part(f).degree


def rational_roots(f: BinaryForm) -> list[tuple[tuple[Fraction, Fraction], int]]:
    """Rational projective roots (a : b) with multiplicity, normalized.

    Normalization: (1 : t) for finite roots, (0 : 1) at infinity.
    """
    if f.is_zero:
        raise ValueError("roots of the zero form")
    import sympy

    t = sympy.Symbol("t")
    out = []
    up = f.to_upoly()
    if upoly.deg(up) > 0:
        expr = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * t**i for i, c in enumerate(up))
        _, factors = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
        for fac, m in factors:
            if fac.degree() == 1:
                a1, a0 = fac.all_coeffs()
                r = -sympy.Rational(a0) / sympy.Rational(a1)
                out.append(((Fraction(1), Fraction(int(r.p), int(r.q))), int(m)))
    mi = f.infinity_multiplicity()
    if mi:
        out.append(((Fraction(0), Fraction(1)), mi))
    return sorted(out, key=lambda r: (r[0][0], r[0][1]))


def count_roots_fq(f: BinaryForm, q: int, ext: int = 1) -> int:
    """Number of distinct projective roots over F_{q^ext} (ext in {1, 2}) of a form over F_q.

    Rational forms are reduced mod q first.
    """
    F = GF(q)
    if f.field.characteristic == 0:
        f = f.reduce_mod(q)
    if f.is_zero:
        raise ValueError("form vanishes identically mod q")
    up = f.to_upoly()
    count = 1 if f.infinity_multiplicity() > 0 else 0
    if upoly.deg(up) <= 0:
        return count
    n = q**ext
    t = [F(0), F(1)]
    tq = upoly.powmod(t, n, up)
    h = upoly.gcd(up, upoly.sub(tq, t))
    return count + upoly.deg(h)


def roots_fq(f: BinaryForm, q: int, ext: int = 1) -> list[tuple]:
    """Distinct projective roots over F_q (as FF) or F_{q^2} (as FF2), by enumeration."""
    if f.field.characteristic == 0:
        f = f.reduce_mod(q)
    K = GF(q) if ext == 1 else GF2(q)
    out = []
    if f.infinity_multiplicity() > 0:
        out.append((K.zero, K.one))
    up = [K(c) for c in f.to_upoly()]
    for x in K.elements():
        if upoly.evaluate(up, x) == 0:
            out.append((K.one, x))
    return out
