"""Zero-dimensional systems of plane curves over Q, solved exactly.

The common zeros of forms F_1..F_k in P^2 are found by elimination: after a
random integral change of coordinates, z is eliminated against a random
combination A of the F_j, the resultants are combined by gcd, and every
squarefree factor g(t) of that eliminant is lifted back by a gcd over the
algebra Q[t]/(g), splitting g whenever a zero divisor shows up. Solutions
are returned in clusters of Galois-conjugate points sharing one factor g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import upoly
from .algebra.forms import BinaryForm, rational_roots, squarefree_decomposition
from .algebra.poly import MultiPoly, resultant

XYZ = ("x", "y", "z")


class NonFinite(Exception):
    """The system has a positive-dimensional solution set."""


class NonGeneric(Exception):
    """A genericity assumption failed; a fresh random choice may help."""


@dataclass
class Cluster:
    """All points (1 : t : z(t)) ... mapped back to original coordinates, t a root of g."""

    g: list  # squarefree monic univariate polynomial in t (dense, lowest first)
    coords: list  # three elements of Q[t]/(g), each a dense polynomial of degree < deg g
    multiplicity: int

    @property
    def size(self) -> int:
        return upoly.deg(self.g)

    def rational_point(self) -> list | None:
        if self.size != 1:
            return None
        t0 = -Fraction(self.g[0]) / Fraction(self.g[1])
        return [upoly.evaluate(c, t0) for c in self.coords]

    def form(self, names=("X", "Y")) -> BinaryForm:
        return BinaryForm.from_upoly(self.g, self.size, names)


# arithmetic in Q[t]/(g)[z]; polynomials in z are lists of t-polynomials


def _reduce(f, g):
    out = [upoly.rem(c, g) for c in f]
    while out and not out[-1]:
        out.pop()
    return out


def _normalize(f, g):
    """Split g until f's leading coefficient is invertible (or f vanishes) on each part."""
    f = _reduce(f, g)
    if not f:
        return [(g, [])]
    d = upoly.gcd(f[-1], g)
    if upoly.deg(d) == 0:
        return [(g, f)]
    return _normalize(f, d) + _normalize(f, upoly.exact_div(upoly.monic(g), d))


def _krem(a, b, g):
    a = list(a)
    inv_lc = upoly.inverse_mod(b[-1], g)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = upoly.rem(upoly.mul(a[-1], inv_lc), g)
        k = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[k + i] = upoly.rem(upoly.sub(a[k + i], upoly.mul(c, bc)), g)
        a.pop()
        while a and not a[-1]:
            a.pop()
    return a


def _kmonic(f, g):
    if not f:
        return []
    inv_lc = upoly.inverse_mod(f[-1], g)
    return [upoly.rem(upoly.mul(c, inv_lc), g) for c in f]


def kgcd(a, b, g) -> list[tuple[list, list]]:
    """Pieces (g_i, h_i): g = prod g_i and h_i = monic gcd(a, b) over Q[t]/(g_i)."""
    out = []
    for g1, bn in _normalize(b, g):
        if not bn:
            for g2, an in _normalize(a, g1):
                out.append((g2, _kmonic(an, g2)))
        else:
            out.extend(kgcd(bn, _krem(_reduce(a, g1), bn, g1), g1))
    return out


def kgcd_many(polys, g) -> list[tuple[list, list]]:
    pieces = [(g, _reduce(polys[0], g))]
    for f in polys[1:]:
        nxt = []
        for gi, h in pieces:
            nxt.extend(kgcd(h, f, gi))
        pieces = nxt
    return pieces


def _z_coeffs(F: MultiPoly) -> list:
    """F(1, t, z) as a list (in z) of dense polynomials in t."""
    d = F.degree("z")
    out = [dict() for _ in range(max(d + 1, 0))]
    for (i, j, k), c in F.terms.items():
        out[k][j] = out[k].get(j, 0) + c
    res = []
    for dct in out:
        m = max(dct) if dct else -1
        res.append(upoly.trim([dct.get(j, 0) for j in range(m + 1)]))
    while res and not res[-1]:
        res.pop()
    return res


def _transform(F: MultiPoly, T) -> MultiPoly:
    """F(T (x, y, z)^T)."""
    x, y, z = MultiPoly.gens(XYZ)
    gens = [x, y, z]
    images = [sum((T[i][j] * gens[j] for j in range(3)), MultiPoly.zero(XYZ)) for i in range(3)]
    return F.compose(images, XYZ)


def _random_matrix(rng: random.Random, bound: int = 6):
    from .algebra.linalg import det

    while True:
        T = [[Fraction(rng.randint(-bound, bound)) for _ in range(3)] for _ in range(3)]
        if det(T) != 0:
            return T


def _binary(R: MultiPoly) -> BinaryForm:
    return BinaryForm.from_multipoly(R.drop(("x", "y")))


def _solve_once(forms: Sequence[MultiPoly], rng: random.Random) -> list[Cluster]:
    T = _random_matrix(rng)
    A = sum((rng.randint(1, 9) * F for F in forms), MultiPoly.zero(XYZ))
    At = _transform(A, T)
    if At.degree("z") != At.total_degree():
        raise NonGeneric("projection centre lies on the auxiliary curve")
    Ft = [_transform(F, T) for F in forms]
    G = None
    for F in Ft:
        if F.is_zero():
            continue
        R = resultant(At, F, "z") if F.degree("z") > 0 else F ** At.degree("z")
        if R.is_zero():
            raise NonFinite("auxiliary curve shares a component with an equation")
        B = _binary(R) if R.degree("z") <= 0 else None
        if B is None:
            raise NonGeneric("elimination did not remove z")
        G = B if G is None else _gcd(G, B)
    if G is None:
        raise NonFinite("all equations vanish identically")
    if G.degree == 0:
        return []
    if G.infinity_multiplicity() > 0:
        raise NonGeneric("a solution lies over the point at infinity of the projection")
    clusters = []
    polys = [_z_coeffs(At)] + [_z_coeffs(F) for F in Ft if not F.is_zero()]
    for s, m in squarefree_decomposition(G):
        g = upoly.monic(s.to_upoly())
        for gi, h in kgcd_many(polys, g):
            if not h:
                raise NonFinite("a whole projection line is contained in the solution set")
            if len(h) == 1:
                continue  # extraneous factor
            if len(h) != 2:
                raise NonGeneric("projection does not separate solutions")
            zt = upoly.scale(h[0], -1)
            local = [[Fraction(1)], [Fraction(0), Fraction(1)], zt]
            coords = []
            for i in range(3):
                acc = []
                for j in range(3):
                    acc = upoly.add(acc, upoly.scale(local[j], T[i][j]))
                coords.append(acc)
            for part in split_rational(gi):
                clusters.append(Cluster(part, [upoly.rem(c, part) for c in coords], m))
    for cl in clusters:
        for F in forms:
            if _eval_mod(F, cl.coords, cl.g):
                raise ArithmeticError("lifted solution does not satisfy the system")
    return clusters


def split_rational(g) -> list[list]:
    """Monic linear factors for the rational roots of g, then the remaining cofactor."""
    if upoly.deg(g) <= 1:
        return [g]
    out = []
    rest = upoly.monic(g)
    for (x, y), _ in rational_roots(BinaryForm.from_upoly(g, upoly.deg(g))):
        lin = [-y / x, Fraction(1)]
        out.append(lin)
        rest = upoly.exact_div(rest, lin)
    if upoly.deg(rest) > 0:
        out.append(rest)
    return out


def _gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    from .algebra.forms import gcd_forms

    return gcd_forms(f, g)


def _eval_mod(F: MultiPoly, coords, g) -> list:
    acc = []
    for e, c in F.terms.items():
        term = [c]
        for x, k in zip(coords, e):
            for _ in range(k):
                term = upoly.rem(upoly.mul(term, x), g)
        acc = upoly.add(acc, term)
    return upoly.rem(acc, g)


def _signature(clusters: list[Cluster]) -> tuple:
    return tuple(sorted((cl.size, cl.multiplicity) for cl in clusters))


def solve_plane(forms: Sequence[MultiPoly], seed: int = 0, attempts: int = 12) -> list[Cluster]:
    """Common zeros of homogeneous forms in (x, y, z), with multiplicities.

    The multiplicity of a point is min_j I_P(A, F_j) for a generic combination
    A of the forms; it equals 1 exactly at reduced points of the system.
    Two independent coordinate changes must agree before a result is returned.
    """
    forms = [F if F.vars == XYZ else F.embed(XYZ) for F in forms]
    forms = [F for F in forms if not F.is_zero()]
    if len(forms) < 2:
        raise NonFinite("fewer than two nonzero equations in P^2")
    rng = random.Random(seed)
    results = []
    nonfinite = 0
    for _ in range(attempts):
        try:
            results.append(_solve_once(forms, rng))
        except NonGeneric:
            continue
        except NonFinite:
            nonfinite += 1
            if nonfinite >= 2:
                raise
            continue
        if len(results) >= 2:
            if _signature(results[-1]) == _signature(results[-2]):
                return results[-1]
    raise NonGeneric("elimination did not stabilise under coordinate changes")


def cluster_points(clusters: list[Cluster]) -> int:
    return sum(cl.size * cl.multiplicity for cl in clusters)
