"""Brute-force point counts over F_q and F_{q^2}, used as an independent oracle.

Field elements are small integers: a + q*b stands for a + b*w with w^2 a
fixed non-residue. Arithmetic goes through precomputed numpy tables, and
points are enumerated either through the parametrization (distinct images
are counted) or, for divisors and implicit quadrics, directly on the
subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import linalg
from .algebra.fields import GF
from .quadspace import P5_Q4, LinearSubspace
from .varieties import ParamVariety, Q4Divisor

BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    pass


class BadReduction(ValueError):
    pass


class Tables:
    def __init__(self, q: int, ext: int):
        if ext not in (1, 2):
            raise ValueError("ext must be 1 or 2")
        self.q, self.ext = q, ext
        Q = q ** ext
        self.size = Q
        e = np.arange(Q)
        a, b = e % q, e // q
        if ext == 1:
            self.add = (a[:, None] + a[None, :]) % q
            self.mul = (a[:, None] * a[None, :]) % q
        else:
            n = int(GF(q).nonresidue())
            re = (a[:, None] * a[None, :] + n * b[:, None] * b[None, :]) % q
            im = (a[:, None] * b[None, :] + b[:, None] * a[None, :]) % q
            self.add = ((a[:, None] + a[None, :]) % q) + q * ((b[:, None] + b[None, :]) % q)
            self.mul = re + q * im
        self.neg = ((-a) % q) + q * ((-b) % q)
        self.inv = np.zeros(Q, dtype=np.int64)
        for x in range(1, Q):
            self.inv[x] = int(np.nonzero(self.mul[x] == 1)[0][0])

    def encode(self, c) -> int:
        c = Fraction(c)
        if c.denominator % self.q == 0:
            raise BadReduction(f"denominator of {c} vanishes mod {self.q}")
        return c.numerator * pow(c.denominator, -1, self.q) % self.q

    def power(self, x: np.ndarray, k: int) -> np.ndarray:
        out = np.ones_like(x)
        for _ in range(k):
            out = self.mul[out, x]
        return out

    def lin(self, coeffs, cols) -> np.ndarray:
        """sum_j c_j * cols[j] for encoded scalars c_j."""
        acc = np.zeros_like(cols[0])
        for c, col in zip(coeffs, cols):
            if c:
                acc = self.add[acc, self.mul[c, col]]
        return acc


def proj_points(k: int, Q: int) -> np.ndarray:
    """Normalized representatives of P^k(F_Q): first nonzero coordinate equal to 1."""
    blocks = []
    for i in range(k + 1):
        free = k - i
        grid = np.indices((Q,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
        blk = np.zeros((grid.shape[0], k + 1), dtype=np.int64)
        blk[:, i] = 1
        blk[:, i + 1:] = grid
        blocks.append(blk)
    return np.vstack(blocks)


def _count(k: int, Q: int) -> int:
    return (Q ** (k + 1) - 1) // (Q - 1)


def _check_budget(n: int):
    if n > BUDGET:
        raise BudgetExceeded(f"enumeration needs {n} points, budget is {BUDGET}")


def _param_points(V: ParamVariety, Q: int) -> np.ndarray:
    kind = V.space.kind
    if kind in ("P1", "P2", "P3"):
        k = len(V.space.variables) - 1
        _check_budget(_count(k, Q))
        return proj_points(k, Q)
    if kind == "WP1112":
        _check_budget(_count(2, Q) * Q + 1)
        base = proj_points(2, Q)
        u3 = np.repeat(np.arange(Q), base.shape[0])
        pts = np.hstack([np.tile(base, (Q, 1)), u3[:, None]])
        return np.vstack([pts, np.array([[0, 0, 0, 1]])])
    if kind in ("P1xP2", "P1xP1"):
        k2 = len(V.space.groups[1]) - 1
        n1, n2 = Q + 1, _count(k2, Q)
        _check_budget(n1 * n2)
        A, B = proj_points(1, Q), proj_points(k2, Q)
        return np.hstack([np.repeat(A, n2, axis=0), np.tile(B, (n1, 1))])
    raise ValueError(f"no enumeration for {kind}")


def _eval_coords(V: ParamVariety, P: np.ndarray, T: Tables) -> np.ndarray:
    cols = [P[:, i] for i in range(P.shape[1])]
    cache = {}

    def pw(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = T.power(cols[i], k)
        return cache[(i, k)]

    out = np.zeros((P.shape[0], 8), dtype=np.int64)
    for j, c in enumerate(V.coords):
        acc = np.zeros(P.shape[0], dtype=np.int64)
        for e, val in c.terms.items():
            term = np.full(P.shape[0], T.encode(val), dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    term = T.mul[term, pw(i, k)]
            acc = T.add[acc, term]
        out[:, j] = acc
    return out


def _normalize_rows(X: np.ndarray, T: Tables) -> np.ndarray:
    nz = X != 0
    keep = nz.any(axis=1)
    X = X[keep]
    idx = nz[keep].argmax(axis=1)
    piv = X[np.arange(X.shape[0]), idx]
    return T.mul[X, T.inv[piv][:, None]]


def _distinct(X: np.ndarray, T: Tables) -> int:
    X = _normalize_rows(X, T)
    weights = np.array([T.size ** j for j in range(8)], dtype=np.int64)
    return int(np.unique(X @ weights).size)


def _reduced_equations(W: LinearSubspace, T: Tables):
    E = W.equations()
    Eq = [[T.encode(c) for c in row] for row in E]
    if E and linalg.rank([[GF(T.q)(c) for c in row] for row in Eq]) != len(E):
        raise BadReduction(f"the subspace has bad reduction mod {T.q}")
    return Eq


def _in_subspace(X: np.ndarray, Eq, T: Tables) -> np.ndarray:
    mask = np.ones(X.shape[0], dtype=bool)
    cols = [X[:, j] for j in range(8)]
    for row in Eq:
        mask &= T.lin(row, cols) == 0
    return mask


def _span_points(S: LinearSubspace, T: Tables) -> np.ndarray:
    """All points of P(S) over F_Q, as rows in C^8 (encoded)."""
    B = [[T.encode(c) for c in v] for v in S.basis]
    if linalg.rank([[GF(T.q)(c) for c in row] for row in B]) != len(B):
        raise BadReduction(f"basis loses rank mod {T.q}")
    k = len(B) - 1
    _check_budget(_count(k, T.size))
    C = proj_points(k, T.size)
    out = np.zeros((C.shape[0], 8), dtype=np.int64)
    for j in range(8):
        out[:, j] = T.lin([B[i][j] for i in range(len(B))], [C[:, i] for i in range(len(B))])
    return out


def _qform(X: np.ndarray, T: Tables) -> np.ndarray:
    m = T.mul
    s = T.add[m[X[:, 0], X[:, 7]], T.neg[m[X[:, 1], X[:, 6]]]]
    s = T.add[s, m[X[:, 2], X[:, 5]]]
    return T.add[s, T.neg[m[X[:, 3], X[:, 4]]]]


def _form_eval(coeffs, x, y, T: Tables) -> np.ndarray:
    d = len(coeffs) - 1
    acc = np.zeros_like(x)
    for i, c in enumerate(coeffs):
        c = T.encode(c)
        if c:
            acc = T.add[acc, T.mul[c, T.mul[T.power(x, d - i), T.power(y, i)]]]
    return acc


def _divisor_mask(D: Q4Divisor, X: np.ndarray, T: Tables) -> np.ndarray:
    """Membership in the divisor for points of Q4 (rows of X)."""
    x1, x2, x3, x4, x5, x6 = (X[:, j] for j in range(6))
    onL = (x3 == 0) & (x4 == 0) & (x5 == 0) & (x6 == 0)
    # off D1 the divisor is cut out by f
    f = _form_eval(D.gp.coeffs, x4, x6, T)
    for g, x in ((D.g1, x1), (D.g2, x2), (D.g3, x3), (D.g5, x5)):
        f = T.add[f, T.mul[x, _form_eval(g.coeffs, x4, x6, T)]]
    mask = f == 0
    # on D1 minus L: u4 = 0, (a : b) = (x3 : x5), lam = g1 u1 + g2 u2 + c3 u3
    d1 = (x4 == 0) & (x6 == 0) & ~onL
    if d1.any():
        a, b = x3[d1], x5[d1]
        c1 = _form_eval(D.g1.coeffs, a, b, T)
        c2 = _form_eval(D.g2.coeffs, a, b, T)
        c3 = T.add[T.mul[a, _form_eval(D.g3.coeffs, a, b, T)], T.mul[b, _form_eval(D.g5.coeffs, a, b, T)]]
        # u3 = 1 in the scaling where (x3, x5) = (a, b)
        lam = T.add[T.add[T.mul[c1, x1[d1]], T.mul[c2, x2[d1]]], c3]
        mask[d1] = lam == 0
    if onL.any():
        if D.p >= 2:
            mask[onL] = True
        else:
            g1, g2 = T.encode(D.g1.coeffs[0]), T.encode(D.g2.coeffs[0])
            mask[onL] = T.add[T.mul[g1, x1[onL]], T.mul[g2, x2[onL]]] == 0
    return mask


@dataclass
class BruteCount:
    q: int
    ext: int
    count: int
    enumerated: int

    def to_json(self) -> dict:
        return {"q": self.q, "ext": self.ext, "count": self.count, "enumerated": self.enumerated}


def brute_count(X, W: LinearSubspace, q: int, ext: int = 1) -> BruteCount:
    """Number of F_{q^ext}-points of X inside P(W), by exhaustive enumeration."""
    if q % 2 == 0 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError("q must be an odd prime")
    if ext == 2 and q > 13:
        raise BudgetExceeded("quadratic extensions are limited to q <= 13")
    T = Tables(q, ext)
    Eq = _reduced_equations(W, T)
    if isinstance(X, Q4Divisor):
        S = W.intersect(P5_Q4)
        if S.dim == 0:
            return BruteCount(q, ext, 0, 0)
        pts = _span_points(S, T)
        pts = pts[_qform(pts, T) == 0]
        n = int(_divisor_mask(X, pts, T).sum())
        return BruteCount(q, ext, n, pts.shape[0])
    from .intersect import _is_implicit_quadric

    if _is_implicit_quadric(X):
        S = W.intersect(X.ambient)
        if S.dim == 0:
            return BruteCount(q, ext, 0, 0)
        _reduced_equations(X.ambient, T)
        pts = _span_points(S, T)
        return BruteCount(q, ext, int((_qform(pts, T) == 0).sum()), pts.shape[0])
    P = _param_points(X, T.size)
    imgs = _eval_coords(X, P, T)
    imgs = imgs[_in_subspace(imgs, Eq, T)]
    return BruteCount(q, ext, _distinct(imgs, T) if imgs.size else 0, P.shape[0])


def brute_counts(X, W: LinearSubspace, q: int) -> tuple[int, int]:
    return brute_count(X, W, q, 1).count, brute_count(X, W, q, 2).count


def subspace_points_mod(W: LinearSubspace, q: int) -> int:
    """|P(W)(F_q)|, for sanity checks."""
    return _count(W.dim - 1, q)


__all__ = ["BruteCount", "BudgetExceeded", "BadReduction", "Tables", "brute_count", "brute_counts",
           "proj_points"]
