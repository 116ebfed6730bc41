"""Exact intersections of threefolds in Q6 with linear subspaces.

Each intersection is reported as clusters of conjugate points: a squarefree
binary form whose roots index the points, a multiplicity shared by the
cluster, and for rational points the parameters, image and a transversality
flag. Transversality at a point z means dim(T_z X ∩ W) = 1 on affine cones,
i.e. tangent space and W meet only in z. For non-rational clusters the flag
is inferred from multiplicity 1.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import linalg, upoly
from .algebra.fields import QQ, format_scalar
from .algebra.forms import (
    BinaryForm,
    count_roots_fq,
    gcd_many,
    rational_roots,
    squarefree_decomposition,
)
from .algebra.poly import MultiPoly
from .planar import XYZ, NonFinite, NonGeneric, solve_plane
from .quadspace import (
    LINE_L,
    P5_Q4,
    GeometryError,
    IsoType,
    LinearSubspace,
    ProjPoint,
    annihilator,
    bilinear,
    iso_type,
    qform,
    random_max_isotropic,
    random_subspace,
    restrict_rank,
)
from .varieties import AB, ParamVariety, Q4Divisor, on_line_l, pencil_coordinates

FINITE, NONFINITE, NONGENERIC = "finite", "nonfinite", "nongeneric"


class IntersectError(RuntimeError):
    pass


@dataclass
class IntPoint:
    minpoly: BinaryForm  # squarefree; one root per geometric point of the cluster
    multiplicity: int
    transversal: bool
    params: list | None = None
    point: ProjPoint | None = None
    aux: list = field(default_factory=list)  # rationals whose denominators must survive reduction

    @property
    def size(self) -> int:
        return self.minpoly.degree

    def to_json(self) -> dict:
        out = {
            "conjugates": self.size,
            "minpoly": self.minpoly.to_json(),
            "multiplicity": self.multiplicity,
            "transversal": self.transversal,
        }
        if self.params is not None:
            out["params"] = [format_scalar(x) for x in self.params]
        if self.point is not None:
            out["point"] = self.point.to_json()
        return out


@dataclass
class IntersectionReport:
    status: str
    points: list = field(default_factory=list)
    eliminant: BinaryForm | None = None
    method: str = ""
    reason: str = ""

    @property
    def total(self) -> int:
        return sum(p.size * p.multiplicity for p in self.points)

    @property
    def distinct(self) -> int:
        return sum(p.size for p in self.points)

    @property
    def all_transversal(self) -> bool:
        return all(p.transversal for p in self.points)

    @property
    def rational_points(self) -> list[IntPoint]:
        return [p for p in self.points if p.point is not None]

    def count_mod(self, q: int, ext: int = 1) -> int:
        """Points over F_{q^ext} predicted by the clusters (valid under good reduction)."""
        return sum(count_roots_fq(p.minpoly, q, ext) for p in self.points)

    def reduces_well(self, q: int) -> bool:
        """Cluster data stays q-integral, squarefree and of full degree mod q."""
        forms = [p.minpoly for p in self.points]
        coeffs = [c for f in forms for c in f.coeffs] + [x for p in self.points for x in p.aux]
        if any(Fraction(c).denominator % q == 0 for c in coeffs):
            return False
        for f in forms:
            fq = f.reduce_mod(q)
            if fq.is_zero or fq.to_upoly() == [] or upoly.deg(fq.to_upoly()) != upoly.deg(f.to_upoly()):
                return False
        if not forms:
            return True
        prod = forms[0]
        for f in forms[1:]:
            prod = prod * f
        from .algebra.forms import squarefree_part

        pq = prod.reduce_mod(q)
        return squarefree_part(pq).degree == prod.degree

    def to_json(self) -> dict:
        out = {"status": self.status, "method": self.method, "total": self.total,
               "points": [p.to_json() for p in self.points]}
        if self.eliminant is not None:
            out["eliminant"] = self.eliminant.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


def _nonfinite(method: str, reason: str) -> IntersectionReport:
    return IntersectionReport(NONFINITE, method=method, reason=reason)


def _nongeneric(method: str, reason: str) -> IntersectionReport:
    return IntersectionReport(NONGENERIC, method=method, reason=reason)


# helpers on binary forms


def split_rational(f: BinaryForm) -> list[tuple[BinaryForm, tuple | None]]:
    """Factor a squarefree form into rational linear factors and a cofactor.

    Returns (factor, root) pairs; root is None for the cofactor.
    """
    out = []
    rest = f
    for (a, b), _ in rational_roots(f):
        lin = BinaryForm.linear_through(a, b, f.names)
        out.append((lin, (a, b)))
        rest = rest.exact_div(lin)
    if rest.degree > 0:
        out.append((rest.normalized(), None))
    return out


def _det_forms(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det_forms(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return acc


def _minors(m, size):
    rows, cols = len(m), len(m[0])
    out = []
    for r in combinations(range(rows), size):
        for c in combinations(range(cols), size):
            out.append(_det_forms([[m[i][j] for j in c] for i in r]))
    return out


def _eval_matrix(m, a, b):
    return [[f(a, b) for f in row] for row in m]


def normalize_params(space, params) -> list:
    """Canonical representative: in each factor the first nonzero coordinate is 1 (weights respected)."""
    params = [Fraction(x) for x in params]
    if space.kind == "WP1112":
        u = params[:3]
        piv = next((x for x in u if x != 0), None)
        if piv is None:
            return [Fraction(0)] * 3 + [Fraction(1)]
        return [x / piv for x in u] + [params[3] / piv ** 2]
    out = []
    for g in space.split(params):
        piv = next(x for x in g if x != 0)
        out.extend(x / piv for x in g)
    return out


def _pt(v) -> ProjPoint:
    return ProjPoint([Fraction(x) for x in v])


# tangent spaces and transversality


def _degree_vector(V: ParamVariety) -> tuple:
    return next(V.space.multidegree(c) for c in V.coords if not c.is_zero())


def _is_linear(V: ParamVariety) -> bool:
    return V.space.kind == "P3" and all(c.is_zero() or c.total_degree() == 1 for c in V.coords)


def _is_implicit_quadric(V: ParamVariety) -> bool:
    A = V.ambient
    return A is not None and A.dim == V.dim + 2 and restrict_rank(A) == A.dim


def image_span(V: ParamVariety) -> LinearSubspace:
    """For a linear parametrization: the image subspace."""
    vs = V.space.variables
    cols = [[c.terms.get(tuple(1 if w == v else 0 for w in vs), 0) for c in V.coords] for v in vs]
    return LinearSubspace(cols)


def param_tangent(V: ParamVariety, params) -> LinearSubspace:
    return LinearSubspace(linalg.transpose(V.jacobian(params)))


def quadric_tangent(V: ParamVariety, z) -> LinearSubspace:
    return V.ambient.intersect(annihilator(LinearSubspace([list(z)])))


def divisor_tangent(D: Q4Divisor, z) -> LinearSubspace | None:
    """Affine-cone tangent space at a point off L, from the chart (a or b fixed to 1)."""
    z = list(z)
    if on_line_l(z):
        return None
    (a0, b0), u = pencil_coordinates(z)
    forms = D.lam_forms()
    if b0 != 0:
        a = Fraction(a0) / Fraction(b0)
        u = [u[0], u[1], u[2] * b0, u[3] * b0]
        vals = [f(a, 1) for f in forms]
        dpar = [f.diff_x()(a, 1) if f.degree > 0 else 0 for f in forms]
        dpsi = [0, 0, u[2], u[3], 0, 0, 0, 0]
        cols_u = [[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
                  [0, 0, a, 0, 1, 0, 0, 0], [0, 0, 0, a, 0, 1, 0, 0]]
    else:
        b = Fraction(b0) / Fraction(a0)
        u = [u[0], u[1], u[2] * a0, u[3] * a0]
        vals = [f(1, b) for f in forms]
        dpar = [f.diff_y()(1, b) if f.degree > 0 else 0 for f in forms]
        dpsi = [0, 0, 0, 0, u[2], u[3], 0, 0]
        cols_u = [[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0],
                  [0, 0, 1, 0, b, 0, 0, 0], [0, 0, 0, 1, 0, b, 0, 0]]
    dlam = [sum((d * x for d, x in zip(dpar, u)), Fraction(0))] + list(vals)
    jac_cols = [dpsi] + cols_u
    ker = linalg.kernel_basis([[Fraction(x) for x in dlam]], 5)
    vecs = [[sum((k[i] * jac_cols[i][r] for i in range(5)), Fraction(0)) for r in range(8)] for k in ker]
    return LinearSubspace(vecs)


def divisor_smooth_at(D: Q4Divisor, z) -> bool:
    """Smoothness at a point off L: the local equation has nonzero differential."""
    T = divisor_tangent(D, z)
    return T is not None and T.dim == 4


def tangent_space(X, z, params=None) -> LinearSubspace | None:
    if isinstance(X, Q4Divisor):
        return divisor_tangent(X, z)
    if _is_linear(X):
        return image_span(X)
    if _is_implicit_quadric(X):
        return quadric_tangent(X, z)
    if params is None:
        params = preimage(X, z)
    return param_tangent(X, params)


def _transversal(T: LinearSubspace | None, W: LinearSubspace, expected: int = 4) -> bool:
    return T is not None and T.dim == expected and T.intersect(W).dim == 1


def transversal_at(X, W: LinearSubspace, point, params=None) -> bool:
    z = list(point)
    if not W.contains(z):
        raise GeometryError("point is not on the subspace")
    if qform(z) != 0:
        raise GeometryError("point is not on Q6")
    if isinstance(X, Q4Divisor):
        if not X.contains(z):
            raise GeometryError("point is not on the divisor")
    elif params is None and not _is_linear(X) and not _is_implicit_quadric(X):
        params = preimage(X, z)
    elif _is_linear(X) and not image_span(X).contains(z):
        raise GeometryError("point is not on the variety")
    return _transversal(tangent_space(X, z, params), W)


def preimage(V: ParamVariety, z) -> list:
    """Parameters of an image point for the Segre and Veronese-cone shaped built-ins."""
    z = [Fraction(x) for x in z]
    if V.name == "segre":
        for i, j in ((0, 1), (2, 4), (3, 5)):
            if z[i] != 0 or z[j] != 0:
                s = (z[i], z[j])
                break
        else:
            raise GeometryError("point is not on the Segre threefold")
        v = [z[0], z[2], z[3]] if s[0] != 0 else [z[1], z[4], z[5]]
        params = list(s) + v
    elif V.name == "veronese_cone":
        if z[1] != 0:
            params = [Fraction(1), z[2] / z[1], z[3] / z[1], z[0] / z[1]]
        elif z[4] != 0:
            params = [Fraction(0), Fraction(1), z[5] / z[4], z[0] / z[4]]
        elif z[6] != 0:
            params = [Fraction(0), Fraction(0), Fraction(1), z[0] / z[6]]
        else:
            params = [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]
    else:
        raise GeometryError(f"no inverse map available for {V.name}; pass parameters explicitly")
    if ProjPoint(V.eval_affine(params)) != ProjPoint(z):
        raise GeometryError("point is not on the variety")
    return params


# parametrized varieties


def meet_linear_exact(V: ParamVariety, W: LinearSubspace, seed: int = 0, remix: bool = True) -> IntersectionReport:
    """Intersect a parametrized threefold with a linear subspace, with multiplicities.

    With remix, elimination is repeated on a random invertible recombination
    of W's equations and the totals must agree.
    """
    if _is_implicit_quadric(V):
        return _meet_quadric(V, W)
    if _is_linear(V):
        return _meet_linear_space(V, W)
    if V.space.kind == "P1xP2" and _degree_vector(V)[1] == 1:
        solver = _meet_segre_type
    elif V.space.kind == "WP1112":
        solver = _meet_cone_type
    else:
        raise IntersectError(f"no elimination strategy for {V.name} over {V.space.kind}")
    E = W.equations()
    rep = solver(V, W, E, seed)
    if not remix or len(E) < 2:
        return rep
    rng = random.Random(seed + 7)
    while True:
        M = [[Fraction(rng.randint(-5, 5)) for _ in E] for _ in E]
        if linalg.det(M) != 0:
            break
    E2 = [[sum((M[i][k] * E[k][j] for k in range(len(E))), Fraction(0)) for j in range(8)] for i in range(len(E))]
    rep2 = solver(V, W, E2, seed + 1)
    if rep.status == FINITE and rep2.status == FINITE:
        if rep.total != rep2.total:
            raise AssertionError(f"remixed equations changed the count: {rep.total} vs {rep2.total}")
    elif rep.status != rep2.status:
        return _nongeneric(rep.method, "outcome changed under remixing of the equations")
    return rep


def _meet_linear_space(V, W) -> IntersectionReport:
    I = image_span(V)
    S = I.intersect(W)
    method = "linear"
    if S.dim == 0:
        return IntersectionReport(FINITE, [], method=method)
    if S.dim > 1:
        return _nonfinite(method, f"the subspaces meet in a P^{S.dim - 1}")
    z = list(S.basis[0])
    C = [[c.terms.get(tuple(1 if w == v else 0 for w in V.space.variables), 0) for v in V.space.variables]
         for c in V.coords]
    params = normalize_params(V.space, linalg.solve([[Fraction(x) for x in r] for r in C], z))
    pt = IntPoint(BinaryForm((1, 0)), 1, True, params, _pt(z), aux=list(z))
    return IntersectionReport(FINITE, [pt], eliminant=BinaryForm((1, 0)), method=method)


def _meet_quadric(V, W) -> IntersectionReport:
    method = "implicit-quadric"
    S = V.ambient.intersect(W)
    k = S.dim
    if k == 0:
        return IntersectionReport(FINITE, [], method=method)
    if k == 1:
        v = list(S.basis[0])
        if qform(v) != 0:
            return IntersectionReport(FINITE, [], method=method)
        tr = _transversal(quadric_tangent(V, v), W)
        if not tr:
            return _nongeneric(method, "isolated non-transversal point: multiplicity not determined")
        return IntersectionReport(FINITE, [IntPoint(BinaryForm((1, 0)), 1, True, None, _pt(v), list(v))],
                                  eliminant=BinaryForm((1, 0)), method=method)
    if k >= 3:
        return _nonfinite(method, "the subspace meets the quadric's span in a plane or more")
    s1, s2 = S.basis
    B = BinaryForm((qform(s1), bilinear(s1, s2), qform(s2)))
    if B.is_zero:
        return _nonfinite(method, "a whole line lies on the quadric")
    points = []
    for part, m in squarefree_decomposition(B):
        for f, root in split_rational(part):
            if root is None:
                points.append(IntPoint(f, m, m == 1))
                continue
            x, y = root
            z = [x * p + y * r for p, r in zip(s1, s2)]
            tr = _transversal(quadric_tangent(V, z), W) if m == 1 else False
            points.append(IntPoint(f, m, tr, None, _pt(z), list(z)))
    return IntersectionReport(FINITE, points, eliminant=B, method=method)


def _linear_coeff_forms(V: ParamVariety):
    """For P1xP2 coordinates linear in v: C[j][l] = coefficient form of v_l in x_j."""
    s_names = V.space.groups[0]
    d = _degree_vector(V)[0]
    out = []
    for c in V.coords:
        row = []
        for l in range(3):
            coeffs = [Fraction(0)] * (d + 1)
            for e, val in c.terms.items():
                if e[2 + l] == 1:
                    coeffs[e[1]] += val
            row.append(BinaryForm(tuple(coeffs), s_names))
        out.append(row)
    return out


def _meet_segre_type(V, W, E, seed: int = 0) -> IntersectionReport:
    method = "segre-elimination"
    C = _linear_coeff_forms(V)
    d = _degree_vector(V)[0]
    names = V.space.groups[0]
    N = []
    for e in E:
        row = []
        for l in range(3):
            acc = BinaryForm.zero(d, names)
            for j in range(8):
                if e[j] != 0:
                    acc = acc + C[j][l] * e[j]
            row.append(acc)
        N.append(row)
    if len(N) < 3:
        return _nonfinite(method, "fewer than three equations: every fibre meets the subspace")
    G = gcd_many(_minors(N, 3))
    if G is None:
        return _nonfinite(method, "all maximal minors vanish")
    if G.degree == 0:
        return IntersectionReport(FINITE, [], eliminant=G, method=method)
    H = gcd_many([G] + _minors(N, 2))
    if H is not None and H.degree > 0:
        return _nonfinite(method, "a whole line of a fibre lies in the subspace")
    points = []
    for part, m in squarefree_decomposition(G):
        for f, root in split_rational(part):
            if root is None:
                points.append(IntPoint(f, m, m == 1))
                continue
            a, b = root
            K = linalg.kernel_basis(_eval_matrix(N, a, b), 3)
            if len(K) != 1:
                return _nonfinite(method, "fibre meets the subspace in a line")
            params = normalize_params(V.space, [a, b] + list(K[0]))
            z = V.eval_affine(params)
            if all(x == 0 for x in z):
                return _nongeneric(method, "solution in the base locus")
            tr = m == 1 and _transversal(param_tangent(V, params), W)
            points.append(IntPoint(f, m, tr, params, _pt(z), list(z)))
    return IntersectionReport(FINITE, points, eliminant=G, method=method)


def _cone_parts(V: ParamVariety):
    """Coordinates x_j = alpha_j u3 + q_j(u0, u1, u2)."""
    alphas, quads = [], []
    for c in V.coords:
        alpha = Fraction(0)
        rest = {}
        for e, val in c.terms.items():
            if e[3] == 1:
                alpha += val
            else:
                rest[e[:3]] = val
        alphas.append(alpha)
        quads.append(MultiPoly(XYZ, rest))
    return alphas, quads


def _meet_cone_type(V, W, E, seed: int = 0) -> IntersectionReport:
    method = "cone-elimination"
    alphas, quads = _cone_parts(V)
    A = [sum((e[j] * alphas[j] for j in range(8)), Fraction(0)) for e in E]
    Q = [sum((quads[j] * e[j] for j in range(8) if e[j] != 0), MultiPoly.zero(XYZ)) for e in E]
    if all(a == 0 for a in A):
        conics = [q for q in Q if not q.is_zero()]
        if len(conics) < 2:
            return _nonfinite(method, "a ruling of the cone lies in the subspace")
        try:
            clusters = solve_plane(conics, seed)
        except NonFinite:
            return _nonfinite(method, "a ruling of the cone lies in the subspace")
        except NonGeneric as exc:
            return _nongeneric(method, str(exc))
        if clusters:
            return _nonfinite(method, "a ruling of the cone lies in the subspace")
        return _nongeneric(method, "the subspace passes through the cone vertex")
    i0 = next(i for i, a in enumerate(A) if a != 0)
    conics = [Q[i] - Q[i0] * (A[i] / A[i0]) for i in range(len(E)) if i != i0]
    conics = [c for c in conics if not c.is_zero()]
    if len(conics) < 2:
        return _nonfinite(method, "the reduced system has fewer than two conics")
    try:
        clusters = solve_plane(conics, seed)
    except NonFinite as exc:
        return _nonfinite(method, str(exc))
    except NonGeneric as exc:
        return _nongeneric(method, str(exc))
    points = []
    elim = BinaryForm.const(Fraction(1))
    for cl in clusters:
        form = cl.form()
        elim = elim * form ** cl.multiplicity
        aux = [c for poly in cl.coords for c in poly] + [A[i0]]
        pt = cl.rational_point()
        if pt is None:
            points.append(IntPoint(form, cl.multiplicity, cl.multiplicity == 1, aux=aux))
            continue
        u3 = -Q[i0].evaluate(pt) / A[i0]
        params = normalize_params(V.space, list(pt) + [u3])
        z = V.eval_affine(params)
        tr = cl.multiplicity == 1 and _transversal(param_tangent(V, params), W)
        points.append(IntPoint(form, cl.multiplicity, tr, params, _pt(z), aux + list(z)))
    return IntersectionReport(FINITE, points, eliminant=elim, method=method)


# divisors on Q4


def _rows_N(w):
    """b*x3 - a*x5 and b*x4 - a*x6 on a vector w, as linear forms in (a, b)."""
    return BinaryForm((-w[4], w[2]), AB), BinaryForm((-w[5], w[3]), AB)


def meet_divisor_linear(D: Q4Divisor, W: LinearSubspace) -> IntersectionReport:
    """Intersect a divisor with any linear subspace missing L."""
    method = "pencil-elimination"
    Wp = W.intersect(P5_Q4)
    if Wp.intersect(LINE_L).dim > 0:
        return _nongeneric(method, "the subspace meets the vertex line L")
    k = Wp.dim
    if k == 0:
        return IntersectionReport(FINITE, [], method=method)
    w = [list(v) for v in Wp.basis]
    rows = [[_rows_N(v)[0] for v in w], [_rows_N(v)[1] for v in w]]
    r = 0
    if any(not f.is_zero for row in rows for f in row):
        r = 1
    if k >= 2 and any(not m.is_zero for m in _minors(rows, 2)):
        r = 2
    if k - r >= 2:
        return _nonfinite(method, "the subspace meets every pencil plane in a line")
    if k - r == 0:
        return _meet_divisor_fibre(D, W, w, rows, method)
    # one-dimensional kernel over Q(a, b)
    if r == 1:
        row = next(rw for rw in rows if any(not f.is_zero for f in rw))
        kappa = [row[1], -row[0]]
    else:
        m01 = rows[0][1] * rows[1][2] - rows[0][2] * rows[1][1]
        m02 = rows[0][0] * rows[1][2] - rows[0][2] * rows[1][0]
        m12 = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        kappa = [m01, -m02, m12]
    content = gcd_many(kappa)
    if content.degree > 0:
        return _nongeneric(method, "the subspace meets some pencil plane in a line")
    e = kappa[0].degree
    x = []
    for j in range(8):
        acc = BinaryForm.zero(e, AB)
        for kj, v in zip(kappa, w):
            if v[j] != 0:
                acc = acc + kj * v[j]
        x.append(acc)
    a_form = BinaryForm((1, 0), AB)
    b_form = BinaryForm((0, 1), AB)
    if b_form * x[2] != a_form * x[4] or b_form * x[3] != a_form * x[5]:
        raise AssertionError("kernel vector does not lie in the pencil")
    if e == 0:
        return _nongeneric(method, "the kernel point does not move with (a:b)")
    u3 = x[2].exact_div(a_form)
    u4 = x[3].exact_div(a_form)
    c1, c2, c3, c4 = D.lam_forms()
    phi = c1 * x[0] + c2 * x[1] + c3 * u3 + c4 * u4
    if phi.is_zero:
        return _nonfinite(method, "the eliminant vanishes identically")
    points = []
    for part, m in squarefree_decomposition(phi):
        for f, root in split_rational(part):
            if root is None:
                points.append(IntPoint(f, m, m == 1))
                continue
            a, b = root
            z = [xf(a, b) for xf in x]
            tr = m == 1 and _transversal(divisor_tangent(D, z), W)
            points.append(IntPoint(f, m, tr, [a, b], _pt(z), list(z)))
    return IntersectionReport(FINITE, points, eliminant=phi, method=method)


def _meet_divisor_fibre(D, W, w, rows, method) -> IntersectionReport:
    """Square case: the subspace meets only finitely many pencil planes, each in a line or point."""
    det = _det_forms(rows)
    if det.is_zero:
        raise AssertionError("rank computation inconsistent")
    points = []
    for part, _m in squarefree_decomposition(det):
        for f, root in split_rational(part):
            if root is None:
                return _nongeneric(method, "the subspace meets pencil planes at irrational (a:b)")
            a, b = root
            K = linalg.kernel_basis(_eval_matrix(rows, a, b), len(w))
            vecs = [[sum((kk[i] * w[i][j] for i in range(len(w))), Fraction(0)) for j in range(8)] for kk in K]
            lam = D.lam(a, b)
            vals = []
            for v in vecs:
                (aa, bb), u = pencil_coordinates(v)
                sc = Fraction(aa) / a if a != 0 else Fraction(bb) / b
                u = (u[0], u[1], u[2] * sc, u[3] * sc)
                vals.append(sum((c * ui for c, ui in zip(lam, u)), Fraction(0)))
            ker = linalg.kernel_basis([vals], len(vecs)) if any(x != 0 for x in vals) else None
            if ker is None:
                return _nonfinite(method, "a line of a pencil plane lies on the divisor")
            if len(ker) > 1:
                return _nonfinite(method, "a line of a pencil plane lies on the divisor")
            if not ker:
                continue
            z = [sum((ker[0][i] * vecs[i][j] for i in range(len(vecs))), Fraction(0)) for j in range(8)]
            tr = _transversal(divisor_tangent(D, z), W)
            form = BinaryForm.linear_through(a, b, AB)
            points.append(IntPoint(form, 1, tr, [a, b], _pt(z), list(z)))
    return IntersectionReport(FINITE, points, eliminant=det, method=method)


def meet_divisor_with_horizontal(D: Q4Divisor, H: LinearSubspace) -> IntersectionReport:
    if iso_type(H) is not IsoType.HORIZONTAL:
        raise GeometryError("subspace is not a horizontal 3-plane")
    rep = meet_divisor_linear(D, H)
    if rep.status == FINITE and rep.eliminant is not None and rep.eliminant.degree != D.p:
        return _nongeneric(rep.method, f"eliminant has degree {rep.eliminant.degree}, expected {D.p}")
    return rep


def meet(X, W: LinearSubspace, seed: int = 0) -> IntersectionReport:
    if isinstance(X, Q4Divisor):
        return meet_divisor_linear(X, W)
    return meet_linear_exact(X, W, seed)


# bidegree, degree, span


@dataclass
class TrialSummary:
    count: int | None
    seeds_used: list
    counts: list
    reports: list
    rejected: list

    def nonmodal(self) -> list:
        return [(s, c) for s, c in zip(self.seeds_used, self.counts) if c != self.count]

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "counts": self.counts,
            "seeds": self.seeds_used,
            "nonmodal": [{"seed": s, "count": c} for s, c in self.nonmodal()],
            "rejected": [{"seed": s, "status": st, "reason": why} for s, st, why in self.rejected],
        }


@dataclass
class BidegreeResult:
    a: int
    b: int
    trials: int
    vertical: TrialSummary
    horizontal: TrialSummary

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "trials": self.trials,
                "vertical": self.vertical.to_json(), "horizontal": self.horizontal.to_json()}


def _modal(counts: list) -> int:
    tally = Counter(counts)
    best = max(tally.values())
    return min(c for c, n in tally.items() if n == best)


def _run_trials(X, make_subspace, trials: int, seed: int, meet_fn, label: str, budget: int = 6) -> TrialSummary:
    counts, seeds, reports, rejected = [], [], [], []
    attempt = 0
    while len(counts) < trials and attempt < trials * budget:
        s = seed * 100003 + attempt
        attempt += 1
        W = make_subspace(s)
        rep = meet_fn(X, W, s)
        if rep.status != FINITE:
            rejected.append((s, rep.status, rep.reason))
            continue
        if not rep.all_transversal:
            rejected.append((s, "nontransversal", "a counted point is not transversal"))
            continue
        counts.append(rep.total)
        seeds.append(s)
        reports.append(rep)
    if not counts:
        raise IntersectError(f"no finite transversal {label} intersection in {attempt} attempts "
                             f"(the variety may contain a {label} subspace)")
    return TrialSummary(_modal(counts), seeds, counts, reports, rejected)


def _meet_vertical(X, W, s):
    return meet(X, W, s)


def _meet_horizontal(X, W, s):
    if isinstance(X, Q4Divisor):
        return meet_divisor_with_horizontal(X, W)
    return meet(X, W, s)


def bidegree(X, trials: int = 7, seed: int = 0) -> BidegreeResult:
    vert = _run_trials(X, lambda s: random_max_isotropic(IsoType.VERTICAL, QQ, s), trials, seed,
                       _meet_vertical, "vertical")
    hor = _run_trials(X, lambda s: random_max_isotropic(IsoType.HORIZONTAL, QQ, s), trials, seed,
                      _meet_horizontal, "horizontal")
    return BidegreeResult(vert.count, hor.count, trials, vert, hor)


def degree_trials(X, trials: int = 7, seed: int = 0) -> TrialSummary:
    return _run_trials(X, lambda s: random_subspace(5, QQ, s), trials, seed, meet, "linear P^4")


def degree(X, trials: int = 7, seed: int = 0) -> int:
    """Number of points on a generic P^4 (modal over trials)."""
    return degree_trials(X, trials, seed).count


def sample_point(X, rng: random.Random) -> list:
    return X.random_point(rng)


def span_of(X, samples: int = 20, seed: int = 0) -> LinearSubspace:
    """Span of random points, grown until 10 extra points add nothing."""
    rng = random.Random(seed)
    S = LinearSubspace([sample_point(X, rng) for _ in range(samples)])
    while True:
        T = S.join(LinearSubspace([sample_point(X, rng) for _ in range(10)]))
        if T.dim == S.dim:
            return S
        S = T
