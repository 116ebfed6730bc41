"""Decision procedures for (1,p) threefolds in Q6.

classify_main sorts a threefold into one of four shapes from its linear span
and the rank of Q6 restricted to that span. smoothness decides a Q4 divisor
and, when singular, exhibits a witness point together with planes of the
divisor through it whose affine cones span at least 5 dimensions: no
4-dimensional tangent space can contain them all, so the witness is singular.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import linalg
from .algebra.fields import format_scalar
from .algebra.forms import BinaryForm, gcd_forms, rational_roots
from .algebra.poly import MultiPoly
from .intersect import bidegree, divisor_smooth_at, preimage, span_of
from .quadspace import (
    GRAM,
    LINE_L,
    GeometryError,
    IsoType,
    LinearSubspace,
    ProjPoint,
    annihilator,
    iso_type,
    max_isotropic_dim,
    qform,
    restrict_rank,
)
from .varieties import X_VARS, ParamVariety, Q4Divisor, on_line_l, pencil_coordinates, pencil_plane, segre_divisor

HORIZONTAL_P3 = "HorizontalP3"
SMOOTH_QUADRIC_P4 = "SmoothQuadricP4"
VERONESE_CONE = "VeroneseCone"
Q4_WEIL_DIVISOR = "Q4WeilDivisor"
INCONSISTENT = "Inconsistent"


class ClassifyError(ValueError):
    pass


def _vec_json(v):
    return [format_scalar(x) for x in v]


# main classification


@dataclass
class MainVerdict:
    case: str
    reason: str
    span: LinearSubspace
    bidegree: tuple
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        ev = dict(self.evidence)
        ev["span_basis"] = [_vec_json(v) for v in self.span.basis]
        ev["bidegree"] = list(self.bidegree)
        return {"case": self.case, "reason": self.reason, "evidence": ev}


def _decide(span: LinearSubspace, a: int, b: int) -> tuple[str, str, dict]:
    d = span.proj_dim
    r = restrict_rank(span)
    ev = {"span_dim": d, "restricted_rank": r}
    if a != 1:
        return INCONSISTENT, f"bidegree ({a},{b}) is not of the form (1,p)", ev
    p = b
    if d == 3:
        if span.is_isotropic() and iso_type(span) is IsoType.HORIZONTAL and p == 0:
            ev["iso_type"] = IsoType.HORIZONTAL.value
            return HORIZONTAL_P3, "span is a horizontal 3-plane", ev
        return INCONSISTENT, "span is a 3-plane that is not a horizontal isotropic one", ev
    ann = annihilator(span)
    ev["annihilator"] = [_vec_json(v) for v in ann.basis]
    if d == 4:
        if r == 5:
            if p != 1:
                return INCONSISTENT, f"smooth quadric in a P^4 must have p = 1, got {p}", ev
            return SMOOTH_QUADRIC_P4, "span is a P^4 on which Q6 has rank 5", ev
        if r in (3, 4):
            iso = max_isotropic_dim(ann)
            ev["annihilator_isotropic_dim"] = iso
            if iso >= 2:
                return Q4_WEIL_DIVISOR, "span is a singular P^4 section; its annihilator holds an isotropic line", ev
        return INCONSISTENT, f"P^4 span with restricted rank {r}", ev
    if d == 5:
        ev["annihilator_isotropic"] = ann.is_isotropic()
        if r == 4 and ann.dim == 2 and ann.is_isotropic():
            return Q4_WEIL_DIVISOR, "span is a P^5 of restricted rank 4 with isotropic annihilator line", ev
        return INCONSISTENT, f"P^5 span with restricted rank {r}", ev
    if d == 6 and p == 3 and ann.dim == 1:
        v = list(ann.basis[0])
        ev["vertex"] = _vec_json(v)
        if span.contains(v) and qform(v) == 0:
            return VERONESE_CONE, "span is a P^6 whose annihilator point lies on the span and on Q6", ev
        return INCONSISTENT, "annihilator point of the P^6 span is not on the threefold's span", ev
    return INCONSISTENT, f"no case matches span dimension {d} with p = {p}", ev


def classify_main(X, trials: int = 7, seed: int = 0, bideg=None) -> MainVerdict:
    """bideg: an (a, b) pair or a BidegreeResult; computed when omitted."""
    if bideg is None:
        bideg = bidegree(X, trials, seed)
    if hasattr(bideg, "a"):
        bideg = (bideg.a, bideg.b)
    span = span_of(X, seed=seed)
    case, reason, ev = _decide(span, *bideg)
    if case == VERONESE_CONE and isinstance(X, ParamVariety):
        v = [Fraction(x) for x in ann_vertex(span)]
        try:
            params = preimage(X, v)
            ev["vertex_jacobian_rank"] = X.jacobian_rank_at(params)
        except GeometryError:
            ev["vertex_jacobian_rank"] = None
    return MainVerdict(case, reason, span, tuple(bideg), ev)


def ann_vertex(span: LinearSubspace) -> list:
    return list(annihilator(span).basis[0])


def verify_main(verdict: MainVerdict) -> bool:
    """Recompute the decision from the recorded span and bidegree alone."""
    span = LinearSubspace(verdict.span.basis)
    case, _, ev = _decide(span, *verdict.bidegree)
    if case != verdict.case:
        return False
    for k in ("span_dim", "restricted_rank", "annihilator", "vertex"):
        if k in verdict.evidence and verdict.evidence[k] != ev.get(k):
            return False
    if case == VERONESE_CONE and verdict.evidence.get("vertex_jacobian_rank") is not None:
        return verdict.evidence["vertex_jacobian_rank"] < 4
    return True


# irreducibility


@dataclass
class IrreducibilityResult:
    irreducible: bool
    common_factor: BinaryForm
    witness: tuple | None = None
    plane: LinearSubspace | None = None
    plane_type: IsoType | None = None
    plane_in_divisor: bool | None = None
    residual: Q4Divisor | None = None

    def to_json(self) -> dict:
        out = {"irreducible": self.irreducible, "common_factor": self.common_factor.to_json()}
        if self.witness is not None:
            out["witness"] = [format_scalar(x) for x in self.witness]
            out["plane_basis"] = [_vec_json(v) for v in self.plane.basis]
            out["plane_type"] = self.plane_type.value
            out["plane_in_divisor"] = self.plane_in_divisor
            if self.residual is not None:
                out["residual"] = self.residual.to_json()
        return out


def _residual(D: Q4Divisor, a0, b0) -> Q4Divisor:
    """The divisor left after removing P(a0, b0): divide f by b0*x4 - a0*x6, adjusting by the Q4 relation."""
    names = D.g3.names
    ell = BinaryForm.linear_through(a0, b0, names)
    p = D.p
    g3, g5 = D.g3, D.g5
    if p >= 2:
        # add k*(x3*x6 - x4*x5) with k(a0, b0) chosen so that ell divides g3 and g5
        basis = BinaryForm((1,) + (0,) * (p - 2), names) if a0 != 0 else BinaryForm((0,) * (p - 2) + (1,), names)
        x4 = BinaryForm((1, 0), names)
        x6 = BinaryForm((0, 1), names)
        if b0 != 0:
            kappa = -Fraction(g3(a0, b0)) / (b0 * basis(a0, b0))
        else:
            kappa = Fraction(g5(a0, b0)) / (a0 * basis(a0, b0))
        k = basis * kappa
        g3 = g3 + x6 * k
        g5 = g5 - x4 * k
    parts = [D.gp, D.g1, D.g2, g3, g5]
    if not all(ell.divides(g) for g in parts):
        raise ClassifyError("residual divisor is not representable")
    q = [g.exact_div(ell) if not g.is_zero else BinaryForm.zero(g.degree - 1, names) for g in parts]
    return Q4Divisor(p - 1, *[list(g.coeffs) for g in q], label=f"residual of {D.label}")


def irreducible(D: Q4Divisor) -> IrreducibilityResult:
    h = D.common_factor()
    if h.degree == 0:
        return IrreducibilityResult(True, h)
    roots = rational_roots(h)
    if not roots:
        return IrreducibilityResult(False, h)
    (a0, b0), _ = roots[0]
    P = pencil_plane(a0, b0)
    inside = all(D.contains(v) for v in _plane_samples(P))
    try:
        residual = _residual(D, a0, b0)
    except ClassifyError:
        residual = None
    return IrreducibilityResult(False, h, (a0, b0), P, iso_type(P), inside, residual)


def _plane_samples(P: LinearSubspace, n: int = 6, seed: int = 0) -> list:
    rng = random.Random(seed)
    out = [list(v) for v in P.basis]
    out += [P.random_vector(rng, 5) for _ in range(n)]
    return [v for v in out if any(x != 0 for x in v)]


# smoothness


@dataclass
class NormalizationResult:
    M: list
    c: Fraction
    transformed: Q4Divisor

    def to_json(self) -> dict:
        return {"M": [_vec_json(r) for r in self.M], "c": format_scalar(self.c),
                "transformed": self.transformed.to_json()}


@dataclass
class SmoothVerdict:
    verdict: str
    kind: str
    witness: ProjPoint | None = None
    planes: list = field(default_factory=list)  # [((a, b), LinearSubspace)]
    validated: bool | None = None
    normalization: NormalizationResult | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "kind": self.kind, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.planes:
            out["planes"] = [{"at": [format_scalar(a), format_scalar(b)], "basis": [_vec_json(v) for v in P.basis]}
                             for (a, b), P in self.planes]
        if self.validated is not None:
            out["validated"] = self.validated
        if self.normalization is not None:
            out["normalization"] = self.normalization.to_json()
        return out


def probe_points(limit: int = 200):
    """(1:0), (0:1), (1:1), (1:-1), (1:2), (2:1), (1:-2), (2:-1), ... without repeats."""
    seen = set()
    out = [(1, 0), (0, 1), (1, 1), (1, -1)]
    n = 2
    while len(out) < limit:
        out += [(1, n), (n, 1), (1, -n), (n, -1)]
        n += 1
    for a, b in out:
        key = ProjPoint([a, b])
        if key not in seen:
            seen.add(key)
            yield Fraction(a), Fraction(b)


def _same(p, q) -> bool:
    return p[0] * q[1] == p[1] * q[0]


def validate_witness(D: Q4Divisor, z, planes) -> bool:
    """Each plane lies on the divisor inside its P(a,b) and passes through z; together they span >= 5 dims."""
    z = list(z)
    if not D.contains(z):
        return False
    vecs = []
    for (a, b), P in planes:
        if not P.contains(z) or not pencil_plane(a, b).contains_space(P):
            return False
        lam = D.lam(a, b)
        for v in P.basis:
            if on_line_l(v):
                continue
            (aa, bb), u = pencil_coordinates(v)
            s = Fraction(aa) / a if a != 0 else Fraction(bb) / b
            u = (u[0], u[1], u[2] * s, u[3] * s)
            if sum((c * x for c, x in zip(lam, u)), Fraction(0)) != 0:
                return False
        vecs.extend(P.basis)
    return LinearSubspace(vecs).dim >= 5


def _plane(D: Q4Divisor, a, b):
    fam = D.q_plane(a, b)
    if fam.whole:
        raise ClassifyError("a whole P(a,b) lies in the divisor")
    return (a, b), fam.plane


def smoothness(D: Q4Divisor, normalize: bool = True) -> SmoothVerdict:
    if D.p < 1:
        raise ClassifyError("smoothness needs p >= 1")
    g1, g2 = D.g1, D.g2
    # (i) double cone; decided before the irreducibility check, so whole planes P(a,b) may serve as certificate
    if g1.is_zero and g2.is_zero:
        z = [1, 0, 0, 0, 0, 0, 0, 0]
        planes = []
        for a, b in probe_points():
            planes.append(((a, b), D.q_plane(a, b).plane))
            if LinearSubspace([v for _, P in planes for v in P.basis]).dim >= 5:
                break
        return SmoothVerdict("Singular", "DoubleCone", ProjPoint(z), planes, validate_witness(D, z, planes),
                             detail="g1 = g2 = 0: every plane Q(a,b) contains L")
    if not irreducible(D).irreducible:
        raise ClassifyError("divisor is reducible: a whole plane P(a,b) splits off")
    # (v) p = 1
    if D.p == 1:
        c1, c2 = g1.coeffs[0], g2.coeffs[0]
        z = [-c2, c1, 0, 0, 0, 0, 0, 0]
        pts = list(probe_points(8))[:2]
        planes = [_plane(D, *ab) for ab in pts]
        return SmoothVerdict("Singular", "RankDeficient", ProjPoint(z), planes, validate_witness(D, z, planes),
                             detail="hyperplane section of Q4 through a point of its vertex line")
    # (ii) common root of g1, g2
    h = gcd_forms(g1, g2)
    if h.degree > 0:
        roots = rational_roots(h)
        if not roots:
            return SmoothVerdict("Singular", "CommonRootPair", None, [], False,
                                 detail=f"g1 and g2 share the irrational factor {h.to_str()}")
        (a0, b0), _ = roots[0]
        for a1, b1 in probe_points():
            if _same((a0, b0), (a1, b1)) or (g1(a1, b1) == 0 and g2(a1, b1) == 0):
                continue
            z = [-g2(a1, b1), g1(a1, b1), 0, 0, 0, 0, 0, 0]
            planes = [_plane(D, a0, b0), _plane(D, a1, b1)]
            return SmoothVerdict("Singular", "CommonRootPair", ProjPoint(z), planes, validate_witness(D, z, planes),
                                 detail=f"g1, g2 vanish together at ({format_scalar(a0)}:{format_scalar(b0)})")
    # (iii) psi of degree >= 2 has a double point
    if D.p >= 3:
        pair = psi_coincidence(D)
        if pair is None:
            return SmoothVerdict("Singular", "PsiDoublePoint", None, [], False,
                                 detail="no rational coincidence pair of psi found among probe points")
        (a1, b1), (a2, b2) = pair
        z = [-g2(a1, b1), g1(a1, b1), 0, 0, 0, 0, 0, 0]
        planes = [_plane(D, a1, b1), _plane(D, a2, b2)]
        return SmoothVerdict("Singular", "PsiDoublePoint", ProjPoint(z), planes, validate_witness(D, z, planes),
                             detail="psi takes the same value at two parameters")
    # (iv) p = 2 with coprime g1, g2
    norm = normalize_p2(D) if normalize else None
    return SmoothVerdict("Smooth", "JacobianSample", normalization=norm,
                         detail="p = 2 with coprime g1, g2: linearly equivalent to the Segre threefold")


def psi_coincidence(D: Q4Divisor, limit: int = 200):
    """First probe (a1:b1) whose psi-fibre holds a second rational point."""
    g1, g2 = D.g1, D.g2
    for a1, b1 in probe_points(limit):
        v1, v2 = g1(a1, b1), g2(a1, b1)
        if v1 == 0 and v2 == 0:
            continue
        y1, y2 = -v2, v1
        fibre = g1 * y1 + g2 * y2
        for (a2, b2), _ in rational_roots(fibre):
            if not _same((a1, b1), (a2, b2)):
                return (a1, b1), (Fraction(a2), Fraction(b2))
    return None


def jacobian_samples(D: Q4Divisor, samples: int = 500, seed: int = 0) -> tuple[int, list]:
    """Random points off L with a 4-dimensional tangent space; returns (count, failures)."""
    rng = random.Random(seed)
    ok, bad = 0, []
    for _ in range(samples):
        z = D.random_point(rng)
        if divisor_smooth_at(D, z):
            ok += 1
        else:
            bad.append(z)
    return ok, bad


# the p = 2 normal form


def _identity():
    return [[Fraction(int(i == j)) for j in range(8)] for i in range(8)]


def _shear(i: int, coeffs: dict) -> list:
    """Isometry with x_i -> x_i + sum_k c_k x_k (k in 3..6, 1-based), for i = 1 (via x8) or 2 (via x7).

    The compensating terms only involve x7 or x8, so the map is the identity
    on x3..x6 and x_i' = x_i + h on {x7 = x8 = 0}.
    """
    M = _identity()
    c3, c4, c5, c6 = (Fraction(coeffs.get(k, 0)) for k in (3, 4, 5, 6))
    if i == 1:
        s, col = 1, 7  # partner x8
    else:
        s, col = -1, 6  # partner x7, enters q with a minus sign
    r = i - 1
    M[r][2], M[r][3], M[r][4], M[r][5] = c3, c4, c5, c6
    # x6 -= s c3 xp, x5 += s c4 xp, x4 += s c5 xp, x3 -= s c6 xp
    M[5][col] += -s * c3
    M[4][col] += s * c4
    M[3][col] += s * c5
    M[2][col] += -s * c6
    M[r][col] += -s * (c3 * c6 - c4 * c5)
    return M


def _split_h(h: MultiPoly):
    """h = x6*h1 - x4*h2 with h1, h2 linear in x3..x6 (every term of h carries x4 or x6)."""
    h1, h2 = {}, {}
    for e, c in h.terms.items():
        e = list(e)
        if e[5]:
            e[5] -= 1
            k = e.index(1) + 1
            h1[k] = h1.get(k, 0) + c
        elif e[3]:
            e[3] -= 1
            k = e.index(1) + 1
            h2[k] = h2.get(k, 0) - c
        else:
            raise ClassifyError("quadratic part has a term without x4 or x6")
    return h1, h2


def _pullback(D: Q4Divisor, M) -> Q4Divisor:
    """The divisor data of f(M y), restricted to y7 = y8 = 0."""
    y = MultiPoly.gens(X_VARS)
    images = [sum((M[i][j] * y[j] for j in range(6)), MultiPoly.zero(X_VARS)) for i in range(8)]
    return Q4Divisor.from_poly(D.f.compose(images, X_VARS), D.p)


def normalize_p2(D: Q4Divisor) -> NormalizationResult:
    """An isometry M of Q6 preserving {x7 = x8 = 0} taking D to x1x6 - x2x4."""
    if D.p != 2:
        raise ClassifyError("normalize_p2 needs p = 2")
    g1, g2 = D.g1, D.g2
    A = [[g1.coeffs[0], g2.coeffs[0]], [g1.coeffs[1], g2.coeffs[1]]]  # rows: x4, x6 coefficients
    if linalg.det(A) == 0:
        raise ClassifyError("g1 and g2 are linearly dependent: not equivalent to the Segre threefold")
    # (x1, x2) = P (y1, y2) with p11 g1 + p21 g2 = x6, p12 g1 + p22 g2 = -x4
    col1 = linalg.solve(A, [0, 1])
    col2 = linalg.solve(A, [-1, 0])
    P = [[col1[0], col2[0]], [col1[1], col2[1]]]
    J = [[1, 0], [0, -1]]
    N = linalg.matmul(linalg.matmul(J, linalg.transpose(linalg.inverse(P))), J)
    MA = _identity()
    MA[0][0], MA[0][1], MA[1][0], MA[1][1] = P[0][0], P[0][1], P[1][0], P[1][1]
    # (x8, x7) = N (y8, y7)
    MA[7][7], MA[7][6], MA[6][7], MA[6][6] = N[0][0], N[0][1], N[1][0], N[1][1]
    D1 = _pullback(D, MA)
    h = D1.f - segre_divisor().f
    h1, h2 = _split_h(h)
    M1 = _shear(1, {k: -c for k, c in h1.items()})
    M2 = _shear(2, {k: -c for k, c in h2.items()})
    M = linalg.matmul(linalg.matmul(MA, M1), M2)
    c = _check_isometry(M)
    out = _pullback(D, M)
    if out != segre_divisor():
        raise AssertionError("normalization did not reach the Segre normal form")
    return NormalizationResult(M, c, out)


def _check_isometry(M) -> Fraction:
    G = [list(r) for r in GRAM]
    T = linalg.matmul(linalg.matmul(linalg.transpose(M), G), M)
    c = Fraction(T[0][7])
    if c == 0 or any(T[i][j] != c * G[i][j] for i in range(8) for j in range(8)):
        raise AssertionError("matrix does not preserve Q6")
    if any(M[r][j] != 0 for r in (6, 7) for j in range(6)):
        raise AssertionError("matrix does not preserve {x7 = x8 = 0}")
    return c


# plane decomposition


@dataclass
class DecompositionReport:
    pairs: int = 0
    pairs_on_l: int = 0
    members: int = 0
    members_ok: int = 0
    smooth_samples: int = 0
    smooth_ok: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.pairs == self.pairs_on_l and self.members == self.members_ok
                and self.smooth_samples == self.smooth_ok)

    def to_json(self) -> dict:
        return {"ok": self.ok, "pairs": self.pairs, "pairs_on_L": self.pairs_on_l, "members": self.members,
                "members_ok": self.members_ok, "smooth_samples": self.smooth_samples,
                "smooth_ok": self.smooth_ok, "counterexamples": self.counterexamples}


def plane_decomposition(D: Q4Divisor, samples: int = 50, seed: int = 0) -> DecompositionReport:
    """Sampled checks: Q(a,b) and Q(a',b') meet only on L; plane points lie on D; off-L points are smooth."""
    rng = random.Random(seed)
    rep = DecompositionReport()

    def rand_ab():
        while True:
            a, b = rng.randint(-20, 20), rng.randint(-20, 20)
            if a or b:
                return Fraction(a), Fraction(b)

    for _ in range(samples):
        ab, cd = rand_ab(), rand_ab()
        if _same(ab, cd):
            continue
        P, Q = D.q_plane(*ab), D.q_plane(*cd)
        if P.whole or Q.whole:
            rep.counterexamples.append({"whole_plane_at": [_vec_json(ab), _vec_json(cd)]})
            continue
        rep.pairs += 1
        meet = P.plane.intersect(Q.plane)
        if LINE_L.contains_space(meet):
            rep.pairs_on_l += 1
        else:
            rep.counterexamples.append({"pair": [_vec_json(ab), _vec_json(cd)],
                                        "meet": [_vec_json(v) for v in meet.basis]})
        for fam in (P, Q):
            v = fam.plane.random_vector(rng, 10)
            if all(x == 0 for x in v):
                continue
            rep.members += 1
            if D.contains(v):
                rep.members_ok += 1
            else:
                rep.counterexamples.append({"not_on_divisor": _vec_json(v)})
            if not on_line_l(v):
                rep.smooth_samples += 1
                if divisor_smooth_at(D, v):
                    rep.smooth_ok += 1
                else:
                    rep.counterexamples.append({"singular_off_L": _vec_json(v)})
    return rep
