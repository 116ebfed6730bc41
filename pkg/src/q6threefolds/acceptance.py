"""The acceptance table: thirteen exact checks, shared by the CLI and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra.fields import GF, QQ
from .algebra.forms import BinaryForm, gcd_forms
from .algebra.poly import MultiPoly
from .brute import BadReduction, brute_count
from .classify import (
    HORIZONTAL_P3,
    Q4_WEIL_DIVISOR,
    SMOOTH_QUADRIC_P4,
    VERONESE_CONE,
    classify_main,
    irreducible,
    jacobian_samples,
    normalize_p2,
    plane_decomposition,
    smoothness,
    validate_witness,
    verify_main,
)
from .expr import parse_poly
from .intersect import FINITE, bidegree, degree_trials, meet, meet_linear_exact
from .quadspace import (
    H0,
    V0,
    IsoType,
    LinearSubspace,
    ProjPoint,
    extend_isotropic_plane,
    iso_type,
    random_max_isotropic,
    random_subspace,
)
from .serialize import TEST_SUBSPACE
from .varieties import (
    VERONESE,
    Q4Divisor,
    builtin,
    plucker_relation,
    random_divisor,
    segre_divisor,
    wedge_plucker_poly,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed, "detail": self.detail}


PSI_WITNESS = "x1*x4^2 + x2*x6^2"


def criterion_1() -> CriterionResult:
    h = bidegree(builtin("horizontal3"))
    v = bidegree(builtin("vertical3"))
    D1 = LinearSubspace.from_equations([[0, 0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0, 0],
                                        [0, 0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 1]], field=QQ)
    ok = (h.a, h.b) == (1, 0) and (v.a, v.b) == (0, 1) and D1 == H0
    return CriterionResult(1, "generator bidegrees", ok,
                           f"horizontal3=({h.a},{h.b}) vertical3=({v.a},{v.b}) D1==H0:{D1 == H0}")


def criterion_2() -> CriterionResult:
    vc = builtin("veronese_cone")
    b = bidegree(vc)
    rep = meet_linear_exact(vc, TEST_SUBSPACE)
    pts = rep.points
    single = rep.status == FINITE and len(pts) == 1 and pts[0].size == 1
    ok = (b.a, b.b) == (1, 3) and single and pts[0].multiplicity == 1 and pts[0].transversal \
        and ProjPoint(pts[0].params) == ProjPoint([1, 0, 0, 0])
    where = pts[0].params if single else None
    return CriterionResult(2, "Veronese cone", ok,
                           f"bidegree=({b.a},{b.b}) status={rep.status} points={len(pts)} params={where and [str(x) for x in where]}"
                           f" mult={pts[0].multiplicity if single else None} transversal={pts[0].transversal if single else None}")


def acceptance_divisors() -> list[Q4Divisor]:
    return [random_divisor(1 + i % 4, seed=100 + i) for i in range(10)]


_DIVISOR_RUNS: dict = {}


def _divisor_runs():
    """Degree and bidegree runs on the seeded divisors (shared by criteria 3 and 4)."""
    if not _DIVISOR_RUNS:
        for i, D in enumerate(acceptance_divisors()):
            _DIVISOR_RUNS[i] = (D, degree_trials(D, 7, seed=i), bidegree(D, 7, seed=i))
    return _DIVISOR_RUNS


def criterion_3() -> CriterionResult:
    fixed = {"veronese_cone": (builtin("veronese_cone"), 4), "segre_divisor": (segre_divisor(), 3),
             "quadric5": (builtin("quadric5"), 2)}
    got = {k: degree_trials(X, 7).count for k, (X, _) in fixed.items()}
    ok = all(got[k] == d for k, (_, d) in fixed.items())
    bad = []
    for i, (D, deg, bd) in _divisor_runs().items():
        if deg.count != D.p + 1 or (bd.a, bd.b) != (1, D.p):
            bad.append(f"#{i} p={D.p} degree={deg.count} bidegree=({bd.a},{bd.b})")
    ok = ok and not bad
    return CriterionResult(3, "degrees", ok, f"{got}; 10 random divisors p in 1..4: "
                           + ("degree p+1 and bidegree (1,p) on all" if not bad else "; ".join(bad)))


def criterion_4() -> CriterionResult:
    trials, bad = 0, []
    for i, (D, _, bd) in _divisor_runs().items():
        for s, rep in zip(bd.vertical.seeds_used, bd.vertical.reports):
            trials += 1
            if rep.distinct != 1 or rep.total != 1 or not rep.all_transversal:
                bad.append(f"#{i} seed {s}: total {rep.total}")
        for s, status, _ in bd.vertical.rejected:
            if status == "nontransversal":
                bad.append(f"#{i} seed {s}: finite but not transversal")
    return CriterionResult(4, "vertical count contract", not bad,
                           f"{trials} finite vertical trials, each one transversal point" if not bad else "; ".join(bad))


def common_root_instance(seed: int = 0) -> Q4Divisor:
    """p = 3 divisor whose g1, g2 share a rational linear factor."""
    rng = random.Random(seed)
    while True:
        def r(d):
            return [rng.randint(-3, 3) for _ in range(d + 1)]

        h = BinaryForm(tuple(x or 1 for x in r(1)), ("x4", "x6"))
        g1 = h * BinaryForm(tuple(r(1)), ("x4", "x6"))
        g2 = h * BinaryForm(tuple(r(1)), ("x4", "x6"))
        if g1.is_zero or g2.is_zero or gcd_forms(g1, g2).degree != 1:
            continue
        D = Q4Divisor(3, r(3), list(g1.coeffs), list(g2.coeffs), r(2), r(2), label=f"common-root(seed={seed})")
        if irreducible(D).irreducible:
            return D


def criterion_6() -> CriterionResult:
    details, ok = [], True
    S = segre_divisor()
    sv = smoothness(S)
    full, _ = jacobian_samples(S, 500, seed=0)
    ok &= sv.verdict == "Smooth" and full == 500
    details.append(f"segre={sv.verdict} jacobian {full}/500")
    D = Q4Divisor.from_expr(PSI_WITNESS)
    sv = smoothness(D)
    want = ProjPoint([-1, 1, 0, 0, 0, 0, 0, 0])
    good = sv.verdict == "Singular" and sv.witness == want and validate_witness(D, want.coords, sv.planes)
    ok &= good
    details.append(f"x1x4^2+x2x6^2={sv.verdict}/{sv.kind} witness={sv.witness} validated={good}")
    sv = smoothness(Q4Divisor.from_expr("x4^3 + x6^3"))
    ok &= sv.verdict == "Singular" and sv.kind == "DoubleCone" and bool(sv.validated)
    details.append(f"x4^3+x6^3={sv.verdict}/{sv.kind}")
    C = common_root_instance(0)
    sv = smoothness(C)
    good = sv.verdict == "Singular" and sv.kind == "CommonRootPair" and sv.witness is not None \
        and validate_witness(C, sv.witness.coords, sv.planes)
    ok &= good
    details.append(f"common-root={sv.verdict}/{sv.kind} witness={sv.witness} validated={good}")
    return CriterionResult(6, "smoothness", ok, "; ".join(details))


def criterion_5() -> CriterionResult:
    cases = {}
    ok = True
    for name, X, want in (("horizontal3", builtin("horizontal3"), HORIZONTAL_P3),
                          ("quadric5", builtin("quadric5"), SMOOTH_QUADRIC_P4),
                          ("veronese_cone", builtin("veronese_cone"), VERONESE_CONE),
                          ("segre_divisor", segre_divisor(), Q4_WEIL_DIVISOR)):
        v = classify_main(X)
        cases[name] = v.case
        ok &= v.case == want and verify_main(v)
    ok &= len(set(cases.values())) == 4
    return CriterionResult(5, "main classification", ok, f"{cases}; evidence rechecked")


def criterion_7() -> CriterionResult:
    bad = []
    for i in range(10):
        D = random_divisor(2 + i % 4, seed=200 + i)
        if D.psi_degree() != D.p - 1:
            bad.append(f"#{i} p={D.p} psi_degree={D.psi_degree()}")
    W = Q4Divisor.from_expr(PSI_WITNESS)
    same = W.psi(1, 1) == W.psi(1, -1)
    ok = not bad and same
    return CriterionResult(7, "psi degree", ok,
                           ("psi_degree = p-1 on 10 divisors" if not bad else "; ".join(bad)) + f"; psi(1:1)=psi(1:-1): {same}")


def criterion_8() -> CriterionResult:
    bad = []
    for i in range(10):
        D = random_divisor(2, seed=300 + i)
        try:
            res = normalize_p2(D)
        except AssertionError as exc:
            bad.append(f"#{i}: {exc}")
            continue
        if res.transformed != segre_divisor():
            bad.append(f"#{i}: normal form mismatch")
    return CriterionResult(8, "p=2 normalization", not bad,
                           "M^T G M = c G and Segre normal form on 10 instances" if not bad else "; ".join(bad))


def criterion_9() -> CriterionResult:
    rng = random.Random(9)
    n = 0
    for i in range(50):
        D = random_divisor(1 + i % 5, seed=400 + i, coprime=False)
        for _ in range(20):
            a, b = 0, 0
            while a == 0 and b == 0:
                a, b = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
            D.restrict_to_pencil(a, b)  # raises on failure
            n += 1
    st = ("s", "t")
    s, t = MultiPoly.gens(st)
    one = MultiPoly.const(Fraction(1), st)
    u = {"u0": one, "u1": s + t, "u2": s * t}
    ver = [parse_poly(e, ("u0", "u1", "u2")).compose([u["u0"], u["u1"], u["u2"]], st) for e in VERONESE]
    wedge = wedge_plucker_poly()
    same = wedge == ver
    rel_wedge = plucker_relation(wedge).is_zero()
    cs = builtin("cubic_secant")
    rel_family = plucker_relation(list(cs.coords[1:7])).is_zero()
    ok = same and rel_wedge and rel_family
    return CriterionResult(9, "polynomial identities", ok,
                           f"pencil restriction {n}/1000; wedge==Veronese(1,s+t,st): {same}; "
                           f"Pluecker relation on wedge: {rel_wedge}, on cubic_secant: {rel_family}")


def criterion_10() -> CriterionResult:
    F = GF(101)
    V0q, H0q = V0.over(F), H0.over(F)
    samples = []
    bad = 0
    rederive = 0
    for i in range(200):
        kind = IsoType.VERTICAL if i % 2 else IsoType.HORIZONTAL
        U = random_max_isotropic(kind, F, seed=i)
        samples.append(U)
        if (U.intersect(V0q).dim + U.intersect(H0q).dim) % 2 != 1:
            bad += 1
        t = iso_type(U)
        W = LinearSubspace(U.basis[:3], field=F)
        ext = extend_isotropic_plane(W)
        if ext.get(t) != U or ext.get(t.other()) == U or t is not kind:
            rederive += 1
    pair_bad = 0
    for i in range(100):
        U, U2 = samples[i], samples[(7 * i + 3) % 200]
        same = iso_type(U) is iso_type(U2)
        if same != (U.intersect(U2).dim % 2 == 0):
            pair_bad += 1
    ok = bad == 0 and rederive == 0 and pair_bad == 0
    return CriterionResult(10, "parity over F_101", ok,
                           f"odd-sum failures {bad}/200, re-derivation failures {rederive}/200, pair parity failures {pair_bad}/100")


def oracle_subspaces(X, count: int = 3, primes=(7, 11)):
    """First seeded subspaces (generic P^4, then horizontal) with good reduction at every prime."""
    out = []
    for s in range(60):
        for W in (random_subspace(5, QQ, s), random_max_isotropic(IsoType.HORIZONTAL, QQ, s)):
            rep = meet(X, W)
            if rep.status != FINITE or not all(rep.reduces_well(q) for q in primes):
                continue
            try:
                brute = {(q, e): brute_count(X, W, q, e).count for q in primes for e in (1, 2)}
            except BadReduction:
                continue
            out.append((s, W, rep, brute))
            if len(out) == count:
                return out
    return out


def criterion_11() -> CriterionResult:
    details, ok = [], True
    for name in ("segre", "veronese_cone"):
        X = builtin(name)
        runs = oracle_subspaces(X)
        ok &= len(runs) == 3
        for s, _W, rep, brute in runs:
            pred = {(q, e): rep.count_mod(q, e) for q, e in brute}
            ok &= pred == brute
            details.append(f"{name}#{s} total={rep.total} F7:{brute[(7, 1)]}/{pred[(7, 1)]} F49:{brute[(7, 2)]}/{pred[(7, 2)]}"
                           f" F11:{brute[(11, 1)]}/{pred[(11, 1)]} F121:{brute[(11, 2)]}/{pred[(11, 2)]}")
    p2 = brute_count(builtin("horizontal3"), V0, 7).count
    vc = builtin("veronese_cone")
    t1, t2 = brute_count(vc, TEST_SUBSPACE, 11, 1).count, brute_count(vc, TEST_SUBSPACE, 11, 2).count
    ok &= p2 == 57 and t1 == 1 and t2 == 1
    details.append(f"horizontal3 and V0 over F7: {p2}; cone and test subspace over F11/F121: {t1}/{t2}")
    return CriterionResult(11, "finite-field oracle", ok, "; ".join(details))


def criterion_12() -> CriterionResult:
    r = irreducible(Q4Divisor.from_expr("x1*x4"))
    s = irreducible(segre_divisor())
    ok = (not r.irreducible and r.witness is not None and ProjPoint(list(r.witness)) == ProjPoint([0, 1])
          and r.plane_type is IsoType.VERTICAL and bool(r.plane_in_divisor) and s.irreducible)
    w = [str(x) for x in r.witness] if r.witness else None
    return CriterionResult(12, "irreducibility", ok,
                           f"x1x4: irreducible={r.irreducible} witness={w} plane={r.plane_type and r.plane_type.value}"
                           f" contained={r.plane_in_divisor}; segre: irreducible={s.irreducible}")


def criterion_13() -> CriterionResult:
    bad, n = [], 0
    for i in range(5):
        D = random_divisor(1 + i % 4, seed=500 + i)
        rep = plane_decomposition(D, samples=20, seed=i)
        n += rep.pairs
        if not rep.ok:
            bad.append(f"#{i}: {rep.counterexamples[:1]}")
    return CriterionResult(13, "plane decomposition", not bad,
                           f"{n} plane pairs meet only on L, off-L samples smooth" if not bad else "; ".join(bad))


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6,
    7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10, 11: criterion_11, 12: criterion_12,
    13: criterion_13,
}


def run_suite(only=None) -> list[CriterionResult]:
    out = []
    for k, fn in CRITERIA.items():
        if only and k not in only:
            continue
        try:
            out.append(fn())
        except Exception as exc:  # a crash is a failure of that item, not of the suite
            out.append(CriterionResult(k, fn.__name__, False, f"error: {exc!r}"))
    return out
