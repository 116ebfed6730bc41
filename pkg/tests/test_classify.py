import pytest

from q6threefolds.acceptance import common_root_instance
from q6threefolds.algebra.forms import gcd_forms
from q6threefolds.algebra.linalg import matmul, transpose
from q6threefolds.classify import (
    GRAM,
    HORIZONTAL_P3,
    Q4_WEIL_DIVISOR,
    SMOOTH_QUADRIC_P4,
    VERONESE_CONE,
    ClassifyError,
    classify_main,
    irreducible,
    jacobian_samples,
    normalize_p2,
    plane_decomposition,
    probe_points,
    smoothness,
    validate_witness,
    verify_main,
)
from q6threefolds.intersect import bidegree
from q6threefolds.quadspace import IsoType
from q6threefolds.varieties import Q4Divisor, builtin, random_divisor, segre_divisor

EXPECTED = {
    "horizontal3": HORIZONTAL_P3,
    "quadric5": SMOOTH_QUADRIC_P4,
    "veronese_cone": VERONESE_CONE,
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_main_classification(name):
    v = classify_main(builtin(name), trials=3, seed=0)
    assert v.case == EXPECTED[name]
    assert verify_main(v)


def test_divisor_classifies_as_weil_divisor():
    v = classify_main(segre_divisor(), trials=3, seed=0)
    assert v.case == Q4_WEIL_DIVISOR
    assert verify_main(v)


def test_classification_reuses_given_bidegree():
    X = builtin("veronese_cone")
    b = bidegree(X, trials=3, seed=2)
    assert classify_main(X, bideg=b).case == VERONESE_CONE


def test_probe_order_starts_as_documented():
    pts = probe_points()
    first = [next(pts) for _ in range(6)]
    assert first == [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1)]


def test_segre_divisor_is_smooth():
    v = smoothness(segre_divisor())
    assert v.verdict == "Smooth"
    ok, bad = jacobian_samples(segre_divisor(), 100, seed=0)
    assert ok == 100 and not bad


def test_psi_double_point_has_validated_witness():
    D = Q4Divisor.from_expr("x1*x4^2 + x2*x6^2")
    v = smoothness(D)
    assert (v.verdict, v.kind, v.validated) == ("Singular", "PsiDoublePoint", True)
    assert [str(c) for c in v.witness.coords] == ["1", "-1", "0", "0", "0", "0", "0", "0"]
    assert validate_witness(D, v.witness.coords, v.planes)
    # a single plane never certifies a singular point
    assert not validate_witness(D, v.witness.coords, v.planes[:1])


def test_double_cone():
    v = smoothness(Q4Divisor.from_expr("x4^3 + x6^3"))
    assert (v.verdict, v.kind, v.validated) == ("Singular", "DoubleCone", True)


def test_p1_is_rank_deficient():
    v = smoothness(random_divisor(1, seed=2))
    assert (v.verdict, v.kind) == ("Singular", "RankDeficient")


def test_common_root_pair():
    D = common_root_instance(0)
    assert gcd_forms(D.g1, D.g2).degree >= 1
    v = smoothness(D)
    assert (v.verdict, v.kind, v.validated) == ("Singular", "CommonRootPair", True)


def test_reducible_divisor():
    res = irreducible(Q4Divisor.from_expr("x1*x4"))
    assert not res.irreducible
    assert res.plane_in_divisor and res.plane_type == IsoType.VERTICAL
    assert res.residual == Q4Divisor.from_expr("x1")
    assert irreducible(segre_divisor()).irreducible
    with pytest.raises(ClassifyError):
        smoothness(Q4Divisor.from_expr("x1*x4*x6 + x2*x4^2"))


@pytest.mark.parametrize("seed", range(4))
def test_normalize_p2(seed):
    D = random_divisor(2, seed=seed)
    n = normalize_p2(D)
    M = n.M
    assert matmul(transpose(M), matmul(GRAM, M)) == [[n.c * g for g in row] for row in GRAM]
    assert n.transformed == segre_divisor()


def test_normalize_p2_needs_p2():
    with pytest.raises(ClassifyError):
        normalize_p2(random_divisor(3, seed=0))


def test_plane_decomposition():
    rep = plane_decomposition(random_divisor(3, seed=1), samples=10, seed=0)
    assert rep.ok
