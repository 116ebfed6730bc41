import random
from fractions import Fraction

import pytest

from q6threefolds.algebra.fields import QQ
from q6threefolds.algebra.poly import MultiPoly
from q6threefolds.intersect import (
    FINITE,
    NONFINITE,
    bidegree,
    degree,
    meet,
    meet_divisor_with_horizontal,
    meet_linear_exact,
    normalize_params,
    preimage,
    span_of,
    split_rational,
    tangent_space,
    transversal_at,
)
from q6threefolds.algebra.forms import BinaryForm
from q6threefolds.planar import NonFinite, XYZ, cluster_points, solve_plane
from q6threefolds.quadspace import H0, V0, GeometryError, IsoType, random_max_isotropic
from q6threefolds.serialize import TEST_SUBSPACE
from q6threefolds.varieties import Q4Divisor, builtin, random_divisor, segre_divisor

BIDEGREES = {"horizontal3": (1, 0), "vertical3": (0, 1), "quadric5": (1, 1), "segre": (1, 2), "veronese_cone": (1, 3)}


# plane curve solver


def test_solve_plane_conics():
    x, y, z = MultiPoly.gens(XYZ)
    # two conics meeting in four points, two of them irrational
    F = x * x + y * y - 2 * z * z
    G = x * y - z * z
    clusters = solve_plane([F, G], seed=0)
    assert cluster_points(clusters) == 4
    tangent = solve_plane([y * z - x * x, y], seed=1)
    assert cluster_points(tangent) == 2
    assert [c.multiplicity for c in tangent] == [2]


def test_solve_plane_common_component():
    x, y, z = MultiPoly.gens(XYZ)
    with pytest.raises(NonFinite):
        solve_plane([x * y, x * z], seed=0)


def test_split_rational():
    f = BinaryForm((Fraction(-2), Fraction(1))) * BinaryForm((1, 0, 1))
    parts = split_rational(f)
    roots = [r for _, r in parts if r is not None]
    assert len(parts) == 2 and len(roots) == 1


# the exact intersection engine


def test_cone_meets_test_subspace_in_one_point():
    rep = meet(builtin("veronese_cone"), TEST_SUBSPACE)
    assert rep.status == FINITE and rep.total == 1
    (pt,) = rep.points
    assert pt.multiplicity == 1 and pt.transversal
    assert [str(c) for c in pt.params] == ["1", "0", "0", "0"]


def test_linear_nonfinite():
    rep = meet(builtin("horizontal3"), V0)
    assert rep.status == NONFINITE


@pytest.mark.parametrize("name", sorted(BIDEGREES))
def test_builtin_bidegrees(name):
    res = bidegree(builtin(name), trials=3, seed=0)
    assert (res.a, res.b) == BIDEGREES[name]


@pytest.mark.parametrize("name,d", [("segre", 3), ("quadric5", 2), ("veronese_cone", 4)])
def test_builtin_degrees(name, d):
    assert degree(builtin(name), trials=3, seed=0) == d


def test_divisor_counts():
    D = Q4Divisor.from_expr("x1*x4^2 + x2*x6^2")
    H = random_max_isotropic(IsoType.HORIZONTAL, QQ, 1)
    rep = meet_divisor_with_horizontal(D, H)
    assert rep.status == FINITE and rep.total == 3
    assert degree(D, trials=3, seed=0) == 4
    assert degree(segre_divisor(), trials=3, seed=0) == 3


def test_horizontal_check_rejects_vertical():
    with pytest.raises((GeometryError, ValueError)):
        meet_divisor_with_horizontal(segre_divisor(), V0)


@pytest.mark.parametrize("seed", range(3))
def test_points_lie_on_both(seed):
    X = builtin("segre")
    W = random_max_isotropic(IsoType.HORIZONTAL, QQ, seed)
    rep = meet_linear_exact(X, W, seed=seed)
    assert rep.status == FINITE
    for pt in rep.rational_points:
        assert W.contains(pt.point.coords)
        assert transversal_at(X, W, pt.point.coords, pt.params)


def test_remix_invariance():
    X = builtin("veronese_cone")
    W = random_max_isotropic(IsoType.HORIZONTAL, QQ, 5)
    totals = {meet_linear_exact(X, W, seed=s).total for s in range(3)}
    assert totals == {3}


def test_transversal_at_rejects_points_off_w():
    with pytest.raises(GeometryError):
        transversal_at(builtin("horizontal3"), V0, [0, 0, 0, 0, 0, 0, 0, 1])


def test_tangent_spaces_have_dimension_four():
    rng = random.Random(0)
    for X in (builtin("segre"), builtin("quadric5"), random_divisor(2, seed=3)):
        for _ in range(3):
            z = X.random_point(rng)
            T = tangent_space(X, z)
            assert T is not None and T.dim == 4


def test_preimage_and_normalize():
    V = builtin("segre")
    params = [Fraction(2), Fraction(3), Fraction(1), Fraction(-1), Fraction(4)]
    z = V.eval_affine(params)
    pre = preimage(V, z)
    assert normalize_params(V.space, pre) == normalize_params(V.space, params)
    C = builtin("veronese_cone")
    assert preimage(C, C.eval_affine([0, 0, 0, 1])) == [0, 0, 0, 1]
    with pytest.raises(GeometryError):
        preimage(V, [0, 0, 0, 0, 0, 0, 1, 0])


@pytest.mark.parametrize("name,dim", [("horizontal3", 3), ("quadric5", 4), ("segre", 5), ("veronese_cone", 6)])
def test_span_dimension(name, dim):
    assert span_of(builtin(name), seed=0).proj_dim == dim


def test_random_divisor_bidegree():
    D = random_divisor(3, seed=9)
    res = bidegree(D, trials=3, seed=1)
    assert (res.a, res.b) == (1, 3)
    assert H0.dim == 4
