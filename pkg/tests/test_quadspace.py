import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from q6threefolds.algebra.fields import GF, QQ
from q6threefolds.algebra.linalg import matmul, transpose
from q6threefolds.quadspace import (
    H0,
    V0,
    IsoType,
    LinearSubspace,
    ProjPoint,
    annihilator,
    bilinear,
    eichler,
    extend_isotropic_plane,
    iso_type,
    max_isotropic_dim,
    on_q6,
    qform,
    random_isometry,
    random_max_isotropic,
    random_subspace,
    restrict_rank,
    unit,
)

GRAM = [[bilinear(unit(i), unit(j)) for j in range(8)] for i in range(8)]


def test_quadric_equation():
    # x1x8 - x2x7 + x3x6 - x4x5
    v = [1, 2, 3, 4, 5, 6, 7, 8]
    assert qform(v) == 1 * 8 - 2 * 7 + 3 * 6 - 4 * 5
    assert bilinear(v, v) == 2 * qform(v)


def test_gram_is_symmetric_and_nondegenerate():
    assert GRAM == transpose(GRAM)
    assert restrict_rank(LinearSubspace.full()) == 8


def test_reference_spaces():
    assert V0.dim == 4 and H0.dim == 4
    assert V0.is_isotropic() and H0.is_isotropic()
    assert iso_type(V0) == IsoType.VERTICAL
    assert iso_type(H0) == IsoType.HORIZONTAL
    assert V0.intersect(H0).dim % 2 == 1


@pytest.mark.parametrize("kind", [IsoType.VERTICAL, IsoType.HORIZONTAL])
@pytest.mark.parametrize("seed", range(4))
def test_random_max_isotropic_type(kind, seed):
    U = random_max_isotropic(kind, QQ, seed)
    assert U.dim == 4 and U.is_isotropic()
    assert iso_type(U) == kind
    assert (U.intersect(V0).dim % 2 == 0) == (kind == IsoType.VERTICAL)


@pytest.mark.parametrize("q", [7, 11])
def test_random_max_isotropic_finite_field(q):
    F = GF(q)
    for kind in IsoType:
        U = random_max_isotropic(kind, F, seed=3)
        assert U.dim == 4 and U.is_isotropic()
        assert iso_type(U) == kind


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_random_isometry_preserves_form(seed):
    M = random_isometry(random.Random(seed))
    assert matmul(transpose(M), matmul(GRAM, M)) == GRAM


def test_eichler_is_isometry():
    e, u = unit(0), [0, 0, 1, 2, 0, 0, 0, 0]
    M = eichler(e, u)
    assert matmul(transpose(M), matmul(GRAM, M)) == GRAM


def test_extend_isotropic_plane_gives_both_types():
    W = LinearSubspace.span([unit(0), unit(1), unit(2)])
    assert W.is_isotropic()
    ext = extend_isotropic_plane(W)
    assert set(ext) == set(IsoType)
    for kind, U in ext.items():
        assert U.contains_space(W) and U.is_isotropic() and iso_type(U) == kind


def test_iso_type_rejects_non_maximal():
    with pytest.raises(ValueError):
        iso_type(LinearSubspace.span([unit(0)]))


def test_annihilator_and_isotropic_dims():
    S = LinearSubspace.span([unit(0), unit(1)])
    A = annihilator(S)
    assert A.dim == 6
    assert max_isotropic_dim(LinearSubspace.full()) == 4
    assert max_isotropic_dim(S) == 2


def test_subspace_operations():
    W = random_subspace(5, QQ, seed=1)
    assert W.dim == 5
    assert W.join(V0).dim + W.intersect(V0).dim == 9
    assert LinearSubspace.from_equations(W.equations()) == W
    assert LinearSubspace.from_json(W.to_json()) == W


def test_projective_points_normalize():
    p = ProjPoint([0, 2, 4, 0, 0, 0, 0, 0])
    q = ProjPoint([0, Fraction(1, 2), 1, 0, 0, 0, 0, 0])
    assert p == q
    assert on_q6(p.coords)
