import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from q6threefolds.algebra.fields import GF
from q6threefolds.quadspace import H0, on_q6
from q6threefolds.varieties import (
    BUILTINS,
    ParamVariety,
    Q4Divisor,
    VarietyError,
    builtin,
    on_line_l,
    on_q4,
    pencil_coordinates,
    pencil_embed,
    pencil_plane,
    plucker_relation,
    random_divisor,
    segre_divisor,
    wedge_plucker,
)

DIMS = {"horizontal3": 3, "vertical3": 3, "quadric5": 3, "segre": 3, "veronese_cone": 3,
        "veronese_surface": 2, "cubic_secant": 2}


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_lie_on_q6(name):
    V = builtin(name)
    assert V.dim == DIMS[name]
    rng = random.Random(1)
    for _ in range(10):
        assert on_q6(V.random_point(rng))


@pytest.mark.parametrize("name", BUILTINS)
def test_builtin_json_roundtrip(name):
    V = builtin(name)
    W = ParamVariety.from_json(V.to_json())
    rng = random.Random(2)
    t = V.space.random_params(rng)
    assert W.eval(t) == V.eval(t)


def test_unknown_builtin():
    with pytest.raises(VarietyError):
        builtin("nope")


def test_plucker_wedge():
    s, t = 3, -5
    assert plucker_relation(wedge_plucker(s, t)) == 0


def test_segre_divisor_data():
    D = segre_divisor()
    assert D.p == 2
    assert [f.to_str() for f in D.lam_forms()] == ["b", "-a", "0", "0"]
    assert D.psi_degree() == 1
    assert D.common_factor().degree == 0


def test_psi_double_point_example():
    D = Q4Divisor.from_expr("x1*x4^2 + x2*x6^2")
    assert D.p == 3 and D.psi_degree() == 2
    assert D.psi(1, 1) == D.psi(1, -1)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_random_divisor_psi_degree(p):
    D = random_divisor(p, seed=p)
    assert D.p == p
    assert D.psi_degree() == p - 1
    assert D.common_factor().degree == 0


@pytest.mark.parametrize("p", [1, 2, 3])
def test_divisor_points_lie_on_q4(p):
    D = random_divisor(p, seed=11)
    rng = random.Random(p)
    for _ in range(15):
        z = D.random_point(rng)
        assert on_q4(z) and on_q6(z) and D.contains(z)


def test_divisor_json_roundtrip():
    D = random_divisor(3, seed=4)
    assert Q4Divisor.from_json(D.to_json()) == D


def test_divisor_rejects_bad_input():
    with pytest.raises((VarietyError, ValueError)):
        Q4Divisor.from_expr("x1*x7")
    with pytest.raises((VarietyError, ValueError)):
        Q4Divisor.from_expr("x1 + x2^2")


def test_line_l_membership():
    # on L every point lies on a divisor with p >= 2
    D = segre_divisor()
    z = [1, 2, 0, 0, 0, 0, 0, 0]
    assert on_line_l(z) and D.contains(z)
    D1 = random_divisor(1, seed=3)
    g1, g2 = D1.g1(1, 0), D1.g2(1, 0)
    assert D1.contains([-g2, g1, 0, 0, 0, 0, 0, 0])
    assert not D1.contains([g1, g2, 0, 0, 0, 0, 0, 0]) or g1 * g1 + g2 * g2 == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(-6, 6), st.integers(-6, 6), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_pencil_planes_lie_in_q4(a, b, u):
    if a == 0 and b == 0:
        return
    z = pencil_embed(u, a, b)
    assert on_q4(z)
    assert pencil_plane(a, b).contains(z)
    if not on_line_l(z) and any(z):
        (pa, pb), _ = pencil_coordinates(z)
        assert pa * b == pb * a


@settings(max_examples=30, deadline=None)
@given(st.integers(-5, 5), st.integers(-5, 5))
def test_q_plane_lies_in_divisor(a, b):
    if a == 0 and b == 0:
        return
    D = random_divisor(3, seed=7)
    fam = D.q_plane(a, b)
    rng = random.Random(a * 31 + b)
    for _ in range(3):
        z = fam.plane.random_vector(rng, 9)
        assert D.contains(z)


def test_d1_is_h0():
    from q6threefolds.quadspace import LinearSubspace

    Q4 = LinearSubspace.from_equations([[0] * 6 + [1, 0], [0] * 7 + [1]])
    D1 = Q4.intersect(LinearSubspace.from_equations([[0, 0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0, 0]]))
    assert D1 == H0


def test_reduce_mod():
    D = random_divisor(2, seed=1)
    forms = D.reduce_mod(7)
    assert len(forms) == len(D.forms)
    for g, gq in zip(D.forms, forms):
        assert gq.degree == g.degree
        assert all(GF(7)(c) == cq for c, cq in zip(g.coeffs, gq.coeffs))
