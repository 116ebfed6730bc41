from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from q6threefolds.algebra import linalg, upoly
from q6threefolds.algebra.fields import GF, GF2, QQ, FieldMismatch, format_scalar, is_prime, parse_scalar
from q6threefolds.algebra.forms import (
    BinaryForm,
    count_roots_fq,
    gcd_forms,
    rational_roots,
    root_count,
    squarefree_decomposition,
    squarefree_part,
)
from q6threefolds.algebra.poly import MultiPoly, resultant
from q6threefolds.expr import ExprError, parse_poly

small = st.integers(-9, 9)
fracs = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


# fields


def test_prime_field_basics():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3).inverse() == F(5)
    assert F(Fraction(1, 2)) == F(4)
    assert GF(7) is F
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))
    with pytest.raises(ValueError):
        GF(9)


def test_quadratic_extension_has_sqrt_of_nonresidue():
    K = GF2(11)
    w = K.gen
    assert w * w == K(K.n)
    assert len(K.elements()) == 121
    nonzero = [x for x in K.elements() if x != K.zero]
    assert all(x * x.inverse() == K.one for x in nonzero[:40])


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        GF(7)(GF(11)(1))


@given(st.integers(2, 400))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == all(n % d for d in range(2, int(n**0.5) + 1))


@given(fracs)
def test_scalar_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


# univariate and binary forms


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4))
def test_upoly_divmod(f, g):
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    if upoly.deg(upoly.trim(g)) < 0:
        return
    qq, r = upoly.divmod_(f, g)
    assert upoly.trim(upoly.add(upoly.mul(qq, g), r)) == upoly.trim(f)
    assert upoly.deg(r) < upoly.deg(upoly.trim(g))


def _form(coeffs):
    return BinaryForm(tuple(Fraction(c) for c in coeffs))


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=2, max_size=4), st.lists(small, min_size=2, max_size=4))
def test_gcd_divides_both(a, b):
    f, g = _form(a), _form(b)
    if f.is_zero or g.is_zero:
        return
    h = gcd_forms(f, g)
    assert h.divides(f) and h.divides(g)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=2, max_size=3), st.integers(1, 3))
def test_squarefree_decomposition_reassembles(a, k):
    f = _form(a)
    if f.is_zero:
        return
    g = f**k
    acc = BinaryForm.const(1)
    for s, m in squarefree_decomposition(g):
        acc = acc * s**m
    assert acc.normalized() == g.normalized()
    assert squarefree_part(g).degree == squarefree_part(f).degree


def test_rational_roots_and_counts():
    # X*(Y - 2X)^2 * (Y^2 + X^2)
    f = BinaryForm.linear_through(0, 1) * BinaryForm.linear_through(1, 2) ** 2 * _form((1, 0, 1))
    roots = rational_roots(f)
    assert roots == [((0, 1), 1), ((1, 2), 2)]
    assert root_count(f) == (5, 4)
    assert count_roots_fq(_form((1, 0, 1)), 7) == 0
    assert count_roots_fq(_form((1, 0, 1)), 7, ext=2) == 2
    assert count_roots_fq(_form((1, 0, 1)), 13) == 2


def test_form_evaluation():
    f = _form((1, 2, 3))  # X^2 + 2XY + 3Y^2
    assert f(1, 1) == 6
    assert f(2, -1) == 3


# multivariate polynomials


def test_parse_and_arithmetic():
    V = ("x", "y")
    p = parse_poly("(x + y)^2 - x*y", V)
    x, y = MultiPoly.gens(V)
    assert p == x * x + x * y + y * y
    assert p.evaluate([2, 3]) == 19
    assert p.diff("x") == 2 * x + y
    with pytest.raises(ExprError):
        parse_poly("x + z", V)
    with pytest.raises(ExprError):
        parse_poly("x +", V)


def test_resultant_detects_common_root():
    V = ("x", "y")
    x, y = MultiPoly.gens(V)
    f = x * x - y
    g = x - 2
    r = resultant(f, g, "x")
    # eliminating x: y = 4
    assert r.evaluate([0, 4]) == 0
    assert r.evaluate([0, 5]) != 0


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=2, max_size=2))
def test_resultant_vanishes_iff_shared_root(a, b):
    V = ("t",)
    f = MultiPoly.from_upoly([Fraction(c) for c in a], "t", V)
    g = MultiPoly.from_upoly([Fraction(c) for c in b], "t", V)
    if f.degree("t") < 1 or g.degree("t") < 1:
        return
    r = resultant(f, g, "t").constant_term()
    shared = upoly.deg(upoly.gcd([Fraction(c) for c in a], [Fraction(c) for c in b])) > 0
    assert (r == 0) == shared


# linear algebra


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    rows = [[Fraction(c) for c in r] for r in rows]
    K = linalg.kernel_basis(rows, 4)
    assert linalg.rank(rows) + len(K) == 4
    for v in K:
        assert all(linalg.dot(r, v) == 0 for r in rows)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_and_det(rows):
    M = [[Fraction(c) for c in r] for r in rows]
    d = linalg.det(M)
    if d == 0:
        assert linalg.rank(M) < 3
        return
    inv = linalg.inverse(M)
    I = linalg.matmul(M, inv)
    assert I == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_linalg_over_finite_field():
    F = GF(7)
    M = [[F(1), F(2)], [F(3), F(6)]]
    assert linalg.rank(M) == 1
    assert linalg.det(M) == F(0)
    assert QQ.sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert QQ.sqrt(2) is None
