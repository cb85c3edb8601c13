import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairstab.lattice import (
    Cocharacter,
    HeightZeroError,
    Weight,
    contains,
    hull,
    member,
    min_norm_point,
    pairing,
    support_min,
)


def test_pairing_values():
    assert pairing(Weight((2, 2, 0)), Cocharacter((1, 1, -2))) == 4
    assert pairing(Weight((3, 1, 0)), Cocharacter((-1, 1, 0))) == -2
    for u in [(1, -1, 0), (2, 3, -5), (0, 0, 0)]:
        assert pairing(Weight((1, 1, 1)), Cocharacter(u)) == 0


def test_pairing_shift_invariance():
    u = Cocharacter((2, -3, 1))
    for k in (-2, -1, 1, 5):
        chi = Weight((4, 0, 7))
        shifted = Weight(tuple(c + k for c in chi.coords))
        assert pairing(chi, u) == pairing(shifted, u)


def test_pairing_length_mismatch():
    with pytest.raises(ValueError):
        pairing(Weight((1, 0)), Cocharacter((1, 0, -1)))


def test_cocharacter_requires_zero_sum():
    with pytest.raises(ValueError):
        Cocharacter((1, 1))


def test_weight_class_equality():
    assert Weight((3, 1, 0)) == Weight((4, 2, 1))
    assert Weight((3, 1, 0)) != Weight((1, 3, 0))
    assert hash(Weight((3, 1, 0))) == hash(Weight((4, 2, 1)))


def test_hull_prunes_midpoint():
    P = hull([(1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 2))])
    assert P.vertices == ((0, 1), (1, 0))


def test_hull_retains_extremes():
    P = hull([(2, 0, 2), (1, 2, 1)])
    assert len(P.vertices) == 2


def test_hull_singleton():
    P = hull([(5, -1)])
    assert P.vertices == ((5, -1),)


def test_hull_empty():
    with pytest.raises(ValueError):
        hull([])


def test_hull_square_interior():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]
    assert len(hull(pts).vertices) == 4


def test_contains_reflexive():
    P = hull([(0, 0, 0), (3, 1, 0), (1, 3, 0)])
    assert contains(P, P)


def test_contains_midpoint_class():
    P = hull([(3, 1, 0), (1, 3, 0)])
    Q = hull([(2, 2, 0)])
    assert contains(P, Q)


def test_contains_disjoint_singletons_with_separator():
    P = hull([(0, 3, 0)])
    Q = hull([(3, 0, 0)])
    res = contains(P, Q)
    assert not res
    sep = res.separator
    assert sep is not None
    # strict separation, exact
    val_w = sum(c * x for c, x in zip(sep.coeffs, sep.witness))
    assert val_w > sep.threshold
    for v in P.vertices:
        assert sum(c * x for c, x in zip(sep.coeffs, v)) <= sep.threshold


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        contains(hull([(0, 0)]), hull([(0, 0, 0)]))


def test_support_min_examples():
    P = hull([(3, 1, 0), (1, 3, 0)])
    assert support_min(P, Cocharacter((1, 1, -2))) == 4
    assert support_min(P, Cocharacter((1, -1, 0))) == -2
    S = hull([(2, 7, 1)])
    u = Cocharacter((3, -1, -2))
    assert support_min(S, u) == pairing(Weight((2, 7, 1)), u)


def test_min_norm_singleton_traceless():
    P = hull([(Fraction(2, 3), Fraction(2, 3), Fraction(-4, 3))])
    res = min_norm_point(P)
    assert res.point == (Fraction(2, 3), Fraction(2, 3), Fraction(-4, 3))
    assert res.norm_sq == Fraction(8, 3)


def test_min_norm_symmetric_segment():
    res = min_norm_point(hull([(1, -1, 0), (-1, 1, 0)]))
    assert res.point == (0, 0, 0)
    assert res.norm_sq == 0


def test_min_norm_segment_projection():
    res = min_norm_point(hull([(1, 0, -1), (0, 1, -1)]))
    assert res.point == (Fraction(1, 2), Fraction(1, 2), -1)
    assert res.norm_sq == Fraction(3, 2)


def test_min_norm_dimension_guard():
    pts = [tuple(3 if i == j else 0 for i in range(6)) for j in range(6)]
    with pytest.raises(ValueError):
        min_norm_point(hull(pts))


def test_member_high_dimension_lp_route():
    # 5-simplex vertices force the LP path
    pts = [tuple(5 if i == j else 0 for i in range(6)) for j in range(6)]
    P = hull(pts)
    center = tuple(Fraction(5, 6) for _ in range(6))
    assert member(P, center)
    assert not member(P, (6, 0, 0, 0, 0, 0))


points2d = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=7
)
points3d = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    min_size=1,
    max_size=6,
)


@settings(deadline=None, max_examples=60)
@given(points2d, st.randoms(use_true_random=False))
def test_member_accepts_convex_combinations(pts, rng):
    P = hull(pts)
    weights = [Fraction(rng.randint(0, 6)) for _ in pts]
    if sum(weights) == 0:
        weights[0] = Fraction(1)
    total = sum(weights)
    combo = tuple(
        sum(w * Fraction(p[i]) for w, p in zip(weights, pts)) / total
        for i in range(2)
    )
    assert member(P, combo)


@settings(deadline=None, max_examples=40)
@given(points3d, points3d)
def test_contains_separator_soundness(a, b):
    P, Q = hull(a), hull(b)
    res = contains(P, Q)
    if res:
        for v in Q.vertices:
            assert member(P, v)
    else:
        sep = res.separator
        wit = sum(c * x for c, x in zip(sep.coeffs, sep.witness))
        assert wit > sep.threshold
        for v in P.vertices:
            assert sum(c * x for c, x in zip(sep.coeffs, v)) <= sep.threshold


@settings(deadline=None, max_examples=30)
@given(points3d)
def test_min_norm_beats_random_combinations(pts):
    P = hull(pts)
    res = min_norm_point(P)
    assert member(P, res.point)
    rng = random.Random(0)
    verts = P.vertices
    for _ in range(60):
        weights = [Fraction(rng.randint(0, 5)) for _ in verts]
        if sum(weights) == 0:
            weights[0] = Fraction(1)
        total = sum(weights)
        combo = [
            sum(w * Fraction(v[i]) for w, v in zip(weights, verts)) / total
            for i in range(len(verts[0]))
        ]
        assert sum(c * c for c in combo) >= res.norm_sq


@settings(deadline=None, max_examples=40)
@given(points2d, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_support_min_is_vertex_min(pts, uraw):
    P = hull(pts)
    u = Cocharacter((uraw[0], -uraw[0]))
    got = support_min(P, u)
    assert got == min(
        sum(Fraction(c) * x for c, x in zip(v, u.coords)) for v in P.vertices
    )


@settings(deadline=None, max_examples=25)
@given(points2d, points2d, points2d)
def test_contains_transitive(a, b, c):
    A, B, C = hull(a), hull(b), hull(c)
    if contains(A, B) and contains(B, C):
        assert contains(A, C)


def test_contains_antisymmetric_on_canonical_forms():
    A = hull([(0, 0), (2, 0), (0, 2)])
    B = hull([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert contains(A, B) and contains(B, A)
    assert A.vertices == B.vertices
