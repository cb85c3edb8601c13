import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairstab import _poly
from pairstab.binaryforms import (
    INFINITY,
    chow_polytope_vertices,
    disc_newton_polytope_matches,
    disc_polytope_vertices,
    discriminant,
    form,
    hyperdisc_degree,
    normalize_pair_degrees,
    ord_profile,
    rational_roots,
    resultant,
    scaled_containment_check,
    sl2_order_violation,
    sl2_pair_nss,
    squarefree_decomposition,
    symbolic_discriminant,
)


def test_form_padding_and_degrees():
    f = form([1, 2], 3)
    assert f.coeffs == (1, 2, 0, 0)
    assert f.affine_degree == 1
    assert f.ord_infinity == 2


def test_form_rejects_zero():
    with pytest.raises(ValueError):
        form([0, 0])


def test_resultant_linear_pair():
    assert resultant(form([-1, 1]), form([-2, 1])) == 1


def test_resultant_even_quadratics():
    f, g = form([-1, 0, 1]), form([-4, 0, 1])
    assert resultant(f, g) == 9
    assert resultant(g, f) == 9


def test_resultant_shared_root():
    assert resultant(form([-1, 1]), form([1, -2, 1])) == 0


def test_resultant_antisymmetry_sign():
    f, g = form([1, 1]), form([-2, 0, 1])  # degrees 1, 2
    assert resultant(f, g) == (-1) ** (1 * 2) * resultant(g, f)
    a, b = form([3, 1]), form([5, 1])
    assert resultant(a, b) == -resultant(b, a)


def test_resultant_empty_degrees():
    assert resultant(form([7], 0), form([3], 0)) == 1


def test_discriminant_quadratic_example():
    # matches -a2 (a1^2 - 4 a0 a2) on a fixed case
    a0, a1, a2 = 2, 7, 3
    f = form([a0, a1, a2])
    assert discriminant(f) == -a2 * (a1 * a1 - 4 * a0 * a2)


def test_discriminant_depressed_cubic():
    # z^3 + p z + q -> 4 p^3 + 27 q^2 in this normalization
    p, q = 5, 2
    f = form([q, p, 0, 1])
    assert discriminant(f) == 4 * p**3 + 27 * q**2


def test_discriminant_detects_repeated_root():
    f = form([1, -2, 1])  # (z-1)^2
    assert discriminant(f) == 0


def test_discriminant_requires_degree_two():
    with pytest.raises(ValueError):
        discriminant(form([1, 1]))


def test_discriminant_requires_top_coefficient():
    with pytest.raises(ValueError):
        discriminant(form([1, 1], 2))


def test_squarefree_decomposition():
    # z^2 (z - 1)
    f = [Fraction(c) for c in [0, 0, -1, 1]]
    out = squarefree_decomposition(f)
    got = {(tuple(fac), m) for fac, m in out}
    assert got == {((0, 1), 2), ((-1, 1), 1)}


def test_ord_profile_infinity():
    f = form([0, 1], 4)  # z declared as degree 4
    prof = ord_profile(f)
    assert prof.infinity_mult() == 3
    assert prof.degree == 4


def test_sl2_pair_cases():
    assert not sl2_pair_nss(form([1]), form([0, 0, 1]))
    assert sl2_pair_nss(form([-1, 1]), form([0, -1, 0, 1]))
    assert sl2_pair_nss(form([1]), form([1, 0, 1]))
    assert not sl2_pair_nss(form([0, 1]), form([4, 0, -4, 0, 1]))
    assert not sl2_pair_nss(form([0, 0, 1]), form([0, 1]))
    assert sl2_pair_nss(form([1, 1], 2), form([1, 1], 2))


def test_sl2_degree_d_minus_one_always_unstable():
    # the half-integer bound (d-e)/2 = 1/2 cannot absorb any root of g
    for d in (2, 3, 4, 5):
        g = form([1] + [0] * (d - 1) + [1])
        assert not sl2_pair_nss(form([1], d - 1), g)
        assert not sl2_pair_nss(form([1, 1], d - 1), g)


def test_sl2_equal_degree_iff_same_root_classes():
    f = form([0, 1])       # z
    g = form([0, 2])       # 2z, same class
    assert sl2_pair_nss(f, g)
    h = form([1, 1])       # z + 1
    assert not sl2_pair_nss(f, h)


def test_order_violation_payloads():
    v = sl2_order_violation(form([1]), form([0, 0, 1]))
    assert v.kind == "root-class"
    assert v.bound == 1 and v.g_value == 2 and v.f_value == 0
    assert v.factor == (0, 1)

    v = sl2_order_violation(form([0, 1]), form([4, 0, -4, 0, 1]))
    assert v.factor == (-2, 0, 1)

    v = sl2_order_violation(form([0, 0, 1]), form([0, 1]))
    assert v.kind == "degree"

    v = sl2_order_violation(form([1], 0), form([1], 3))
    assert v is not None and v.kind == "infinity"


def test_rational_roots():
    assert rational_roots(form([0, -4, 0, 1])) == [-2, 0, 2]
    assert rational_roots(form([1, 0, 1])) == []
    assert rational_roots(form([-1, 2], 1)) == [Fraction(1, 2)]


def test_chow_vertices_small():
    assert set(chow_polytope_vertices(2)) == {(1, 2, 1), (2, 0, 2)}
    assert len(chow_polytope_vertices(3)) == 4


def test_disc_vertices_small():
    assert set(disc_polytope_vertices(2)) == {(0, 2, 0), (1, 0, 1)}
    assert set(disc_polytope_vertices(3)) == {
        (0, 2, 2, 0),
        (0, 3, 0, 1),
        (1, 0, 3, 0),
        (2, 0, 0, 2),
    }


def test_vertex_counts_match_subset_enumeration():
    for d in (2, 3, 4, 5):
        assert len(chow_polytope_vertices(d)) == 2 ** (d - 1)


def test_scaled_containment_small_degrees():
    for d in (2, 3, 4):
        assert scaled_containment_check(d)


def test_symbolic_discriminant_quadratic():
    # the function reports det/a2; multiplying the factor back gives
    # -a2 (a1^2 - 4 a0 a2) exactly
    got = symbolic_discriminant(2)
    a0 = _poly.variable(3, 0)
    a1 = _poly.variable(3, 1)
    a2 = _poly.variable(3, 2)
    assert got == _poly.sub(_poly.mul(_poly.const(3, 4), _poly.mul(a0, a2)), _poly.mul(a1, a1))
    with_factor = _poly.mul(a2, got)
    expected = _poly.neg(
        _poly.mul(a2, _poly.sub(_poly.mul(a1, a1), _poly.mul(_poly.const(3, 4), _poly.mul(a0, a2))))
    )
    assert with_factor == expected


def test_symbolic_newton_polytope_matches():
    assert disc_newton_polytope_matches(2)
    assert disc_newton_polytope_matches(3)


def test_hyperdisc_degree_line():
    # the n = 1 case collapses to the classical 2d - 2
    assert hyperdisc_degree(1, 3, 2) == 2 * 3 - 2
    assert hyperdisc_degree(1, 5, 2) == 2 * 5 - 2


def test_hyperdisc_degree_guards():
    with pytest.raises(ValueError):
        hyperdisc_degree(1, 1, 5)
    with pytest.raises(ValueError):
        hyperdisc_degree(1, 2, 10)


def test_hyperdisc_divisibility_on_geometric_inputs():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(1, 4)
        d = rng.randint(2, 9)
        dmu = n * rng.randint(1, (n + 1) * d - 1)
        _, _, r = normalize_pair_degrees(n, d, dmu)
        assert r % n == 0 and r % (n + 1) == 0


def test_normalize_pair_degrees():
    assert normalize_pair_degrees(1, 2, 2) == (4, 2, 8)
    assert normalize_pair_degrees(1, 3, 2) == (6, 4, 24)


monic_roots = st.lists(st.integers(-4, 4), min_size=1, max_size=4)


def _from_roots(roots, lead=1):
    coeffs = [Fraction(lead)]
    for r in roots:
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] = coeffs[i] - r * coeffs[i + 1]
    return form(coeffs)


@settings(deadline=None, max_examples=60)
@given(monic_roots, monic_roots)
def test_resultant_product_formula(ra, rb):
    f = _from_roots(ra)
    g = _from_roots(rb)
    # evaluate f at every root of g; lead(g)^deg f picks up the remaining factor
    expected = Fraction(1)
    for b in rb:
        expected *= sum(c * Fraction(b) ** i for i, c in enumerate(f.coeffs))
    assert resultant(f, g) == expected


@settings(deadline=None, max_examples=40)
@given(monic_roots, monic_roots, monic_roots)
def test_resultant_multiplicative_in_second_slot(ra, rb, rc):
    f = _from_roots(ra)
    g, h = _from_roots(rb), _from_roots(rc)
    gh = _from_roots(rb + rc)
    assert resultant(f, gh) == resultant(f, g) * resultant(f, h)


@settings(deadline=None, max_examples=50)
@given(monic_roots)
def test_discriminant_zero_iff_repeated_root(roots):
    f = _from_roots(roots)
    if f.degree < 2:
        return
    assert (discriminant(f) == 0) == (len(set(roots)) < len(roots))


@settings(deadline=None, max_examples=40)
@given(monic_roots, st.integers(1, 5))
def test_sl2_criterion_scale_invariant(roots, c):
    g = _from_roots(roots)
    f = form([1])
    scaled = form([c * x for x in g.coeffs])
    assert sl2_pair_nss(f, g) == sl2_pair_nss(f, scaled)


@settings(deadline=None, max_examples=50)
@given(monic_roots)
def test_ord_profile_accounts_degree(roots):
    f = _from_roots(roots)
    prof = ord_profile(f)
    total = prof.infinity_mult()
    for fac, m in prof.affine_entries():
        total += (len(fac) - 1) * m
    assert total == f.degree
