from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from weightsmith.gf import field
from weightsmith.torusalg import (
    D4_TWISTS, G2_TWISTS, S_D4, TorusElemG2, TorusSpec, atlas, d4_weyl_group, det, element_order,
    fixed_points_exhaustive, g2_twist_matrix, identity, invariant_factors, is_member, mat_mul, mat_sub,
    parametrized_points, smith_diagonal, table_cyclic_orders, weyl_fixed_group,
)

ATLAS_QS = [2, 3, 4, 5, 7, 8]


def _sympy_invariants(m):
    d = smith_normal_form(Matrix(m), domain=ZZ)
    vals = sorted(abs(int(d[i, i])) for i in range(min(d.shape)))
    return tuple(v for v in vals if v != 1)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_smith_form_against_sympy(m):
    if det(m) == 0:
        return
    assert tuple(x for x in invariant_factors(m)) == _sympy_invariants(m)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=100, deadline=None)
def test_smith_diagonal_divisibility_and_determinant(m):
    d = smith_diagonal(m)
    assert all(x > 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert len(d) == Matrix(m).rank()
    prod = 1
    for x in d:
        prod *= x
    assert prod == abs(det(m)) if len(d) == 3 else det(m) == 0


@pytest.mark.parametrize("group, twists", [("G2", G2_TWISTS), ("3D4", D4_TWISTS)])
@pytest.mark.parametrize("q", ATLAS_QS)
def test_atlas_matches_tables(group, twists, q):
    rows = atlas(group, q)
    assert len(rows) == len(twists)
    for r in rows:
        assert r.matches_table, r.as_dict()


@pytest.mark.parametrize("q", ATLAS_QS)
def test_atlas_against_sympy(q):
    for group, twists in (("G2", G2_TWISTS), ("3D4", D4_TWISTS)):
        for w in twists:
            spec = TorusSpec(group, w, q)
            A = spec.action_matrix()
            M = mat_sub(A, identity(len(A)))
            assert invariant_factors(M) == _sympy_invariants(M)


def test_g2_orders_at_q5():
    assert [r.order for r in atlas("G2", 5)] == [16, 36, 24, 24, 31, 21]


def test_3d4_orders_at_q2():
    assert [r.order for r in atlas("3D4", 2)] == [7, 21, 9, 49, 9, 13, 27]


def test_g2_t3_cyclic_at_q4():
    row = next(r for r in atlas("G2", 4) if r.spec.twist == "v3")
    assert row.order == 21 and row.invariants == (21,)


def test_torus_orders_count_all_maximal_tori():
    """Steinberg: G2(q) has q^12 F-stable maximal tori, i.e. sum_w |G| |w^W| / (|W| |T_w|) = q^12."""
    sizes = [1, 1, 3, 3, 2, 2]  # conjugacy class sizes in W(G2), in twist order
    for q in ATLAS_QS:
        orders = [r.order for r in atlas("G2", q)]
        g2_order = q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
        total = sum(Fraction(g2_order * s, 12 * o) for s, o in zip(sizes, orders))
        assert total == q ** 12


def test_table_orders_are_polynomials_in_q():
    for q in ATLAS_QS:
        t = {w: table_cyclic_orders(TorusSpec("G2", w, q)) for w in G2_TWISTS}
        assert t["1"] == (q - 1, q - 1)
        assert t["v2"] == (q + 1, q + 1)
        assert t["v6"] == (q * q - q + 1,)


@pytest.mark.parametrize("twist", G2_TWISTS)
def test_g2_fixed_points_in_f64(twist):
    spec = TorusSpec("G2", twist, 2)
    ctx = field(64)
    ex = fixed_points_exhaustive(spec, ctx)
    assert ex == parametrized_points(spec, ctx)
    assert len(ex) == spec_order(spec)


def spec_order(spec):
    A = spec.action_matrix()
    return abs(det(mat_sub(A, identity(len(A)))))


@pytest.mark.parametrize("twist", [w for w in D4_TWISTS if w != "w3"])
def test_3d4_fixed_points_in_f64(twist):
    spec = TorusSpec("3D4", twist, 2)
    ctx = field(64)
    ex = fixed_points_exhaustive(spec, ctx)
    assert ex == parametrized_points(spec, ctx)
    assert len(ex) == spec_order(spec)


@pytest.mark.parametrize("twist", G2_TWISTS)
def test_g2_membership_on_field_points(twist):
    """Independent route: apply the twisted Frobenius to actual field elements of F_16."""
    spec = TorusSpec("G2", twist, 2)
    ctx = field(16)
    g = ctx.primitive()
    pts = set()
    for e1, e2 in product(range(15), repeat=2):
        x = TorusElemG2(g ** e1, g ** e2, (g ** (e1 + e2)).inverse())
        if is_member(spec, x):
            pts.add((e1, e2))
    assert pts == fixed_points_exhaustive(spec, ctx)


def test_twist_matrix_orders():
    assert [element_order(g2_twist_matrix(w)) for w in G2_TWISTS] == [1, 2, 2, 2, 3, 6]


def test_d4_weyl_group():
    W = d4_weyl_group()
    assert len(W) == 192
    assert all(element_order(s) == 2 for s in S_D4)


@pytest.mark.parametrize("twist", ["1", "w0"])
def test_fixed_weyl_group(twist):
    F = weyl_fixed_group(twist)
    assert len(F.elements) == 12
    assert F.generator_orders == (2, 2)
    assert F.product_order == 6
    assert F.centralizer_order == 12


def test_fixed_weyl_group_rejects_other_twists():
    with pytest.raises(ValueError):
        weyl_fixed_group("w3")


def test_matrix_helpers():
    a = ((1, 2), (3, 4))
    assert mat_mul(a, identity(2)) == a
    assert det(a) == -2
