from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from weightsmith.rootsys import (
    CARTAN_ORDER, D4, ETA_ORDER, G2, Root, RootError, cartan, cartan_table, d4_base_coeffs, d4_root, d4_system,
    eta, fold, g2, g2_system, inner, n_magnitude, reflect, root_string, sign_orbits, structure_constants,
    tables_json, triality,
)

G2_ROOTS = g2_system().roots
D4_ROOTS = d4_system().roots

# rows and columns: a, b, a+b, 2a+b, 3a+b, 3a+2b
CARTAN_EXPECTED = [
    [2, -3, -1, 1, 3, 0],
    [-1, 2, 1, 0, -1, 1],
    [-1, 3, 2, 1, 0, 3],
    [1, 0, 1, 2, 3, 3],
    [1, -1, 0, 1, 2, 1],
    [0, 1, 1, 1, 1, 2],
]


def test_sizes_and_lengths():
    assert len(G2_ROOTS) == 12
    assert sum(r.is_long for r in G2_ROOTS) == 6
    assert len(D4_ROOTS) == 24
    assert {g2_system().base[0].is_long, g2_system().base[1].is_long} == {False, True}


def test_names_round_trip():
    for name in CARTAN_ORDER:
        assert str(g2(name)) == name
    assert g2("-(3a+2b)") == -g2("3a+2b")
    with pytest.raises(RootError):
        g2(2, 2)


def test_cartan_table():
    assert cartan_table() == CARTAN_EXPECTED


def test_cartan_agrees_with_root_strings():
    for r, s in product(G2_ROOTS, repeat=2):
        if r in (s, -s):
            continue
        p, q = root_string(r, s)
        assert cartan(r, s) == p - q


@given(st.sampled_from(G2_ROOTS), st.sampled_from(G2_ROOTS))
def test_cartan_sign_rules(r, s):
    assert cartan(-r, s) == cartan(r, -s) == -cartan(r, s)


@given(st.sampled_from(G2_ROOTS + D4_ROOTS), st.data())
def test_reflections_preserve_the_system(r, data):
    sys = G2_ROOTS if r.kind == G2 else D4_ROOTS
    s = data.draw(st.sampled_from(sys))
    image = reflect(r, s)
    assert image in sys
    assert reflect(r, image) == s
    assert inner(image, image) == inner(s, s)


def test_eta_seed_shape():
    table = [[eta(g2(r), g2(s)) for s in ETA_ORDER] for r in ETA_ORDER]
    assert all(v in (1, -1) for row in table for v in row)


@given(st.sampled_from(G2_ROOTS), st.sampled_from(G2_ROOTS))
def test_eta_closure_rules(r, s):
    assert eta(r, -s) == eta(r, s)
    assert eta(-r, s) == eta(r, reflect(r, s))


def test_eta_rejects_d4():
    with pytest.raises(RootError):
        eta(D4_ROOTS[0], D4_ROOTS[1])


def test_triality():
    r1, r2, r3, r4 = d4_system().base
    assert triality(r1) == r3 and triality(r3) == r4 and triality(r4) == r1
    assert triality(r2) == r2
    for r in D4_ROOTS:
        assert triality(triality(triality(r))) == r
    for r, s in product(D4_ROOTS, repeat=2):
        assert inner(triality(r), triality(s)) == inner(r, s)


def test_base_coefficients_round_trip():
    for r in D4_ROOTS:
        assert d4_root(*d4_base_coeffs(r)) == r
    assert d4_root(1, 2, 1, 1) == max(D4_ROOTS, key=lambda r: sum(d4_base_coeffs(r)))


def test_folding_gives_g2():
    classes = fold()
    assert len(classes) == 12
    assert sorted(len(c.members) for c in classes) == [1] * 6 + [3] * 6
    norms = {c.norm for c in classes}
    assert len(norms) == 2
    assert max(norms) / min(norms) == Fraction(3)
    # singletons are the fixed roots and project to the long directions
    assert all(c.norm == max(norms) for c in classes if len(c.members) == 1)


def test_structure_constant_magnitudes():
    assert n_magnitude(g2("a"), g2("a+b")) == 2
    assert n_magnitude(g2("a"), g2("2a+b")) == 3
    assert n_magnitude(g2("a"), g2("b")) == 1
    assert n_magnitude(g2("b"), g2("3a+b")) == 1
    assert n_magnitude(g2("a"), g2("3a+b")) == 0


@pytest.mark.parametrize("kind", [G2, D4])
def test_structure_constants_antisymmetric(kind):
    orb = sign_orbits(kind)
    N = structure_constants(tuple(1 for _ in orb.reps), kind)
    for (r, s), v in N.items():
        assert N[(s, r)] == -v
        assert N[(-r, -s)] == -v


def test_tables_json_is_deterministic():
    assert tables_json() == tables_json()
    assert '"cartan"' in tables_json()


def test_root_rejects_non_roots():
    with pytest.raises(RootError):
        Root(G2, (1, 2))
