from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from weightsmith.torchars import (
    EXCLUDED_BY_DEFECT, INDEX_TWO, STAB_EQUALS_RESTRICTION, STAB_IS_TORUS, CharError, TorusCharD4, TorusCharG2,
    act_d4, block_type_g2, canonical_for_block, census_d4, census_g2, corollary_shapes_hold, count_weights_abelian,
    d4_characters, d4_stabilizer, d4_weyl, ell_part, eps_for, g2_weyl, kernel_criterion_holds, omega, orbit_g2,
    orbit_stabilizer_holds_g2, restrict_to_g2, stabilizer, trichotomy, weyl_act_char,
)

# Row-vector action of the two simple reflections on (i, j), written out by hand.
NA = ((1, 1), (0, -1))
NB = ((0, 1), (1, 0))


def _brute_d12():
    """Independent closure of the 2x2 integer matrices generated by NA and NB."""
    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    seen = {((1, 0), (0, 1))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in (NA, NB):
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


D12 = _brute_d12()


def _brute_stab(i, j, m):
    return sum(1 for M in D12 if ((i * M[0][0] + j * M[1][0]) % m, (i * M[0][1] + j * M[1][1]) % m) == (i % m, j % m))


def test_brute_group_is_dihedral_of_order_12():
    assert len(D12) == 12
    assert len(g2_weyl()) == 12


@pytest.mark.parametrize("m", [3, 4, 6, 8, 12])
def test_stabilizer_orders_match_brute_force(m):
    for i, j in product(range(m), repeat=2):
        assert stabilizer(TorusCharG2(i, j, m)).order == _brute_stab(i, j, m)


@given(st.integers(1, 14), st.data())
@settings(max_examples=150, deadline=None)
def test_orbit_stabilizer(m, data):
    i, j = data.draw(st.integers(0, m - 1)), data.draw(st.integers(0, m - 1))
    th = TorusCharG2(i, j, m)
    orb = orbit_g2(th)
    assert len(orb) * stabilizer(th).order == 12
    assert len(set(orb)) == len(orb)
    for t in orb:
        assert stabilizer(t).order == stabilizer(th).order


@pytest.mark.parametrize("m", range(1, 15))
def test_orbit_stabilizer_all_characters(m):
    assert orbit_stabilizer_holds_g2(m)


@pytest.mark.parametrize("q", [5, 7, 11, 13])
@pytest.mark.parametrize("eps", [1, -1])
def test_order_two_shapes(q, eps):
    assert corollary_shapes_hold(q - eps)


def test_weyl_generators_are_involutions():
    th = TorusCharG2(2, 5, 7)
    for g in ("n_a", "n_b"):
        assert weyl_act_char(g, weyl_act_char(g, th)) == th


def test_q7_stabilizers():
    th = TorusCharG2(3, 3, 6)
    st_ = stabilizer(th)
    assert st_.label == "C2xC2"
    one = TorusCharG2(1, 1, 6)
    assert stabilizer(one).label == "C2"
    assert sorted(t.pair for t in orbit_g2(one)) == [(0, 1), (0, 5), (1, 0), (1, 1), (5, 0), (5, 5)]


def test_census_q7_b2_type():
    rows = census_g2(7, 1)
    canonical = [r for r in rows if r.canonical]
    assert [r.representative for r in canonical] == [(0, 0), (0, 3)]
    assert canonical[1].block_type == "B2" and canonical[1].weight_count == 4


def test_census_q13_types():
    rows = {r.representative: r for r in census_g2(13, 1) if r.canonical}
    assert rows[(0, 3)].block_type == "Ba/Bb" and rows[(0, 3)].weight_count == 2
    assert rows[(0, 6)].block_type == "B2" and rows[(0, 6)].weight_count == 4
    assert rows[(3, 6)].block_type == "Ba/Bb" and rows[(3, 6)].weight_count == 2


def test_weight_count_refuses_ell_divisible_stabiliser():
    th = TorusCharG2(0, 0, 6)
    with pytest.raises(CharError):
        count_weights_abelian(th, stabilizer(th), 3)


def test_weight_count_refuses_non_canonical():
    th = TorusCharG2(1, 2, 6)
    with pytest.raises(CharError):
        count_weights_abelian(th, stabilizer(th), 3)


def test_block_type_labels():
    th = TorusCharG2(0, 3, 6)
    assert block_type_g2(th, stabilizer(th)) == "B2"


def test_ell_part_and_eps():
    assert ell_part(72, 3) == 9 and ell_part(72, 2) == 8 and ell_part(5, 3) == 1
    assert eps_for(7) == 1 and eps_for(5) == -1
    with pytest.raises(ValueError):
        eps_for(9)


@pytest.mark.parametrize("q", [2, 4, 5, 7])
@pytest.mark.parametrize("eps", [1, -1])
def test_d4_weyl_group_acts(q, eps):
    W = d4_weyl(q, eps)
    assert len(W) == 12
    th = TorusCharD4(1, 1, q, eps)
    orbit = {act_d4(a, th) for _, a in W}
    assert 12 % len(orbit) == 0


@pytest.mark.parametrize("q", [2, 4, 5, 7])
@pytest.mark.parametrize("eps", [1, -1])
def test_omega_on_restriction(q, eps):
    """The order-3 Weyl element acts on restrictions by (i, j) -> (i + j(q^2 + eps q + 1), -i - 2j)."""
    m = q - eps
    w = omega(q, eps)
    k = q * q + eps * q + 1
    for i in range(0, q ** 3 - eps, max(1, (q ** 3 - eps) // 40)):
        for j in range(m):
            th = TorusCharD4(i, j, q, eps)
            img = restrict_to_g2(act_d4(w, th)).pair
            img2 = restrict_to_g2(act_d4(w, act_d4(w, th))).pair
            target = ((i + j * k) % m, (-i - 2 * j) % m)
            assert target in (img, img2)
            assert restrict_to_g2(act_d4(w, act_d4(w, act_d4(w, th)))) == restrict_to_g2(th)


@pytest.mark.parametrize("q", [2, 4, 5, 7])
@pytest.mark.parametrize("eps", [1, -1])
def test_kernel_criterion_exhaustive(q, eps):
    assert all(kernel_criterion_holds(th) for th in d4_characters(q, eps))


@pytest.mark.parametrize("q, eps", [(2, -1), (4, 1), (5, 1), (5, -1), (7, -1), (7, 1)])
def test_d4_census(q, eps):
    c = census_d4(q, eps)
    assert c.kernel_criterion_ok
    assert c.characters == (q ** 3 - eps) * (q - eps)
    assert sum(c.cases.values()) == c.canonical
    assert set(c.cases) <= {STAB_IS_TORUS, STAB_EQUALS_RESTRICTION, INDEX_TWO, EXCLUDED_BY_DEFECT}
    # a trivial stabiliser gives exactly one weight
    assert set(c.case_weight_counts) <= {"1"}


def test_d4_census_known_values():
    c = census_d4(2, -1)
    assert c.characters == 27 and c.canonical == 1 and dict(c.cases) == {EXCLUDED_BY_DEFECT: 1}
    c = census_d4(5, 1)
    assert dict(c.cases) == {INDEX_TWO: 90, STAB_EQUALS_RESTRICTION: 195, STAB_IS_TORUS: 180} | {
        k: v for k, v in c.cases.items() if k == EXCLUDED_BY_DEFECT}
    assert census_d4(7, -1).cases[STAB_IS_TORUS] == 1788


def test_trichotomy_refuses_non_canonical():
    with pytest.raises(CharError):
        trichotomy(TorusCharD4(1, 0, 4, 1))


def test_canonical_detection():
    assert canonical_for_block(3, TorusCharG2(0, 0, 6))
    assert not canonical_for_block(3, TorusCharG2(2, 0, 6))
    assert d4_stabilizer(TorusCharD4(0, 0, 2, 1)).order == 12
