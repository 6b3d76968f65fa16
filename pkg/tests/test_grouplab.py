import json
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weightsmith.corpus import (
    AWC_CORPUS, CORPUS, d8_central_dihedral, extraspecial27, load_fixture, pauli_2_1_4, symmetric,
)
from weightsmith.grouplab import (
    GroupError, GroupOverflow, NotAnAutomorphism, apply_automorphism, block_partition, brauer_count, center,
    char_table, closure, conjugate_subgroup, derived_subgroup, ell_subgroup_classes, enumerate_weights, fingerprint, from_permutations,
    is_normal, is_radical, nu, o_ell, perm_from_cycles, quotient, sylow,
)

VALIDATION = ("S3", "S4", "A4", "SL2(3)", "D8", "Q8", "C3:C4", "(C3xC3):C2", "S3xS3")


@pytest.fixture(scope="module")
def groups():
    return {name: CORPUS[name]() for name in CORPUS}


@pytest.fixture(scope="module")
def tables(groups):
    return {name: char_table(G) for name, G in groups.items()}


def _brute_classes(G):
    """Conjugacy classes straight from the multiplication table."""
    inv = [int(np.nonzero(G.mult[g] == 0)[0][0]) for g in range(G.n)]
    seen, classes = set(), []
    for g in range(G.n):
        if g in seen:
            continue
        cls = {int(G.mult[G.mult[inv[x], g], x]) for x in range(G.n)}
        seen |= cls
        classes.append(cls)
    return classes


def _order(G, g):
    k, x = 1, g
    while x != 0:
        x = int(G.mult[x, g])
        k += 1
    return k


@pytest.mark.parametrize("name", list(CORPUS))
def test_table_is_a_group(groups, name):
    G = groups[name]
    G.verify()
    assert sorted(G.class_sizes) == sorted(len(c) for c in _brute_classes(G))


@pytest.mark.parametrize("name", list(CORPUS))
def test_character_tables(tables, name):
    T = tables[name]
    T.check_orthogonality()
    assert sum(d * d for d in T.degrees) == T.group.n
    assert T.k == T.group.num_classes
    assert all(T.group.n % d == 0 for d in T.degrees)


@pytest.mark.parametrize("name", list(CORPUS))
def test_fingerprints_of_corpus(groups, tables, name):
    assert fingerprint(groups[name], tables[name]) == name


@pytest.mark.parametrize("build, name", [(extraspecial27, "3^{1+2}_+"), (pauli_2_1_4, "2^{1+4}_+"),
                                         (lambda: d8_central_dihedral(16), "2^{1+2}_+oD16")])
def test_fingerprints_of_independent_models(build, name):
    assert fingerprint(build()) == name


def test_pauli_model_is_extraspecial():
    G = pauli_2_1_4()
    Z = center(G)
    assert len(Z) == 2
    assert set(map(int, derived_subgroup(G))) == set(map(int, Z))
    assert G.exponent == 4


@pytest.mark.parametrize("name", VALIDATION)
def test_weights_equal_regular_classes(groups, tables, name):
    G = groups[name]
    orders = [_order(G, g) for g in range(G.n)]
    for ell in sorted({p for p in range(2, G.n + 1) if G.n % p == 0 and all(p % d for d in range(2, p))}):
        regular = sum(1 for c in _brute_classes(G) if orders[next(iter(c))] % ell)
        W = enumerate_weights(G, ell, table=tables[name])
        assert W.total == regular == W.regular_classes


@pytest.mark.parametrize("name, ell, expected", [("S4", 2, 2), ("S4", 3, 4), ("SL2(3)", 2, 3), ("SL2(3)", 3, 3),
                                                 ("(C3xC3):C2", 3, 2), ("D8", 2, 1), ("Q8", 2, 1)])
def test_known_weight_counts(groups, tables, name, ell, expected):
    assert enumerate_weights(groups[name], ell, table=tables[name]).total == expected


@pytest.mark.parametrize("name", VALIDATION)
@pytest.mark.parametrize("ell", [2, 3])
def test_block_sanity(groups, tables, name, ell):
    G, T = groups[name], tables[name]
    if G.n % ell:
        pytest.skip("ell does not divide the order")
    bp = block_partition(T, ell)
    assert sorted(x for b in bp.blocks for x in b) == list(range(T.k))
    assert bp.block_of[0] == bp.principal()
    for b, d in zip(bp.blocks, bp.defects):
        if d == 0:
            assert len(b) == 1
    for b, chars in enumerate(bp.blocks):
        # every character of a block has the block's defect at most
        assert all(nu(G.n, ell) - nu(T.degrees[c], ell) <= bp.defects[b] for c in chars)


@pytest.mark.parametrize("name", ["S4", "SL2(3)", "C3:C4", "S3xS3"])
@pytest.mark.parametrize("ell", [2, 3])
def test_block_partition_independent_of_root_choice(tables, name, ell):
    T = tables[name]
    ep = T.ctx.e // ell ** nu(T.ctx.e, ell)
    other = next((w for w in range(2, ep) if gcd(w, ep) == 1), None)
    if other is None:
        pytest.skip("only one primitive root of the ell'-part")
    a = block_partition(T, ell, which=1)
    b = block_partition(T, ell, which=other)
    assert sorted(a.blocks) == sorted(b.blocks)


@pytest.mark.parametrize("name", VALIDATION)
def test_per_block_weights_match_block_rank(groups, tables, name):
    G, T = groups[name], tables[name]
    for ell in (2, 3):
        if G.n % ell:
            continue
        W = enumerate_weights(G, ell, table=T)
        assert W.per_block() == W.brauer_counts()
        assert sum(brauer_count(T, W.blocks, b) for b in range(len(W.blocks.blocks))) == W.regular_classes


@given(st.sampled_from(["S4", "SL2(3)", "S3xS3", "C3:C4"]), st.sampled_from([2, 3]), st.data())
@settings(max_examples=60, deadline=None)
def test_is_radical_respects_conjugacy(groups, name, ell, data):
    G = groups[name]
    reps = ell_subgroup_classes(G, ell)
    H = reps[data.draw(st.integers(0, len(reps) - 1))]
    g = data.draw(st.integers(0, G.n - 1))
    K = conjugate_subgroup(G, H, g)
    assert is_radical(G, H, ell) == is_radical(G, K, ell)


def test_radical_basics(groups):
    S4 = groups["S4"]
    assert is_radical(S4, sylow(S4, 2), 2)
    assert len(o_ell(S4, 2)) == 4
    assert is_radical(S4, o_ell(S4, 2), 2)
    assert not is_radical(S4, closure(S4, [S4.gens[0]]), 2)


def test_quotient_s4_by_v4(groups):
    S4 = groups["S4"]
    V = o_ell(S4, 2)
    assert is_normal(S4, V)
    Q = quotient(S4, V)
    assert Q.table.n == 6 and fingerprint(Q.table) == "S3"


def test_quotient_rejects_non_normal(groups):
    S4 = groups["S4"]
    with pytest.raises(GroupError):
        quotient(S4, closure(S4, [S4.gens[0]]))


def test_inner_automorphism_is_trivial_on_classes_and_characters(groups, tables):
    for name in ("S4", "SL2(3)", "(C3xC3):C2"):
        G, T = groups[name], tables[name]
        g = G.n - 1
        ginv = G.inv[g]
        images = [int(G.mult[G.mult[ginv, s], g]) for s in G.gens]
        aut = apply_automorphism(G, images, table=T)
        assert aut.class_perm == list(range(G.num_classes))
        assert aut.moved_characters() == [] and aut.character_cycles() == []


def test_outer_automorphism_moves_characters(groups, tables):
    # swapping the two C3 factors of (C3xC3):C2 is an outer automorphism
    G, T = groups["(C3xC3):C2"], tables["(C3xC3):C2"]
    x, y, t = G.gens
    aut = apply_automorphism(G, [y, x, t], table=T)
    assert len(aut.character_cycles()) >= 1


def test_non_automorphism_has_witness(groups):
    G = groups["S4"]
    with pytest.raises(NotAnAutomorphism):
        apply_automorphism(G, [G.gens[0], G.gens[0]])


def test_overflow():
    with pytest.raises(GroupOverflow) as exc:
        from_permutations([perm_from_cycles(6, (1, 2)), perm_from_cycles(6, (1, 2, 3, 4, 5, 6))], cap=100)
    assert exc.value.cap == 100


def test_fixtures(tmp_path):
    perm = {"kind": "perm", "generators": [[1, 2, 0], [1, 0, 2]], "name": "S3"}
    assert load_fixture(perm).n == 6
    p = tmp_path / "sl23.json"
    p.write_text(json.dumps({"kind": "matrix", "field": {"p": 3, "k": 1},
                             "generators": [[[1, 1], [0, 1]], [[0, 2], [1, 0]]]}))
    assert fingerprint(load_fixture(p)) == "SL2(3)"
    with pytest.raises(GroupError):
        load_fixture({"kind": "matrix", "field": {"p": 3, "k": 2, "modulus": [2, 1, 1]}, "generators": [[[1]]]})
    with pytest.raises(GroupError):
        load_fixture({"kind": "graph"})


def test_awc_corpus_names():
    assert set(AWC_CORPUS) <= set(CORPUS)


def test_symmetric_orders():
    assert symmetric(4).n == 24
    assert all(symmetric(4).n % _order(symmetric(4), g) == 0 for g in range(24))
    assert gcd(symmetric(4).exponent, 5) == 1
