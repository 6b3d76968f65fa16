import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from weightsmith.gf import FieldError, embedding, field, prime_factors, prime_power, roots_of_unity

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 729]


def _sympy_mul(ctx, a, b):
    """Oracle: multiply codes through sympy's dense polynomials over F_p."""
    da = list(reversed(ctx.digits(a)))
    db = list(reversed(ctx.digits(b)))
    f = list(reversed(ctx.modulus))
    prod = gf_rem(gf_mul(da, db, ctx.p, ZZ), f, ctx.p, ZZ)
    co = list(reversed(prod)) + [0] * ctx.k
    return ctx.from_digits(co[: ctx.k])


@pytest.mark.parametrize("q, expected", [(2, (2, 1)), (8, (2, 3)), (9, (3, 2)), (49, (7, 2)), (729, (3, 6))])
def test_prime_power(q, expected):
    assert prime_power(q) == expected


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_prime_power_rejects(q):
    with pytest.raises(FieldError):
        prime_power(q)


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(97) == [97]


def test_size_bound():
    with pytest.raises(FieldError):
        field(2, 21)


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 64, 81])
def test_modulus_is_irreducible(q):
    ctx = field(q)
    assert gf_irreducible_p(list(reversed(ctx.modulus)), ctx.p, ZZ)


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27])
def test_mul_matches_sympy_exhaustive(q):
    ctx = field(q)
    for a in range(q):
        for b in range(q):
            assert ctx.mul(a, b) == _sympy_mul(ctx, a, b)


@pytest.mark.parametrize("q", QS)
def test_generator_is_primitive(q):
    ctx = field(q)
    assert ctx.primitive().order() == q - 1


@given(st.sampled_from(QS), st.data())
@settings(max_examples=200, deadline=None)
def test_field_axioms(q, data):
    ctx = field(q)
    a, b, c = (ctx.elem(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert a ** (q - 1) == 1


@given(st.sampled_from(QS), st.data())
@settings(max_examples=200, deadline=None)
def test_frobenius_is_a_field_automorphism(q, data):
    ctx = field(q)
    a, b = (ctx.elem(data.draw(st.integers(0, q - 1))) for _ in range(2))
    assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    assert (a * b).frobenius() == a.frobenius() * b.frobenius()
    assert a.frobenius(ctx.k) == a


@pytest.mark.parametrize("q", [5, 9, 16, 27])
def test_vectorised_ops_agree_with_scalar(q):
    ctx = field(q)
    a = np.arange(q).repeat(q)
    b = np.tile(np.arange(q), q)
    assert np.array_equal(ctx.vadd(a, b), [ctx.add(int(x), int(y)) for x, y in zip(a, b)])
    assert np.array_equal(ctx.vmul(a, b), [ctx.mul(int(x), int(y)) for x, y in zip(a, b)])
    assert np.array_equal(ctx.vneg(a), [ctx.neg(int(x)) for x in a])
    assert np.array_equal(ctx.vpow(a, 5), [ctx.pow(int(x), 5) for x in a])


@pytest.mark.parametrize("q", [3, 4, 9, 25])
def test_matmul_and_inverse(q):
    ctx = field(q)
    rng = np.random.default_rng(q)
    A = rng.integers(0, q, (4, 4))
    B = rng.integers(0, q, (4, 4))
    naive = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc = ctx.add(acc, ctx.mul(int(A[i, k]), int(B[k, j])))
            naive[i, j] = acc
    assert np.array_equal(ctx.matmul(A, B), naive)
    M = A
    while True:
        try:
            Minv = ctx.matinv(M)
            break
        except FieldError:
            M = rng.integers(0, q, (4, 4))
    assert np.array_equal(ctx.matmul(M, Minv), np.eye(4, dtype=np.int64))
    assert np.array_equal(ctx.matpow(M, q - 1), ctx.matmul(ctx.matpow(M, q - 2), M))


def test_roots_of_unity():
    ctx = field(49)
    r = roots_of_unity(8, ctx)
    assert len(r) == 8
    assert all(z ** 8 == 1 for z in r)
    assert len(roots_of_unity(5, ctx)) == 1


@pytest.mark.parametrize("small, big", [(3, 9), (9, 729), (4, 64), (8, 64), (2, 16)])
def test_embedding_is_a_homomorphism(small, big):
    s, b = field(small), field(big)
    emb = embedding(s, b)
    for x in range(small):
        for y in range(small):
            assert emb[s.add(x, y)] == b.add(int(emb[x]), int(emb[y]))
            assert emb[s.mul(x, y)] == b.mul(int(emb[x]), int(emb[y]))


def test_embedding_rejects_non_subfield():
    with pytest.raises(FieldError):
        embedding(field(4), field(8))


def test_mixed_contexts_rejected():
    with pytest.raises(FieldError):
        field(9).elem(1) + field(3).elem(1)
