import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sscode import kernels
from sscode.errors import NotPrimePower, Unsupported
from sscode.gf import ExtensionField, field_new, gaussian_binomial, nullspace, rank, rref

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@pytest.mark.parametrize("q", QS)
def test_field_tables_are_a_field(q):
    F = field_new(q)
    a = np.arange(q)
    assert (F.add[a, F.neg] == 0).all()
    assert (F.mul[a[1:], F.inv[1:]] == 1).all()
    # distributivity on all triples
    lhs = F.mul[a[:, None, None], F.add[a[None, :, None], a[None, None, :]]]
    rhs = F.add[F.mul[a[:, None, None], a[None, :, None]], F.mul[a[:, None, None], a[None, None, :]]]
    assert (lhs == rhs).all()


def test_bad_orders():
    with pytest.raises(NotPrimePower):
        field_new(6)
    with pytest.raises(NotPrimePower):
        field_new(1)
    with pytest.raises(Unsupported):
        field_new(32)


def test_gf4_modulus_encoding():
    F = field_new(4)
    assert F.poly == 0b111
    # x * x = x + 1
    assert F.mul[2, 2] == 3


def _matrices(max_rows=5, max_cols=6):
    return st.tuples(st.sampled_from([2, 3, 4, 5]), st.integers(1, max_rows), st.integers(1, max_cols), st.integers(0, 2**32 - 1))


def _random(q, r, c, seed):
    return np.random.default_rng(seed).integers(0, q, size=(r, c)).astype(np.uint8)


@settings(max_examples=80, deadline=None)
@given(_matrices())
def test_rref_idempotent_and_rank_matches_transpose(args):
    q, r, c, seed = args
    F = field_new(q)
    M = _random(q, r, c, seed)
    R, piv = rref(M, F)
    R2, piv2 = rref(R, F)
    assert np.array_equal(R, R2) and piv == piv2
    assert rank(M, F) == rank(M.T.copy(), F) == len(piv)


@settings(max_examples=60, deadline=None)
@given(_matrices())
def test_nullspace_is_kernel(args):
    q, r, c, seed = args
    F = field_new(q)
    M = _random(q, r, c, seed)
    N = nullspace(M, F)
    assert len(N) == c - rank(M, F)
    for x in N:
        prod = np.zeros(r, dtype=np.uint8)
        for j in range(c):
            prod = F.add[prod, F.mul[M[:, j], x[j]]]
        assert not prod.any()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(0, 2**32 - 1))
def test_batch_rank_matches_scalar_rank(q, seed):
    F = field_new(q)
    mats = np.random.default_rng(seed).integers(0, q, size=(30, 4, 5)).astype(np.uint8)
    mats[::3, 2] = mats[::3, 0]  # force some rank deficiency
    expect = [rank(m, F) for m in mats]
    assert kernels.batch_rank(mats, F).tolist() == expect
    if q == 2:
        from sscode.ferrers import packed_rows

        assert kernels.batch_rank_gf2(packed_rows(mats)).tolist() == expect


def test_gaussian_binomial_values_and_recursion():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(6, 0, 3) == 1
    assert gaussian_binomial(3, 4, 2) == 0
    for q in (2, 3, 4):
        for n in range(1, 9):
            for k in range(1, n):
                pascal = gaussian_binomial(n - 1, k - 1, q) + q**k * gaussian_binomial(n - 1, k, q)
                assert gaussian_binomial(n, k, q) == pascal
                assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


def test_extension_field_frobenius_has_order_degree():
    for q, N in [(2, 5), (3, 3), (4, 2)]:
        E = ExtensionField(field_new(q), N)
        x = E.monomial(1)
        assert E.frobenius(x, N) == x
        assert E.frobenius(x, 1) != x


def test_span_words_cover_all_combinations():
    F = field_new(3)
    basis = np.array([[[1, 0]], [[0, 1]]], dtype=np.uint8)
    span = kernels.span_mats(basis, F)
    assert len({m.tobytes() for m in span}) == 9
