import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sscode.errors import BadDistance, DiagramMismatch, ShapeMismatch, ZeroWeight
from sscode.ferrers import (
    FdrmCode,
    FerrersDiagram,
    diagram_of,
    fdmrd,
    fdmrd_d2,
    fdmrd_rows,
    fdmrd_staircase,
    has_rank_one_word,
    is_quasi_pending,
    min_rank_distance,
    mrd_code,
    pending_prefix,
    staircase_word,
    theorem1_bound,
)
from sscode.gf import field_new, rank


def test_diagram_of_vector():
    assert diagram_of((1, 0, 1, 1, 0, 0, 0)).row_lengths == (4, 3, 3)
    assert diagram_of((1, 1, 1, 0, 0, 0)).row_lengths == (3, 3, 3)
    # trailing ones contribute empty rows, which are dropped
    assert diagram_of((0, 1, 0, 1)).row_lengths == (1,)
    with pytest.raises(ZeroWeight):
        diagram_of((0, 0, 0))


def test_theorem1_bound_values():
    full = FerrersDiagram((4, 4, 4))
    assert theorem1_bound(full, 1) == 12
    assert theorem1_bound(full, 2) == 8  # max(m,l)(min(m,l)-d+1)
    assert theorem1_bound(full, 3) == 4
    assert theorem1_bound(FerrersDiagram((5, 4, 2)), 2) == 6
    with pytest.raises(BadDistance):
        theorem1_bound(full, 0)


def test_pending_and_quasi_pending():
    F = FerrersDiagram((5, 4, 4))
    assert theorem1_bound(F.drop_left_columns(1), 2) == theorem1_bound(F, 2)
    assert pending_prefix(F, 2) >= 1
    assert is_quasi_pending(FerrersDiagram((6, 6, 3)), 2, 3)
    assert not is_quasi_pending(FerrersDiagram((6, 6, 5)), 2, 3)


@pytest.mark.parametrize("m,l,d,q", [(3, 3, 2, 2), (2, 4, 2, 2), (4, 3, 3, 2), (3, 3, 2, 3), (2, 2, 2, 4), (3, 4, 1, 2)])
def test_mrd_code_size_and_exact_distance(m, l, d, q):
    c = mrd_code(m, l, d, field_new(q))
    assert c.size == q ** (max(m, l) * (min(m, l) - d + 1))
    assert min_rank_distance(c) == d


diagrams = st.lists(st.integers(1, 5), min_size=1, max_size=4).map(lambda xs: FerrersDiagram(tuple(sorted(xs, reverse=True))))


@settings(max_examples=60, deadline=None)
@given(diagrams, st.sampled_from([1, 2, 3]), st.sampled_from([2, 3]))
def test_fdmrd_meets_bound_when_it_succeeds(F, d, q):
    field = field_new(q)
    if d > min(F.m, F.l):
        return
    c = fdmrd(F, d, field, require_bound=False)
    assert c.rho <= theorem1_bound(F, d)
    if c.rho and c.size <= 1 << 14:
        assert min_rank_distance(c) >= d


@settings(max_examples=60, deadline=None)
@given(diagrams)
def test_d2_codes_attain_the_bound_without_rank_one_words(F):
    field = field_new(2)
    if min(F.m, F.l) < 2:
        return
    c = fdmrd_d2(F, field)
    assert c.rho == theorem1_bound(F, 2)
    assert not has_rank_one_word(c)


@settings(max_examples=40, deadline=None)
@given(diagrams, st.sampled_from([2, 3]), st.integers(0, 2**32 - 1))
def test_rank_one_test_agrees_with_enumeration(F, q, seed):
    field = field_new(q)
    rng = np.random.default_rng(seed)
    mask = F.mask()
    basis = rng.integers(0, q, size=(min(3, F.size), F.m, F.l)).astype(np.uint8) * mask
    c = FdrmCode(F, field, basis)
    nonzero = [b for b in c.basis if b.any()]
    if not nonzero:
        return
    c = FdrmCode(F, field, np.array(nonzero))
    assert has_rank_one_word(c) == (min_rank_distance(c) < 2)


def test_rows_variant_requires_full_top_rows():
    field = field_new(2)
    c = fdmrd_rows(FerrersDiagram((4, 4, 2)), 3, field)
    assert c.rho == theorem1_bound(FerrersDiagram((4, 4, 2)), 3)
    with pytest.raises(ShapeMismatch):
        fdmrd_rows(FerrersDiagram((4, 3, 2)), 3, field)


@pytest.mark.parametrize("rows,x", [((3, 2, 1), 1), ((6, 4, 2), 2), ((7, 4, 2), 2), ((9, 6, 3), 3)])
def test_staircase_distance_equals_row_count(rows, x):
    F = FerrersDiagram(rows)
    c = fdmrd_staircase(F, x, field_new(2))
    assert c.size == 2**x
    assert min_rank_distance(c) == F.m
    w = staircase_word(F, [1] + [0] * (x - 1))
    assert rank(w, field_new(2)) == F.m


def test_staircase_shape_errors():
    with pytest.raises(ShapeMismatch):
        fdmrd_staircase(FerrersDiagram((3, 3, 1)), 1, field_new(2))


def test_words_must_stay_on_the_diagram():
    F = FerrersDiagram((2, 1))
    bad = np.array([[[1, 1], [1, 0]]], dtype=np.uint8)
    with pytest.raises(DiagramMismatch):
        FdrmCode(F, field_new(2), bad)
