import numpy as np
import pytest

from sscode.cdc import (
    CdcCode,
    construction_D,
    dual_code,
    embed_front,
    explicit_code,
    lifted_mrd,
    multicomponent,
    multicomponent_vectors,
    multilevel,
)
from sscode.errors import BadArgs, BadParams, DeltaTooSmall, DistanceViolation
from sscode.gf import field_new
from sscode.sizes import size_D, size_MC
from sscode.subspace import from_generator
from sscode.verify import verify_distance


def test_single_vector_multilevel_is_lifted_mrd():
    c = multilevel([(1, 1, 1, 0, 0, 0)], 2, 2)
    assert c.size == 2**6
    assert verify_distance(c, "exhaustive").min_found == 2


def test_multilevel_rejects_close_vectors():
    with pytest.raises(DistanceViolation):
        multilevel([(1, 1, 0, 0), (1, 0, 1, 0)], 2, 2)
    with pytest.raises(BadArgs):
        multilevel([(1, 1, 0, 0), (1, 0, 0)], 1, 2)


@pytest.mark.parametrize("n,k,d,q,size", [(8, 4, 3, 2, 256), (13, 4, 3, 2, 2**18), (6, 3, 2, 3, 3**6), (7, 2, 2, 2, 2**5)])
def test_lifted_mrd_sizes(n, k, d, q, size):
    assert lifted_mrd(n, k, d, q).size == size


def test_lifted_mrd_bad_params():
    with pytest.raises(BadParams):
        lifted_mrd(6, 3, 4, 2)


@pytest.mark.parametrize("n,k,d,q", [(9, 3, 2, 2), (10, 4, 2, 2), (8, 3, 3, 2), (6, 3, 2, 3), (12, 4, 3, 2), (6, 2, 2, 4)])
def test_multicomponent_matches_closed_form(n, k, d, q):
    c = multicomponent(n, k, d, q)
    assert c.size == size_MC(n, k, d, q)
    assert [c.ident for c in c.sorted().cells] == sorted(multicomponent_vectors(n, k, d))


def test_multicomponent_is_a_code():
    r = verify_distance(multicomponent(9, 3, 2, 2), "exhaustive")
    assert r.passed and r.min_found == 2


def test_extension_multiplies_size_and_keeps_distance():
    base = multicomponent(6, 3, 2, 2)
    ext = construction_D(base, 3)
    assert ext.n == 9 and ext.size == size_D(base.size, 3, 2, 2, 3)
    assert verify_distance(ext, "exhaustive").min_found == 2
    with pytest.raises(DeltaTooSmall):
        construction_D(base, 2)


def test_embed_front_keeps_cells():
    base = lifted_mrd(6, 3, 2, 2)
    emb = embed_front(base, 2)
    assert emb.n == 8 and emb.size == base.size
    assert emb.cells[0].ident == (0, 0, 1, 1, 1, 0, 0, 0)


def test_dual_code_is_affine_and_distance_preserving():
    c = multicomponent(7, 2, 2, 2)
    dc = dual_code(c)
    assert dc.k == 5 and dc.size == c.size
    assert verify_distance(dc, "exhaustive").min_found == verify_distance(c, "exhaustive").min_found


def test_expand_and_count_agree():
    c = multicomponent(8, 3, 2, 3)
    words = list(c.expand())
    assert len(words) == len(set(words)) == c.size == c.expansion_count()


def test_explicit_code_and_validation():
    F = field_new(2)
    X = from_generator([[1, 0, 0, 0], [0, 1, 0, 0]], F)
    Y = from_generator([[0, 0, 1, 0], [0, 0, 0, 1]], F)
    c = explicit_code([X, Y], 2, F)
    assert c.size == 2 and set(c.expand()) == {X, Y}
    with pytest.raises(BadArgs):
        CdcCode(4, 2, 2, F, c.cells + c.cells)
    Z = from_generator([[1, 0, 0, 1], [0, 1, 0, 0]], F)
    with pytest.raises(BadArgs):
        explicit_code([X, Z], 1, F)


def test_cell_words_follow_coefficient_order():
    c = multicomponent(6, 2, 2, 3)
    cell = c.sorted().cells[-1]
    W = cell.words()
    for idx in (0, 1, 5):
        coeffs = [(idx // 3**t) % 3 for t in range(cell.rho)]
        assert np.array_equal(W[idx], cell.subspace(coeffs).basis)
