from itertools import combinations

import pytest

from sscode.errors import BadIndex, TooSmall
from sscode.matchings import (
    class_fdrm_size,
    class_fdrm_size_brute,
    class_vectors,
    factorize,
    num_classes,
    obar_set,
    pair_vectors,
)
from sscode.subspace import hamming_distance


@pytest.mark.parametrize("m", range(3, 15))
def test_factorization_partitions_all_edges(m):
    classes = factorize(m)
    assert len(classes) == num_classes(m)
    edges = [e for c in classes for e in c]
    assert sorted(edges) == sorted(combinations(range(1, m + 1), 2))
    for c in classes:
        nodes = [x for e in c for x in e]
        assert len(nodes) == len(set(nodes))  # a matching
        assert len(c) == m // 2


def test_circle_labelling():
    assert sorted(factorize(6)[1]) == [(1, 3), (2, 6), (4, 5)]
    for i, c in enumerate(factorize(5), start=1):
        assert i not in {x for e in c for x in e}


def test_class_vectors_are_far_apart():
    for m in (6, 8, 10):
        for i in range(1, num_classes(m) + 1):
            for u, v in combinations(class_vectors(m, i), 2):
                assert hamming_distance(u, v) == 4


def test_class_size_example():
    assert class_fdrm_size(2, 6, 2) == 2**7 + 2**3 + 2**2 == 140


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("m", range(5, 13))
def test_closed_form_matches_edge_sum(m, q):
    for i in range(1, num_classes(m) + 1):
        assert class_fdrm_size(i, m, q) == class_fdrm_size_brute(i, m, q)


def test_index_errors():
    with pytest.raises(BadIndex):
        class_fdrm_size(6, 6, 2)
    with pytest.raises(BadIndex):
        class_vectors(5, 0)
    with pytest.raises(TooSmall):
        factorize(1)


def test_pair_and_complement_sets():
    assert pair_vectors(6) == [(1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 1)]
    assert all(v[-1] == 0 for v in pair_vectors(7))
    assert obar_set(5) == [(1, 1, 1, 0, 0), (1, 0, 0, 1, 1)]
    for k in range(4, 10):
        vs = obar_set(k)
        assert len(vs) == k // 2 and all(sum(v) == k - 2 for v in vs)
        if k % 2:
            assert all(v[0] == 1 for v in vs)
        for u, v in combinations(vs, 2):
            assert hamming_distance(u, v) >= 4
