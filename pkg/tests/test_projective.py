import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sscode.cdc import explicit_code, lifted_mrd
from sscode.constructions import pending_dots
from sscode.errors import BadArgs, PreconditionFailed, UnitVectorInside
from sscode.gf import field_new, rank
from sscode.projective import (
    Hyperplane,
    MixedCode,
    choose_Qv,
    coordinate_hyperplane,
    layer_dimensions,
    projective_construct,
    puncture_coord,
    punctured_code,
    punctured_size_bound,
    seed_dimension,
)
from sscode.registry import Registry, registry_default
from sscode.subspace import contains_vector, from_generator
from sscode.verify import verify_distance

F2 = field_new(2)


def test_puncture_coord_examples():
    X = from_generator([[1, 0, 1, 1], [0, 1, 1, 0]], F2)
    assert puncture_coord(X, 3) == from_generator([[1, 0, 1], [0, 1, 1]], F2)
    assert puncture_coord(X, 0) == from_generator([[0, 1, 1], [1, 1, 0]], F2)
    Y = from_generator([[1, 0, 0, 0], [0, 1, 1, 0]], F2)
    with pytest.raises(UnitVectorInside):
        puncture_coord(Y, 0)
    with pytest.raises(BadArgs):
        puncture_coord(Y, 4)


@settings(max_examples=1000, deadline=None)
@given(st.integers(2, 7), st.data())
def test_puncturing_keeps_dimension(n, data):
    q = data.draw(st.sampled_from([2, 3]))
    F = field_new(q)
    k = data.draw(st.integers(1, n - 1))
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    X = from_generator(rows, F, n)
    i = data.draw(st.integers(0, n - 1))
    e = np.zeros(n, dtype=np.uint8)
    e[i] = 1
    if contains_vector(X, e):
        with pytest.raises(UnitVectorInside):
            puncture_coord(X, i)
    else:
        assert puncture_coord(X, i).k == X.k


def test_hyperplane_basics():
    H = Hyperplane((1, 0, 1, 0), F2)
    assert H.tau == 2 and H.subspace.k == 3
    X = from_generator([[1, 0, 1, 0], [0, 1, 0, 0]], F2)
    assert H.contains(X)
    Y = from_generator([[1, 0, 0, 0], [0, 1, 0, 0]], F2)
    assert not H.contains(Y) and H.intersect(Y).k == 1
    with pytest.raises(BadArgs):
        Hyperplane((0, 0, 0), F2)


def _mixed_min(P, metric):
    return verify_distance(MixedCode(P.n, P.field, metric, 1, P.codewords), "exhaustive").min_found


def test_punctured_pending_dots():
    C = pending_dots(8, 2)
    Q, v, size = choose_Qv(C)
    assert size >= punctured_size_bound(C.size, 8, 3, 2) == 176
    P = punctured_code(C, Q, v)
    assert P.size == size == 188 and P.n == 7
    assert set(P.dimensions()) <= {2, 3}
    d_I, d_S = _mixed_min(P, "I"), _mixed_min(P, "S")
    assert d_I >= 2 and d_S >= 3
    # mixed dimensions differing by one: odd subspace distance pins the injection distance
    if d_S % 2:
        assert d_I == (d_S + 1) // 2


def test_lifted_mrd_uses_coordinate_hyperplane():
    C = lifted_mrd(6, 3, 2, 2)
    Q, v, size = choose_Qv(C)
    assert sum(1 for x in Q.normal if x) == 1
    assert v[Q.tau] and size == punctured_code(C, Q, v).size
    assert size >= punctured_size_bound(C.size, 6, 3, 2)
    # no coordinate hyperplane with smaller tau does as well, whatever v
    for tau in range(Q.tau):
        H = coordinate_hyperplane(6, tau, F2)
        for idx in range(1, 64):
            u = np.array([(idx >> j) & 1 for j in range(6)], dtype=np.uint8)
            if u[tau]:
                assert punctured_code(C, H, u).size < size


def test_punctured_precondition():
    C = lifted_mrd(6, 3, 2, 2)
    H = coordinate_hyperplane(6, 0, F2)
    with pytest.raises(PreconditionFailed):
        punctured_code(C, H, np.array([0, 1, 0, 0, 0, 0], dtype=np.uint8))


def test_layer_dimensions():
    assert seed_dimension(11) == 6
    assert layer_dimensions(11, 2, "I") == [1, 3, 8, 10]
    assert layer_dimensions(11, 2, "S") == [2, 9]
    assert layer_dimensions(7, 2, "I") == [1, 6]
    assert layer_dimensions(5, 6, "I") == []


def test_projective_n11_sizes():
    reg = registry_default()
    I = projective_construct(11, 2, 2, "I", reg)
    S = projective_construct(11, 2, 2, "S", reg)
    assert I.declared_distance == 2 and S.declared_distance == 3
    assert I.layers[0][1] == S.layers[0][1] == 36808900
    # side layers of dimensions 2 and 9 for the subspace metric
    assert [dims for dims, _, _ in S.layers] == [(5, 6), (2,), (9,)]
    assert S.size == 36808900 + 2 * reg.lookup(2, 11, 2, 2).size


def test_projective_falls_back_to_averaging_bound():
    res = projective_construct(7, 2, 2, "I", Registry())
    assert res.layers[0][2].startswith("averaging bound")


def test_projective_materialized_small():
    res = projective_construct(7, 2, 2, "I", Registry(), materialize=True)
    assert res.code.size == res.size
    r = verify_distance(res.code, "exhaustive")
    assert r.passed and r.min_found == 2


def test_single_subspace_inside_hyperplane():
    X = from_generator([[1, 0, 0, 0], [0, 1, 0, 0]], F2)
    C = explicit_code([X], 2, F2)
    H = coordinate_hyperplane(4, 3, F2)
    P = punctured_code(C, H, np.eye(4, dtype=np.uint8)[3])
    assert P.size == 1 and P.codewords[0].n == 3 and rank(P.codewords[0].basis, F2) == 2


def test_materializing_skips_unbuildable_constants():
    reg = registry_default()
    assert reg.lookup(2, 8, 2, 4).builder is None
    res = projective_construct(7, 2, 2, "S", reg, materialize=True)
    assert res.code.size == res.size == 519
    assert verify_distance(res.code, "exhaustive").min_found == 3
