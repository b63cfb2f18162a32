"""Codes in the projective space: coordinate puncturing, punctured codes and
unions of constant dimension layers."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import BadArgs, PreconditionFailed, RegistryMiss, TooLarge, UnitVectorInside
from .gf import Field, field_new, nullspace
from .subspace import Subspace, contains_vector, dual, from_generator

SEARCH_BUDGET = 1 << 20


@dataclass
class MixedCode:
    """Subspaces of possibly different dimensions with a declared distance.

    ``metric`` is ``"I"`` (injection) or ``"S"`` (subspace); ``claimed`` stays
    true until a verifier has confirmed ``d``.
    """

    n: int
    field: Field
    metric: str
    d: int
    codewords: list[Subspace]
    claimed: bool = True
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.metric not in ("I", "S"):
            raise BadArgs(f"metric must be I or S, got {self.metric!r}")
        if len(set(self.codewords)) != len(self.codewords):
            raise BadArgs("codewords must be pairwise distinct")
        for X in self.codewords:
            if X.n != self.n:
                raise BadArgs(f"codeword in F^{X.n}, expected F^{self.n}")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return len(self.codewords)

    def dimensions(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for X in self.codewords:
            out[X.k] = out.get(X.k, 0) + 1
        return dict(sorted(out.items()))

    def sorted(self) -> "MixedCode":
        words = sorted(self.codewords, key=lambda X: (X.k, X.key()))
        return MixedCode(self.n, self.field, self.metric, self.d, words, self.claimed, dict(self.meta))


@dataclass
class Hyperplane:
    """``Q = ker(normal)``; ``tau`` is the zero position of ``v(Q)``."""

    normal: tuple[int, ...]
    field: Field

    def __post_init__(self):
        self.normal = tuple(int(x) for x in self.normal)
        if not any(self.normal):
            raise BadArgs("hyperplane normal must be nonzero")

    @property
    def n(self) -> int:
        return len(self.normal)

    @property
    def tau(self) -> int:
        return max(i for i, x in enumerate(self.normal) if x)

    @property
    def subspace(self) -> Subspace:
        h = np.array([self.normal], dtype=np.uint8)
        return from_generator(nullspace(h, self.field), self.field, self.n)

    def pairing(self, vecs: np.ndarray) -> np.ndarray:
        """``<normal, x>`` for each row ``x``."""
        F = self.field
        acc = np.zeros(vecs.shape[:-1], dtype=np.uint8)
        for j, c in enumerate(self.normal):
            if c:
                acc = F.add[acc, F.mul[c, vecs[..., j]]]
        return acc

    def contains(self, X: Subspace) -> bool:
        return not self.pairing(X.basis).any()

    def intersect(self, X: Subspace) -> Subspace:
        if self.contains(X):
            return X
        coeffs = nullspace(self.pairing(X.basis)[:, None].T.copy(), self.field)
        F = self.field
        rows = np.zeros((len(coeffs), X.n), dtype=np.uint8)
        for i, c in enumerate(coeffs):
            for j, a in enumerate(c):
                if a:
                    rows[i] = F.add[rows[i], F.mul[int(a), X.basis[j]]]
        return from_generator(rows, F, X.n)


def coordinate_hyperplane(n: int, tau: int, field: Field) -> Hyperplane:
    h = [0] * n
    h[tau] = 1
    return Hyperplane(tuple(h), field)


def puncture_coord(X: Subspace, i: int) -> Subspace:
    """Delete coordinate ``i`` (0-based) from every vector of ``X``."""
    if not 0 <= i < X.n:
        raise BadArgs(f"coordinate {i} outside 0..{X.n - 1}")
    e = np.zeros(X.n, dtype=np.uint8)
    e[i] = 1
    if contains_vector(X, e):
        raise UnitVectorInside(f"e_{i} lies in the subspace")
    return from_generator(np.delete(X.basis, i, axis=1), X.field, X.n - 1)


def _codewords(C):
    return list(C.expand()) if hasattr(C, "cells") else list(C.codewords)


def punctured_code(C, Q: Hyperplane, v) -> MixedCode:
    """``{Γ(X) : X ⊆ Q} ∪ {Γ(X ∩ Q) : v ∈ X}`` with ``Γ`` deleting ``Q.tau``.

    The result keeps injection distance ``d`` (and subspace distance
    ``2d - 1``); it is declared in the injection metric.
    """
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (Q.n,):
        raise BadArgs(f"vector length {v.shape} does not match n={Q.n}")
    if not Q.pairing(v[None])[0]:
        raise PreconditionFailed("v must lie outside Q")
    out = []
    for X in _codewords(C):
        if Q.contains(X):
            out.append(puncture_coord(X, Q.tau))
        elif contains_vector(X, v):
            out.append(puncture_coord(Q.intersect(X), Q.tau))
    meta = {"construction": "punctured", "normal": Q.normal, "v": tuple(int(x) for x in v)}
    return MixedCode(Q.n - 1, Q.field, "I", C.d, out, True, meta)


def punctured_size_bound(M: int, n: int, k: int, q: int) -> int:
    """``ceil(M (q^(n-k) + q^k - 2) / (q^n - 1))``."""
    return math.ceil(Fraction(M * (q ** (n - k) + q**k - 2), q**n - 1))


# ---------------------------------------------------------------------------
# choosing (Q, v)


def _encode(vecs: np.ndarray, q: int) -> np.ndarray:
    w = q ** np.arange(vecs.shape[-1], dtype=np.int64)
    return (vecs.astype(np.int64) * w).sum(axis=-1)


def _decode(idx: int, n: int, q: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.uint8)
    for j in range(n):
        out[j] = idx % q
        idx //= q
    return out


def _all_vectors(X: Subspace) -> np.ndarray:
    if X.k == 0:
        return np.zeros((1, X.n), dtype=np.uint8)
    return kernels.span_mats(X.basis[:, None, :], X.field)[:, 0, :]


def incidence_counts(C) -> tuple[np.ndarray, np.ndarray]:
    """``inside[h]`` = #codewords in ``ker h``; ``through[v]`` = #codewords containing ``v``.

    Both arrays are indexed by the base-q encoding of the vector.
    """
    n, q = C.n, C.field.q
    if q**n > SEARCH_BUDGET:
        raise TooLarge(f"q^n = {q**n} exceeds the search budget {SEARCH_BUDGET}")
    inside = np.zeros(q**n, dtype=np.int64)
    through = np.zeros(q**n, dtype=np.int64)
    for X in _codewords(C):
        np.add.at(through, _encode(_all_vectors(X), q), 1)
        np.add.at(inside, _encode(_all_vectors(dual(X)), q), 1)
    inside[0] = through[0] = 0
    return inside, through


def _normalized(n: int, q: int) -> list[int]:
    """Indices of vectors whose first nonzero entry (lowest coordinate) is 1."""
    out = []
    for idx in range(1, q**n):
        x = idx
        while x % q == 0:
            x //= q
        if x % q == 1:
            out.append(idx)
    return out


def choose_Qv(C) -> tuple[Hyperplane, np.ndarray, int]:
    """Pick ``(Q, v)`` meeting the punctured-size bound; returns the achieved size too.

    Coordinate hyperplanes with ``v = e_tau`` come first (smallest ``tau``
    among the best), then coordinate hyperplanes with any ``v`` outside.
    When neither reaches the bound, all pairs are searched, ties broken by
    ``(tau, v, normal)`` in lexicographic order.
    """
    n, q, F = C.n, C.field.q, C.field
    bound = punctured_size_bound(C.size, n, C.k, q)
    inside, through = incidence_counts(C)
    best = None
    for tau in range(n):
        e = q**tau
        val = int(inside[e] + through[e])
        if best is None or val > best[0]:
            best = (val, tau)
    if best[0] >= bound:
        tau = best[1]
        return coordinate_hyperplane(n, tau, F), _decode(q**tau, n, q), best[0]

    reps = _normalized(n, q)
    vs = sorted(reps, key=lambda i: (-through[i], i))
    vecs = {i: _decode(i, n, q) for i in reps}

    # lifted codes never contain e_tau past their pivots, so free v next
    top = None
    for tau in range(n):
        vi = next(i for i in vs if vecs[i][tau])
        val = int(inside[q**tau] + through[vi])
        key = (-val, tau, tuple(vecs[vi][::-1]))
        if top is None or key < top[0]:
            top = (key, tau, vi, val)
    if top[3] >= bound:
        return coordinate_hyperplane(n, top[1], F), vecs[top[2]], top[3]

    top = None
    for hi in reps:
        H = Hyperplane(tuple(vecs[hi]), F)
        for vi in vs:
            if H.pairing(vecs[vi][None])[0]:
                val = int(inside[hi] + through[vi])
                key = (-val, H.tau, tuple(vecs[vi][::-1]), tuple(vecs[hi][::-1]))
                if top is None or key < top[0]:
                    top = (key, H, vecs[vi], val)
                break
    return top[1], top[2], top[3]


# ---------------------------------------------------------------------------
# projective-space construction


def seed_dimension(n: int) -> int:
    """Dimension of the punctured seed code, which lives in ``F^(n+1)``."""
    return (n + 1) // 2


def layer_dimensions(n: int, d: int, metric: str) -> list[int]:
    """Side-code dimensions added around the punctured seed."""
    K = seed_dimension(n)
    step = d if metric == "I" else 2 * d - 1
    low = [K - 1 - i * step for i in range(1, (K - 1) // step + 1)]
    high = [K + i * step for i in range(1, (n - K) // step + 1)]
    return sorted(low + high)


@dataclass
class ProjectiveResult:
    n: int
    q: int
    d: int
    metric: str
    layers: list  # (dimension(s), size, provenance)
    code: MixedCode | None = None

    @property
    def size(self) -> int:
        return sum(s for _, s, _ in self.layers)

    @property
    def declared_distance(self) -> int:
        return self.d if self.metric == "I" else 2 * self.d - 1

    def log2(self) -> float:
        return math.log2(self.size)

    def lines(self) -> list[str]:
        out = [f"n={self.n} q={self.q} metric={self.metric} d={self.declared_distance}"]
        for dims, size, prov in self.layers:
            out.append(f"  dims {dims}: {size} ({prov})")
        out.append(f"size={self.size} log2={self.log2():.4f}")
        return out


def projective_construct(n: int, d: int, q, metric: str, reg, materialize: bool = False) -> ProjectiveResult:
    """Punctured seed from ``G(floor((n+1)/2), n+1)`` plus side layers.

    ``d`` is the injection distance of every constant dimension ingredient;
    the result has injection distance ``d`` (metric ``I``) or subspace
    distance ``2d - 1`` (metric ``S``).  Sizes come from the registry; the
    punctured layer uses a published lower bound when the registry carries
    one and the averaging bound otherwise.  With ``materialize`` every layer
    is built and the union returned as a :class:`MixedCode`; external
    constants without a builder are skipped in favour of buildable codes.
    """
    if metric not in ("I", "S"):
        raise BadArgs(f"metric must be I or S, got {metric!r}")
    F = q if isinstance(q, Field) else field_new(q)
    qv = F.q
    if materialize:
        reg = reg.buildable()
    K = seed_dimension(n)
    seed = reg.lookup(qv, n + 1, d, K)
    layers = []
    words: list[Subspace] = []
    if materialize:
        seed_code = reg.build(qv, n + 1, d, K)
        Q, v, _ = choose_Qv(seed_code)
        P = punctured_code(seed_code, Q, v)
        words.extend(P.codewords)
        layers.append(((K - 1, K), P.size, f"punctured {seed.provenance}"))
    else:
        try:
            value = reg.reported("punctured", (qv, n + 1, d, K))
            layers.append(((K - 1, K), int(value), "external constant (punctured lower bound)"))
        except RegistryMiss:
            bound = punctured_size_bound(seed.size, n + 1, K, qv)
            layers.append(((K - 1, K), bound, f"averaging bound on {seed.provenance}"))
    for k in layer_dimensions(n, d, metric):
        e = reg.lookup(qv, n, d, k)
        layers.append(((k,), e.size, e.provenance))
        if materialize:
            if k in (0, n):
                words.append(from_generator(np.eye(n, dtype=np.uint8)[:k], F, n))
            else:
                words.extend(reg.build(qv, n, d, k).expand())
    res = ProjectiveResult(n, qv, d, metric, layers)
    if materialize:
        res.code = MixedCode(n, F, metric, res.declared_distance, words, True, {"construction": "projective"})
    return res
