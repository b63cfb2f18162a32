"""Ferrers diagrams and rank-metric codes whose codewords live on them.

A Ferrers diagram is stored as its row lengths, top row first.  Rows are
right-aligned inside an ``m x l`` box, where ``m`` is the number of rows and
``l`` the length of the top row, so row ``r`` owns columns
``l - row_lengths[r] .. l-1``.  Codewords are ``m x l`` matrices over GF(q)
that vanish outside the dots.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .errors import (
    BadArgs,
    BadDistance,
    BadIndex,
    ConstructionFailed,
    DiagramMismatch,
    ShapeMismatch,
    TooLarge,
    ZeroWeight,
)
from .gf import ExtensionField, Field, nullspace, rank, rref

DEFAULT_BUDGET = 1 << 22


@dataclass(frozen=True)
class FerrersDiagram:
    row_lengths: tuple[int, ...]

    def __post_init__(self):
        rl = tuple(int(x) for x in self.row_lengths)
        if any(x <= 0 for x in rl) or any(a < b for a, b in zip(rl, rl[1:])):
            raise BadArgs(f"row lengths must be positive and non-increasing: {rl}")
        object.__setattr__(self, "row_lengths", rl)

    @property
    def m(self) -> int:
        return len(self.row_lengths)

    @property
    def l(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def first_col(self, r: int) -> int:
        return self.l - self.row_lengths[r]

    def mask(self) -> np.ndarray:
        M = np.zeros((self.m, self.l), dtype=bool)
        for r, L in enumerate(self.row_lengths):
            M[r, self.l - L:] = True
        return M

    def dots(self) -> list[tuple[int, int]]:
        """Dot coordinates in row-major order."""
        return [(r, c) for r, L in enumerate(self.row_lengths) for c in range(self.l - L, self.l)]

    def drop_left_columns(self, count: int) -> "FerrersDiagram":
        keep = self.l - count
        return FerrersDiagram(tuple(x for x in (min(L, keep) for L in self.row_lengths) if x > 0))

    def keep_right_columns(self, count: int) -> "FerrersDiagram":
        return self.drop_left_columns(self.l - count)

    def __str__(self) -> str:
        return "\n".join(" " * (self.l - L) + "*" * L for L in self.row_lengths)


def diagram_of(v) -> FerrersDiagram:
    """Ferrers diagram of a binary identifying vector.

    Row ``j`` has one dot for every zero of ``v`` to the right of its
    ``j``-th one; empty rows are dropped.
    """
    v = [int(x) for x in v]
    if any(x not in (0, 1) for x in v):
        raise BadArgs("identifying vectors are binary")
    if sum(v) == 0:
        raise ZeroWeight("identifying vector has weight 0")
    rows = []
    zeros_right = 0
    for x in reversed(v):
        if x:
            rows.append(zeros_right)
        else:
            zeros_right += 1
    rows.reverse()
    return FerrersDiagram(tuple(r for r in rows if r > 0))


def theorem1_bound(F: FerrersDiagram, d: int) -> int:
    """Upper bound on the dimension of a code on ``F`` with rank distance ``d``.

    Minimum over ``i < d`` of the number of dots that are neither in the
    top ``i`` rows nor in the rightmost ``d-1-i`` columns.
    """
    if d < 1:
        raise BadDistance("rank distance must be at least 1")
    best = None
    for i in range(d):
        cut = d - 1 - i
        w = sum(max(0, L - cut) for L in F.row_lengths[i:])
        best = w if best is None else min(best, w)
    return best


def pending_prefix(F: FerrersDiagram, d: int) -> int:
    """Largest ``l1 < l`` such that dropping the leftmost ``l1`` columns keeps the bound."""
    target = theorem1_bound(F, d)
    for l1 in range(F.l - 1, 0, -1):
        if theorem1_bound(F.drop_left_columns(l1), d) == target:
            return l1
    return 0


def is_quasi_pending(F: FerrersDiagram, m1: int, l1: int) -> bool:
    """Whether the top-left ``m1 x l1`` corner is a quasi-pending block.

    Row ``m1+1`` (missing rows count as empty) must be shorter than row
    ``m1`` and must not reach into the leftmost ``l1`` columns.
    """
    if not (1 <= m1 <= F.m) or not (0 <= l1 <= F.l):
        raise BadIndex(f"block ({m1},{l1}) does not fit a {F.m}x{F.l} diagram")
    below = F.row_lengths[m1] if m1 < F.m else 0
    return below < F.row_lengths[m1 - 1] and below <= F.l - l1


# ---------------------------------------------------------------------------
# Codes on diagrams


@dataclass
class FdrmCode:
    """An affine rank-metric code ``offset + span(basis)`` on a Ferrers diagram.

    ``certified_d`` is a lower bound on the minimum rank distance that holds
    by construction (``None`` when nothing is known).
    """

    diagram: FerrersDiagram
    field: Field
    basis: np.ndarray  # (rho, m, l) uint8
    offset: np.ndarray = None  # (m, l) uint8
    certified_d: int | None = None
    method: str = ""
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        m, l = self.diagram.m, self.diagram.l
        self.basis = np.asarray(self.basis, dtype=np.uint8)
        self.basis = np.zeros((0, m, l), np.uint8) if self.basis.size == 0 else self.basis.reshape(-1, m, l)
        if self.offset is None:
            self.offset = np.zeros((m, l), dtype=np.uint8)
        self.offset = np.asarray(self.offset, dtype=np.uint8).reshape(m, l)
        mask = self.diagram.mask()
        if (self.basis[:, ~mask] != 0).any() or (self.offset[~mask] != 0).any():
            raise DiagramMismatch("codeword has entries outside the diagram")

    @property
    def rho(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        return self.field.q ** self.rho

    def codeword(self, coeffs) -> np.ndarray:
        F = self.field
        out = self.offset.copy()
        for c, b in zip(coeffs, self.basis):
            if c:
                out = F.add[out, F.mul[int(c), b]]
        return out

    def codewords(self):
        """Iterate over all codewords (coefficients in base-q counting order)."""
        q = self.field.q
        for idx in range(q**self.rho):
            coeffs = []
            x = idx
            for _ in range(self.rho):
                coeffs.append(x % q)
                x //= q
            yield self.codeword(coeffs)

    def shifted(self, offset: np.ndarray) -> "FdrmCode":
        """Same linear part, different offset."""
        return FdrmCode(self.diagram, self.field, self.basis, offset, self.certified_d, self.method, dict(self.meta))


def packed_rows(mats: np.ndarray) -> np.ndarray:
    """Bit-pack GF(2) matrices of shape (N, m, l) into (N, m) uint64 words."""
    mats = np.asarray(mats, dtype=np.uint64)
    weights = np.left_shift(np.uint64(1), np.arange(mats.shape[-1], dtype=np.uint64))
    return (mats * weights).sum(axis=-1, dtype=np.uint64)


def min_rank_distance(code: FdrmCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum rank distance of the linear part of ``code``.

    Returns ``min(m, l) + 1`` for a code with a single codeword.
    """
    if code.rho == 0:
        return min(code.diagram.m, code.diagram.l) + 1
    if code.size > budget:
        raise TooLarge(f"{code.size} codewords exceed the enumeration budget {budget}")
    return _min_rank(code.basis, code.field)[0]


def _min_rank(basis: np.ndarray, field: Field, offset=None):
    if field.q == 2:
        off = None if offset is None else packed_rows(offset[None])[0]
        return kernels.min_rank_of_span(packed_rows(basis), field, off)
    return kernels.min_rank_of_span(basis, field, offset)


def _canonical_basis(mats: np.ndarray, diagram: FerrersDiagram, field: Field) -> np.ndarray:
    """Row-reduce a spanning set of diagram matrices (flattened over the dots)."""
    mask = diagram.mask()
    if len(mats) == 0:
        return np.zeros((0, diagram.m, diagram.l), dtype=np.uint8)
    flat = np.asarray(mats, dtype=np.uint8)[:, mask]
    R, piv = rref(flat, field)
    out = np.zeros((len(piv), diagram.m, diagram.l), dtype=np.uint8)
    out[:, mask] = R[: len(piv)]
    return out


def gabidulin_basis(m: int, l: int, d: int, field: Field) -> np.ndarray:
    """GF(q)-basis of a Gabidulin code of ``m x l`` matrices with rank distance ``d``.

    The code evaluates linearised polynomials of q-degree below
    ``min(m,l) - d + 1`` with coefficients in GF(q^N), ``N = max(m,l)``, at
    the linearly independent points ``1, x, ..., x^(L-1)``.
    """
    N, L = max(m, l), min(m, l)
    if not 1 <= d <= L:
        raise BadDistance(f"rank distance {d} impossible for {m}x{l} matrices")
    K = L - d + 1
    ext = ExtensionField(field, N)
    points = [ext.monomial(j) for j in range(L)]
    out = np.zeros((N * K, m, l), dtype=np.uint8)
    idx = 0
    for i in range(K):
        frob = [ext.frobenius(g, i) for g in points]
        for t in range(N):
            beta = ext.monomial(t)
            cols = np.array([ext.mul(beta, h) for h in frob], dtype=np.uint8).T  # N x L
            out[idx] = cols if m >= l else cols.T
            idx += 1
    return out


def mrd_code(m: int, l: int, d: int, field: Field) -> FdrmCode:
    """Full ``m x l`` MRD code with rank distance ``d`` and ``q^(max(m,l)(min(m,l)-d+1))`` words."""
    F = FerrersDiagram((l,) * m)
    basis = _canonical_basis(gabidulin_basis(m, l, d, field), F, field)
    return FdrmCode(F, field, basis, certified_d=d, method="mrd")


def _mrd_subcode(F: FerrersDiagram, d: int, field: Field, cols: int) -> np.ndarray | None:
    """Subcode of an MRD code on the rightmost ``cols`` columns that vanishes off ``F``."""
    m = F.m
    if cols < d or m < d:
        return None
    full = gabidulin_basis(m, cols, d, field)
    mask = F.mask()[:, F.l - cols:]
    off = ~mask
    constraints = full[:, off]  # (dim, #non-dots)
    if constraints.shape[1]:
        null = nullspace(constraints.T.copy(), field)
    else:
        null = np.eye(full.shape[0], dtype=np.uint8)
    sub = np.zeros((len(null), m, F.l), dtype=np.uint8)
    flat = full.reshape(full.shape[0], -1)
    for i, c in enumerate(null):
        acc = np.zeros(flat.shape[1], dtype=np.uint8)
        for coef, row in zip(c.tolist(), flat):
            if coef:
                acc = field.add[acc, field.mul[coef, row]]
        sub[i, :, F.l - cols:] = acc.reshape(m, cols)
    return _canonical_basis(sub, F, field)


def fdmrd(F: FerrersDiagram, d: int, field: Field, require_bound: bool = True) -> FdrmCode:
    """Linear code on ``F`` with rank distance ``d`` of dimension ``theorem1_bound(F, d)``.

    Tries MRD subcodes supported on the rightmost ``c`` columns, widest
    first, and keeps the first one whose dimension meets the bound.
    """
    target = theorem1_bound(F, d)
    if target == 0 or F.m == 0:
        return FdrmCode(F, field, np.zeros((0, F.m, F.l)), certified_d=d, method="trivial")
    best = None
    for cols in range(F.l, d - 1, -1):
        sub = _mrd_subcode(F, d, field, cols)
        if sub is None:
            continue
        if best is None or len(sub) > len(best):
            best = sub
        if len(best) >= target:
            break
    if best is None or (require_bound and len(best) < target):
        got = 0 if best is None else len(best)
        raise ConstructionFailed(f"reached dimension {got} < bound {target} on rows {F.row_lengths}")
    return FdrmCode(F, field, best, certified_d=d, method="mrd-subcode")


def fdmrd_d2(F: FerrersDiagram, field: Field) -> FdrmCode:
    """Optimal code on ``F`` with rank distance 2.

    The MRD code of the bounding box has ``max(m,l)(min(m,l)-1)``
    dimensions; forcing the ``m*l - |F|`` off-diagram entries to zero costs at
    most that many, which leaves exactly the bound.
    """
    return fdmrd(F, 2, field)


def fdmrd_rows(F: FerrersDiagram, d: int, field: Field) -> FdrmCode:
    """Optimal code when the top ``d-1`` rows span the whole width."""
    if F.m < d - 1 or any(L != F.l for L in F.row_lengths[: d - 1]):
        raise ShapeMismatch(f"top {d - 1} rows of {F.row_lengths} are not full")
    return fdmrd(F, d, field)


def fdmrd_staircase(F: FerrersDiagram, x: int, field: Field) -> FdrmCode:
    """Code of size ``q^x`` and rank distance ``m`` on a staircase diagram.

    Every row must exceed the next by at least ``x`` dots and the last row
    must have exactly ``x``.  The word for ``w`` in GF(q)^x copies ``w``
    into the first ``x`` dots of every row; leading entries then sit in
    distinct, increasing columns, so every non-zero word has full row rank.
    """
    rl = F.row_lengths
    if x < 1 or not rl or rl[-1] != x or any(a - b < x for a, b in zip(rl, rl[1:])):
        raise ShapeMismatch(f"rows {rl} are not a staircase of step {x}")
    basis = np.zeros((x, F.m, F.l), dtype=np.uint8)
    for t in range(x):
        for r in range(F.m):
            basis[t, r, F.first_col(r) + t] = 1
    return FdrmCode(F, field, basis, certified_d=F.m, method="staircase")


def staircase_word(F: FerrersDiagram, w) -> np.ndarray:
    """The staircase codeword carrying ``w`` (see :func:`fdmrd_staircase`)."""
    out = np.zeros((F.m, F.l), dtype=np.uint8)
    for r in range(F.m):
        c = F.first_col(r)
        out[r, c:c + len(w)] = w
    return out


def matrix_rank(M: np.ndarray, field: Field) -> int:
    return rank(np.asarray(M, dtype=np.uint8), field)


def rank_one_words(F: FerrersDiagram, field: Field) -> np.ndarray:
    """Every rank-one ``m x l`` matrix supported on ``F`` (column factor normalised)."""
    q, m, l = field.q, F.m, F.l
    mask = F.mask()
    out = []
    for ui in range(1, q**m):
        u = np.array([(ui // q**i) % q for i in range(m)], dtype=np.uint8)
        if u[np.nonzero(u)[0][0]] != 1:
            continue
        rows = np.nonzero(u)[0]
        # the row factor may only use columns every active row reaches
        width = min(F.row_lengths[r] for r in rows)
        for vi in range(1, q**width):
            v = np.zeros(l, dtype=np.uint8)
            for j in range(width):
                v[l - width + j] = (vi // q**j) % q
            M = field.mul[u[:, None], v[None, :]]
            if (M[~mask] == 0).all():
                out.append(M)
    return np.array(out, dtype=np.uint8).reshape(-1, m, l)


def has_rank_one_word(code: FdrmCode) -> bool:
    """Exact test for a rank-one word in the linear part of ``code``.

    Equivalent to ``min_rank_distance(code) < 2`` but costs one membership
    test per rank-one matrix on the diagram instead of ``q**rho`` ranks.
    """
    if code.rho == 0:
        return False
    field = code.field
    mask = code.diagram.mask()
    cands = rank_one_words(code.diagram, field)[:, mask]
    R, piv = rref(code.basis[:, mask], field)
    for row, p in zip(R[: len(piv)], piv):
        coef = cands[:, p]
        hit = coef != 0
        if hit.any():
            cands[hit] = field.sub[cands[hit], field.mul[coef[hit][:, None], row[None, :]]]
    return bool((~cands.any(axis=1)).any())
