"""Constant dimension codes stored cell by cell.

A cell fixes an identifying vector and carries an affine rank-metric code on
its Ferrers diagram; its codewords are the subspaces whose Ferrers tableaux
are the code's words.  Codes are never expanded unless asked.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

import numpy as np

from . import kernels
from .errors import BadArgs, BadParams, DeltaTooSmall, DistanceViolation, TooLarge
from .ferrers import FdrmCode, FerrersDiagram, diagram_of, fdmrd, mrd_code, packed_rows
from .gf import Field, field_new
from .subspace import (
    Subspace,
    asymmetric_distance,
    dot_columns,
    embed_rows,
    from_generator,
    identifying_vector,
    tableau_matrix,
)


@dataclass
class Cell:
    ident: tuple[int, ...]
    code: FdrmCode
    label: str = ""

    def __post_init__(self):
        self.ident = tuple(int(x) for x in self.ident)
        if self.code.diagram != _diagram(self.ident):
            raise BadArgs(f"cell code diagram {self.code.diagram.row_lengths} does not match {self.ident}")

    @property
    def k(self) -> int:
        return sum(self.ident)

    @property
    def n(self) -> int:
        return len(self.ident)

    @property
    def rho(self) -> int:
        return self.code.rho

    @property
    def size(self) -> int:
        return self.code.size

    def full_offset(self) -> np.ndarray:
        """RREF matrix (``k x n``) of the offset word, pivots included."""
        return embed_rows(self.ident, self.code.offset)

    def full_basis(self) -> np.ndarray:
        """Basis words spread onto ``k x n`` matrices (pivot entries zero)."""
        out = np.zeros((self.rho, self.k, self.n), dtype=np.uint8)
        piv = [i for i, x in enumerate(self.ident) if x]
        for t, B in enumerate(self.code.basis):
            out[t] = embed_rows(self.ident, B)
            out[t, np.arange(len(piv)), piv] = 0
        return out

    def subspace(self, coeffs) -> Subspace:
        T = self.code.codeword(coeffs)
        R = embed_rows(self.ident, T)
        return Subspace(self.n, self.code.field, R, tuple(i for i, x in enumerate(self.ident) if x))

    def words(self) -> np.ndarray:
        """All codewords as full matrices.

        GF(2): ``(2**rho, k)`` bit-packed uint64 words.  Otherwise
        ``(q**rho, k, n)`` uint8.  Index ``c`` holds coefficients = base-q
        digits of ``c``.
        """
        F = self.code.field
        if F.q == 2:
            off = packed_rows(self.full_offset()[None])[0]
            basis = packed_rows(self.full_basis()) if self.rho else np.zeros((0, self.k), np.uint64)
            return kernels.span_words_gf2(basis) ^ off[None, :]
        span = kernels.span_mats(self.full_basis(), F) if self.rho else np.zeros((1, self.k, self.n), np.uint8)
        return F.add[span, self.full_offset()[None]]


def _diagram(ident) -> FerrersDiagram:
    if sum(ident) == 0:
        raise BadArgs("identifying vector of weight 0")
    return diagram_of(ident)


@dataclass
class CdcCode:
    """Constant dimension code ``(n, M, d, k)_q``; ``d`` is an injection distance."""

    n: int
    k: int
    d: int
    field: Field
    cells: list[Cell]
    meta: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for c in self.cells:
            if c.n != self.n or c.k != self.k:
                raise BadArgs(f"cell {c.ident} does not live in G({self.k},{self.n})")
            if c.code.field != self.field:
                raise BadArgs("cells over different fields")
            if c.ident in seen:
                raise BadArgs(f"identifying vector {c.ident} used twice")
            seen.add(c.ident)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return sum(c.size for c in self.cells)

    def sorted(self) -> "CdcCode":
        return CdcCode(self.n, self.k, self.d, self.field, sorted(self.cells, key=lambda c: c.ident), dict(self.meta))

    def expand(self):
        """Yield every codeword, cells in identifying-vector order."""
        for c in sorted(self.cells, key=lambda c: c.ident):
            q = self.field.q
            for idx in range(c.size):
                coeffs = []
                x = idx
                for _ in range(c.rho):
                    coeffs.append(x % q)
                    x //= q
                yield c.subspace(coeffs)

    def expansion_count(self) -> int:
        """Count codewords by materialising every cell (distinct words per cell)."""
        total = 0
        for c in self.cells:
            W = c.words()
            flat = W.reshape(W.shape[0], -1)
            total += len(np.unique(flat, axis=0))
        return total


def single_cell(ident, field: Field, d: int) -> Cell:
    F = _diagram(ident)
    if F.m == 0:
        return Cell(ident, FdrmCode(F, field, np.zeros((0, 0, 0))), "point")
    return Cell(ident, fdmrd(F, d, field, require_bound=False))


def multilevel(vectors, d: int, q, check: bool = True) -> CdcCode:
    """Union of lifted optimal Ferrers-diagram codes, one cell per vector."""
    field = q if isinstance(q, Field) else field_new(q)
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        raise BadArgs("need at least one identifying vector")
    n, k = len(vectors[0]), sum(vectors[0])
    if any(len(v) != n or sum(v) != k for v in vectors):
        raise BadArgs("identifying vectors must share length and weight")
    if check:
        for u, v in combinations(vectors, 2):
            if asymmetric_distance(u, v) < d:
                raise DistanceViolation(f"{u} and {v} are at asymmetric distance < {d}")
    cells = [single_cell(v, field, d) for v in vectors]
    return CdcCode(n, k, d, field, cells, {"construction": "multilevel"})


def lifted_mrd(n: int, k: int, d: int, q) -> CdcCode:
    """Lifted MRD code with ``q^(max(k,n-k)(min(k,n-k)-d+1))`` codewords."""
    field = q if isinstance(q, Field) else field_new(q)
    if not (1 <= k < n) or not (1 <= d <= min(k, n - k)):
        raise BadParams(f"no lifted MRD code for n={n}, k={k}, d={d}")
    ident = (1,) * k + (0,) * (n - k)
    cell = Cell(ident, mrd_code(k, n - k, d, field), "lifted-mrd")
    return CdcCode(n, k, d, field, [cell], {"construction": "lifted-mrd", "n": n, "k": k, "d": d})


def multicomponent_vectors(n: int, k: int, d: int) -> list[tuple[int, ...]]:
    out = []
    for i in range((n - k) // d + 1):
        v = [0] * n
        v[d * i: d * i + k] = [1] * k
        out.append(tuple(v))
    return out


def multicomponent(n: int, k: int, d: int, q) -> CdcCode:
    """Blocks of ``k`` ones shifted right by ``d``; full-rectangle MRD cells."""
    field = q if isinstance(q, Field) else field_new(q)
    if not (1 <= d <= k <= n):
        raise BadParams(f"no multicomponent code for n={n}, k={k}, d={d}")
    cells = []
    for v in multicomponent_vectors(n, k, d):
        F = _diagram(v)
        cols = F.l
        if cols >= d:
            code = mrd_code(k, cols, d, field)
        else:
            code = FdrmCode(F, field, np.zeros((0, F.m, F.l)), certified_d=d, method="trivial")
        cells.append(Cell(v, code, "component"))
    return CdcCode(n, k, d, field, cells, {"construction": "multicomponent", "n": n, "k": k, "d": d})


def embed_front(code: CdcCode, zeros: int) -> CdcCode:
    """Prepend ``zeros`` zero coordinates to every codeword.

    Zeros left of the first pivot add no dots, so every cell keeps its code.
    """
    cells = [Cell((0,) * zeros + c.ident, c.code, c.label or "base") for c in code.cells]
    meta = dict(code.meta)
    return CdcCode(code.n + zeros, code.k, code.d, code.field, cells, meta)


def construction_D(base: CdcCode, delta: int) -> CdcCode:
    """Append ``delta`` columns filled by a ``k x delta`` MRD code of distance ``d``.

    Every base codeword meets every MRD word, so the size grows by
    ``q^(delta(k-d+1))`` and the distance is kept.
    """
    k, d, field = base.k, base.d, base.field
    if delta < k:
        raise DeltaTooSmall(f"delta={delta} must be at least k={k}")
    mrd = mrd_code(k, delta, d, field)
    cells = []
    for c in base.cells:
        ident = c.ident + (0,) * delta
        F = _diagram(ident)
        old = c.code
        m0, l0 = old.diagram.m, old.diagram.l
        off = np.zeros((F.m, F.l), dtype=np.uint8)
        off[:m0, :l0] = old.offset
        basis = np.zeros((old.rho + mrd.rho, F.m, F.l), dtype=np.uint8)
        basis[: old.rho, :m0, :l0] = old.basis
        basis[old.rho:, :, l0:] = mrd.basis
        cert = d if old.certified_d is None else min(old.certified_d, d)
        if old.rho == 0:
            cert = d
        code = FdrmCode(F, field, basis, off, certified_d=cert, method="extended")
        cells.append(Cell(ident, code, c.label))
    meta = {"construction": "D", "delta": delta, "base": dict(base.meta)}
    return CdcCode(base.n + delta, k, d, field, cells, meta)


def explicit_code(subspaces, d: int, field: Field, meta=None) -> CdcCode:
    """Wrap explicit subspaces as single-word cells."""
    subspaces = list(subspaces)
    if not subspaces:
        raise BadArgs("empty code")
    n, k = subspaces[0].n, subspaces[0].k
    cells = []
    for X in subspaces:
        v = identifying_vector(X)
        F = _diagram(v)
        T = tableau_matrix(X)
        cells.append(Cell(v, FdrmCode(F, field, np.zeros((0, F.m, F.l)), T), "explicit"))
    if len({c.ident for c in cells}) != len(cells):
        # several words per identifying vector: group them as affine cells is
        # not possible in general, so keep them as separate one-word cells
        raise BadArgs("explicit codes need distinct identifying vectors; use a MixedCode")
    return CdcCode(n, k, d, field, cells, dict(meta or {}))


def dual_code(code: CdcCode, limit: int = 100_000) -> CdcCode:
    """Reversed orthogonal complements of all codewords (same injection distance)."""
    from .subspace import reversed_dual

    if code.size > limit:
        raise TooLarge(f"dualising {code.size} codewords exceeds {limit}")
    words = sorted((reversed_dual(X) for X in code.expand()), key=lambda X: X.key())
    by_v: dict = {}
    for X in words:
        by_v.setdefault(identifying_vector(X), []).append(X)
    cells = []
    field = code.field
    for v, group in sorted(by_v.items()):
        F = _diagram(v)
        T0 = tableau_matrix(group[0])
        diffs = [field.sub[tableau_matrix(X), T0] for X in group[1:]]
        basis = _affine_basis(diffs, F, field, len(group))
        cells.append(Cell(v, FdrmCode(F, field, basis, T0, certified_d=None, method="dual"), "dual"))
    meta = {"construction": "dual", "of": dict(code.meta)}
    out = CdcCode(code.n, code.n - code.k, code.d, field, cells, meta)
    if out.size != code.size:
        raise BadArgs("dual words do not form affine cells")
    return out


def _affine_basis(diffs, F: FerrersDiagram, field: Field, count: int) -> np.ndarray:
    from .ferrers import _canonical_basis

    if not diffs:
        return np.zeros((0, F.m, F.l), dtype=np.uint8)
    basis = _canonical_basis(np.array(diffs), F, field)
    if field.q ** len(basis) != count:
        raise BadArgs("dual words do not form affine cells")
    return basis
