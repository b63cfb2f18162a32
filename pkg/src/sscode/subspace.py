"""Subspaces of GF(q)^n in canonical (reduced row echelon) form, and the
distances between them and between their identifying vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AmbientMismatch, BadArgs, DiagramMismatch, LengthMismatch
from .ferrers import FerrersDiagram, diagram_of
from .gf import Field, rank, rref, stack_rank


@dataclass(frozen=True, eq=False)
class Subspace:
    n: int
    field: Field
    basis: np.ndarray  # k x n, always in RREF without zero rows
    pivots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.pivots)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.field == other.field
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.pivots, self.basis.tobytes()))

    def key(self) -> tuple:
        """Sort key: identifying vector, then the Ferrers tableau values."""
        v = identifying_vector(self)
        return (v, tuple(ferrers_tableaux(self)[1]))

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, k={self.k}, rows={self.basis.tolist()})"


def from_generator(G, field: Field, n: int | None = None) -> Subspace:
    """Row space of ``G`` (any shape ``r x n``, zero rows allowed)."""
    G = np.asarray(G, dtype=np.int64)
    if G.ndim == 1:
        G = G.reshape(0 if G.size == 0 else 1, -1 if G.size else (n or 0))
    if n is not None and G.shape[1] != n:
        raise AmbientMismatch(f"generator has {G.shape[1]} columns, expected {n}")
    if G.size and (G.min() < 0 or G.max() >= field.q):
        raise BadArgs("entries must lie in 0..q-1")
    R, piv = rref(G.astype(np.uint8), field)
    return Subspace(G.shape[1], field, R[: len(piv)].copy(), tuple(piv))


def identifying_vector(X: Subspace) -> tuple[int, ...]:
    v = [0] * X.n
    for p in X.pivots:
        v[p] = 1
    return tuple(v)


def dot_columns(v) -> list[list[int]]:
    """Matrix columns holding the dots of each diagram row, left to right."""
    piv = [i for i, x in enumerate(v) if x]
    out = []
    for p in piv:
        cols = [c for c in range(p + 1, len(v)) if not v[c]]
        if cols:
            out.append(cols)
    return out


def ferrers_tableaux(X: Subspace) -> tuple[FerrersDiagram, list[int]]:
    """Diagram of ``X`` together with its entries read row by row."""
    v = identifying_vector(X)
    F = diagram_of(v) if X.k else FerrersDiagram(())
    vals = []
    for r, cols in enumerate(dot_columns(v)):
        vals.extend(int(X.basis[r, c]) for c in cols)
    return F, vals


def tableau_matrix(X: Subspace) -> np.ndarray:
    """Entries of ``X`` placed on its diagram's ``m x l`` box."""
    F, vals = ferrers_tableaux(X)
    M = np.zeros((F.m, F.l), dtype=np.uint8)
    if F.m:
        M[F.mask()] = vals
    return M


def from_tableaux(v, diagram: FerrersDiagram, values, field: Field) -> Subspace:
    v = tuple(int(x) for x in v)
    if diagram_of(v) != diagram:
        raise DiagramMismatch(f"diagram {diagram.row_lengths} does not belong to {v}")
    values = list(values)
    if len(values) != diagram.size:
        raise DiagramMismatch(f"{len(values)} values for {diagram.size} dots")
    T = np.zeros((diagram.m, diagram.l), dtype=np.uint8)
    T[diagram.mask()] = values
    return from_tableau_matrix(v, T, field)


def embed_rows(v, T: np.ndarray) -> np.ndarray:
    """Full ``k x n`` RREF matrix for identifying vector ``v`` and tableau ``T``."""
    piv = [i for i, x in enumerate(v) if x]
    n = len(v)
    R = np.zeros((len(piv), n), dtype=np.uint8)
    R[np.arange(len(piv)), piv] = 1
    for r, cols in enumerate(dot_columns(v)):
        R[r, cols] = T[r, T.shape[1] - len(cols):]
    return R


def from_tableau_matrix(v, T: np.ndarray, field: Field) -> Subspace:
    R = embed_rows(v, T)
    return Subspace(len(v), field, R, tuple(i for i, x in enumerate(v) if x))


def _check(X: Subspace, Y: Subspace):
    if X.n != Y.n:
        raise AmbientMismatch(f"ambient dimensions differ: {X.n} vs {Y.n}")


def intersection_dim(X: Subspace, Y: Subspace) -> int:
    _check(X, Y)
    return X.k + Y.k - stack_rank(X.basis, Y.basis, X.field)


def subspace_distance(X: Subspace, Y: Subspace) -> int:
    return X.k + Y.k - 2 * intersection_dim(X, Y)


def injection_distance(X: Subspace, Y: Subspace) -> int:
    return max(X.k, Y.k) - intersection_dim(X, Y)


def hamming_distance(u, v) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    return sum(a != b for a, b in zip(u, v))


def asymmetric_distance(u, v) -> int:
    """``max(N(u,v), N(v,u))`` where ``N(u,v)`` counts positions with u=1, v=0."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    a = sum(1 for x, y in zip(u, v) if x and not y)
    b = sum(1 for x, y in zip(u, v) if y and not x)
    return max(a, b)


def dual(X: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product."""
    from .gf import nullspace

    return from_generator(nullspace(X.basis, X.field) if X.k else np.eye(X.n, dtype=np.uint8), X.field)


def contains_vector(X: Subspace, v) -> bool:
    v = np.asarray(v, dtype=np.uint8).reshape(1, -1)
    return rank(np.vstack([X.basis, v]), X.field) == X.k


def reversed_coordinates(X: Subspace) -> Subspace:
    return from_generator(X.basis[:, ::-1] if X.k else X.basis, X.field, X.n)


def reversed_dual(X: Subspace) -> Subspace:
    """``X``'s orthogonal complement read backwards.

    Distance preserving like the plain complement, but it maps the codewords
    of one cell onto the codewords of one cell, affinely in the tableaux.
    """
    return reversed_coordinates(dual(X))
