"""Vectorised rank computations over many small matrices at once.

Two representations are used:

* GF(2): a matrix is a row of ``uint64`` words, one word per matrix row,
  column ``j`` stored in bit ``j``.  Arrays have shape ``(N, rows)``.
* general q: ``uint8`` arrays of shape ``(N, rows, cols)``.

Both kernels run the same elimination: every row, in order, picks a pivot
and clears that pivot position from all later rows.  A later row can never
regain an earlier pivot because the rows it is reduced by were already
cleared there, so the number of surviving non-zero rows is the rank.
"""

from __future__ import annotations

import numpy as np

from .gf import Field

_ONE = np.uint64(1)


def batch_rank_gf2(words: np.ndarray) -> np.ndarray:
    """Ranks of ``N`` bit-packed GF(2) matrices, ``words.shape == (N, rows)``."""
    W = np.array(words, dtype=np.uint64, copy=True)
    n_rows = W.shape[1]
    rank = np.zeros(W.shape[0], dtype=np.int64)
    for i in range(n_rows):
        row = W[:, i]
        low = row & (~row + _ONE)  # lowest set bit, 0 for a zero row
        rank += row != 0
        for j in range(i + 1, n_rows):
            hit = (W[:, j] & low) != 0
            W[hit, j] ^= row[hit]
    return rank


def batch_rank(mats: np.ndarray, field: Field) -> np.ndarray:
    """Ranks of ``N`` matrices over GF(q), ``mats.shape == (N, rows, cols)``."""
    M = np.array(mats, dtype=np.uint8, copy=True)
    N, n_rows, _ = M.shape
    rank = np.zeros(N, dtype=np.int64)
    idx = np.arange(N)
    for i in range(n_rows):
        row = M[:, i, :]
        nz = row != 0
        has = nz.any(axis=1)
        rank += has
        piv = nz.argmax(axis=1)
        lead = row[idx, piv]
        row = field.mul[field.inv[lead][:, None], row]
        M[:, i, :] = row
        for j in range(i + 1, n_rows):
            f = M[idx, j, piv] * has
            M[:, j, :] = field.sub[M[:, j, :], field.mul[f[:, None], row]]
    return rank


def span_words_gf2(basis: np.ndarray) -> np.ndarray:
    """All ``2**len(basis)`` XOR combinations of bit-packed matrices.

    ``basis`` has shape ``(rho, rows)``; the result has shape
    ``(2**rho, rows)`` with combination ``c`` at index ``c``.
    """
    rows = basis.shape[1]
    out = np.zeros((1, rows), dtype=np.uint64)
    for b in basis:
        out = np.concatenate([out, out ^ b[None, :]])
    return out


def span_mats(basis: np.ndarray, field: Field) -> np.ndarray:
    """All ``q**len(basis)`` linear combinations of ``basis`` (shape (rho, r, c))."""
    r, c = basis.shape[1:]
    out = np.zeros((1, r, c), dtype=np.uint8)
    for b in basis:
        layers = [out]
        for a in range(1, field.q):
            layers.append(field.add[out, field.mul[a, b][None, :, :]])
        out = np.concatenate(layers)
    return out


def min_rank_of_span(basis, field: Field, offset=None, chunk_bits: int = 16):
    """Minimum rank over ``offset + span(basis)``.

    Without an offset the zero combination is skipped (returns ``None`` when
    the span is trivial).  Returns ``(min_rank, coefficients)`` where the
    coefficient tuple witnesses the minimum.  The basis is given either as a
    ``(rho, rows)`` uint64 array (GF(2)) or ``(rho, rows, cols)`` uint8 array.
    """
    basis = np.asarray(basis)
    rho = basis.shape[0]
    binary = basis.dtype == np.uint64
    q = 2 if binary else field.q
    lo = min(rho, chunk_bits if binary else max(1, int(chunk_bits * np.log(2) / np.log(q))))
    if binary:
        low_span = span_words_gf2(basis[:lo])
    else:
        low_span = span_mats(basis[:lo], field)
    high = basis[lo:]
    best = None
    best_coeffs = None
    n_high = q ** len(high)
    for h in range(n_high):
        hc = []
        x = h
        for _ in range(len(high)):
            hc.append(x % q)
            x //= q
        if binary:
            shift = np.zeros(basis.shape[1], dtype=np.uint64)
            for c, b in zip(hc, high):
                if c:
                    shift ^= b
            if offset is not None:
                shift = shift ^ offset
            block = low_span ^ shift[None, :]
            ranks = batch_rank_gf2(block)
        else:
            shift = np.zeros(basis.shape[1:], dtype=np.uint8)
            for c, b in zip(hc, high):
                if c:
                    shift = field.add[shift, field.mul[c, b]]
            if offset is not None:
                shift = field.add[shift, offset]
            block = field.add[low_span, shift[None, :, :]]
            ranks = batch_rank(block, field)
        if offset is None and h == 0:
            ranks = ranks.copy()
            ranks[0] = np.iinfo(np.int64).max
            if len(ranks) == 1:
                continue
        i = int(ranks.argmin())
        r = int(ranks[i])
        if best is None or r < best:
            best = r
            lc = []
            x = i
            for _ in range(lo):
                lc.append(x % q)
                x //= q
            best_coeffs = tuple(lc + hc)
    return best, best_coeffs
