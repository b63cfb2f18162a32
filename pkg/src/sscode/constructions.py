"""Constructions of constant dimension codes from identifying-vector sets,
pending dots and pending blocks.

Codes with ``d = k - 1``: :func:`pending_dots` (k = 3), :func:`construction_A`
and its small-field variant :func:`construction_A_mod`.
Codes with ``d = 2``: :func:`construction_B`, :func:`construction_C4`,
:func:`construction_C5`.  Extension by appended MRD columns lives in
:func:`sscode.cdc.construction_D`.
"""

from __future__ import annotations

import numpy as np

from .cdc import Cell, CdcCode, embed_front, lifted_mrd
from .errors import BadParams, FieldTooSmall
from .ferrers import FdrmCode, FerrersDiagram, diagram_of, fdmrd, mrd_code, theorem1_bound
from .gf import Field, field_new
from .matchings import factorize, edge_vector, obar_set, pair_vectors


def _field(q) -> Field:
    return q if isinstance(q, Field) else field_new(q)


def _digits(x: int, q: int, width: int) -> list[int]:
    """Big-endian base-``q`` digits of ``x``."""
    out = []
    for _ in range(width):
        out.append(x % q)
        x //= q
    return out[::-1]


def _num_classes(length: int) -> int:
    return length if length % 2 else length - 1


# ---------------------------------------------------------------------------
# d = k - 1: pending dots and Construction A


def _core_suffixes(nprime: int, q: int, modified: bool):
    """Weight-2 suffixes of length ``nprime`` grouped by matching class.

    Returns ``[(class_index, rank_within_class, vector)]``.  The modified
    layout cuts the suffix into blocks of ``q^2+q+2`` coordinates and
    factorises each block separately; class ranks run across blocks.
    """
    out = []
    if not modified:
        for i, cls in enumerate(factorize(nprime), start=1):
            for r, e in enumerate(cls):
                out.append((i, r, edge_vector(e, nprime)))
        return out
    b = q * q + q + 2
    seen: dict[int, int] = {}
    for t in range(nprime // b):
        for i, cls in enumerate(factorize(b), start=1):
            for e in cls:
                v = [0] * nprime
                v[t * b + e[0] - 1] = v[t * b + e[1] - 1] = 1
                r = seen.get(i, 0)
                seen[i] = r + 1
                out.append((i, r, tuple(v)))
    return out


def _pending_sets(nprime: int, q: int, modified: bool):
    """Level-3 identifying vectors ``(prefix || suffix)`` sorted into sets 1..3."""
    ell = q * q + q + 1 if modified else _num_classes(nprime)
    entries = []
    for i, r, y in _core_suffixes(nprime, q, modified):
        if i == 1:
            entries.append((1, i, r, (0, 0, 1) + y))
        elif i <= min(q + 1, ell):
            entries.append((2, i, r, (0, 1, 0) + y))
        else:
            entries.append((3, i, r, (1, 0, 0) + y))
    return entries


def _lift_sets(entries, k: int):
    """Prepend one weight-1 prefix per level up to ``k``.

    Sets 1, 2 and 3 put their prefix one at positions 2, 1 and 0.
    """
    pos = {1: 2, 2: 1, 3: 0}
    out = []
    for s, i, r, v in entries:
        for j in range(4, k + 1):
            pre = [0] * j
            pre[pos[s]] = 1
            v = tuple(pre) + v
        out.append((s, i, r, v))
    return out


def _zero_sets(nprime: int, k: int):
    """``v00`` and the set A0 at level ``k`` (lengths ``nprime + 3 + ... + k``)."""
    length = {3: nprime + 3}
    for j in range(4, k + 1):
        length[j] = length[j - 1] + j

    def v0(j, t):
        if t == 0:
            return (1,) * j + (0,) * (length[j] - j)
        w = [0] * (j - 3)
        w[j - 3 - t] = 1
        return (0, 0, 0) + tuple(w) + v0(j - 1, t - 1)

    return v0(k, 0), [v0(k, t) for t in range(1, k - 2)]


def _block_offset(F: FerrersDiagram, lin_cols: int, color: list[int], w: list[int]) -> np.ndarray:
    """Fill the columns left of the last ``lin_cols``: ``color`` entries then ``w``."""
    out = np.zeros((F.m, F.l), dtype=np.uint8)
    stop = F.l - lin_cols
    for r in range(F.m):
        start = F.first_col(r)
        width = stop - start
        if width <= 0:
            continue
        vals = list(color) + (list(w) if width > len(color) else [])
        if width < len(vals):
            raise BadParams(f"pending block row {r} has {width} dots, needs {len(vals)}")
        out[r, start:start + len(vals)] = vals
    return out


def _set_cell(v, s: int, cls: int, rank: int, k: int, nprime: int, field: Field, n_classes: int) -> Cell:
    q = field.q
    F = diagram_of(v)
    lin_cols = nprime - 2
    lin = fdmrd(F.keep_right_columns(lin_cols), k - 1, field)
    basis = np.zeros((lin.rho, F.m, F.l), dtype=np.uint8)
    basis[:, :, F.l - lin_cols:] = lin.basis
    if s == 1:
        color = []
    elif s == 2:
        color = [cls - 2]
    else:
        color = _digits(cls - q - 2, q, 2)
    w = []
    if k >= 4:
        if rank >= q**3:
            raise BadParams(f"{rank + 1} identifying vectors share a pending block; only {q ** 3} staircase words exist")
        w = _digits(rank, q, 3)
    off = _block_offset(F, lin_cols, color, w)
    code = FdrmCode(F, field, basis, off, certified_d=k - 1, method="pending-block")
    return Cell(v, code, f"A{s}:P{cls}")


def _recursive_code(n: int, k: int, field: Field, modified: bool) -> CdcCode:
    s_sum = (k * k + k - 6) // 2
    nprime = n - s_sum
    d = k - 1
    v00, zero_set = _zero_sets(nprime, k)
    cells = [Cell(v00, mrd_code(k, n - k, d, field), "v00")]
    for v in zero_set:
        cells.append(Cell(v, fdmrd(diagram_of(v), d, field), "A0"))
    entries = _lift_sets(_pending_sets(nprime, field.q, modified), k)
    for s, i, r, v in entries:
        cells.append(_set_cell(v, s, i, r, k, nprime, field, 0))
    name = "A-mod" if modified else ("pending-dots" if k == 3 else "A")
    return CdcCode(n, k, d, field, cells, {"construction": name, "n": n, "k": k, "q": field.q})


def pending_ell(n: int, k: int = 3) -> int:
    """Number of suffix classes used by the pending-dots layout at dimension ``k``."""
    return _num_classes(n - (k * k + k - 6) // 2)


def pending_dots(n: int, q) -> CdcCode:
    """``(n, q^(2(n-3)) + [n-3 choose 2]_q, 2, 3)_q`` code."""
    field = _field(q)
    if n < 8:
        raise BadParams(f"pending dots needs n >= 8, got {n}")
    ell = pending_ell(n, 3)
    if field.q**2 + field.q + 1 < ell:
        raise FieldTooSmall(f"q^2+q+1 = {field.q ** 2 + field.q + 1} < {ell} classes")
    return _recursive_code(n, 3, field, False)


def _check_A(n: int, k: int):
    if k < 3:
        raise BadParams(f"Construction A needs k >= 3, got {k}")
    if 2 * n < k * k + 3 * k - 2:
        raise BadParams(f"Construction A needs n >= {(k * k + 3 * k - 2 + 1) // 2}, got {n}")


def construction_A(n: int, k: int, q) -> CdcCode:
    """``(n, M, k-1, k)_q`` code built recursively on top of pending dots."""
    field = _field(q)
    if k == 3:
        return pending_dots(n, field)
    _check_A(n, k)
    ell = pending_ell(n, k)
    if field.q**2 + field.q + 1 < ell:
        raise FieldTooSmall(f"q^2+q+1 = {field.q ** 2 + field.q + 1} < {ell} classes; use construction_A_mod")
    return _recursive_code(n, k, field, False)


def construction_A_mod(n: int, k: int, q) -> CdcCode:
    """Small-field variant: suffixes are split into blocks of ``q^2+q+2`` coordinates."""
    field = _field(q)
    _check_A(n, k)
    if k == 3 and n < 8:
        raise BadParams(f"pending dots needs n >= 8, got {n}")
    ell = pending_ell(n, k)
    b = field.q**2 + field.q + 2
    if field.q**2 + field.q + 1 >= ell:
        raise BadParams("the field is large enough; use construction_A")
    if (n - (k * k + k - 6) // 2) // b < 1:
        raise BadParams("suffix shorter than one block")
    return _recursive_code(n, k, field, True)


def construction_A_any(n: int, k: int, q) -> CdcCode:
    """Dispatch to :func:`construction_A` or :func:`construction_A_mod`."""
    field = _field(q)
    _check_A(n, k)
    if field.q**2 + field.q + 1 >= pending_ell(n, k):
        return construction_A(n, k, field)
    return construction_A_mod(n, k, field)


# ---------------------------------------------------------------------------
# d = 2


def _d2_cell(v, field: Field, label: str, pending: int | None = None) -> Cell:
    """Optimal rank-distance-2 cell; ``pending`` fixes the leftmost top-row dot."""
    F = diagram_of(v)
    if pending is None:
        return Cell(v, fdmrd(F, 2, field), label)
    if F.first_col(0) != 0 or (F.m > 1 and F.first_col(1) == 0):
        raise BadParams(f"{v} has no pending dot in its first column")
    inner = F.drop_left_columns(1)
    if theorem1_bound(inner, 2) != theorem1_bound(F, 2):
        raise BadParams(f"the first column of {v} is not a pending dot")
    lin = fdmrd(inner, 2, field)
    basis = np.zeros((lin.rho, F.m, F.l), dtype=np.uint8)
    basis[:, :, 1:] = lin.basis
    off = np.zeros((F.m, F.l), dtype=np.uint8)
    off[0, 0] = pending
    return Cell(v, FdrmCode(F, field, basis, off, certified_d=2, method="pending-dot"), label)


def _with_base(cells, n: int, k: int, field: Field, base: CdcCode | None, meta: dict) -> CdcCode:
    if base is not None:
        if base.k != k or base.n != n - k or base.d < 2 or base.field != field:
            raise BadParams(f"base code must be an (n-k={n - k}, M, >=2, {k}) code over GF({field.q})")
        emb = embed_front(base, k)
        cells = cells + [Cell(c.ident, c.code, "base") for c in emb.cells]
        meta = dict(meta, base=dict(base.meta), base_size=base.size)
    return CdcCode(n, k, 2, field, cells, meta)


def construction_B_cells(n: int, k: int, field: Field) -> list[Cell]:
    if k < 4 or n < 2 * k + 2:
        raise BadParams(f"Construction B needs k >= 4 and n >= 2k+2, got n={n}, k={k}")
    cells = [Cell((1,) * k + (0,) * (n - k), mrd_code(k, n - k, 2, field), "A0")]
    for i, u in enumerate(obar_set(k), start=1):
        for v in pair_vectors(n - k):
            cells.append(_d2_cell(u + v, field, f"A{i}"))
    return cells


def construction_B(n: int, k: int, q, reg=None, base: CdcCode | None = None) -> CdcCode:
    """Matching-based multilevel code of distance 2, plus a shorter base code in front.

    The base is the registry's ``(n-k, ., 2, k)`` code unless given.
    """
    field = _field(q)
    cells = construction_B_cells(n, k, field)
    if base is None and reg is not None:
        base = reg.build(field.q, n - k, 2, k)
    return _with_base(cells, n, k, field, base, {"construction": "B", "n": n, "k": k, "q": field.q})


def _class_union(npr: int, upper_range, lower_range):
    # for even npr the printed upper range can name class npr, which K_npr lacks
    c = -(-npr // 2)
    return sorted(i for i in {c + i for i in upper_range} | set(lower_range) if i <= _num_classes(npr))


def c4_sets(n: int, q: int):
    """``(set name, prefixes, class indices, uses pending dot)`` for k = 4."""
    npr = n - 4
    c = -(-npr // 2)
    a3 = _class_union(
        npr,
        range(2, min(-(-q // 2) + 1, npr // 2) + 1),
        range(3, min(q // 2 + 2, c) + 1),
    )
    return [
        ("A1", [(1, 1, 0, 0), (0, 0, 1, 1)], [c + 1], False),
        ("A2", [(1, 0, 0, 1), (0, 1, 1, 0)], [2], False),
        ("A3", [(1, 0, 1, 0), (0, 1, 0, 1)], a3, True),
    ]


def c5_sets(n: int, q: int):
    npr = n - 5
    c = -(-npr // 2)
    a5 = _class_union(
        npr,
        range(3, min(-(-q // 2) + 2, npr // 2) + 1),
        range(4, min(q // 2 + 3, c) + 1),
    )
    return [
        ("A1", [(1, 1, 1, 0, 0), (1, 0, 0, 1, 1)], [c + 1], False),
        ("A2", [(1, 1, 0, 1, 0), (0, 1, 1, 0, 1)], [2], False),
        ("A3", [(0, 1, 1, 1, 0), (1, 0, 1, 0, 1)], [c + 2], False),
        ("A4", [(0, 0, 1, 1, 1), (1, 1, 0, 0, 1)], [3], False),
        ("A5", [(1, 0, 1, 1, 0), (0, 1, 0, 1, 1)], a5, True),
    ]


def _c_cells(n: int, k: int, field: Field, sets) -> list[Cell]:
    npr = n - k
    classes = factorize(npr)
    cells = [Cell((1,) * k + (0,) * npr, mrd_code(k, npr, 2, field), "A0")]
    for name, prefixes, idx, pending in sets:
        for i in idx:
            if not 1 <= i <= len(classes):
                raise BadParams(f"K_{npr} has no matching P_{i}")
        for u in prefixes:
            for color, i in enumerate(idx):
                if pending and color >= field.q:
                    raise BadParams(f"{len(idx)} classes share a pending dot over GF({field.q})")
                for e in classes[i - 1]:
                    v = u + edge_vector(e, npr)
                    cells.append(_d2_cell(v, field, f"{name}:P{i}", color if pending else None))
    return cells


def construction_C4(n: int, q, reg=None, base: CdcCode | None = None) -> CdcCode:
    field = _field(q)
    if n < 10:
        raise BadParams(f"Construction C-4 needs n >= 10, got {n}")
    cells = _c_cells(n, 4, field, c4_sets(n, field.q))
    if base is None and reg is not None:
        base = reg.build(field.q, n - 4, 2, 4)
    return _with_base(cells, n, 4, field, base, {"construction": "C4", "n": n, "k": 4, "q": field.q})


def construction_C5(n: int, q, reg=None, base: CdcCode | None = None) -> CdcCode:
    field = _field(q)
    if n < 12:
        raise BadParams(f"Construction C-5 needs n >= 12, got {n}")
    cells = _c_cells(n, 5, field, c5_sets(n, field.q))
    if base is None and reg is not None:
        base = reg.build(field.q, n - 5, 2, 5)
    return _with_base(cells, n, 5, field, base, {"construction": "C5", "n": n, "k": 5, "q": field.q})


def cells_size(cells) -> int:
    return sum(c.size for c in cells)


__all__ = [
    "pending_dots",
    "construction_A",
    "construction_A_mod",
    "construction_A_any",
    "construction_B",
    "construction_C4",
    "construction_C5",
    "c4_sets",
    "c5_sets",
    "lifted_mrd",
]
