"""Plain-text code files.

``.ssc`` lists every codeword; ``.sscc`` stores cells (identifying vector,
offset tableau, basis tableaux).  Both share a three-line header plus an
optional ``meta=`` line holding sorted JSON, so emitting the same code
twice gives identical bytes.
"""

from __future__ import annotations

import json

import numpy as np

from .cdc import Cell, CdcCode
from .errors import SubspaceCodeError
from .ferrers import FdrmCode, diagram_of
from .gf import field_new
from .projective import MixedCode
from .subspace import from_generator

HEX = "0123456789abcdef"


class ParseError(SubspaceCodeError):
    pass


def _meta_line(meta: dict) -> str:
    return "meta=" + json.dumps(meta, sort_keys=True, separators=(",", ":"), default=_jsonable)


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    return str(x)


def _header(magic: str, field, n: int, metric: str, d: int, count: int, meta: dict) -> list[str]:
    lines = [f"{magic} 1", f"q={field.q} poly={field.poly}", f"n={n} metric={metric} d={d} count={count}"]
    if meta:
        lines.append(_meta_line(meta))
    return lines


def _row(values) -> str:
    return "".join(HEX[int(x)] for x in values)


def emit_ssc(code) -> str:
    """Expanded form; codewords sorted by identifying vector then tableau values."""
    if isinstance(code, CdcCode):
        words, metric, meta = list(code.expand()), "I", code.meta
    else:
        words, metric, meta = list(code.codewords), code.metric, code.meta
    words.sort(key=lambda X: X.key())
    lines = _header("SSC", code.field, code.n, metric, code.d, len(words), meta)
    for X in words:
        lines.append(f"K {X.k}")
        lines.extend(_row(r) for r in X.basis)
    return "\n".join(lines) + "\n"


def emit_sscc(code: CdcCode) -> str:
    lines = _header("SSC", code.field, code.n, "I", code.d, code.size, code.meta)
    for c in sorted(code.cells, key=lambda c: c.ident):
        mask = c.code.diagram.mask()
        lines.append("V " + "".join(str(x) for x in c.ident))
        lines.append("O " + _row(c.code.offset[mask]))
        lines.append(f"B {c.rho}")
        lines.extend(_row(b[mask]) for b in c.code.basis)
    return "\n".join(lines) + "\n"


def emit(code, cells: bool | None = None) -> str:
    if cells is None:
        cells = isinstance(code, CdcCode)
    return emit_sscc(code) if cells else emit_ssc(code)


def _kv(line: str, lineno: int) -> dict:
    out = {}
    for tok in line.split():
        if "=" not in tok:
            raise ParseError(f"line {lineno}: expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _symbols(s: str, q: int, lineno: int) -> list[int]:
    try:
        vals = [HEX.index(ch) for ch in s.lower()]
    except ValueError:
        raise ParseError(f"line {lineno}: bad symbol in {s!r}") from None
    if any(v >= q for v in vals):
        raise ParseError(f"line {lineno}: symbol outside GF({q})")
    return vals


def parse(text: str):
    """Inverse of :func:`emit`; returns a :class:`CdcCode` or a :class:`MixedCode`."""
    lines = text.splitlines()
    if len(lines) < 3 or lines[0].strip() != "SSC 1":
        raise ParseError("missing 'SSC 1' header")
    try:
        h1, h2 = _kv(lines[1], 2), _kv(lines[2], 3)
        field = field_new(int(h1["q"]), int(h1["poly"]) or None)
        n, d, count, metric = int(h2["n"]), int(h2["d"]), int(h2["count"]), h2["metric"]
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad header: {exc}") from None
    pos = 3
    meta = {}
    if pos < len(lines) and lines[pos].startswith("meta="):
        try:
            meta = json.loads(lines[pos][5:])
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {pos + 1}: bad meta: {exc}") from None
        pos += 1
    body = lines[pos:]
    if body and body[0].startswith("V "):
        return _parse_cells(body, pos, field, n, d, count, meta)
    return _parse_words(body, pos, field, n, d, count, metric, meta)


def _parse_words(body, pos, field, n, d, count, metric, meta) -> MixedCode:
    words = []
    i = 0
    while i < len(body):
        lineno = pos + i + 1
        parts = body[i].split()
        if len(parts) != 2 or parts[0] != "K":
            raise ParseError(f"line {lineno}: expected 'K <k>'")
        k = int(parts[1])
        rows = [_symbols(body[i + 1 + r].strip(), field.q, lineno + 1 + r) for r in range(k)] if k else []
        if any(len(r) != n for r in rows) or len(rows) != k:
            raise ParseError(f"line {lineno}: codeword rows must have {n} symbols")
        X = from_generator(np.array(rows, dtype=np.uint8).reshape(k, n), field, n)
        if X.k != k or not np.array_equal(X.basis, np.array(rows, dtype=np.uint8).reshape(k, n)):
            raise ParseError(f"line {lineno}: codeword is not in reduced row echelon form")
        words.append(X)
        i += 1 + k
    if len(words) != count:
        raise ParseError(f"header count {count} but {len(words)} codewords")
    try:
        return MixedCode(n, field, metric, d, words, True, meta)
    except SubspaceCodeError as exc:
        raise ParseError(str(exc)) from None


def _parse_cells(body, pos, field, n, d, count, meta) -> CdcCode:
    cells = []
    i = 0
    while i < len(body):
        lineno = pos + i + 1
        try:
            if not body[i].startswith("V ") or not body[i + 1].startswith("O ") or not body[i + 2].startswith("B "):
                raise ParseError(f"line {lineno}: expected V/O/B lines")
            ident = tuple(int(ch) for ch in body[i][2:].strip())
            F = diagram_of(ident)
            mask = F.mask()
            off = np.zeros((F.m, F.l), dtype=np.uint8)
            off[mask] = _symbols(body[i + 1][2:].strip(), field.q, lineno + 1)
            rho = int(body[i + 2][2:])
            basis = np.zeros((rho, F.m, F.l), dtype=np.uint8)
            for t in range(rho):
                basis[t][mask] = _symbols(body[i + 3 + t].strip(), field.q, lineno + 3 + t)
        except (IndexError, ValueError) as exc:
            raise ParseError(f"line {lineno}: malformed cell ({exc})") from None
        except SubspaceCodeError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        cells.append(Cell(ident, FdrmCode(F, field, basis, off)))
        i += 3 + rho
    if not cells:
        raise ParseError("no cells")
    try:
        code = CdcCode(n, cells[0].k, d, field, cells, meta)
    except SubspaceCodeError as exc:
        raise ParseError(str(exc)) from None
    if code.size != count:
        raise ParseError(f"header count {count} but cells hold {code.size} codewords")
    return code


def write(path: str, code, cells: bool | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(emit(code, cells))


def read(path: str):
    with open(path) as fh:
        return parse(fh.read())
