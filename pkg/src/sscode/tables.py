"""Regenerate the size-comparison tables.

Construction columns are evaluated from closed forms and registry bases;
multilevel, external and logarithm columns are echoed from registry
constants and footnoted as such.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import sizes
from .errors import BadArgs, BadParams, RegistryMiss
from .projective import projective_construct

TABLE1_ROWS = [(2, 13, 3, 4), (2, 14, 3, 4), (2, 15, 3, 4), (2, 19, 4, 5), (2, 20, 4, 5), (3, 19, 4, 5), (3, 20, 4, 5)]
TABLE2_ROWS = [
    (2, 10, 2, 4), (2, 11, 2, 4), (2, 12, 2, 4), (2, 13, 2, 4),
    (2, 12, 2, 5), (2, 13, 2, 5), (2, 15, 2, 5), (2, 16, 2, 5),
]
TABLE3_ROWS = [(n, d) for n in (11, 12, 13, 14) for d in (2, 3)]

FOOTNOTES = {
    "m": "echoed from the registry (lexicode multilevel, external constant)",
    "x": "external constant echoed from the registry",
    "c": "computed from registry constants",
}


@dataclass
class Row:
    params: tuple
    values: dict  # column -> int | str | None
    notes: dict  # column -> footnote marker


def _lifted_exponent(n: int, d: int, k: int) -> int:
    return (n - k) * (k - d + 1)


def _d_column(reg, q, n, d, k):
    delta = n - 2 * k
    if delta < k:
        return None
    return sizes.size_D(reg.lookup(q, 2 * k, d, k).size, k, d, q, delta)


def _c_column(reg, q, n, k):
    base = reg.lookup(q, n - k, 2, k).size
    if k == 4:
        return sizes.size_C4(n, q, base)
    if k == 5:
        return sizes.size_C5(n, q, base)
    return None


def table_rows(which: int, reg=None) -> list[Row]:
    from .bounds import size_A_best
    from .registry import registry_default

    reg = reg or registry_default()
    rows = []
    if which == 1:
        for q, n, d, k in TABLE1_ROWS:
            vals = {
                "A": size_A_best(n, k, q),
                "D": _d_column(reg, q, n, d, k),
                "multilevel": reg.reported("multilevel", (q, n, d, k)),
                "multicomponent": sizes.size_MC(n, k, d, q),
            }
            rows.append(Row((q, n, d, k), vals, {"multilevel": "m"}))
    elif which == 2:
        for q, n, d, k in TABLE2_ROWS:
            base = reg.lookup(q, n - k, 2, k).size
            vals = {
                "B": sizes.size_B(n, k, q, base),
                "C": _c_column(reg, q, n, k),
                "D": _d_column(reg, q, n, d, k),
                "multilevel": reg.reported("multilevel", (q, n, d, k)),
                "multicomponent": sizes.size_MC(n, k, d, q),
            }
            rows.append(Row((q, n, d, k), vals, {"multilevel": "m"}))
    elif which == 3:
        for n, d in TABLE3_ROWS:
            vals, notes = {}, {}
            seed_known = reg.explicit(2, n + 1, d, (n + 1) // 2) is not None
            for metric, ns in (("S", "log-S"), ("I", "log-I")):
                dist = 2 * d - 1 if metric == "S" else d
                if seed_known:
                    try:
                        res = projective_construct(n, d, 2, metric, reg)
                        vals[metric] = f"{res.log2():.4f}"
                        notes[metric] = "c"
                        continue
                    except (RegistryMiss, BadParams):
                        pass
                vals[metric] = reg.reported(ns, (n, dist))
                notes[metric] = "x"
            vals["other"] = reg.reported("log-other", (n, d))
            notes["other"] = "x"
            rows.append(Row((2, n, d), vals, notes))
    else:
        raise BadArgs(f"no table {which}")
    return rows


def _fmt(value, q: int, exponent: int) -> str:
    if value is None:
        return "--"
    return sizes.format_size(int(value), q, exponent)


def table_report(which: int, reg=None) -> str:
    """Plain-text table; the largest entry of each row is wrapped in ``**``."""
    rows = table_rows(which, reg)
    lines = []
    used = set()
    if which in (1, 2):
        cols = list(rows[0].values)
        lines.append(" | ".join(["(n,d,k)_q"] + cols))
        for r in rows:
            q, n, d, k = r.params
            e = _lifted_exponent(n, d, k)
            best = max(v for v in r.values.values() if v is not None)
            cells = [f"({n},{d},{k})_{q}"]
            for c in cols:
                v = r.values[c]
                s = _fmt(v, q, e)
                if v is not None and v == best:
                    s = f"**{s}**"
                if c in r.notes:
                    s += f" [{r.notes[c]}]"
                    used.add(r.notes[c])
                cells.append(s)
            lines.append(" | ".join(cells))
    else:
        lines.append(" | ".join(["n", "d_S", "log S", "d_I", "log I", "log other"]))
        for r in rows:
            _, n, d = r.params
            v = r.values
            best = max(float(v["I"]), float(v["other"]))
            cells = [str(n), str(2 * d - 1), f"{v['S']} [{r.notes['S']}]", str(d)]
            for c in ("I", "other"):
                s = str(v[c])
                if float(v[c]) == best:
                    s = f"**{s}**"
                cells.append(f"{s} [{r.notes[c]}]")
            used.update(r.notes.values())
            lines.append(" | ".join(cells))
    for mark in sorted(used):
        lines.append(f"[{mark}] {FOOTNOTES[mark]}")
    return "\n".join(lines) + "\n"
