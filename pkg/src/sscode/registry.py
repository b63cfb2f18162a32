"""Best known sizes ``A*_q(n, d, k)`` used as recursion bases.

Two kinds of entries:

* external constants, loaded from a fixed table (or ``SSCODE_REGISTRY``);
  some carry a builder that regenerates them;
* builder values, computed on demand as the largest size any construction
  of this package reaches from smaller entries.

``lookup`` prefers an external constant over builder values, so recursions
reproduce published numbers; ``best`` takes the maximum of everything.
Values that are only echoed in reports (table columns of other methods,
logarithms) live in a separate ``reported`` map.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BadParams, FieldTooSmall, RegistryMiss
from .gf import gaussian_binomial

EXTERNAL = "external constant"
TABLE_IMPLIED = "external constant (implied by published table)"


@dataclass(frozen=True)
class Entry:
    q: int
    n: int
    d: int
    k: int
    size: int
    provenance: str
    builder: str | None = None

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.q, self.n, self.d, self.k)


_DEFAULT = [
    Entry(2, 6, 2, 4, 21, EXTERNAL, "dual-multicomponent"),
    Entry(2, 8, 2, 4, 2**12 + 701, EXTERNAL),
    Entry(2, 12, 2, 6, 1196288829, EXTERNAL),
    # side codes of the projective-space example
    Entry(2, 11, 2, 3, 76331, EXTERNAL, "pending-dots"),
    Entry(2, 11, 2, 8, 76331, EXTERNAL, "dual-pending-dots"),
    Entry(2, 11, 2, 2, 681, EXTERNAL, "multicomponent"),
    Entry(2, 11, 2, 9, 681, EXTERNAL, "dual-multicomponent"),
    # bases that the published B/C/D columns need; each is recovered by
    # inverting a closed form at a table row
    Entry(2, 7, 2, 4, 304, TABLE_IMPLIED),
    Entry(2, 9, 2, 4, 36945, TABLE_IMPLIED),
    Entry(2, 8, 2, 5, 1164, TABLE_IMPLIED),
    Entry(2, 10, 2, 5, 1167327, TABLE_IMPLIED),
    Entry(2, 11, 2, 5, 18699043, TABLE_IMPLIED),
    Entry(2, 8, 3, 4, 260, TABLE_IMPLIED),
    Entry(2, 10, 4, 5, 1028, TABLE_IMPLIED),
    Entry(3, 10, 4, 5, 59058, TABLE_IMPLIED),
]

# Values echoed verbatim in reports: (namespace, key) -> value.
REPORTED: dict[tuple[str, tuple], object] = {
    # multilevel (lexicode) columns, keyed (q, n, d, k)
    ("multilevel", (2, 13, 3, 4)): 2**18 + 4357,
    ("multilevel", (2, 14, 3, 4)): 2**20 + 17204,
    ("multilevel", (2, 15, 3, 4)): 2**22 + 68378,
    ("multilevel", (2, 19, 4, 5)): 2**28 + 1052778,
    ("multilevel", (2, 20, 4, 5)): 2**30 + 4211044,
    ("multilevel", (3, 19, 4, 5)): 3**28 + 3487316403,
    ("multilevel", (3, 20, 4, 5)): 3**30 + 31385846853,
    ("multilevel", (2, 10, 2, 4)): 2**18 + 35685,
    ("multilevel", (2, 11, 2, 4)): 2**21 + 285889,
    ("multilevel", (2, 12, 2, 4)): 2**24 + 2290845,
    ("multilevel", (2, 13, 2, 4)): 2**27 + 18328921,
    ("multilevel", (2, 12, 2, 5)): 2**28 + 30877839,
    ("multilevel", (2, 13, 2, 5)): 2**32 + 494999563,
    ("multilevel", (2, 15, 2, 5)): 2**40 + 126773908793,
    ("multilevel", (2, 16, 2, 5)): 2**44 + 2028469279328,
    # lower bound on the punctured (12, 1196288829, 2, 6)_2 code
    ("punctured", (2, 12, 2, 6)): 36808900,
    # projective-space logarithms, keyed (n, d_S) and (n, d_I)
    ("log-S", (11, 3)): "25.1336",
    ("log-S", (11, 5)): "18.9806",
    ("log-S", (12, 3)): "29.728",
    ("log-S", (12, 5)): "20.6101",
    ("log-S", (13, 3)): "36.1454",
    ("log-S", (13, 5)): "28.9917",
    ("log-S", (14, 3)): "41.7352",
    ("log-S", (14, 5)): "33.5804",
    ("log-I", (11, 2)): "25.1395",
    ("log-I", (11, 3)): "18.9806",
    ("log-I", (12, 2)): "29.7586",
    ("log-I", (12, 3)): "20.6107",
    ("log-I", (13, 2)): "36.1511",
    ("log-I", (13, 3)): "28.9924",
    ("log-I", (14, 2)): "41.7651",
    ("log-I", (14, 3)): "33.5806",
    ("log-other", (11, 2)): "24.6321",
    ("log-other", (11, 3)): "18.0298",
    ("log-other", (12, 2)): "30.3372",
    ("log-other", (12, 3)): "24.0054",
    ("log-other", (13, 2)): "35.6303",
    ("log-other", (13, 3)): "28.0265",
    ("log-other", (14, 2)): "42.33625",
    ("log-other", (14, 3)): "35.00464",
}


def parse_registry_file(path: str) -> list[Entry]:
    """Lines ``q n d k size provenance...``; ``#`` starts a comment."""
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(None, 5)
            if len(parts) < 5:
                raise BadParams(f"{path}:{lineno}: expected 'q n d k size provenance'")
            q, n, d, k, size = (int(x) for x in parts[:5])
            prov = parts[5] if len(parts) > 5 else EXTERNAL
            out.append(Entry(q, n, d, k, size, prov))
    return out


class Registry:
    def __init__(self, entries=(), use_builders: bool = True):
        self._explicit: dict[tuple, Entry] = {}
        self._memo: dict[tuple, Entry | None] = {}
        self.use_builders = use_builders
        for e in entries:
            self.add(e)

    def add(self, entry: Entry):
        self._explicit[entry.key] = entry
        self._memo.clear()

    def buildable(self) -> "Registry":
        """Copy without the explicit entries that have no builder."""
        keep = [e for e in self._explicit.values() if e.builder not in (None, "dual-external")]
        return Registry(keep, self.use_builders)

    def entries(self) -> list[Entry]:
        return [self._explicit[k] for k in sorted(self._explicit)]

    def explicit(self, q, n, d, k) -> Entry | None:
        return self._explicit.get((q, n, d, k))

    def lookup(self, q: int, n: int, d: int, k: int) -> Entry:
        """External constant if present, otherwise the best builder value."""
        e = self._explicit.get((q, n, d, k))
        if e is not None:
            return e
        b = self._best_builder(q, n, d, k) if self.use_builders else None
        if b is None:
            raise RegistryMiss(f"no entry for A*_{q}({n},{d},{k})")
        return b

    def best(self, q: int, n: int, d: int, k: int) -> Entry:
        cands = [e for e in (self._explicit.get((q, n, d, k)), self._best_builder(q, n, d, k)) if e]
        if not cands:
            raise RegistryMiss(f"no entry for A*_{q}({n},{d},{k})")
        return max(cands, key=lambda e: e.size)

    def size(self, q, n, d, k) -> int:
        return self.lookup(q, n, d, k).size

    def candidates(self, q: int, n: int, d: int, k: int) -> list[Entry]:
        """Every builder value available for the parameters (largest first)."""
        return sorted(self._builder_values(q, n, d, k, allow_dual=True), key=lambda e: -e.size)

    # -- builders --------------------------------------------------------

    def _best_builder(self, q, n, d, k) -> Entry | None:
        key = (q, n, d, k)
        if key not in self._memo:
            self._memo[key] = None  # guards against cycles
            vals = self._builder_values(q, n, d, k, allow_dual=True)
            self._memo[key] = max(vals, key=lambda e: e.size) if vals else None
        return self._memo[key]

    def _builder_values(self, q, n, d, k, allow_dual: bool) -> list[Entry]:
        from . import sizes
        from .constructions import pending_ell

        out: list[Entry] = []

        def add(size, name):
            out.append(Entry(q, n, d, k, size, f"builder:{name}", name))

        if n < 1 or not 0 <= k <= n or d < 1:
            return out
        if k in (0, n) or d > min(k, n - k):
            add(1, "trivial")
            return out
        if d == 1:
            add(gaussian_binomial(n, k, q), "grassmannian")
        add(sizes.size_lifted_mrd(n, k, d, q), "lifted-mrd")
        add(sizes.size_MC(n, k, d, q), "multicomponent")
        if d == k - 1 and k >= 3 and 2 * n >= k * k + 3 * k - 2 and (k > 3 or n >= 8):
            if q * q + q + 1 >= pending_ell(n, k):
                add(sizes.size_A(n, k, q), "pending-dots" if k == 3 else "A")
            elif (n - (k * k + k - 6) // 2) // (q * q + q + 2) >= 1:
                add(sizes.size_A_mod(n, k, q), "A-mod")
        if d == 2 and k >= 4 and n >= 2 * k + 2:
            base = self._base(q, n - k, 2, k)
            if base is not None:
                add(sizes.size_B(n, k, q, base), "B")
            if k == 4 and n >= 10 and base is not None:
                add(sizes.size_C4(n, q, base), "C4")
            if k == 5 and n >= 12 and base is not None:
                add(sizes.size_C5(n, q, base), "C5")
        for delta in range(k, n - k + 1):
            base = self._base(q, n - delta, d, k)
            if base is not None and base > 1:
                add(sizes.size_D(base, k, d, q, delta), f"D{delta}")
        if allow_dual and n - k != k:
            for e in self._builder_values(q, n, d, n - k, allow_dual=False):
                out.append(Entry(q, n, d, k, e.size, f"builder:dual-{e.builder}", f"dual-{e.builder}"))
            ex = self._explicit.get((q, n, d, n - k))
            if ex is not None:
                out.append(Entry(q, n, d, k, ex.size, f"dual of {ex.provenance}", "dual-external"))
        return out

    def _base(self, q, n, d, k) -> int | None:
        try:
            return self.lookup(q, n, d, k).size
        except RegistryMiss:
            return None

    # -- building --------------------------------------------------------

    def build(self, q: int, n: int, d: int, k: int):
        """Construct the code behind :meth:`lookup` (external constants need a builder)."""
        from .cdc import dual_code, lifted_mrd, multicomponent

        e = self.lookup(q, n, d, k)
        name = e.builder
        if name is None or name == "dual-external":
            raise RegistryMiss(f"A*_{q}({n},{d},{k}) = {e.size} is an external constant with no builder")
        code = self._build_named(name, q, n, d, k)
        if code.size != e.size:
            raise RegistryMiss(f"builder {name} gave {code.size}, registry says {e.size}")
        code.meta.setdefault("provenance", e.provenance)
        return code

    def _build_named(self, name: str, q, n, d, k):
        from . import cdc, constructions

        if name.startswith("dual-"):
            return cdc.dual_code(self._build_named(name[5:], q, n, d, n - k))
        if name == "trivial":
            if k in (0, n):
                raise RegistryMiss("the zero space and the whole space are not stored as cells")
            return cdc.multilevel([(1,) * k + (0,) * (n - k)], d, q)
        if name == "grassmannian":
            from itertools import combinations

            vecs = []
            for ones in combinations(range(n), k):
                v = [0] * n
                for i in ones:
                    v[i] = 1
                vecs.append(tuple(v))
            return cdc.multilevel(vecs, 1, q)
        if name == "lifted-mrd":
            if k > n - k:
                return cdc.dual_code(cdc.lifted_mrd(n, n - k, d, q))
            return cdc.lifted_mrd(n, k, d, q)
        if name == "multicomponent":
            return cdc.multicomponent(n, k, d, q)
        if name == "pending-dots":
            return constructions.pending_dots(n, q)
        if name == "A":
            return constructions.construction_A(n, k, q)
        if name == "A-mod":
            return constructions.construction_A_mod(n, k, q)
        if name == "B":
            return constructions.construction_B(n, k, q, self)
        if name == "C4":
            return constructions.construction_C4(n, q, self)
        if name == "C5":
            return constructions.construction_C5(n, q, self)
        if name.startswith("D"):
            delta = int(name[1:])
            return cdc.construction_D(self.build(q, n - delta, d, k), delta)
        raise RegistryMiss(f"unknown builder {name}")

    # -- reported values ---------------------------------------------------

    @staticmethod
    def reported(namespace: str, key: tuple):
        try:
            return REPORTED[(namespace, key)]
        except KeyError:
            raise RegistryMiss(f"no reported value {namespace}{key}") from None


def registry_default(q: int | None = None) -> Registry:
    """Registry with the stock external constants (all fields, or one ``q``)."""
    entries = [e for e in _DEFAULT if q is None or e.q == q]
    path = os.environ.get("SSCODE_REGISTRY")
    if path:
        entries += [e for e in parse_registry_file(path) if q is None or e.q == q]
    return Registry(entries)


__all__ = ["Entry", "Registry", "registry_default", "REPORTED", "EXTERNAL", "TABLE_IMPLIED", "FieldTooSmall"]
