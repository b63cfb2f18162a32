"""Upper bounds, the ratio to the lifted-MRD upper bound, and the pairwise
size comparisons between constructions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import sizes
from .constructions import pending_ell
from .errors import BadParams, RegistryMiss
from .gf import gaussian_binomial


def johnson_bound_exact(n: int, d: int, k: int, q: int) -> Fraction:
    if not (1 <= d <= k <= n):
        raise BadParams(f"need 1 <= d <= k <= n, got n={n}, d={d}, k={k}")
    t = k - d + 1
    return Fraction(gaussian_binomial(n, t, q), gaussian_binomial(k, t, q))


def johnson_bound(n: int, d: int, k: int, q: int) -> int:
    """``floor([n, k-d+1]_q / [k, k-d+1]_q)``."""
    return int(johnson_bound_exact(n, d, k, q))


def _inner_bound(n: int, d: int, k: int, q: int) -> tuple[int, str]:
    """Upper estimate for ``A_q(n, d, k)`` and where it comes from."""
    if k == 0 or k == n or d > min(k, n - k):
        return 1, "exact (trivial)"
    if d == 1:
        return gaussian_binomial(n, k, q), "exact (whole Grassmannian)"
    if 2 * k > n:
        k = n - k
    return johnson_bound(n, d, k, q), "johnson"


@dataclass(frozen=True)
class SteinerBound:
    value: int
    lifted: int
    remainder: int
    estimate: str

    def __int__(self) -> int:
        return self.value


def steiner_bound(n: int, k: int, q: int, reg=None) -> SteinerBound:
    """``q^(2(n-k)) + A_q(n-k, k-2, k-1)`` for codes of distance ``k-1``
    that contain the lifted MRD code.

    The second term is replaced by the tightest upper estimate available;
    ``reg`` is accepted for interface symmetry, since registry entries are
    lower bounds and cannot tighten it.
    """
    if k < 3:
        raise BadParams(f"k >= 3 required, got {k}")
    if n - k < k - 1:
        raise BadParams(f"n - k = {n - k} is smaller than k - 1 = {k - 1}")
    lifted = q ** (2 * (n - k))
    rest, how = _inner_bound(n - k, k - 2, k - 1, q)
    return SteinerBound(lifted + rest, lifted, rest, how)


def size_A_best(n: int, k: int, q: int) -> int:
    """Size of Construction A, or of its small-field variant when the field is too small."""
    if q * q + q + 1 >= pending_ell(n, k):
        return sizes.size_A(n, k, q)
    return sizes.size_A_mod(n, k, q)


def steiner_ratio(n: int, k: int, q: int) -> Fraction:
    """Lower estimate of ``(M - q^(2(n-k))) / A_q(n-k, k-2, k-1)`` for Construction A."""
    M = size_A_best(n, k, q)
    return Fraction(M - q ** (2 * (n - k))) / johnson_bound_exact(n - k, k - 2, k - 1, q)


def boundary_n(k: int) -> int:
    """Smallest ``n`` with ``2n >= k^2 + 3k - 2``."""
    return -(-(k * k + 3 * k - 2) // 2)


# ---------------------------------------------------------------------------
# size comparisons


@dataclass(frozen=True)
class Comparison:
    name: str
    q: int
    n: int
    k: int
    lhs: int
    rhs: int
    strict: bool

    @property
    def passed(self) -> bool:
        return self.lhs > self.rhs if self.strict else self.lhs >= self.rhs

    def line(self) -> str:
        rel = ">" if self.strict else ">="
        return (
            f"check={self.name} param=(q={self.q},n={self.n},k={self.k}) "
            f"lhs={self.lhs} rhs={self.rhs} rel={rel} pass={'yes' if self.passed else 'no'}"
        )


def _base(reg, q: int, n: int, k: int) -> int:
    try:
        return reg.lookup(q, n, 2, k).size
    except RegistryMiss:
        return 0


def comparison_suite(q: int, reg=None, max_n: int = 30) -> list[Comparison]:
    """Evaluate the three size-difference inequalities over every valid ``(n, k)``.

    * A vs multicomponent (``d = k - 1``, ``n >= (k^2+3k-2)/2``);
    * B vs multicomponent (``d = 2``, ``k >= 4``, ``n >= 2k + 2``);
    * C-4 vs B (``q = 2``, even ``n >= 10``).
    """
    from .registry import registry_default

    reg = reg or registry_default()
    out = []
    k = 3
    while boundary_n(k) <= max_n:
        for n in range(max(boundary_n(k), 8 if k == 3 else 0), max_n + 1):
            lhs = size_A_best(n, k, q) - sizes.size_MC(n, k, k - 1, q)
            out.append(Comparison("A-MC", q, n, k, lhs, q ** (2 * n - k * k - k + 1), True))
        k += 1
    for k in range(4, max_n // 2):
        for n in range(2 * k + 2, max_n + 1):
            base = _base(reg, q, n - k, k)
            lhs = sizes.size_B(n, k, q, base) - sizes.size_MC(n, k, 2, q)
            out.append(Comparison("B-MC", q, n, k, lhs, q ** ((k - 1) * (n - k) - 8), True))
    if q == 2:
        for n in range(10, max_n + 1, 2):
            base = _base(reg, q, n - 4, 4)
            lhs = sizes.size_C4(n, q, base) - sizes.size_B(n, 4, q, base)
            out.append(Comparison("C4-B", q, n, 4, lhs, 3 * 2 ** (3 * n - 20), False))
    return out
