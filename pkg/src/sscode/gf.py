"""Arithmetic in GF(q) for q <= 16 and row reduction of matrices over it.

Field elements are the integers ``0..q-1``.  For an extension field
GF(p^e) the integer ``sum(c_i * p**i)`` stands for the polynomial
``sum(c_i * x**i)`` reduced modulo a fixed irreducible polynomial.  The
polynomial itself is encoded the same way, leading coefficient included,
so x^4+x+1 over GF(2) is ``0b10011 == 19``.

Matrices are 2-D ``numpy.uint8`` arrays; every routine takes the field
explicitly.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BadArgs, DimMismatch, NotPrimePower, Unsupported

MAX_Q = 16

# Fixed moduli for the non-prime fields, encoded base p with the leading term.
DEFAULT_POLYS = {4: 0b111, 8: 0b1011, 9: 1 + 0 * 3 + 1 * 9, 16: 0b10011}


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


def _digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    v = 0
    for c in reversed(ds):
        v = v * p + c
    return v


class Field:
    """The finite field GF(q) with precomputed operation tables."""

    def __init__(self, q: int, poly: int | None = None):
        p, e = prime_power(q)
        if q > MAX_Q:
            raise Unsupported(f"GF({q}) is outside the supported range q <= {MAX_Q}")
        if e == 1:
            poly = 0
        elif poly is None:
            poly = DEFAULT_POLYS[q]
        self.q, self.p, self.e, self.poly = q, p, e, poly
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        if e == 1:
            r = np.arange(q)
            add[:] = (r[:, None] + r[None, :]) % q
            mul[:] = (r[:, None] * r[None, :]) % q
        else:
            mod = _digits(poly, p, e + 1)
            if mod[e] != 1:
                raise BadArgs(f"modulus {poly} is not a monic polynomial of degree {e}")
            for a in range(q):
                da = _digits(a, p, e)
                for b in range(q):
                    db = _digits(b, p, e)
                    add[a, b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
                    prod = [0] * (2 * e - 1)
                    for i, x in enumerate(da):
                        for j, y in enumerate(db):
                            prod[i + j] = (prod[i + j] + x * y) % p
                    for t in range(2 * e - 2, e - 1, -1):
                        c = prod[t]
                        if c:
                            for s in range(e + 1):
                                prod[t - e + s] = (prod[t - e + s] - c * mod[s]) % p
                    mul[a, b] = _undigits(prod[:e], p)
        self.add, self.mul = add, mul
        self.neg = np.array([int(np.where(add[a] == 0)[0][0]) for a in range(q)], dtype=np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            hits = np.where(mul[a] == 1)[0]
            if len(hits) != 1:
                raise BadArgs(f"modulus {poly} does not define a field of order {q}")
            inv[a] = hits[0]
        self.inv = inv
        self.sub = add[:, self.neg]
        # plain lists are faster than numpy for scalar lookups
        self.add_l = add.tolist()
        self.mul_l = mul.tolist()
        self.sub_l = self.sub.tolist()
        self.inv_l = inv.tolist()
        self.neg_l = self.neg.tolist()

    def __repr__(self) -> str:
        return f"Field(q={self.q}, poly={self.poly})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.q, self.poly) == (other.q, other.poly)

    def __hash__(self) -> int:
        return hash((self.q, self.poly))

    # elementwise helpers on arrays
    def madd(self, a, b):
        return self.add[a, b]

    def msub(self, a, b):
        return self.sub[a, b]

    def mscale(self, c: int, a):
        return self.mul[c, a]

    def axpy(self, c: int, x, y):
        """Return ``y + c*x`` elementwise."""
        if c == 0:
            return y
        return self.add[y, self.mul[c, x]]


@lru_cache(maxsize=None)
def field_new(q: int, poly: int | None = None) -> Field:
    """Build (and cache) GF(q)."""
    return Field(q, poly)


def as_matrix(rows, field: Field, cols: int | None = None) -> np.ndarray:
    m = np.array(rows, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(0, cols or 0) if m.size == 0 else m.reshape(1, -1)
    if m.size and (m.min() < 0 or m.max() >= field.q):
        raise BadArgs("matrix entries must lie in 0..q-1")
    return m.astype(np.uint8)


def rref(M: np.ndarray, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form.

    Returns a copy of ``M`` in RREF (zero rows at the bottom) and the list
    of pivot columns.
    """
    R = np.array(M, dtype=np.uint8, copy=True)
    if R.ndim != 2:
        raise BadArgs("rref expects a 2-D matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    binary = field.q == 2
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        s = r + nz[0]
        if s != r:
            R[[r, s]] = R[[s, r]]
        if binary:
            hit = np.nonzero(R[:, c])[0]
            for t in hit:
                if t != r:
                    R[t] ^= R[r]
        else:
            lead = int(R[r, c])
            if lead != 1:
                R[r] = field.mul[field.inv_l[lead], R[r]]
            hit = np.nonzero(R[:, c])[0]
            for t in hit:
                if t != r:
                    R[t] = field.sub[R[t], field.mul[int(R[t, c]), R[r]]]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M: np.ndarray, field: Field) -> int:
    if M.size == 0:
        return 0
    if field.q == 2:
        return rank_bits(rows_to_bits(M))
    return len(rref(M, field)[1])


def stack_rank(A: np.ndarray, B: np.ndarray, field: Field) -> int:
    """Rank of the matrix obtained by stacking ``A`` on top of ``B``."""
    if A.shape[1] != B.shape[1]:
        raise DimMismatch(f"column counts differ: {A.shape[1]} vs {B.shape[1]}")
    return rank(np.vstack([A, B]), field)


def nullspace(M: np.ndarray, field: Field) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : M x = 0}``."""
    rows, cols = M.shape
    if rows == 0:
        return np.eye(cols, dtype=np.uint8)
    R, piv = rref(M, field)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = field.neg_l[int(R[r, f])]
    return basis


def rows_to_bits(M: np.ndarray) -> list[int]:
    """Pack each row of a 0/1 matrix into an int, column j -> bit j."""
    weights = [1 << j for j in range(M.shape[1])]
    return [sum(w for w, x in zip(weights, row) if x) for row in M.tolist()]


def rank_bits(rows) -> int:
    """Rank over GF(2) of integer-packed rows."""
    basis: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n (0 if k is out of range)."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ---------------------------------------------------------------------------
# Polynomials over GF(q) and the extension fields GF(q^N) used for rank-metric
# codes.  Polynomials are coefficient lists, lowest degree first.


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], F: Field) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = F.inv_l[m[-1]]
    mul, sub = F.mul_l, F.sub_l
    for t in range(len(a) - 1, dm - 1, -1):
        c = a[t]
        if c:
            c = mul[c][inv_lead]
            for s in range(dm + 1):
                a[t - dm + s] = sub[a[t - dm + s]][mul[c][m[s]]]
    return _ptrim(a[:dm])


def _pmul(a: list[int], b: list[int], F: Field) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    mul, add = F.mul_l, F.add_l
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][mul[x][y]]
    return _ptrim(out)


def _pgcd(a: list[int], b: list[int], F: Field) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, F)
    return a


def _is_irreducible(f: list[int], F: Field) -> bool:
    n = len(f) - 1
    if n <= 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        # h <- h^q mod f
        r = [1]
        base, e = h, F.q
        while e:
            if e & 1:
                r = _pmod(_pmul(r, base, F), f, F)
            base = _pmod(_pmul(base, base, F), f, F)
            e >>= 1
        h = r
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = F.sub_l[diff[1]][1]
        if len(_pgcd(f, _ptrim(diff), F)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def irreducible_poly(q: int, degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of the given degree over GF(q).

    Candidates are scanned by the integer value of their lower coefficients.
    """
    F = field_new(q)
    if degree == 1:
        return (0, 1)
    for code in range(1, q**degree):
        low = _digits(code, q, degree)
        if low[0] == 0:
            continue
        f = low + [1]
        if _is_irreducible(f, F):
            return tuple(f)
    raise Unsupported(f"no irreducible polynomial of degree {degree} over GF({q})")


class ExtensionField:
    """GF(q^N) as GF(q)[x]/(f); elements are length-N coefficient tuples."""

    def __init__(self, base: Field, degree: int):
        self.base = base
        self.degree = degree
        self.modulus = list(irreducible_poly(base.q, degree))

    def mul(self, a, b) -> list[int]:
        r = _pmod(_pmul(_ptrim(list(a)), _ptrim(list(b)), self.base), self.modulus, self.base)
        return r + [0] * (self.degree - len(r))

    def frobenius(self, a, times: int = 1) -> list[int]:
        """Return a^(q^times)."""
        for _ in range(times):
            r = [1] + [0] * (self.degree - 1)
            base, e = list(a), self.base.q
            while e:
                if e & 1:
                    r = self.mul(r, base)
                base = self.mul(base, base)
                e >>= 1
            a = r
        return list(a)

    def monomial(self, t: int) -> list[int]:
        """The element x^t."""
        r = _pmod([0] * t + [1], self.modulus, self.base)
        return r + [0] * (self.degree - len(r))
