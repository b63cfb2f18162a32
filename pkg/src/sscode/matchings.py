"""Perfect and near-perfect matchings of the complete graph (circle method),
and the weight-2 vectors they stand for.

Nodes are numbered ``1..n``; node ``j`` becomes coordinate ``j-1`` of a
length-``n`` binary vector, so an edge ``{a, b}`` is the weight-2 vector with
ones at ``a-1`` and ``b-1``.
"""

from __future__ import annotations

from .errors import BadIndex, TooSmall
from .ferrers import diagram_of


def factorize(n: int) -> list[list[tuple[int, int]]]:
    """Split the edges of K_n into matchings by the circle method.

    Even ``n``: ``n-1`` perfect matchings.  Nodes ``1..n-1`` sit on a circle
    and ``n`` in the middle; matching ``i`` pairs the centre with ``i`` and
    ``i-j`` with ``i+j`` (mod ``n-1``).
    Odd ``n``: ``n`` near-perfect matchings; matching ``i`` skips node ``i``
    and pairs ``i-j`` with ``i+j`` (mod ``n``).
    Each edge is returned as a sorted pair.
    """
    if n < 2:
        raise TooSmall("K_n needs at least two nodes")
    classes = []
    if n % 2 == 0:
        r = n - 1
        for i in range(1, n):
            edges = [(i, n)]
            for j in range(1, (n - 2) // 2 + 1):
                a = (i - j - 1) % r + 1
                b = (i + j - 1) % r + 1
                edges.append((min(a, b), max(a, b)))
            classes.append(sorted(edges))
    else:
        for i in range(1, n + 1):
            edges = []
            for j in range(1, (n - 1) // 2 + 1):
                a = (i - j - 1) % n + 1
                b = (i + j - 1) % n + 1
                edges.append((min(a, b), max(a, b)))
            classes.append(sorted(edges))
    return classes


def num_classes(n: int) -> int:
    return n - 1 if n % 2 == 0 else n


def edge_vector(edge: tuple[int, int], n: int) -> tuple[int, ...]:
    v = [0] * n
    v[edge[0] - 1] = 1
    v[edge[1] - 1] = 1
    return tuple(v)


def class_vectors(n: int, i: int) -> list[tuple[int, ...]]:
    """Weight-2 vectors of matching ``P_i`` (1-based) of K_n."""
    classes = factorize(n)
    if not 1 <= i <= len(classes):
        raise BadIndex(f"K_{n} has {len(classes)} matchings, asked for {i}")
    return [edge_vector(e, n) for e in classes[i - 1]]


def class_fdrm_size(i: int, n: int, q: int) -> int:
    """Number of words of the rank-distance-2 lifted codes over ``P_i`` of K_n.

    Sum over the edges of ``q`` to the size of the edge's Ferrers diagram;
    evaluated in closed form.
    """
    if not 1 <= i <= num_classes(n):
        raise BadIndex(f"K_{n} has {num_classes(n)} matchings, asked for {i}")
    if n % 2 == 0:
        h = n // 2
        if i <= h:
            return (h - i) * q ** (n - 2 * i) + (i - 1) * q ** (2 * (n - i) - 1) + q ** (n - i - 1)
        return (i - h) * q ** (3 * n - 2 * (i + 1)) + (n - i - 1) * q ** (2 * (n - i) - 1) + q ** (n - i - 1)
    h = (n + 1) // 2
    if i <= h:
        return (h - i) * q ** (n - 2 * i - 1) + (i - 1) * q ** (2 * (n - i) - 1)
    return (i - h) * q ** (3 * n - 2 * i - 1) + (n - i) * q ** (2 * (n - i) - 1)


def class_fdrm_size_brute(i: int, n: int, q: int) -> int:
    """Same count as :func:`class_fdrm_size`, summed edge by edge."""
    return sum(q ** diagram_of(v).size for v in class_vectors(n, i))


def pair_vectors(length: int) -> list[tuple[int, ...]]:
    """Weight-2 vectors with ones at ``2i-1, 2i`` (1-based), ``i = 1..floor(length/2)``."""
    out = []
    for i in range(1, length // 2 + 1):
        v = [0] * length
        v[2 * i - 2] = v[2 * i - 1] = 1
        out.append(tuple(v))
    return out


def obar_set(k: int) -> list[tuple[int, ...]]:
    """Weight ``k-2`` vectors of length ``k``: ``u_i`` is zero exactly where
    ``ceil((k-j+1)/2) == i`` (``j`` 1-based), ``i = 1..floor(k/2)``."""
    out = []
    for i in range(1, k // 2 + 1):
        out.append(tuple(0 if -(-(k - j + 1) // 2) == i else 1 for j in range(1, k + 1)))
    return out
