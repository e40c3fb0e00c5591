"""Dense linear algebra over prime fields, on lists of integer rows."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

Matrix = list[list[int]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def primes(count: int, start: int = 2) -> list[int]:
    out = []
    q = start
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q += 1
    return out


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form mod ``p`` (nonzero rows only) and pivot columns."""
    m = [[v % p for v in row] for row in rows]
    pivots: list[int] = []
    if not m:
        return [], pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def matmul(a: Matrix, b: Matrix, p: int, inner: int | None = None) -> Matrix:
    """``a @ b`` mod p. ``inner`` gives the shared dimension when a matrix is empty."""
    rows_a = len(a)
    cols_b = len(b[0]) if b else 0
    k = len(b) if inner is None else inner
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(cols_b)]
        for i in range(rows_a)
    ]


def columns(mat: Matrix, nrows: int, ncols: int) -> list[list[int]]:
    return [[mat[i][j] for i in range(nrows)] for j in range(ncols)]


def echelon_patterns(k: int, dim: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    """Pivot sets of k x dim reduced echelon matrices with their free positions."""
    for piv in combinations(range(dim), k):
        pivset = set(piv)
        free = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, dim) if c not in pivset]
        yield piv, free


def echelon_matrices(k: int, dim: int, p: int) -> Iterator[Matrix]:
    """Every k x dim reduced echelon matrix of rank k over F_p, each exactly once.

    These are in bijection with the k-dimensional subspaces of F_p^dim.
    """
    for piv, free in echelon_patterns(k, dim):
        for values in product(range(p), repeat=len(free)):
            m = [[0] * dim for _ in range(k)]
            for r, c in enumerate(piv):
                m[r][c] = 1
            for (r, c), v in zip(free, values):
                m[r][c] = v
            yield m


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
