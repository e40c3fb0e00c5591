"""Point counts of resolution fibres over prime fields.

The fibre of ``p_lam`` over ``x_mu`` is the set of graded flags
``0 = W0 < W1 < ... < Wl = V`` with ``dim Wk = d(lam^{<=k})`` and
``x_mu(Wk) <= W(k-1)``.  Since ``W1`` must lie in ``ker x_mu`` and the rest
of the flag is a flag of the same kind for the induced map on ``V/W1``, the
count is a sum over graded subspaces ``U <= ker x_mu`` of the count for the
quotient representation.  The quotient only matters up to isomorphism, so
counts are memoized on its multisegment type.

Two subspace enumerations are available:

``"exhaustive"``
    every reduced echelon matrix, i.e. every subspace, one at a time;
``"cells"``
    one representative per echelon pivot pattern, weighted by ``p**free``.
    The kernel basis is ordered so that each ``ker x ∩ im x^k`` is a suffix
    coordinate span; the quotient type only depends on the dimensions of
    ``U ∩ im x^k``, which are constant on a pivot pattern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .core import (
    Multisegment,
    Segment,
    column_steps,
    dim_vector,
    flag_dim,
)
from .errors import CapExceeded, ConsistencyError, GradingMismatch, HeldOutMismatch
from .modp import echelon_matrices, echelon_patterns, is_prime, primes, rank
from .poly import IntPoly, interpolate

DEFAULT_BUDGET = 2_000_000
METHODS = ("cells", "exhaustive")


@dataclass(frozen=True)
class GradedRep:
    """A nilpotent representation ``x_i : V_i -> V_{i-1}`` over F_p.

    Segment ``[i;l)`` contributes basis vectors ``b_1..b_l`` with ``b_j`` in
    grade ``i+j-1`` and ``x(b_j) = b_{j-1}``, ``x(b_1) = 0``.
    """

    ms: Multisegment
    p: int
    dims: tuple[int, ...]
    basis: tuple[tuple[tuple[int, int], ...], ...]  # grade -> ((segment, j), ...)
    maps: tuple[tuple[tuple[int, ...], ...], ...]  # grade g -> matrix V_g -> V_{g-1}
    _images: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.ms.n

    def apply(self, g: int, vec: Sequence[int]) -> list[int]:
        """Image of ``vec`` in ``V_g`` under ``x_g`` (lands in ``V_{g-1}``)."""
        mat = self.maps[g]
        return [sum(a * b for a, b in zip(row, vec)) % self.p for row in mat]

    def unit(self, g: int, idx: int) -> list[int]:
        v = [0] * self.dims[g]
        v[idx] = 1
        return v

    def kernel_basis(self, g: int) -> list[list[int]]:
        """Basis of ``ker x`` in grade ``g``, ordered by segment length ascending."""
        bottoms = [
            (self.ms.segments[s].length, s, idx)
            for idx, (s, j) in enumerate(self.basis[g])
            if j == 1
        ]
        bottoms.sort()
        return [self.unit(g, idx) for _, _, idx in bottoms]

    def power_image(self, k: int, j: int) -> tuple[tuple[int, ...], ...]:
        """Spanning vectors of ``x^k(V_j)``, a subspace of ``V_{j-k}``."""
        cached = self._images.get((k, j))
        if cached is not None:
            return cached
        n = self.n
        out = []
        for idx in range(self.dims[j]):
            v = self.unit(j, idx)
            g = j
            for _ in range(k):
                v = self.apply(g, v)
                g = (g - 1) % n
            if any(v):
                out.append(tuple(v))
        self._images[(k, j)] = tuple(out)
        return self._images[(k, j)]

    def kernel_power_dims(self, k: int) -> tuple[int, ...]:
        """Graded dimension of ``ker x^k``."""
        return tuple(
            self.dims[j] - rank(self.power_image(k, j), self.p) for j in range(self.n)
        )


@lru_cache(maxsize=4096)
def build_representative(ms: Multisegment, p: int) -> GradedRep:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = ms.n
    basis: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for s, seg in enumerate(ms.segments):
        for j in range(1, seg.length + 1):
            basis[(seg.start + j - 1) % n].append((s, j))
    dims = tuple(len(b) for b in basis)
    index = [{key: i for i, key in enumerate(b)} for b in basis]
    maps = []
    for g in range(n):
        target = (g - 1) % n
        mat = [[0] * dims[g] for _ in range(dims[target])]
        for col, (s, j) in enumerate(basis[g]):
            if j > 1:
                mat[index[target][(s, j - 1)]][col] = 1
        maps.append(tuple(tuple(row) for row in mat))
    return GradedRep(ms, p, dims, tuple(tuple(b) for b in basis), tuple(maps))


def type_from_kernel_dims(n: int, kernel_dims: Sequence[Sequence[int]]) -> Multisegment:
    """Recover a multisegment from the graded dimensions of ``ker x^k``, k >= 0.

    Column ``k`` of the labelled diagram has one box labelled ``i+k-1`` for
    each row starting at ``i`` of length at least ``k``.
    """
    cols = [
        [kernel_dims[k][g] - kernel_dims[k - 1][g] for g in range(n)]
        for k in range(1, len(kernel_dims))
    ]
    at_least = [[cols[k - 1][(i + k - 1) % n] for i in range(n)] for k in range(1, len(cols) + 1)]
    at_least.append([0] * n)
    segs = []
    for k in range(1, len(cols) + 1):
        for i in range(n):
            exact = at_least[k - 1][i] - at_least[k][i]
            if exact < 0:
                raise ConsistencyError(f"inconsistent kernel dimensions {kernel_dims}")
            segs.extend([Segment(i, k)] * exact)
    return Multisegment(n, tuple(segs))


def quotient_type(rep: GradedRep, sub: Sequence[Sequence[Sequence[int]]]) -> Multisegment:
    """Isomorphism type of the induced map on ``V/U`` for graded ``U <= ker x``.

    ``sub[g]`` lists independent vectors spanning ``U_g``.  Uses
    ``dim ker(xbar^k)_j = dim V_j - u_j - (dim(x^k V_j + U_{j-k}) - u_{j-k})``.
    """
    n, p = rep.n, rep.p
    u = [len(sub[g]) for g in range(n)]
    target = tuple(rep.dims[g] - u[g] for g in range(n))
    kernel_dims = [tuple([0] * n)]
    k = 0
    while kernel_dims[-1] != target:
        k += 1
        if k > sum(rep.dims) + 1:
            raise ConsistencyError("quotient map is not nilpotent")
        row = []
        for j in range(n):
            t = (j - k) % n
            spanned = rank(list(rep.power_image(k, j)) + [list(v) for v in sub[t]], p)
            row.append(rep.dims[j] - u[j] - (spanned - u[t]))
        kernel_dims.append(tuple(row))
    return type_from_kernel_dims(n, kernel_dims)


def _subspace_choices(basis: list[list[int]], k: int, p: int, method: str):
    """(weight, spanning vectors) for graded pieces of ``U`` inside ``span(basis)``."""
    dim = len(basis)
    width = len(basis[0]) if basis else 0

    def combine(row):
        return [sum(c * b[t] for c, b in zip(row, basis)) % p for t in range(width)]

    if method == "cells":
        for piv, free in echelon_patterns(k, dim):
            yield p ** len(free), [basis[c] for c in piv]
    elif method == "exhaustive":
        for mat in echelon_matrices(k, dim, p):
            yield 1, [combine(row) for row in mat]
    else:
        raise ValueError(f"unknown method {method!r}")


# (type, steps, p, method) -> count; values are deterministic so sharing is safe
_MEMO: dict = {}


@dataclass
class _Budget:
    limit: int
    used: int = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise CapExceeded(f"fibre count exceeded node budget {self.limit}")


def _count(ms: Multisegment, steps: tuple, p: int, method: str, budget: _Budget) -> int:
    key = (ms, steps, p, method)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if not steps:
        result = 1 if ms.size == 0 else 0
    else:
        rep = build_representative(ms, p)
        step = steps[0]
        kernels = [rep.kernel_basis(g) for g in range(ms.n)]
        if any(step[g] > len(kernels[g]) for g in range(ms.n)):
            result = 0
        else:
            per_grade = [list(_subspace_choices(kernels[g], step[g], p, method)) for g in range(ms.n)]
            result = 0
            for combo in product(*per_grade):
                budget.tick()
                weight = 1
                for w, _ in combo:
                    weight *= w
                quotient = quotient_type(rep, [vecs for _, vecs in combo])
                result += weight * _count(quotient, steps[1:], p, method, budget)
    _MEMO[key] = result
    return result


def count_fibre_points(
    lam: Multisegment,
    mu: Multisegment,
    p: int,
    method: str = "cells",
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Number of F_p-points of the fibre of the resolution of ``lam`` over ``x_mu``."""
    if lam.n != mu.n:
        raise GradingMismatch("orbits live on different quivers")
    if dim_vector(lam) != dim_vector(mu):
        raise GradingMismatch(f"dimension vectors of {lam} and {mu} differ")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    steps = tuple(column_steps(lam))
    return _count(mu, steps, p, method, _Budget(budget))


def springer_count(s1: int, s2: int, p: int, method: str = "cells") -> int:
    """F_p-points of the two-block Springer fibre B_(s1,s2)."""
    if s1 < 0 or s2 < 0:
        raise ValueError("block sizes must be nonnegative")
    s = s1 + s2
    lam = Multisegment(1, (Segment(0, s),) if s else ())
    mu = Multisegment(1, tuple(Segment(0, b) for b in (s1, s2) if b))
    return count_fibre_points(lam, mu, p, method=method)


def is_nonempty(lam: Multisegment, mu: Multisegment, method: str = "cells") -> bool:
    """Whether ``O_mu`` lies in the closure of ``O_lam``: fibre nonempty at p=2, confirmed at p=3."""
    at2 = count_fibre_points(lam, mu, 2, method=method) > 0
    at3 = count_fibre_points(lam, mu, 3, method=method) > 0
    if at2 != at3:
        raise ConsistencyError(f"fibre emptiness of ({lam} ; {mu}) depends on the field")
    return at2


@dataclass(frozen=True)
class Interpolation:
    poly: IntPoly
    nodes: tuple[int, ...]
    held_out: tuple[int, ...]
    held_out_counts: tuple[int, ...] = field(default=())


def fit_count_polynomial(
    lam: Multisegment,
    mu: Multisegment,
    prime_list: Sequence[int] | None = None,
    method: str = "cells",
) -> Interpolation:
    """Interpolate the fibre count as a polynomial in p; validate at held-out primes.

    The degree is at most ``flag_dim(lam)``, so ``flag_dim(lam) + 1`` primes
    fix the polynomial and every further prime in the list is a check.
    """
    deg = flag_dim(lam)
    if prime_list is None:
        prime_list = primes(deg + 2)
    prime_list = list(prime_list)
    if len(prime_list) < deg + 2:
        raise ValueError(
            f"need at least {deg + 2} primes for ({lam} ; {mu}), got {len(prime_list)}"
        )
    nodes, held = prime_list[: deg + 1], prime_list[deg + 1 :]
    points = [(q, count_fibre_points(lam, mu, q, method=method)) for q in nodes]
    coeffs = interpolate(points)
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(f"fibre count of ({lam} ; {mu}) is not an integer polynomial")
    poly = IntPoly(int(c) for c in coeffs)
    held_counts = []
    for q in held:
        actual = count_fibre_points(lam, mu, q, method=method)
        if poly(q) != actual:
            raise HeldOutMismatch(
                f"({lam} ; {mu}): interpolated {poly(q)} at p={q}, counted {actual}"
            )
        held_counts.append(actual)
    if not poly.has_nonnegative_coeffs():
        raise ConsistencyError(f"fibre polynomial {poly} of ({lam} ; {mu}) has a negative coefficient")
    return Interpolation(poly, tuple(nodes), tuple(held), tuple(held_counts))


def interpolate_g(
    lam: Multisegment,
    mu: Multisegment,
    prime_list: Sequence[int] | None = None,
    method: str = "cells",
) -> IntPoly:
    return fit_count_polynomial(lam, mu, prime_list, method).poly


def clear_cache():
    _MEMO.clear()
    build_representative.cache_clear()
