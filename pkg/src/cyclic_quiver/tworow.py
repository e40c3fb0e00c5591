"""Closed forms for orbits with at most two rows.

Elements of the two-row subposet are written ``[i1;l1) + [i2;l2)`` with
``l1 >= l2 >= 0``.  When ``l2 == 0`` the second start ``i2`` is left as
``None``.  Another two-row orbit ``mu`` below ``lam`` is written on the
same pair of starting labels, ``[i1;m1) + [i2;m2)``, where ``m1`` is the
length of the row of ``mu`` starting at ``i1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .core import (
    Multisegment,
    Segment,
    ceil_div,
    dim_vector,
    enumerate_multisegments,
    epsilon_rows,
    floor_div,
    residue,
)
from .errors import ConsistencyError, GradingMismatch
from .poly import IntPoly


@dataclass(frozen=True)
class TwoRowPair:
    n: int
    i1: int
    l1: int
    i2: int | None = None
    l2: int = 0

    def __post_init__(self):
        if not self.l1 >= self.l2 >= 0:
            raise ValueError("need l1 >= l2 >= 0")
        if self.l2 > 0 and self.i2 is None:
            raise ValueError("second row needs a start")
        object.__setattr__(self, "i1", self.i1 % self.n)
        if self.i2 is not None:
            object.__setattr__(self, "i2", self.i2 % self.n)

    @classmethod
    def from_multisegment(cls, ms: Multisegment) -> "TwoRowPair":
        rows = ms.segments
        if len(rows) > 2:
            raise ValueError(f"{ms} has more than two rows")
        if not rows:
            return cls(ms.n, 0, 0)
        if len(rows) == 1:
            return cls(ms.n, rows[0].start, rows[0].length)
        return cls(ms.n, rows[0].start, rows[0].length, rows[1].start, rows[1].length)

    def to_multisegment(self) -> Multisegment:
        segs = []
        if self.l1:
            segs.append(Segment(self.i1, self.l1))
        if self.l2:
            segs.append(Segment(self.i2, self.l2))
        return Multisegment(self.n, tuple(segs))

    def with_i2(self, i2: int) -> "TwoRowPair":
        if self.l2:
            raise ValueError("i2 is fixed when the second row is nonempty")
        return TwoRowPair(self.n, self.i1, self.l1, i2, 0)

    @property
    def A(self) -> int:
        return residue(self.i2 - self.i1, self.n)

    @property
    def B(self) -> int:
        return residue(self.i1 - self.i2 + self.l1 - self.l2, self.n)


@dataclass(frozen=True)
class FibreShape:
    s1: int
    s2: int
    s: int

    @property
    def empty(self) -> bool:
        return self.s1 < 0

    @property
    def k(self) -> int:
        return min(self.s1, self.s2)


def _as_pair(x) -> TwoRowPair:
    return x if isinstance(x, TwoRowPair) else TwoRowPair.from_multisegment(x)


def _as_ms(x) -> Multisegment:
    return x.to_multisegment() if isinstance(x, TwoRowPair) else x


def epsilon_closed(lam) -> int:
    p = _as_pair(lam)
    n = p.n
    i2 = p.i1 if p.i2 is None else p.i2
    return (
        ceil_div(p.l1, n)
        + ceil_div(p.l2, n)
        + ceil_div(p.l2 - residue(p.i1 - i2 + p.l1 - 1, n), n)
        + ceil_div(p.l2 - residue(p.i1 - i2, n), n)
    )


def _check_grading(lam: Multisegment, mu: Multisegment):
    if lam.n != mu.n or dim_vector(lam) != dim_vector(mu):
        raise GradingMismatch(f"{lam} and {mu} have different dimension vectors")


def _assignments(lam: TwoRowPair, mu: Multisegment) -> list[tuple[int, int, int]]:
    """Ways of writing ``mu`` as ``[i1;m1) + [i2;m2)``: triples (m1, i2, m2)."""
    rows = [(s.start, s.length) for s in mu.segments]
    if len(rows) != 2:
        return []
    out = set()
    for (ja, ma), (jb, mb) in (rows, rows[::-1]):
        if ja != lam.i1:
            continue
        if lam.l2 and jb != lam.i2:
            continue
        out.add((ma, jb, mb))
    return sorted(out, reverse=True)


def _congruence(lam: TwoRowPair, m1: int, i2: int, m2: int) -> tuple[bool, bool]:
    n, i1, l1, l2 = lam.n, lam.i1, lam.l1, lam.l2
    a = (m1 - l1) % n == 0 and (m2 - l2) % n == 0
    b = (m1 - (i2 - i1 + l2)) % n == 0 and (m2 - (i1 - i2 + l1)) % n == 0
    return a, b


def _necessary(lam: TwoRowPair, m1: int, i2: int, m2: int) -> bool:
    a, b = _congruence(lam, m1, i2, m2)
    return m1 + m2 == lam.l1 + lam.l2 and lam.l1 >= m1 >= lam.l2 and (a or b)


def _sufficient(lam: TwoRowPair, m1: int, i2: int, m2: int) -> bool:
    return _necessary(lam, m1, i2, m2) and m1 >= lam.l2 + residue(i2 - lam.i1, lam.n)


def leq_tworow(lam, mu) -> bool:
    """Whether ``O_mu`` lies in the closure of ``O_lam`` (both with <= 2 rows)."""
    lam_p, lam_ms, mu_ms = _as_pair(lam), _as_ms(lam), _as_ms(mu)
    _check_grading(lam_ms, mu_ms)
    if lam_ms == mu_ms:
        return True
    return any(_sufficient(lam_p, *t) for t in _assignments(lam_p, mu_ms))


def _pick_assignment(lam: TwoRowPair, mu: Multisegment) -> tuple[int, int, int]:
    cands = [t for t in _assignments(lam, mu) if _necessary(lam, *t)]
    good = [t for t in cands if _sufficient(lam, *t)]
    if good:
        return good[0]
    if cands:
        return cands[0]
    raise ValueError(f"{mu} is not of the form [i1;m1)+[i2;m2) with admissible lengths for {lam}")


def fibre_shape(lam, mu) -> FibreShape:
    lam_p, lam_ms, mu_ms = _as_pair(lam), _as_ms(lam), _as_ms(mu)
    _check_grading(lam_ms, mu_ms)
    if lam_ms == mu_ms:
        raise ValueError("fibre shape is only defined for mu != lam")
    m1, i2, m2 = _pick_assignment(lam_p, mu_ms)
    n, l1, l2 = lam_p.n, lam_p.l1, lam_p.l2
    A = residue(i2 - lam_p.i1, n)
    B = residue(lam_p.i1 - i2 + l1 - l2, n)
    num = l1 - l2 - A - B
    if num % n:
        raise ConsistencyError(f"s numerator {num} not divisible by {n}")
    shape = FibreShape(floor_div(m1 - l2 - A, n), floor_div(m2 - l2, n), num // n)
    if not shape.empty and shape.s1 + shape.s2 != shape.s:
        raise ConsistencyError(f"s1 + s2 != s for ({lam_ms} ; {mu_ms})")
    return shape


def strip_reduce(lam, mu) -> tuple[int, int] | None:
    """Fibre shape by removing forced boxes from the diagrams; ``None`` if empty.

    Deletes the first ``l2`` columns, then leading boxes of the long row
    while the two rows of ``mu`` start at different labels, then trailing
    boxes while the long row does not end just before the common start.
    """
    lam_p, lam_ms, mu_ms = _as_pair(lam), _as_ms(lam), _as_ms(mu)
    _check_grading(lam_ms, mu_ms)
    if lam_ms == mu_ms:
        raise ValueError("strip_reduce needs mu != lam")
    m1, i2, m2 = _pick_assignment(lam_p, mu_ms)
    n, l2 = lam_p.n, lam_p.l2

    # rows as [start, length]; starts kept as plain integers
    big = [lam_p.i1 + l2, lam_p.l1 - l2]
    first = [lam_p.i1 + l2, m1 - l2]
    second = [i2 + l2, m2 - l2]
    if first[1] < 0 or second[1] < 0:
        return None

    steps = 0
    while (big[0] - second[0]) % n:
        if first[1] == 0 or big[1] == 0:
            return None
        big = [big[0] + 1, big[1] - 1]
        first = [first[0] + 1, first[1] - 1]
        steps += 1
        if steps > n:
            raise ConsistencyError("leading reduction did not terminate")

    start = second[0]

    def end(row):
        return (row[0] + row[1] - 1) % n

    steps = 0
    while big[1] and (end(big) - (start - 1)) % n:
        target = [row for row in (first, second) if row[1] and end(row) == end(big)]
        if len(target) != 1:
            raise ConsistencyError(f"trailing reduction ambiguous for ({lam_ms} ; {mu_ms})")
        target[0][1] -= 1
        big[1] -= 1
        steps += 1
        if steps > n:
            raise ConsistencyError("trailing reduction did not terminate")

    for row in (big, first, second):
        if row[1] % n or (row[1] and (row[0] - start) % n):
            raise ConsistencyError(f"reduction of ({lam_ms} ; {mu_ms}) did not reach a Springer fibre")
    if big[1] != first[1] + second[1]:
        raise ConsistencyError("row lengths out of balance after reduction")
    return first[1] // n, second[1] // n


def green_poly(s1: int, s2: int) -> IntPoly:
    """Poincare polynomial of the two-block Springer fibre: ballot-number coefficients."""
    if s1 < 0 or s2 < 0:
        raise ValueError("block sizes must be nonnegative")
    s = s1 + s2

    def c(k):
        return comb(s, k) if k >= 0 else 0

    return IntPoly(c(k) - c(k - 1) for k in range(min(s1, s2) + 1))


@lru_cache(maxsize=None)
def two_row_elements(lam: Multisegment) -> tuple[Multisegment, ...]:
    """The two-row orbits sharing the dimension vector of ``lam``."""
    d = dim_vector(lam)
    return tuple(enumerate_multisegments(d, two_row_only=True, cap=max(d.total, 1)))


def below(lam) -> list[Multisegment]:
    lam_ms = _as_ms(lam)
    return [mu for mu in two_row_elements(lam_ms) if leq_tworow(lam_ms, mu)]


def interval(lam, mu) -> list[Multisegment]:
    """Two-row ``nu`` with ``mu <= nu <= lam``."""
    lam_ms, mu_ms = _as_ms(lam), _as_ms(mu)
    if not leq_tworow(lam_ms, mu_ms):
        raise ValueError(f"{mu_ms} is not below {lam_ms}")
    return [nu for nu in below(lam_ms) if leq_tworow(nu, mu_ms)]


def k_value(lam, nu) -> int:
    lam_ms, nu_ms = _as_ms(lam), _as_ms(nu)
    return 0 if lam_ms == nu_ms else fibre_shape(lam_ms, nu_ms).k


def k_and_special(lam, mu, interval_nodes=None) -> tuple[int, bool]:
    lam_ms, mu_ms = _as_ms(lam), _as_ms(mu)
    nodes = interval(lam_ms, mu_ms) if interval_nodes is None else list(interval_nodes)
    k = k_value(lam_ms, mu_ms)
    special = not any(nu != mu_ms and k_value(lam_ms, nu) == k for nu in nodes)
    if special and epsilon_rows(mu_ms) - epsilon_rows(lam_ms) != 2 * k:
        raise ConsistencyError(f"special {mu_ms} under {lam_ms} has codimension != 2k")
    return k, special


def c_coeff(lam, mu) -> int:
    lam_ms, mu_ms = _as_ms(lam), _as_ms(mu)
    if lam_ms == mu_ms:
        return 1
    k, special = k_and_special(lam_ms, mu_ms)
    if not special:
        return 0
    s = fibre_shape(lam_ms, mu_ms).s
    return comb(s, k) - (comb(s, k - 1) if k >= 1 else 0)


def predicted_g(lam, mu) -> IntPoly:
    """sum over nu in [mu, lam] of c_{lam,nu} t^{(eps(nu) - eps(lam))/2}."""
    lam_ms, mu_ms = _as_ms(lam), _as_ms(mu)
    total = IntPoly()
    e0 = epsilon_rows(lam_ms)
    for nu in interval(lam_ms, mu_ms):
        c = c_coeff(lam_ms, nu)
        if c:
            codim = epsilon_rows(nu) - e0
            if codim % 2:
                raise ConsistencyError(f"odd codimension for special {nu} under {lam_ms}")
            total = total + IntPoly.monomial(codim // 2, c)
    return total


def closed_g(lam, mu) -> IntPoly:
    """g from the Green polynomial of the fibre shape; 1 on the diagonal, 0 off the closure."""
    lam_ms, mu_ms = _as_ms(lam), _as_ms(mu)
    if lam_ms == mu_ms:
        return IntPoly.one()
    if not leq_tworow(lam_ms, mu_ms):
        return IntPoly()
    shape = fibre_shape(lam_ms, mu_ms)
    return green_poly(shape.s1, shape.s2)


def family_of(lam, mu) -> int:
    """The second start ``i2`` of the family containing ``mu < lam``."""
    lam_p, mu_ms = _as_pair(lam), _as_ms(mu)
    return _pick_assignment(lam_p, mu_ms)[1]


def case_of(lam: TwoRowPair) -> int:
    n = lam.n
    i2 = lam.i1 if lam.i2 is None else lam.i2
    if lam.i1 == i2:
        return 1 if (lam.l1 - lam.l2) % n == 0 else 2
    return 3 if (lam.l1 - lam.l2 - (i2 - lam.i1)) % n == 0 else 4


def family_s(lam: TwoRowPair) -> int:
    return (lam.l1 - lam.l2 - lam.A - lam.B) // lam.n


@dataclass
class TwoRowNode:
    ms: Multisegment
    fibre: FibreShape | None
    epsilon: int
    depth: int


@dataclass
class TwoRowPoset:
    root: Multisegment
    nodes: list[TwoRowNode]
    edges: list[tuple[Multisegment, Multisegment, int]]
    cases: dict[int, int] = field(default_factory=dict)

    def family(self, i2: int) -> list[Multisegment]:
        """``lam`` together with the nodes below it on the start pair (i1, i2)."""
        out = [self.root]
        for node in self.nodes:
            if node.ms != self.root and family_of(self.root, node.ms) == i2:
                out.append(node.ms)
        return out


def cover_edges(nodes: list[Multisegment], leq) -> list[tuple[Multisegment, Multisegment]]:
    """Transitive reduction of ``leq`` restricted to ``nodes``: (upper, lower) pairs."""
    out = []
    for up in nodes:
        for low in nodes:
            if up == low or not leq(up, low):
                continue
            if any(mid not in (up, low) and leq(up, mid) and leq(mid, low) for mid in nodes):
                continue
            out.append((up, low))
    return out


def build_tworow_poset(lam) -> TwoRowPoset:
    lam_p, lam_ms = _as_pair(lam), _as_ms(lam)
    members = below(lam_ms)
    covers = cover_edges(members, leq_tworow)
    depth = {lam_ms: 0}
    for ms in sorted(members, key=epsilon_rows):
        for up, low in covers:
            if low == ms:
                depth[ms] = max(depth.get(ms, 0), depth[up] + 1)
    nodes = [
        TwoRowNode(
            ms,
            None if ms == lam_ms else fibre_shape(lam_ms, ms),
            epsilon_rows(ms),
            depth[ms],
        )
        for ms in members
    ]
    edges = [(up, low, epsilon_rows(low) - epsilon_rows(up)) for up, low in covers]
    for up, low, codim in edges:
        if codim <= 0:
            raise ConsistencyError(f"epsilon does not increase along {up} -> {low}")
    if lam_p.l2:
        cases = {lam_p.i2: case_of(lam_p)}
    else:
        cases = {i2: case_of(lam_p.with_i2(i2)) for i2 in range(lam_p.n)}
    return TwoRowPoset(lam_ms, nodes, edges, cases)
