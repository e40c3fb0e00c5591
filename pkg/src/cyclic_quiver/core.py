"""Multisegments of the cyclic quiver and their labelled Young diagrams.

A segment ``[i;l)`` is the indecomposable nilpotent representation of
length ``l`` whose socle sits at vertex ``i``; as a row of a labelled Young
diagram its boxes carry the labels ``i, i+1, ..., i+l-1`` (mod ``n``).
Multisegments are stored in canonical order (length descending, then start
ascending) and written ``"i:l,i:l,..."``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .errors import CapExceeded, ParseError

DEFAULT_CAP = 10


def residue(m: int, n: int) -> int:
    """The representative of ``m`` in ``{0, ..., n-1}``."""
    if n < 1:
        raise ValueError("modulus must be positive")
    return m % n


def floor_div(m: int, n: int) -> int:
    return (m - residue(m, n)) // n


def ceil_div(m: int, n: int) -> int:
    return (m + residue(-m, n)) // n


@dataclass(frozen=True, order=True)
class Segment:
    start: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"segment length must be positive, got {self.length}")
        if self.start < 0:
            raise ValueError("segment start must be a reduced residue")

    def labels(self, n: int) -> list[int]:
        return [(self.start + k) % n for k in range(self.length)]

    def last_label(self, n: int) -> int:
        return (self.start + self.length - 1) % n

    def __str__(self):
        return f"{self.start}:{self.length}"


def _segment_key(seg: Segment) -> tuple[int, int]:
    return (-seg.length, seg.start)


@dataclass(frozen=True)
class Multisegment:
    """A multiset of segments over ``Z/nZ`` in canonical order."""

    n: int
    segments: tuple[Segment, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        for seg in self.segments:
            if seg.start >= self.n:
                raise ValueError(f"segment {seg} not reduced mod {self.n}")
        ordered = tuple(sorted(self.segments, key=_segment_key))
        if ordered != self.segments:
            object.__setattr__(self, "segments", ordered)

    @property
    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(_segment_key(s) for s in self.segments)

    def __lt__(self, other: "Multisegment") -> bool:
        return (self.n, self.sort_key) < (other.n, other.sort_key)

    @property
    def rows(self) -> tuple[Segment, ...]:
        return self.segments

    @property
    def num_rows(self) -> int:
        return len(self.segments)

    @property
    def size(self) -> int:
        return sum(s.length for s in self.segments)

    @property
    def longest(self) -> int:
        return self.segments[0].length if self.segments else 0

    def partition(self) -> tuple[int, ...]:
        """Underlying (unlabelled) partition."""
        return tuple(s.length for s in self.segments)

    def by_start(self) -> dict[int, tuple[int, ...]]:
        """The I-tuple of partitions: rows grouped by starting label."""
        out: dict[int, list[int]] = {i: [] for i in range(self.n)}
        for s in self.segments:
            out[s.start].append(s.length)
        return {i: tuple(v) for i, v in out.items()}

    def __str__(self):
        return ",".join(str(s) for s in self.segments)

    def __repr__(self):
        return f"Multisegment(n={self.n}, {str(self)!r})"

    def bracket_notation(self) -> str:
        if not self.segments:
            return "0"
        return "⊕".join(f"[{s.start};{s.length})" for s in self.segments)


@dataclass(frozen=True)
class DimVector:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise ValueError("dimension vector length must equal the modulus")
        if any(c < 0 for c in self.counts):
            raise ValueError("dimension vector entries must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i % self.n]

    def __sub__(self, other: "DimVector") -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.counts, other.counts))

    def __str__(self):
        return ",".join(map(str, self.counts))


def canonicalize(raw: Iterable[tuple[int, int]], n: int) -> Multisegment:
    if n < 1:
        raise ValueError("modulus must be positive")
    segs = []
    for start, length in raw:
        if length < 1:
            raise ValueError(f"segment length must be positive, got {length}")
        segs.append(Segment(start % n, length))
    return Multisegment(n, tuple(segs))


def parse_multisegment(text: str, n: int) -> Multisegment:
    """Parse the ``"i:l,i:l"`` grammar; ``""`` is the empty multisegment."""
    text = text.strip()
    if not text:
        return Multisegment(n)
    raw = []
    for piece in text.split(","):
        piece = piece.strip()
        start, sep, length = piece.partition(":")
        if not sep:
            raise ParseError(f"expected 'i:l', got {piece!r}")
        try:
            i, l = int(start), int(length)
        except ValueError:
            raise ParseError(f"non-integer in segment {piece!r}") from None
        if l < 1:
            raise ParseError(f"segment length must be >= 1 in {piece!r}")
        raw.append((i, l))
    return canonicalize(raw, n)


def parse_dim_vector(text: str, n: int) -> DimVector:
    text = text.strip()
    try:
        counts = tuple(int(c) for c in text.split(",")) if text else ()
    except ValueError:
        raise ParseError(f"bad dimension vector {text!r}") from None
    if len(counts) != n:
        raise ParseError(f"dimension vector {text!r} has {len(counts)} entries, expected {n}")
    if any(c < 0 for c in counts):
        raise ParseError("dimension vector entries must be nonnegative")
    return DimVector(n, counts)


def dim_vector(ms: Multisegment) -> DimVector:
    counts = [0] * ms.n
    for seg in ms.segments:
        for lab in seg.labels(ms.n):
            counts[lab] += 1
    return DimVector(ms.n, tuple(counts))


def truncate(ms: Multisegment, k: int) -> Multisegment:
    """Keep only the first ``k`` columns."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    segs = tuple(Segment(s.start, min(s.length, k)) for s in ms.segments if k > 0)
    return Multisegment(ms.n, segs)


def column_steps(ms: Multisegment) -> list[tuple[int, ...]]:
    """Graded box counts of each column: d(ms^{<=k}) - d(ms^{<=k-1})."""
    steps = []
    prev = dim_vector(truncate(ms, 0))
    for k in range(1, ms.longest + 1):
        cur = dim_vector(truncate(ms, k))
        steps.append(cur - prev)
        prev = cur
    return steps


@lru_cache(maxsize=None)
def epsilon_rows(ms: Multisegment) -> int:
    """Stabilizer dimension: sum over rows R of d_{last label of R}(ms^{<=|R|})."""
    total = 0
    for seg in ms.segments:
        total += dim_vector(truncate(ms, seg.length))[seg.last_label(ms.n)]
    return total


def orbit_dim(ms: Multisegment) -> int:
    d = dim_vector(ms)
    return sum(c * c for c in d.counts) - epsilon_rows(ms)


def flag_dim(ms: Multisegment) -> int:
    """Dimension of the graded partial flag variety attached to ``ms``."""
    d = dim_vector(ms)
    steps = column_steps(ms)
    return sum(
        comb(d[i], 2) - sum(comb(step[i], 2) for step in steps) for i in range(ms.n)
    )


def bundle_fibre_dim(ms: Multisegment) -> int:
    d = dim_vector(ms)
    steps = column_steps(ms)
    total = sum(
        comb(d[i], 2) + sum(comb(step[i] + 1, 2) for step in steps) for i in range(ms.n)
    )
    return total - epsilon_rows(ms)


def is_aperiodic(ms: Multisegment) -> bool:
    parts = ms.by_start()
    lengths = {s.length for s in ms.segments}
    return all(any(m not in parts[i] for i in range(ms.n)) for m in lengths)


def zero_representation(d: DimVector) -> Multisegment:
    return canonicalize([(i, 1) for i in range(d.n) for _ in range(d.counts[i])], d.n)


def enumerate_multisegments(
    d: DimVector, two_row_only: bool = False, cap: int = DEFAULT_CAP
) -> list[Multisegment]:
    """All multisegments with dimension vector ``d``, in canonical order."""
    if d.total > cap:
        raise CapExceeded(f"total dimension {d.total} exceeds cap {cap}")
    n = d.n
    candidates = sorted(
        (Segment(i, l) for l in range(1, d.total + 1) for i in range(n)),
        key=_segment_key,
    )
    max_rows = 2 if two_row_only else d.total
    out: list[Multisegment] = []

    def rec(pos: int, remaining: list[int], chosen: list[Segment]):
        if not any(remaining):
            out.append(Multisegment(n, tuple(chosen)))
            return
        if len(chosen) == max_rows:
            return
        for idx in range(pos, len(candidates)):
            seg = candidates[idx]
            if seg.length > sum(remaining):
                continue
            labels = seg.labels(n)
            for lab in labels:
                remaining[lab] -= 1
            if all(r >= 0 for r in remaining):
                chosen.append(seg)
                rec(idx, remaining, chosen)
                chosen.pop()
            for lab in labels:
                remaining[lab] += 1

    rec(0, list(d.counts), [])
    out.sort(key=lambda ms: ms.sort_key)
    return out


def dim_vectors(n: int, total_max: int) -> list[DimVector]:
    """Every dimension vector over ``Z/nZ`` with total at most ``total_max``."""
    out = []

    def rec(prefix: list[int], left: int):
        if len(prefix) == n:
            out.append(DimVector(n, tuple(prefix)))
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], total_max)
    return sorted(out, key=lambda d: (d.total, d.counts))
