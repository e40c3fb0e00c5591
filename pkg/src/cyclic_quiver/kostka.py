"""Kostka-Foulkes polynomials via the charge statistic (the n = 1 oracle)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .poly import IntPoly

Partition = tuple[int, ...]


def partitions(d: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``d`` in reverse lexicographic order."""
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for part in lam if part > k) for k in range(lam[0])) if lam else ()


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (equal sizes)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def n_stat(lam: Sequence[int]) -> int:
    return sum(k * part for k, part in enumerate(lam))


def ssyt(shape: Sequence[int], content: Sequence[int]) -> Iterator[list[list[int]]]:
    """Semistandard tableaux (English rows) of the given shape and content."""
    shape = [s for s in shape if s]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    remaining = list(content)
    tab = [[0] * length for length in shape]

    def fill(pos):
        if pos == len(cells):
            yield [row[:] for row in tab]
            return
        r, c = cells[pos]
        low = tab[r][c - 1] if c else 1
        if r:
            low = max(low, tab[r - 1][c] + 1)
        for v in range(low, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                tab[r][c] = v
                yield from fill(pos + 1)
                remaining[v - 1] += 1
        tab[r][c] = 0

    yield from fill(0)


def reading_word(tab: list[list[int]]) -> list[int]:
    return [v for row in reversed(tab) for v in row]


def _standard_charge(word: list[int]) -> int:
    pos = {v: i for i, v in enumerate(word)}
    index = total = 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            index += 1
        total += index
    return total


def charge(word: Sequence[int]) -> int:
    """Charge of a word with partition content."""
    letters = list(word)
    total = 0
    while letters:
        size = len(letters)
        used = []
        i = max(k for k in range(size) if letters[k] == 1)
        used.append(i)
        top = max(letters)
        for r in range(2, top + 1):
            k = (i - 1) % size
            while letters[k] != r or k in used:
                k = (k - 1) % size
            used.append(k)
            i = k
        keep = sorted(used)
        total += _standard_charge([letters[k] for k in keep])
        letters = [v for k, v in enumerate(letters) if k not in used]
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(lam: Partition, mu: Partition) -> IntPoly:
    out = IntPoly()
    for tab in ssyt(lam, mu):
        out = out + IntPoly.monomial(charge(reading_word(tab)))
    return out


def kostka_number(lam: Partition, mu: Partition) -> int:
    return sum(1 for _ in ssyt(lam, mu))


def ktilde_from_kostka(lam: Partition, mu: Partition) -> IntPoly:
    """t^(n(mu) - n(lam)) K(t^-1), zero unless lam dominates mu."""
    lam, mu = tuple(lam), tuple(mu)
    if not dominates(lam, mu):
        return IntPoly()
    k = kostka_foulkes(lam, mu)
    shift = n_stat(mu) - n_stat(lam)
    return IntPoly([k[shift - e] if 0 <= shift - e < len(k) else 0 for e in range(shift + 1)])
