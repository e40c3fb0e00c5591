"""Local IC polynomials and decomposition multiplicities from fibre polynomials.

For ``mu <= lam`` the fibre polynomial satisfies

    g[lam, mu](t) = sum_{lam >= nu >= mu} sum_j a[lam, nu, j] t^((e(nu) - e(lam) - j)/2) K[nu, mu](t)

with ``a`` symmetric in ``j``, ``a[lam, lam, j] = delta(j, 0)``,
``K[lam, lam] = 1`` and ``deg K[lam, mu] < (e(mu) - e(lam))/2``.  These
constraints determine ``a`` and ``K`` by induction on ``e(mu) - e(lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import ffcount, tworow
from .core import (
    DEFAULT_CAP,
    DimVector,
    Multisegment,
    enumerate_multisegments,
    epsilon_rows,
)
from .errors import ConsistencyError, DeconvolutionError, QuiverError
from .poly import IntPoly

Pair = tuple[Multisegment, Multisegment]


@dataclass
class OrbitPoset:
    """Orbits with a common dimension vector under the closure order.

    ``leq[i][j]`` means ``orbits[i] <= orbits[j]``; ``covers`` holds
    ``(upper, lower, codim)`` index triples.
    """

    orbits: list[Multisegment]
    leq: list[list[bool]]
    eps: list[int]
    covers: list[tuple[int, int, int]] = field(default_factory=list)

    def __post_init__(self):
        self.index = {ms: i for i, ms in enumerate(self.orbits)}

    def le(self, mu: Multisegment, lam: Multisegment) -> bool:
        return self.leq[self.index[mu]][self.index[lam]]

    def epsilon(self, ms: Multisegment) -> int:
        return self.eps[self.index[ms]]

    def pairs(self) -> list[Pair]:
        """All (lam, mu) with mu <= lam, in deconvolution order."""
        out = [(lam, mu) for lam in self.orbits for mu in self.orbits if self.le(mu, lam)]
        out.sort(key=lambda pm: (self.epsilon(pm[1]) - self.epsilon(pm[0]), pm[0].sort_key, pm[1].sort_key))
        return out

    def interval(self, lam: Multisegment, mu: Multisegment) -> list[Multisegment]:
        return [nu for nu in self.orbits if self.le(mu, nu) and self.le(nu, lam)]

    def restrict(self, members: Iterable[Multisegment]) -> "OrbitPoset":
        keep = sorted(set(members), key=lambda ms: ms.sort_key)
        idx = [self.index[ms] for ms in keep]
        leq = [[self.leq[i][j] for j in idx] for i in idx]
        sub = OrbitPoset(keep, leq, [self.eps[i] for i in idx])
        sub.covers = _covers(sub.leq, sub.eps)
        return sub


def _covers(leq: list[list[bool]], eps: list[int]) -> list[tuple[int, int, int]]:
    size = len(leq)
    out = []
    for up in range(size):
        for low in range(size):
            if up == low or not leq[low][up]:
                continue
            if any(m not in (up, low) and leq[low][m] and leq[m][up] for m in range(size)):
                continue
            out.append((up, low, eps[low] - eps[up]))
    return out


def _check_order(poset: OrbitPoset):
    size = len(poset.orbits)
    L = poset.leq
    for i in range(size):
        if not L[i][i]:
            raise ConsistencyError(f"closure order not reflexive at {poset.orbits[i]}")
        for j in range(size):
            if i != j and L[i][j]:
                if L[j][i]:
                    raise ConsistencyError(f"closure order not antisymmetric: {poset.orbits[i]}, {poset.orbits[j]}")
                if poset.eps[i] <= poset.eps[j]:
                    raise ConsistencyError(f"epsilon does not increase from {poset.orbits[j]} down to {poset.orbits[i]}")
                for k in range(size):
                    if L[j][k] and not L[i][k]:
                        raise ConsistencyError("closure order not transitive")


def poset_from_orbits(orbits: Sequence[Multisegment], method: str = "cells") -> OrbitPoset:
    orbits = sorted(orbits, key=lambda ms: ms.sort_key)
    leq = [[mu == lam or ffcount.is_nonempty(lam, mu, method=method) for lam in orbits] for mu in orbits]
    poset = OrbitPoset(list(orbits), leq, [epsilon_rows(ms) for ms in orbits])
    _check_order(poset)
    poset.covers = _covers(poset.leq, poset.eps)
    return poset


def build_poset(
    d: DimVector, two_row_only: bool = False, cap: int = DEFAULT_CAP, method: str = "cells"
) -> OrbitPoset:
    """Closure poset on the orbits of dimension vector ``d``, via fibre nonemptiness."""
    poset = poset_from_orbits(enumerate_multisegments(d, two_row_only, cap), method)
    if two_row_only:
        for mu in poset.orbits:
            for lam in poset.orbits:
                if poset.le(mu, lam) != tworow.leq_tworow(lam, mu):
                    raise ConsistencyError(
                        f"closure of ({lam} ; {mu}): fibre count says {poset.le(mu, lam)}, closed form disagrees"
                    )
    return poset


def g_matrix(
    poset: OrbitPoset,
    source: str = "count",
    prime_list: Sequence[int] | None = None,
    method: str = "cells",
    records: list | None = None,
) -> dict[Pair, IntPoly]:
    """Fibre polynomials for every comparable pair; ``source`` is "count" or "closed"."""
    out = {}
    for lam, mu in poset.pairs():
        if lam == mu:
            out[lam, mu] = IntPoly.one()
        elif source == "count":
            fit = ffcount.fit_count_polynomial(lam, mu, prime_list, method)
            if records is not None:
                records.append(((lam, mu), fit))
            out[lam, mu] = fit.poly
        elif source == "closed":
            out[lam, mu] = tworow.closed_g(lam, mu)
        else:
            raise ValueError(f"unknown g source {source!r}")
    return out


@dataclass(frozen=True)
class ICEntry:
    ktilde: IntPoly
    a: Mapping[int, int]


@dataclass
class ICTable:
    poset: OrbitPoset
    entries: dict[Pair, ICEntry]

    def ktilde(self, lam, mu) -> IntPoly:
        entry = self.entries.get((lam, mu))
        return entry.ktilde if entry else IntPoly()

    def a(self, lam, mu) -> dict[int, int]:
        entry = self.entries.get((lam, mu))
        return dict(entry.a) if entry else {}

    def pairs(self) -> list[Pair]:
        return [pm for pm in self.poset.pairs() if pm in self.entries]


def _shifted_sum(a: Mapping[int, int], codim: int) -> IntPoly:
    """sum_j a[j] t^((codim - j)/2)."""
    out = IntPoly()
    for j, mult in a.items():
        if mult:
            out = out + IntPoly.monomial((codim - j) // 2, mult)
    return out


def deconvolve(poset: OrbitPoset, g: Mapping[Pair, IntPoly]) -> ICTable:
    entries: dict[Pair, ICEntry] = {}
    for lam, mu in poset.pairs():
        if (lam, mu) not in g:
            raise DeconvolutionError(lam, mu, "missing fibre polynomial")
        gp = g[lam, mu]
        if lam == mu:
            if gp != IntPoly.one():
                raise DeconvolutionError(lam, mu, f"diagonal fibre polynomial is {gp}, expected 1")
            entries[lam, mu] = ICEntry(IntPoly.one(), {0: 1})
            continue
        e_lam = poset.epsilon(lam)
        codim = poset.epsilon(mu) - e_lam
        if codim <= 0:
            raise DeconvolutionError(lam, mu, f"nonpositive codimension {codim}")
        residual = gp
        for nu in poset.interval(lam, mu):
            if nu in (lam, mu):
                continue
            inner = entries[lam, nu]
            residual = residual - _shifted_sum(inner.a, poset.epsilon(nu) - e_lam) * entries[nu, mu].ktilde
        if not residual.has_nonnegative_coeffs():
            raise DeconvolutionError(lam, mu, f"residual {residual} has a negative coefficient")
        a: dict[int, int] = {}
        for e in range((codim + 1) // 2, len(residual)):
            coeff = residual[e]
            if not coeff:
                continue
            if e > codim:
                raise DeconvolutionError(lam, mu, f"residual term t^{e} exceeds the codimension {codim}")
            j = codim - 2 * e
            a[j] = coeff
            a[-j] = coeff
        ktilde = residual - _shifted_sum(a, codim)
        if not ktilde.has_nonnegative_coeffs():
            raise DeconvolutionError(lam, mu, f"local IC polynomial {ktilde} has a negative coefficient")
        if ktilde[0] != 1:
            raise DeconvolutionError(lam, mu, f"local IC polynomial {ktilde} does not have constant term 1")
        if ktilde.degree is not None and 2 * ktilde.degree >= codim:
            raise DeconvolutionError(lam, mu, f"local IC polynomial {ktilde} violates the degree bound")
        entries[lam, mu] = ICEntry(ktilde, dict(sorted(a.items())))
    return ICTable(poset, entries)


def deconvolve_interval(
    poset: OrbitPoset, g: Mapping[Pair, IntPoly], lam: Multisegment, mu: Multisegment
) -> ICEntry:
    """The entry for (lam, mu) computed from the interval [mu, lam] alone."""
    if not poset.le(mu, lam):
        raise ValueError(f"{mu} is not below {lam}")
    sub = poset.restrict(poset.interval(lam, mu))
    sub_g = {pm: poly for pm, poly in g.items() if pm[0] in sub.index and pm[1] in sub.index}
    return deconvolve(sub, sub_g).entries[lam, mu]


def reconstruct(table: ICTable) -> dict[Pair, IntPoly]:
    """Re-evaluate the stalk identity from a table of (K, a)."""
    poset = table.poset
    out = {}
    for lam, mu in poset.pairs():
        e_lam = poset.epsilon(lam)
        total = IntPoly()
        for nu in poset.interval(lam, mu):
            total = total + _shifted_sum(table.a(lam, nu), poset.epsilon(nu) - e_lam) * table.ktilde(nu, mu)
        out[lam, mu] = total
    return out


def check_table(table: ICTable) -> list[str]:
    """Violations of symmetry, parity, diagonal and degree constraints."""
    problems = []
    poset = table.poset
    for (lam, mu), entry in table.entries.items():
        codim = poset.epsilon(mu) - poset.epsilon(lam)
        for j, mult in entry.a.items():
            if mult < 0:
                problems.append(f"({lam} ; {mu}): negative multiplicity at j={j}")
            if entry.a.get(-j, 0) != mult:
                problems.append(f"({lam} ; {mu}): a not symmetric at j={j}")
            if mult and (j - codim) % 2:
                problems.append(f"({lam} ; {mu}): a has wrong parity at j={j}")
        if lam == mu and (dict(entry.a) != {0: 1} or entry.ktilde != IntPoly.one()):
            problems.append(f"({lam} ; {lam}): diagonal entry is not trivial")
        if lam != mu:
            k = entry.ktilde
            if k[0] != 1 or (k.degree is not None and 2 * k.degree >= codim):
                problems.append(f"({lam} ; {mu}): ktilde {k} violates constant term / degree bound")
    return problems


# ---------------------------------------------------------------------------
# verification suites


THEOREM = "theorem"
INTERNAL = "internal"


@dataclass
class CheckResult:
    name: str
    status: str  # "pass", THEOREM or INTERNAL
    detail: str = ""


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)
    posets: int = 0
    pairs: int = 0
    held_out_checks: int = 0

    def add(self, name: str, status: str = "pass", detail: str = ""):
        self.results.append(CheckResult(name, status, detail))

    def extend(self, other: "Report"):
        self.results.extend(other.results)
        self.posets += other.posets
        self.pairs += other.pairs
        self.held_out_checks += other.held_out_checks

    @property
    def theorem_failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == THEOREM]

    @property
    def internal_failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == INTERNAL]

    @property
    def ok(self) -> bool:
        return not self.theorem_failures and not self.internal_failures

    @property
    def exit_code(self) -> int:
        if self.internal_failures:
            return 2
        return 1 if self.theorem_failures else 0

    def summary(self) -> str:
        return (
            f"{self.posets} posets, {self.pairs} pairs, {self.held_out_checks} held-out checks, "
            f"{len(self.theorem_failures)} theorem failures, {len(self.internal_failures)} internal failures"
        )


def verify_tworow(
    d: DimVector,
    prime_list: Sequence[int] | None = None,
    method: str = "cells",
    tables: list | None = None,
) -> Report:
    """Check K = 1 and a = delta_{j,0} c on every comparable two-row pair of ``d``."""
    report = Report()
    label = f"n={d.n} d=({d})"
    try:
        poset = build_poset(d, two_row_only=True, cap=max(d.total, 1), method=method)
        records: list = []
        g_count = g_matrix(poset, "count", prime_list, method, records)
        g_closed = g_matrix(poset, "closed")
        table = deconvolve(poset, g_count)
    except QuiverError as exc:
        report.add(label, INTERNAL, str(exc))
        return report
    report.posets = 1
    report.held_out_checks = sum(len(fit.held_out) for _, fit in records)
    if tables is not None:
        tables.append((poset, g_count, table, records))
    regenerated = reconstruct(table)
    for lam, mu in poset.pairs():
        name = f"{label} ({lam} ; {mu})"
        report.pairs += 1
        if g_count[lam, mu] != g_closed[lam, mu]:
            report.add(name, INTERNAL, f"counted g {g_count[lam, mu]} != closed form {g_closed[lam, mu]}")
            continue
        if lam != mu and tworow.predicted_g(lam, mu) != g_closed[lam, mu]:
            report.add(name, INTERNAL, "interval sum of c does not reproduce the Green polynomial")
            continue
        if regenerated[lam, mu] != g_count[lam, mu]:
            report.add(name, INTERNAL, "table does not reconstruct g")
            continue
        c = tworow.c_coeff(lam, mu)
        expected_a = {0: c} if c else {}
        k, a = table.ktilde(lam, mu), table.a(lam, mu)
        if k != IntPoly.one():
            report.add(name, THEOREM, f"ktilde = {k}")
        elif a != expected_a:
            report.add(name, THEOREM, f"a = {a}, expected {expected_a}")
        else:
            report.add(name)
    for problem in check_table(table):
        report.add(label, INTERNAL, problem)
    return report


def kostka_crosscheck(
    d: int,
    lam: Sequence[int] | None = None,
    mu: Sequence[int] | None = None,
    prime_list: Sequence[int] | None = None,
    method: str = "cells",
    strict: bool = True,
) -> Report:
    """n = 1: closure order vs dominance, deconvolved K vs charge Kostka-Foulkes."""
    from . import kostka
    from .core import Segment

    report = Report()

    def as_ms(parts):
        return Multisegment(1, tuple(Segment(0, p) for p in parts))

    poset = build_poset(DimVector(1, (d,)), cap=max(d, 1), method=method)
    report.posets = 1
    for a_ in poset.orbits:
        for b_ in poset.orbits:
            want = kostka.dominates(a_.partition(), b_.partition())
            if poset.le(b_, a_) != want:
                report.add(f"closure ({a_} ; {b_})", INTERNAL, f"closure {poset.le(b_, a_)} but dominance {want}")
    if lam is not None and mu is not None:
        lam_ms, mu_ms = as_ms(lam), as_ms(mu)
        sub = poset.interval(lam_ms, mu_ms) if poset.le(mu_ms, lam_ms) else [lam_ms, mu_ms]
        poset = poset.restrict(sub)
    records: list = []
    g = g_matrix(poset, "count", prime_list, method, records)
    report.held_out_checks = sum(len(fit.held_out) for _, fit in records)
    table = deconvolve(poset, g)
    targets = [(lam_ms, mu_ms)] if lam is not None and mu is not None else [
        (x, y) for x in poset.orbits for y in poset.orbits
    ]
    for x, y in targets:
        report.pairs += 1
        want = kostka.ktilde_from_kostka(x.partition(), y.partition())
        got = table.ktilde(x, y)
        name = f"kostka ({x} ; {y})"
        if got != want:
            report.add(name, INTERNAL, f"deconvolved {got}, Kostka-Foulkes gives {want}")
        else:
            report.add(name)
    if strict and not report.ok:
        raise ConsistencyError("; ".join(f"{r.name}: {r.detail}" for r in report.results if r.status != "pass"))
    return report
