"""Command-line front end.

Exit codes: 0 success, 1 a theorem check failed, 2 an internal consistency
check failed, 3 bad input (parse error, grading mismatch, cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import ffcount, tworow
from .core import (
    DEFAULT_CAP,
    DimVector,
    Multisegment,
    dim_vector,
    dim_vectors,
    enumerate_multisegments,
    epsilon_rows,
    is_aperiodic,
    orbit_dim,
    parse_dim_vector,
    parse_multisegment,
)
from .decompose import Report, build_poset, deconvolve, g_matrix, kostka_crosscheck, reconstruct, verify_tworow
from .errors import CapExceeded, ConsistencyError, GradingMismatch, ParseError, QuiverError
from .modp import is_prime
from .poly import IntPoly, render

EXIT_OK, EXIT_THEOREM, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2, 3
SUITES = ("tworow", "green", "epsilon", "closure", "kostka", "shifted", "all")


@dataclass
class RunConfig:
    n: int = 1
    dim: DimVector | None = None
    lam: Multisegment | None = None
    mu: Multisegment | None = None
    two_row: bool = False
    method: str = "count"
    cap: int = DEFAULT_CAP
    primes: tuple[int, ...] | None = None
    fmt: str = "text"
    suite: str = "all"
    n_max: int = 4
    d_max: int = 6
    s_max: int = 4
    len_max: int = 30
    count_method: str = "cells"

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("--n must be positive")
        for name in ("cap", "n_max", "s_max", "len_max"):
            if getattr(self, name) < 1:
                raise ParseError(f"--{name.replace('_', '-')} must be positive")
        if self.d_max < 0:
            raise ParseError("--d-max must be nonnegative")
        if self.primes is not None:
            if not self.primes or any(not is_prime(p) for p in self.primes):
                raise ParseError("--primes must list primes")
            if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
                raise ParseError("--primes must be strictly increasing")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, default=1, help="number of vertices of the cyclic quiver")
    p.add_argument("--dim", help="dimension vector a,b,...")
    p.add_argument("--lambda", dest="lam", help="multisegment i:l,...")
    p.add_argument("--mu", help="multisegment i:l,...")
    p.add_argument("--two-row", action="store_true", help="restrict to orbits with at most two rows")
    p.add_argument("--method", choices=("closed", "count", "both"), default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--primes", help="interpolation primes 2,3,5,...")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum total dimension")
    p.add_argument("--exhaustive", action="store_true", help="count by full subspace enumeration")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclic-quiver", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [
        ("enumerate", "list orbits with epsilon, dimension and aperiodicity"),
        ("poset", "closure poset as text, JSON or DOT"),
        ("gpoly", "fibre polynomial g for a pair"),
        ("ic", "local IC polynomials and multiplicities"),
    ]:
        _common(sub.add_parser(name, help=help_))
    ver = sub.add_parser("verify", help="run verification sweeps")
    _common(ver)
    ver.add_argument("--suite", choices=SUITES, default="all")
    ver.add_argument("--n-max", type=int, default=4)
    ver.add_argument("--d-max", type=int, default=6)
    ver.add_argument("--s-max", type=int, default=4)
    ver.add_argument("--len-max", type=int, default=30)
    return parser


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"bad integer list {text!r}") from None


def config_from_args(args: argparse.Namespace) -> RunConfig:
    n = args.n
    fmt = "json" if args.json else "dot" if args.dot else "text"
    if args.json and args.dot:
        raise ParseError("--json and --dot are exclusive")
    lam = parse_multisegment(args.lam, n) if args.lam is not None else None
    mu = parse_multisegment(args.mu, n) if args.mu is not None else None
    if args.dim is not None:
        dim = parse_dim_vector(args.dim, n) if args.dim.strip() else DimVector(n, (0,) * n)
    elif lam is not None:
        dim = dim_vector(lam)
    else:
        dim = None
    method = args.method or ("closed" if args.two_row and args.command != "gpoly" else "count")
    kwargs = {}
    if args.command == "verify":
        kwargs = dict(suite=args.suite, n_max=args.n_max, d_max=args.d_max, s_max=args.s_max, len_max=args.len_max)
    return RunConfig(
        n=n,
        dim=dim,
        lam=lam,
        mu=mu,
        two_row=args.two_row,
        method=method,
        cap=args.cap,
        primes=_int_list(args.primes) if args.primes else None,
        fmt=fmt,
        count_method="exhaustive" if args.exhaustive else "cells",
        **kwargs,
    )


def _need_dim(cfg: RunConfig) -> DimVector:
    if cfg.dim is None:
        raise ParseError("--dim (or --lambda) is required")
    if cfg.dim.total > cfg.cap:
        raise CapExceeded(f"total dimension {cfg.dim.total} exceeds --cap {cfg.cap}")
    return cfg.dim


def _orbit_record(ms: Multisegment) -> dict:
    return {"ms": str(ms), "epsilon": epsilon_rows(ms), "dim": orbit_dim(ms), "aperiodic": is_aperiodic(ms)}


def cmd_enumerate(cfg: RunConfig, out) -> int:
    d = _need_dim(cfg)
    orbits = enumerate_multisegments(d, cfg.two_row, cfg.cap)
    if cfg.fmt == "json":
        json.dump({"n": d.n, "dim": list(d.counts), "orbits": [_orbit_record(ms) for ms in orbits]}, out, indent=2)
        out.write("\n")
        return EXIT_OK
    width = max([len(str(ms)) for ms in orbits] + [2])
    out.write(f"{'ms':<{width}}  eps  dim  aperiodic\n")
    for ms in orbits:
        rec = _orbit_record(ms)
        out.write(f"{rec['ms'] or '-':<{width}}  {rec['epsilon']:>3}  {rec['dim']:>3}  {'yes' if rec['aperiodic'] else 'no'}\n")
    out.write(f"{len(orbits)} orbits\n")
    return EXIT_OK


def _dot_id(ms: Multisegment) -> str:
    return json.dumps(str(ms) or "0")


def cmd_poset(cfg: RunConfig, out) -> int:
    d = _need_dim(cfg)
    poset = build_poset(d, cfg.two_row, cfg.cap, cfg.count_method)
    edges = sorted(poset.covers)
    if cfg.fmt == "dot":
        out.write("digraph closure {\n")
        for ms in poset.orbits:
            label = f"{str(ms) or '0'}\\nε={epsilon_rows(ms)},dim={orbit_dim(ms)}"
            out.write(f'  {_dot_id(ms)} [label="{label}"];\n')
        for up, low, codim in edges:
            out.write(f'  {_dot_id(poset.orbits[up])} -> {_dot_id(poset.orbits[low])} [label="codim={codim}"];\n')
        out.write("}\n")
    elif cfg.fmt == "json":
        doc = {
            "n": d.n,
            "dim": list(d.counts),
            "nodes": [_orbit_record(ms) for ms in poset.orbits],
            "edges": [
                {"upper": str(poset.orbits[u]), "lower": str(poset.orbits[l]), "codim": c} for u, l, c in edges
            ],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for up, low, codim in edges:
            out.write(f"{poset.orbits[up]} -> {poset.orbits[low]}  codim={codim}\n")
        out.write(f"{len(poset.orbits)} nodes, {len(edges)} cover edges\n")
    return EXIT_OK


def fibre_polynomial(cfg: RunConfig, lam: Multisegment, mu: Multisegment) -> IntPoly | None:
    """g for the pair, or None when mu is not in the closure of lam."""
    if dim_vector(lam) != dim_vector(mu):
        raise GradingMismatch(f"{lam} and {mu} have different dimension vectors")
    if dim_vector(lam).total > cfg.cap:
        raise CapExceeded(f"total dimension {dim_vector(lam).total} exceeds --cap {cfg.cap}")
    closed = counted = None
    if cfg.method in ("closed", "both"):
        if lam.num_rows > 2 or mu.num_rows > 2:
            raise ParseError("--method closed needs multisegments with at most two rows")
        closed = tworow.closed_g(lam, mu) if tworow.leq_tworow(lam, mu) else None
    if cfg.method in ("count", "both"):
        if lam == mu:
            counted = IntPoly.one()
        elif ffcount.is_nonempty(lam, mu, cfg.count_method):
            counted = ffcount.interpolate_g(lam, mu, cfg.primes, cfg.count_method)
    if cfg.method == "both" and closed != counted:
        raise ConsistencyError(f"closed form {closed} and count {counted} disagree for ({lam} ; {mu})")
    return counted if cfg.method == "count" else closed


def cmd_gpoly(cfg: RunConfig, out) -> int:
    if cfg.lam is None or cfg.mu is None:
        raise ParseError("gpoly needs --lambda and --mu")
    g = fibre_polynomial(cfg, cfg.lam, cfg.mu)
    if cfg.fmt == "json":
        json.dump({"lambda": str(cfg.lam), "mu": str(cfg.mu), "g": list(g) if g is not None else [],
                   "comparable": g is not None}, out)
        out.write("\n")
    else:
        out.write((render(g) if g is not None else "0 (mu not ≤ lambda)") + "\n")
    return EXIT_OK


def cmd_ic(cfg: RunConfig, out) -> int:
    d = _need_dim(cfg)
    poset = build_poset(d, cfg.two_row, cfg.cap, cfg.count_method)
    if cfg.method == "count":
        g = g_matrix(poset, "count", cfg.primes, cfg.count_method)
    else:
        if not cfg.two_row:
            raise ParseError("--method closed/both needs --two-row")
        g = g_matrix(poset, "closed")
        if cfg.method == "both":
            counted = g_matrix(poset, "count", cfg.primes, cfg.count_method)
            bad = [pm for pm in g if g[pm] != counted[pm]]
            if bad:
                lam, mu = bad[0]
                raise ConsistencyError(f"closed form and count disagree for ({lam} ; {mu})")
    table = deconvolve(poset, g)
    if reconstruct(table) != g:
        raise ConsistencyError("IC table does not reconstruct the fibre polynomials")
    pairs = table.pairs()
    if cfg.fmt == "json":
        doc = {
            "n": d.n,
            "dim": list(d.counts),
            "orbits": [_orbit_record(ms) for ms in poset.orbits],
            "pairs": [
                {
                    "lambda": str(lam),
                    "mu": str(mu),
                    "ktilde": list(table.ktilde(lam, mu)),
                    "a": {str(j): m for j, m in table.a(lam, mu).items()},
                }
                for lam, mu in pairs
            ],
        }
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for lam, mu in pairs:
            a = ", ".join(f"{j}:{m}" for j, m in table.a(lam, mu).items())
            out.write(f"({str(lam) or '0'} ; {str(mu) or '0'})  ktilde = {render(table.ktilde(lam, mu))}  a = {{{a}}}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites; each returns a Report


def suite_tworow(cfg: RunConfig) -> Report:
    report = Report()
    for n in range(1, cfg.n_max + 1):
        for d in dim_vectors(n, cfg.d_max):
            report.extend(verify_tworow(d, cfg.primes, cfg.count_method))
    return report


def suite_green(cfg: RunConfig) -> Report:
    report = Report()
    for s1 in range(cfg.s_max + 1):
        for s2 in range(cfg.s_max - s1 + 1):
            poly = tworow.green_poly(s1, s2)
            for p in (2, 3, 5):
                got = ffcount.springer_count(s1, s2, p, cfg.count_method)
                status = "pass" if got == poly(p) else "theorem"
                report.add(f"green ({s1},{s2}) p={p}", status, f"count {got}, polynomial {poly(p)}")
                report.pairs += 1
    return report


def suite_epsilon(cfg: RunConfig) -> Report:
    from .core import Segment

    report = Report()
    for n in range(1, cfg.n_max + 1):
        for total in range(1, cfg.len_max + 1):
            for l1 in range((total + 1) // 2, total + 1):
                l2 = total - l1
                starts2 = range(n) if l2 else [None]
                for i1 in range(n):
                    for i2 in starts2:
                        segs = (Segment(i1, l1),) + ((Segment(i2, l2),) if l2 else ())
                        ms = Multisegment(n, segs)
                        report.pairs += 1
                        a, b = tworow.epsilon_closed(ms), epsilon_rows(ms)
                        if a != b:
                            report.add(f"epsilon {ms} n={n}", "theorem", f"closed {a}, rows {b}")
    report.add(f"epsilon sweep n<={cfg.n_max} l1+l2<={cfg.len_max}")
    return report


def suite_closure(cfg: RunConfig) -> Report:
    report = Report()
    for n in range(1, cfg.n_max + 1):
        for d in dim_vectors(n, cfg.d_max):
            orbits = enumerate_multisegments(d, True, max(d.total, 1))
            for lam in orbits:
                for mu in orbits:
                    report.pairs += 1
                    fibre = lam == mu or ffcount.is_nonempty(lam, mu, cfg.count_method)
                    if fibre != tworow.leq_tworow(lam, mu):
                        report.add(f"closure ({lam} ; {mu})", "theorem", f"fibre nonempty={fibre}")
    report.add(f"closure sweep n<={cfg.n_max} d<={cfg.d_max}")
    return report


def suite_kostka(cfg: RunConfig) -> Report:
    report = Report()
    for d in range(1, cfg.d_max + 1):
        sub = kostka_crosscheck(d, prime_list=cfg.primes, method=cfg.count_method, strict=False)
        report.extend(sub)
    return report


def suite_shifted(cfg: RunConfig) -> Report:
    report = Report()
    lam = parse_multisegment("0:4,0:1", 2)
    mu = parse_multisegment("0:2,0:2,0:1", 2)
    poset = build_poset(dim_vector(lam), method=cfg.count_method)
    records: list = []
    g = g_matrix(poset, "count", cfg.primes, cfg.count_method, records)
    table = deconvolve(poset, g)
    report.posets, report.pairs = 1, len(g)
    report.held_out_checks = sum(len(fit.held_out) for _, fit in records)
    if reconstruct(table) != g:
        report.add("shifted reconstruction", "internal", "table does not regenerate g")
    a = table.a(lam, mu)
    report.add("shifted a(0:4,0:1 ; 0:2,0:2,0:1)", "pass" if a == {-1: 1, 1: 1} else "theorem", str(a))
    return report


SUITE_FUNCS = {
    "tworow": suite_tworow,
    "green": suite_green,
    "epsilon": suite_epsilon,
    "closure": suite_closure,
    "kostka": suite_kostka,
    "shifted": suite_shifted,
}


def cmd_verify(cfg: RunConfig, out) -> int:
    names = list(SUITE_FUNCS) if cfg.suite == "all" else [cfg.suite]
    code = EXIT_OK
    summary = {}
    for name in names:
        start = time.perf_counter()
        try:
            report = SUITE_FUNCS[name](cfg)
        except ConsistencyError as exc:
            report = Report()
            report.add(name, "internal", str(exc))
        elapsed = time.perf_counter() - start
        code = max(code, report.exit_code)
        failures = [r for r in report.results if r.status != "pass"]
        summary[name] = {
            "ok": report.ok,
            "seconds": round(elapsed, 3),
            "summary": report.summary(),
            "failures": [{"name": r.name, "status": r.status, "detail": r.detail} for r in failures],
        }
        if cfg.fmt != "json":
            out.write(f"{name}: {'PASS' if report.ok else 'FAIL'}  {report.summary()}  ({elapsed:.2f}s)\n")
            for r in failures[:20]:
                out.write(f"  [{r.status}] {r.name}: {r.detail}\n")
    if cfg.fmt == "json":
        json.dump({"exit_code": code, "suites": summary}, out, indent=2)
        out.write("\n")
    return code


COMMANDS = {"enumerate": cmd_enumerate, "poset": cmd_poset, "gpoly": cmd_gpoly, "ic": cmd_ic, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = make_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](cfg, out)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (QuiverError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
