"""Compare the cell-weighted fibre count with full subspace enumeration."""

import argparse
import time
from dataclasses import dataclass

from cyclic_quiver import ffcount
from cyclic_quiver.core import dim_vectors, enumerate_multisegments


@dataclass
class BenchConfig:
    n: int = 2
    d_max: int = 5
    p: int = 2


def bench(cfg: BenchConfig):
    pairs = []
    for d in dim_vectors(cfg.n, cfg.d_max):
        orbits = enumerate_multisegments(d, cap=max(d.total, 1))
        pairs += [(lam, mu) for lam in orbits for mu in orbits]
    timings = {}
    counts = {}
    for method in ffcount.METHODS:
        ffcount.clear_cache()
        t0 = time.perf_counter()
        counts[method] = [ffcount.count_fibre_points(lam, mu, cfg.p, method) for lam, mu in pairs]
        timings[method] = time.perf_counter() - t0
    agree = counts["cells"] == counts["exhaustive"]
    print(f"{len(pairs)} pairs at p={cfg.p}: " + ", ".join(f"{m} {t:.2f}s" for m, t in timings.items()), "agree" if agree else "DISAGREE")
    return agree


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--d-max", type=int, default=5)
    ap.add_argument("--p", type=int, default=2)
    a = ap.parse_args()
    raise SystemExit(0 if bench(BenchConfig(a.n, a.d_max, a.p)) else 1)
