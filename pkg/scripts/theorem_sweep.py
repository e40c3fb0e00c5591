"""Two-row sweep over all dimension vectors, one line per (n, total) block."""

import argparse
import json
import time
from collections import defaultdict
from dataclasses import asdict, dataclass

from cyclic_quiver.core import dim_vectors
from cyclic_quiver.decompose import Report, verify_tworow


@dataclass
class SweepConfig:
    n_max: int = 4
    d_max: int = 6
    method: str = "cells"
    out: str | None = None


def run(cfg: SweepConfig) -> dict:
    rows = []
    totals = Report()
    for n in range(1, cfg.n_max + 1):
        blocks = defaultdict(Report)
        start = defaultdict(float)
        for d in dim_vectors(n, cfg.d_max):
            t0 = time.perf_counter()
            blocks[d.total].extend(verify_tworow(d, method=cfg.method))
            start[d.total] += time.perf_counter() - t0
        for total in sorted(blocks):
            rep = blocks[total]
            totals.extend(rep)
            rows.append(dict(n=n, total=total, posets=rep.posets, pairs=rep.pairs, ok=rep.ok, seconds=round(start[total], 3)))
            print(f"n={n} d={total:>2}  posets={rep.posets:>4}  pairs={rep.pairs:>4}  {'ok' if rep.ok else 'FAIL'}  {start[total]:.2f}s")
    print(totals.summary())
    result = dict(config=asdict(cfg), rows=rows, ok=totals.ok)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(result, fh, indent=2)
    return result


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--d-max", type=int, default=6)
    ap.add_argument("--method", choices=("cells", "exhaustive"), default="cells")
    ap.add_argument("--out")
    a = ap.parse_args()
    raise SystemExit(0 if run(SweepConfig(a.n_max, a.d_max, a.method, a.out))["ok"] else 1)
