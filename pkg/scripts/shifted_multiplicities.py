"""Search full orbit posets for pairs with a nonzero multiplicity at some j != 0.

Two-row pairs never have one. With more rows they appear already at total
dimension 4 for n = 2, e.g. (0:2,1:1,1:1 ; 0:1,1:1,1:1,1:1).
"""

import argparse
from dataclasses import dataclass

from cyclic_quiver.core import dim_vectors
from cyclic_quiver.decompose import build_poset, deconvolve, g_matrix
from cyclic_quiver.poly import render


@dataclass
class SearchConfig:
    n_max: int = 3
    d_max: int = 5
    limit: int = 40


def search(cfg: SearchConfig):
    hits = []
    for n in range(1, cfg.n_max + 1):
        for d in dim_vectors(n, cfg.d_max):
            poset = build_poset(d, cap=max(d.total, 1))
            table = deconvolve(poset, g_matrix(poset))
            for lam, mu in table.pairs():
                a = table.a(lam, mu)
                if any(j != 0 for j in a):
                    hits.append((n, d, lam, mu, a, table.ktilde(lam, mu)))
    return hits


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=5)
    ap.add_argument("--limit", type=int, default=40)
    a = ap.parse_args()
    cfg = SearchConfig(a.n_max, a.d_max, a.limit)
    hits = search(cfg)
    for n, d, lam, mu, a_, k in hits[: cfg.limit]:
        print(f"n={n} d=({d})  ({lam} ; {mu})  a={a_}  ktilde={render(k)}")
    print(f"{len(hits)} pairs with a multiplicity away from j = 0")
