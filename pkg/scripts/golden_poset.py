"""Write the closure diagram of the two-row orbits with d = (3, 3), n = 2, as DOT."""

import argparse
import sys

from cyclic_quiver.cli import main

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="2")
    ap.add_argument("--dim", default="3,3")
    ap.add_argument("-o", "--output")
    a = ap.parse_args()
    out = open(a.output, "w") if a.output else sys.stdout
    code = main(["poset", "--n", a.n, "--dim", a.dim, "--two-row", "--dot"], out=out)
    if a.output:
        out.close()
    raise SystemExit(code)
