"""Cross the trivial wall of the 2-Kronecker quiver and compare with direct recursion.

Prints the nontrivial S and U~ coefficients for the path given on the
command line (default: scripts/paths/kronecker_across_wall.json) and
checks that the S table maps start deltas onto final deltas.
"""
import argparse
import json
from pathlib import Path

from hallwc.exactalg import RatFunc
from hallwc.freewall import HopSpec, coefficient_tables, compose_hops, nontrivial, path_endpoints
from hallwc.quiver import load_quiver
from hallwc.torus import HallContext, word_twist

DEFAULT = Path(__file__).parent / "paths" / "kronecker_across_wall.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--path", default=str(DEFAULT))
    ap.add_argument("--quiver", default="kronecker2")
    args = ap.parse_args()
    rec = json.loads(Path(args.path).read_text())
    hops = [HopSpec.from_record(h) for h in rec["hops"]]
    bound = tuple(rec["bound"])
    Q = load_quiver(args.quiver)

    tables = coefficient_tables(hops, bound)
    print("S (nontrivial):")
    for w, c in sorted(nontrivial(tables.S).items()):
        print(f"  {w}: {c}")
    print("U~ (nontrivial):")
    for w, c in sorted(nontrivial(tables.Utilde).items()):
        print(f"  {w}: {c}")

    start, final = path_endpoints(hops)
    src, dst = HallContext(Q, start), HallContext(Q, final)
    src.fill(bound)
    sub = compose_hops(hops, bound)
    for alpha, img in sorted(sub.items()):
        value = RatFunc.constant(0)
        for word, c in img.terms.items():
            term = word_twist(Q, word) * c
            for p in word:
                term = term * src.delta.get(p)
            value = value + term
        direct = dst.delta_coeff(alpha)
        print(f"{alpha}: via S {value} | direct {direct} | {'ok' if value == direct else 'MISMATCH'}")


if __name__ == "__main__":
    main()
