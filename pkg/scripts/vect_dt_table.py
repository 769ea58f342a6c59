"""Print delta, epsilon and DT invariants of the stacks of vector spaces."""
import argparse

from hallwc.quiver import SlopeFunction, vect
from hallwc.torus import HallContext, dt_extract


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    ctx = HallContext(vect(), SlopeFunction((0,)))
    print(f"{'n':>2}  {'DT':>6}  epsilon_n")
    for n in range(1, args.max_n + 1):
        ctx.epsilon_coeff((n,))
        print(f"{n:>2}  {str(dt_extract(ctx.epsilon, (n,))):>6}  {ctx.epsilon.get((n,))}")


if __name__ == "__main__":
    main()
