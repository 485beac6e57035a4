"""Run the exhaustive lattice scan and compare it with the tree.

Prints each side pair found in the box, how many congruence classes realize
it, its orientation flags, and whether the tree predicts it.
"""

import argparse
import time

from elep.search import realize, scan
from elep.tree import enumerate_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("max_coord", type=int, nargs="?", default=30)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = scan(args.max_coord, args.jobs)
    dt = time.perf_counter() - t0

    tree = {n.ab for n in enumerate_tree(12, 40 * args.max_coord).walk()}
    fitting = {ab for ab in tree if realize(*ab).fits(args.max_coord)}
    print(f"box [-{args.max_coord}, {args.max_coord}]^2 scanned in {dt:.2f}s")
    for f in report.found:
        flags = [k for k, v in vars(f.flags).items() if v]
        print(f"  ({f.a},{f.b})  classes={f.count_of_congruence_classes}  "
              f"presentations={f.presentations}  in_tree={(f.a, f.b) in tree}  {' '.join(flags)}")
    missing = fitting - set(report.pairs)
    print(f"anomalies: {len(report.anomalies)}; tree pairs whose realization fits but were not found: {sorted(missing)}")


if __name__ == "__main__":
    main()
