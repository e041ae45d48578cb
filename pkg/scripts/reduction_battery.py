#!/usr/bin/env python3
"""Random 3-CNF battery for the fixed-diameter gadget: SAT oracle vs. exact solvers."""

import argparse
import csv
import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from mvsets import reduction as red

FIELDS = ["idx", "n", "l", "d", "sat", "alpha", "target", "mu_i", "mu_t_i", "mu_d_i", "mu_o_i", "passed"]


def one(job):
    idx, F, d = job
    rep = red.verify_claims(F, d)
    s = rep.sigma
    return {"idx": idx, "n": rep.n, "l": rep.l, "d": d, "sat": int(rep.satisfiable),
            "alpha": rep.alpha, "target": rep.target, "mu_i": s["mv"], "mu_t_i": s["total"],
            "mu_d_i": s["dual"], "mu_o_i": s["outer"], "passed": int(rep.passed)}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--l-max", type=int, default=8)
    ap.add_argument("-d", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    formulas = [red.complete_unsat_formula(), red.split_unsat_formula(), red.sample_formula()]
    while len(formulas) < args.count + 3:
        n = rng.randint(3, args.n_max)
        l = rng.randint(math.ceil(2 * n / 3), args.l_max)
        formulas.append(red.random_formula(rng, n, l))
    jobs = [(i, F, d) for i, F in enumerate(formulas) for d in args.d]

    t = time.time()
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(one, jobs, chunksize=4))
    else:
        rows = [one(j) for j in jobs]
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.DictWriter(out, FIELDS)
    w.writeheader()
    w.writerows(rows)
    failed = sum(1 - r["passed"] for r in rows)
    print(f"# {len(rows)} runs, {failed} failures, {time.time() - t:.1f}s", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
