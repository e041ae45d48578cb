#!/usr/bin/env python3
"""Product, join and triangle-free propositions over all small factors."""

import argparse
import json
import time

from mvsets import census as cen
from mvsets import constructions as con
from mvsets import graphcore as gc
from mvsets import structure as st


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--factor-n", type=int, default=4, help="max factor order for products and joins")
    ap.add_argument("--strong-n", type=int, default=5, help="max order of G in G x K_k")
    ap.add_argument("--triangle-free-n", type=int, default=8)
    args = ap.parse_args()

    out = {}
    t = time.time()
    out["cartesian_edge_critical"] = cen.prop_cartesian_edge_critical(args.factor_n)
    out["join_dense_diamond"] = cen.prop_join_dense_diamond(args.factor_n)
    out["strong_join"] = cen.prop_strong_join(args.strong_n)
    out["strong_independent_total"] = cen.prop_strong_independent_total(args.strong_n)
    count, bad = cen.prop_triangle_free_c5(args.triangle_free_n)
    out["triangle_free_c5"] = {"hypotheses_met": count, "failures": bad}
    out["family_g"] = [gc.to_graph6(G) for G in con.family_g_members(12)
                       if not (st.is_edge_critical(G)[0] and gc.diameter(G) == 2)]
    out["seconds"] = round(time.time() - t, 2)
    print(json.dumps(out, indent=2))
    failures = [k for k, v in out.items() if isinstance(v, list) and v] + (["triangle_free_c5"] if bad else [])
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
