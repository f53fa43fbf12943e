#!/usr/bin/env python3
"""Randomized agreement experiment: closure criterion vs brute-force oracle.

Draws random graph sets, decides each with both the closure criterion and
the bounded cyclic-word oracle, and reports agreement plus size statistics.
"""

import argparse
import random
from collections import Counter

from sct import check_sct_criterion, closure, decide_periodic_descent
from sct.oracle import bounded_lasso_oracle

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from helpers import random_graph_set  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-funs", type=int, default=2)
    ap.add_argument("--max-arity", type=int, default=2)
    ap.add_argument("--max-graphs", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    verdicts = Counter()
    closure_sizes = Counter()
    bounds = Counter()
    for _ in range(args.count):
        gs = random_graph_set(rng, args.max_funs, args.max_arity, args.max_graphs)
        cl = closure(gs)
        verdict = check_sct_criterion(gs, cl)
        report = bounded_lasso_oracle(gs, cl.witness_bound)
        assert verdict.sct == (not report.refuted), "criterion and oracle disagree"
        if not verdict.sct:
            assert decide_periodic_descent(verdict.lasso, gs) is None
        verdicts["terminating" if verdict.sct else "counterexample"] += 1
        closure_sizes[len(cl)] += 1
        bounds[cl.witness_bound] += 1

    print(f"{args.count} graph sets, zero disagreements")
    print("verdicts:", dict(verdicts))
    print("closure size distribution:", dict(sorted(closure_sizes.items())))
    print("witness-bound distribution:", dict(sorted(bounds.items())))


if __name__ == "__main__":
    main()
