#!/usr/bin/env python3
"""Success-rate and family-size sweep for the randomized construction.

For each (q, r, t) cell we run `random_family` over a batch of seeds and
record how often it reaches the target size, the mean constructed size,
and the wall time.  A greedy baseline runs once per cell for comparison.

Example:
    python scripts/construction_sweep.py --qs 101 499 997 --rs 2 5 --t 3 --seeds 20
"""

import argparse
import statistics
import time

from lrckit.setfam import (
    GenerationError,
    family_size_upper_bound,
    greedy_family,
    random_family,
    target_family_size,
    verify_union_condition,
)


def sweep_cell(q: int, r: int, t: int, seeds: int) -> dict:
    target = target_family_size(q, r, t)
    sizes = []
    wins = 0
    started = time.perf_counter()
    for seed in range(seeds):
        try:
            fam = random_family(q, r, t, seed)
        except GenerationError:
            continue
        assert verify_union_condition(fam) == []
        sizes.append(fam.m)
        wins += fam.m >= target
    elapsed = time.perf_counter() - started

    g_started = time.perf_counter()
    greedy = greedy_family(q, r, t, candidate_budget=4096, seed=0, target_m=target)
    g_elapsed = time.perf_counter() - g_started
    return {
        "q": q,
        "r": r,
        "t": t,
        "target": target,
        "bound": family_size_upper_bound(q, r, t),
        "rate": wins / seeds,
        "mean_m": statistics.mean(sizes) if sizes else 0.0,
        "sec_per_seed": elapsed / seeds,
        "greedy_m": greedy.m,
        "greedy_sec": g_elapsed,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qs", type=int, nargs="+", default=[101, 499, 997])
    ap.add_argument("--rs", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--t", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=10)
    args = ap.parse_args()

    header = (
        f"{'q':>6} {'r':>3} {'t':>3} {'target':>7} {'bound':>9} "
        f"{'success':>8} {'mean m':>8} {'s/seed':>7} {'greedy m':>9} {'greedy s':>9}"
    )
    print(header)
    print("-" * len(header))
    for q in args.qs:
        for r in args.rs:
            cell = sweep_cell(q, r, args.t, args.seeds)
            print(
                f"{cell['q']:>6} {cell['r']:>3} {cell['t']:>3} {cell['target']:>7} "
                f"{cell['bound']:>9} {cell['rate']:>8.0%} {cell['mean_m']:>8.1f} "
                f"{cell['sec_per_seed']:>7.2f} {cell['greedy_m']:>9} {cell['greedy_sec']:>9.2f}"
            )


if __name__ == "__main__":
    main()
