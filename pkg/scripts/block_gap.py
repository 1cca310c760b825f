"""How far is the block-construction bound l*ceil(m/l) from the true w_X?

Draws small random biregular graphs, computes w_X exhaustively and prints
the gap.  Regular graphs (l = k) always have w_X = l, so they show the
largest gaps.
"""
import argparse
import math
import random
from collections import Counter

from bipinterval import BudgetExceeded, SearchBudget, exact_w, random_biregular
from bipinterval.graph import random_signature


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=40)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-l", type=int, default=3)
    ap.add_argument("--max-edges", type=int, default=14)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    gaps = Counter()
    done = 0
    while done < args.samples:
        sig = random_signature(rng, args.max_m, args.max_l)
        if sig.m * sig.l > args.max_edges:
            continue
        G = random_biregular(sig, rng.getrandbits(63))
        bound = sig.l * math.ceil(sig.m / sig.l)
        try:
            w, _ = exact_w(G, "X", SearchBudget(max_nodes=2_000_000, time_limit=30))
        except BudgetExceeded:
            print(f"Bip{sig.as_tuple()}: budget exhausted")
            continue
        done += 1
        gaps[bound - w] += 1
        print(f"Bip{sig.as_tuple()}: w_X={w} bound={bound}")
    print("gap histogram:", dict(sorted(gaps.items())))


if __name__ == "__main__":
    main()
