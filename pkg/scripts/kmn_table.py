"""Exact w_X, w_Y of K_{m,n} by search next to the closed form.

    python scripts/kmn_table.py --max-edges 16
"""
import argparse
import time

from bipinterval import SearchBudget, complete_bipartite, exact_w, kmn_w


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-edges", type=int, default=12)
    ap.add_argument("--max-nodes", type=int, default=5_000_000)
    args = ap.parse_args()
    budget = SearchBudget(max_nodes=args.max_nodes)
    print(f"{'m':>3} {'n':>3} {'w_X':>5} {'form':>5} {'w_Y':>5} {'form':>5} {'sec':>7}")
    for m in range(1, args.max_edges + 1):
        for n in range(1, m + 1):
            if m * n > args.max_edges:
                continue
            K = complete_bipartite(m, n)
            start = time.perf_counter()
            wx, _ = exact_w(K, "X", budget)
            wy, _ = exact_w(K, "Y", budget)
            fx, fy = kmn_w(m, n, "X"), kmn_w(m, n, "Y")
            flag = "" if (wx, wy) == (fx, fy) else "  MISMATCH"
            print(f"{m:>3} {n:>3} {wx:>5} {fx:>5} {wy:>5} {fy:>5} {time.perf_counter() - start:>7.3f}{flag}")


if __name__ == "__main__":
    main()
