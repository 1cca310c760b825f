"""Minimum width of collected n-regular n-compressed m-row matrices versus ceil(m/n)*n."""
import argparse

from bipinterval import census_min_width, lemma1_bound
from bipinterval.matrix import census_instances


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--wmax", type=int, default=10)
    args = ap.parse_args()
    print(" m  n  census  bound  #minimal")
    for m in range(1, args.max_m + 1):
        for n in range(1, args.max_n + 1):
            w = census_min_width(m, n, args.wmax)
            count = sum(1 for _ in census_instances(m, n, w)) if w else 0
            print(f"{m:>2} {n:>2} {str(w):>7} {lemma1_bound(m, n):>6} {count:>9}")


if __name__ == "__main__":
    main()
