"""Table of |Gr_k(n)(F_p)| from the decomposition-free oracle next to the q-binomial."""

import argparse
import time

from qrat.finschubert import RAW_BUDGET, ROW_TABLE_LIMIT, count_grassmannian_raw, count_flags
from qrat.qpoly import poly_eval_int, q_binomial, q_factorial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--primes", default="2,3")
    args = ap.parse_args()
    for p in map(int, args.primes.split(",")):
        print(f"p = {p}")
        for n in range(args.max_n + 1):
            for k in range(n + 1):
                t0 = time.perf_counter()
                got = count_grassmannian_raw(k, n, p)
                want = poly_eval_int(q_binomial(n, k), p)
                route = "exhaustive" if p ** (k * n) <= RAW_BUDGET and p**n <= ROW_TABLE_LIMIT else "merged"
                print(f"  Gr_{k}({n}) = {got:>8}  q-binomial {want:>8}  {route:<10} {time.perf_counter() - t0:.2f}s")
        for n in range(1, 5 if p == 2 else 4):
            print(f"  Fl({n}) = {count_flags(n, p)}  [{n}]_p! = {poly_eval_int(q_factorial(n), p)}")


if __name__ == "__main__":
    main()
