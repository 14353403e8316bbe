"""Run the invariant sweep and dump per-instance results as JSON lines.

    python3 scripts/run_sweep.py --max-r 40 --fields 2 --theorem-max-r 40 --out sweep.jsonl
"""

import argparse
import json
import logging
import sys
import time

from qrat.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-r", type=int, default=40)
    ap.add_argument("--fields", default="2")
    ap.add_argument("--theorem-max-r", type=int, default=None)
    ap.add_argument("--out", default=None, help="JSON lines file (default: none)")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    cfg = SweepConfig(
        max_r=args.max_r,
        fields=tuple(int(p) for p in args.fields.split(",")),
        theorem_max_r=args.theorem_max_r,
    )
    t0 = time.perf_counter()
    summary = run_sweep(cfg)
    elapsed = time.perf_counter() - t0

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for res in summary.results:
                row = {"r": res.x.r, "s": res.x.s, **res.checks}
                row.update({f"theorem_p{p}": ok for p, ok in res.theorem.items()})
                fh.write(json.dumps(row) + "\n")
    print(summary.matrix())
    print(f"elapsed {elapsed:.1f}s")
    sys.exit(0 if summary.ok else 1)


if __name__ == "__main__":
    main()
