"""Write the snake, lambda/mu and fence figures for the worked examples into figures/."""

import argparse
from pathlib import Path

from qrat.figures import FigureOptions, snake_figure
from qrat.ratcf import cf_expand, parse_rational

SNAKES = ["4/1", "13/8", "11/4"]
SHADED = ["4/1", "12/5", "31/18"]
FENCES = ["7/3"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    jobs = []
    for t in SNAKES:
        jobs += [(t, fmt, FigureOptions()) for fmt in ("ascii", "svg", "tikz")]
    for t in SHADED:
        jobs += [(t, fmt, FigureOptions(shade=True)) for fmt in ("ascii", "svg", "tikz")]
    jobs += [("7/3", fmt, FigureOptions(paths=True)) for fmt in ("svg", "tikz")]
    jobs += [(t, "dot", FigureOptions()) for t in FENCES]

    ext = {"ascii": "txt", "svg": "svg", "tikz": "tex", "dot": "dot"}
    for t, fmt, opts in jobs:
        tag = "shaded" if opts.shade else "paths" if opts.paths else "plain"
        name = f"{t.replace('/', '_')}_{tag}.{ext[fmt]}"
        (out / name).write_text(snake_figure(cf_expand(parse_rational(t)), fmt, opts), encoding="utf-8")
        print(out / name)


if __name__ == "__main__":
    main()
