"""Plain-text figure output for snake graphs: ASCII, SVG 1.1 and TikZ.

Everything here is a pure function of its inputs, so repeated runs give
identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import build_fence, fence_to_dot, ideal_lattice_to_dot
from .ratcf import EvenContinuedFraction
from .snakegraph import Partition, SnakeGraph, SnakePath, enumerate_paths, lambda_mu_explicit, path_vertices, snake_of

UNIT = 40  # svg pixels per grid unit
PAD = 10
PANEL_GAP = 20


@dataclass
class FigureOptions:
    shade: bool = False  # draw the mu region of the bounding lambda diagram
    paths: bool = False  # one panel per lattice path


def mu_cells(g: SnakeGraph, mu: Partition) -> list[tuple[int, int]]:
    """Grid squares of mu, with row 1 of mu along the top of the snake."""
    h = g.height
    return [(x, h - 1 - i) for i in range(h) for x in range(mu[i])]


def to_ascii(g: SnakeGraph, mu: Partition | None = None) -> str:
    """One character per grid square, top row first: '#' tile, '.' mu, ' ' empty."""
    tiles = g.cell_set
    shaded = set(mu_cells(g, mu)) if mu is not None else set()
    lines = []
    for y in range(g.height - 1, -1, -1):
        row = "".join("#" if (x, y) in tiles else "." if (x, y) in shaded else " " for x in range(g.width))
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


def _svg_panel(g: SnakeGraph, mu: Partition | None, path: SnakePath | None, ox: int) -> list[str]:
    h = g.height

    def X(x):
        return ox + PAD + x * UNIT

    def Y(y):
        return PAD + (h - y) * UNIT

    out = []
    if mu is not None:
        for x, y in mu_cells(g, mu):
            out.append(f'<rect class="mu" x="{X(x)}" y="{Y(y + 1)}" width="{UNIT}" height="{UNIT}" fill="#bbbbbb"/>')
    for x, y in g.cells:
        out.append(
            f'<rect class="tile" x="{X(x)}" y="{Y(y + 1)}" width="{UNIT}" height="{UNIT}" '
            'fill="none" stroke="black" stroke-width="1"/>'
        )
    if path is not None:
        pts = " ".join(f"{X(x)},{Y(y)}" for x, y in path_vertices(path))
        out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="red" stroke-width="3"/>')
    return out


def to_svg(g: SnakeGraph, mu: Partition | None = None, paths: list[SnakePath] | None = None) -> str:
    panels = paths if paths else [None]
    pw = g.width * UNIT + 2 * PAD
    width = len(panels) * pw + (len(panels) - 1) * PANEL_GAP
    height = g.height * UNIT + 2 * PAD
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for i, p in enumerate(panels):
        lines.append(f'<g id="panel{i}">')
        lines.extend("  " + s for s in _svg_panel(g, mu, p, i * (pw + PANEL_GAP)))
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_tikz(g: SnakeGraph, mu: Partition | None = None, paths: list[SnakePath] | None = None) -> str:
    panels = paths if paths else [None]
    lines = ["\\begin{tikzpicture}"]
    for i, p in enumerate(panels):
        dx = i * (g.width + 1)
        lines.append(f"\\begin{{scope}}[xshift={dx}cm]")
        if mu is not None:
            for x, y in mu_cells(g, mu):
                lines.append(f"  \\fill[gray, opacity=0.5] ({x},{y}) rectangle ({x + 1},{y + 1});")
        for x, y in g.cells:
            lines.append(f"  \\draw ({x},{y}) rectangle ({x + 1},{y + 1});")
        if p is not None:
            pts = " -- ".join(f"({x},{y})" for x, y in path_vertices(p))
            lines.append(f"  \\draw[red, very thick] {pts};")
        lines.append("\\end{scope}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def snake_figure(cf: EvenContinuedFraction, fmt: str, opts: FigureOptions | None = None) -> str:
    opts = opts or FigureOptions()
    g = snake_of(cf)
    mu = lambda_mu_explicit(cf)[1] if opts.shade else None
    paths = enumerate_paths(g) if opts.paths else None
    if fmt == "ascii":
        text = to_ascii(g, mu)
        if paths:
            text += "".join(f"path {i}: {p}\n" for i, p in enumerate(paths))
        return text
    if fmt == "svg":
        return to_svg(g, mu, paths)
    if fmt == "tikz":
        return to_tikz(g, mu, paths)
    if fmt == "dot":
        f = build_fence(cf)
        return fence_to_dot(f) + ideal_lattice_to_dot(f)
    raise ValueError(f"unknown figure format {fmt!r}")
