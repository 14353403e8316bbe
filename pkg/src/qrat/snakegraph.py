"""Snake graphs G(r/s), their lattice paths, and the boundary partitions.

Grid conventions: tile ``(x, y)`` is the unit square [x, x+1] x [y, y+1];
the first tile sits at the origin and each letter of the word moves one tile
right (R) or up (U).  Partitions are listed largest part first (English
notation): row 1 of lambda is the top row of the snake.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .qpoly import IntPolynomial
from .ratcf import EvenContinuedFraction

R, U = "R", "U"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(int(x) for x in parts)
        if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")
        p = tuple(x for x in p if x)
        object.__setattr__(self, "parts", p)

    @classmethod
    def from_multiplicities(cls, pairs: Iterable[tuple[int, int]]) -> Partition:
        """Build from (part, multiplicity) pairs, largest part first."""
        out = []
        for part, mult in pairs:
            out.extend([part] * mult)
        return cls(out)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """0-indexed part, 0 past the end."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self.parts) > k:
            raise ValueError(f"{self} has more than {k} parts")
        return self.parts + (0,) * (k - len(self.parts))

    def __le__(self, other: Partition) -> bool:
        return len(self) <= len(other) and all(a <= other[i] for i, a in enumerate(self.parts))

    def __lt__(self, other: Partition) -> bool:
        return self <= other and self != other

    def __ge__(self, other: Partition) -> bool:
        return other <= self

    def __gt__(self, other: Partition) -> bool:
        return other < self

    def fits_box(self, k: int, width: int) -> bool:
        return len(self) <= k and (not self.parts or self.parts[0] <= width)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition(())


def snake_word(cf: EvenContinuedFraction) -> str:
    """R^(a1-1) U^a2 R^a3 ... R^a(2m-1) U^(a2m - 1)."""
    last = len(cf.terms) - 1
    out = []
    for i, a in enumerate(cf.terms):
        n = a - (1 if i in (0, last) else 0)
        out.append((R if i % 2 == 0 else U) * n)
    return "".join(out)


def dual_word(w: str) -> str:
    """Toggle the letters in odd (1-indexed) positions."""
    flip = {R: U, U: R}
    return "".join(flip[c] if i % 2 == 0 else c for i, c in enumerate(w))


@dataclass(frozen=True)
class SnakeGraph:
    word: str
    cells: tuple[tuple[int, int], ...]

    @cached_property
    def cell_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.cells)

    @property
    def width(self) -> int:
        return self.cells[-1][0] + 1

    @property
    def height(self) -> int:
        return self.cells[-1][1] + 1

    @cached_property
    def edges(self) -> frozenset[tuple[tuple[int, int], tuple[int, int]]]:
        """Unit edges of all tiles, as (start, end) pointing right or up."""
        out = set()
        for x, y in self.cells:
            out.add(((x, y), (x + 1, y)))
            out.add(((x, y + 1), (x + 1, y + 1)))
            out.add(((x, y), (x, y + 1)))
            out.add(((x + 1, y), (x + 1, y + 1)))
        return frozenset(out)

    def __len__(self) -> int:
        return len(self.cells)


def build_snake(w: str) -> SnakeGraph:
    x = y = 0
    cells = [(0, 0)]
    for c in w:
        if c == R:
            x += 1
        elif c == U:
            y += 1
        else:
            raise ValueError(f"snake words use R and U only, got {c!r}")
        cells.append((x, y))
    return SnakeGraph(w, tuple(cells))


def snake_of(cf: EvenContinuedFraction) -> SnakeGraph:
    return build_snake(snake_word(cf))


# A path is a string of steps over {R, U} from (0,0) to (width, height).
SnakePath = str


def path_vertices(p: SnakePath) -> list[tuple[int, int]]:
    x = y = 0
    out = [(0, 0)]
    for c in p:
        if c == R:
            x += 1
        else:
            y += 1
        out.append((x, y))
    return out


def enumerate_paths(g: SnakeGraph) -> list[SnakePath]:
    """All monotone corner-to-corner paths along tile edges, lexicographic with R < U."""
    end = (g.width, g.height)
    edges = g.edges
    out: list[str] = []
    steps: list[str] = []

    def dfs(v):
        if v == end:
            out.append("".join(steps))
            return
        x, y = v
        for letter, w in ((R, (x + 1, y)), (U, (x, y + 1))):
            if (v, w) in edges:
                steps.append(letter)
                dfs(w)
                steps.pop()

    dfs((0, 0))
    return out


def cells_above(g: SnakeGraph, p: SnakePath) -> list[tuple[int, int]]:
    # the horizontal step crossing column x sits at height floor[x]
    floor = {}
    x = y = 0
    for c in p:
        if c == R:
            floor[x] = y
            x += 1
        else:
            y += 1
    return [(cx, cy) for cx, cy in g.cells if floor[cx] <= cy]


def path_rank(g: SnakeGraph, p: SnakePath) -> int:
    return len(cells_above(g, p))


def rank_gen_fn(ranks: Iterable[int]) -> IntPolynomial:
    counts: dict[int, int] = {}
    for k in ranks:
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return IntPolynomial(())
    return IntPolynomial(counts.get(i, 0) for i in range(max(counts) + 1))


def snake_rank_gen_fn(g: SnakeGraph) -> IntPolynomial:
    return rank_gen_fn(path_rank(g, p) for p in enumerate_paths(g))


def lambda_mu_explicit(cf: EvenContinuedFraction) -> tuple[Partition, Partition]:
    """Closed-form lambda and mu from cf = [a1, b1, ..., am, bm]."""
    a, b, m = cf.odd_terms, cf.even_terms, cf.m
    lam_parts = [sum(a[: m + 1 - k]) for k in range(1, m + 1)]
    lam_mult = [b[m - k] for k in range(1, m + 1)]
    mu_mult = [lam_mult[0] - 1] + lam_mult[1:]
    lam = Partition.from_multiplicities(zip(lam_parts, lam_mult))
    mu = Partition.from_multiplicities((p - 1, c) for p, c in zip(lam_parts, mu_mult))
    return lam, mu


def _column_path(heights: Sequence[int], top: int) -> SnakePath:
    """Monotone path whose horizontal step over column x sits at heights[x]."""
    out = []
    y = 0
    for h in heights:
        out.append(U * (h - y) + R)
        y = h
    out.append(U * (top - y))
    return "".join(out)


def bottom_boundary(g: SnakeGraph) -> SnakePath:
    """Path along the lower-right edge of the snake (follows each column's floor)."""
    floor: dict[int, int] = {}
    for x, y in g.cells:
        floor[x] = min(floor.get(x, y), y)
    return _column_path([floor[x] for x in range(g.width)], g.height)


def top_boundary(g: SnakeGraph) -> SnakePath:
    """Path along the upper-left edge of the snake (follows each column's ceiling)."""
    ceil: dict[int, int] = {}
    for x, y in g.cells:
        ceil[x] = max(ceil.get(x, y + 1), y + 1)
    return _column_path([ceil[x] for x in range(g.width)], g.height)


def _row_offsets(p: SnakePath) -> dict[int, int]:
    """For each row y, the x coordinate where p climbs through it."""
    out = {}
    x = y = 0
    for c in p:
        if c == R:
            x += 1
        else:
            out[y] = x
            y += 1
    return out


def lambda_mu_from_boundary(g: SnakeGraph) -> tuple[Partition, Partition]:
    """lambda and mu read off the lower and upper boundary paths of g.

    lambda is the diagram whose south-east border is the lower boundary;
    mu is the diagram cut out above the upper boundary, both anchored at the
    top-left corner (0, height).
    """
    lower = _row_offsets(bottom_boundary(g))
    upper = _row_offsets(top_boundary(g))
    h = g.height
    lam = Partition(lower[h - 1 - i] for i in range(h))
    mu = Partition(upper[h - 1 - i] for i in range(h))
    return lam, mu


def boundary_ranks(g: SnakeGraph) -> tuple[int, int]:
    """Ranks of the upper boundary path (minimum) and lower one (maximum)."""
    return path_rank(g, top_boundary(g)), path_rank(g, bottom_boundary(g))


def paths_by_rank(g: SnakeGraph) -> dict[int, list[SnakePath]]:
    out: dict[int, list[SnakePath]] = {}
    for p in enumerate_paths(g):
        out.setdefault(path_rank(g, p), []).append(p)
    return out


def path_partition(g: SnakeGraph, p: SnakePath, mu: Partition) -> Partition:
    """The partition nu = mu + (tiles above p), as rows listed top-down."""
    rows = [0] * g.height
    for x, y in cells_above(g, p):
        rows[g.height - 1 - y] += 1
    return Partition(mu[i] + rows[i] for i in range(g.height))
