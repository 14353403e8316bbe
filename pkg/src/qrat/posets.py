"""Fence posets, their order ideals, intervals in Young's lattice, and the
classical generating-function oracles (inversions, lattice paths in a box).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetError, ContainmentError
from .qpoly import ONE, ZERO, IntPolynomial
from .ratcf import EvenContinuedFraction
from .snakegraph import Partition, rank_gen_fn

UP, DOWN = "<", ">"


@dataclass(frozen=True)
class FencePoset:
    """Elements 0..size-1 in a zigzag; ``steps[i]`` relates element i to i+1.

    ``"<"`` means x_i < x_(i+1), ``">"`` means x_i > x_(i+1).
    """

    steps: str

    @property
    def size(self) -> int:
        return len(self.steps) + 1

    @property
    def covers(self) -> frozenset[tuple[int, int]]:
        """Cover relations as (lower, upper) pairs."""
        return frozenset((i, i + 1) if c == UP else (i + 1, i) for i, c in enumerate(self.steps))

    def runs(self) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        for c in self.steps:
            if out and out[-1][0] == c:
                out[-1] = (c, out[-1][1] + 1)
            else:
                out.append((c, 1))
        return out


def build_fence(cf: EvenContinuedFraction) -> FencePoset:
    """Up a1-1 times, down a2, up a3, ..., down a2m - 1."""
    last = len(cf.terms) - 1
    steps = []
    for i, a in enumerate(cf.terms):
        n = a - 1 if i in (0, last) else a
        steps.append((UP if i % 2 == 0 else DOWN) * n)
    return FencePoset("".join(steps))


def _allowed(step: str, prev_in: bool, cur_in: bool) -> bool:
    # x_i < x_(i+1): x_(i+1) in ideal forces x_i;  x_i > x_(i+1): the reverse
    if step == UP:
        return prev_in or not cur_in
    return cur_in or not prev_in


def enumerate_ideals(f: FencePoset) -> list[frozenset[int]]:
    """All order ideals, excluding an element before including it at each step."""
    out: list[frozenset[int]] = []
    chosen: list[int] = []

    def dfs(i: int, prev_in: bool):
        if i == f.size:
            out.append(frozenset(chosen))
            return
        for cur_in in (False, True):
            if i > 0 and not _allowed(f.steps[i - 1], prev_in, cur_in):
                continue
            if cur_in:
                chosen.append(i)
            dfs(i + 1, cur_in)
            if cur_in:
                chosen.pop()

    dfs(0, False)
    return out


def ideal_rank_gen_fn(f: FencePoset) -> IntPolynomial:
    """Sum of q^|I| over order ideals, by a left-to-right transfer over the fence."""
    # out_poly / in_poly: generating functions of valid prefixes by last state
    out_poly, in_poly = ONE, IntPolynomial((0, 1))
    for step in f.steps:
        new_out, new_in = ZERO, ZERO
        for prev_in, poly in ((False, out_poly), (True, in_poly)):
            if _allowed(step, prev_in, False):
                new_out = new_out + poly
            if _allowed(step, prev_in, True):
                new_in = new_in + poly.shift(1)
        out_poly, in_poly = new_out, new_in
    return out_poly + in_poly


def is_order_ideal(f: FencePoset, members: frozenset[int]) -> bool:
    return all(lo in members for lo, hi in f.covers if hi in members)


def ideals_by_filter(f: FencePoset, max_size: int = 20) -> list[frozenset[int]]:
    """Brute force over all subsets; test oracle for ``enumerate_ideals``."""
    if f.size > max_size:
        raise BudgetError(f"subset filter limited to {max_size} elements, got {f.size}")
    out = []
    for mask in range(1 << f.size):
        s = frozenset(i for i in range(f.size) if mask >> i & 1)
        if is_order_ideal(f, s):
            out.append(s)
    return out


def ideal_lattice_covers(ideals: list[frozenset[int]]) -> list[tuple[int, int]]:
    """Cover pairs (i, j) of the ideal lattice, as indices into ``ideals``."""
    out = []
    for i, s in enumerate(ideals):
        for j, t in enumerate(ideals):
            if len(t) == len(s) + 1 and s < t:
                out.append((i, j))
    return out


def young_interval(mu: Partition, lam: Partition) -> Iterator[Partition]:
    """Stream every nu with mu <= nu <= lam.

    Rows are filled from the bottom of lam upward, with
    max(mu_i, nu_(i+1)) <= nu_i <= lam_i.
    """
    if not mu <= lam:
        raise ContainmentError(f"{mu} is not contained in {lam}")
    n = len(lam)
    rows = [0] * n

    def fill(i: int, below: int):
        if i < 0:
            yield Partition(rows)
            return
        for v in range(max(mu[i], below), lam[i] + 1):
            rows[i] = v
            yield from fill(i - 1, v)

    yield from fill(n - 1, 0)


def interval_gen_fn(mu: Partition, lam: Partition) -> IntPolynomial:
    base = mu.size
    return rank_gen_fn(nu.size - base for nu in young_interval(mu, lam))


def partitions_in_box(k: int, width: int) -> Iterator[Partition]:
    """All partitions with at most k parts, each at most width."""
    for rows in itertools.combinations_with_replacement(range(width, -1, -1), k):
        yield Partition(rows)


def young_interval_by_filter(mu: Partition, lam: Partition) -> list[Partition]:
    width = lam[0]
    return [nu for nu in partitions_in_box(len(lam), width) if mu <= nu <= lam]


def inversion_count(perm) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def inversion_gen_fn(n: int, max_n: int = 8) -> IntPolynomial:
    if n > max_n:
        raise BudgetError(f"permutation enumeration capped at n={max_n}, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return rank_gen_fn(inversion_count(p) for p in itertools.permutations(range(n)))


def box_path_gen_fn(n: int, k: int, max_n: int = 20) -> IntPolynomial:
    """Sum over paths (0,0)->(n-k,k) of q^(area above the path, below y=k)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > max_n:
        raise BudgetError(f"lattice path enumeration capped at n={max_n}, got {n}")

    def area(ups: tuple[int, ...]) -> int:
        # ups: set of step indices that go up
        y, a = 0, 0
        up = set(ups)
        for i in range(n):
            if i in up:
                y += 1
            else:
                a += k - y
        return a

    return rank_gen_fn(area(c) for c in itertools.combinations(range(n), k))


def fence_to_dot(f: FencePoset, name: str = "fence") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=point];"]
    for i in range(f.size):
        lines.append(f'  x{i + 1} [xlabel="x{i + 1}"];')
    for lo, hi in sorted(f.covers):
        lines.append(f"  x{lo + 1} -> x{hi + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ideal_lattice_to_dot(f: FencePoset, name: str = "ideals") -> str:
    ideals = sorted(enumerate_ideals(f), key=lambda s: (len(s), sorted(s)))
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, s in enumerate(ideals):
        label = "{" + ",".join(f"x{j + 1}" for j in sorted(s)) + "}"
        lines.append(f'  I{i} [label="{label}"];')
    for i, j in ideal_lattice_covers(ideals):
        lines.append(f"  I{i} -> I{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
