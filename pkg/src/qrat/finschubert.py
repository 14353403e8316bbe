"""Brute-force point counts over prime fields.

Points of Gr_k(n) are represented by reduced row echelon k x n matrices with
the leftmost nonzero entry of every row equal to 1 and zeros elsewhere in
pivot columns.  The open Schubert cell of a partition is the set of points
whose pivot columns are the vertical steps of the partition's boundary path,
read from the top-right corner.

Independent counting routes, from most to least trusting:

* ``count_union`` walks cells of a Young interval (trusts the cell
  decomposition);
* ``count_grassmannian_raw`` row-reduces every k x n matrix and deduplicates
  (trusts nothing but row reduction).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetError, ContainmentError
from .posets import partitions_in_box, young_interval
from .qrational import qrational
from .ratcf import ReducedRational, cf_expand, cf_grassmannian_params
from .snakegraph import Partition, lambda_mu_explicit

SUPPORTED_PRIMES = (2, 3, 5, 7)
RAW_BUDGET = 10**8
ROW_TABLE_LIMIT = 4096  # p^n above this makes the packed-row lookup tables too large
STREAM_BUDGET = 10**6


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported field size {self.p}; choose from {SUPPORTED_PRIMES}")

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    @property
    def elements(self) -> range:
        return range(self.p)


def as_field(p) -> PrimeField:
    return p if isinstance(p, PrimeField) else PrimeField(int(p))


PivotSet = tuple  # strictly increasing 1-indexed column labels


def _check_box(lam: Partition, k: int, n: int):
    if not 0 <= k <= n:
        raise ContainmentError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not lam.fits_box(k, n - k):
        raise ContainmentError(f"{lam} does not fit in a {k} x {n - k} box")


def partition_to_pivots(lam: Partition, k: int, n: int) -> PivotSet:
    _check_box(lam, k, n)
    # reading the boundary backwards, row i's vertical step comes after
    # (n - k - lam_i) horizontal steps and i - 1 earlier verticals
    return tuple(i + (n - k) - part for i, part in enumerate(lam.padded(k), start=1))


def pivots_to_partition(piv: Sequence[int], k: int, n: int) -> Partition:
    piv = tuple(piv)
    if len(piv) != k or any(b <= a for a, b in zip(piv, piv[1:])) or (piv and not 1 <= piv[0] <= piv[-1] <= n):
        raise ValueError(f"{piv} is not a {k}-subset of 1..{n}")
    return Partition(i + (n - k) - c for i, c in enumerate(piv, start=1))


def cell_size(lam: Partition, p) -> int:
    return as_field(p).p ** lam.size


def free_positions(piv: Sequence[int], n: int) -> list[tuple[int, int]]:
    """(row, column) slots, 0-indexed, that are free in the echelon pattern."""
    pivset = set(piv)
    out = []
    for i, c in enumerate(piv):
        for col in range(c + 1, n + 1):
            if col not in pivset:
                out.append((i, col - 1))
    return out


@dataclass(frozen=True)
class EchelonPoint:
    k: int
    n: int
    p: int
    pivots: PivotSet
    entries: tuple[tuple[int, ...], ...] = field(repr=False)

    def partition(self) -> Partition:
        return pivots_to_partition(self.pivots, self.k, self.n)

    def row_space(self) -> frozenset[tuple[int, ...]]:
        return span(self.entries, self.p)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.entries)


def enumerate_cell_points(lam: Partition, k: int, n: int, p) -> Iterator[EchelonPoint]:
    """Every echelon matrix in the open cell of lam, free entries in lexicographic order."""
    F = as_field(p)
    piv = partition_to_pivots(lam, k, n)
    slots = free_positions(piv, n)
    base = [[0] * n for _ in range(k)]
    for i, c in enumerate(piv):
        base[i][c - 1] = 1
    for values in itertools.product(F.elements, repeat=len(slots)):
        rows = [r[:] for r in base]
        for (i, j), v in zip(slots, values):
            rows[i][j] = v
        yield EchelonPoint(k, n, F.p, piv, tuple(tuple(r) for r in rows))


def row_reduce(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form mod p; returns (nonzero rows, 1-indexed pivots)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        pivots.append(c + 1)
        rank += 1
    return tuple(tuple(r) for r in m[:rank]), tuple(pivots)


def is_reduced_echelon(pt: EchelonPoint) -> bool:
    rows, piv = row_reduce(pt.entries, pt.p)
    return rows == pt.entries and piv == pt.pivots


def span(rows: Sequence[Sequence[int]], p: int, n: int | None = None) -> frozenset[tuple[int, ...]]:
    if n is None:
        n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                for j, x in enumerate(r):
                    v[j] += c * x
        out.add(tuple(x % p for x in v))
    return frozenset(out)


# -- counting unions of cells -------------------------------------------------


@dataclass(frozen=True)
class UnionCount:
    count: int
    cells: int
    method: str  # "stream": every point generated; "pattern": p ** free slots per cell


def count_union_detail(mu: Partition, lam: Partition, k: int, n: int, p, stream_budget: int = STREAM_BUDGET) -> UnionCount:
    F = as_field(p)
    _check_box(lam, k, n)
    cells = list(young_interval(mu, lam))
    pattern_sizes = [F.p ** len(free_positions(partition_to_pivots(nu, k, n), n)) for nu in cells]
    if sum(pattern_sizes) <= stream_budget:
        # cells are disjoint (distinct pivot sets), so counting streams suffices
        total = sum(sum(1 for _ in enumerate_cell_points(nu, k, n, F)) for nu in cells)
        return UnionCount(total, len(cells), "stream")
    return UnionCount(sum(pattern_sizes), len(cells), "pattern")


def count_union(mu: Partition, lam: Partition, k: int, n: int, p, stream_budget: int = STREAM_BUDGET) -> int:
    return count_union_detail(mu, lam, k, n, p, stream_budget).count


# -- decomposition-free Grassmannian counts ------------------------------------


def _row_tables(n: int, p: int):
    P = p**n
    weights = p ** np.arange(n - 1, -1, -1)
    v = np.arange(P)
    dig = np.stack([(v // p ** (n - 1 - c)) % p for c in range(n)]).astype(np.int32)
    mul = np.stack([((dig * a) % p * weights[:, None]).sum(0) for a in range(p)]).astype(np.int32)
    sub = np.stack(
        [(((dig[:, :, None] - f * dig[:, None, :]) % p) * weights[:, None, None]).sum(0) for f in range(p)]
    ).astype(np.int32)
    inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    return dig, mul, sub, inv


def _decode_row(x: int, n: int, p: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        x, d = divmod(x, p)
        out.append(d)
    return tuple(reversed(out))


def raw_echelon_classes(k: int, n: int, p, budget: int = RAW_BUDGET, batch: int = 1 << 18) -> Counter:
    """Row-reduce every k x n matrix over F_p; count distinct row spaces by pivot set.

    Rows are packed as base-p integers (column 1 most significant) and row
    operations are table lookups, so each batch is a (B, k) integer array.
    """
    F = as_field(p)
    p = F.p
    total = p ** (k * n)
    if total > budget:
        raise BudgetError(f"{p}^({k}*{n}) = {total} matrices exceeds the budget {budget}")
    if p**n > ROW_TABLE_LIMIT:
        raise BudgetError(f"rows of length {n} over F_{p} exceed the lookup-table limit")
    if k == 0:
        return Counter({(): 1})
    P = p**n
    dig, mul, sub, inv = _row_tables(n, p)
    pw = P ** np.arange(k - 1, -1, -1, dtype=np.int64)
    row_ids = np.arange(k)
    keys: set[int] = set()
    for start in range(0, total, batch):
        m = np.arange(start, min(total, start + batch), dtype=np.int64)
        R = ((m[:, None] // pw[None, :]) % P).astype(np.int32)
        rank = np.zeros(R.shape[0], dtype=np.int64)
        for c in range(n):
            cand = (dig[c][R] != 0) & (row_ids[None, :] >= rank[:, None])
            sel = np.nonzero(cand.any(axis=1))[0]
            if sel.size == 0:
                continue
            piv = cand[sel].argmax(axis=1)
            r0 = rank[sel]
            ii = np.arange(sel.size)
            Rs = R[sel]
            pv = Rs[ii, piv]
            pv = mul[inv[dig[c][pv]], pv]
            Rs[ii, piv] = Rs[ii, r0]
            Rs[ii, r0] = pv
            f = dig[c][Rs]
            f[ii, r0] = 0
            R[sel] = sub[f, Rs, pv[:, None]]
            rank[sel] += 1
        full = R[rank == k].astype(np.int64)
        keys.update(np.unique(full @ pw).tolist())
    out: Counter = Counter()
    for key in keys:
        rows = [_decode_row(int((key // int(P ** (k - 1 - i))) % P), n, p) for i in range(k)]
        out[tuple(next(j + 1 for j, x in enumerate(r) if x) for r in rows)] += 1
    return out


def _insert(state: tuple[tuple[int, ...], ...], v: tuple[int, ...], p: int):
    """RREF basis of span(state, v); state is an RREF basis itself."""
    v = list(v)
    for row in state:
        c = next(j for j, x in enumerate(row) if x)
        if v[c]:
            f = v[c]
            v = [(a - f * b) % p for a, b in zip(v, row)]
    lead = next((j for j, x in enumerate(v) if x), None)
    if lead is None:
        return state
    inv = pow(v[lead], -1, p)
    v = tuple((a * inv) % p for a in v)
    rows = []
    for row in state:
        if row[lead]:
            f = row[lead]
            row = tuple((a - f * b) % p for a, b in zip(row, v))
        rows.append(row)
    rows.append(v)
    rows.sort(key=lambda r: next(j for j, x in enumerate(r) if x))
    return tuple(rows)


def _pivot_cols(state) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in state]


def merged_matrix_walk(k: int, n: int, p) -> dict[tuple[tuple[int, ...], ...], int]:
    """Append rows one at a time to every matrix, merging equal partial row spaces.

    For a partial row space of rank r, the p^n candidate next rows fall into
    cosets of that space; each coset has p^r members and a unique member
    vanishing on the pivot columns, so only those representatives are
    row-reduced.  Returns {final RREF basis: number of k x n matrices with
    that row space}; the weights sum to p^(k n).
    """
    F = as_field(p)
    p = F.p
    states: dict = {(): 1}
    for _ in range(k):
        nxt: dict = {}
        for st, w in states.items():
            pivots = _pivot_cols(st)
            free = [j for j in range(n) if j not in pivots]
            weight = w * p ** len(st)
            for values in itertools.product(range(p), repeat=len(free)):
                v = [0] * n
                for j, x in zip(free, values):
                    v[j] = x
                ns = _insert(st, tuple(v), p)
                nxt[ns] = nxt.get(ns, 0) + weight
        states = nxt
    return states


def merged_echelon_classes(k: int, n: int, p) -> Counter:
    out: Counter = Counter()
    for basis in merged_matrix_walk(k, n, p):
        if len(basis) == k:
            out[tuple(next(j + 1 for j, x in enumerate(r) if x) for r in basis)] += 1
    return out


def count_grassmannian_raw(k: int, n: int, p, method: str = "auto", budget: int = RAW_BUDGET) -> int:
    """Number of k-dimensional subspaces of F_p^n, without using Schubert cells.

    ``method="exhaustive"`` row-reduces each of the p^(kn) matrices
    individually and raises BudgetError above ``budget``; ``"merged"`` walks
    the same matrices row by row with shared partial row spaces; ``"auto"``
    picks exhaustive within budget and merged otherwise.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    p = as_field(p).p
    if method == "auto":
        fits = p ** (k * n) <= budget and p**n <= ROW_TABLE_LIMIT
        method = "exhaustive" if fits else "merged"
    if method == "exhaustive":
        return sum(raw_echelon_classes(k, n, p, budget).values())
    if method == "merged":
        return sum(merged_echelon_classes(k, n, p).values())
    raise ValueError(f"unknown method {method!r}")


def raw_count_in_interval(mu: Partition, lam: Partition, k: int, n: int, p, budget: int = RAW_BUDGET) -> int:
    """Distinct row spaces of all k x n matrices whose pivot partition lies in [mu, lam]."""
    classes = raw_echelon_classes(k, n, p, budget)
    return sum(c for piv, c in classes.items() if mu <= pivots_to_partition(piv, k, n) <= lam)


# -- flags ----------------------------------------------------------------------


def all_subspaces(k: int, n: int, p) -> list[EchelonPoint]:
    F = as_field(p)
    return [pt for lam in partitions_in_box(k, n - k) for pt in enumerate_cell_points(lam, k, n, F)]


def count_flags(n: int, p, max_n: int = 4, max_p: int = 3) -> int:
    """Complete flags in F_p^n, counted as containment chains of echelon subspaces."""
    F = as_field(p)
    if n > max_n or F.p > max_p:
        raise BudgetError(f"flag enumeration limited to n <= {max_n}, p <= {max_p}")
    if n < 1:
        raise ValueError("n must be at least 1")
    chains = {frozenset({(0,) * n}): 1}
    for dim in range(1, n):
        layer = {pt.row_space(): 0 for pt in all_subspaces(dim, n, F)}
        for W in layer:
            layer[W] = sum(c for V, c in chains.items() if V < W)
        chains = layer
    return sum(chains.values())


# -- main theorem check --------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    r: int
    s: int
    p: int
    k: int
    n: int
    mu: Partition
    lam: Partition
    lhs: int
    rhs: int
    method: str

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "p": self.p,
            "k": self.k,
            "n": self.n,
            "mu": list(self.mu.parts),
            "lambda": list(self.lam.parts),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ok": self.ok,
        }

    def to_text(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        return (
            f"{self.r}/{self.s} over F_{self.p}: Gr_{self.k}({self.n}), mu={self.mu}, lambda={self.lam}\n"
            f"  p^|mu| * R(p) = {self.lhs}\n"
            f"  |union of cells| = {self.rhs}  [{self.method}]\n"
            f"  {status}"
        )


def verify_main_theorem(x: ReducedRational, p, stream_budget: int = STREAM_BUDGET, max_cells: int = 10**5) -> VerificationReport:
    F = as_field(p)
    if x.r > max_cells:
        raise BudgetError(f"interval has {x.r} cells, above the limit {max_cells}")
    cf = cf_expand(x)
    k, n = cf_grassmannian_params(cf)
    lam, mu = lambda_mu_explicit(cf)
    R = qrational(x).numerator
    lhs = F.p ** mu.size * R(F.p)
    union = count_union_detail(mu, lam, k, n, F, stream_budget)
    return VerificationReport(x.r, x.s, F.p, k, n, mu, lam, lhs, union.count, union.method)
