import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrat.errors import BudgetError, ContainmentError
from qrat.finschubert import (
    EchelonPoint,
    PrimeField,
    cell_size,
    count_flags,
    count_grassmannian_raw,
    count_union,
    count_union_detail,
    enumerate_cell_points,
    free_positions,
    is_reduced_echelon,
    merged_echelon_classes,
    merged_matrix_walk,
    partition_to_pivots,
    pivots_to_partition,
    raw_count_in_interval,
    raw_echelon_classes,
    row_reduce,
    span,
    verify_main_theorem,
)
from qrat.posets import partitions_in_box
from qrat.qpoly import poly_eval_int, q_binomial, q_factorial
from qrat.ratcf import ReducedRational, parse_rational
from qrat.snakegraph import Partition

PATTERN_3221 = [
    "1*00*0*",
    "0010*0*",
    "0001*0*",
    "000001*",
]


def test_pivots_and_pattern_3221():
    lam = Partition((3, 2, 2, 1))
    piv = partition_to_pivots(lam, 4, 7)
    assert piv == (1, 3, 4, 6)
    assert pivots_to_partition(piv, 4, 7) == lam
    grid = [["0"] * 7 for _ in range(4)]
    for i, c in enumerate(piv):
        grid[i][c - 1] = "1"
    for i, j in free_positions(piv, 7):
        grid[i][j] = "*"
    assert ["".join(r) for r in grid] == PATTERN_3221


def test_pivot_extremes():
    assert partition_to_pivots(Partition(()), 3, 7) == (5, 6, 7)
    assert partition_to_pivots(Partition((4, 4, 4)), 3, 7) == (1, 2, 3)
    with pytest.raises(ContainmentError):
        partition_to_pivots(Partition((5,)), 3, 7)


def test_pivot_round_trip_2_of_5():
    subsets = list(itertools.combinations(range(1, 6), 2))
    assert len(subsets) == 10
    for s in subsets:
        assert partition_to_pivots(pivots_to_partition(s, 2, 5), 2, 5) == s


@pytest.mark.parametrize("k, w", [(k, w) for k in range(0, 5) for w in range(0, 5)])
def test_pivot_round_trip_boxes(k, w):
    for lam in partitions_in_box(k, w):
        assert pivots_to_partition(partition_to_pivots(lam, k, k + w), k, k + w) == lam


def test_cell_sizes():
    assert cell_size(Partition(()), 5) == 1
    assert cell_size(Partition((2, 2, 2)), 2) == 64
    assert cell_size(Partition((1, 1)), 3) == 9


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("k, w", [(k, w) for k in range(1, 4) for w in range(1, 5)])
def test_stream_length_law(p, k, w):
    for lam in partitions_in_box(k, w):
        pts = list(enumerate_cell_points(lam, k, k + w, p))
        assert len(pts) == p**lam.size
        assert len({pt.entries for pt in pts}) == len(pts)


def test_cell_points_are_echelon():
    pts = list(enumerate_cell_points(Partition((2, 1)), 2, 4, 3))
    assert all(is_reduced_echelon(pt) and pt.partition() == Partition((2, 1)) for pt in pts)
    empty = list(enumerate_cell_points(Partition(()), 2, 4, 2))
    assert [pt.entries for pt in empty] == [((0, 0, 1, 0), (0, 0, 0, 1))]


def test_count_union_examples():
    mu, lam = Partition((1, 1)), Partition((2, 2, 2))
    assert count_union(mu, lam, 3, 5, 2) == 148
    assert count_union(lam, lam, 3, 5, 2) == 64
    full = Partition((2, 2, 2))
    assert count_union(Partition(()), full, 3, 5, 3) == poly_eval_int(q_binomial(5, 3), 3)


def test_count_union_methods_agree():
    mu, lam = Partition((1,)), Partition((3, 3, 2))
    stream = count_union_detail(mu, lam, 3, 6, 2)
    pattern = count_union_detail(mu, lam, 3, 6, 2, stream_budget=0)
    assert (stream.method, pattern.method) == ("stream", "pattern")
    assert stream.count == pattern.count


def test_row_reduce():
    rows, piv = row_reduce([[2, 1, 0], [1, 2, 1]], 3)
    assert piv == (1, 3)
    assert rows == ((1, 2, 0), (0, 0, 1))


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=3))
def test_row_reduce_preserves_span(rows):
    red, piv = row_reduce(rows, 3)
    assert span(red, 3, 4) == span(rows, 3, 4)
    assert len(piv) == len(red)


def test_raw_examples():
    assert count_grassmannian_raw(2, 4, 2) == 35
    assert count_grassmannian_raw(3, 5, 2) == 155
    for n in range(1, 5):
        assert count_grassmannian_raw(1, n, 3) == (3**n - 1) // 2


def test_raw_routes_agree():
    for k, n, p in [(2, 4, 2), (2, 3, 3), (1, 4, 3), (3, 4, 2)]:
        assert raw_echelon_classes(k, n, p) == merged_echelon_classes(k, n, p)
    assert sum(merged_matrix_walk(2, 3, 3).values()) == 3 ** 6


def test_raw_budget():
    with pytest.raises(BudgetError):
        raw_echelon_classes(5, 5, 3)
    with pytest.raises(BudgetError):
        count_grassmannian_raw(2, 4, 2, method="exhaustive", budget=100)


def test_disjoint_union_identity():
    for k, n, p in [(2, 4, 2), (2, 4, 3), (3, 5, 2)]:
        cells = sum(len(list(enumerate_cell_points(lam, k, n, p))) for lam in partitions_in_box(k, n - k))
        assert cells == count_grassmannian_raw(k, n, p)


def test_raw_interval_seven_thirds():
    assert raw_count_in_interval(Partition((1, 1)), Partition((2, 2, 2)), 3, 5, 2) == 148


@pytest.mark.parametrize("n, p, expected", [(1, 2, 1), (2, 2, 3), (3, 2, 21), (2, 3, 4)])
def test_flags(n, p, expected):
    assert count_flags(n, p) == expected == poly_eval_int(q_factorial(n), p)


def test_flag_budget():
    with pytest.raises(BudgetError):
        count_flags(5, 2)


@pytest.mark.parametrize(
    "text, p, count",
    [("7/3", 2, 148), ("4/1", 2, 15), ("7/3", 3, 1197)],
)
def test_verify_examples(text, p, count):
    rep = verify_main_theorem(parse_rational(text), p)
    assert rep.ok and rep.lhs == rep.rhs == count


def test_report_json():
    rep = verify_main_theorem(ReducedRational(7, 3), 2)
    assert rep.to_json() == {
        "r": 7, "s": 3, "p": 2, "k": 3, "n": 5, "mu": [1, 1], "lambda": [2, 2, 2],
        "lhs": 148, "rhs": 148, "ok": True,
    }
    assert "ok" in rep.to_text()


def test_unsupported_field():
    with pytest.raises(ValueError):
        PrimeField(11)
    with pytest.raises(ValueError):
        PrimeField(4)


def test_echelon_point_row_space():
    pt = EchelonPoint(1, 2, 2, (1,), ((1, 1),))
    assert pt.row_space() == frozenset({(0, 0), (1, 1)})
