import random

import pytest

from tropsolve import (
    SizeBoundError,
    Solvable,
    UnsolvableSystemError,
    degrees_of_freedom,
    minimal_leading_oracle,
    solve,
)

from helpers import solvable_instance


def test_dof_four_way_tie_resolved_to_lowest(dof_4x5):
    a, b = dof_4x5
    out = solve(a, b)
    assert isinstance(out, Solvable)
    report = degrees_of_freedom(out.coverage, a.cols)
    # rows 2 and 4 both force column 1; the remaining rows tie four ways
    assert report.leading_cols == (0, 1, 3)
    assert report.free_cols == (2, 4)
    assert report.d_f == 2
    assert report.trace[0].rule == "singleton"
    assert report.trace[0].chosen_col == 0
    assert report.trace[0].removed_rows == (1, 3)
    assert [s.rule for s in report.trace[1:]] == ["greedy", "greedy"]


def test_dof_singleton_then_dominant_column(solvable_4x5):
    a, b = solvable_4x5
    out = solve(a, b)
    report = degrees_of_freedom(out.coverage, a.cols)
    assert report.leading_cols == (3, 2)
    assert report.d_f == 3
    assert report.trace[0].rule == "singleton" and report.trace[0].chosen_col == 3
    assert report.trace[0].removed_rows == (3,)
    assert report.trace[1].rule == "greedy" and report.trace[1].chosen_col == 2
    assert report.trace[1].removed_rows == (0, 1, 2)


def test_dof_single_row_all_columns():
    report = degrees_of_freedom([{0, 1, 2, 3}], 4)
    assert len(report.leading_cols) == 1
    assert report.d_f == 3


def test_dof_rejects_uncovered_row():
    with pytest.raises(UnsolvableSystemError):
        degrees_of_freedom([{0}, set()], 2)


def test_dof_row_ids_in_trace():
    report = degrees_of_freedom([{0}, {0, 1}], 2, row_ids=[4, 7])
    assert report.trace[0].removed_rows == (4, 7)


def test_dof_leading_covers_all_rows_random():
    rng = random.Random(31)
    for _ in range(150):
        a, _, b = solvable_instance(rng)
        out = solve(a, b)
        covered = [(i, cols) for i, cols in enumerate(out.coverage) if cols]
        report = degrees_of_freedom([c for _, c in covered], a.cols)
        assert report.d_f == a.cols - len(report.leading_cols)
        assert set(report.leading_cols) | set(report.free_cols) == set(range(a.cols))
        chosen = set(report.leading_cols)
        for _, cols in covered:
            assert set(cols) & chosen


def test_dof_deterministic():
    cov = [{0, 2}, {1, 2}, {0, 1}]
    first = degrees_of_freedom(cov, 3)
    for _ in range(5):
        assert degrees_of_freedom(cov, 3) == first


def test_singleton_count_bounds_dof():
    # rows with a unique cover in k distinct columns leave at most n-k free
    rng = random.Random(32)
    for _ in range(150):
        a, _, b = solvable_instance(rng)
        out = solve(a, b)
        covered = [cols for cols in out.coverage if cols]
        k = len({cols[0] for cols in covered if len(cols) == 1})
        report = degrees_of_freedom(covered, a.cols)
        assert report.d_f <= a.cols - k
        if k == 0:
            assert report.d_f <= a.cols - 1


def test_oracle_golden_coverages(solvable_4x5, dof_4x5):
    a, b = solvable_4x5
    out = solve(a, b)
    size, witness = minimal_leading_oracle(out.coverage, a.cols)
    assert size == 2
    a2, b2 = dof_4x5
    out2 = solve(a2, b2)
    size2, _ = minimal_leading_oracle(out2.coverage, a2.cols)
    assert size2 == 3


def test_oracle_single_row():
    assert minimal_leading_oracle([{0, 1, 2}], 3) == (1, (0,))


def test_oracle_refuses_large_n():
    with pytest.raises(SizeBoundError):
        minimal_leading_oracle([{0}], 21)


def test_greedy_at_least_oracle_minimum_random():
    rng = random.Random(33)
    for _ in range(150):
        a, _, b = solvable_instance(rng)
        out = solve(a, b)
        covered = [cols for cols in out.coverage if cols]
        report = degrees_of_freedom(covered, a.cols)
        size, witness = minimal_leading_oracle(covered, a.cols)
        assert len(report.leading_cols) >= size
        assert all(set(cols) & set(witness) for cols in covered)
