"""Degrees of freedom of a solvable system.

Works on the row-coverage relation extracted from Q: column j covers row i
when the j-th column minimum lies in row i. Leading variables are chosen
by the descriptive procedure: first every column that is the unique cover
of some row, then greedily the column covering the most remaining rows.
The number of degrees of freedom is n minus the number of leading
variables. An exhaustive minimum-cover oracle is provided for testing the
greedy step on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SizeBoundError, UnsolvableSystemError

__all__ = ["DofStep", "DofReport", "degrees_of_freedom", "minimal_leading_oracle"]


@dataclass(frozen=True)
class DofStep:
    rule: str  # "singleton" | "greedy"
    chosen_col: int
    removed_rows: tuple[int, ...]


@dataclass(frozen=True)
class DofReport:
    leading_cols: tuple[int, ...]  # in choice order
    free_cols: tuple[int, ...]  # ascending
    d_f: int
    trace: tuple[DofStep, ...]


def _as_cover_sets(coverage: Sequence[Iterable[int]], n: int) -> list[frozenset[int]]:
    sets = [frozenset(rowcov) for rowcov in coverage]
    for rowcov in sets:
        if not rowcov:
            raise UnsolvableSystemError("system unsolvable: a row holds no column minimum")
        if any(j < 0 or j >= n for j in rowcov):
            raise ValueError(f"column index out of range for n={n}")
    return sets


def degrees_of_freedom(
    coverage: Sequence[Iterable[int]],
    n: int,
    row_ids: Sequence[int] | None = None,
) -> DofReport:
    """Run the descriptive leading-variable procedure on a coverage relation.

    `coverage` holds, per row, the columns whose minimum lies in that row;
    every row must be covered (the system must be solvable). `row_ids`
    optionally names the rows for the trace (defaults to positions).

    Singleton rows are processed first in ascending row order; then the
    greedy step repeatedly picks the column covering the most remaining
    rows, breaking ties toward the lowest column index.
    """
    sets = _as_cover_sets(coverage, n)
    ids = list(row_ids) if row_ids is not None else list(range(len(sets)))
    if len(ids) != len(sets):
        raise ValueError("row_ids must match coverage length")

    remaining = set(range(len(sets)))
    leading: list[int] = []
    trace: list[DofStep] = []

    def choose(rule: str, col: int) -> None:
        removed = sorted(r for r in remaining if col in sets[r])
        remaining.difference_update(removed)
        leading.append(col)
        trace.append(DofStep(rule, col, tuple(ids[r] for r in removed)))

    for r in range(len(sets)):
        if r in remaining and len(sets[r]) == 1:
            (col,) = sets[r]
            if col not in leading:
                choose("singleton", col)

    while remaining:
        freq: dict[int, int] = {}
        for r in remaining:
            for col in sets[r]:
                freq[col] = freq.get(col, 0) + 1
        best = max(freq.values())
        choose("greedy", min(col for col, c in freq.items() if c == best))

    free = tuple(j for j in range(n) if j not in leading)
    return DofReport(tuple(leading), free, n - len(leading), tuple(trace))


def minimal_leading_oracle(
    coverage: Sequence[Iterable[int]], n: int
) -> tuple[int, tuple[int, ...]]:
    """Exact minimum number of columns covering every row, by enumeration.

    Subsets are tried in increasing size, so the first cover found is
    minimum; returns (size, one witness subset). Refuses n > 20.
    """
    if n > 20:
        raise SizeBoundError(f"exhaustive cover search limited to 20 columns, got {n}")
    sets = _as_cover_sets(coverage, n)
    candidates = sorted(set().union(*sets)) if sets else []
    for size in range(0, len(candidates) + 1):
        for subset in combinations(candidates, size):
            chosen = set(subset)
            if all(rowcov & chosen for rowcov in sets):
                return size, subset
    raise AssertionError("unreachable: the full candidate set always covers")
