"""Solvability test and maximal solution for A x = b over max-plus.

The pipeline: preprocess away -inf right-hand sides and degenerate
columns, normalize the surviving subsystem, take the column minima of Q,
and check that every row holds at least one of them. When it does, the
back-transformed minima give the maximal solution; when it does not, the
uncovered rows witness unsolvability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError
from .matrix import TropMatrix, TropVector, mat_vec, submatrix
from .normalize import column_minima, normalize
from .scalar import BOTTOM, TropicalScalar, as_scalar

__all__ = [
    "RowCoverage",
    "Preprocessed",
    "Solvable",
    "Unsolvable",
    "SolveOutcome",
    "preprocess",
    "solve",
    "verify",
    "check_equivalence",
    "map_equivalent_solution",
]

# Per row (original index), the sorted column indices whose column minimum
# lies in that row. Rows dropped by preprocessing have empty coverage.
RowCoverage = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Preprocessed:
    """Subsystem left after eliminating -inf equations.

    Every row with b_i = -inf is dropped together with every column that
    has a finite entry in such a row (those unknowns are forced to -inf).
    Columns left with no finite entry at all are dropped as unconstrained.
    """

    kept_rows: tuple[int, ...]
    kept_cols: tuple[int, ...]
    forced_bottom: frozenset[int]
    unconstrained: frozenset[int]
    sub_a: TropMatrix | None
    sub_b: TropVector | None


@dataclass(frozen=True)
class Solvable:
    """Maximal solution plus the coverage data behind it.

    Entries of `x_star` at `unbounded` columns are stored as -inf but are
    really unconstrained: the column is all -inf, so any value solves the
    system and no finite cap exists.
    """

    x_star: TropVector
    y_star: TropVector
    coverage: RowCoverage
    forced_bottom: frozenset[int]
    unbounded: frozenset[int]


@dataclass(frozen=True)
class Unsolvable:
    """Witness rows: every row listed holds no column minimum of Q."""

    witness_rows: tuple[int, ...]
    coverage: RowCoverage


SolveOutcome = Solvable | Unsolvable


def preprocess(a: TropMatrix, b: TropVector) -> Preprocessed:
    """Eliminate -inf equations and the unknowns they force to -inf.

    Runs to a fixed point: dropping rows can leave columns with no finite
    entry, which are then dropped as unconstrained.
    """
    if a.rows != len(b):
        raise DimensionError(f"matrix has {a.rows} rows but vector has {len(b)} entries")
    m, n = a.rows, a.cols
    dropped_rows: set[int] = set()
    forced: set[int] = set()
    changed = True
    while changed:
        changed = False
        for i in range(m):
            if i not in dropped_rows and b[i].is_bottom:
                dropped_rows.add(i)
                changed = True
        for j in range(n):
            if j in forced:
                continue
            if any(not a.entry(i, j).is_bottom for i in dropped_rows):
                forced.add(j)
                changed = True
    kept_rows = tuple(i for i in range(m) if i not in dropped_rows)
    unconstrained = frozenset(
        j
        for j in range(n)
        if j not in forced and all(a.entry(i, j).is_bottom for i in kept_rows)
    )
    kept_cols = tuple(j for j in range(n) if j not in forced and j not in unconstrained)
    sub_a = submatrix(a, kept_rows, kept_cols) if kept_rows and kept_cols else None
    sub_b = TropVector(b[i] for i in kept_rows) if kept_rows else None
    return Preprocessed(kept_rows, kept_cols, frozenset(forced), unconstrained, sub_a, sub_b)


def solve(a: TropMatrix, b: TropVector) -> SolveOutcome:
    """Decide solvability of A x = b and return the maximal solution if any.

    The system is solvable iff every (surviving) row of Q holds at least
    one column minimum; the maximal solution is x*_j = y*_j - mean_j + b_mean
    where y*_j is the j-th column minimum.
    """
    pre = preprocess(a, b)
    n = a.cols
    empty_cov = [()] * a.rows

    if not pre.kept_rows:
        # every equation was -inf = -inf: vacuously solvable
        x = TropVector([BOTTOM] * n)
        return Solvable(x, TropVector([BOTTOM] * n), tuple(empty_cov), pre.forced_bottom, pre.unconstrained)

    if not pre.kept_cols:
        # finite right-hand sides left with no columns to produce them
        return Unsolvable(pre.kept_rows, tuple(empty_cov))

    res = normalize(pre.sub_a, pre.sub_b)
    y_sub, argmins = column_minima(res.q)

    coverage_sets: list[set[int]] = [set() for _ in range(a.rows)]
    for sub_j, rows_attaining in enumerate(argmins):
        orig_j = pre.kept_cols[sub_j]
        for sub_i in rows_attaining:
            coverage_sets[pre.kept_rows[sub_i]].add(orig_j)
    coverage: RowCoverage = tuple(tuple(sorted(s)) for s in coverage_sets)

    uncovered = tuple(i for i in pre.kept_rows if not coverage_sets[i])
    if uncovered:
        return Unsolvable(uncovered, coverage)

    x_entries: list[TropicalScalar] = [BOTTOM] * n
    y_entries: list[TropicalScalar] = [BOTTOM] * n
    for sub_j, orig_j in enumerate(pre.kept_cols):
        y = y_sub[sub_j]
        y_entries[orig_j] = y
        x_entries[orig_j] = TropicalScalar(y.value - res.col_means[sub_j] + res.b_mean)
    x_star = TropVector(x_entries)
    if mat_vec(a, x_star) != b:
        raise AssertionError("internal error: covered system does not reproduce b")
    return Solvable(x_star, TropVector(y_entries), coverage, pre.forced_bottom, pre.unconstrained)


def verify(a: TropMatrix, x: TropVector, b: TropVector) -> bool:
    """Check A x = b exactly, entry by entry."""
    if a.cols != len(x) or a.rows != len(b):
        raise DimensionError(
            f"shapes do not conform: {a.rows}x{a.cols} matrix, x of length {len(x)}, b of length {len(b)}"
        )
    return mat_vec(a, x) == b


def check_equivalence(a: TropMatrix, a2: TropMatrix) -> list[TropicalScalar] | None:
    """Recover per-column finite shifts alpha_j with a2_j = a_j + alpha_j.

    Returns None when no such shifts exist: the -inf patterns differ, or
    some column is not shifted by a constant. Columns that are entirely
    -inf in both matrices get alpha_j = 0.
    """
    if a.rows != a2.rows or a.cols != a2.cols:
        raise DimensionError(f"shapes differ: {a.rows}x{a.cols} vs {a2.rows}x{a2.cols}")
    alphas: list[TropicalScalar] = []
    for j in range(a.cols):
        shift: TropicalScalar | None = None
        for i in range(a.rows):
            e, e2 = a.entry(i, j), a2.entry(i, j)
            if e.is_bottom != e2.is_bottom:
                return None
            if e.is_bottom:
                continue
            d = TropicalScalar(e2.value - e.value)
            if shift is None:
                shift = d
            elif shift != d:
                return None
        alphas.append(shift if shift is not None else TropicalScalar(0))
    return alphas


def map_equivalent_solution(x: TropVector, alphas, beta) -> TropVector:
    """Carry a solution to the shifted system: x'_j = x_j + beta - alpha_j."""
    alphas = [as_scalar(al) for al in alphas]
    beta = as_scalar(beta)
    if len(alphas) != len(x):
        raise DimensionError(f"{len(alphas)} shifts for a vector of length {len(x)}")
    if beta.is_bottom or any(al.is_bottom for al in alphas):
        raise ValueError("equivalence shifts must be finite")
    out = []
    for xj, al in zip(x, alphas):
        if xj.is_bottom:
            out.append(BOTTOM)
        else:
            out.append(TropicalScalar(xj.value + beta.value - al.value))
    return TropVector(out)
