"""Column and row rank of a max-plus matrix by iterative dependence scans.

Each column, scanned from the last to the first, is tested for linear
dependence on the other working columns by solving a max-plus system with
that column as the right-hand side. Dependent columns are removed from
the working set; independent ones are rotated to its front and stay.
Row rank is the column rank of the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import DimensionError
from .matrix import TropMatrix, TropVector, transpose
from .scalar import BOTTOM, TropicalScalar, trop_add, trop_mul
from .solver import Solvable, solve

__all__ = ["Dependence", "RankReport", "colrank", "rowrank", "dependence_oracle"]


@dataclass(frozen=True)
class Dependence:
    """A column reproduced exactly as max over (independent column + coefficient)."""

    col: int
    combination: tuple[tuple[int, TropicalScalar], ...]  # (index, finite coefficient)


@dataclass(frozen=True)
class RankReport:
    axis: str  # "columns" | "rows"
    independent: tuple[int, ...]  # original indices, in discovery order
    dependent: tuple[Dependence, ...]  # ascending by index
    rank: int
    scan_trace: tuple[tuple[int, str], ...]  # (index, "dependent" | "independent")


def _combination_against(
    pool: Sequence[TropVector], pool_ids: Sequence[int], target: TropVector
) -> tuple[tuple[int, TropicalScalar], ...]:
    outcome = solve(TropMatrix.from_columns(list(pool)), target)
    if not isinstance(outcome, Solvable):
        raise AssertionError("internal error: dependent column not spanned by the independent set")
    return tuple(
        (pool_ids[k], coeff) for k, coeff in enumerate(outcome.x_star) if not coeff.is_bottom
    )


def colrank(a: TropMatrix, scan_order: Sequence[int] | None = None) -> RankReport:
    """Scan for independent columns and the dependences of the rest.

    `scan_order` gives the order in which columns are tested (0-based,
    a permutation of all columns); the default tests the last column
    first, down to the first. Columns with no finite entry are removed
    up front as dependent with an empty combination.

    Each recorded dependence combines the final independent columns with
    the maximal coefficients, so it reproduces the column exactly.
    """
    n = a.cols
    if scan_order is None:
        order = list(range(n - 1, -1, -1))
    else:
        order = list(scan_order)
        if sorted(order) != list(range(n)):
            raise ValueError(f"scan order must be a permutation of 0..{n - 1}")

    cols = [a.column(j) for j in range(n)]
    bottom_cols = [j for j in range(n) if all(e.is_bottom for e in cols[j])]
    trace: list[tuple[int, str]] = [(j, "dependent") for j in sorted(bottom_cols)]

    front: list[int] = []  # independents, most recent first
    discovery: list[int] = []
    dependent_ids: list[int] = list(bottom_cols)
    unprocessed = set(j for j in range(n) if j not in bottom_cols)
    for target in order:
        if target not in unprocessed:
            continue
        unprocessed.discard(target)
        working = front + sorted(unprocessed)
        if working:
            outcome = solve(TropMatrix.from_columns([cols[j] for j in working]), cols[target])
            is_dep = isinstance(outcome, Solvable)
        else:
            is_dep = False
        if is_dep:
            trace.append((target, "dependent"))
            dependent_ids.append(target)
        else:
            trace.append((target, "independent"))
            front.insert(0, target)
            discovery.append(target)

    indep_sorted = sorted(discovery)
    dependences = []
    for j in sorted(dependent_ids):
        if j in bottom_cols:
            dependences.append(Dependence(j, ()))
        else:
            comb = _combination_against([cols[c] for c in indep_sorted], indep_sorted, cols[j])
            dependences.append(Dependence(j, comb))

    return RankReport(
        axis="columns",
        independent=tuple(discovery),
        dependent=tuple(dependences),
        rank=len(discovery),
        scan_trace=tuple(trace),
    )


def rowrank(a: TropMatrix, scan_order: Sequence[int] | None = None) -> RankReport:
    """Row rank as the column rank of the transpose; indices are row indices."""
    return replace(colrank(transpose(a), scan_order), axis="rows")


def dependence_oracle(
    cols: Sequence[TropVector], target: TropVector
) -> list[TropicalScalar] | None:
    """Residuation-based dependence test, independent of the solver path.

    For each column, the candidate coefficient is the least slack
    min_i (target_i - col_i) over rows where the column is finite (and
    -inf when the column must not contribute). Returns the coefficients
    iff their max-combination reproduces the target exactly.
    """
    m = len(target)
    if any(len(c) != m for c in cols):
        raise DimensionError("columns and target must have the same length")
    lambdas: list[TropicalScalar] = []
    for col in cols:
        finite_rows = [i for i in range(m) if not col[i].is_bottom]
        if not finite_rows or any(target[i].is_bottom for i in finite_rows):
            lambdas.append(BOTTOM)
            continue
        lambdas.append(TropicalScalar(min(target[i].value - col[i].value for i in finite_rows)))
    for i in range(m):
        acc = BOTTOM
        for col, lam in zip(cols, lambdas):
            acc = trop_add(acc, trop_mul(col[i], lam))
        if acc != target[i]:
            return None
    return lambdas
