"""Independent brute-force baselines used to cross-check the solver.

Nothing here goes through normalization: the principal solution is the
direct residuation formula, and tiny systems can be decided by exhaustive
enumeration over the finite grid of relevant candidate values.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .errors import DimensionError, SizeBoundError
from .matrix import TropMatrix, TropVector
from .scalar import BOTTOM, TropicalScalar, trop_add, trop_mul

__all__ = ["principal_solution", "exhaustive_solvable"]


def principal_solution(a: TropMatrix, b: TropVector) -> TropVector:
    """Residuation: x_j = min over rows with a_ij finite of (b_i - a_ij).

    Intended for regular b. Columns with no finite entry leave x_j
    unconstrained; the entry is stored as -inf (no finite cap exists).
    A -inf b entry against a finite a_ij likewise forces x_j to -inf.
    """
    if a.rows != len(b):
        raise DimensionError(f"matrix has {a.rows} rows but vector has {len(b)} entries")
    out: list[TropicalScalar] = []
    for j in range(a.cols):
        bounds = []
        forced = False
        for i in range(a.rows):
            e = a.entry(i, j)
            if e.is_bottom:
                continue
            if b[i].is_bottom:
                forced = True
                break
            bounds.append(b[i].value - e.value)
        if forced or not bounds:
            out.append(BOTTOM)
        else:
            out.append(TropicalScalar(min(bounds)))
    return TropVector(out)


def _satisfies(a: TropMatrix, x: tuple[TropicalScalar, ...], b: TropVector) -> bool:
    for i in range(a.rows):
        acc = BOTTOM
        for j in range(a.cols):
            acc = trop_add(acc, trop_mul(a.entry(i, j), x[j]))
        if acc != b[i]:
            return False
    return True


def exhaustive_solvable(
    a: TropMatrix, b: TropVector, grid: Iterable[TropicalScalar] | None = None
) -> bool:
    """Ground-truth solvability for tiny systems by enumerating candidates.

    Candidate values per unknown default to {b_i - a_ij : both finite}
    plus -inf; any solution is dominated by the principal one, whose
    entries all lie on that grid. Refuses systems larger than 4x4.
    """
    if a.rows > 4 or a.cols > 4:
        raise SizeBoundError(f"exhaustive search limited to 4x4 systems, got {a.rows}x{a.cols}")
    if a.rows != len(b):
        raise DimensionError(f"matrix has {a.rows} rows but vector has {len(b)} entries")
    if grid is not None:
        shared = list(grid) + [BOTTOM]
        per_col = [shared] * a.cols
    else:
        per_col = []
        for j in range(a.cols):
            vals = {
                TropicalScalar(b[i].value - a.entry(i, j).value)
                for i in range(a.rows)
                if not a.entry(i, j).is_bottom and not b[i].is_bottom
            }
            per_col.append(sorted(vals) + [BOTTOM])
    return any(_satisfies(a, x, b) for x in product(*per_col))
