"""Seeded random instance generators shared by the property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from tropsolve import BOTTOM, TropicalScalar, TropMatrix, TropVector, mat_vec, trop_add, trop_mul


def rand_fraction(rng: random.Random, lo: int = -30, hi: int = 30, max_den: int = 5) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_scalar(rng: random.Random, bottom_p: float = 0.2) -> TropicalScalar:
    if rng.random() < bottom_p:
        return BOTTOM
    return TropicalScalar(rand_fraction(rng))


def rand_matrix(
    rng: random.Random,
    m: int,
    n: int,
    bottom_p: float = 0.2,
    regular_rows: bool = False,
    regular_cols: bool = False,
) -> TropMatrix:
    grid = [[rand_scalar(rng, bottom_p) for _ in range(n)] for _ in range(m)]
    if regular_rows:
        for i in range(m):
            if all(e.is_bottom for e in grid[i]):
                grid[i][rng.randrange(n)] = TropicalScalar(rand_fraction(rng))
    if regular_cols:
        for j in range(n):
            if all(grid[i][j].is_bottom for i in range(m)):
                grid[rng.randrange(m)][j] = TropicalScalar(rand_fraction(rng))
    return TropMatrix(grid)


def rand_finite_vector(rng: random.Random, n: int) -> TropVector:
    return TropVector(TropicalScalar(rand_fraction(rng)) for _ in range(n))


def solvable_instance(rng: random.Random, max_dim: int = 6, bottom_p: float = 0.2):
    """A, x0, b with b = A x0 regular (every row gets a finite entry)."""
    m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
    a = rand_matrix(rng, m, n, bottom_p, regular_rows=True)
    x0 = rand_finite_vector(rng, n)
    return a, x0, mat_vec(a, x0)


def arbitrary_instance(rng: random.Random, max_dim: int = 6, bottom_p: float = 0.2):
    """A with arbitrary -inf pattern and an unrelated regular b."""
    m, n = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return rand_matrix(rng, m, n, bottom_p), rand_finite_vector(rng, m)


def max_combination(vectors: list[TropVector], coeffs: list[TropicalScalar]) -> TropVector:
    out = [BOTTOM] * len(vectors[0])
    for vec, lam in zip(vectors, coeffs):
        for i in range(len(out)):
            out[i] = trop_add(out[i], trop_mul(vec[i], lam))
    return TropVector(out)


def planted_instance(rng: random.Random):
    """A system whose matrix has planted dependent columns and rows.

    Starts from a small core, appends columns that are max-combinations of
    the core columns and rows that are max-combinations of the existing
    rows, then shuffles the column and row order.
    """
    h, k = rng.randint(1, 3), rng.randint(1, 3)
    core = rand_matrix(rng, h, k, bottom_p=0.15, regular_rows=True, regular_cols=True)
    cols = [core.column(j) for j in range(k)]
    for _ in range(rng.randint(1, 2)):
        coeffs = [rand_scalar(rng, bottom_p=0.3) for _ in range(k)]
        if all(c.is_bottom for c in coeffs):
            coeffs[rng.randrange(k)] = TropicalScalar(rand_fraction(rng))
        cols.append(max_combination(cols[:k], coeffs))
    rng.shuffle(cols)
    a = TropMatrix.from_columns(cols)

    rows = [a.row(i) for i in range(a.rows)]
    for _ in range(rng.randint(1, 2)):
        coeffs = [rand_scalar(rng, bottom_p=0.3) for _ in range(len(rows))]
        if all(c.is_bottom for c in coeffs):
            coeffs[rng.randrange(len(rows))] = TropicalScalar(rand_fraction(rng))
        rows.append(max_combination(rows, coeffs))
    rng.shuffle(rows)
    a = TropMatrix([list(r) for r in rows])

    if rng.random() < 0.5:
        x0 = rand_finite_vector(rng, a.cols)
        b = mat_vec(a, x0)
        if any(e.is_bottom for e in b):
            b = rand_finite_vector(rng, a.rows)
    else:
        b = rand_finite_vector(rng, a.rows)
    return a, b
