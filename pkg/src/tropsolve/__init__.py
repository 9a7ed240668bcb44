"""Exact linear algebra over the max-plus (tropical) semiring.

Solves A x = b with exact rational arithmetic via column-mean
normalization, and builds on the same machinery to compute degrees of
freedom, column/row rank, and reduced systems.
"""

from .errors import (
    DegenerateColumnError,
    DimensionError,
    ParseError,
    RegularityError,
    SizeBoundError,
    TropicalError,
    UnsolvableSystemError,
)
from .freedom import DofReport, DofStep, degrees_of_freedom, minimal_leading_oracle
from .matrix import (
    TropMatrix,
    TropVector,
    column,
    format_matrix,
    format_vector,
    identity,
    is_regular,
    leq,
    mat_add,
    mat_mul,
    mat_vec,
    parse_matrix,
    parse_vector,
    row,
    scalar_mul,
    submatrix,
    transpose,
)
from .normalize import (
    TOP_SENTINEL,
    NormalizationResult,
    QEntry,
    column_mean,
    column_minima,
    normalize,
)
from .oracle import exhaustive_solvable, principal_solution
from .rank import Dependence, RankReport, colrank, dependence_oracle, rowrank
from .reduce import ReducedSystem, dof_via_reduction, expand_solution, reduce_system
from .scalar import (
    BOTTOM,
    ZERO,
    TropicalScalar,
    as_scalar,
    classical_sub,
    format_scalar,
    parse_scalar,
    trop_add,
    trop_mul,
)
from .solver import (
    Preprocessed,
    Solvable,
    SolveOutcome,
    Unsolvable,
    check_equivalence,
    map_equivalent_solution,
    preprocess,
    solve,
    verify,
)

__version__ = "0.1.0"
