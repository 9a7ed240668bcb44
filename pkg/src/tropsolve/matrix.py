"""Dense matrices and vectors over the max-plus scalars.

Shapes are fixed at construction and entries are immutable. Indexing is
0-based throughout the library; only rendered reports use 1-based indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionError, ParseError
from .scalar import BOTTOM, TropicalScalar, as_scalar, format_scalar, parse_scalar, trop_add, trop_mul

__all__ = [
    "TropMatrix",
    "TropVector",
    "mat_add",
    "mat_mul",
    "mat_vec",
    "scalar_mul",
    "transpose",
    "leq",
    "column",
    "row",
    "submatrix",
    "identity",
    "is_regular",
    "parse_matrix",
    "parse_vector",
    "format_matrix",
    "format_vector",
]


class TropVector:
    """A vector of max-plus scalars, length >= 1."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable):
        self._entries = tuple(as_scalar(e) for e in entries)
        if not self._entries:
            raise DimensionError("vector must have at least one entry")

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, i: int) -> TropicalScalar:
        return self._entries[i]

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropVector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return "TropVector(" + ", ".join(format_scalar(e) for e in self._entries) + ")"


class TropMatrix:
    """A dense m x n matrix of max-plus scalars, m, n >= 1."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(as_scalar(e) for e in r) for r in rows)
        if not self._rows or not self._rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(self._rows[0])
        if any(len(r) != width for r in self._rows):
            raise DimensionError("matrix rows must all have the same length")

    @classmethod
    def from_columns(cls, cols: Sequence[TropVector]) -> "TropMatrix":
        if not cols:
            raise DimensionError("matrix must have at least one column")
        if any(len(c) != len(cols[0]) for c in cols):
            raise DimensionError("columns must all have the same length")
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0])

    def entry(self, i: int, j: int) -> TropicalScalar:
        return self._rows[i][j]

    def row(self, i: int) -> TropVector:
        return TropVector(self._rows[i])

    def column(self, j: int) -> TropVector:
        if not 0 <= j < self.cols:
            raise IndexError(f"column index {j} out of range for {self.cols} columns")
        return TropVector(r[j] for r in self._rows)

    def row_tuples(self) -> tuple[tuple[TropicalScalar, ...], ...]:
        return self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"TropMatrix({self.rows}x{self.cols})"


def _check_same_shape(a, b) -> None:
    if isinstance(a, TropVector) and isinstance(b, TropVector):
        if len(a) != len(b):
            raise DimensionError(f"vector lengths differ: {len(a)} vs {len(b)}")
        return
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionError(f"shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def mat_add(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Entrywise tropical sum (entrywise max)."""
    _check_same_shape(a, b)
    return TropMatrix(
        [trop_add(a.entry(i, j), b.entry(i, j)) for j in range(a.cols)] for i in range(a.rows)
    )


def mat_mul(a: TropMatrix, c: TropMatrix) -> TropMatrix:
    """Tropical matrix product: (i,j) entry is max_k (a_ik + c_kj)."""
    if a.cols != c.rows:
        raise DimensionError(f"inner dimensions differ: {a.rows}x{a.cols} times {c.rows}x{c.cols}")
    out = []
    for i in range(a.rows):
        out_row = []
        for j in range(c.cols):
            acc = BOTTOM
            for k in range(a.cols):
                acc = trop_add(acc, trop_mul(a.entry(i, k), c.entry(k, j)))
            out_row.append(acc)
        out.append(out_row)
    return TropMatrix(out)


def mat_vec(a: TropMatrix, x: TropVector) -> TropVector:
    """Apply a matrix to a column vector under max-plus."""
    if a.cols != len(x):
        raise DimensionError(f"matrix has {a.cols} columns but vector has {len(x)} entries")
    out = []
    for i in range(a.rows):
        acc = BOTTOM
        for k in range(a.cols):
            acc = trop_add(acc, trop_mul(a.entry(i, k), x[k]))
        out.append(acc)
    return TropVector(out)


def scalar_mul(lam, a):
    """Tropical scalar multiple: add lam classically to every finite entry.

    Accepts a matrix or a vector; -inf entries stay -inf, and a -inf
    scalar turns everything into -inf.
    """
    lam = as_scalar(lam)
    if isinstance(a, TropVector):
        return TropVector(trop_mul(lam, e) for e in a)
    return TropMatrix([trop_mul(lam, a.entry(i, j)) for j in range(a.cols)] for i in range(a.rows))


def transpose(a: TropMatrix) -> TropMatrix:
    return TropMatrix([a.entry(i, j) for i in range(a.rows)] for j in range(a.cols))


def leq(a, b) -> bool:
    """Entrywise order: a <= b in every position (matrices or vectors)."""
    _check_same_shape(a, b)
    if isinstance(a, TropVector):
        return all(x <= y for x, y in zip(a, b))
    return all(a.entry(i, j) <= b.entry(i, j) for i in range(a.rows) for j in range(a.cols))


def column(a: TropMatrix, j: int) -> TropVector:
    return a.column(j)


def row(a: TropMatrix, i: int) -> TropVector:
    if not 0 <= i < a.rows:
        raise IndexError(f"row index {i} out of range for {a.rows} rows")
    return a.row(i)


def submatrix(a: TropMatrix, rows: Sequence[int], cols: Sequence[int]) -> TropMatrix:
    return TropMatrix([a.entry(i, j) for j in cols] for i in rows)


def identity(n: int) -> TropMatrix:
    """Tropical identity: 0 on the diagonal, -inf elsewhere."""
    return TropMatrix([TropicalScalar(0) if i == j else BOTTOM for j in range(n)] for i in range(n))


def is_regular(v: TropVector) -> bool:
    """True iff the vector has no -inf entry."""
    return all(not e.is_bottom for e in v)


# ---------------------------------------------------------------------------
# Text formats. Matrix files: `#` comment lines, one row per line,
# whitespace-separated scalar tokens. Vector files: one scalar per line, or
# all entries on a single line. parse -> format -> parse is the identity.


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, raw


def _parse_tokens(lineno: int, raw: str) -> list[TropicalScalar]:
    entries = []
    pos = 0
    for token in raw.split():
        col = raw.index(token, pos) + 1
        pos = col - 1 + len(token)
        try:
            entries.append(parse_scalar(token))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno, column=col) from None
    return entries


def parse_matrix(text: str) -> TropMatrix:
    rows = []
    width = None
    first_lineno = None
    for lineno, raw in _data_lines(text):
        entries = _parse_tokens(lineno, raw)
        if width is None:
            width, first_lineno = len(entries), lineno
        elif len(entries) != width:
            raise ParseError(
                f"row has {len(entries)} entries but row at line {first_lineno} has {width}",
                line=lineno,
            )
        rows.append(entries)
    if not rows:
        raise ParseError("no matrix rows found")
    return TropMatrix(rows)


def parse_vector(text: str) -> TropVector:
    lines = [(lineno, _parse_tokens(lineno, raw)) for lineno, raw in _data_lines(text)]
    if not lines:
        raise ParseError("no vector entries found")
    if all(len(entries) == 1 for _, entries in lines):
        return TropVector(entries[0] for _, entries in lines)
    if len(lines) == 1:
        return TropVector(lines[0][1])
    bad = next(lineno for lineno, entries in lines if len(entries) != 1)
    raise ParseError("vector must be one scalar per line or a single line", line=bad)


def format_matrix(a: TropMatrix) -> str:
    return "\n".join(" ".join(format_scalar(e) for e in r) for r in a.row_tuples()) + "\n"


def format_vector(v: TropVector) -> str:
    return "\n".join(format_scalar(e) for e in v) + "\n"
