"""Disjoint-row tableaux, contingency matrices, biwords and RSK."""

from bisect import bisect_right
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from promotion_sieve.shapes import SkewShape, direct_sum
from promotion_sieve.tableaux import Tableau


class ContingencyMatrix(BaseModel):
    """A rectangular matrix of non-negative integers."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_entries(self) -> "ContingencyMatrix":
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ValueError("all matrix rows must have the same length")
        if any(x < 0 for row in self.rows for x in row):
            raise ValueError("matrix entries must be non-negative")
        return self

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    @property
    def col_sums(self) -> Tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rows))


class Biword(BaseModel):
    """Two-line array of (top, bottom) pairs in lexicographic order."""

    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_sorted(self) -> "Biword":
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("biword pairs must be sorted lexicographically")
        return self

    @property
    def top(self) -> Tuple[int, ...]:
        return tuple(p[0] for p in self.pairs)

    @property
    def bottom(self) -> Tuple[int, ...]:
        return tuple(p[1] for p in self.pairs)


def _check_disjoint_rows(shape: SkewShape) -> None:
    for r in range(1, shape.num_rows):
        start, _ = shape.row_span(r - 1)
        _, stop = shape.row_span(r)
        if stop > start:
            raise ValueError(f"rows {r} and {r + 1} of {shape} share a column")


def tableau_to_matrix(t: Tableau, m: Optional[int] = None) -> ContingencyMatrix:
    """Entry (i, j) counts the label ``j + 1`` in row ``i``."""
    _check_disjoint_rows(t.shape)
    m = m or t.max_entry
    rows = []
    for row in t.rows:
        counts = [0] * m
        for x in row:
            counts[x - 1] += 1
        rows.append(tuple(counts))
    return ContingencyMatrix(rows=tuple(rows))


def matrix_to_tableau(matrix: ContingencyMatrix) -> Tableau:
    """Disjoint sorted rows, row i holding the labels counted in matrix row i."""
    if any(s == 0 for s in matrix.row_sums):
        raise ValueError("every matrix row needs a positive sum")
    shape = direct_sum([SkewShape.straight((s,)) for s in matrix.row_sums])
    rows = tuple(
        tuple(j + 1 for j, count in enumerate(row) for _ in range(count))
        for row in matrix.rows
    )
    return Tableau(shape=shape, rows=rows)


def matrix_to_biword(matrix: ContingencyMatrix) -> Biword:
    """Top letter ``i`` reads matrix row ``l + 1 - i`` (1-based), l rows in all."""
    length = len(matrix.rows)
    pairs = []
    for i in range(1, length + 1):
        row = matrix.rows[length - i]
        for j, count in enumerate(row):
            pairs.extend([(i, j + 1)] * count)
    return Biword(pairs=tuple(pairs))


def rsk(w: Biword) -> Tuple[Tableau, Tableau]:
    """Row-insert the bottom letters, recording the top letters."""
    insertion: List[List[int]] = []
    recording: List[List[int]] = []
    for top, letter in w.pairs:
        row = 0
        while True:
            if row == len(insertion):
                insertion.append([letter])
                recording.append([top])
                break
            current = insertion[row]
            pos = bisect_right(current, letter)
            if pos == len(current):
                current.append(letter)
                recording[row].append(top)
                break
            current[pos], letter = letter, current[pos]
            row += 1
    return Tableau.from_rows(insertion), Tableau.from_rows(recording)


def rsk_word(w: Sequence[int]) -> Tuple[Tableau, Tableau]:
    """RSK of a word, recorded by positions."""
    return rsk(Biword(pairs=tuple((i + 1, x) for i, x in enumerate(w))))


def rotate_columns(matrix: ContingencyMatrix, steps: int = 1) -> ContingencyMatrix:
    """Column j moves to column ``j - steps`` (mod the number of columns)."""
    m = matrix.num_columns
    if m == 0:
        return matrix
    return ContingencyMatrix(
        rows=tuple(tuple(row[(j + steps) % m] for j in range(m)) for row in matrix.rows)
    )


def enumerate_matrices(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> List[ContingencyMatrix]:
    """All non-negative integer matrices with the given margins."""
    found: List[ContingencyMatrix] = []
    remaining = list(col_sums)
    rows: List[Tuple[int, ...]] = []

    def fill_row(i: int, j: int, left: int, current: List[int]) -> None:
        if j == len(col_sums):
            if left == 0:
                rows.append(tuple(current))
                place(i + 1)
                rows.pop()
            return
        for x in range(min(left, remaining[j]), -1, -1):
            remaining[j] -= x
            current.append(x)
            fill_row(i, j + 1, left - x, current)
            current.pop()
            remaining[j] += x

    def place(i: int) -> None:
        if i == len(row_sums):
            if not any(remaining):
                found.append(ContingencyMatrix(rows=tuple(rows)))
            return
        fill_row(i, 0, row_sums[i], [])

    if sum(row_sums) == sum(col_sums):
        place(0)
    return found
