"""Semistandard tableaux on skew shapes."""

from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from promotion_sieve.shapes import (
    Cell,
    Composition,
    Partition,
    SkewShape,
    direct_sum,
    ribbon_shape,
    sm_shape,
)

Word = Tuple[int, ...]
"""A word over the positive integers."""


class Tableau(BaseModel):
    """A filling of a skew shape, stored row by row."""

    model_config = ConfigDict(frozen=True)

    shape: SkewShape
    """The underlying skew shape."""

    rows: Tuple[Tuple[int, ...], ...]
    """One entry tuple per row of ``shape.outer``, left to right."""

    @model_validator(mode="after")
    def _check_semistandard(self) -> "Tableau":
        shape = self.shape
        if len(self.rows) != shape.num_rows:
            raise ValueError(
                f"expected {shape.num_rows} rows for shape {shape}, "
                f"got {len(self.rows)}"
            )
        for r, row in enumerate(self.rows):
            start, stop = shape.row_span(r)
            if len(row) != stop - start:
                raise ValueError(
                    f"row {r + 1} must have {stop - start} entries, got {len(row)}"
                )
            if any(x < 1 for x in row):
                raise ValueError(f"entries must be positive, row {r + 1} is {row}")
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"rows must weakly increase, row {r + 1} is {row}")
            if r == 0:
                continue
            above_start, above_stop = shape.row_span(r - 1)
            for c in range(max(start, above_start), min(stop, above_stop)):
                if self.rows[r - 1][c - above_start] >= row[c - start]:
                    raise ValueError(
                        f"columns must strictly increase, column {c + 1} "
                        f"fails between rows {r} and {r + 1}"
                    )
        return self

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], inner: Sequence[int] = ()
    ) -> "Tableau":
        """Build a tableau whose outer shape is read off the row lengths."""
        inner_parts = tuple(inner) + (0,) * (len(rows) - len(inner))
        outer = tuple(inner_parts[r] + len(row) for r, row in enumerate(rows))
        shape = SkewShape(
            outer=Partition(parts=outer),
            inner=Partition(parts=tuple(x for x in inner if x > 0)),
        )
        return cls(shape=shape, rows=tuple(tuple(row) for row in rows))

    @classmethod
    def from_grid(cls, shape: SkewShape, grid: Dict[Cell, int]) -> "Tableau":
        """Build a tableau from a cell -> entry mapping."""
        rows = []
        for r in range(shape.num_rows):
            start, stop = shape.row_span(r)
            rows.append(tuple(grid[(r, c)] for c in range(start, stop)))
        return cls(shape=shape, rows=tuple(rows))

    def grid(self) -> Dict[Cell, int]:
        """Cell -> entry mapping with 0-based coordinates."""
        result: Dict[Cell, int] = {}
        for r, row in enumerate(self.rows):
            start = self.shape.inner.part(r)
            for i, x in enumerate(row):
                result[(r, start + i)] = x
        return result

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)

    def to_payload(self) -> dict:
        """JSON-ready dict with ``outer``, ``inner`` and ``rows``."""
        return {
            "outer": list(self.shape.outer.parts),
            "inner": list(self.shape.inner.parts),
            "rows": [list(row) for row in self.rows],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "Tableau":
        shape = SkewShape(
            outer=Partition(parts=tuple(payload["outer"])),
            inner=Partition(parts=tuple(payload.get("inner", ()))),
        )
        return cls(shape=shape, rows=tuple(tuple(row) for row in payload["rows"]))

    def __str__(self) -> str:
        return "/".join(
            "".join(str(x) if x < 10 else f"({x})" for x in row) for row in self.rows
        )


def reading_word(t: Tableau) -> Word:
    """Rows from bottom to top, each read left to right."""
    return tuple(x for row in reversed(t.rows) for x in row)


def content(t: Tableau, m: Optional[int] = None) -> Composition:
    """Entry multiplicities; component i counts the entry i + 1."""
    length = t.max_entry if m is None else m
    counts = [0] * length
    for row in t.rows:
        for x in row:
            counts[x - 1] += 1
    return Composition(parts=tuple(counts))


def _fill(
    shape: SkewShape, counts: Optional[List[int]], bound: int
) -> List[Tableau]:
    """Backtrack over cells in row-major order.

    ``counts`` holds the remaining multiplicity of each entry, or None when
    any content with entries up to ``bound`` is allowed.
    """
    cells = shape.cells()
    grid: Dict[Cell, int] = {}
    found: List[Tableau] = []

    def place(k: int) -> None:
        if k == len(cells):
            found.append(Tableau.from_grid(shape, grid))
            return
        r, c = cells[k]
        low = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        # entries below this cell in its column still need room
        depth = 0
        while shape.contains((r + depth + 1, c)):
            depth += 1
        for x in range(low, bound - depth + 1):
            if counts is not None:
                if counts[x - 1] == 0:
                    continue
                counts[x - 1] -= 1
            grid[(r, c)] = x
            place(k + 1)
            if counts is not None:
                counts[x - 1] += 1
        grid.pop((r, c), None)

    place(0)
    return found


def enumerate_ssyt(shape: SkewShape, weights: Composition) -> List[Tableau]:
    """All semistandard fillings of ``shape`` with the given content.

    Output is lexicographic in the row-major entry sequence.
    """
    if weights.size != shape.size:
        return []
    return _fill(shape, list(weights.parts), weights.length)


def enumerate_bounded_ssyt(shape: SkewShape, k: int) -> List[Tableau]:
    """All semistandard fillings of ``shape`` with entries in ``1..k``."""
    return _fill(shape, None, k)


def enumerate_syt_ribbon(alpha: Composition) -> List[Tableau]:
    """Standard fillings of the ribbon with ``alpha_i`` cells in row i."""
    shape = ribbon_shape(alpha)
    return enumerate_ssyt(shape, Composition(parts=(1,) * shape.size))


def shst(a: int, b: int, n: int) -> List[Tableau]:
    """Stretched hook tableaux: shape ((a+1)n, n^b), content n^(a+b+1)."""
    return enumerate_ssyt(shst_shape(a, b, n), Composition(parts=(n,) * (a + b + 1)))


def shst_shape(a: int, b: int, n: int) -> SkewShape:
    return SkewShape.straight(((a + 1) * n,) + (n,) * b)


def sm_tableaux(nu: Partition, n: int) -> List[Tableau]:
    """Fillings of disjoint rows ``n * nu_j`` with content n^|nu|."""
    return enumerate_ssyt(sm_shape(nu, n), Composition(parts=(n,) * nu.size))


def direct_sum_tableau(parts: Sequence[Tableau]) -> Tableau:
    """Join tableaux on the direct sum of their shapes."""
    shape = direct_sum([t.shape for t in parts])
    return Tableau(shape=shape, rows=tuple(row for t in parts for row in t.rows))
