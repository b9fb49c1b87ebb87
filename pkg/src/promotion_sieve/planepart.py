"""Gelfand-Tsetlin patterns, plane partitions and stretched hook tableaux."""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from promotion_sieve.tableaux import Tableau, shst_shape


class GTPattern(BaseModel):
    """Triangular array of prefix counts, rows of length k, k-1, ..., 1."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]
    """Rows from the top (length k) down to the single bottom entry."""

    @model_validator(mode="after")
    def _check_interlacing(self) -> "GTPattern":
        k = len(self.rows)
        for idx, row in enumerate(self.rows):
            if len(row) != k - idx:
                raise ValueError(
                    f"row {idx + 1} of a {k}-row pattern must have {k - idx} entries"
                )
        for idx in range(k - 1):
            upper, lower = self.rows[idx], self.rows[idx + 1]
            for i, x in enumerate(lower):
                if not upper[i] >= x >= upper[i + 1]:
                    raise ValueError(
                        f"rows {idx + 1} and {idx + 2} do not interlace "
                        f"at entry {i + 1}"
                    )
        return self

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, j: int, i: int) -> int:
        """Cells of tableau row ``i`` with label at most ``j`` (both 1-based)."""
        return self.rows[self.size - j][i - 1]


class PlanePartition(BaseModel):
    """An a x b array with entries in 0..n, weakly increasing in rows and columns."""

    model_config = ConfigDict(frozen=True)

    a: int
    """Number of rows."""

    b: int
    """Number of columns."""

    n: int
    """Entry bound."""

    rows: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_monotone(self) -> "PlanePartition":
        if len(self.rows) != self.a or any(len(row) != self.b for row in self.rows):
            raise ValueError(f"plane partition must be a {self.a} x {self.b} array")
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                if not 0 <= x <= self.n:
                    raise ValueError(f"entry {x} is outside 0..{self.n}")
                if c and row[c - 1] > x:
                    raise ValueError(f"row {r + 1} must weakly increase")
                if r and self.rows[r - 1][c] > x:
                    raise ValueError(f"column {c + 1} must weakly increase")
        return self

    @property
    def size(self) -> int:
        return sum(sum(row) for row in self.rows)


def gt_pattern(t: Tableau, k: Optional[int] = None) -> GTPattern:
    """Pattern with entry (j, i) = cells of row i labelled at most j."""
    if not t.shape.is_straight:
        raise ValueError("GT patterns need a straight shape")
    k = k or t.max_entry
    if t.shape.num_rows > k or t.max_entry > k:
        raise ValueError(f"tableau does not fit an alphabet of size {k}")
    rows = []
    for j in range(k, 0, -1):
        rows.append(
            tuple(
                sum(1 for x in t.rows[i] if x <= j) if i < len(t.rows) else 0
                for i in range(j)
            )
        )
    return GTPattern(rows=tuple(rows))


def gt_to_tableau(p: GTPattern) -> Tableau:
    """Inverse of ``gt_pattern``; trailing empty rows are dropped."""
    k = p.size
    rows: List[List[int]] = []
    for i in range(1, k + 1):
        row: List[int] = []
        for j in range(i, k + 1):
            previous = p.entry(j - 1, i) if j > i else 0
            row.extend([j] * (p.entry(j, i) - previous))
        rows.append(row)
    while rows and not rows[-1]:
        rows.pop()
    return Tableau.from_rows(rows)


def _check_shst(t: Tableau, a: int, b: int, n: int) -> None:
    if t.shape != shst_shape(a, b, n):
        raise ValueError(
            f"tableau shape {t.shape} is not a stretched hook ({a},{b},{n})"
        )
    counts: Dict[int, int] = {}
    for row in t.rows:
        for x in row:
            counts[x] = counts.get(x, 0) + 1
    if counts != {j: n for j in range(1, a + b + 2)}:
        raise ValueError(f"content must be {n} copies of each of 1..{a + b + 1}")


def shst_to_pp(t: Tableau, a: int, b: int, n: int) -> PlanePartition:
    """Read the free entries of the GT pattern as an a x b plane partition.

    Entry (r, c) is the pattern entry at tableau row ``b + 1 - c`` and label
    ``b + 1 - c + r`` (1-based rows and labels, 0-based r and c).
    """
    _check_shst(t, a, b, n)
    pattern = gt_pattern(t, a + b + 1)
    rows = []
    for r in range(a):
        rows.append(tuple(pattern.entry(b + 1 - c + r, b + 1 - c) for c in range(b)))
    return PlanePartition(a=a, b=b, n=n, rows=tuple(rows))


def pp_to_shst(p: PlanePartition) -> Tableau:
    """Inverse of ``shst_to_pp``."""
    a, b, n = p.a, p.b, p.n
    k = a + b + 1
    rows: List[List[int]] = []
    remaining = {j: n for j in range(1, k + 1)}
    for i in range(2, b + 2):
        c = b + 1 - i
        row: List[int] = []
        previous = 0
        for j in range(i, k + 1):
            count = p.rows[j - i][c] if j - i < a else n
            row.extend([j] * (count - previous))
            remaining[j] -= count - previous
            previous = count
        rows.append(row)
    first = [j for j in range(1, k + 1) for _ in range(remaining[j])]
    return Tableau.from_rows([first] + rows)


def pp_rowmotion(p: PlanePartition) -> PlanePartition:
    """Product of piecewise-linear toggles, one anti-diagonal at a time.

    Diagonals ``r - c`` are processed from ``a - 1`` down to ``1 - b``. A cell
    becomes ``min(upper) + max(lower) - value`` where the upper neighbours are
    (r+1, c) and (r, c+1), defaulting to n, and the lower ones are (r-1, c)
    and (r, c-1), defaulting to 0. Under ``shst_to_pp`` this is inverse
    promotion.
    """
    a, b, n = p.a, p.b, p.n
    grid = [list(row) for row in p.rows]

    def at(r: int, c: int, default: int) -> int:
        if 0 <= r < a and 0 <= c < b:
            return grid[r][c]
        return default

    for diagonal in range(a - 1, -b, -1):
        for r in range(a):
            c = r - diagonal
            if not 0 <= c < b:
                continue
            upper = min(at(r + 1, c, n), at(r, c + 1, n))
            lower = max(at(r - 1, c, 0), at(r, c - 1, 0))
            grid[r][c] = upper + lower - grid[r][c]
    return PlanePartition(a=a, b=b, n=n, rows=tuple(tuple(row) for row in grid))


def enumerate_pp(a: int, b: int, n: int) -> List[PlanePartition]:
    """All a x b plane partitions with entries at most n, lexicographically."""
    cells = [(r, c) for r in range(a) for c in range(b)]
    grid: Dict[Tuple[int, int], int] = {}
    found: List[PlanePartition] = []

    def place(k: int) -> None:
        if k == len(cells):
            rows = tuple(tuple(grid[(r, c)] for c in range(b)) for r in range(a))
            found.append(PlanePartition(a=a, b=b, n=n, rows=rows))
            return
        r, c = cells[k]
        low = max(grid.get((r - 1, c), 0), grid.get((r, c - 1), 0))
        for x in range(low, n + 1):
            grid[(r, c)] = x
            place(k + 1)
        grid.pop((r, c), None)

    place(0)
    return found


def first_row_sum(t: Tableau) -> int:
    return sum(t.rows[0]) if t.rows else 0


def shst_charge_formula(t: Tableau, a: int, b: int, n: int) -> int:
    """Charge of a stretched hook tableau from its first-row sum."""
    return ((a + b + 2) * a + 1) * n - first_row_sum(t)
