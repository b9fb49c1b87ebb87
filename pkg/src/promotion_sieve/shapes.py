"""Partitions, compositions and skew shapes."""

from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

Cell = Tuple[int, int]


class Partition(BaseModel):
    """A weakly decreasing sequence of positive integers."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()
    """Parts in weakly decreasing order; the empty tuple is the empty partition."""

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data):
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        return data

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive, got {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(
                f"partition parts must be weakly decreasing, got {list(parts)}"
            )
        return parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Return part i (0-based), or 0 past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class Composition(BaseModel):
    """A finite sequence of non-negative integers, e.g. a content vector."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = ()
    """Entries; zeros are allowed anywhere."""

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data):
        if isinstance(data, (list, tuple)):
            return {"parts": tuple(data)}
        return data

    @field_validator("parts")
    @classmethod
    def _check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 0 for p in parts):
            raise ValueError(
                f"composition entries must be non-negative, got {list(parts)}"
            )
        return parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def is_partition(self) -> bool:
        """True when the entries are weakly decreasing."""
        return all(
            self.parts[i] >= self.parts[i + 1] for i in range(len(self.parts) - 1)
        )

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class SkewShape(BaseModel):
    """The cells of ``outer`` that are not in ``inner``."""

    model_config = ConfigDict(frozen=True)

    outer: Partition
    """Outer partition."""

    inner: Partition = Partition()
    """Inner partition; must fit inside ``outer``."""

    @model_validator(mode="after")
    def _check_containment(self) -> "SkewShape":
        if self.inner.length > self.outer.length or any(
            self.inner.part(i) > self.outer.part(i) for i in range(self.inner.length)
        ):
            raise ValueError(
                f"inner partition {self.inner} does not fit inside {self.outer}"
            )
        return self

    @classmethod
    def straight(cls, parts: Sequence[int]) -> "SkewShape":
        return cls(outer=Partition(parts=tuple(parts)))

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    @property
    def num_rows(self) -> int:
        return self.outer.length

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_span(self, row: int) -> Tuple[int, int]:
        """Half-open column range ``[start, stop)`` occupied by ``row``."""
        return self.inner.part(row), self.outer.part(row)

    def contains(self, cell: Cell) -> bool:
        r, c = cell
        if r < 0 or r >= self.outer.length:
            return False
        start, stop = self.row_span(r)
        return start <= c < stop

    def cells(self) -> List[Cell]:
        """All cells in row-major order (top row first, left to right)."""
        result: List[Cell] = []
        for r in range(self.outer.length):
            start, stop = self.row_span(r)
            result.extend((r, c) for c in range(start, stop))
        return result

    def __str__(self) -> str:
        if self.is_straight:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram of ``p``."""
    if not p.parts:
        return Partition()
    return Partition(
        parts=tuple(sum(1 for part in p.parts if part > j) for j in range(p.parts[0]))
    )


def n_stat(p: Partition) -> int:
    """Return n(p), the sum of binomial(p'_j, 2) over the conjugate columns."""
    return sum(col * (col - 1) // 2 for col in conjugate(p).parts)


def stretch(p: Partition, n: int) -> Partition:
    """Multiply every part by ``n``."""
    if n <= 0:
        return Partition()
    return Partition(parts=tuple(n * part for part in p.parts))


def rectangle(a: int, b: int) -> Partition:
    """The rectangle a^b: ``b`` rows of length ``a``."""
    if a <= 0 or b <= 0:
        return Partition()
    return Partition(parts=(a,) * b)


def sorted_partition(c: Iterable[int]) -> Partition:
    """Sort a composition into a partition, dropping zeros."""
    return Partition(parts=tuple(sorted((x for x in c if x > 0), reverse=True)))


def rotate(c: Composition, d: int = 1) -> Composition:
    """Rotate left ``d`` times: position 1 moves to the end each step."""
    if not c.parts:
        return c
    d %= c.length
    return Composition(parts=c.parts[d:] + c.parts[:d])


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    return [Partition(parts=p) for p in _partitions(n, n)]


def skew_shapes(max_outer: int) -> List[SkewShape]:
    """All ``outer/inner`` with ``|outer| <= max_outer`` and at least one cell."""
    shapes = []
    for total in range(1, max_outer + 1):
        for outer in partitions(total):
            for inner_size in range(total):
                for inner in partitions(inner_size):
                    if inner.length <= outer.length and all(
                        inner.part(i) <= outer.part(i) for i in range(inner.length)
                    ):
                        shapes.append(SkewShape(outer=outer, inner=inner))
    return shapes


def compositions(n: int, length: int) -> List[Composition]:
    """All weak compositions of ``n`` with exactly ``length`` entries."""

    def build(remaining: int, slots: int) -> List[Tuple[int, ...]]:
        if slots == 0:
            return [()] if remaining == 0 else []
        return [
            (first,) + rest
            for first in range(remaining, -1, -1)
            for rest in build(remaining - first, slots - 1)
        ]

    return [Composition(parts=p) for p in build(n, length)]


def direct_sum(shapes: Sequence[SkewShape]) -> SkewShape:
    """Place shapes corner to corner, the first at the top right.

    Each later summand sits strictly below and strictly to the left of the
    previous ones, so no two summands share a row or a column.
    """
    widths = [s.outer.part(0) for s in shapes]
    outer: List[int] = []
    inner: List[int] = []
    for k, shape in enumerate(shapes):
        offset = sum(widths[k + 1 :])
        for r in range(shape.outer.length):
            outer.append(shape.outer.parts[r] + offset)
            inner.append(shape.inner.part(r) + offset)
    while inner and inner[-1] == 0:
        inner.pop()
    return SkewShape(
        outer=Partition(parts=tuple(outer)), inner=Partition(parts=tuple(inner))
    )


def sm_shape(nu: Partition, n: int) -> SkewShape:
    """Disjoint rows of lengths ``n * nu_j``."""
    if not nu.parts:
        raise ValueError("sm_shape needs a non-empty partition")
    return direct_sum([SkewShape.straight((n * part,)) for part in nu.parts])


def rectangles_shape(rects: Sequence[Tuple[int, int]]) -> SkewShape:
    """Direct sum of rectangles given as ``(a, b)`` pairs meaning a^b."""
    return direct_sum([SkewShape(outer=rectangle(a, b)) for a, b in rects])


def ribbon_shape(alpha: Composition) -> SkewShape:
    """Ribbon with ``alpha_i`` cells in row i, row 1 on top.

    Each row ends directly below the first cell of the row above it, so
    consecutive rows share exactly one column.
    """
    if not alpha.parts or any(p <= 0 for p in alpha.parts):
        raise ValueError(f"ribbon rows must be positive, got {list(alpha.parts)}")
    length = alpha.length
    start = [0] * length
    for i in range(length - 2, -1, -1):
        start[i] = start[i + 1] + alpha.parts[i + 1] - 1
    outer = tuple(start[i] + alpha.parts[i] for i in range(length))
    inner = tuple(s for s in start if s > 0)
    return SkewShape(outer=Partition(parts=outer), inner=Partition(parts=inner))


def _parse_parts(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,2"``."""
    return Partition(parts=_parse_parts(text))


def parse_composition(text: str) -> Composition:
    """Parse ``"2,0,1"``."""
    return Composition(parts=_parse_parts(text))


def parse_skew_shape(text: str) -> SkewShape:
    """Parse ``"4,2,2"`` or ``"outer/inner"`` such as ``"4,2/2"``."""
    outer, _, inner = text.partition("/")
    return SkewShape(outer=parse_partition(outer), inner=parse_partition(inner))
