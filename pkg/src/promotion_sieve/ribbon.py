"""Ribbon tilings, ribbon tableaux and their signs."""

from functools import lru_cache
from typing import FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import divisors

from promotion_sieve.qpoly import CycloValue, QPoly, eval_at_root, kostka_foulkes
from promotion_sieve.shapes import (
    Cell,
    Composition,
    Partition,
    SkewShape,
    rectangle,
    sorted_partition,
)

Ribbon = Tuple[Cell, ...]
"""Cells of one ribbon, head (top right) first."""


class TilingSignError(AssertionError):
    """Two ribbon tilings of one shape gave different signs."""


class RibbonTiling(BaseModel):
    """A partition of a skew shape's cells into ribbons."""

    model_config = ConfigDict(frozen=True)

    ribbons: Tuple[Ribbon, ...]

    @property
    def sign(self) -> int:
        """Product of ``(-1)^(rows - 1)`` over the ribbons."""
        total = sum(len({r for r, _ in ribbon}) - 1 for ribbon in self.ribbons)
        return -1 if total % 2 else 1

    def heads(self) -> List[Cell]:
        return [ribbon[0] for ribbon in self.ribbons]


class DltRecord(BaseModel):
    """Both sides of the ribbon-count identity at a root of unity."""

    shape: str
    content: Tuple[int, ...]
    j: int
    ribbon_count: int
    epsilon: int
    kf_value: Optional[int] = None
    """Kostka-Foulkes value at the primitive j-th root, None if not an integer."""

    ok: bool


def _ribbons_from(head: Cell, k: int, free: FrozenSet[Cell]) -> List[Ribbon]:
    """Left/down lattice paths of ``k`` free cells starting at ``head``."""
    paths: List[Ribbon] = []

    def extend(path: List[Cell]) -> None:
        if len(path) == k:
            paths.append(tuple(path))
            return
        r, c = path[-1]
        for nxt in ((r + 1, c), (r, c - 1)):
            if nxt in free:
                path.append(nxt)
                extend(path)
                path.pop()

    extend([head])
    return paths


def ribbon_tilings(shape: SkewShape, k: int) -> List[RibbonTiling]:
    """All tilings of ``shape`` by ribbons of ``k`` cells.

    The uncovered cell in the topmost row and rightmost column is always a
    head, so every tiling is produced exactly once.
    """
    if k < 1:
        raise ValueError(f"ribbon size must be positive, got {k}")
    cells = frozenset(shape.cells())
    if len(cells) % k:
        return []
    found: List[RibbonTiling] = []

    def cover(free: FrozenSet[Cell], placed: List[Ribbon]) -> None:
        if not free:
            found.append(RibbonTiling(ribbons=tuple(placed)))
            return
        head = min(free, key=lambda cell: (cell[0], -cell[1]))
        for ribbon in _ribbons_from(head, k, free):
            placed.append(ribbon)
            cover(free - set(ribbon), placed)
            placed.pop()

    cover(cells, [])
    return found


def epsilon(shape: SkewShape, k: int) -> int:
    """Common sign of every k-ribbon tiling, or 0 when none exists.

    Raises:
        TilingSignError: If two tilings disagree.
    """
    signs = {tiling.sign for tiling in ribbon_tilings(shape, k)}
    if len(signs) > 1:
        raise TilingSignError(f"k={k} tilings of {shape} have both signs")
    return signs.pop() if signs else 0


def is_horizontal_strip(tiling: RibbonTiling, shape: SkewShape) -> bool:
    """True when the cell above every head lies outside the strip."""
    return all(not shape.contains((r - 1, c)) for r, c in tiling.heads())


def _between(inner: Tuple[int, ...], outer: Tuple[int, ...], size: int):
    """Partitions kappa with inner <= kappa <= outer and |kappa/inner| = size."""
    rows = len(outer)
    padded = inner + (0,) * (rows - len(inner))

    def build(r: int, left: int, cap: int):
        if r == rows:
            if left == 0:
                yield ()
            return
        low = padded[r]
        for x in range(min(outer[r], cap, low + left), low - 1, -1):
            for rest in build(r + 1, left - (x - low), x):
                yield (x,) + rest

    for kappa in build(0, size, outer[0] if outer else 0):
        yield tuple(x for x in kappa if x > 0)


@lru_cache(maxsize=None)
def _strip_count(inner: Tuple[int, ...], outer: Tuple[int, ...], k: int) -> int:
    shape = SkewShape(outer=Partition(parts=outer), inner=Partition(parts=inner))
    return sum(1 for t in ribbon_tilings(shape, k) if is_horizontal_strip(t, shape))


def count_ribbon_tableaux(shape: SkewShape, weights: Composition, k: int) -> int:
    """Semistandard k-ribbon tableaux of ``shape`` with content ``weights``.

    Step i adds a horizontal strip of ``weights_i`` ribbons; the count runs
    over every chain of intermediate partitions and every strip tiling.
    """
    if k < 1:
        raise ValueError(f"ribbon size must be positive, got {k}")
    if shape.size != k * weights.size:
        return 0
    outer = shape.outer.parts
    parts = weights.parts

    @lru_cache(maxsize=None)
    def count(kappa: Tuple[int, ...], i: int) -> int:
        if i == len(parts):
            return 1 if kappa == outer else 0
        total = 0
        for nxt in _between(kappa, outer, k * parts[i]):
            strips = _strip_count(kappa, nxt, k) if nxt != kappa else 1
            if strips:
                total += strips * count(nxt, i + 1)
        return total

    return count(shape.inner.parts, 0)


def dlt_check(shape: SkewShape, weights: Composition, j: int) -> DltRecord:
    """Compare ribbon counts with the Kostka-Foulkes value at a j-th root.

    The charge-graded side uses the content repeated ``j`` times, sorted.
    """
    count = count_ribbon_tableaux(shape, weights, j)
    sign = epsilon(shape, j)
    stretched = sorted_partition(tuple(weights.parts) * j)
    value = eval_at_root(kostka_foulkes(shape, stretched), j, 1)
    kf_value = value.as_integer() if value.is_integer() else None
    parity = -1 if (weights.size * (j - 1)) % 2 else 1
    ok = kf_value is not None and count == parity * sign * kf_value
    return DltRecord(
        shape=str(shape),
        content=weights.parts,
        j=j,
        ribbon_count=count,
        epsilon=sign,
        kf_value=kf_value,
        ok=ok,
    )


def rectangle_sign(a: int, b: int, ell: int) -> int:
    """Sign (-1)^((ab/ell)(ell-1)) * epsilon_ell(a^b); 0 unless ell divides ab."""
    if (a * b) % ell:
        return 0
    sign = epsilon(SkewShape(outer=rectangle(a, b)), ell)
    return sign * (-1 if ((a * b // ell) * (ell - 1)) % 2 else 1)


def sign_exponent(a: int, b: int, modulus: int) -> Optional[int]:
    """Least E in 1..modulus matching every non-zero rectangle sign.

    For each divisor ell of ``modulus`` with ``rectangle_sign(a, b, ell) != 0``
    the value xi^E at a primitive ell-th root xi must equal that sign.
    """
    targets = []
    for ell in divisors(modulus):
        sign = rectangle_sign(a, b, int(ell))
        if sign:
            targets.append((int(ell), CycloValue.integer(int(ell), sign)))
    for exponent in range(1, modulus + 1):
        power = QPoly.monomial(exponent)
        if all(eval_at_root(power, ell, 1) == target for ell, target in targets):
            return exponent
    return None
