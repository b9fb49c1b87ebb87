"""Jeu-de-taquin promotion on tableaux and orbit decomposition."""

import concurrent.futures
from functools import reduce
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import ilcm

from promotion_sieve.shapes import Cell
from promotion_sieve.tableaux import Tableau


class EntryRangeError(ValueError):
    """A tableau entry lies outside the alphabet 1..m."""


class NotClosedError(ValueError):
    """A set is not closed under the map applied to it."""


class PromotionMismatch(AssertionError):
    """Sliding promotion and the Bender-Knuth composition disagree."""


_INF = float("inf")


def _check_range(t: Tableau, m: int) -> None:
    for row in t.rows:
        for x in row:
            if not 1 <= x <= m:
                raise EntryRangeError(f"entry {x} is outside the alphabet 1..{m}")


def _value(t: Tableau, grid: Dict[Cell, Optional[int]], cell: Cell, missing: float):
    if not t.shape.contains(cell):
        return missing
    value = grid[cell]
    return missing if value is None else value


def _promote_slides(t: Tableau, m: int) -> Tableau:
    grid: Dict[Cell, Optional[int]] = dict(t.grid())
    dots = sorted((cell for cell, x in grid.items() if x == 1), key=lambda c: -c[1])
    for cell in dots:
        grid[cell] = None
    for r, c in dots:
        while True:
            right = _value(t, grid, (r, c + 1), _INF)
            below = _value(t, grid, (r + 1, c), _INF)
            if right == _INF and below == _INF:
                break
            # ties go below
            target = (r + 1, c) if below <= right else (r, c + 1)
            grid[(r, c)], grid[target] = grid[target], None
            r, c = target
    final = {cell: m if x is None else x - 1 for cell, x in grid.items()}
    return Tableau.from_grid(t.shape, final)


def bender_knuth(t: Tableau, i: int) -> Tableau:
    """Swap the free ``i``s and ``i+1``s in every row."""
    grid = t.grid()
    shape = t.shape
    result = dict(grid)
    for r in range(shape.num_rows):
        start, stop = shape.row_span(r)
        free: List[Cell] = []
        for c in range(start, stop):
            x = grid[(r, c)]
            if x == i and grid.get((r + 1, c)) == i + 1:
                continue
            if x == i + 1 and grid.get((r - 1, c)) == i:
                continue
            if x in (i, i + 1):
                free.append((r, c))
        lows = sum(1 for cell in free if grid[cell] == i)
        highs = len(free) - lows
        for k, cell in enumerate(free):
            result[cell] = i if k < highs else i + 1
    return Tableau.from_grid(shape, result)


def promote_bender_knuth(t: Tableau, m: int) -> Tableau:
    """Promotion as the composition of Bender-Knuth involutions, ``t_1`` first."""
    _check_range(t, m)
    for i in range(1, m):
        t = bender_knuth(t, i)
    return t


def promote(t: Tableau, m: int, cross_check: bool = False) -> Tableau:
    """Remove the 1s, slide the holes out, decrement and refill with ``m``.

    Holes are slid one at a time starting from the rightmost; each hole
    trades places with the smaller of its right and lower neighbours, the
    lower one on ties. A missing neighbour counts as infinitely large.

    Args:
        t: The tableau to promote.
        m: Alphabet size.
        cross_check: Also compute the Bender-Knuth composition and raise
            PromotionMismatch if the two results differ.

    Returns:
        The promoted tableau, of the same shape.
    """
    _check_range(t, m)
    result = _promote_slides(t, m)
    if cross_check:
        other = promote_bender_knuth(t, m)
        if other != result:
            raise PromotionMismatch(
                f"promotion of {t} gave {result} by sliding but {other} by "
                "Bender-Knuth involutions"
            )
    return result


def promote_inverse(t: Tableau, m: int) -> Tableau:
    """Inverse promotion: the ``m``s slide back towards the inner corner."""
    _check_range(t, m)
    grid: Dict[Cell, Optional[int]] = dict(t.grid())
    dots = sorted((cell for cell, x in grid.items() if x == m), key=lambda c: c[1])
    for cell in dots:
        grid[cell] = None
    for r, c in dots:
        while True:
            left = _value(t, grid, (r, c - 1), -_INF)
            above = _value(t, grid, (r - 1, c), -_INF)
            if left == -_INF and above == -_INF:
                break
            # ties go above
            target = (r - 1, c) if above >= left else (r, c - 1)
            grid[(r, c)], grid[target] = grid[target], None
            r, c = target
    final = {cell: 1 if x is None else x + 1 for cell, x in grid.items()}
    return Tableau.from_grid(t.shape, final)


def promote_power(t: Tableau, m: int, k: int, cross_check: bool = False) -> Tableau:
    """Apply promotion ``k`` times; negative ``k`` uses the inverse."""
    for _ in range(abs(k)):
        t = promote(t, m, cross_check) if k > 0 else promote_inverse(t, m)
    return t


class Orbit(BaseModel):
    """A cycle of a bijection, starting at its canonical representative."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    elements: Tuple[Any, ...]
    """Cyclically ordered: the map sends element i to element i + 1."""

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def representative(self) -> Any:
        return self.elements[0]


def successors(
    elements: Sequence[Hashable],
    step: Callable[[Any], Any],
    threads: int = 1,
    advance: Optional[Callable[[], None]] = None,
) -> List[int]:
    """Index of ``step(x)`` for every x, computed on a thread pool.

    Raises:
        NotClosedError: If some image falls outside ``elements``.
    """
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("elements must be distinct")

    def image(x):
        y = step(x)
        if advance is not None:
            advance()
        return y

    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        images = list(executor.map(image, elements))

    result: List[int] = []
    for x, y in zip(elements, images):
        if y not in index:
            raise NotClosedError(f"the image of {x} is not in the set")
        result.append(index[y])
    return result


def cycles(
    elements: Sequence[Any],
    successor: Sequence[int],
    key: Optional[Callable[[Any], Any]] = None,
) -> List[Orbit]:
    """Orbits of the permutation ``i -> successor[i]`` on ``elements``."""
    rank = (lambda i: key(elements[i])) if key is not None else (lambda i: i)
    seen = [False] * len(elements)
    found: List[List[int]] = []
    for start in range(len(elements)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = successor[i]
        if i != start:
            raise NotClosedError("the map is not a bijection on the set")
        first = min(range(len(cycle)), key=lambda k: rank(cycle[k]))
        found.append(cycle[first:] + cycle[:first])
    found.sort(key=lambda cycle: rank(cycle[0]))
    return [Orbit(elements=tuple(elements[i] for i in cycle)) for cycle in found]


def decompose(
    elements: Sequence[Hashable],
    step: Callable[[Any], Any],
    threads: int = 1,
    key: Optional[Callable[[Any], Any]] = None,
    advance: Optional[Callable[[], None]] = None,
) -> List[Orbit]:
    """Split ``elements`` into cycles of ``step``.

    Images are computed on a thread pool; the result does not depend on
    ``threads``. Each orbit starts at its least element under ``key``
    (input order when ``key`` is None) and orbits are listed in the order of
    their representatives.

    Args:
        elements: The finite set, as a sequence of distinct hashable items.
        step: The bijection to decompose.
        threads: Worker threads for computing images.
        key: Sort key choosing the canonical representative.
        advance: Called once per computed image, e.g. to tick a progress bar.

    Returns:
        The list of orbits.

    Raises:
        NotClosedError: If some image falls outside ``elements``.
    """
    return cycles(elements, successors(elements, step, threads, advance), key)


def order_of(orbits: Sequence[Orbit]) -> int:
    """Least common multiple of the orbit lengths."""
    return int(reduce(ilcm, (o.length for o in orbits), 1))


def orbit_decomposition(
    tableaux: Sequence[Tableau],
    m: int,
    threads: int = 1,
    cross_check: bool = False,
    advance: Optional[Callable[[], None]] = None,
) -> Tuple[List[Orbit], int]:
    """Promotion orbits of a set of tableaux and the order of promotion.

    Returns:
        The orbits, each starting at its lexicographically least tableau, and
        the least common multiple of their lengths.
    """
    orbits = decompose(
        tableaux,
        lambda t: promote(t, m, cross_check),
        threads=threads,
        key=lambda t: t.rows,
        advance=advance,
    )
    return orbits, order_of(orbits)
