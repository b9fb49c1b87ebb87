"""Charge, cocharge and depth statistics on words."""

from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from promotion_sieve.tableaux import Word


class ContentError(ValueError):
    """The word's content is not of the required form."""


class DepthSequence(BaseModel):
    """Uncancelled counts of ``j+1`` in each ``{j, j+1}`` subword."""

    model_config = ConfigDict(frozen=True)

    depths: Tuple[int, ...]
    """depths[j-1] belongs to the letter pair (j, j+1)."""

    def rotated(self, steps: int = 1) -> "DepthSequence":
        if not self.depths:
            return self
        steps %= len(self.depths)
        return DepthSequence(depths=self.depths[steps:] + self.depths[:steps])


def letter_counts(w: Sequence[int]) -> List[int]:
    """Multiplicities of the letters 1..max(w)."""
    counts = [0] * max(w, default=0)
    for x in w:
        if x < 1:
            raise ContentError(f"letters must be positive, got {x}")
        counts[x - 1] += 1
    return counts


def _require_partition_content(w: Sequence[int]) -> List[int]:
    counts = letter_counts(w)
    if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)):
        raise ContentError(
            f"content {counts} is not a partition; sort the content first"
        )
    return counts


def _require_permutation(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ContentError(f"{list(p)} is not a permutation of 1..{len(p)}")


def standard_subwords(w: Word) -> List[Word]:
    """Split a partition-content word into its standard subwords.

    Each subword starts at the rightmost unused 1 and repeatedly takes the
    nearest unused i+1 to the left, wrapping around to the right end when
    none is left of the current letter.
    """
    counts = _require_partition_content(w)
    used = [False] * len(w)
    subwords: List[Word] = []
    for _ in range(counts[0] if counts else 0):
        pos = max(p for p in range(len(w)) if w[p] == 1 and not used[p])
        used[pos] = True
        taken = [pos]
        letter = 1
        while True:
            target = letter + 1
            candidates = [p for p in range(len(w)) if w[p] == target and not used[p]]
            if not candidates:
                break
            left = [p for p in candidates if p < pos]
            pos = max(left) if left else max(candidates)
            used[pos] = True
            taken.append(pos)
            letter = target
        subwords.append(tuple(w[p] for p in sorted(taken)))
    return subwords


def _standard_charge(p: Sequence[int]) -> int:
    position = {x: i for i, x in enumerate(p)}
    index = total = 0
    for letter in range(2, len(p) + 1):
        if position[letter] > position[letter - 1]:
            index += 1
        total += index
    return total


def charge(w: Word) -> int:
    """Sum of the charges of the standard subwords."""
    return sum(_standard_charge(sub) for sub in standard_subwords(w))


def cocharge(w: Word) -> int:
    """Sum of ``binomial(len, 2) - charge`` over the standard subwords."""
    total = 0
    for sub in standard_subwords(w):
        total += len(sub) * (len(sub) - 1) // 2 - _standard_charge(sub)
    return total


def cocharge_values(p: Word) -> List[int]:
    """Per-letter cocharge values of a permutation.

    The value at 1 is 0; the value at j repeats the value at j-1 when j-1
    stands left of j and grows by one otherwise.
    """
    _require_permutation(p)
    position = {x: i for i, x in enumerate(p)}
    values = [0] if p else []
    for letter in range(2, len(p) + 1):
        step = 0 if position[letter - 1] < position[letter] else 1
        values.append(values[-1] + step)
    return values


def major_index(w: Sequence[int]) -> int:
    """Sum of the 1-based descent positions."""
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def inverse(p: Word) -> Word:
    _require_permutation(p)
    result = [0] * len(p)
    for i, x in enumerate(p):
        result[x - 1] = i + 1
    return tuple(result)


def charge_by_major_index(p: Word) -> int:
    """Charge of a permutation as the major index of its reversed inverse."""
    return major_index(tuple(reversed(inverse(p))))


def rotate_right(p: Word) -> Word:
    """Move the last letter to the front."""
    return p[-1:] + p[:-1] if p else p


def depth_sequence(w: Word, k: int = 0) -> DepthSequence:
    """Cancel adjacent ``(j+1, j)`` pairs in each two-letter subword.

    ``k`` is the alphabet size; it defaults to the largest letter.
    """
    k = k or max(w, default=0)
    depths = []
    for j in range(1, k):
        open_count = 0
        for x in w:
            if x == j + 1:
                open_count += 1
            elif x == j and open_count:
                open_count -= 1
        depths.append(open_count)
    return DepthSequence(depths=tuple(depths))


def charge_rectangular(w: Word, k: int) -> int:
    """Charge of a word of content k^n from its depth sequence."""
    counts = letter_counts(w)
    if len(counts) > k or len(set(counts)) > 1 or (w and len(counts) != k):
        raise ContentError(
            f"content {counts} is not rectangular over an alphabet of size {k}"
        )
    depths = depth_sequence(w, k).depths
    return sum(depth * (k - j) for j, depth in enumerate(depths, start=1))
