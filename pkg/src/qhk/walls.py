"""Young walls for the level-one highest weight ``Lambda0``.

A wall is stored as its block counts per column, rightmost column first, so a
valid wall is a weakly decreasing sequence. Block ``t`` of a column (counted
from the bottom, 0-based) has colour ``pattern[t mod h]`` and is a half-height
block when its colour is ``0`` or ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .cartan import Weight, build_datum
from .tableaux import residue_pattern


@dataclass(frozen=True, order=True)
class YoungWall:
    columns: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.columns)
        while cols and cols[-1] == 0:
            cols = cols[:-1]
        object.__setattr__(self, "columns", cols)
        if any(c < 0 for c in cols) or any(a < b for a, b in zip(cols, cols[1:])):
            raise ValueError(f"column counts must be weakly decreasing and nonnegative: {cols}")

    @property
    def size(self) -> int:
        return sum(self.columns)

    def is_ground_state(self) -> bool:
        return not self.columns

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.columns)) + ")"


def block_color(ell: int, t: int) -> int:
    pat = residue_pattern(ell)
    return pat[t % len(pat)]


@lru_cache(maxsize=None)
def column_height(ell: int, c: int) -> Fraction:
    if c < 0:
        raise ValueError("negative block count")
    half = Fraction(1, 2)
    return sum((half if block_color(ell, t) in (0, ell) else Fraction(1) for t in range(c)), Fraction(0))


def is_full(ell: int, c: int) -> bool:
    return column_height(ell, c).denominator == 1


def is_proper(ell: int, wall: YoungWall | Sequence[int]) -> bool:
    """No two nonempty full columns of the same height."""
    cols = _cols(wall)
    heights = [column_height(ell, c) for c in cols if c > 0 and is_full(ell, c)]
    return len(heights) == len(set(heights))


def weight_of_wall(ell: int, wall: YoungWall | Sequence[int]) -> Weight:
    m = [0] * (ell + 1)
    for c in _cols(wall):
        for t in range(c):
            m[block_color(ell, t)] -= 1
    return Weight(1, tuple(m))


def wall_content(ell: int, wall: YoungWall | Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in weight_of_wall(ell, wall).m)


def has_removable_delta(ell: int, wall: YoungWall | Sequence[int]) -> bool:
    """Can one full period of ``2l + 2`` blocks be taken off a single column
    leaving a weakly decreasing, proper wall other than the ground state?"""
    cols = _cols(wall)
    if not is_proper(ell, cols):
        raise ValueError(f"wall {cols} is not proper")
    h = 2 * ell + 2
    for k, c in enumerate(cols):
        if c < h:
            continue
        new = list(cols)
        new[k] = c - h
        if any(a < b for a, b in zip(new, new[1:])):
            continue
        if all(x == 0 for x in new):
            continue
        if is_proper(ell, new):
            return True
    return False


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_reduced(ell: int, beta: Weight | Sequence[int]) -> list[YoungWall]:
    """Proper walls of weight ``Lambda0 - beta`` with no removable delta."""
    coeffs = tuple(beta.m) if isinstance(beta, Weight) else tuple(int(x) for x in beta)
    build_datum(ell).root(coeffs)
    out = []
    for cols in _partitions(sum(coeffs), sum(coeffs)):
        if wall_content(ell, cols) != coeffs:
            continue
        if is_proper(ell, cols) and not has_removable_delta(ell, cols):
            out.append(YoungWall(cols))
    return out


def reduced_walls_of_size(ell: int, n: int) -> list[YoungWall]:
    return [
        YoungWall(cols)
        for cols in _partitions(n, n)
        if is_proper(ell, cols) and not has_removable_delta(ell, cols)
    ]


def build_Yi(ell: int, i: int) -> YoungWall:
    """The distinguished reduced wall of weight ``Lambda0 - 2 delta + alpha_i``."""
    build_datum(ell).check_index(i)
    if ell < 2:
        raise ValueError("the distinguished walls are defined for ell >= 2")
    if i == 0:
        return YoungWall((2 * ell + 1,))
    if i == ell:
        return YoungWall((ell + 1, ell))
    return YoungWall((2 * ell + 1 - i, i))


def _cols(wall: YoungWall | Sequence[int]) -> tuple[int, ...]:
    return wall.columns if isinstance(wall, YoungWall) else YoungWall(tuple(wall)).columns


@dataclass(frozen=True)
class CrossCheckRow:
    beta: tuple[int, ...]
    strict_partitions: int
    walls: int

    @property
    def match(self) -> bool:
        return self.strict_partitions == self.walls


def crosscheck(ell: int, max_height: int) -> list[CrossCheckRow]:
    """Strict partitions of content ``beta`` against reduced walls of weight ``Lambda0 - beta``.

    Both count basis vectors of weight ``Lambda0 - beta``, but the strict
    partition side spans the whole Fock space, so the numbers need not agree;
    rows are reported, not asserted.
    """
    from .dimensions import roots_of_height
    from .tableaux import shapes_of_weight

    rows = []
    for n in range(max_height + 1):
        for beta in roots_of_height(ell, n):
            rows.append(CrossCheckRow(beta, len(shapes_of_weight(ell, beta)), len(enumerate_reduced(ell, beta))))
    return rows
