"""Strict partitions, shifted diagrams and standard shifted tableaux.

Row ``i`` (1-based) of the shifted diagram of ``lam`` occupies columns
``i .. i + lam_i - 1``. Cells are coloured by the residue pattern
``0, 1, ..., l, l, ..., 1, 0`` of period ``h = 2l + 2`` along diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .cartan import Weight, build_datum

Cell = tuple[int, int]


@lru_cache(maxsize=None)
def residue_pattern(ell: int) -> tuple[int, ...]:
    if ell < 1:
        raise ValueError(f"invalid rank parameter ell={ell}")
    up = tuple(range(ell + 1))
    return up + tuple(reversed(up))


def residue(ell: int, i: int, j: int) -> int:
    """Residue of the cell in row ``i``, column ``j`` (both 1-based, ``j >= i``)."""
    if i < 1 or j < i:
        raise ValueError(f"invalid cell ({i}, {j})")
    pat = residue_pattern(ell)
    return pat[(j - i) % len(pat)]


@dataclass(frozen=True, order=True)
class StrictPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        p = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p) or any(a <= b for a, b in zip(p, p[1:])):
            raise ValueError(f"not a strict partition: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, lam in enumerate(self.parts, 1) for j in range(i, i + lam)]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def as_partition(lam: StrictPartition | Sequence[int]) -> StrictPartition:
    return lam if isinstance(lam, StrictPartition) else StrictPartition(tuple(lam))


@dataclass(frozen=True)
class StandardShiftedTableau:
    shape: StrictPartition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise ValueError("row lengths do not match the shape")
        n = self.shape.size
        if sorted(x for r in self.rows for x in r) != list(range(1, n + 1)):
            raise ValueError("entries are not a bijection onto 1..n")
        if not is_standard(self.shape, self.rows):
            raise ValueError("tableau is not standard")

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - i]

    def positions(self) -> dict[int, Cell]:
        return {x: (i, i + c) for i, row in enumerate(self.rows, 1) for c, x in enumerate(row)}

    def position(self, k: int) -> Cell:
        for i, row in enumerate(self.rows, 1):
            if k in row:
                return (i, i + row.index(k))
        raise KeyError(k)

    def swap(self, k: int) -> "StandardShiftedTableau | None":
        """``s_k T`` if it is standard, else ``None``."""
        (i1, j1), (i2, j2) = self.position(k), self.position(k + 1)
        if i1 == i2 or j1 == j2:
            return None
        rows = [list(r) for r in self.rows]
        rows[i1 - 1][j1 - i1] = k + 1
        rows[i2 - 1][j2 - i2] = k
        return StandardShiftedTableau(self.shape, tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return " / ".join(",".join(map(str, r)) for r in self.rows)


def is_standard(shape: StrictPartition, rows: Sequence[Sequence[int]]) -> bool:
    for i, row in enumerate(rows, 1):
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
        if i > 1:
            above = rows[i - 2]
            for c, x in enumerate(row):
                # cell (i, i+c) sits under cell (i-1, i+c), i.e. index c+1 of the row above
                if c + 1 >= len(above) or above[c + 1] >= x:
                    return False
    return True


def shape_weight(ell: int, lam: StrictPartition | Sequence[int]) -> Weight:
    lam = as_partition(lam)
    m = [0] * (ell + 1)
    for i, j in lam.cells():
        m[residue(ell, i, j)] -= 1
    return Weight(1, tuple(m))


def content(ell: int, lam: StrictPartition | Sequence[int]) -> tuple[int, ...]:
    """Multiplicity of each residue among the cells (the root ``Lambda0 - wt``)."""
    return tuple(-x for x in shape_weight(ell, lam).m)


def _fillings(lam: StrictPartition, ell: int | None, nu: Sequence[int] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    parts = lam.parts
    depth = len(parts)
    n = lam.size
    filled = [0] * depth
    rows: list[list[int]] = [[] for _ in range(depth)]

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(depth):
            f = filled[i]
            if f == parts[i]:
                continue
            # the cell (i+1, i+1+f) needs the cell above it, i.e. row i-1 filled to length >= f+2
            if i > 0 and filled[i - 1] < f + 2:
                continue
            if nu is not None:
                pat = residue_pattern(ell)
                if pat[f % len(pat)] != nu[k - 1]:
                    continue
            filled[i] += 1
            rows[i].append(k)
            yield from rec(k + 1)
            rows[i].pop()
            filled[i] -= 1

    yield from rec(1)


def enumerate_ST(lam: StrictPartition | Sequence[int]) -> list[StandardShiftedTableau]:
    """All standard shifted tableaux of shape ``lam`` in filling-lexicographic order."""
    lam = as_partition(lam)
    return [StandardShiftedTableau(lam, rows) for rows in _fillings(lam, None, None)]


def tableaux_with_residues(ell: int, lam: StrictPartition | Sequence[int], nu: Sequence[int]) -> list[StandardShiftedTableau]:
    lam = as_partition(lam)
    if len(nu) != lam.size:
        return []
    return [StandardShiftedTableau(lam, rows) for rows in _fillings(lam, ell, tuple(nu))]


def residue_sequence(ell: int, T: StandardShiftedTableau) -> tuple[int, ...]:
    pos = T.positions()
    return tuple(residue(ell, *pos[k]) for k in range(1, T.shape.size + 1))


def count_K(ell: int, lam: StrictPartition | Sequence[int], nu: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` with residue sequence ``nu``."""
    lam = as_partition(lam)
    if len(nu) != lam.size:
        raise ValueError("sequence length differs from the shape size")
    return sum(1 for _ in _fillings(lam, ell, tuple(nu)))


def canonical_tableau(lam: StrictPartition | Sequence[int]) -> StandardShiftedTableau:
    """Fill row by row: the ``(i, j)`` entry is ``(j - i) + 1 + sum_{k<i} lam_k``."""
    lam = as_partition(lam)
    rows, start = [], 0
    for p in lam.parts:
        rows.append(tuple(range(start + 1, start + p + 1)))
        start += p
    return StandardShiftedTableau(lam, tuple(rows))


# --- three independent counts of |ST(lam)| ---------------------------------

def count_by_enumeration(lam: StrictPartition | Sequence[int]) -> int:
    return sum(1 for _ in _fillings(as_partition(lam), None, None))


def count_by_product_formula(lam: StrictPartition | Sequence[int]) -> int:
    """Schur's product formula ``n! / prod lam_i! * prod_{i<j} (lam_i - lam_j)/(lam_i + lam_j)``."""
    p = as_partition(lam).parts
    val = Fraction(factorial(sum(p)), prod(factorial(x) for x in p))
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            val *= Fraction(p[a] - p[b], p[a] + p[b])
    if val.denominator != 1:
        raise ArithmeticError(f"product formula is not integral for {p}")
    return int(val)


def shifted_hook_lengths(lam: StrictPartition | Sequence[int]) -> dict[Cell, int]:
    """Shifted hook length of every cell, read off the doubled diagram.

    The doubled diagram has Frobenius coordinates ``(lam_1..lam_l | lam_1-1..lam_l-1)``;
    the shifted diagram sits in it strictly right of the main diagonal, and the
    shifted hook of ``(i, j)`` is the ordinary hook of ``(i, j + 1)``.
    """
    p = as_partition(lam).parts
    cells: set[Cell] = set()
    for i, a in enumerate(p, 1):
        cells.update((i, j) for j in range(i + 1, i + a + 1))   # arm part, right of the diagonal
        cells.update((r, i) for r in range(i, i + a))           # leg part, diagonal and below
    row_len: dict[int, int] = {}
    col_len: dict[int, int] = {}
    for r, c in cells:
        row_len[r] = max(row_len.get(r, 0), c)
        col_len[c] = max(col_len.get(c, 0), r)
    hooks = {}
    for i, a in enumerate(p, 1):
        for j in range(i, i + a):
            c = j + 1
            hooks[(i, j)] = (row_len[i] - c) + (col_len[c] - i) + 1
    return hooks


def count_by_hooks(lam: StrictPartition | Sequence[int]) -> int:
    lam = as_partition(lam)
    hooks = shifted_hook_lengths(lam)
    val = Fraction(factorial(lam.size), prod(hooks.values()))
    if val.denominator != 1:
        raise ArithmeticError(f"hook formula is not integral for {lam}")
    return int(val)


def count_tableaux(lam: StrictPartition | Sequence[int]) -> int:
    """``|ST(lam)|``, with the three methods required to agree."""
    a, b, c = count_by_enumeration(lam), count_by_product_formula(lam), count_by_hooks(lam)
    if not a == b == c:
        raise ArithmeticError(f"tableau counts disagree for {lam}: enum={a} product={b} hooks={c}")
    return a


# --- strict partitions by size and weight ----------------------------------

@lru_cache(maxsize=None)
def strict_partitions(n: int, max_part: int | None = None) -> tuple[StrictPartition, ...]:
    """All strict partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return (StrictPartition(()),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append(StrictPartition((first,) + rest.parts))
    return tuple(out)


def shapes_of_weight(ell: int, beta: Weight | Sequence[int]) -> list[StrictPartition]:
    """Strict partitions whose residue content is ``beta`` (i.e. weight ``Lambda0 - beta``)."""
    coeffs = tuple(beta.m) if isinstance(beta, Weight) else tuple(beta)
    if isinstance(beta, Weight) and beta.c != 0:
        raise ValueError("beta must be a root-lattice vector")
    build_datum(ell).root(coeffs)
    if any(x < 0 for x in coeffs):
        raise ValueError("beta must be nonnegative")
    return [lam for lam in strict_partitions(sum(coeffs)) if content(ell, lam) == coeffs]


def sequence_content(ell: int, nu: Sequence[int]) -> tuple[int, ...]:
    m = [0] * (ell + 1)
    for x in nu:
        m[x] += 1
    return tuple(m)
