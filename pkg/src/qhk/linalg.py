"""Exact sparse linear algebra over the rationals.

Vectors are ``dict[int, Fraction | int]`` with no stored zeros. Matrices keep
one such dict per row. Everything here is deliberately small: the modules and
algebras handled by the package have dimension at most a few hundred, but the
matrices are very sparse, so dict-based elimination beats dense Fraction code
by a wide margin.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Scalar = int | Fraction
Vector = dict[int, Scalar]


def _norm(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def parse_rational(text: str | int) -> Scalar:
    """Parse ``"p/q"`` or ``"p"`` into an exact scalar."""
    if isinstance(text, int):
        return text
    return _norm(Fraction(text))


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec_axpy(y: Vector, a: Scalar, x: Mapping[int, Scalar]) -> None:
    """In place ``y += a*x``."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = _norm(s)
        else:
            y.pop(k, None)


class Matrix:
    """Sparse exact matrix with row-dict storage."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, Vector] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, Vector] = {}
        if rows:
            for r, row in rows.items():
                clean = {c: _norm(v) for c, v in row.items() if v}
                if clean:
                    self.rows[r] = clean

    # construction -----------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[Scalar]]) -> "Matrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {r: {c: v for c, v in enumerate(row) if v} for r, row in enumerate(data)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, Scalar]]) -> "Matrix":
        m = cls(nrows, ncols)
        for r, c, v in entries:
            m.add_entry(r, c, v)
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, {r: dict(row) for r, row in self.rows.items()})

    def add_entry(self, r: int, c: int, v: Scalar) -> None:
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError((r, c))
        row = self.rows.setdefault(r, {})
        s = row.get(c, 0) + v
        if s:
            row[c] = _norm(s)
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]

    # queries ----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.rows.get(r, {}).get(c, 0)

    def is_zero(self) -> bool:
        return not self.rows

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def entries(self) -> Iterator[tuple[int, int, Scalar]]:
        for r in sorted(self.rows):
            row = self.rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def to_dense(self) -> list[list[Scalar]]:
        out: list[list[Scalar]] = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def column(self, c: int) -> Vector:
        return {r: row[c] for r, row in self.rows.items() if c in row}

    def columns(self) -> dict[int, Vector]:
        cols: dict[int, Vector] = {}
        for r, row in self.rows.items():
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return cols

    def first_nonzero_column(self) -> int | None:
        cols = [min(row) for row in self.rows.values()]
        return min(cols) if cols else None

    # arithmetic -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:  # pragma: no cover - matrices are not dict keys
        raise TypeError("Matrix is unhashable")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        out = self.copy()
        for r, row in other.rows.items():
            tgt = out.rows.setdefault(r, {})
            vec_axpy(tgt, 1, row)
            if not tgt:
                del out.rows[r]
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, a: Scalar) -> "Matrix":
        if not a:
            return Matrix(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols, {r: {c: a * v for c, v in row.items()} for r, row in self.rows.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, Vector] = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc: Vector = {}
            for k, v in row.items():
                orow = orows.get(k)
                if orow:
                    vec_axpy(acc, v, orow)
            if acc:
                out[r] = acc
        m = Matrix(self.nrows, other.ncols)
        m.rows = out
        return m

    def apply(self, x: Mapping[int, Scalar]) -> Vector:
        out: Vector = {}
        for r, row in self.rows.items():
            s = sum((v * x[c] for c, v in row.items() if c in x), 0)
            if s:
                out[r] = _norm(s)
        return out

    def transpose(self) -> "Matrix":
        m = Matrix(self.ncols, self.nrows)
        m.rows = self.columns()
        return m

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        m = Matrix(r1 - r0, c1 - c0)
        for r in range(r0, r1):
            row = self.rows.get(r)
            if row:
                sub = {c - c0: v for c, v in row.items() if c0 <= c < c1}
                if sub:
                    m.rows[r - r0] = sub
        return m

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        return f"Matrix({self.to_dense()!r})"


def matrix_power(m: Matrix, p: int) -> Matrix:
    out = Matrix.identity(m.nrows)
    for _ in range(p):
        out = out @ m
    return out


def direct_sum(*mats: Matrix) -> Matrix:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    out = Matrix(nr, nc)
    r0 = c0 = 0
    for m in mats:
        for r, row in m.rows.items():
            out.rows[r + r0] = {c + c0: v for c, v in row.items()}
        r0 += m.nrows
        c0 += m.ncols
    return out


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``priority`` orders the candidate pivot columns: a new row pivots on the
    column of smallest priority among its support. Rows are kept fully
    reduced against each other, so ``reduce`` needs one pass.
    """

    def __init__(self, ncols: int, priority: Callable[[int], object] | None = None):
        self.ncols = ncols
        self.priority = priority
        self.pivots: dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Mapping[int, Scalar]) -> Vector:
        w = dict(v)
        hits = [c for c in w if c in self.pivots]
        for c in hits:
            a = w.get(c)
            if a:
                vec_axpy(w, -a, self.pivots[c])
        return w

    def _choose(self, w: Vector) -> int:
        if self.priority is None:
            return min(w)
        return min(w, key=self.priority)

    def add(self, v: Mapping[int, Scalar]) -> bool:
        """Insert ``v``; return True iff it was independent of the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = self._choose(w)
        inv = Fraction(1) / Fraction(w[p])
        if inv != 1:
            w = {c: _norm(x * inv) for c, x in w.items()}
        for row in self.pivots.values():
            a = row.get(p)
            if a:
                vec_axpy(row, -a, w)
        self.pivots[p] = w
        return True

    def contains(self, v: Mapping[int, Scalar]) -> bool:
        return not self.reduce(v)

    def free_columns(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.pivots]

    def nullspace(self) -> list[Vector]:
        """Basis of the solutions of ``row . x = 0`` for all stored rows."""
        basis: list[Vector] = []
        for f in self.free_columns():
            x: Vector = {f: 1}
            for p, row in self.pivots.items():
                a = row.get(f)
                if a:
                    x[p] = _norm(-a)
            basis.append(x)
        return basis

    def quotient_coords(self, v: Mapping[int, Scalar]) -> Vector:
        """Coordinates of ``v`` modulo the span, on the free columns."""
        return self.reduce(v)

    def basis(self) -> list[Vector]:
        return [self.pivots[p] for p in sorted(self.pivots)]


def rank(m: Matrix) -> int:
    ech = Echelon(m.ncols)
    for r in sorted(m.rows):
        ech.add(m.rows[r])
    return ech.rank


def nullspace(m: Matrix) -> list[Vector]:
    ech = Echelon(m.ncols)
    for r in sorted(m.rows):
        ech.add(m.rows[r])
    return ech.nullspace()


def is_invertible(m: Matrix) -> bool:
    return m.nrows == m.ncols and rank(m) == m.nrows


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    a = [[Fraction(x) for x in row] for row in m.to_dense()]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f *= inv
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    if row_c[c]:
                        row_r[c] -= f * row_c[c]
    return det


def combine(mats: Sequence[Matrix], coeffs: Sequence[Scalar]) -> Matrix:
    out = Matrix(mats[0].nrows, mats[0].ncols)
    for m, a in zip(mats, coeffs):
        if a:
            out = out + m.scale(a)
    return out


def find_invertible(
    mats: Sequence[Matrix],
    *,
    bound: int = 3,
    max_enumerated: int = 20000,
    random_tries: int = 64,
    seed: int = 0,
) -> Matrix | None:
    """Look for an invertible linear combination of ``mats``.

    Small integer combinations (entries in ``[-bound, bound]``) are tried first
    in a fixed order, then a seeded random search with wider coefficients.
    Returns ``None`` when nothing invertible was found, which is not a proof
    that no invertible combination exists.
    """
    if not mats:
        return None
    if mats[0].nrows != mats[0].ncols:
        return None
    for m in mats:
        if is_invertible(m):
            return m
    k = len(mats)
    values = sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x < 0))
    for count, coeffs in enumerate(itertools.product(values, repeat=k)):
        if count >= max_enumerated:
            break
        if not any(coeffs):
            continue
        cand = combine(mats, coeffs)
        if is_invertible(cand):
            return cand
    rng = random.Random(seed)
    for _ in range(random_tries):
        coeffs = [rng.randint(-1000, 1000) for _ in range(k)]
        cand = combine(mats, coeffs)
        if is_invertible(cand):
            return cand
    return None


def vector_to_matrix(x: Mapping[int, Scalar], nrows: int, ncols: int, offset: int = 0) -> Matrix:
    """Read the slice ``x[offset : offset + nrows*ncols]`` as a row-major matrix."""
    m = Matrix(nrows, ncols)
    for idx, v in x.items():
        j = idx - offset
        if 0 <= j < nrows * ncols:
            m.add_entry(j // ncols, j % ncols, v)
    return m
