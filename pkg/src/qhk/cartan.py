"""Affine Cartan datum of twisted type D^{(2)}_{l+1}.

Weights live in the lattice spanned by the fundamental weight ``Lambda0`` and
the simple roots ``alpha_0 .. alpha_l``; the scaling element is only ever
paired, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True)
class Weight:
    """``c * Lambda0 + sum_i m[i] * alpha_i``."""

    c: int
    m: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.c + other.c, tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.c - other.c, tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self) -> "Weight":
        return Weight(-self.c, tuple(-a for a in self.m))

    def __mul__(self, k: int) -> "Weight":
        return Weight(self.c * k, tuple(k * a for a in self.m))

    __rmul__ = __mul__

    def _check(self, other: "Weight") -> None:
        if len(self.m) != len(other.m):
            raise ValueError("weights of different rank")

    @property
    def height(self) -> int:
        return sum(self.m)

    def __str__(self) -> str:
        parts = []
        if self.c:
            parts.append(f"{self.c}*L0")
        parts += [f"{a:+d}*a{i}" for i, a in enumerate(self.m) if a]
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CartanD2:
    ell: int
    a: tuple[tuple[int, ...], ...]
    d_sym: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.ell + 1

    @property
    def h(self) -> int:
        """Period ``2l + 2`` of the residue pattern."""
        return 2 * self.ell + 2

    # distinguished weights
    def lambda0(self) -> Weight:
        return Weight(1, (0,) * self.rank)

    def alpha(self, i: int) -> Weight:
        self.check_index(i)
        return Weight(0, tuple(int(j == i) for j in range(self.rank)))

    def delta(self) -> Weight:
        return Weight(0, (1,) * self.rank)

    def root(self, coeffs: Sequence[int]) -> Weight:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} root coefficients, got {len(coeffs)}")
        return Weight(0, tuple(int(x) for x in coeffs))

    def check_index(self, i: int) -> None:
        if not 0 <= i <= self.ell:
            raise IndexError(f"index {i} outside 0..{self.ell}")


@lru_cache(maxsize=None)
def build_datum(ell: int) -> CartanD2:
    """Cartan matrix and symmetrizer for ``D^{(2)}_{l+1}``; ``l = 1`` gives ``A^{(1)}_1``."""
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"invalid rank parameter ell={ell!r}; need ell >= 1")
    n = ell + 1
    a = [[0] * n for _ in range(n)]
    if ell == 1:
        a = [[2, -2], [-2, 2]]
        d = (1, 1)
    else:
        for i in range(n):
            a[i][i] = 2
        a[0][1] = -2
        for i in range(1, ell):
            a[i][i - 1] = -1
            a[i][i + 1] = -1
        a[ell][ell - 1] = -2
        d = (1,) + (2,) * (ell - 1) + (1,)
    return CartanD2(ell, tuple(tuple(r) for r in a), d)


def pair_coroot(datum: CartanD2, i: int, mu: Weight) -> int:
    """``<h_i, mu>``."""
    datum.check_index(i)
    _check_weight(datum, mu)
    return mu.c * (i == 0) + sum(aij * mj for aij, mj in zip(datum.a[i], mu.m))


def pair_d(datum: CartanD2, mu: Weight) -> int:
    """Pairing with the scaling element ``d``: the ``alpha_0`` coefficient."""
    _check_weight(datum, mu)
    return mu.m[0]


def pair_sd(datum: CartanD2, mu: Weight) -> int:
    """Pairing with the modified scaling element; cross-checked against its definition."""
    _check_weight(datum, mu)
    fast = mu.m[0] + mu.m[datum.ell]
    ell = datum.ell
    slow = sum((Fraction(i) * pair_coroot(datum, i, mu) for i in range(1, ell)), Fraction(0))
    slow += Fraction(ell, 2) * pair_coroot(datum, ell, mu) + 2 * pair_d(datum, mu)
    if slow != fast:
        raise ArithmeticError(f"pairing mismatch for {mu}: {fast} vs {slow}")
    return fast


def reflect(datum: CartanD2, i: int, mu: Weight) -> Weight:
    """Simple reflection ``r_i mu = mu - <h_i, mu> alpha_i``."""
    k = pair_coroot(datum, i, mu)
    if k == 0:
        return mu
    m = list(mu.m)
    m[i] -= k
    return Weight(mu.c, tuple(m))


def apply_word(datum: CartanD2, word: Sequence[int], mu: Weight) -> Weight:
    """Apply ``r_{w_1} ... r_{w_k}`` to ``mu``; the rightmost letter acts first."""
    for i in reversed(word):
        mu = reflect(datum, i, mu)
    return mu


def bilinear_alpha(datum: CartanD2, i: int, mu: Weight) -> int:
    """``(alpha_i | mu) = d_i <h_i, mu>``."""
    return datum.d_sym[i] * pair_coroot(datum, i, mu)


def _check_weight(datum: CartanD2, mu: Weight) -> None:
    if len(mu.m) != datum.rank:
        raise ValueError(f"weight has {len(mu.m)} root coefficients, datum has rank {datum.rank}")
