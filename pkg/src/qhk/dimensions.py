"""Dimensions of cyclotomic quiver Hecke algebras at level ``Lambda0`` from tableau counts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .cartan import Weight, build_datum
from .tableaux import (
    StrictPartition,
    content,
    count_K,
    count_tableaux,
    shapes_of_weight,
    strict_partitions,
    sequence_content,
)


def shape_exponent(ell: int, lam: StrictPartition) -> int:
    """``-<sd, wt(lam)> - l(lam) = k_0 + k_l - l(lam)``; must be nonnegative."""
    k = content(ell, lam)
    e = k[0] + k[ell] - lam.depth
    if e < 0:
        raise ArithmeticError(f"negative exponent {e} for shape {lam}")
    return e


def dim_block(ell: int, nu_left: Sequence[int], nu_right: Sequence[int]) -> int:
    """``dim e(nu') R e(nu)`` for the cyclotomic algebra at ``Lambda0``."""
    if len(nu_left) != len(nu_right):
        raise ValueError("sequences of different length")
    build_datum(ell)
    if sequence_content(ell, nu_left) != sequence_content(ell, nu_right):
        return 0
    total = 0
    for lam in shapes_of_weight(ell, sequence_content(ell, nu_right)):
        k1 = count_K(ell, lam, nu_left)
        if not k1:
            continue
        k2 = k1 if tuple(nu_left) == tuple(nu_right) else count_K(ell, lam, nu_right)
        if k2:
            total += 2 ** shape_exponent(ell, lam) * k1 * k2
    return total


def dim_beta(ell: int, beta: Weight | Sequence[int]) -> int:
    return sum(2 ** shape_exponent(ell, lam) * count_tableaux(lam) ** 2 for lam in shapes_of_weight(ell, beta))


def dim_n(ell: int, n: int) -> int:
    build_datum(ell)
    return sum(2 ** shape_exponent(ell, lam) * count_tableaux(lam) ** 2 for lam in strict_partitions(n))


def is_realizable(ell: int, nu: Sequence[int]) -> bool:
    """True iff ``nu`` is the residue sequence of some standard shifted tableau."""
    return any(count_K(ell, lam, nu) for lam in shapes_of_weight(ell, sequence_content(ell, nu)))


def roots_of_height(ell: int, n: int) -> list[tuple[int, ...]]:
    """All nonnegative root coefficient vectors of height ``n``."""
    out = []
    for combo in itertools.combinations_with_replacement(range(ell + 1), n):
        out.append(sequence_content(ell, combo))
    return sorted(set(out))


@dataclass(frozen=True)
class FactorialReport:
    ell: int
    n: int
    lhs: int
    rhs: int
    terms: tuple[tuple[tuple[int, ...], int, int], ...]  # (beta, power of two, dim_beta)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def factorial_identity_check(ell: int, n: int) -> FactorialReport:
    """``n! = sum_{|beta| = n} 2^{n - <sd, beta>} dim R(beta)``."""
    terms = []
    for beta in roots_of_height(ell, n):
        d = dim_beta(ell, beta)
        if d:
            terms.append((beta, n - beta[0] - beta[ell], d))
    rhs = sum(2 ** p * d for _, p, d in terms)
    return FactorialReport(ell, n, factorial(n), rhs, tuple(terms))


def principal_sequence(ell: int, r: int, s: int) -> tuple[int, ...]:
    """``(0, 1, ..., l)`` repeated ``r`` times followed by ``(0, 1, ..., s-1)``."""
    if not 0 <= s <= ell:
        raise ValueError("s must lie in 0..ell")
    if not (0 <= r <= 2 or (r == 3 and s == 0)):
        raise ValueError("need r <= 2, or r = 3 with s = 0")
    return tuple(range(ell + 1)) * r + tuple(range(s))


def dim_principal_series(ell: int, r: int, s: int) -> int:
    nu = principal_sequence(ell, r, s)
    return dim_block(ell, nu, nu)
