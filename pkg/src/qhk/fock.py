"""Reduced neutral-fermion Fock space with its Chevalley action.

Basis vectors ``|lam>`` are indexed by strict partitions. The mode operators
``E(j)`` / ``F(j)`` remove / add a box at the end of a row; the Chevalley
generators are sums of modes over the residue classes of ``j``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .cartan import build_datum
from .tableaux import StrictPartition, as_partition


class FockVector:
    """Finite integer combination of strict partitions."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[StrictPartition, int] | None = None):
        self.terms: dict[StrictPartition, int] = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    self.terms[as_partition(lam)] = c

    @classmethod
    def basis(cls, lam: StrictPartition | Sequence[int] = ()) -> "FockVector":
        return cls({as_partition(lam): 1})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls.basis(())

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return FockVector(out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, k: int) -> "FockVector":
        return FockVector({lam: k * c for lam, c in self.terms.items()})

    def __rmul__(self, k: int) -> "FockVector":
        return self.scale(k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, lam: StrictPartition | Sequence[int]) -> int:
        return self.terms.get(as_partition(lam), 0)

    def items(self) -> list[tuple[StrictPartition, int]]:
        return sorted(self.terms.items(), key=lambda t: (t[0].size, t[0].parts))

    def max_part(self) -> int:
        return max((lam.parts[0] for lam in self.terms if lam.parts), default=0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}|{lam}>" for lam, c in self.items())


def _mode_e_basis(j: int, lam: StrictPartition) -> StrictPartition | None:
    parts = lam.parts
    if j == 0:
        if parts and parts[-1] == 1:
            return StrictPartition(parts[:-1])
        return None
    if (j + 1) in parts and j not in parts:
        return StrictPartition(tuple(j if p == j + 1 else p for p in parts))
    return None


def _mode_f_basis(j: int, lam: StrictPartition) -> StrictPartition | None:
    parts = lam.parts
    if (j + 1) in parts:
        return None
    if j == 0:
        return StrictPartition(parts + (1,))
    if j in parts:
        return StrictPartition(tuple(j + 1 if p == j else p for p in parts))
    return None


def _apply_modes(v: FockVector, modes: Iterable[tuple[int, int]], rule) -> FockVector:
    out: dict[StrictPartition, int] = {}
    modes = list(modes)
    for lam, c in v.terms.items():
        for j, coeff in modes:
            mu = rule(j, lam)
            if mu is not None:
                out[mu] = out.get(mu, 0) + coeff * c
    return FockVector(out)


def mode_e(ell: int, j: int, v: FockVector) -> FockVector:
    if j < 0:
        raise ValueError("mode index must be nonnegative")
    return _apply_modes(v, [(j, 1)], _mode_e_basis)


def mode_f(ell: int, j: int, v: FockVector) -> FockVector:
    if j < 0:
        raise ValueError("mode index must be nonnegative")
    return _apply_modes(v, [(j, 1)], _mode_f_basis)


def _residue_class(ell: int, i: int, j: int) -> bool:
    h = 2 * ell + 2
    return j % h in (i % h, (-i - 1) % h)


def e_modes(ell: int, i: int, bound: int) -> list[tuple[int, int]]:
    """(mode, coefficient) pairs making up ``e_i``, for modes ``j <= bound``."""
    build_datum(ell).check_index(i)
    out = []
    for j in range(0, bound + 1):
        if not _residue_class(ell, i, j):
            continue
        if j == 0:
            coeff = 1  # only e_0 contains the mode removing a whole row of length 1
        elif i == 0 or i == ell:
            coeff = 2
        else:
            coeff = 1
        out.append((j, coeff))
    return out


def f_modes(ell: int, i: int, bound: int) -> list[tuple[int, int]]:
    build_datum(ell).check_index(i)
    return [(j, 1) for j in range(0, bound + 1) if _residue_class(ell, i, j)]


def chevalley_e(ell: int, i: int, v: FockVector) -> FockVector:
    return _apply_modes(v, e_modes(ell, i, v.max_part() + 1), _mode_e_basis)


def chevalley_f(ell: int, i: int, v: FockVector) -> FockVector:
    return _apply_modes(v, f_modes(ell, i, v.max_part() + 1), _mode_f_basis)


def monomial_e(ell: int, nu: Sequence[int], v: FockVector) -> FockVector:
    """``e_{nu_1} ... e_{nu_n} v``: ``e_{nu_n}`` acts first."""
    for i in reversed(nu):
        v = chevalley_e(ell, i, v)
        if not v:
            break
    return v


def monomial_f(ell: int, nu: Sequence[int], v: FockVector) -> FockVector:
    """``f_{nu_n} ... f_{nu_1} v``: ``f_{nu_1}`` acts first."""
    for i in nu:
        v = chevalley_f(ell, i, v)
        if not v:
            break
    return v


def apply_word(ell: int, word: Sequence[tuple[str, int]], v: FockVector) -> FockVector:
    """Apply an operator product such as ``[("f", 0), ("e", 2)]``; the rightmost factor acts first."""
    for kind, i in reversed(word):
        if kind == "e":
            v = chevalley_e(ell, i, v)
        elif kind == "f":
            v = chevalley_f(ell, i, v)
        else:
            raise ValueError(f"unknown operator {kind!r}")
    return v


def parse_word(text: str) -> list[tuple[str, int]]:
    """Parse ``"f0 f1 e2"`` into ``[("f", 0), ("f", 1), ("e", 2)]``."""
    out = []
    for tok in text.split():
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
            raise ValueError(f"bad operator token {tok!r}; expected e<i> or f<i>")
        out.append((tok[0], int(tok[1:])))
    return out
