"""Explicit modules built from two-row shifted tableaux.

Every module here is a sum of copies of ``N = k^2`` (or of ``k``) indexed by
standard tableaux; the weight space of a tableau is its residue sequence,
possibly extended by one letter.
"""

from __future__ import annotations

from typing import Sequence

from .linalg import Matrix
from .qha import ModuleDatum, Seq, direct_sum_modules, swap_seq
from .tableaux import StandardShiftedTableau, enumerate_ST, residue_sequence

# the three 2x2 matrices acting on N
XI1 = Matrix.from_dense([[0, 1], [0, 0]])
XI2 = Matrix.from_dense([[0, -1], [0, 0]])
DEL = Matrix.from_dense([[0, 0], [-1, 0]])
ID2 = Matrix.identity(2)
ID1 = Matrix.identity(1)


def _need_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError("module constructions need ell >= 2")


def two_row_shape(ell: int, i: int) -> tuple[int, ...]:
    """``(h - 1 - i, i)`` with ``h = 2l + 2``; a single row when ``i = 0``."""
    h = 2 * ell + 2
    return (h - 1 - i, i) if i else (h - 1,)


def build_R_delta_rep(ell: int) -> ModuleDatum:
    """Two-dimensional module over ``R(delta)``: only ``x_{l+1}`` acts, nilpotently."""
    _need_ell(ell)
    n = ell + 1
    nu = tuple(range(n))
    x = [{} for _ in range(n)]
    x[ell] = {nu: XI1}
    return ModuleDatum(ell, (1,) * n, {nu: 2}, x, [{} for _ in range(n - 1)], {nu: [2, 0]}, "R(delta)")


def _tableau_module(
    ell: int,
    tableaux: Sequence[StandardShiftedTableau],
    beta: tuple[int, ...],
    *,
    suffix: tuple[int, ...] = (),
    use_xi2: bool,
    use_partial: bool,
    last_x: Matrix | None = None,
    name: str = "",
) -> ModuleDatum:
    """``N (x) T`` summed over ``tableaux``; see the module docstring.

    ``x_k`` acts by ``XI1`` when ``k`` sits in cell ``(1, l+1)`` and (if
    ``use_xi2``) by ``XI2`` when it sits in ``(1, l+2)``. ``psi_k`` swaps
    tableaux, and acts by ``DEL`` on ``k, k+1`` in ``(1, l+1), (1, l+2)`` if
    ``use_partial``. With a ``suffix`` the sequences are extended, the new dot
    acts by ``last_x`` (zero if ``None``) and the new crossing by zero.
    """
    n0 = tableaux[0].shape.size
    n = n0 + len(suffix)
    by_seq: dict[Seq, StandardShiftedTableau] = {}
    for T in tableaux:
        nu = residue_sequence(ell, T) + suffix
        if nu in by_seq:
            raise ValueError("residue sequences must determine the tableaux")
        by_seq[nu] = T
    seq_of = {T: nu for nu, T in by_seq.items()}
    c1, c2 = (1, ell + 1), (1, ell + 2)
    x: list[dict[Seq, Matrix]] = [{} for _ in range(n)]
    psi: list[dict[Seq, Matrix]] = [{} for _ in range(n - 1)]
    for nu, T in by_seq.items():
        pos = T.positions()
        for k in range(1, n0 + 1):
            if pos[k] == c1:
                x[k - 1][nu] = XI1
            elif pos[k] == c2 and use_xi2:
                x[k - 1][nu] = XI2
        if last_x is not None and suffix:
            x[n - 1][nu] = last_x
        for k in range(1, n0):
            if use_partial and pos[k] == c1 and pos[k + 1] == c2:
                psi[k - 1][nu] = DEL
                continue
            S = T.swap(k)
            if S is not None:
                tgt = seq_of[S]
                assert tgt == swap_seq(nu, k)
                psi[k - 1][nu] = ID2
    comps = {nu: 2 for nu in by_seq}
    degrees = {nu: [2, 0] for nu in by_seq}
    return ModuleDatum(ell, beta, comps, x, psi, degrees, name)


def _beta_minus(ell: int, i: int | None) -> tuple[int, ...]:
    b = [2] * (ell + 1)
    if i is not None:
        b[i] -= 1
    return tuple(b)


def build_L(ell: int, i: int) -> ModuleDatum:
    """The irreducible module ``L_i`` over ``R(2 delta - alpha_i)``, ``0 <= i <= l-1``."""
    _need_ell(ell)
    if not 0 <= i <= ell - 1:
        raise ValueError("build_L needs 0 <= i <= ell-1")
    ts = enumerate_ST(two_row_shape(ell, i))
    return _tableau_module(ell, ts, _beta_minus(ell, i), use_xi2=True, use_partial=True, name=f"L_{i}")


def build_Lell(ell: int) -> ModuleDatum:
    """The reducible module ``L_l``: only ``XI1`` at cell ``(1, l+1)``, crossings by swaps."""
    _need_ell(ell)
    ts = enumerate_ST(two_row_shape(ell, ell))
    return _tableau_module(ell, ts, _beta_minus(ell, ell), use_xi2=False, use_partial=False, name=f"L_{ell}")


def first_coordinate_vectors(m: ModuleDatum) -> list[tuple[Seq, dict[int, int]]]:
    """The vectors ``e_1 (x) T`` of a tableau module, one per weight space."""
    return [(nu, {0: 1}) for nu in m.order]


def _first_coordinate_part(m: ModuleDatum, name: str) -> ModuleDatum:
    """Restrict a tableau module to the span of ``e_1 (x) T`` (assumed stable)."""
    def first(blk: Matrix) -> Matrix:
        if blk.shape != (2, 2) or blk[1, 0]:
            raise ValueError("first-coordinate span is not stable")
        return Matrix(1, 1, {0: {0: blk[0, 0]}})

    comps = {nu: 1 for nu in m.components}
    x = [{nu: first(b) for nu, b in blocks.items()} for blocks in m.x]
    psi = [{nu: first(b) for nu, b in blocks.items()} for blocks in m.psi]
    deg = {nu: [0] for nu in comps}
    return ModuleDatum(m.ell, m.beta, comps, x, psi, deg, name)


def build_Ltilde(ell: int) -> ModuleDatum:
    """The irreducible submodule of ``L_l`` spanned by first-coordinate vectors."""
    return _first_coordinate_part(build_Lell(ell), f"L~_{ell}")


def build_S(ell: int, i: int) -> ModuleDatum:
    """Simple module ``S_i`` over ``R(2 delta)``; ``i = l`` is the first-coordinate part of ``S^_l``."""
    _need_ell(ell)
    if i == ell:
        return _first_coordinate_part(build_Shat(ell), f"S_{ell}")
    if not 0 <= i <= ell - 1:
        raise ValueError("build_S needs 0 <= i <= ell")
    ts = enumerate_ST(two_row_shape(ell, i))
    return _tableau_module(
        ell, ts, _beta_minus(ell, None), suffix=(i,), use_xi2=True, use_partial=True, name=f"S_{i}"
    )


def build_Shat(ell: int) -> ModuleDatum:
    """``L_l`` extended by the letter ``l`` with the last dot acting by ``XI2``."""
    _need_ell(ell)
    ts = enumerate_ST(two_row_shape(ell, ell))
    return _tableau_module(
        ell, ts, _beta_minus(ell, None), suffix=(ell,), use_xi2=False, use_partial=False,
        last_x=XI2, name=f"S^_{ell}",
    )


def dual_tableau(ell: int, T: StandardShiftedTableau) -> StandardShiftedTableau:
    """Move the entry in cell ``(1, l+2)`` to cell ``(2, l+1)``."""
    from .tableaux import StrictPartition

    rows = [list(r) for r in T.rows]
    moved = rows[0].pop(ell + 1)
    rows[1].append(moved)
    return StandardShiftedTableau(StrictPartition((ell + 1, ell)), tuple(tuple(r) for r in rows))


def build_M(ell: int) -> ModuleDatum:
    """``S^_l (+) S_{l-1}`` glued by a last crossing from the second summand into the first.

    On ``v (x) T`` with ``T`` of shape ``(l+2, l-1)`` and ``h-1`` in the cell
    ``(1, l+2)``, ``psi_{h-1}`` sends it to ``v (x) T'`` in ``S^_l``, where
    ``T'`` moves that entry to ``(2, l+1)``.
    """
    _need_ell(ell)
    shat = build_Shat(ell)
    s = build_S(ell, ell - 1)
    # grade the S_{l-1} summand two lower so the gluing map has the right degree
    s.degrees = {nu: [d - 2 for d in ds] for nu, ds in s.degrees.items()}
    m = direct_sum_modules(shat, s)
    h = 2 * ell + 2
    k = h - 1
    s_ts = enumerate_ST(two_row_shape(ell, ell - 1))
    for T in s_ts:
        if T.position(k) != (1, ell + 2):
            continue
        nu = residue_sequence(ell, T) + (ell - 1,)
        tgt = residue_sequence(ell, dual_tableau(ell, T)) + (ell,)
        assert tgt == swap_seq(nu, k)
        # nu lives only in the S_{l-1} summand, tgt only in the S^_l summand
        m.psi[k - 1][nu] = ID2
    m.degrees = {nu: shat.degrees.get(nu, []) + s.degrees.get(nu, []) for nu in m.components}
    m.name = f"M_{ell}"
    return m


def all_named_modules(ell: int) -> dict[str, ModuleDatum]:
    out = {"rdelta": build_R_delta_rep(ell)}
    for i in range(ell):
        out[f"L:{i}"] = build_L(ell, i)
    out["Ltilde"] = build_Ltilde(ell)
    out["Lell"] = build_Lell(ell)
    for i in range(ell + 1):
        out[f"S:{i}"] = build_S(ell, i)
    out["Shat"] = build_Shat(ell)
    out["M"] = build_M(ell)
    return out


def build_named(ell: int, name: str) -> ModuleDatum:
    mods = {
        "rdelta": lambda: build_R_delta_rep(ell),
        "Ltilde": lambda: build_Ltilde(ell),
        "Lell": lambda: build_Lell(ell),
        "Shat": lambda: build_Shat(ell),
        "M": lambda: build_M(ell),
    }
    if name in mods:
        return mods[name]()
    kind, _, idx = name.partition(":")
    if kind in ("L", "S") and idx.isdigit():
        return build_L(ell, int(idx)) if kind == "L" else build_S(ell, int(idx))
    raise ValueError(f"unknown module {name!r}; expected rdelta, L:i, Ltilde, Lell, S:i, Shat or M")
