"""Structure probes for module data: Hom spaces, spinning, action algebras, isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import Echelon, Matrix, Vector, direct_sum, find_invertible, vector_to_matrix
from .qha import ModuleDatum, Seq, character, swap_seq


def _hom_layout(m1: ModuleDatum, m2: ModuleDatum) -> tuple[dict[Seq, int], int]:
    """Unknown offsets for the blocks ``X_nu : e(nu) m1 -> e(nu) m2``."""
    offs, pos = {}, 0
    for nu in sorted(set(m1.components) & set(m2.components)):
        offs[nu] = pos
        pos += m2.comp_dim(nu) * m1.comp_dim(nu)
    return offs, pos


def hom_basis(m1: ModuleDatum, m2: ModuleDatum) -> list[dict[Seq, Matrix]]:
    """Basis of ``Hom(m1, m2)`` (degrees ignored), each element given blockwise."""
    if m1.ell != m2.ell or tuple(m1.beta) != tuple(m2.beta):
        raise ValueError("modules over different algebras")
    offs, nunk = _hom_layout(m1, m2)
    ech = Echelon(nunk)

    def unknown(nu: Seq, r: int, c: int) -> int | None:
        o = offs.get(nu)
        return None if o is None else o + r * m1.comp_dim(nu) + c

    # X_tgt A1 - A2 X_nu = 0 for every generator block A : nu -> tgt
    for gen in m1.generators():
        for nu in sorted(set(m1.components) | set(m2.components)):
            tgt, a1 = m1.act_block(gen, nu)
            _, a2 = m2.act_block(gen, nu)
            d2t, d1n = m2.comp_dim(tgt), m1.comp_dim(nu)
            if d2t == 0 or d1n == 0:
                continue
            eqs: dict[tuple[int, int], Vector] = {}
            # (X_tgt A1)[r, c] = sum_j X_tgt[r, j] A1[j, c]
            for j, row in a1.rows.items():
                for c, v in row.items():
                    for r in range(d2t):
                        u = unknown(tgt, r, j)
                        if u is not None:
                            e = eqs.setdefault((r, c), {})
                            e[u] = e.get(u, 0) + v
            # (A2 X_nu)[r, c] = sum_j A2[r, j] X_nu[j, c]
            for r, row in a2.rows.items():
                for j, v in row.items():
                    for c in range(d1n):
                        u = unknown(nu, j, c)
                        if u is not None:
                            e = eqs.setdefault((r, c), {})
                            e[u] = e.get(u, 0) - v
            for key in sorted(eqs):
                e = {u: v for u, v in eqs[key].items() if v}
                if e:
                    ech.add(e)
    out = []
    for vec in ech.nullspace():
        out.append({nu: vector_to_matrix(vec, m2.comp_dim(nu), m1.comp_dim(nu), o) for nu, o in offs.items()})
    return out


def hom_dim(m1: ModuleDatum, m2: ModuleDatum) -> int:
    return len(hom_basis(m1, m2))


def hom_to_global(m1: ModuleDatum, m2: ModuleDatum, blocks: dict[Seq, Matrix]) -> Matrix:
    out = Matrix(m2.dim, m1.dim)
    for nu, blk in blocks.items():
        r0, c0 = m2.offsets[nu], m1.offsets[nu]
        for r, c, v in blk.entries():
            out.add_entry(r0 + r, c0 + c, v)
    return out


def action_algebra_dim(m: ModuleDatum) -> int:
    """Dimension of the image of the algebra in ``End(m)``.

    Every word in the generators, multiplied by an idempotent ``e(nu)``, maps
    one weight space to one weight space; the span is therefore computed one
    ``(source, target)`` block at a time by left-multiplying with generators.
    """
    ech: dict[tuple[Seq, Seq], Echelon] = {}
    queue: list[tuple[Seq, Seq, Matrix]] = []
    for nu in m.order:
        d = m.comp_dim(nu)
        e = Echelon(d * d)
        ident = Matrix.identity(d)
        e.add(_flatten(ident))
        ech[(nu, nu)] = e
        queue.append((nu, nu, ident))
    gens = m.generators()
    while queue:
        src, cur, mat = queue.pop()
        for gen in gens:
            tgt, blk = m.act_block(gen, cur)
            if tgt not in m.components or blk.is_zero():
                continue
            prod = blk @ mat
            if prod.is_zero():
                continue
            key = (src, tgt)
            e = ech.get(key)
            if e is None:
                e = ech[key] = Echelon(m.comp_dim(tgt) * m.comp_dim(src))
            if e.add(_flatten(prod)):
                queue.append((src, tgt, prod))
    return sum(e.rank for e in ech.values())


def _flatten(mat: Matrix) -> Vector:
    return {r * mat.ncols + c: v for r, c, v in mat.entries()}


def spin(m: ModuleDatum, vectors: Iterable[tuple[Seq, Vector]]) -> dict[Seq, list[Vector]]:
    """Smallest submodule containing the given weight vectors, as an echelon basis per weight space.

    Vectors are ``(nu, coordinates)`` pairs; a general vector is first split
    into its weight components, which lie in any submodule containing it.
    """
    ech: dict[Seq, Echelon] = {nu: Echelon(m.comp_dim(nu)) for nu in m.order}
    queue: list[tuple[Seq, Vector]] = []
    for nu, v in vectors:
        if nu not in ech:
            raise KeyError(f"no weight space {nu}")
        if ech[nu].add(v):
            queue.append((nu, dict(v)))
    gens = m.generators()
    while queue:
        nu, v = queue.pop()
        for gen in gens:
            tgt, blk = m.act_block(gen, nu)
            if tgt not in ech:
                continue
            w = blk.apply(v)
            if w and ech[tgt].add(w):
                queue.append((tgt, w))
    return {nu: e.basis() for nu, e in ech.items() if e.rank}


def spin_dimension(m: ModuleDatum, vectors: Iterable[tuple[Seq, Vector]]) -> dict[Seq, int]:
    return {nu: len(b) for nu, b in spin(m, vectors).items()}


def split_global_vector(m: ModuleDatum, v: Vector) -> list[tuple[Seq, Vector]]:
    out = []
    for nu in m.order:
        o, d = m.offsets[nu], m.comp_dim(nu)
        part = {i - o: x for i, x in v.items() if o <= i < o + d}
        if part:
            out.append((nu, part))
    return out


def submodule(m: ModuleDatum, vectors: Iterable[tuple[Seq, Vector]], name: str = "") -> ModuleDatum:
    """The spun submodule, with the action written in its echelon basis."""
    basis = spin(m, vectors)
    ech = {}
    for nu, vecs in basis.items():
        e = Echelon(m.comp_dim(nu))
        for v in vecs:
            e.add(v)
        ech[nu] = e
    pivots = {nu: sorted(e.pivots) for nu, e in ech.items()}

    def coords(nu: Seq, w: Vector) -> Vector:
        # echelon rows have a unit pivot and vanish on the other pivots
        return {i: w[p] for i, p in enumerate(pivots[nu]) if p in w}

    def restrict(gen, nu) -> tuple[Seq, Matrix]:
        tgt, blk = m.act_block(gen, nu)
        rows = pivots.get(tgt, [])
        out = Matrix(len(rows), len(pivots[nu]))
        if tgt not in ech:
            return tgt, out
        for c, p in enumerate(pivots[nu]):
            w = blk.apply(ech[nu].pivots[p])
            if ech[tgt].reduce(w):
                raise ArithmeticError("spun subspace is not stable")
            for r, val in coords(tgt, w).items():
                out.add_entry(r, c, val)
        return tgt, out

    comps = {nu: len(p) for nu, p in pivots.items()}
    x = [{nu: restrict(("x", k), nu)[1] for nu in comps} for k in range(1, m.n + 1)]
    psi = []
    for k in range(1, m.n):
        psi.append({nu: blk for nu in comps for tgt, blk in [restrict(("psi", k), nu)] if tgt in comps})
    return ModuleDatum(m.ell, m.beta, comps, x, psi, None, name)


@dataclass(frozen=True)
class IsoCertificate:
    verdict: str  # "yes", "no" or "undecided"
    reason: str
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def certify_isomorphism(m1: ModuleDatum, m2: ModuleDatum, seed: int = 0) -> IsoCertificate:
    if m1.ell != m2.ell or tuple(m1.beta) != tuple(m2.beta):
        return IsoCertificate("no", "modules over different algebras")
    if character(m1) != character(m2):
        return IsoCertificate("no", "characters differ")
    if m1.dim == 0:
        return IsoCertificate("yes", "both modules are zero", Matrix(0, 0))
    basis = hom_basis(m1, m2)
    if not basis:
        return IsoCertificate("no", "no nonzero homomorphism")
    mats = [hom_to_global(m1, m2, b) for b in basis]
    w = find_invertible(mats, seed=seed)
    if w is None:
        return IsoCertificate("undecided", f"no invertible element found in a {len(basis)}-dimensional Hom space")
    return IsoCertificate("yes", f"invertible homomorphism found in a {len(basis)}-dimensional Hom space", w)


def is_module_map(m1: ModuleDatum, m2: ModuleDatum, f: Matrix) -> bool:
    """Check ``f A1 = A2 f`` for every generator, with ``f`` a global matrix."""
    for gen in m1.generators():
        if f @ m1.global_matrix(gen) != m2.global_matrix(gen) @ f:
            return False
    return True
