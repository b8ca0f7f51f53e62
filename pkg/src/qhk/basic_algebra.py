"""The basic algebra of ``R^{Lambda0}(2 delta)``: a symmetric special biserial algebra.

Paths are composed left to right (``pq`` means ``p`` then ``q``). Arrows are
``alpha_i : i-1 -> i``, ``beta_i : i -> i-1``, a loop ``gamma`` at ``0`` and a
loop ``delta`` at ``l``.

The multiplication table is obtained by linear algebra in the path algebra
truncated at length :data:`TRUNCATION`: the two-sided ideal generated by the
relations is row-reduced with pivots preferring non-basis paths, so every
path gets a normal form in the listed basis. The table is then certified
(closure, associativity, every relation, nilpotency below the truncation).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .linalg import Echelon, Matrix, determinant, format_rational, rank

Path = tuple[str, ...]
TRUNCATION = 6


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


def arrows(ell: int) -> list[Arrow]:
    out = [Arrow("gamma", 0, 0)]
    for i in range(1, ell + 1):
        out.append(Arrow(f"alpha{i}", i - 1, i))
        out.append(Arrow(f"beta{i}", i, i - 1))
    out.append(Arrow("delta", ell, ell))
    return out


def relations(ell: int) -> list[tuple[str, dict[Path, int]]]:
    """Defining relations as (label, linear combination of paths)."""
    a = lambda i: f"alpha{i}"  # noqa: E731
    b = lambda i: f"beta{i}"  # noqa: E731
    rels: list[tuple[str, dict[Path, int]]] = [
        ("gamma alpha1 = 0", {("gamma", a(1)): 1}),
        ("beta1 gamma = 0", {(b(1), "gamma"): 1}),
        ("gamma^2 = alpha1 beta1", {("gamma", "gamma"): 1, (a(1), b(1)): -1}),
        (f"alpha{ell} beta{ell} = 0", {(a(ell), b(ell)): 1}),
        ("delta^2 = 0", {("delta", "delta"): 1}),
    ]
    for i in range(1, ell - 1):
        rels.append((f"beta{i} alpha{i} = alpha{i+1} beta{i+1}", {(b(i), a(i)): 1, (a(i + 1), b(i + 1)): -1}))
    for i in range(1, ell):
        rels.append((f"alpha{i} alpha{i+1} = 0", {(a(i), a(i + 1)): 1}))
        rels.append((f"beta{i+1} beta{i} = 0", {(b(i + 1), b(i)): 1}))
    rels.append((
        f"beta{ell-1} alpha{ell-1} = alpha{ell} delta beta{ell}",
        {(b(ell - 1), a(ell - 1)): 1, (a(ell), "delta", b(ell)): -1},
    ))
    rels.append((
        f"delta beta{ell} alpha{ell} = beta{ell} alpha{ell} delta",
        {("delta", b(ell), a(ell)): 1, (b(ell), a(ell), "delta"): -1},
    ))
    return rels


def basis_families(ell: int) -> list[list[Path]]:
    """The basis, family by family; ``("e", i)`` stands for the idempotent at ``i``."""
    a = lambda i: f"alpha{i}"  # noqa: E731
    b = lambda i: f"beta{i}"  # noqa: E731
    fams: list[list[Path]] = [[("e0",), ("gamma",), ("gamma", "gamma")]]
    for i in range(1, ell):
        fams.append([(a(i),), (b(i),)])
    for i in range(1, ell - 1):
        fams.append([(f"e{i}",), (a(i + 1), b(i + 1))])
    fams.append([(f"e{ell-1}",), (a(ell), "delta", b(ell))])
    fams.append([(a(ell),), (b(ell),), (a(ell), "delta"), ("delta", b(ell))])
    fams.append([(f"e{ell}",), ("delta",), (b(ell), a(ell)), ("delta", b(ell), a(ell))])
    return fams


def socle_elements(ell: int) -> list[Path]:
    """Trace-supported basis elements, one per vertex."""
    out: list[Path] = [("gamma", "gamma")]
    out += [(f"alpha{i+1}", f"beta{i+1}") for i in range(1, ell - 1)]
    out += [(f"alpha{ell}", "delta", f"beta{ell}"), ("delta", f"beta{ell}", f"alpha{ell}")]
    return out


def label(p: Path) -> str:
    return " ".join(p)


@dataclass
class AlgebraTable:
    ell: int
    vertices: list[int]
    arrows: list[Arrow]
    basis: list[Path]
    family: list[int]
    source: list[int]
    target: list[int]
    mult: dict[tuple[int, int], tuple[int, int]]  # (i, j) -> (coefficient, k); absent = 0
    trace: list[int]
    index: dict[Path, int] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def product(self, i: int, j: int) -> tuple[int, int] | None:
        return self.mult.get((i, j))

    def multiply(self, x: dict[int, Fraction | int], y: dict[int, Fraction | int]) -> dict[int, Fraction | int]:
        out: dict[int, Fraction | int] = {}
        for i, a in x.items():
            for j, b in y.items():
                p = self.mult.get((i, j))
                if p:
                    c, k = p
                    out[k] = out.get(k, 0) + c * a * b
        return {k: v for k, v in out.items() if v}

    def element(self, p: Path | str) -> dict[int, int]:
        if isinstance(p, str):
            p = tuple(p.split())
        return {self.index[p]: 1}

    def unit(self) -> dict[int, int]:
        return {self.index[(f"e{v}",)]: 1 for v in self.vertices}

    def path_value(self, p: Path) -> dict[int, Fraction | int]:
        """The element of the algebra represented by a path (arrow names)."""
        cur: dict[int, Fraction | int] | None = None
        for name in p:
            el = self.element((name,))
            cur = el if cur is None else self.multiply(cur, el)
            if not cur:
                return {}
        return cur or {}


def _paths(ell: int, maxlen: int) -> list[Path]:
    arr = arrows(ell)
    by_source: dict[int, list[Arrow]] = {}
    for x in arr:
        by_source.setdefault(x.source, []).append(x)
    tgt = {x.name: x.target for x in arr}
    out: list[Path] = []
    frontier: list[Path] = [(x.name,) for x in arr]
    for _ in range(maxlen):
        out += frontier
        nxt = []
        for p in frontier:
            for x in by_source.get(tgt[p[-1]], []):
                nxt.append(p + (x.name,))
        frontier = nxt
    return out


class ConstructionError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def build_basic(ell: int) -> AlgebraTable:
    if ell < 2:
        raise ValueError("the basic algebra is defined for ell >= 2")
    arr = arrows(ell)
    src = {x.name: x.source for x in arr}
    tgt = {x.name: x.target for x in arr}
    fams = basis_families(ell)
    basis = [p for fam in fams for p in fam]
    family = [f for f, fam in enumerate(fams) for _ in fam]
    basis_paths = {p for p in basis if not p[0].startswith("e")}

    paths = _paths(ell, TRUNCATION)
    col = {p: i for i, p in enumerate(paths)}
    # non-basis paths pivot first, longer first, so normal forms use basis paths only
    prio = lambda c: (paths[c] in basis_paths, -len(paths[c]), c)  # noqa: E731
    ech = Echelon(len(paths), priority=prio)
    for _, rel in relations(ell):
        s, t = src[next(iter(rel))[0]], tgt[next(iter(rel))[-1]]
        lefts = [()] + [p for p in paths if tgt[p[-1]] == s]
        rights = [()] + [p for p in paths if src[p[0]] == t]
        for u in lefts:
            for w in rights:
                if len(u) + len(w) + 2 > TRUNCATION:
                    continue
                vec = {}
                for term, c in rel.items():
                    q = u + term + w
                    if len(q) <= TRUNCATION:
                        vec[col[q]] = vec.get(col[q], 0) + c
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    ech.add(vec)
    free = {paths[c] for c in ech.free_columns()}
    if free != basis_paths:
        raise ConstructionError(f"normal forms do not match the basis: extra {sorted(free - basis_paths)}, missing {sorted(basis_paths - free)}")
    index = {p: i for i, p in enumerate(basis)}

    def normal_form(p: Path) -> dict[int, Fraction | int]:
        if len(p) > TRUNCATION:
            return {}
        c = col[p]
        if p in basis_paths:
            return {index[p]: 1}
        row = ech.pivots[c]  # p + sum(row[others]) = 0 in the quotient
        return {index[paths[k]]: -v for k, v in row.items() if k != c}

    # paths of length 4 must vanish; otherwise truncation could hide something
    for p in paths:
        if len(p) >= 4 and normal_form(p):
            raise ConstructionError(f"path {label(p)} does not vanish")

    def ends(p: Path) -> tuple[int, int]:
        if p[0].startswith("e"):
            v = int(p[0][1:])
            return v, v
        return src[p[0]], tgt[p[-1]]

    source = [ends(p)[0] for p in basis]
    target = [ends(p)[1] for p in basis]
    mult: dict[tuple[int, int], tuple[int, int]] = {}
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            if target[i] != source[j]:
                continue
            if p[0].startswith("e"):
                val = {j: 1}
            elif q[0].startswith("e"):
                val = {i: 1}
            else:
                val = normal_form(p + q)
            if not val:
                continue
            if len(val) != 1:
                raise ConstructionError(f"product {label(p)} * {label(q)} is not a multiple of a basis element")
            (k, c), = val.items()
            if c not in (1, -1):
                raise ConstructionError(f"product {label(p)} * {label(q)} has coefficient {c}")
            mult[(i, j)] = (int(c), k)
    soc = set(socle_elements(ell))
    trace = [1 if p in soc else 0 for p in basis]
    return AlgebraTable(ell, list(range(ell + 1)), arr, basis, family, source, target, mult, trace, index)


# --- certificates ---------------------------------------------------------

def check_associativity(alg: AlgebraTable) -> tuple[int, int, int] | None:
    """First basis triple violating associativity, or ``None``."""
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ij = alg.mult.get((i, j))
            for k in range(n):
                jk = alg.mult.get((j, k))
                left = alg.mult.get((ij[1], k)) if ij else None
                right = alg.mult.get((i, jk[1])) if jk else None
                lv = (ij[0] * left[0], left[1]) if ij and left else None
                rv = (jk[0] * right[0], right[1]) if jk and right else None
                if lv != rv:
                    return (i, j, k)
    return None


def check_unit(alg: AlgebraTable) -> bool:
    u = alg.unit()
    return all(alg.multiply(u, {i: 1}) == {i: 1} == alg.multiply({i: 1}, u) for i in range(alg.dim))


def check_relations(alg: AlgebraTable) -> list[str]:
    """Labels of relations that fail in the table (empty when all hold)."""
    bad = []
    for name, rel in relations(alg.ell):
        total: dict[int, Fraction | int] = {}
        for p, c in rel.items():
            for k, v in alg.path_value(p).items():
                total[k] = total.get(k, 0) + c * v
        if any(total.values()):
            bad.append(name)
    return bad


def trace_gram(alg: AlgebraTable) -> Matrix:
    n = alg.dim
    g = Matrix(n, n)
    for (i, j), (c, k) in alg.mult.items():
        if alg.trace[k]:
            g.add_entry(i, j, c * alg.trace[k])
    return g


@dataclass(frozen=True)
class GramReport:
    symmetric: bool
    nonsingular: bool
    determinant: Fraction
    block_diagonal: bool
    trace_on_cycles_only: bool

    @property
    def ok(self) -> bool:
        return self.symmetric and self.nonsingular and self.block_diagonal and self.trace_on_cycles_only


def gram_report(alg: AlgebraTable) -> GramReport:
    g = trace_gram(alg)
    sym = g == g.transpose()
    det = determinant(g)
    blocks = all(alg.family[i] == alg.family[j] for i, j, _ in g.entries())
    cycles = all(alg.source[i] == alg.target[i] for i in range(alg.dim) if alg.trace[i])
    return GramReport(sym, det != 0, det, blocks, cycles)


def socle_annihilates_radical(alg: AlgebraTable) -> bool:
    for i in range(alg.dim):
        if not alg.trace[i]:
            continue
        for x in alg.arrows:
            a = alg.index[(x.name,)]
            if alg.mult.get((i, a)) or alg.mult.get((a, i)):
                return False
    return True


@dataclass(frozen=True)
class KroneckerReport:
    x_squared_zero: bool
    y_squared_zero: bool
    commute: bool
    product_nonzero: bool
    product: str
    corner_commutative: bool

    @property
    def ok(self) -> bool:
        return all((self.x_squared_zero, self.y_squared_zero, self.commute, self.product_nonzero, self.corner_commutative))


def kronecker_check(alg: AlgebraTable) -> KroneckerReport:
    ell = alg.ell
    x = alg.element(("delta",))
    y = alg.element((f"beta{ell}", f"alpha{ell}"))
    xy, yx = alg.multiply(x, y), alg.multiply(y, x)
    corner = [i for i in range(alg.dim) if alg.source[i] == ell == alg.target[i]]
    comm = all(alg.multiply({i: 1}, {j: 1}) == alg.multiply({j: 1}, {i: 1}) for i in corner for j in corner)
    prod = " + ".join(f"{v}*{label(alg.basis[k])}" for k, v in sorted(xy.items())) or "0"
    return KroneckerReport(not alg.multiply(x, x), not alg.multiply(y, y), xy == yx, bool(xy), prod, comm)


# --- socle quotient as a monomial quiver algebra ----------------------------

def nonzero_in_quotient(alg: AlgebraTable, p: Path) -> bool:
    """Is the path nonzero modulo the trace-supported elements?"""
    val = alg.path_value(p)
    return any(v and not alg.trace[k] for k, v in val.items())


def socle_quotient(alg: AlgebraTable):
    """The quotient by the socle, presented by its minimal zero paths."""
    from .strings import QuiverSpec

    zero: set[Path] = set()
    for p in _paths(alg.ell, 4):  # increasing length, so minimality is a subpath test
        if nonzero_in_quotient(alg, p):
            continue
        proper = (p[i:j] for i in range(len(p)) for j in range(i + 1, len(p) + 1) if j - i < len(p))
        if not any(s in zero for s in proper):
            zero.add(p)
    return QuiverSpec(
        vertices=tuple(alg.vertices),
        arrows=tuple((x.name, x.source, x.target) for x in alg.arrows),
        relations=tuple(sorted(zero)),
    )


def expected_quotient_relations(ell: int) -> set[Path]:
    """The monomial relations of the socle quotient as listed by hand."""
    a = lambda i: f"alpha{i}"  # noqa: E731
    b = lambda i: f"beta{i}"  # noqa: E731
    rels = {("gamma", "gamma"), ("gamma", a(1)), (b(1), "gamma"), ("delta", "delta")}
    rels |= {(a(i), b(i)) for i in range(1, ell + 1)}
    rels |= {(b(i), a(i)) for i in range(1, ell)}
    rels |= {(a(i), a(i + 1)) for i in range(1, ell)}
    rels |= {(b(i + 1), b(i)) for i in range(1, ell)}
    rels |= {("delta", b(ell), a(ell)), (b(ell), a(ell), "delta"), (a(ell), "delta", b(ell))}
    return rels


def quotient_dimension(alg: AlgebraTable) -> int:
    return alg.dim - sum(alg.trace)


# --- special biserial conditions ---------------------------------------------

@dataclass(frozen=True)
class BiserialReport:
    ok: bool
    failures: tuple[str, ...]


def special_biserial_check(
    vertices: Sequence[int],
    arrow_list: Sequence[tuple[str, int, int]],
    nonzero: Callable[[Path], bool],
) -> BiserialReport:
    """Conditions (a1), (a2), (b1), (b2) for a bound quiver.

    ``nonzero(path)`` decides whether a length-two path is nonzero in the algebra.
    """
    fails = []
    for v in vertices:
        nin = sum(1 for _, s, t in arrow_list if t == v)
        nout = sum(1 for _, s, t in arrow_list if s == v)
        if nin > 2:
            fails.append(f"(a1) vertex {v} has {nin} incoming arrows")
        if nout > 2:
            fails.append(f"(a2) vertex {v} has {nout} outgoing arrows")
    for name, s, t in arrow_list:
        succ = [n2 for n2, s2, _ in arrow_list if s2 == t and nonzero((name, n2))]
        pred = [n2 for n2, _, t2 in arrow_list if t2 == s and nonzero((n2, name))]
        if len(succ) > 1:
            fails.append(f"(b1) {name} has nonzero successors {succ}")
        if len(pred) > 1:
            fails.append(f"(b2) {name} has nonzero predecessors {pred}")
    return BiserialReport(not fails, tuple(fails))


def algebra_biserial_check(alg: AlgebraTable) -> BiserialReport:
    arr = [(x.name, x.source, x.target) for x in alg.arrows]
    return special_biserial_check(alg.vertices, arr, lambda p: bool(alg.path_value(p)))


# --- Cartan matrix from the radical layers of the projectives ---------------

def radical_layers(ell: int) -> list[list[list[int]]]:
    """Composition factors of each radical layer of the indecomposable projectives."""
    if ell < 2:
        raise ValueError("need ell >= 2")
    out = []
    for i in range(ell + 1):
        if i == 0:
            out.append([[0], [0, 1], [0]])
        elif i == ell:
            out.append([[ell], [ell, ell - 1], [ell - 1, ell], [ell]])
        elif i == ell - 1:
            out.append([[i], [i - 1, ell], [ell], [i]])
        else:
            out.append([[i], [i - 1, i + 1], [i]])
    return out


def cartan_2delta(ell: int) -> list[list[int]]:
    """``c[i][j]`` = multiplicity of the simple ``S_j`` in the projective cover of ``S_i``."""
    c = [[0] * (ell + 1) for _ in range(ell + 1)]
    for i, layers in enumerate(radical_layers(ell)):
        for layer in layers:
            for j in layer:
                c[i][j] += 1
    return c


def cartan_from_table(alg: AlgebraTable) -> list[list[int]]:
    """``dim e_i A e_j`` read off the basic algebra."""
    n = alg.ell + 1
    c = [[0] * n for _ in range(n)]
    for k in range(alg.dim):
        c[alg.source[k]][alg.target[k]] += 1
    return c


@dataclass(frozen=True)
class ConsistencyReport:
    ell: int
    simple_dims: tuple[int, ...]
    projective_dims: tuple[int, ...]
    total: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.total == self.expected


def dim_consistency(ell: int) -> ConsistencyReport:
    """``sum_i dim P_i * dim S_i = dim R(2 delta)`` using the explicit simple modules."""
    from .constructions import build_S
    from .dimensions import dim_beta

    c = cartan_2delta(ell)
    sdim = tuple(build_S(ell, i).dim for i in range(ell + 1))
    pdim = tuple(sum(c[i][j] * sdim[j] for j in range(ell + 1)) for i in range(ell + 1))
    total = sum(p * s for p, s in zip(pdim, sdim))
    return ConsistencyReport(ell, sdim, pdim, total, dim_beta(ell, [2] * (ell + 1)))


# --- export ------------------------------------------------------------------

def quiver_dot(ell: int, name: str = "A") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for v in range(ell + 1):
        lines.append(f'  v{v} [label="{v}"];')
    for x in arrows(ell):
        lines.append(f'  v{x.source} -> v{x.target} [label="{x.name}"];')
    lines.append("}")
    return "\n".join(lines)


def algebra_to_json(alg: AlgebraTable) -> dict:
    return {
        "ell": alg.ell,
        "vertices": alg.vertices,
        "arrows": [{"name": x.name, "source": x.source, "target": x.target} for x in alg.arrows],
        "basis": [
            {"label": label(p), "family": alg.family[i] + 1, "source": alg.source[i], "target": alg.target[i]}
            for i, p in enumerate(alg.basis)
        ],
        "mult": [
            {"left": label(alg.basis[i]), "right": label(alg.basis[j]), "coefficient": c, "result": label(alg.basis[k])}
            for (i, j), (c, k) in sorted(alg.mult.items())
        ],
        "trace": {label(p): alg.trace[i] for i, p in enumerate(alg.basis) if alg.trace[i]},
    }
