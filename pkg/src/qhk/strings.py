"""String algebras: quivers with monomial relations, strings, bands and the
Auslander-Reiten translate of their modules.

Conventions. Paths are written left to right: ``a b`` is ``a`` followed by
``b``. Modules are left modules; an element of ``e_v M`` "sits at ``v``" and
the arrow ``a`` maps ``e_{t(a)} M`` to ``e_{s(a)} M``, so its matrix has shape
``(dim M_{s(a)}, dim M_{t(a)})``. With these conventions the projective
``B e_i`` has as basis the nonzero paths ending at ``i``, a path sitting at
its starting vertex, and a path ``a_1 ... a_k`` acts by ``M(a_1) ... M(a_k)``.
"""

from __future__ import annotations

import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Sequence

from .linalg import Echelon, Matrix, Scalar, Vector, find_invertible, format_rational, parse_rational

Letter = tuple[str, int]  # (arrow name, +1 or -1)


class ProjectiveSummandWarning(UserWarning):
    """A module handed to ``tau`` had a projective direct summand."""


# --- quivers -----------------------------------------------------------------

@dataclass(frozen=True)
class QuiverSpec:
    vertices: tuple[int, ...]
    arrows: tuple[tuple[str, int, int], ...]
    relations: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple((str(n), s, t) for n, s, t in self.arrows))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        names = [n for n, _, _ in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be distinct")
        vs = set(self.vertices)
        for n, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {n} has an unknown endpoint")
        ends = {n: (s, t) for n, s, t in self.arrows}
        for rel in self.relations:
            if not rel:
                raise ValueError("empty relation")
            for a, b in zip(rel, rel[1:]):
                if a not in ends or b not in ends:
                    raise ValueError(f"relation {rel} uses an unknown arrow")
                if ends[a][1] != ends[b][0]:
                    raise ValueError(f"relation {rel} is not a path")
            if rel[0] not in ends:
                raise ValueError(f"relation {rel} uses an unknown arrow")

    def source(self, name: str) -> int:
        return self._ends()[name][0]

    def target(self, name: str) -> int:
        return self._ends()[name][1]

    def _ends(self) -> dict[str, tuple[int, int]]:
        return _ends_of(self)

    @property
    def arrow_names(self) -> tuple[str, ...]:
        return tuple(n for n, _, _ in self.arrows)

    @property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=0)

    def is_zero_path(self, names: Sequence[str]) -> bool:
        """A path vanishes iff it contains a relation as a contiguous subword."""
        names = tuple(names)
        rels = set(self.relations)
        for i in range(len(names)):
            for j in range(i + 1, min(len(names), i + self.max_relation_length) + 1):
                if names[i:j] in rels:
                    return True
        return False

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"name": n, "source": s, "target": t} for n, s, t in self.arrows],
            "relations": [list(r) for r in self.relations],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QuiverSpec":
        return cls(
            tuple(data["vertices"]),
            tuple((a["name"], a["source"], a["target"]) for a in data["arrows"]),
            tuple(tuple(r) for r in data.get("relations", [])),
        )

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for v in self.vertices:
            lines.append(f'  v{v} [label="{v}"];')
        for n, s, t in self.arrows:
            lines.append(f'  v{s} -> v{t} [label="{n}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _ends_of(q: QuiverSpec) -> dict[str, tuple[int, int]]:
    return {n: (s, t) for n, s, t in q.arrows}


class QPath(NamedTuple):
    start: int
    end: int
    arrows: tuple[str, ...]

    def label(self) -> str:
        return " ".join(self.arrows) if self.arrows else f"e{self.start}"


MAX_PATH_LENGTH = 64


@lru_cache(maxsize=None)
def nonzero_paths(q: QuiverSpec) -> tuple[QPath, ...]:
    """All nonzero paths, shortest first; raises if the algebra looks infinite."""
    out = [QPath(v, v, ()) for v in q.vertices]
    frontier = list(out)
    length = 0
    while frontier:
        length += 1
        if length > MAX_PATH_LENGTH:
            raise ValueError("the bound quiver algebra is not finite dimensional")
        nxt = []
        for p in frontier:
            for n, s, t in q.arrows:
                if s == p.end and not q.is_zero_path(p.arrows + (n,)):
                    nxt.append(QPath(p.start, t, p.arrows + (n,)))
        out += nxt
        frontier = nxt
    return tuple(out)


@lru_cache(maxsize=None)
def _paths_between(q: QuiverSpec) -> dict[tuple[int, int], tuple[QPath, ...]]:
    table: dict[tuple[int, int], list[QPath]] = {}
    for p in nonzero_paths(q):
        table.setdefault((p.start, p.end), []).append(p)
    return {k: tuple(v) for k, v in table.items()}


def paths_between(q: QuiverSpec, start: int, end: int) -> tuple[QPath, ...]:
    return _paths_between(q).get((start, end), ())


def concat(q: QuiverSpec, p: QPath, r: QPath) -> QPath | None:
    if p.end != r.start:
        return None
    names = p.arrows + r.arrows
    if q.is_zero_path(names):
        return None
    return QPath(p.start, r.end, names)


def algebra_dimension(q: QuiverSpec) -> int:
    return len(nonzero_paths(q))


# --- walks -------------------------------------------------------------------

@dataclass(frozen=True)
class Walk:
    """A walk on the doubled quiver; letters are ``(arrow, +1)`` or ``(arrow, -1)``."""

    start: int
    end: int
    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "Walk":
        return Walk(self.end, self.start, tuple((n, -e) for n, e in reversed(self.letters)))

    def __mul__(self, other: "Walk") -> "Walk":
        if self.end != other.start:
            raise ValueError("walks are not composable")
        return Walk(self.start, other.end, self.letters + other.letters)

    def power(self, m: int) -> "Walk":
        if self.start != self.end:
            raise ValueError("only closed walks have powers")
        return Walk(self.start, self.end, self.letters * m)

    def is_closed(self) -> bool:
        return self.start == self.end

    def __str__(self) -> str:
        if not self.letters:
            return f"e{self.start}"
        return " ".join(n if e > 0 else f"{n}^-1" for n, e in self.letters)


def letter_ends(q: QuiverSpec, letter: Letter) -> tuple[int, int]:
    s, t = q._ends()[letter[0]]
    return (s, t) if letter[1] > 0 else (t, s)


def make_walk(q: QuiverSpec, letters: Iterable[Letter], start: int | None = None) -> Walk:
    letters = tuple((str(n), 1 if e > 0 else -1) for n, e in letters)
    if not letters:
        if start is None or start not in q.vertices:
            raise ValueError("a trivial walk needs a vertex")
        return Walk(start, start, ())
    for l in letters:
        if l[0] not in q._ends():
            raise ValueError(f"unknown arrow {l[0]!r}")
    s0 = letter_ends(q, letters[0])[0]
    if start is not None and start != s0:
        raise ValueError("walk does not start at the given vertex")
    cur = s0
    for l in letters:
        s, t = letter_ends(q, l)
        if s != cur:
            raise ValueError(f"walk is not composable at {l[0]}")
        cur = t
    return Walk(s0, cur, letters)


def parse_walk(q: QuiverSpec, text: str) -> Walk:
    """Parse ``"beta2 alpha2^-1"``; ``"e2"`` is the trivial walk at vertex 2."""
    toks = text.replace(",", " ").split()
    if len(toks) == 1 and toks[0] not in q._ends() and toks[0].startswith("e") and toks[0][1:].lstrip("-").isdigit():
        return make_walk(q, (), int(toks[0][1:]))
    letters = []
    for tok in toks:
        for suffix in ("^-1", "^{-1}", "'"):
            if tok.endswith(suffix):
                letters.append((tok[: -len(suffix)], -1))
                break
        else:
            letters.append((tok, 1))
    return make_walk(q, letters)


def _runs(letters: Sequence[Letter]) -> Iterable[tuple[int, tuple[str, ...]]]:
    """Maximal same-direction runs, each as the underlying path on the quiver."""
    i = 0
    while i < len(letters):
        j = i
        while j + 1 < len(letters) and letters[j + 1][1] == letters[i][1]:
            j += 1
        names = tuple(n for n, _ in letters[i : j + 1])
        sign = letters[i][1]
        yield sign, names if sign > 0 else tuple(reversed(names))
        i = j + 1


def is_string(q: QuiverSpec, w: Walk) -> bool:
    ls = w.letters
    for (n1, e1), (n2, e2) in zip(ls, ls[1:]):
        if n1 == n2 and e1 == -e2:
            return False
    return not any(q.is_zero_path(path) for _, path in _runs(ls))


def _is_primitive(letters: Sequence[Letter]) -> bool:
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and tuple(letters[:d]) * (n // d) == tuple(letters):
            return False
    return True


def is_band(q: QuiverSpec, w: Walk) -> bool:
    """Closed, primitive, and every power is a string.

    Vanishing is decided by windows no longer than the longest relation, so
    checking one power long enough to contain every cyclic window suffices.
    """
    if not w.letters or not w.is_closed() or not _is_primitive(w.letters):
        return False
    m = max(2, q.max_relation_length // len(w) + 2)
    return is_string(q, w.power(m))


def _key(letters: Sequence[Letter]) -> tuple:
    return tuple(letters)


def canonical_string(w: Walk) -> Walk:
    """Representative of ``{w, w^-1}``: trivial walks are their own class."""
    if not w.letters:
        return w
    inv = w.inverse()
    return w if _key(w.letters) <= _key(inv.letters) else inv


def rotations(q: QuiverSpec, w: Walk) -> list[Walk]:
    out = []
    for i in range(len(w.letters)):
        ls = w.letters[i:] + w.letters[:i]
        v = letter_ends(q, ls[0])[0]
        out.append(Walk(v, v, ls))
    return out


def canonical_band(q: QuiverSpec, w: Walk) -> Walk:
    """Least rotation of ``w`` or ``w^-1`` in the letter order."""
    cands = rotations(q, w) + rotations(q, w.inverse())
    return min(cands, key=lambda x: _key(x.letters))


def _extensions(q: QuiverSpec, w: Walk) -> list[Walk]:
    out = []
    last = w.letters[-1] if w.letters else None
    for n, s, t in q.arrows:
        for e in (1, -1):
            if last is not None and last == (n, -e):
                continue
            a, b = (s, t) if e > 0 else (t, s)
            if a == w.end:
                out.append(Walk(w.start, b, w.letters + ((n, e),)))
    return out


def _strings_from(q: QuiverSpec, first: Letter, maxlen: int) -> list[Walk]:
    w0 = make_walk(q, [first])
    if maxlen < 1 or not is_string(q, w0):
        return []
    out, stack = [], [w0]
    while stack:
        w = stack.pop()
        out.append(w)
        if len(w) < maxlen:
            stack.extend(x for x in _extensions(q, w) if is_string(q, x))
    return out


def _all_letters(q: QuiverSpec) -> list[Letter]:
    return [(n, e) for n, _, _ in q.arrows for e in (1, -1)]


def _map_letters(q: QuiverSpec, maxlen: int, threads: int) -> list[list[Walk]]:
    letters = _all_letters(q)
    if threads > 1 and len(letters) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(_strings_from, [q] * len(letters), letters, [maxlen] * len(letters)))
    return [_strings_from(q, l, maxlen) for l in letters]


def enumerate_strings(q: QuiverSpec, maxlen: int, threads: int = 1) -> list[Walk]:
    """One representative per class ``w ~ w^-1`` of strings of length ``<= maxlen``."""
    seen: dict[tuple, Walk] = {}
    for v in q.vertices:
        w = Walk(v, v, ())
        seen[("e", v)] = w
    for group in _map_letters(q, maxlen, threads):
        for w in group:
            c = canonical_string(w)
            seen.setdefault(_key(c.letters), c)
    return sorted(seen.values(), key=lambda w: (len(w), _key(w.letters), w.start))


def enumerate_bands(q: QuiverSpec, maxlen: int, threads: int = 1) -> list[Walk]:
    """One representative per band class (rotation and inversion) of length ``<= maxlen``."""
    seen: dict[tuple, Walk] = {}
    for group in _map_letters(q, maxlen, threads):
        for w in group:
            if w.is_closed() and is_band(q, w):
                c = canonical_band(q, w)
                seen.setdefault(_key(c.letters), c)
    return sorted(seen.values(), key=lambda w: (len(w), _key(w.letters)))


# --- representations ---------------------------------------------------------

@dataclass(eq=False)
class QuiverRep:
    quiver: QuiverSpec
    dims: dict[int, int]
    maps: dict[str, Matrix]
    labels: dict[int, list[str]] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        q = self.quiver
        self.dims = {v: int(self.dims.get(v, 0)) for v in q.vertices}
        maps = {}
        for n, s, t in q.arrows:
            m = self.maps.get(n)
            if m is None:
                m = Matrix(self.dims[s], self.dims[t])
            if m.shape != (self.dims[s], self.dims[t]):
                raise ValueError(f"arrow {n}: matrix shape {m.shape}, expected {(self.dims[s], self.dims[t])}")
            maps[n] = m
        extra = set(self.maps) - set(maps)
        if extra:
            raise ValueError(f"unknown arrows {sorted(extra)}")
        self.maps = maps

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def act(self, names: Sequence[str], at: int | None = None) -> Matrix:
        """Matrix of the path ``names``; ``at`` is the vertex for the trivial path."""
        if not names:
            return Matrix.identity(self.dims[at])
        out = self.maps[names[0]]
        for n in names[1:]:
            out = out @ self.maps[n]
        return out

    def relation_failures(self) -> list[tuple[str, ...]]:
        return [r for r in self.quiver.relations if not self.act(r).is_zero()]

    def is_valid(self) -> bool:
        return not self.relation_failures()

    def offsets(self) -> dict[int, int]:
        out, pos = {}, 0
        for v in self.quiver.vertices:
            out[v] = pos
            pos += self.dims[v]
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dims": {str(v): self.dims[v] for v in self.quiver.vertices},
            "maps": {
                n: [[format_rational(x) for x in row] for row in self.maps[n].to_dense()]
                for n in self.quiver.arrow_names
            },
        }

    @classmethod
    def from_json(cls, q: QuiverSpec, data: Mapping) -> "QuiverRep":
        dims = {int(v): d for v, d in data["dims"].items()}
        maps = {}
        for n, rows in data.get("maps", {}).items():
            s, t = q._ends()[n]
            m = Matrix(dims.get(s, 0), dims.get(t, 0))
            for r, row in enumerate(rows):
                for c, x in enumerate(row):
                    val = parse_rational(x)
                    if val:
                        m.add_entry(r, c, val)
            maps[n] = m
        return cls(q, dims, maps, None, data.get("name", ""))


def simple(q: QuiverSpec, v: int) -> QuiverRep:
    return QuiverRep(q, {v: 1}, {}, {v: [f"e{v}"]}, f"S({v})")


def projective(q: QuiverSpec, i: int) -> QuiverRep:
    """``B e_i``: basis the nonzero paths ending at ``i``, each at its start."""
    basis = {v: list(paths_between(q, v, i)) for v in q.vertices}
    index = {v: {p: k for k, p in enumerate(ps)} for v, ps in basis.items()}
    maps = {}
    for n, s, t in q.arrows:
        m = Matrix(len(basis[s]), len(basis[t]))
        arrow = QPath(s, t, (n,))
        for c, p in enumerate(basis[t]):
            r = concat(q, arrow, p)
            if r is not None:
                m.add_entry(index[s][r], c, 1)
        maps[n] = m
    labels = {v: [p.label() for p in ps] for v, ps in basis.items()}
    return QuiverRep(q, {v: len(ps) for v, ps in basis.items()}, maps, labels, f"P({i})")


def _vertex_positions(q: QuiverSpec, verts: Sequence[int]) -> list[int]:
    seen: dict[int, int] = {}
    out = []
    for v in verts:
        out.append(seen.get(v, 0))
        seen[v] = seen.get(v, 0) + 1
    return out


def _walk_vertices(q: QuiverSpec, w: Walk) -> list[int]:
    verts = [w.start]
    for l in w.letters:
        verts.append(letter_ends(q, l)[1])
    return verts


def string_module(q: QuiverSpec, w: Walk) -> QuiverRep:
    """``M(w)`` with basis ``z_0..z_n``: a direct letter ``w_i = a`` gives
    ``a z_i = z_{i-1}``, an inverse letter gives ``a z_{i-1} = z_i``."""
    if not is_string(q, w):
        raise ValueError(f"{w} is not a string")
    verts = _walk_vertices(q, w)
    return _updown(q, verts, w.letters, None, str(w), wrap=False)


def band_module(q: QuiverSpec, w: Walk, lam: Scalar = 1) -> QuiverRep:
    """Multiplicity-one band module; the last letter carries ``lam``."""
    if not is_band(q, w):
        raise ValueError(f"{w} is not a band")
    if not lam:
        raise ValueError("band parameter must be nonzero")
    verts = _walk_vertices(q, w)[:-1]
    return _updown(q, verts, w.letters, lam, f"{w} [{format_rational(lam)}]", wrap=True)


def _updown(q, verts, letters, lam, name, wrap) -> QuiverRep:
    n = len(verts)
    pos = _vertex_positions(q, verts)
    dims: dict[int, int] = {}
    for v in verts:
        dims[v] = dims.get(v, 0) + 1
    dims = {v: dims.get(v, 0) for v in q.vertices}
    maps = {a: Matrix(dims[s], dims[t]) for a, s, t in q.arrows}
    for i, (a, e) in enumerate(letters, start=1):
        src, dst = (i, i - 1) if e > 0 else (i - 1, i)
        if wrap:
            src, dst = src % n, dst % n
        coeff = lam if (lam is not None and i == len(letters)) else 1
        maps[a].add_entry(pos[dst], pos[src], coeff)
    labels = {v: [] for v in q.vertices}
    for k, v in enumerate(verts):
        labels[v].append(f"z{k}")
    return QuiverRep(q, dims, maps, labels, name)


def direct_sum_reps(*reps: QuiverRep) -> QuiverRep:
    q = reps[0].quiver
    dims = {v: sum(r.dims[v] for r in reps) for v in q.vertices}
    maps = {}
    from .linalg import direct_sum

    for n in q.arrow_names:
        maps[n] = direct_sum(*(r.maps[n] for r in reps))
    return QuiverRep(q, dims, maps, None, " (+) ".join(r.name for r in reps))


# --- subspaces, radical, quotients -------------------------------------------

def spin_rep(m: QuiverRep, vectors: Iterable[tuple[int, Vector]]) -> dict[int, Echelon]:
    """Submodule generated by vectors sitting at vertices."""
    q = m.quiver
    ech = {v: Echelon(m.dims[v]) for v in q.vertices}
    queue = []
    for v, x in vectors:
        if ech[v].add(x):
            queue.append((v, dict(x)))
    while queue:
        v, x = queue.pop()
        for n, s, t in q.arrows:
            if t == v:
                y = m.maps[n].apply(x)
                if y and ech[s].add(y):
                    queue.append((s, y))
    return ech


def radical(m: QuiverRep) -> dict[int, Echelon]:
    """``rad M`` per vertex: the span of the images of all arrows."""
    ech = {v: Echelon(m.dims[v]) for v in m.quiver.vertices}
    for n, s, t in m.quiver.arrows:
        for c in range(m.dims[t]):
            col = m.maps[n].column(c)
            if col:
                ech[s].add(col)
    return ech


def top_dims(m: QuiverRep) -> dict[int, int]:
    rad = radical(m)
    return {v: m.dims[v] - rad[v].rank for v in m.quiver.vertices}


def quotient_rep(m: QuiverRep, sub: Mapping[int, Echelon], name: str = "") -> QuiverRep:
    """``M / U`` with basis the unit vectors on the non-pivot columns of ``U``."""
    q = m.quiver
    free = {v: sub[v].free_columns() for v in q.vertices}
    idx = {v: {c: k for k, c in enumerate(fs)} for v, fs in free.items()}
    maps = {}
    for n, s, t in q.arrows:
        out = Matrix(len(free[s]), len(free[t]))
        for k, c in enumerate(free[t]):
            y = sub[s].reduce(m.maps[n].column(c))
            for r, val in y.items():
                out.add_entry(idx[s][r], k, val)
        maps[n] = out
    labels = None
    if m.labels:
        labels = {v: [m.labels[v][c] for c in free[v]] for v in q.vertices}
    return QuiverRep(q, {v: len(f) for v, f in free.items()}, maps, labels, name)


def boundary_module(q: QuiverSpec, arrow: str) -> QuiverRep:
    """``B e_i / B a`` for the arrow ``a`` ending at ``i``."""
    s, t = q._ends()[arrow]
    p = projective(q, t)
    path = QPath(s, t, (arrow,))
    row = list(paths_between(q, s, t)).index(path)
    return quotient_rep(p, spin_rep(p, [(s, {row: 1})]), f"Be{t}/B{arrow}")


# --- homomorphisms and isomorphism -------------------------------------------

def hom_space(m1: QuiverRep, m2: QuiverRep) -> list[dict[int, Matrix]]:
    """Basis of ``Hom(m1, m2)``: families ``X_v`` with ``X_s M1(a) = M2(a) X_t``."""
    q = m1.quiver
    offs, pos = {}, 0
    for v in q.vertices:
        offs[v] = pos
        pos += m2.dims[v] * m1.dims[v]
    ech = Echelon(pos)

    def unk(v: int, r: int, c: int) -> int:
        return offs[v] + r * m1.dims[v] + c

    for n, s, t in q.arrows:
        a1, a2 = m1.maps[n], m2.maps[n]
        eqs: dict[tuple[int, int], Vector] = {}
        # (X_s A1)[r, c] = sum_j X_s[r, j] A1[j, c]
        for j, row in a1.rows.items():
            for c, val in row.items():
                for r in range(m2.dims[s]):
                    e = eqs.setdefault((r, c), {})
                    u = unk(s, r, j)
                    e[u] = e.get(u, 0) + val
        # (A2 X_t)[r, c] = sum_j A2[r, j] X_t[j, c]
        for r, row in a2.rows.items():
            for j, val in row.items():
                for c in range(m1.dims[t]):
                    e = eqs.setdefault((r, c), {})
                    u = unk(t, j, c)
                    e[u] = e.get(u, 0) - val
        for key in sorted(eqs):
            e = {u: x for u, x in eqs[key].items() if x}
            if e:
                ech.add(e)
    from .linalg import vector_to_matrix

    return [
        {v: vector_to_matrix(x, m2.dims[v], m1.dims[v], offs[v]) for v in q.vertices}
        for x in ech.nullspace()
    ]


def _global(m1: QuiverRep, m2: QuiverRep, blocks: Mapping[int, Matrix]) -> Matrix:
    out = Matrix(m2.dim, m1.dim)
    o1, o2 = m1.offsets(), m2.offsets()
    for v, blk in blocks.items():
        for r, c, x in blk.entries():
            out.add_entry(o2[v] + r, o1[v] + c, x)
    return out


def is_rep_map(m1: QuiverRep, m2: QuiverRep, blocks: Mapping[int, Matrix]) -> bool:
    for n, s, t in m1.quiver.arrows:
        if blocks[s] @ m1.maps[n] != m2.maps[n] @ blocks[t]:
            return False
    return True


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # "yes", "no" or "undecided"
    reason: str
    witness: Matrix | None = None

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def iso_test(m1: QuiverRep, m2: QuiverRep, seed: int = 0) -> IsoResult:
    if m1.quiver != m2.quiver:
        return IsoResult("no", "different quivers")
    if m1.dim_vector() != m2.dim_vector():
        return IsoResult("no", "dimension vectors differ")
    if m1.dim == 0:
        return IsoResult("yes", "both modules are zero", Matrix(0, 0))
    if top_dims(m1) != top_dims(m2):
        return IsoResult("no", "tops differ")
    basis = hom_space(m1, m2)
    if not basis:
        return IsoResult("no", "no nonzero homomorphism")
    mats = [_global(m1, m2, b) for b in basis]
    w = find_invertible(mats, seed=seed)
    if w is None:
        return IsoResult("undecided", f"no invertible element found in a {len(basis)}-dimensional Hom space")
    return IsoResult("yes", f"invertible homomorphism in a {len(basis)}-dimensional Hom space", w)


# --- projective presentations and tau ----------------------------------------

@dataclass
class ProjectiveSum:
    """``(+)_s B e_{u_s}``; at vertex ``w`` the basis is ``(s, path w -> u_s)``."""

    quiver: QuiverSpec
    summands: tuple[int, ...]
    basis: dict[int, list[tuple[int, QPath]]] = field(init=False)
    index: dict[int, dict[tuple[int, QPath], int]] = field(init=False)

    def __post_init__(self) -> None:
        q = self.quiver
        self.basis = {w: [(s, p) for s, u in enumerate(self.summands) for p in paths_between(q, w, u)] for w in q.vertices}
        self.index = {w: {b: k for k, b in enumerate(bs)} for w, bs in self.basis.items()}

    def rep(self) -> QuiverRep:
        q = self.quiver
        maps = {}
        for n, s, t in q.arrows:
            m = Matrix(len(self.basis[s]), len(self.basis[t]))
            arrow = QPath(s, t, (n,))
            for c, (k, p) in enumerate(self.basis[t]):
                r = concat(q, arrow, p)
                if r is not None:
                    m.add_entry(self.index[s][(k, r)], c, 1)
            maps[n] = m
        return QuiverRep(q, {w: len(b) for w, b in self.basis.items()}, maps)


@dataclass
class Presentation:
    """``P1 -> P0 -> M -> 0``; ``relations[r]`` is the image of the ``r``-th
    generator of ``P1``, a vector of ``P0`` at vertex ``p1[r]``."""

    p0: tuple[int, ...]
    p1: tuple[int, ...]
    generators: list[tuple[int, Vector]]
    relations: list[Vector]
    cover: ProjectiveSum


def proj_cover(m: QuiverRep) -> tuple[ProjectiveSum, list[tuple[int, Vector]], dict[int, Matrix]]:
    """Projective cover: top generators (unit vectors off the radical) and the map per vertex."""
    q = m.quiver
    rad = radical(m)
    gens = [(v, {c: 1}) for v in q.vertices for c in rad[v].free_columns()]
    cover = ProjectiveSum(q, tuple(v for v, _ in gens))
    maps = {}
    for w in q.vertices:
        out = Matrix(m.dims[w], len(cover.basis[w]))
        for c, (s, p) in enumerate(cover.basis[w]):
            y = m.act(p.arrows, p.start).apply(gens[s][1])
            for r, x in y.items():
                out.add_entry(r, c, x)
        maps[w] = out
    return cover, gens, maps


def min_presentation(m: QuiverRep) -> Presentation:
    q = m.quiver
    cover, gens, pi = proj_cover(m)
    p0 = cover.rep()
    kernel = {w: Echelon(len(cover.basis[w])) for w in q.vertices}
    from .linalg import nullspace

    for w in q.vertices:
        for x in nullspace(pi[w]) if pi[w].ncols else []:
            kernel[w].add(x)
    # generators of the kernel: a complement of its radical
    rad = {w: Echelon(len(cover.basis[w])) for w in q.vertices}
    for n, s, t in q.arrows:
        for x in kernel[t].basis():
            y = p0.maps[n].apply(x)
            if y:
                rad[s].add(y)
    rels: list[tuple[int, Vector]] = []
    for w in q.vertices:
        for x in kernel[w].basis():
            if rad[w].add(x):
                rels.append((w, x))
    return Presentation(cover.summands, tuple(w for w, _ in rels), gens, [x for _, x in rels], cover)


def projective_summands(m: QuiverRep) -> list[int]:
    """Vertices ``v`` such that ``B e_v`` is a direct summand of ``m``.

    ``P_v`` splits off iff some ``f: P_v -> M`` and ``g: M -> P_v`` compose to
    an automorphism, i.e. ``g(f(e_v))`` has a nonzero ``e_v`` coefficient.
    """
    q = m.quiver
    out = []
    for v in q.vertices:
        if not m.dims[v]:
            continue
        pv = projective(q, v)
        trivial = list(paths_between(q, v, v)).index(QPath(v, v, ()))
        found = False
        for g in hom_space(m, pv):
            blk = g[v]
            if any(blk[trivial, c] for c in range(m.dims[v])):
                found = True
                break
        if found:
            out.append(v)
    return out


def tau(m: QuiverRep, check_projective: bool = True) -> QuiverRep:
    """``D Tr M`` from the minimal presentation ``P1 -f-> P0``.

    ``Tr M`` is the cokernel of ``f^*: (+)_s e_{u_s} B -> (+)_r e_{v_r} B``,
    ``y_s -> sum_s g_{rs} y_s``; its dual at vertex ``w`` is the annihilator
    of ``image(f^*) e_w``, and an arrow acts by the transpose of right
    multiplication.
    """
    q = m.quiver
    if check_projective:
        ps = projective_summands(m)
        if ps:
            warnings.warn(f"projective summands at vertices {ps} are dropped by tau", ProjectiveSummandWarning, stacklevel=2)
    pres = min_presentation(m)
    cover = pres.cover
    # N = (+)_r e_{v_r} B: at w the basis is (r, path v_r -> w)
    nb = {w: [(r, p) for r, v in enumerate(pres.p1) for p in paths_between(q, v, w)] for w in q.vertices}
    nidx = {w: {b: k for k, b in enumerate(bs)} for w, bs in nb.items()}
    ann: dict[int, Echelon] = {}
    ann_basis: dict[int, list[Vector]] = {}
    for w in q.vertices:
        img = Echelon(len(nb[w]))
        for s, u in enumerate(pres.p0):
            for y in paths_between(q, u, w):
                vec: Vector = {}
                for r, rel in enumerate(pres.relations):
                    v = pres.p1[r]
                    for k, c in rel.items():
                        s2, p = cover.basis[v][k]
                        if s2 != s:
                            continue
                        py = concat(q, p, y)
                        if py is not None:
                            key = nidx[w][(r, py)]
                            vec[key] = vec.get(key, 0) + c
                vec = {k: x for k, x in vec.items() if x}
                if vec:
                    img.add(vec)
        ann[w] = img
        ann_basis[w] = img.nullspace()
    maps = {}
    for n, s, t in q.arrows:
        out = Matrix(len(ann_basis[s]), len(ann_basis[t]))
        free_s = ann[s].free_columns()
        arrow = QPath(s, t, (n,))
        for j, phi in enumerate(ann_basis[t]):
            # (a . phi)(r, x) = phi(r, x a)
            val: Vector = {}
            for k, (r, x) in enumerate(nb[s]):
                xa = concat(q, x, arrow)
                if xa is not None:
                    c = phi.get(nidx[t][(r, xa)])
                    if c:
                        val[k] = c
            for i, f in enumerate(free_s):
                if val.get(f):
                    out.add_entry(i, j, val[f])
        maps[n] = out
    dims = {w: len(ann_basis[w]) for w in q.vertices}
    return QuiverRep(q, dims, maps, None, f"tau({m.name})" if m.name else "")


@dataclass
class Orbit:
    modules: list[QuiverRep]
    period: int | None
    verdicts: list[str]


def tau_orbit(m: QuiverRep, maxsteps: int, seed: int = 0) -> Orbit:
    """Apply ``tau`` until the result is isomorphic to ``m`` or ``maxsteps`` is reached."""
    mods = [m]
    verdicts = []
    cur = m
    for k in range(1, maxsteps + 1):
        cur = tau(cur)
        if cur.dim == 0:
            return Orbit(mods, None, verdicts)
        res = iso_test(cur, m, seed)
        verdicts.append(res.verdict)
        if res:
            return Orbit(mods, k, verdicts)
        mods.append(cur)
    return Orbit(mods, None, verdicts)


def orbit_dot(names: Sequence[str], period: int | None, graph: str = "tau_orbit") -> str:
    """The orbit as a cycle (or a chain) of ``tau`` edges, pointing from ``M`` to ``tau M``."""
    lines = [f"digraph {graph} {{", "  rankdir=LR;"]
    for k, n in enumerate(names):
        lines.append(f'  m{k} [label="{n}"];')
    for k in range(len(names) - 1):
        lines.append(f'  m{k} -> m{k+1} [label="tau"];')
    if period is not None and names:
        lines.append(f'  m{len(names) - 1} -> m0 [label="tau"];')
    lines.append("}")
    return "\n".join(lines)


def dumps_rep(m: QuiverRep) -> str:
    return json.dumps(m.to_json(), sort_keys=True)
