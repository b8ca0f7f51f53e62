"""Finite-dimensional modules over cyclotomic quiver Hecke algebras at ``Lambda0``.

A :class:`ModuleDatum` is a direct sum of weight spaces ``e(nu) M`` indexed by
residue sequences ``nu``. Dots ``x_k`` act inside each weight space and the
crossing ``psi_k`` maps ``e(nu) M`` to ``e(s_k nu) M``; both are stored as
blocks of exact rational matrices.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .cartan import CartanD2, Weight, bilinear_alpha, build_datum
from .linalg import Matrix, Scalar, format_rational, parse_rational, matrix_power
from .tableaux import sequence_content

Seq = tuple[int, ...]


# --- the polynomials Q_{i,j} -------------------------------------------------

@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in two variables ``(u, v)``: ``{(p, q): coefficient}``."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], int]) -> "QPolynomial":
        return cls(tuple(sorted((k, c) for k, c in d.items() if c)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def swap(self) -> "QPolynomial":
        return QPolynomial.from_dict({(q, p): c for (p, q), c in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, u: Matrix, v: Matrix) -> Matrix:
        n = u.nrows
        out = Matrix(n, n)
        for (p, q), c in self.terms:
            out = out + (matrix_power(u, p) @ matrix_power(v, q)).scale(c)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (p, q), c in self.terms:
            mono = "*".join(s for s in (_pow("u", p), _pow("v", q)) if s) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def _pow(name: str, e: int) -> str:
    return "" if e == 0 else name if e == 1 else f"{name}^{e}"


@dataclass(frozen=True)
class Poly3:
    """Polynomial in ``(x_k, x_{k+1}, x_{k+2})`` as ``{(a, b, c): coefficient}``."""

    terms: tuple[tuple[tuple[int, int, int], int], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int, int], int]) -> "Poly3":
        return cls(tuple(sorted((k, c) for k, c in d.items() if c)))

    def as_dict(self) -> dict[tuple[int, int, int], int]:
        return dict(self.terms)

    def evaluate(self, a: Matrix, b: Matrix, c: Matrix) -> Matrix:
        n = a.nrows
        out = Matrix(n, n)
        for (p, q, r), coef in self.terms:
            out = out + (matrix_power(a, p) @ matrix_power(b, q) @ matrix_power(c, r)).scale(coef)
        return out


def q_polynomial(ell: int, i: int, j: int, middle: int = 1) -> QPolynomial:
    """The polynomial ``Q_{i,j}(u, v)``; ``middle`` scales the edges strictly inside the chain."""
    datum = build_datum(ell)
    datum.check_index(i)
    datum.check_index(j)
    if ell < 2:
        raise ValueError("the polynomials are fixed for ell >= 2 only")
    if i == j:
        return QPolynomial(())
    if datum.a[i][j] == 0:
        return QPolynomial.from_dict({(0, 0): 1})
    lo, hi = min(i, j), max(i, j)
    if lo == 0:
        q = QPolynomial.from_dict({(2, 0): 1, (0, 1): 1})
    elif hi == ell:
        q = QPolynomial.from_dict({(1, 0): 1, (0, 2): 1})
    else:
        q = QPolynomial.from_dict({(1, 0): middle, (0, 1): middle})
    return q if i == lo else q.swap()


def q_polynomial_is_admissible(ell: int, i: int, j: int, q: QPolynomial) -> bool:
    """Degree and leading-coefficient constraints on ``Q_{i,j}``."""
    datum = build_datum(ell)
    if i == j:
        return q.is_zero()
    d = q.as_dict()
    aii = bilinear_alpha(datum, i, datum.alpha(i))
    ajj = bilinear_alpha(datum, j, datum.alpha(j))
    aij = bilinear_alpha(datum, i, datum.alpha(j))
    if any(p * aii + r * ajj + 2 * aij != 0 for (p, r) in d):
        return False
    return d.get((-datum.a[i][j], 0), 0) != 0


def divided_difference(q: QPolynomial) -> Poly3:
    """``(Q(x_k, x_{k+1}) - Q(x_{k+2}, x_{k+1})) / (x_k - x_{k+2})``, term by term."""
    out: dict[tuple[int, int, int], int] = {}
    for (p, r), c in q.terms:
        for a in range(p):
            key = (a, r, p - 1 - a)
            out[key] = out.get(key, 0) + c
    return Poly3.from_dict(out)


def multiply_back(dd: Poly3) -> dict[tuple[int, int, int], int]:
    """``(x_k - x_{k+2}) * dd``, used to certify the division."""
    out: dict[tuple[int, int, int], int] = {}
    for (a, b, c), coef in dd.terms:
        for key, s in (((a + 1, b, c), 1), ((a, b, c + 1), -1)):
            out[key] = out.get(key, 0) + s * coef
    return {k: v for k, v in out.items() if v}


# --- module data --------------------------------------------------------------

def swap_seq(nu: Sequence[int], k: int) -> Seq:
    """``s_k nu`` (``k`` is 1-based)."""
    nu = list(nu)
    nu[k - 1], nu[k] = nu[k], nu[k - 1]
    return tuple(nu)


@dataclass(eq=False)
class ModuleDatum:
    ell: int
    beta: tuple[int, ...]
    components: dict[Seq, int]
    x: list[dict[Seq, Matrix]]
    psi: list[dict[Seq, Matrix]]
    degrees: dict[Seq, list[int]] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        self.components = {tuple(nu): d for nu, d in self.components.items() if d > 0}
        n = self.n
        if len(self.x) != n or len(self.psi) != max(n - 1, 0):
            raise ValueError("wrong number of generator families")
        for nu in self.components:
            if len(nu) != n:
                raise ValueError(f"sequence {nu} has the wrong length")
        for k, blocks in enumerate(self.x, 1):
            for nu, m in blocks.items():
                d = self.components.get(nu, 0)
                if m.shape != (d, d):
                    raise ValueError(f"x_{k} block at {nu} has shape {m.shape}, expected {(d, d)}")
        for k, blocks in enumerate(self.psi, 1):
            for nu, m in blocks.items():
                d = self.components.get(nu, 0)
                d2 = self.components.get(swap_seq(nu, k), 0)
                if m.shape != (d2, d):
                    raise ValueError(f"psi_{k} block at {nu} has shape {m.shape}, expected {(d2, d)}")

    @property
    def n(self) -> int:
        return sum(self.beta)

    @property
    def datum(self) -> CartanD2:
        return build_datum(self.ell)

    @cached_property
    def order(self) -> list[Seq]:
        return sorted(self.components)

    @cached_property
    def offsets(self) -> dict[Seq, int]:
        out, pos = {}, 0
        for nu in self.order:
            out[nu] = pos
            pos += self.components[nu]
        return out

    @property
    def dim(self) -> int:
        return sum(self.components.values())

    def comp_dim(self, nu: Seq) -> int:
        return self.components.get(nu, 0)

    def X(self, k: int, nu: Seq) -> Matrix:
        d = self.comp_dim(nu)
        return self.x[k - 1].get(nu) or Matrix(d, d)

    def P(self, k: int, nu: Seq) -> Matrix:
        m = self.psi[k - 1].get(nu)
        if m is not None:
            return m
        return Matrix(self.comp_dim(swap_seq(nu, k)), self.comp_dim(nu))

    def generators(self) -> list[tuple[str, int]]:
        return [("x", k) for k in range(1, self.n + 1)] + [("psi", k) for k in range(1, self.n)]

    def act_block(self, gen: tuple[str, int], nu: Seq) -> tuple[Seq, Matrix]:
        kind, k = gen
        if kind == "x":
            return nu, self.X(k, nu)
        return swap_seq(nu, k), self.P(k, nu)

    def global_matrix(self, gen: tuple[str, int]) -> Matrix:
        N = self.dim
        out = Matrix(N, N)
        for nu in self.order:
            tgt, blk = self.act_block(gen, nu)
            if tgt not in self.components:
                continue
            r0, c0 = self.offsets[tgt], self.offsets[nu]
            for r, c, v in blk.entries():
                out.add_entry(r0 + r, c0 + c, v)
        return out

    def idempotent(self, nu: Seq) -> Matrix:
        N = self.dim
        o, d = self.offsets[nu], self.components[nu]
        return Matrix(N, N, {o + i: {o + i: 1} for i in range(d)})

    def copy(self) -> "ModuleDatum":
        return ModuleDatum(
            self.ell,
            self.beta,
            dict(self.components),
            [{nu: m.copy() for nu, m in b.items()} for b in self.x],
            [{nu: m.copy() for nu, m in b.items()} for b in self.psi],
            None if self.degrees is None else {nu: list(d) for nu, d in self.degrees.items()},
            self.name,
        )


def zero_module(ell: int, beta: Sequence[int]) -> ModuleDatum:
    n = sum(beta)
    return ModuleDatum(ell, tuple(beta), {}, [{} for _ in range(n)], [{} for _ in range(max(n - 1, 0))])


# --- relation verification -------------------------------------------------

@dataclass(frozen=True)
class RelationReport:
    ok: bool
    relation: str = ""
    k: tuple[int, ...] = ()
    nu: Seq = ()
    basis_index: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "all relations hold"
        return f"relation {self.relation} fails at k={self.k}, nu={self.nu}, basis vector {self.basis_index}: {self.detail}"


class _Fail(Exception):
    def __init__(self, report: RelationReport):
        self.report = report


def _check(relation: str, k: tuple[int, ...], nu: Seq, diff: Matrix, detail: str = "") -> None:
    if not diff.is_zero():
        col = min(c for row in diff.rows.values() for c in row)
        raise _Fail(RelationReport(False, relation, k, nu, col, detail or "nonzero difference"))


def verify_relations(m: ModuleDatum, middle: int = 1) -> RelationReport:
    """Check every defining relation of the cyclotomic algebra on every weight space.

    The failing witness is the first relation in a fixed order (relation family,
    indices, weight space) together with the first basis vector on which the
    two sides differ.
    """
    try:
        _verify(m, middle)
    except _Fail as exc:
        return exc.report
    return RelationReport(True)


def _verify(m: ModuleDatum, middle: int) -> None:
    ell, n = m.ell, m.n
    datum = m.datum
    comps = m.order
    # weight-space typing
    for nu in comps:
        if sequence_content(ell, nu) != tuple(m.beta):
            raise _Fail(RelationReport(False, "weight", (), nu, 0, "sequence content differs from beta"))
        if nu[0] != 0:
            raise _Fail(RelationReport(False, "cyclotomic", (1,), nu, 0, "e(nu) must vanish when nu_1 != 0"))
    for k, blocks in enumerate(m.x, 1):
        for nu in blocks:
            if nu not in m.components:
                raise _Fail(RelationReport(False, "typing", (k,), nu, 0, "x block on an absent weight space"))
    for k, blocks in enumerate(m.psi, 1):
        for nu, blk in blocks.items():
            if nu not in m.components:
                raise _Fail(RelationReport(False, "typing", (k,), nu, 0, "psi block on an absent weight space"))
    Q = {(i, j): q_polynomial(ell, i, j, middle) for i in range(ell + 1) for j in range(ell + 1)}
    DD = {key: divided_difference(q) for key, q in Q.items()}
    for nu in comps:
        _check("cyclotomic", (1,), nu, m.X(1, nu))
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            for nu in comps:
                a, b = m.X(k, nu), m.X(l, nu)
                _check("x_k x_l = x_l x_k", (k, l), nu, a @ b - b @ a)
    for k in range(1, n):
        for l in range(k + 2, n):
            for nu in comps:
                lhs = m.P(k, swap_seq(nu, l)) @ m.P(l, nu)
                rhs = m.P(l, swap_seq(nu, k)) @ m.P(k, nu)
                _check("psi_k psi_l = psi_l psi_k", (k, l), nu, lhs - rhs)
    for k in range(1, n):
        for nu in comps:
            sq = m.P(k, swap_seq(nu, k)) @ m.P(k, nu)
            q = Q[(nu[k - 1], nu[k])]
            _check("psi_k^2 = Q(x_k, x_k+1)", (k,), nu, sq - q.evaluate(m.X(k, nu), m.X(k + 1, nu)))
    for k in range(1, n):
        for l in range(1, n + 1):
            sl = k + 1 if l == k else k if l == k + 1 else l
            for nu in comps:
                tgt = swap_seq(nu, k)
                diff = m.P(k, nu) @ m.X(l, nu) - m.X(sl, tgt) @ m.P(k, nu)
                if nu[k - 1] == nu[k] and l in (k, k + 1):
                    d = m.comp_dim(nu)
                    diff = diff + Matrix.identity(d).scale(1 if l == k else -1)
                _check("psi_k x_l - x_{s_k(l)} psi_k", (k, l), nu, diff)
    for k in range(1, n - 1):
        for nu in comps:
            lhs = m.P(k + 1, swap_seq(swap_seq(nu, k + 1), k)) @ m.P(k, swap_seq(nu, k + 1)) @ m.P(k + 1, nu)
            rhs = m.P(k, swap_seq(swap_seq(nu, k), k + 1)) @ m.P(k + 1, swap_seq(nu, k)) @ m.P(k, nu)
            diff = lhs - rhs
            if nu[k - 1] == nu[k + 1]:
                corr = DD[(nu[k - 1], nu[k])].evaluate(m.X(k, nu), m.X(k + 1, nu), m.X(k + 2, nu))
                diff = diff - corr
            _check("braid", (k,), nu, diff)


def check_grading(m: ModuleDatum) -> RelationReport:
    """Homogeneity of every generator with respect to the attached degrees."""
    if m.degrees is None:
        return RelationReport(True, detail="no grading attached")
    datum = m.datum
    for gen in m.generators():
        kind, k = gen
        for nu in m.order:
            tgt, blk = m.act_block(gen, nu)
            if tgt not in m.components:
                continue
            if kind == "x":
                shift = bilinear_alpha(datum, nu[k - 1], datum.alpha(nu[k - 1]))
            else:
                shift = -bilinear_alpha(datum, nu[k - 1], datum.alpha(nu[k]))
            for r, c, _ in blk.entries():
                if m.degrees[tgt][r] != m.degrees[nu][c] + shift:
                    return RelationReport(False, f"degree of {kind}_{k}", (k,), nu, c, f"expected shift {shift}")
    return RelationReport(True)


# --- derived modules --------------------------------------------------------

def restrict_E(i: int, m: ModuleDatum) -> ModuleDatum:
    """``e(beta - alpha_i, i) M`` as a module over the smaller algebra."""
    build_datum(m.ell).check_index(i)
    n = m.n
    if m.beta[i] == 0:
        raise ValueError(f"beta has no alpha_{i} to remove")
    beta = _drop(m.beta, i)
    keep = {nu: d for nu, d in m.components.items() if nu[-1] == i}
    comps = {nu[:-1]: d for nu, d in keep.items()}
    x = [{nu[:-1]: blk for nu, blk in m.x[k].items() if nu in keep} for k in range(n - 1)]
    psi = [{nu[:-1]: blk for nu, blk in m.psi[k].items() if nu in keep} for k in range(n - 2)]
    deg = None if m.degrees is None else {nu[:-1]: list(d) for nu, d in m.degrees.items() if nu in keep}
    return ModuleDatum(m.ell, beta, comps, x, psi, deg, f"E_{i}({m.name})" if m.name else "")


def _drop(beta: Sequence[int], i: int) -> tuple[int, ...]:
    b = list(beta)
    b[i] -= 1
    return tuple(b)


def dual_module(m: ModuleDatum) -> ModuleDatum:
    """Linear dual with generators acting by transposes (the anti-involution fixes them)."""
    x = [{nu: blk.transpose() for nu, blk in b.items()} for b in m.x]
    psi: list[dict[Seq, Matrix]] = []
    for k, blocks in enumerate(m.psi, 1):
        new: dict[Seq, Matrix] = {}
        for nu, blk in blocks.items():
            new[swap_seq(nu, k)] = blk.transpose()
        psi.append(new)
    deg = None if m.degrees is None else {nu: [-d for d in ds] for nu, ds in m.degrees.items()}
    return ModuleDatum(m.ell, m.beta, dict(m.components), x, psi, deg, f"dual({m.name})" if m.name else "")


def direct_sum_modules(a: ModuleDatum, b: ModuleDatum) -> ModuleDatum:
    from .linalg import direct_sum

    if a.ell != b.ell or a.beta != b.beta:
        raise ValueError("direct sum needs equal ell and beta")
    comps = {nu: a.comp_dim(nu) + b.comp_dim(nu) for nu in set(a.components) | set(b.components)}
    x = []
    for k in range(1, a.n + 1):
        x.append({nu: direct_sum(a.X(k, nu), b.X(k, nu)) for nu in comps})
    psi = []
    for k in range(1, a.n):
        psi.append({nu: direct_sum(a.P(k, nu), b.P(k, nu)) for nu in comps if swap_seq(nu, k) in comps})
    deg = None
    if a.degrees is not None and b.degrees is not None:
        deg = {nu: a.degrees.get(nu, []) + b.degrees.get(nu, []) for nu in comps}
    return ModuleDatum(a.ell, a.beta, comps, x, psi, deg)


# --- characters --------------------------------------------------------------

def character(m: ModuleDatum) -> dict[Seq, int]:
    return {nu: m.components[nu] for nu in m.order}


def graded_character(m: ModuleDatum) -> dict[Seq, dict[int, int]]:
    if m.degrees is None:
        raise ValueError("module carries no grading")
    out: dict[Seq, dict[int, int]] = {}
    for nu in m.order:
        poly: dict[int, int] = {}
        for d in m.degrees[nu]:
            poly[d] = poly.get(d, 0) + 1
        out[nu] = dict(sorted(poly.items()))
    return out


# --- mutation fuzzing --------------------------------------------------------

@dataclass(frozen=True)
class Mutation:
    kind: str
    k: int
    nu: Seq
    row: int
    col: int
    delta: int


def mutation_sites(m: ModuleDatum) -> list[tuple[str, int, Seq, int, int]]:
    sites = []
    for k in range(1, m.n + 1):
        for nu in m.order:
            d = m.comp_dim(nu)
            sites += [("x", k, nu, r, c) for r in range(d) for c in range(d)]
    for k in range(1, m.n):
        for nu in m.order:
            d2 = m.comp_dim(swap_seq(nu, k))
            sites += [("psi", k, nu, r, c) for r in range(d2) for c in range(m.comp_dim(nu))]
    return sites


def mutate(m: ModuleDatum, mut: Mutation) -> ModuleDatum:
    out = m.copy()
    fam = out.x if mut.kind == "x" else out.psi
    blocks = fam[mut.k - 1]
    blk = (m.X(mut.k, mut.nu) if mut.kind == "x" else m.P(mut.k, mut.nu)).copy()
    blk.add_entry(mut.row, mut.col, mut.delta)
    blocks[mut.nu] = blk
    return out


def random_mutations(m: ModuleDatum, count: int, seed: int = 0, delta: int = 1) -> list[Mutation]:
    rng = random.Random(seed)
    sites = mutation_sites(m)
    return [Mutation(*rng.choice(sites), delta) for _ in range(count)]


# --- JSON ---------------------------------------------------------------------

def _mat_json(mat: Matrix) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in mat.to_dense()]


def _mat_from_json(data: list[list[str]], nrows: int, ncols: int) -> Matrix:
    if nrows == 0 or ncols == 0:
        return Matrix(nrows, ncols)
    m = Matrix.from_dense([[parse_rational(v) for v in row] for row in data])
    if m.shape != (nrows, ncols):
        raise ValueError("matrix shape does not match the weight-space dimensions")
    return m


def module_to_json(m: ModuleDatum) -> dict:
    out = {
        "ell": m.ell,
        "beta": list(m.beta),
        "components": [{"nu": list(nu), "dim": m.components[nu]} for nu in m.order],
        "x": [
            [{"nu": list(nu), "matrix": _mat_json(blk)} for nu, blk in sorted(b.items()) if not blk.is_zero()]
            for b in m.x
        ],
        "psi": [
            [{"nu": list(nu), "matrix": _mat_json(blk)} for nu, blk in sorted(b.items()) if not blk.is_zero()]
            for b in m.psi
        ],
    }
    if m.degrees is not None:
        out["degrees"] = [{"nu": list(nu), "degrees": m.degrees[nu]} for nu in m.order]
    return out


def module_from_json(data: dict) -> ModuleDatum:
    ell = int(data["ell"])
    beta = tuple(int(b) for b in data["beta"])
    comps = {tuple(c["nu"]): int(c["dim"]) for c in data["components"]}
    n = sum(beta)
    x = []
    for k in range(n):
        blocks = {}
        for entry in data["x"][k] if k < len(data["x"]) else []:
            nu = tuple(entry["nu"])
            d = comps.get(nu, 0)
            blocks[nu] = _mat_from_json(entry["matrix"], d, d)
        x.append(blocks)
    psi = []
    for k in range(max(n - 1, 0)):
        blocks = {}
        for entry in data["psi"][k] if k < len(data["psi"]) else []:
            nu = tuple(entry["nu"])
            blocks[nu] = _mat_from_json(entry["matrix"], comps.get(swap_seq(nu, k + 1), 0), comps.get(nu, 0))
        psi.append(blocks)
    deg = None
    if "degrees" in data:
        deg = {tuple(e["nu"]): [int(d) for d in e["degrees"]] for e in data["degrees"]}
    return ModuleDatum(ell, beta, comps, x, psi, deg)


def dumps(m: ModuleDatum) -> str:
    return json.dumps(module_to_json(m), sort_keys=True)
