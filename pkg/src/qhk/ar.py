"""Auslander-Reiten computations for the string algebra ``B = A / soc(A)``,
where ``A`` is the basic algebra of ``R^{Lambda0}(2 delta)``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .basic_algebra import build_basic, socle_quotient
from .strings import (
    QuiverRep,
    QuiverSpec,
    Walk,
    band_module,
    boundary_module,
    canonical_band,
    is_band,
    is_string,
    iso_test,
    make_walk,
    orbit_dot,
    parse_walk,
    string_module,
    tau,
    tau_orbit,
)


@lru_cache(maxsize=None)
def string_algebra(ell: int) -> QuiverSpec:
    return socle_quotient(build_basic(ell))


def _down(ell: int) -> list[tuple[str, int]]:
    """Walk from ``l`` down to ``0``: ``beta_m`` for odd ``m``, ``alpha_m^-1`` for even ``m``."""
    return [(f"beta{m}", 1) if m % 2 else (f"alpha{m}", -1) for m in range(ell, 0, -1)]


def _up(ell: int) -> list[tuple[str, int]]:
    """Walk from ``0`` up to ``l``: ``alpha_m`` for odd ``m``, ``beta_m^-1`` for even ``m``."""
    return [(f"alpha{m}", 1) if m % 2 else (f"beta{m}", -1) for m in range(1, ell + 1)]


def band_words(ell: int) -> tuple[Walk, Walk]:
    """The two closed walks ``a`` and ``b`` at vertex ``l``."""
    q = string_algebra(ell)
    if ell % 2 == 0:
        a = [("delta", 1), (f"alpha{ell}", -1), (f"beta{ell}", -1)]
        b = [("delta", 1)] + _down(ell) + [("gamma", -1)] + _up(ell)
    else:
        a = [("delta", -1), (f"beta{ell}", 1), (f"alpha{ell}", 1)]
        b = [("delta", -1)] + _down(ell) + [("gamma", -1)] + _up(ell)
    return make_walk(q, a), make_walk(q, b)


def band_family(ell: int, prime: int) -> list[Walk]:
    """Distinct band classes among ``x_1 ... x_q`` with ``x_i in {a, b}``, excluding ``a^q, b^q``."""
    q = string_algebra(ell)
    a, b = band_words(ell)
    seen: dict[tuple, Walk] = {}
    for choice in product((0, 1), repeat=prime):
        if len(set(choice)) == 1:
            continue
        w = Walk(a.start, a.start, ())
        for c in choice:
            w = w * (b if c else a)
        if not is_band(q, w):
            raise ArithmeticError(f"{w} is not a band")
        key = canonical_band(q, w).letters
        seen.setdefault(key, canonical_band(q, w))
    return [seen[k] for k in sorted(seen)]


def band_family_count(ell: int, prime: int) -> int:
    return len(band_family(ell, prime))


def boundary_arrows(ell: int) -> list[str]:
    return list(string_algebra(ell).arrow_names)


def boundary_string(ell: int, arrow: str) -> Walk:
    """A string ``u`` with ``M(u) = B e_i / B arrow``, read off the path basis."""
    q = string_algebra(ell)
    if arrow == "gamma":
        text = "beta1"
    elif arrow == "delta":
        text = f"beta{ell} alpha{ell}"
    elif arrow == "beta1":
        text = "gamma"
    elif arrow.startswith("beta"):
        text = f"alpha{int(arrow[4:]) - 1}"
    elif arrow == f"alpha{ell}":
        text = f"alpha{ell} delta"
    elif arrow == f"alpha{ell - 1}":
        text = f"delta beta{ell}"
    elif arrow.startswith("alpha"):
        text = f"beta{int(arrow[5:]) + 1}"
    else:
        raise ValueError(f"unknown arrow {arrow!r}")
    return parse_walk(q, text)


def expected_orbit_arrows(ell: int) -> list[str] | None:
    """``tau^k (B e_0 / B gamma) = B e_i / B x_k``: the arrows ``x_0, x_1, ...`` for even ``l``.

    For odd ``l`` no explicit list is given; ``None`` is returned.
    """
    if ell % 2:
        return None
    seq = ["gamma"]
    seq += [f"beta{2 * k}" for k in range(1, ell // 2 + 1)]
    seq += [f"alpha{j}" for j in range(ell - 1, 0, -2)]
    seq += ["beta1"]
    seq += [f"beta{2 * k + 1}" for k in range(1, ell // 2)]
    seq += [f"alpha{j}" for j in range(ell, 1, -2)]
    return seq


def middle_string(ell: int, u: Walk, arrow: str, v: Walk) -> Walk | None:
    """An orientation of ``u arrow^-1 v`` that is a string, if one exists."""
    q = string_algebra(ell)
    mid = make_walk(q, [(arrow, -1)])
    for uu in (u, u.inverse()):
        for vv in (v, v.inverse()):
            if uu.end != mid.start or mid.end != vv.start:
                continue
            w = uu * mid * vv
            if is_string(q, w):
                return w
    return None


@dataclass
class OrbitStep:
    arrow: str
    string: str
    dim: int
    verdict: str  # iso verdict against the boundary module
    middle: str | None
    middle_ok: bool


@dataclass
class OrbitReport:
    ell: int
    period: int | None
    steps: list[OrbitStep]
    expected: list[str] | None
    missing: list[str]

    @property
    def arrows(self) -> list[str]:
        return [s.arrow for s in self.steps]

    @property
    def ok(self) -> bool:
        if self.period != 2 * self.ell + 1:
            return False
        if any(s.verdict != "yes" or not s.middle_ok for s in self.steps):
            return False
        if self.expected is not None and self.arrows != self.expected:
            return False
        return self.missing == ["delta"]

    def dot(self) -> str:
        return orbit_dot([s.string for s in self.steps], self.period)

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "period": self.period,
            "ok": self.ok,
            "steps": [s.__dict__ for s in self.steps],
            "expected_arrows": self.expected,
            "boundary_modules_not_in_orbit": self.missing,
        }


def _identify(ell: int, m: QuiverRep, boundary: dict[str, QuiverRep], seed: int) -> tuple[str, str]:
    verdict = "no"
    for arrow, bm in boundary.items():
        res = iso_test(m, bm, seed)
        if res:
            return arrow, "yes"
        if res.verdict == "undecided":
            verdict = "undecided"
    return "?", verdict


def orbit_report(ell: int, maxsteps: int | None = None, seed: int = 0) -> OrbitReport:
    """The ``tau``-orbit of ``B e_0 / B gamma``, each step matched to a boundary module."""
    q = string_algebra(ell)
    boundary = {x: boundary_module(q, x) for x in boundary_arrows(ell)}
    orbit = tau_orbit(boundary["gamma"], maxsteps or 4 * ell + 4, seed)
    steps = []
    for k, m in enumerate(orbit.modules):
        arrow, verdict = _identify(ell, m, boundary, seed)
        string = str(boundary_string(ell, arrow)) if arrow != "?" else "?"
        steps.append(OrbitStep(arrow, string, m.dim, verdict, None, False))
    # almost split sequences 0 -> M(v) -> M(u x^-1 v) -> M(u) -> 0
    if orbit.period is not None:
        n = len(steps)
        for k, st in enumerate(steps):
            nxt = steps[(k + 1) % n]
            if st.arrow == "?" or nxt.arrow == "?":
                continue
            u, v = boundary_string(ell, st.arrow), boundary_string(ell, nxt.arrow)
            mid = middle_string(ell, u, st.arrow, v)
            if mid is not None:
                st.middle = str(mid)
                st.middle_ok = string_module(q, mid).dim == st.dim + nxt.dim
    missing = sorted(set(boundary) - {s.arrow for s in steps})
    return OrbitReport(ell, orbit.period, steps, expected_orbit_arrows(ell), missing)


def boundary_string_checks(ell: int, seed: int = 0) -> dict[str, str]:
    """Iso verdicts ``M(u) ~ B e_i / B x`` for every arrow ``x``."""
    q = string_algebra(ell)
    return {
        x: iso_test(string_module(q, boundary_string(ell, x)), boundary_module(q, x), seed).verdict
        for x in boundary_arrows(ell)
    }


def fixed_point_check(ell: int, seed: int = 0) -> str:
    """Iso verdict for ``tau M(beta_l alpha_l) ~ M(beta_l alpha_l)``."""
    q = string_algebra(ell)
    m = string_module(q, boundary_string(ell, "delta"))
    return iso_test(tau(m), m, seed).verdict


def band_tau_checks(ell: int, lam: int = 1, seed: int = 0) -> dict[str, str]:
    """Iso verdicts ``tau M ~ M`` for the band modules of ``a`` and ``ab``."""
    q = string_algebra(ell)
    a, b = band_words(ell)
    out = {}
    for name, w in (("a", a), ("ab", a * b)):
        m = band_module(q, w, lam)
        out[name] = iso_test(tau(m), m, seed).verdict
    return out
