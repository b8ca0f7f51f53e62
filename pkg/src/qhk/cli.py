"""Command-line front end: ``qhk <command> ...``.

Output is JSON by default (keys sorted, so identical invocations give
identical bytes); ``--format text`` prints a compact human summary and
``--dot`` prints Graphviz where a graph exists. Exit codes: 0 success,
1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Callable, Sequence

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    command: str
    ell: int | None
    fmt: str
    seed: int
    threads: int


@dataclass
class Output:
    data: Any
    text: str
    ok: bool = True
    dot: str | None = None


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from exc


def _threads(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("QHK_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise UsageError(f"QHK_THREADS must be an integer, got {env!r}") from exc
    return 1


# --- commands ------------------------------------------------------------------

def cmd_dim(cfg: Config, args) -> Output:
    from .dimensions import dim_beta, dim_block, dim_n

    if args.beta is not None:
        beta = _ints(args.beta)
        if len(beta) != cfg.ell + 1:
            raise UsageError(f"--beta needs {cfg.ell + 1} coefficients")
        d = dim_beta(cfg.ell, beta)
        return Output({"ell": cfg.ell, "beta": list(beta), "dim": d}, str(d))
    if args.n is not None:
        d = dim_n(cfg.ell, args.n)
        return Output({"ell": cfg.ell, "n": args.n, "dim": d}, str(d))
    left, right = _ints(args.block[0]), _ints(args.block[1])
    if len(left) != len(right):
        raise UsageError("--block sequences must have equal length")
    d = dim_block(cfg.ell, left, right)
    return Output({"ell": cfg.ell, "left": list(left), "right": list(right), "dim": d}, str(d))


def cmd_tableaux(cfg: Config, args) -> Output:
    from .tableaux import (
        StrictPartition,
        count_by_enumeration,
        count_by_hooks,
        count_by_product_formula,
        enumerate_ST,
        residue_sequence,
    )

    shape = StrictPartition(_ints(args.shape))
    ts = enumerate_ST(shape)
    items = []
    for T in ts:
        item: dict[str, Any] = {"rows": [list(r) for r in T.rows]}
        if args.residues:
            item["residues"] = list(residue_sequence(cfg.ell, T))
        items.append(item)
    counts = {
        "enumeration": count_by_enumeration(shape),
        "product_formula": count_by_product_formula(shape),
        "hooks": count_by_hooks(shape),
    }
    ok = len(set(counts.values())) == 1
    lines = [f"shape {shape}: {len(ts)} standard shifted tableaux"]
    for it in items:
        rows = " / ".join(" ".join(map(str, r)) for r in it["rows"])
        lines.append(rows + (f"   residues {' '.join(map(str, it['residues']))}" if args.residues else ""))
    data = {"ell": cfg.ell, "shape": list(shape.parts), "count": len(ts), "counts": counts, "tableaux": items}
    return Output(data, "\n".join(lines), ok)


def cmd_fock(cfg: Config, args) -> Output:
    from .fock import FockVector, apply_word, parse_word

    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    start = FockVector.basis(_ints(args.start)) if args.start else FockVector.vacuum()
    v = apply_word(cfg.ell, word, start)
    terms = [{"partition": list(lam.parts), "coefficient": c} for lam, c in v.items()]
    text = " + ".join(f"{c}|{','.join(map(str, lam.parts))}>" for lam, c in v.items()) or "0"
    return Output({"ell": cfg.ell, "word": args.word, "terms": terms}, text)


def cmd_walls(cfg: Config, args) -> Output:
    from .walls import enumerate_reduced

    beta = _ints(args.beta)
    if len(beta) != cfg.ell + 1:
        raise UsageError(f"--beta needs {cfg.ell + 1} coefficients")
    walls = enumerate_reduced(cfg.ell, beta)
    data = {"ell": cfg.ell, "beta": list(beta), "count": len(walls), "walls": [list(w.columns) for w in walls]}
    return Output(data, f"{len(walls)} walls: " + " ".join(str(w) for w in walls))


def cmd_modules(cfg: Config, args) -> Output:
    from .constructions import build_named
    from .qha import character, check_grading, graded_character, module_to_json, verify_relations

    m = build_named(cfg.ell, args.build)
    data: dict[str, Any] = {"ell": cfg.ell, "name": m.name, "beta": list(m.beta), "dim": m.dim}
    lines = [f"{m.name}: dim {m.dim}, beta {list(m.beta)}"]
    ok = True
    if args.verify:
        rel = verify_relations(m, middle=args.middle)
        grad = check_grading(m)
        data["relations"] = {"ok": rel.ok, "report": str(rel)}
        data["grading"] = {"ok": grad.ok, "report": str(grad)}
        ok = rel.ok and grad.ok
        lines.append(f"relations: {rel}")
        lines.append(f"grading: {'consistent' if grad.ok else grad}")
    if args.character:
        ch = character(m)
        data["character"] = [{"nu": list(nu), "dim": d} for nu, d in ch.items()]
        if m.degrees is not None:
            gch = graded_character(m)
            data["graded_character"] = [
                {"nu": list(nu), "degrees": {str(k): v for k, v in poly.items()}} for nu, poly in gch.items()
            ]
        lines += [f"  {' '.join(map(str, nu))}: {d}" for nu, d in ch.items()]
    if args.dump:
        data["module"] = module_to_json(m)
    return Output(data, "\n".join(lines), ok)


def cmd_basic(cfg: Config, args) -> Output:
    from .basic_algebra import (
        algebra_biserial_check,
        algebra_to_json,
        build_basic,
        check_associativity,
        dim_consistency,
        gram_report,
        kronecker_check,
        quiver_dot,
    )
    from .linalg import format_rational

    alg = build_basic(cfg.ell)
    assoc = check_associativity(alg)
    bis = algebra_biserial_check(alg)
    kr = kronecker_check(alg)
    data: dict[str, Any] = {
        "ell": cfg.ell,
        "dim": alg.dim,
        "expected_dim": 4 * cfg.ell + 7,
        "associative": assoc is None,
        "special_biserial": bis.ok,
        "kronecker": {"ok": kr.ok, "delta_times_beta_alpha": kr.product},
        "algebra": algebra_to_json(alg),
    }
    ok = alg.dim == 4 * cfg.ell + 7 and assoc is None and bis.ok and kr.ok
    lines = [
        f"dim A = {alg.dim} (4l+7 = {4 * cfg.ell + 7})",
        f"associative: {assoc is None}; special biserial: {bis.ok}; Kronecker corner: {kr.ok}",
    ]
    if args.gram:
        g = gram_report(alg)
        data["gram"] = {
            "symmetric": g.symmetric,
            "nonsingular": g.nonsingular,
            "determinant": format_rational(g.determinant),
            "ok": g.ok,
        }
        ok = ok and g.ok
        lines.append(f"Gram: symmetric {g.symmetric}, det {format_rational(g.determinant)}")
    if args.consistency:
        c = dim_consistency(cfg.ell)
        data["consistency"] = {
            "simple_dims": list(c.simple_dims),
            "projective_dims": list(c.projective_dims),
            "total": c.total,
            "expected": c.expected,
            "ok": c.ok,
        }
        ok = ok and c.ok
        lines.append(f"sum dim P_i dim S_i = {c.total} (dim R(2 delta) = {c.expected})")
    return Output(data, "\n".join(lines), ok, quiver_dot(cfg.ell))


def cmd_ar(cfg: Config, args) -> Output:
    from . import ar
    from .strings import (
        enumerate_bands,
        enumerate_strings,
        iso_test,
        parse_walk,
        projective_summands,
        string_module,
        tau,
    )

    if cfg.ell < 2:
        raise UsageError("AR computations need --ell >= 2")
    q = ar.string_algebra(cfg.ell)
    if args.orbit is not None:
        if args.orbit != "v0gamma":
            raise UsageError("the only supported orbit start is v0gamma (B e_0 / B gamma)")
        rep = ar.orbit_report(cfg.ell, seed=cfg.seed)
        lines = [f"period {rep.period} (2l+1 = {2 * cfg.ell + 1})"]
        lines += [
            f"  tau^{k}: Be{q.target(s.arrow)}/B{s.arrow} = M({s.string})  middle M({s.middle})"
            for k, s in enumerate(rep.steps)
        ]
        return Output(rep.to_json(), "\n".join(lines), rep.ok, rep.dot())
    if args.tau is not None:
        try:
            w = parse_walk(q, args.tau)
            m = string_module(q, w)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        proj = projective_summands(m)
        t = tau(m, check_projective=False)
        res = iso_test(t, m, cfg.seed)
        data = {
            "ell": cfg.ell,
            "string": str(w),
            "dim_vector": list(m.dim_vector()),
            "projective_summands": proj,
            "tau": t.to_json(),
            "tau_dim_vector": list(t.dim_vector()),
            "tau_isomorphic_to_input": res.verdict,
        }
        text = f"M({w}) dims {list(m.dim_vector())} -> tau dims {list(t.dim_vector())}; tau M ~ M: {res.verdict}"
        if proj:
            text += f"\nwarning: projective summands at vertices {proj} are dropped by tau"
        return Output(data, text)
    if args.bands:
        p = args.prime
        fam = ar.band_family(cfg.ell, p)
        want = (2 ** p - 2) // p
        a, b = ar.band_words(cfg.ell)
        data = {
            "ell": cfg.ell,
            "prime": p,
            "a": str(a),
            "b": str(b),
            "classes": len(fam),
            "expected": want,
            "bands": [str(w) for w in fam],
        }
        return Output(data, f"{len(fam)} band classes for q={p} (expected {want})", len(fam) == want)
    if args.strings:
        ss = enumerate_strings(q, args.maxlen, threads=cfg.threads)
        bs = enumerate_bands(q, args.maxlen, threads=cfg.threads)
        data = {"ell": cfg.ell, "maxlen": args.maxlen, "strings": [str(s) for s in ss], "bands": [str(b) for b in bs]}
        return Output(data, f"{len(ss)} strings and {len(bs)} bands of length <= {args.maxlen}")
    raise UsageError("choose one of --orbit, --tau, --bands or --strings")


def cmd_crosscheck(cfg: Config, args) -> Output:
    from .walls import crosscheck

    rows = crosscheck(cfg.ell, args.maxheight)
    rows = [r for r in rows if r.strict_partitions or r.walls]
    data = {
        "ell": cfg.ell,
        "maxheight": args.maxheight,
        "rows": [{"beta": list(r.beta), "strict_partitions": r.strict_partitions, "walls": r.walls, "match": r.match} for r in rows],
        "mismatches": sum(1 for r in rows if not r.match),
    }
    lines = [f"{','.join(map(str, r.beta)):>12}  partitions {r.strict_partitions:>3}  walls {r.walls:>3}{'' if r.match else '  *'}" for r in rows]
    # reported, never asserted
    return Output(data, "\n".join(lines))


def cmd_verify_all(cfg: Config, args) -> Output:
    from .acceptance import run_all
    from .ar import orbit_report
    from .basic_algebra import algebra_biserial_check, build_basic, socle_annihilates_radical
    from .constructions import all_named_modules
    from .qha import check_grading, verify_relations

    results = run_all(threads=cfg.threads)
    extras = []
    ell = cfg.ell
    if ell >= 2:
        for name, m in all_named_modules(ell).items():
            for middle in (1, 3):
                rel = verify_relations(m, middle=middle)
                extras.append((f"ell={ell} {name}: relations with middle coefficient {middle}", rel.ok))
            extras.append((f"ell={ell} {name}: grading", check_grading(m).ok))
        alg = build_basic(ell)
        extras.append((f"ell={ell}: special biserial", algebra_biserial_check(alg).ok))
        extras.append((f"ell={ell}: socle annihilates the radical", socle_annihilates_radical(alg)))
        extras.append((f"ell={ell}: tau-orbit of B e_0 / B gamma", orbit_report(ell, seed=cfg.seed).ok))
    ok = all(r.passed for r in results) and all(v for _, v in extras)
    data = {
        "ell": ell,
        "criteria": [r.to_json() for r in results],
        "extras": [{"check": name, "passed": v} for name, v in extras],
        "ok": ok,
    }
    lines = [r.line() for r in results] + [f"[{'PASS' if v else 'FAIL'}] extra: {name}" for name, v in extras]
    return Output(data, "\n".join(lines), ok)


COMMANDS: dict[str, Callable[[Config, argparse.Namespace], Output]] = {
    "dim": cmd_dim,
    "tableaux": cmd_tableaux,
    "fock": cmd_fock,
    "walls": cmd_walls,
    "modules": cmd_modules,
    "basic": cmd_basic,
    "ar": cmd_ar,
    "crosscheck": cmd_crosscheck,
    "verify-all": cmd_verify_all,
}


# --- parser --------------------------------------------------------------------

def _common(suppress: bool) -> argparse.ArgumentParser:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "text"), default=d("json"), help="output format (default json)")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized isomorphism searches")
    p.add_argument("--threads", type=int, default=d(None), help="worker processes (fallback: QHK_THREADS)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qhk", description=__doc__.splitlines()[0], parents=[_common(False)])
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    def add(name: str, help: str, ell_required: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.add_argument("--ell", type=int, required=ell_required, help="rank l >= 1")
        return p

    p = add("dim", "dimension formulas")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--beta", help="coefficients k_0,...,k_l")
    g.add_argument("--n", type=int, help="total size")
    g.add_argument("--block", nargs=2, metavar=("NU", "NU2"), help="two residue sequences")

    p = add("tableaux", "standard shifted tableaux of a shape")
    p.add_argument("--shape", required=True, help="strict partition a,b,c")
    p.add_argument("--residues", action="store_true", help="include residue sequences")

    p = add("fock", "apply Chevalley operators on the Fock space")
    p.add_argument("--word", required=True, help='operator word, e.g. "f0 f1 e2" (rightmost acts first)')
    p.add_argument("--start", help="starting strict partition (default: vacuum)")

    p = add("walls", "reduced Young walls of weight Lambda0 - beta")
    p.add_argument("--beta", required=True, help="coefficients k_0,...,k_l")

    p = add("modules", "explicit modules")
    p.add_argument("--build", required=True, help="rdelta, L:i, Ltilde, Lell, S:i, Shat or M")
    p.add_argument("--verify", action="store_true", help="check every defining relation")
    p.add_argument("--character", action="store_true", help="print the (graded) character")
    p.add_argument("--middle", type=int, default=1, help="middle coefficient of Q_{l-1,l} (default 1)")
    p.add_argument("--dump", action="store_true", help="include the full module data")

    p = add("basic", "the basic algebra and its certificates")
    p.add_argument("--dot", action="store_true", help="print the quiver as DOT")
    p.add_argument("--gram", action="store_true", help="trace form Gram matrix report")
    p.add_argument("--consistency", action="store_true", help="Cartan consistency with dim R(2 delta)")

    p = add("ar", "strings, bands and Auslander-Reiten translates")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--orbit", metavar="START", help="tau-orbit; START is v0gamma")
    g.add_argument("--tau", metavar="STRING", help='tau of a string module, e.g. "beta2 alpha2"')
    g.add_argument("--bands", action="store_true", help="count band classes built from a and b")
    g.add_argument("--strings", action="store_true", help="enumerate strings and bands")
    p.add_argument("--prime", type=int, default=2, help="word length q for --bands")
    p.add_argument("--maxlen", type=int, default=4, help="maximal length for --strings")
    p.add_argument("--dot", action="store_true", help="print the orbit as DOT")

    p = add("crosscheck", "strict-partition counts against reduced wall counts")
    p.add_argument("--maxheight", type=int, default=4, help="largest height of beta")

    p = add("verify-all", "run the acceptance suite and extra checks", ell_required=False)
    return parser


def _emit(cfg: Config, out: Output, want_dot: bool) -> None:
    if want_dot:
        if out.dot is None:
            raise UsageError("this command has no graph to export")
        print(out.dot)
    elif cfg.fmt == "text":
        print(out.text)
    else:
        print(json.dumps(out.data, sort_keys=True, indent=2, default=str))


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ell = args.ell
        if ell is None and args.command == "verify-all":
            ell = 2
        if ell is not None and ell < 1:
            raise UsageError("--ell must be at least 1")
        cfg = Config(args.command, ell, args.format, args.seed, _threads(args.threads))
        if args.command == "ar" and args.dot and args.orbit is None:
            raise UsageError("--dot is only available with --orbit")
        out = COMMANDS[args.command](cfg, args)
        _emit(cfg, out, bool(getattr(args, "dot", False)))
    except UsageError as exc:
        print(f"qhk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"qhk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if out.ok else EXIT_CHECK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
