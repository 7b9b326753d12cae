"""Command-line interface: ``qsheets <subcommand> [options]``.

Every subcommand builds a report with a list of checks (PASS, FAIL or SKIP)
and a result payload.  A short table goes to standard output; ``--output``
writes the JSON report and ``--json`` prints it instead of the table.

Exit codes: 0 when no check fails, 1 when some check fails, 2 for usage
errors.  ``--rank`` is the Lie rank for the algebra and module commands and
the matrix size n of SL_n for the class commands (sheets, induce, jordan,
ledger).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import __version__
from .classes import (
    ClassDatum,
    LeviComposition,
    class_dim,
    conjecture_ledger,
    enumerate_sheets,
    enumerate_unipotent_classes,
    induction_presentations,
    is_isolated,
    is_rigid,
    jordan_class,
    ls_induce,
    parse_class,
    parse_partition,
    pattern_class,
    sheet_of,
    _multiset_partitions,
)
from .cyclo import CycNumber, conductor_cap, parse
from .roots import beta_sequence, build_root_system, levi, longest_word_with_prefix
from .suite import Check, _check, _closure_oracle_sheet_count, _jsonable, run_all

THREADS_ENV = "QSHEETS_THREADS"

DEFAULTS = {
    "ell": 3,
    "seed": 0,
    "threads": None,
    "conductor_cap": None,
    "output": None,
    "max_rank": 3,
    "max_dim": 250,
    "type": "A",
    "rank": None,
    "levi": "",
    "unipotent": "trivial",
    "cls": None,
    "z": None,
    "f": "1",
    "k": "8",
    "json": False,
}


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=int, help="order of the root of unity (odd, >= 3)")
    common.add_argument("--seed", type=int, help="seed for every randomized choice")
    common.add_argument("--threads", type=int, help=f"worker processes (default ${THREADS_ENV} or 1)")
    common.add_argument("--conductor-cap", dest="conductor_cap", type=int,
                        help="largest cyclotomic conductor allowed (default 240 * ell)")
    common.add_argument("--output", help="write the JSON report to this path")
    common.add_argument("--config", help="JSON file with default option values")
    common.add_argument("--json", action="store_true", default=None, help="print the JSON report")

    ap = argparse.ArgumentParser(prog="qsheets", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("roots", "positive roots and the convex order of a reduced word")
    p.add_argument("--type", help="Cartan type (A, B, C, D, G)")
    p.add_argument("--rank", type=int, help="Lie rank")
    p.add_argument("--levi", help="simple roots of the Levi prefix, 1-based, comma separated")

    p = add("sheets", "sheets of SL_n")
    p.add_argument("--rank", type=int, help="n of SL_n")

    p = add("induce", "Lusztig-Spaltenstein induction from a block Levi")
    p.add_argument("--rank", type=int, help="n of SL_n")
    p.add_argument("--levi", help="block sizes, e.g. 2,1")
    p.add_argument("--unipotent", help="'trivial' or one partition per block separated by ';'")

    for name, text in (("jordan", "Jordan class and sheet of a class"),
                       ("ledger", "conjecture-evidence status of classes")):
        p = add(name, text)
        p.add_argument("--rank", type=int, help="n of SL_n")
        p.add_argument("--class", dest="cls", help="class as 'tag:partition ...', e.g. '1:21' or 'a:2 b:1'")

    p = add("algebra", "defining relations, convex order and Z0 check")
    p.add_argument("--rank", type=int, help="Lie rank (1..3)")
    p.add_argument("--levi", help="Levi simple roots (1-based) used as word prefix")

    for name, text in (("induce-module", "parabolically induced module with checks"),
                       ("dckp", "divisibility check for an induced module"),
                       ("bijection-demo", "twist-and-reinduce pipeline")):
        p = add(name, text)
        p.add_argument("--rank", type=int, help="Lie rank (1..3)")
        p.add_argument("--levi", help="Levi simple roots (1-based)")
        p.add_argument("--max-dim", dest="max_dim", type=int, help="refuse larger modules")
        if name == "bijection-demo":
            p.add_argument("--z", help="diagonal entries of z, comma separated")

    p = add("gio-probe", "rank-1 probe of induced irreducibles")
    p.add_argument("--f", help="chi(F^ell)")
    p.add_argument("--k", help="chi(K_omega^ell)")

    p = add("verify-all", "run the acceptance suite")
    p.add_argument("--max-rank", dest="max_rank", type=int, help="largest rank for the center check")
    return ap


def _resolve(ns: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if ns.config:
        try:
            with open(ns.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}")
        for k, v in cfg.items():
            key = k.replace("-", "_")
            if key == "class":
                key = "cls"
            if key not in opts:
                raise UsageError(f"unknown config key {k!r}")
            opts[key] = v
    for k, v in vars(ns).items():
        if v is not None and k != "config":
            opts[k] = v
    if opts["threads"] is None:
        env = os.environ.get(THREADS_ENV)
        try:
            opts["threads"] = int(env) if env else 1
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer")
    if opts["threads"] < 1:
        raise UsageError("thread count must be >= 1")
    ell = opts["ell"]
    if ell < 3 or ell % 2 == 0:
        raise UsageError(f"--ell must be odd and >= 3, got {ell}")
    if opts["conductor_cap"] is None:
        opts["conductor_cap"] = 240 * ell
    return opts


def _int_list(text: str, one_based: bool = False) -> list[int]:
    text = (text or "").strip()
    if not text:
        return []
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
    return [v - 1 for v in vals] if one_based else vals


def _need_rank(opts, lo, hi, what="--rank"):
    r = opts["rank"]
    if r is None:
        raise UsageError(f"{what} is required")
    if not lo <= r <= hi:
        raise UsageError(f"{what} must be between {lo} and {hi}")
    return r


def _class_arg(opts, n: int) -> ClassDatum:
    try:
        c = parse_class(opts["cls"])
    except ValueError as exc:
        raise UsageError(str(exc))
    if c.n != n:
        raise UsageError(f"class {c} is not a class of SL{n}")
    return c


# ---------------------------------------------------------------------------
# class geometry commands
# ---------------------------------------------------------------------------

def _cmd_roots(opts):
    kind = opts["type"]
    rank = _need_rank(opts, 1, 8)
    try:
        rs = build_root_system(kind, rank)
        lv = levi(rs, _int_list(opts["levi"], one_based=True))
    except ValueError as exc:
        raise UsageError(str(exc))
    word = longest_word_with_prefix(rs, lv)
    betas = beta_sequence(rs, word)
    checks = [
        _check("reduced word has length |Phi+|", len(word) == rs.N, rs.N, len(word)),
        _check("convex order enumerates Phi+", sorted(betas) == sorted(rs.positive_roots), rs.N, len(set(betas))),
        _check("Levi roots form a prefix", all(lv.contains_root(b) for b in betas[:lv.N_L]), lv.N_L, lv.N_L),
    ]
    result = {
        "type": rs.label,
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": [list(b) for b in rs.positive_roots],
        "reduced_word": [i + 1 for i in word.letters],
        "betas": [list(b) for b in betas],
        "levi": sorted(i + 1 for i in lv.simple),
    }
    table = [f"{rs.label}: |Phi+| = {rs.N}", f"w0 = {word}"]
    table += [f"  beta_{r + 1} = {b}" for r, b in enumerate(betas)]
    return result, checks, table


def _sheet_json(s):
    return {"levi": list(s.levi.parts), "component": s.component, "dim": s.dim,
            "dense_jordan_dim": s.dense.dim}


def _cmd_sheets(opts):
    n = _need_rank(opts, 1, 7)
    sheets = enumerate_sheets(n)
    checks = []
    if n <= 5:
        count, dims = _closure_oracle_sheet_count(n)
        checks.append(_check("sheet count matches Jordan-class closure oracle", count == len(sheets), count, len(sheets)))
        checks.append(_check("sheet dimensions match oracle", dims == sorted(s.dim for s in sheets),
                             dims, sorted(s.dim for s in sheets)))
    else:
        checks.append(Check("sheet count matches Jordan-class closure oracle", "SKIP", None, None, "oracle run for n <= 5"))
    table = [f"SL{n}: {len(sheets)} sheets"] + [f"  {s}" for s in sheets]
    return {"n": n, "count": len(sheets), "sheets": [_sheet_json(s) for s in sheets]}, checks, table


def _cmd_induce(opts):
    n = _need_rank(opts, 1, 12)
    parts = _int_list(opts["levi"]) or [1] * n
    try:
        lvc = LeviComposition(tuple(parts))
    except ValueError as exc:
        raise UsageError(str(exc))
    if lvc.n != n:
        raise UsageError(f"Levi {lvc} is not a Levi of SL{n}")
    u = (opts["unipotent"] or "trivial").strip()
    if u == "trivial":
        pts = [(1,) * b for b in parts]
    else:
        try:
            pts = [parse_partition(x) for x in u.split(";")]
        except ValueError as exc:
            raise UsageError(str(exc))
        if len(pts) != len(parts) or any(sum(q) != b for q, b in zip(pts, parts)):
            raise UsageError("need one partition of each block size")
    lc = tuple(((1, q),) for q in pts)
    c = ls_induce(lvc, lc)
    orbit_l = sum(class_dim(ClassDatum.from_blocks([(1, q)])) for q in pts)
    expected = (n * n - 1) - lvc.dim + orbit_l
    checks = [_check("dim Ind = dim G - dim L + dim O^L", class_dim(c) == expected, expected, class_dim(c))]
    result = {
        "levi": parts,
        "levi_class": [list(q) for q in pts],
        "induced": str(c),
        "partition": list(c.unipotent[0]),
        "dim": class_dim(c),
    }
    return result, checks, [f"Ind_{lvc}^SL{n} {[list(q) for q in pts]} = {c}, dim {class_dim(c)}"]


def _cmd_jordan(opts):
    n = _need_rank(opts, 1, 7)
    if not opts["cls"]:
        raise UsageError("--class is required")
    c = _class_arg(opts, n)
    j = jordan_class(c)
    s = sheet_of(c)
    pres = induction_presentations(c)
    proper = [p for p in pres if len(p[0].parts) > 1]
    checks = [
        _check("class dimension is even", class_dim(c) % 2 == 0, "even", class_dim(c)),
        _check("rigid <=> no proper-Levi presentation", is_rigid(c) == (not proper), is_rigid(c), len(proper)),
        _check("class lies in its sheet", s.dim >= class_dim(c), f">= {class_dim(c)}", s.dim),
    ]
    result = {
        "class": str(c),
        "class_dim": class_dim(c),
        "isolated": is_isolated(c),
        "rigid": is_rigid(c),
        "jordan": {"levi": list(j.levi.parts), "pattern": [[m, list(p)] for m, p in j.pattern],
                   "component": j.component, "dim": j.dim},
        "sheet": _sheet_json(s),
        "presentations": [{"levi": list(lv.parts), "class": str(lc)} for lv, lc in pres],
    }
    table = [f"{c}: dim {class_dim(c)}, Jordan class dim {j.dim}, sheet {s}",
             f"  {len(pres)} induction presentations ({len(proper)} from proper Levis)"]
    return result, checks, table


def _cmd_ledger(opts):
    n = _need_rank(opts, 1, 7)
    if opts["cls"]:
        classes = [_class_arg(opts, n)]
    else:
        seen, classes = set(), []
        for c in enumerate_unipotent_classes(n) + [pattern_class([p for _, p in pat]) for pat in _multiset_partitions(n)]:
            if c.canonical() not in seen:
                seen.add(c.canonical())
                classes.append(c)
    rows = [{"class": str(c), "dim": class_dim(c), "evidence": conjecture_ledger(c).value} for c in classes]
    checks = [_check("all class dimensions even", all(r["dim"] % 2 == 0 for r in rows), True,
                     [r["class"] for r in rows if r["dim"] % 2])]
    table = [f"  {r['class']:<28} dim {r['dim']:>3}  {r['evidence']}" for r in rows]
    return {"n": n, "classes": rows}, checks, table


# ---------------------------------------------------------------------------
# algebra and module commands
# ---------------------------------------------------------------------------

def _cmd_algebra(opts):
    from .uqe import build_algebra, z0_check

    rank = _need_rank(opts, 1, 3)
    try:
        p = build_algebra(rank, opts["ell"], tuple(_int_list(opts["levi"], one_based=True)))
    except ValueError as exc:
        raise UsageError(str(exc))
    checks = []
    rels = []
    for name, x in p.defining_relations():
        rels.append({"relation": name, "normal_form_zero": x.is_zero()})
        checks.append(_check(f"relation {name}", x.is_zero(), 0, str(x) if x else 0))
    z0 = z0_check(p)
    for r in z0:
        checks.append(_check(f"central {r['element']}", r["status"] == "PASS", [], r["noncommuting"]))
    result = {"presentation": _jsonable(p.describe()), "relations": rels, "z0": z0}
    table = [f"U_eps(A{rank}) at ell = {p.ell}, word {p.word}",
             f"  {len(rels)} relations, {len(z0)} Z0 generators"]
    return result, checks, table


def _default_induced(opts):
    """Inducing data chosen from the seed: torus character for L = T,
    a baby Verma for a rank-1 Levi, a Cartan character otherwise."""
    from .reps import levi_baby_verma, one_dim_module, torus_module
    from .uqe import CentralCharacter, build_algebra

    rank = _need_rank(opts, 1, 3)
    simple = tuple(_int_list(opts["levi"], one_based=True))
    ell = opts["ell"]
    try:
        p = build_algebra(rank, ell, simple)
    except ValueError as exc:
        raise UsageError(str(exc))
    lv = p.levi
    rng = random.Random(opts["seed"])
    mu = [rng.choice([1, 2, 3, -1, -2]) for _ in range(rank)]
    if not simple:
        w = torus_module(p, mu)
    elif len(simple) == 1:
        w = levi_baby_verma(p, simple[0], mu, rng.choice([0, 1, 2, -1]))
    else:
        w = one_dim_module(p, lv, [1] * (rank + 1))
    dim = ell ** (p.N - lv.N_L) * w.dim
    if dim > opts["max_dim"]:
        raise UsageError(f"induced module would have dimension {dim} > --max-dim {opts['max_dim']}")
    chi_w = w.character()
    f = list(chi_w.f_values) + [rng.choice([0, 1, 2, -1]) for _ in range(p.N - lv.N_L)]
    chi = CentralCharacter.for_presentation(p, f_values=f, k_values=chi_w.k_values)
    return p, lv, w, chi


def _cmd_induce_module(opts):
    from .reps import class_of_character, graded_top, parabolic_induce, verify_module

    p, lv, w, chi = _default_induced(opts)
    v = parabolic_induce(w, lv, chi)
    idx = v.provenance["index"]
    rep = verify_module(v)
    top = graded_top(v)
    same_top = all(
        (x == y).all() for (_, x), (_, y) in zip(top.generators(), w.generators())
    )
    checks = [
        _check("frame size = l^(N - N_L) dim W", idx.size == idx.expected_size, idx.expected_size, idx.size),
        _check("relations", rep["passed"], [], rep["failures"]),
        _check("derived character = chi", rep["character"] == chi, chi.to_json(),
               rep["character"].to_json() if rep["character"] else None),
        _check("graded top = W", same_top, True, same_top),
    ]
    cls = class_of_character(p, chi)
    result = {"levi": sorted(i + 1 for i in lv.simple), "dim_W": w.dim, "dim": v.dim,
              "character": chi.to_json(), "class": str(cls), "class_dim": class_dim(cls)}
    return result, checks, [f"Ind from Levi {result['levi']}: dim W = {w.dim}, dim V = {v.dim}, class {cls}"]


def _cmd_dckp(opts):
    from .reps import class_of_character, dckp_check, parabolic_induce

    p, lv, w, chi = _default_induced(opts)
    v = parabolic_induce(w, lv, chi)
    cls = class_of_character(p, chi)
    need = p.ell ** (class_dim(cls) // 2)
    ok = dckp_check(v, cls)
    checks = [_check("l^(dim O/2) divides dim V", ok, f"{need} | dim V", v.dim)]
    result = {"dim": v.dim, "class": str(cls), "class_dim": class_dim(cls), "divisor": need,
              "character": chi.to_json(), "holds": ok}
    return result, checks, [f"dim V = {v.dim}, class {cls} of dim {class_dim(cls)}: {need} | {v.dim} is {ok}"]


def _cmd_bijection(opts):
    from .reps import jordan_bijection, parabolic_induce

    p, lv, w, chi = _default_induced(opts)
    v = parabolic_induce(w, lv, chi)
    n = p.rank + 1
    if opts["z"]:
        try:
            z = [parse(x.strip()) for x in opts["z"].split(",")]
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        # 2^(2 l e_b) on block b with sum n_b e_b = 0: exact 2l-th roots
        blocks = LeviComposition.from_simple_roots(n, lv.simple).parts
        e = [0] * len(blocks)
        if len(blocks) > 1:
            e[0], e[-1] = blocks[-1], -blocks[0]
        z = [CycNumber.rational(2) ** (2 * p.ell * eb) for eb, b in zip(e, blocks) for _ in range(b)]
    checks, pairs = [], []
    for label, zz in (("z", z), ("z = 1", [1] * n)):
        try:
            recs = jordan_bijection(chi, zz, [v])
        except (ValueError, ArithmeticError) as exc:
            raise UsageError(f"z = {[str(x) for x in zz]}: {exc}")
        for rec in recs:
            checks.append(_check(f"{label}: dimension preserved", rec["dim_preserved"], rec["dim"], rec["dim_twisted"]))
            checks.append(_check(f"{label}: relations", rec["relations_pass"], True, rec["relations_pass"]))
            checks.append(_check(f"{label}: character chi chi_z", rec["character_matches"], True, rec["character_matches"]))
            if label == "z = 1":
                checks.append(_check("z = 1: identical matrices", rec["identical"], True, rec["identical"]))
            pairs.append({"z": [str(CycNumber.rational(1) * x) for x in zz], "dim": rec["dim"],
                          "dim_twisted": rec["dim_twisted"], "character": rec["character"].to_json()})
    return {"pairs": pairs}, checks, [f"z = {p_['z']}: {p_['dim']} -> {p_['dim_twisted']}" for p_ in pairs]


def _cmd_gio(opts):
    from .reps import conjecture_gio_probe
    from .uqe import CentralCharacter, build_algebra

    p = build_algebra(1, opts["ell"])
    try:
        f, k = parse(str(opts["f"])), parse(str(opts["k"]))
        chi = CentralCharacter.for_presentation(p, f_values=[f], k_values=[k])
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = conjecture_gio_probe(p, chi)
    checks = [_check("no module violates the induction statement", not rep["violations"], [], rep["violations"])]
    table = [f"class {rep['class']} (dim {rep['class_dim']}), induced from T: {rep['induced_from_torus']}"]
    table += [f"  mu={r['mu']}: dim {r['dim']}, {r['status']}" for r in rep["modules"]]
    return rep, checks, table


def _cmd_verify_all(opts):
    results = run_all(opts["ell"], opts["seed"], opts["max_rank"], opts["threads"])
    checks = []
    for r in results:
        for c in r.checks:
            checks.append(Check(f"criterion {r.number}: {c.name}", c.status, c.expected, c.actual, c.anchor))
    result = {"criteria": [{"criterion": r.number, "title": r.title, "status": "PASS" if r.passed else "FAIL"}
                           for r in results]}
    return result, checks, [r.line() for r in results]


COMMANDS = {
    "roots": _cmd_roots,
    "sheets": _cmd_sheets,
    "induce": _cmd_induce,
    "jordan": _cmd_jordan,
    "ledger": _cmd_ledger,
    "algebra": _cmd_algebra,
    "induce-module": _cmd_induce_module,
    "bijection-demo": _cmd_bijection,
    "dckp": _cmd_dckp,
    "gio-probe": _cmd_gio,
    "verify-all": _cmd_verify_all,
}


def run(argv=None, stdout=None) -> tuple[dict, int]:
    """Run one subcommand; returns (report, exit code)."""
    out = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return {"command": argv, "error": "usage"}, code
    t0 = time.perf_counter()
    try:
        opts = _resolve(ns)
        with conductor_cap(opts["conductor_cap"]):
            result, checks, table = COMMANDS[ns.command](opts)
    except UsageError as exc:
        print(f"qsheets {ns.command}: error: {exc}", file=sys.stderr)
        return {"command": argv, "error": str(exc)}, 2
    checks = sorted(checks, key=lambda c: c.name)
    params = {k: v for k, v in opts.items() if k not in ("output", "json", "threads")}
    report = {
        "command": ns.command,
        "argv": argv,
        "parameters": _jsonable(params),
        "checks": [c.to_json() for c in checks],
        "result": _jsonable(result),
        "wall_time": round(time.perf_counter() - t0, 3),
    }
    code = 1 if any(c.status == "FAIL" for c in checks) else 0
    if opts["output"]:
        with open(opts["output"], "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if opts["json"]:
        print(json.dumps(report, indent=2, sort_keys=True), file=out)
    else:
        for line in table:
            print(line, file=out)
        n_fail = sum(c.status == "FAIL" for c in checks)
        for c in checks:
            if c.status != "PASS":
                print(f"{c.status}  {c.name}: expected {c.expected}, got {c.actual}", file=out)
        print(f"{len(checks) - n_fail}/{len(checks)} checks passed", file=out)
    return report, code


def main(argv=None) -> int:
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
