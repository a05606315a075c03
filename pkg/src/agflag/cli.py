"""Command-line front end: ``agflag <command> ...``.

Exit codes: 0 success or match, 1 mismatch, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import _kernel
from .curve import BUILTINS, CurveModel, builtin
from .errors import AgflagError, BudgetExceeded, UnknownCase, UnknownModel
from .flag import build_flag, flag_report
from .puncture import (DEFAULT_BUDGET, PairTable, SearchResult, dump_result, klein_ladder,
                       ladder_report, load_result, puncture, search_subsets,
                       table_row, hermitian_witnesses)
from .repro import CASES, repro
from .rmflag import count_dual_subsets, cube, span_weight_distribution
from .semigroup import (NumericalSemigroup, ideal_analyze, incl_equivalences, leaders,
                        max_sparse_from_leader, profile)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=list))
    else:
        print(text)


def _model(args) -> CurveModel:
    if args.model_config:
        return CurveModel.from_file(args.model_config)
    if not args.model:
        raise UnknownModel("--model or --model-config is required")
    return builtin(args.model)


def _columns(model: CurveModel, text: str | None):
    if not text:
        return None
    out = []
    for tok in text.split(";") if ";" in text else text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        out.append(int(tok) if tok.isdigit() and tok not in model.labels else tok)
    return out


# -- cache ---------------------------------------------------------------------

def cache_dir() -> Path:
    root = os.environ.get("AGFLAG_CACHE")
    return Path(root) if root else Path.home() / ".cache" / "agflag"


def _cache_key(model: CurveModel, s: int, policy: str, seed: int, trials: int) -> str:
    digest = hashlib.sha1(json.dumps(model.to_config(), sort_keys=True).encode()).hexdigest()[:12]
    extra = f"-seed{seed}-t{trials}" if policy == "random" else ""
    return f"{model.name}-{digest}-s{s}-{policy}{extra}.json"


def cached_search(model: CurveModel, s: int, policy: str, *, seed: int, trials: int,
                  budget: int, use_cache: bool = True) -> SearchResult:
    path = cache_dir() / _cache_key(model, s, policy, seed, trials)
    if use_cache and path.exists():
        try:
            return load_result(path.read_text())
        except (ValueError, KeyError):
            pass
    wit = hermitian_witnesses(model) if policy == "witnesses" else None
    res = search_subsets(model, s, policy, seed=seed, trials=trials, witnesses=wit, budget=budget)
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dump_result(res))
        except OSError:
            pass
    return res


# -- commands -------------------------------------------------------------------

def cmd_repro(args) -> int:
    cases = list(CASES) if args.case == "all" else [args.case]
    results = []
    for c in cases:
        kw = {"samples": args.samples, "seed": args.seed} if c == "rm5" else {}
        results.append(repro(c, **kw))
    ok = all(r.ok for r in results)
    _emit(args, [r.to_json() for r in results], "\n".join(r.to_text() for r in results))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_flag(args) -> int:
    model = _model(args)
    flag = build_flag(model, _columns(model, args.columns))
    rep = flag_report(flag)
    F = model.field
    lines = [f"model {model.name}  n={flag.n}  m={flag.m}  region {rep['region']}",
             f"W* = {list(flag.nongaps)}", flag.to_text(),
             f"isometry-dual: {rep['is_dual']}" + (f" ({rep['failure_reason']})" if rep["failure_reason"] else "")]
    if rep["v"]:
        lines.append("v = (" + ", ".join(F.format(x) for x in rep["v"]) + ")")
    if rep["product_matrix"]:
        from .curve import format_matrix
        lines.append("G diag(v) G^T =")
        lines.append(format_matrix(F, rep["product_matrix"]))
    if rep["violations"]:
        lines.append("violations: " + "; ".join(rep["violations"]))
    _emit(args, rep, "\n".join(lines))
    return EXIT_OK


def cmd_table(args) -> int:
    model = _model(args)
    table = PairTable(model.name, model.genus, args.max_n)
    status = EXIT_OK
    for n in range(1, min(args.max_n, model.N) + 1):
        try:
            res = cached_search(model, n, args.policy, seed=args.seed, trials=args.trials,
                                budget=args.budget, use_cache=not args.no_cache)
        except BudgetExceeded as exc:
            table.violations.append(f"row {n}: {exc}")
            status = EXIT_BUDGET
            continue
        table_row(table, n, res)
    _emit(args, table.to_json(), table.to_text()
          + ("\n" + "\n".join(table.violations) if table.violations else ""))
    return status


def cmd_search(args) -> int:
    model = _model(args)
    res = cached_search(model, args.size, args.policy, seed=args.seed, trials=args.trials,
                        budget=args.budget, use_cache=not args.no_cache)
    payload = res.to_json() | {"dual_subsets": [[model.labels[i] for i in s]
                                                for s in res.dual_subsets[: args.limit]]}
    text = (f"{model.name} s={args.size} policy={args.policy}: checked {res.checked}, "
            f"{len(res.dual_subsets)} dual, m values {sorted(res.m_values)}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_puncture(args) -> int:
    model = _model(args)
    parent = build_flag(model, _columns(model, args.parent))
    rep = puncture(parent, _columns(model, args.keep))
    payload = {
        "n": rep.parent.n, "s": rep.child.n, "W*": list(rep.parent.nongaps),
        "W'": list(rep.child_nongaps), "contained": rep.contained,
        "parent_dual": rep.parent_dual, "child_dual": rep.child_dual,
        "n-s": rep.difference, "n-s in W": rep.difference_in_semigroup,
        "theorem_applicable": rep.theorem_applicable,
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_MISMATCH if rep.violation else EXIT_OK


def cmd_ladder(args) -> int:
    flags = klein_ladder()
    rep = ladder_report(flags)
    lines = [f"D_{f.n}: W* = {list(f.nongaps)} dual={d}" for f, d in zip(flags, rep["dual"])]
    lines.append(f"length differences {rep['differences']}, in W: {rep['differences_in_semigroup']}")
    _emit(args, rep, "\n".join(lines))
    return EXIT_OK if all(rep["dual"]) and all(rep["differences_in_semigroup"]) else EXIT_MISMATCH


def cmd_rm(args) -> int:
    if args.rm_command == "weights":
        hist = span_weight_distribution(args.m)
        _emit(args, {"m": args.m, "weight_histogram": hist},
              " ".join(f"{w}^{c}" for w, c in hist.items()))
        return EXIT_OK
    res = count_dual_subsets(args.m, args.size, args.policy, budget=args.budget)
    payload = res.to_json(cube(args.m), with_subsets=args.subsets)
    text = (f"m={args.m} size={args.size} policy={args.policy}: {res.count} isometry-dual "
            f"(checked {res.checked}, rejected {res.rejected})")
    _emit(args, payload, text)
    return EXIT_OK


def _semigroup(args) -> NumericalSemigroup:
    if args.gens:
        return NumericalSemigroup.from_generators(int(x) for x in args.gens.split(",") if x.strip())
    gaps = args.gaps or ""
    return NumericalSemigroup.from_gaps(int(x) for x in gaps.split(",") if x.strip())


def cmd_sg(args) -> int:
    S = _semigroup(args)
    q = args.query
    if q == "genus":
        payload, text = {"genus": S.genus}, str(S.genus)
    elif q == "info":
        payload = {"gaps": list(S.gaps), "genus": S.genus, "conductor": S.conductor,
                   "frobenius": S.frobenius, "multiplicity": S.multiplicity,
                   "minimal_generators": list(S.minimal_generators)}
        text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    elif q == "profile":
        p = profile(S, args.value)
        payload = {"index": p.index, "value": p.value, "D": list(p.divisors), "G": p.gap_pairs}
        text = f"lambda_{p.index} = {p.value}  D = {set(p.divisors)}  G = {p.gap_pairs}"
    elif q == "leaders":
        ls = leaders(S, args.value)
        payload, text = {"leaders": ls}, " ".join(map(str, ls))
    elif q == "ideal":
        I = ideal_analyze(S, (int(x) for x in args.complement.split(",") if x.strip()))
        payload = {"complement": list(I.complement), "frobenius": I.frobenius, "bound": I.bound,
                   "max_sparse": I.is_max_sparse, "leader": I.leader}
        text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    elif q == "incl":
        a = max_sparse_from_leader(S, args.value)
        b = max_sparse_from_leader(S, args.other)
        rep = incl_equivalences(S, a, b)
        payload = {"statements": list(rep.values), "consistent": rep.consistent}
        text = f"{list(rep.values)} consistent={rep.consistent}"
    else:  # pragma: no cover - argparse restricts choices
        raise UnknownCase(q)
    _emit(args, payload, text)
    return EXIT_OK


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global options with suppressed defaults so that a
    # value given before the subcommand is not reset by it
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    g.add_argument("--seed", type=int, default=d(0))
    g.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET))
    g.add_argument("--threads", type=int, default=d(None), help="worker threads (speed only)")
    g.add_argument("--model-config", default=d(None), help="JSON curve-model file")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_options(suppress=True)
    p = argparse.ArgumentParser(prog="agflag", parents=[_global_options(suppress=False)],
                                description="Isometry-dual flags of evaluation codes.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("repro", parents=[common], help="recompute a printed example")
    r.add_argument("case", choices=list(CASES) + ["all"])
    r.add_argument("--samples", type=int, default=1_000_000, help="rm5 spot-check samples")
    r.set_defaults(func=cmd_repro)

    models = sorted(BUILTINS)
    f = sub.add_parser("flag", parents=[common], help="flag on a column subset")
    f.add_argument("--model", choices=models)
    f.add_argument("--columns", help="comma-separated labels or indices (';' if labels contain commas)")
    f.set_defaults(func=cmd_flag)

    t = sub.add_parser("table", parents=[common], help="admissible-pair table")
    t.add_argument("--model", choices=models)
    t.add_argument("--max-n", type=int, default=8)
    t.add_argument("--policy", choices=["exhaustive", "random", "witnesses"], default="exhaustive")
    t.add_argument("--trials", type=int, default=10_000)
    t.add_argument("--no-cache", action="store_true")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", parents=[common], help="dual subsets of one size")
    s.add_argument("--model", choices=models)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--policy", choices=["exhaustive", "random", "witnesses"], default="exhaustive")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--limit", type=int, default=20, help="subsets to print")
    s.add_argument("--no-cache", action="store_true")
    s.set_defaults(func=cmd_search)

    pu = sub.add_parser("puncture", parents=[common], help="puncture a flag")
    pu.add_argument("--model", choices=models)
    pu.add_argument("--parent", help="parent columns (default: all)")
    pu.add_argument("--keep", required=True, help="kept columns")
    pu.set_defaults(func=cmd_puncture)

    k = sub.add_parser("klein-ladder", parents=[common], help="nested dual flags on the Klein quartic")
    k.set_defaults(func=cmd_ladder)

    rm = sub.add_parser("rm", parents=[common], help="Reed-Muller type flags")
    rms = rm.add_subparsers(dest="rm_command", required=True)
    rc = rms.add_parser("count", parents=[common])
    rc.add_argument("--m", type=int, required=True)
    rc.add_argument("--size", type=int, required=True)
    rc.add_argument("--policy", choices=["exhaustive", "span"], default="exhaustive")
    rc.add_argument("--subsets", action="store_true", help="list the subsets")
    rw = rms.add_parser("weights", parents=[common])
    rw.add_argument("--m", type=int, required=True)
    rm.set_defaults(func=cmd_rm)

    g = sub.add_parser("sg", parents=[common], help="numerical semigroup queries")
    g.add_argument("--gaps", default=None, help="comma-separated gaps ('' for N0)")
    g.add_argument("--gens", default=None, help="comma-separated generators")
    gq = g.add_subparsers(dest="query", required=True)
    gq.add_parser("genus", parents=[common])
    gq.add_parser("info", parents=[common])
    gp = gq.add_parser("profile", parents=[common])
    gp.add_argument("value", type=int, help="index i of lambda_i")
    gl = gq.add_parser("leaders", parents=[common])
    gl.add_argument("value", type=int, help="upper bound")
    gi = gq.add_parser("ideal", parents=[common])
    gi.add_argument("complement", help="comma-separated S \\ I")
    gc = gq.add_parser("incl", parents=[common])
    gc.add_argument("value", type=int, help="index i of the first leader")
    gc.add_argument("other", type=int, help="index i' of the second leader")
    g.set_defaults(func=cmd_sg)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _kernel.set_threads(args.threads)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UnknownCase, UnknownModel) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AgflagError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
