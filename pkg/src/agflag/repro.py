"""Recompute printed reference objects and diff them against the fixtures."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import fixtures as fx
from .curve import builtin
from .errors import UnknownCase
from .flag import build_flag, isometry_dual, projective_scalar
from .gf import FieldSpec
from .puncture import klein_ladder, ladder_report
from .rmflag import (count_dual_subsets, cube, gram, group_by_pivots, group_by_rows,
                     random_spot_check, span_weight_distribution, subset_verdict)
from .semigroup import NumericalSemigroup


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CaseResult:
    case: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def to_text(self) -> str:
        lines = [f"{self.case}: {'PASS' if self.ok else 'FAIL'} ({self.seconds:.2f}s)"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.ok else 'XX'}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"case": self.case, "pass": self.ok, "seconds": round(self.seconds, 3),
                "checks": [{"name": c.name, "pass": c.ok, "detail": c.detail} for c in self.checks]}


def parse_matrix(F: FieldSpec, text: str) -> list[list[int]]:
    return [[F.parse(t) for t in line.split()] for line in text.strip().splitlines() if line.strip()]


def parse_vector(F: FieldSpec, text: str) -> list[int]:
    return [F.parse(t) for t in text.split()]


def matrix_diff(F: FieldSpec, got, want) -> list[str]:
    if len(got) != len(want) or any(len(a) != len(b) for a, b in zip(got, want)):
        return [f"shape {len(got)}x{len(got[0]) if got else 0} vs {len(want)}x{len(want[0]) if want else 0}"]
    return [f"({i + 1},{j + 1}) computed {F.format(a)} printed {F.format(b)}"
            for i, (ra, rb) in enumerate(zip(got, want)) for j, (a, b) in enumerate(zip(ra, rb)) if a != b]


def product_scalar(F: FieldSpec, product, printed) -> int | None:
    """The c in F* with printed = c * product, i.e. the product for the vector c * v."""
    for c in range(1, F.q):
        if all(F.mul(c, a) == b for ra, rb in zip(product, printed) for a, b in zip(ra, rb)):
            return c
    return None


def _matrix_case(res: CaseResult, fix: fx.MatrixFixture) -> None:
    model = builtin(fix.model)
    F = model.field
    flag = build_flag(model, list(fix.columns))
    res.add("column order", flag.columns == fix.columns, f"{list(flag.columns)}")
    if fix.nongaps:
        res.add("geometric nongaps W*", flag.nongaps == fix.nongaps,
                f"computed {list(flag.nongaps)} printed {list(fix.nongaps)}")
    if fix.G:
        diff = matrix_diff(F, [list(r) for r in flag.G], parse_matrix(F, fix.G))
        res.add("generator matrix", not diff, "; ".join(diff[:6]))
    verdict = isometry_dual(flag)
    res.add("isometry-dual", verdict.is_dual, verdict.failure_reason or "")
    if fix.v:
        printed = parse_vector(F, fix.v)
        c = projective_scalar(F, verdict.candidate, printed)
        res.add("dualizing vector (projective)", c is not None,
                f"computed {[F.format(x) for x in verdict.candidate]} printed "
                f"{[F.format(x) for x in printed]}" + (f", scalar {F.format(c)}" if c is not None else ""))
    if fix.product and verdict.product is not None:
        want = parse_matrix(F, fix.product)
        c = product_scalar(F, verdict.product, want)
        if c is not None:
            res.add("product matrix", True, f"equals G diag(c v) G^T with c = {F.format(c)}")
        else:
            diff = matrix_diff(F, [list(r) for r in verdict.product], want)
            res.add("product matrix", False,
                    "no scalar multiple of the computed product matches; computed vs printed: "
                    + "; ".join(diff[:6]))


def _case_herm9_full(res: CaseResult) -> None:
    model = builtin("hermitian_q3")
    flag = build_flag(model)
    W = set(flag.nongaps)
    non = tuple(a for a in range(flag.m + 1) if a not in W)
    want = fx.HERM9_FULL.notes["non_nongaps"]
    res.add("geometric non-nongaps", non == want, f"computed {list(non)} printed {list(want)}")
    v = isometry_dual(flag)
    res.add("isometry-dual", v.is_dual, v.failure_reason or "")
    res.add("dualizing vector is all ones", v.is_dual and all(x == 1 for x in v.candidate))


def _case_hyper2(res: CaseResult) -> None:
    model = builtin("hyperelliptic2_f2")
    F = model.field
    fix = fx.HYPER2_EVAL
    table = [[1] * model.N] + [list(r) for r in model.values]
    diff = matrix_diff(F, table, parse_matrix(F, fix.G))
    res.add("evaluation table of 1, u, v, w, x", not diff, "; ".join(diff))
    _matrix_case(res, fx.HYPER2_P13)


def _case_ladder(res: CaseResult) -> None:
    flags = klein_ladder()
    rep = ladder_report(flags)
    res.add("eight flags", len(flags) == 8, f"sizes {rep['sizes']}")
    res.add("all flags isometry-dual", all(rep["dual"]), f"{rep['dual']}")
    res.add("D_23 nongaps", tuple(flags[-1].nongaps) == fx.KLEIN_D23_NONGAPS,
            f"computed {list(flags[-1].nongaps)}")
    W = NumericalSemigroup.from_generators(fx.KLEIN_SEMIGROUP_GENERATORS)
    res.add("length differences in <3,5,7>", all(d in W for d in rep["differences"]),
            f"{rep['differences']}")
    res.add("W' contained in W* at every step", all(rep["contained"]))
    for fix, f in ((fx.KLEIN_D2, flags[0]), (fx.KLEIN_D5, flags[1]), (fx.KLEIN_D8, flags[2])):
        res.add(f"{fix.columns[-1]} flag nongaps", f.nongaps == fix.nongaps, f"{list(f.nongaps)}")


def _case_rm3(res: CaseResult) -> None:
    c = cube(3)
    F = c.field
    res.add("point order", tuple(c.points) == fx.RM3_POINTS, f"{c.points}")
    diff = matrix_diff(F, [list(r) for r in c.A], parse_matrix(F, fx.RM3_A))
    res.add("matrix A", not diff, "; ".join(diff[:6]))
    diff = matrix_diff(F, gram(c), parse_matrix(F, fx.RM3_AAT))
    res.add("A A^T", not diff, "; ".join(diff[:6]))
    cnt = count_dual_subsets(3, 4, "exhaustive")
    res.add("dual subsets of size 4", cnt.count == fx.RM_COUNTS[3][1], f"{cnt.count} of {cnt.checked}")
    hist = span_weight_distribution(3)
    res.add("span weight histogram", hist == fx.RM_HISTOGRAMS[3], f"{hist}")
    groups = group_by_rows(3, cnt.subsets)
    res.add("groups by selected rows", groups == fx.RM3_ROW_GROUPS, f"{groups}")
    idx = {p: i for i, p in enumerate(c.points)}
    a, b = (subset_verdict(c, [idx[p] for p in s]) for s in fx.RM3_SHARED_MINOR)
    res.add("two subsets share minors", a.flag.G == b.flag.G and a.is_dual and b.is_dual)


def _case_rm4(res: CaseResult) -> None:
    ex = count_dual_subsets(4, 8, "exhaustive")
    sp = count_dual_subsets(4, 8, "span")
    res.add("dual subsets of size 8 (exhaustive)", ex.count == fx.RM_COUNTS[4][1], f"{ex.count} of {ex.checked}")
    res.add("span policy agrees", sp.subsets == ex.subsets, f"span {sp.count}, rejected {sp.rejected}")
    hist = span_weight_distribution(4)
    res.add("span weight histogram", hist == fx.RM_HISTOGRAMS[4], f"{hist}")
    groups = group_by_pivots(4, ex.subsets)
    res.add("pivot-product groups", groups == fx.RM4_PIVOT_GROUPS, f"{groups}")


def _case_rm5(res: CaseResult, samples: int = 1_000_000, seed: int = 0) -> None:
    sp = count_dual_subsets(5, 16, "span")
    hist = span_weight_distribution(5)
    res.add("span weight histogram", hist == fx.RM_HISTOGRAMS[5], f"{hist}")
    cands = hist.get(16, 0)
    res.add("dual subsets of size 16 (span, verified)", sp.count == fx.RM_COUNTS[5][1],
            f"{sp.count} verified of {cands} weight-16 span vectors ({sp.rejected} rejected)")
    c = cube(5)
    from .rmflag import designated_rows, span_vectors
    known = [tuple(i for i, x in enumerate(v) if x)
             for v in span_vectors(c, designated_rows(5)) if sum(v) == 16]
    seen, stray = random_spot_check(5, 16, known, samples=samples, seed=seed)
    res.add(f"random spot-check ({samples} samples)", not stray,
            f"{seen} dual samples, {len(stray)} outside the span candidates")


CASES: dict[str, Callable[[CaseResult], None]] = {
    "rs8": lambda r: _matrix_case(r, fx.RS8),
    "herm4-full": lambda r: _matrix_case(r, fx.HERM4_FULL),
    "herm4-reduced3": lambda r: _matrix_case(r, fx.HERM4_REDUCED3),
    "herm9-full": _case_herm9_full,
    "g1-n3": lambda r: _matrix_case(r, fx.G1_N3),
    "g1-n2": lambda r: _matrix_case(r, fx.G1_N2),
    "herm9-m11": lambda r: _matrix_case(r, fx.HERM9_M11),
    "herm9-m12": lambda r: _matrix_case(r, fx.HERM9_M12),
    "hyper2-f2": _case_hyper2,
    "klein-d2": lambda r: _matrix_case(r, fx.KLEIN_D2),
    "klein-d5": lambda r: _matrix_case(r, fx.KLEIN_D5),
    "klein-d8": lambda r: _matrix_case(r, fx.KLEIN_D8),
    "klein-ladder": _case_ladder,
    "rm3": _case_rm3,
    "rm4": _case_rm4,
    "rm5": _case_rm5,
}


def repro(case: str, **kwargs) -> CaseResult:
    if case not in CASES:
        raise UnknownCase(f"unknown repro case {case!r}; known: {', '.join(CASES)}")
    res = CaseResult(case)
    t = time.perf_counter()
    if kwargs and case == "rm5":
        _case_rm5(res, **kwargs)
    else:
        CASES[case](res)
    res.seconds = time.perf_counter() - t
    return res

