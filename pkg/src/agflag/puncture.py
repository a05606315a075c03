"""Punctured flags, subset searches and admissible-pair tables.

A search evaluates the greedy flag of every chosen s-subset of a model's
points and records which ones are isometry-dual. Large batches go through
the compiled kernel in :mod:`agflag._kernel`; single flags go through
:mod:`agflag.flag`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _kernel
from .curve import CurveModel, builtin
from .errors import BudgetExceeded, EmptySubset
from .flag import CompleteFlag, build_flag, in_dual_range, isometry_dual

DEFAULT_BUDGET = 5_000_000
POLICIES = ("exhaustive", "random", "witnesses")


# -- puncturing -------------------------------------------------------------

@dataclass(frozen=True)
class PunctureReport:
    parent: CompleteFlag
    child: CompleteFlag
    child_nongaps: tuple[int, ...]
    contained: bool            # W' subset of W*
    parent_dual: bool
    child_dual: bool
    difference: int            # n - s
    difference_in_semigroup: bool
    theorem_applicable: bool   # n >= 2g + 2 and s >= 2g + 2

    @property
    def violation(self) -> bool:
        """Both flags dual in the applicable range, yet n - s is a gap."""
        return (self.theorem_applicable and self.parent_dual and self.child_dual
                and not self.difference_in_semigroup)


def puncture(parent: CompleteFlag, keep: Iterable[str | int]) -> PunctureReport:
    keep = list(keep)
    if not keep:
        raise EmptySubset("puncturing needs at least one kept point")
    pos = {c: i for i, c in enumerate(parent.columns)}
    cols = []
    for c in keep:
        label = parent.columns[c] if isinstance(c, int) else c
        if label not in pos:
            raise ValueError(f"{label!r} is not a column of the parent flag")
        cols.append(label)
    source = parent.source
    if source is None:
        source = builtin(parent.model)
    child = build_flag(source, cols)
    g = parent.genus
    n, s = parent.n, child.n
    d = n - s
    S = parent.semigroup
    return PunctureReport(
        parent, child, child.nongaps,
        set(child.nongaps) <= set(parent.nongaps),
        isometry_dual(parent).is_dual,
        isometry_dual(child).is_dual,
        d,
        d in S if S is not None else d == 0,
        n >= 2 * g + 2 and s >= 2 * g + 2,
    )


# -- subset searches ----------------------------------------------------------

@dataclass
class SearchResult:
    model: str
    size: int
    policy: str
    checked: int = 0
    dual_subsets: list[tuple[int, ...]] = field(default_factory=list)
    dual_m: list[int] = field(default_factory=list)
    m_values: set[int] = field(default_factory=set)     # m of dual flags
    violations: list[str] = field(default_factory=list)
    complete: bool = False                              # every s-subset was checked

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "size": self.size,
            "policy": self.policy,
            "checked": self.checked,
            "complete": self.complete,
            "m_values": sorted(self.m_values),
            "dual_count": len(self.dual_subsets),
            "violations": self.violations,
        }


def _scan(model: CurveModel, s: int, blocks, result: SearchResult, keep_subsets: bool) -> None:
    g = model.genus
    M = model.eval_matrix(max(s + 2 * g - 1, 0))
    E = np.array(M.entries, dtype=np.int64)
    poles = np.array(M.pole_orders, dtype=np.int64)
    top = s + 2 * g - 1
    top_row = M.pole_orders.index(top) if top in M.pole_orders else -1
    tables = model.field.tables()
    for subsets in blocks:
        if len(subsets) == 0:
            continue
        r = _kernel.evaluate(E, tables, subsets)
        result.checked += len(subsets)
        bad = np.flatnonzero(r.status < 0)
        for k in bad[:5]:
            result.violations.append(f"subset {subsets[k].tolist()}: kernel status {int(r.status[k])}")
        dual = r.status == _kernel.DUAL
        if s >= 2 * g + 2 and top_row >= 0:
            has_top = ((r.mask >> np.uint64(top_row)) & np.uint64(1)).astype(bool)
            mism = np.flatnonzero(has_top != dual)
            for k in mism[:5]:
                result.violations.append(
                    f"subset {subsets[k].tolist()}: dual={bool(dual[k])} but "
                    f"{top} in W* is {bool(has_top[k])}")
        idx = np.flatnonzero(dual)
        ms = poles[r.last[idx]]
        for m in np.unique(ms).tolist():
            if not in_dual_range(s, m, g):
                result.violations.append(f"dual flag at (n, m) = ({s}, {m}) outside the admissible range")
            result.m_values.add(int(m))
        if keep_subsets:
            result.dual_subsets.extend(tuple(int(x) for x in subsets[k]) for k in idx)
            result.dual_m.extend(int(m) for m in ms)


def _random_blocks(N: int, s: int, seed: int, trials: int, block: int = 1 << 15):
    rng = np.random.default_rng(seed)
    seen: set[bytes] = set()
    done = 0
    while done < trials:
        k = min(block, trials - done)
        sub = np.sort(np.argsort(rng.random((k, N)), axis=1)[:, :s], axis=1)
        done += k
        fresh = []
        for row in sub:
            key = row.tobytes()
            if key not in seen:
                seen.add(key)
                fresh.append(row)
        yield np.array(fresh, dtype=np.int64).reshape(-1, s)


def search_subsets(model: CurveModel, s: int, policy: str = "exhaustive", *, seed: int = 0,
                   trials: int = 10_000, witnesses: Sequence[Sequence[str | int]] | None = None,
                   budget: int = DEFAULT_BUDGET, keep_subsets: bool = True) -> SearchResult:
    """Every returned subset is verified dual; exhaustive results are complete for this s."""
    N = model.N
    if not 1 <= s <= N:
        raise ValueError(f"subset size must lie in [1, {N}]")
    result = SearchResult(model.name, s, policy)
    if policy == "exhaustive":
        total = comb(N, s)
        if total > budget:
            raise BudgetExceeded(f"C({N},{s}) = {total} subsets exceeds the budget {budget}")
        _scan(model, s, (blk for _, blk in _kernel.colex_blocks(N, s)), result, keep_subsets)
        result.complete = True
    elif policy == "random":
        if trials > budget:
            raise BudgetExceeded(f"{trials} trials exceed the budget {budget}")
        _scan(model, s, _random_blocks(N, s, seed, trials), result, keep_subsets)
        result.complete = result.checked == comb(N, s)
    elif policy == "witnesses":
        rows = sorted({tuple(model.column_indices(w)) for w in (witnesses or ()) if len(set(w)) == s})
        _scan(model, s, [np.array(rows, dtype=np.int64).reshape(-1, s)], result, keep_subsets)
    else:
        raise ValueError(f"unknown policy {policy!r}; expected one of {POLICIES}")
    return result


def hermitian_witnesses(model: CurveModel) -> list[list[int]]:
    """Unions of x-fibres and of y-fibres off the line y^3 + y = 0, plus complements.

    Each such point set is cut out by a polynomial in one coordinate, so its
    flags are the natural candidates for large dual subsets.
    """
    F = model.field
    xs: dict[int, list[int]] = {}
    ys: dict[int, list[int]] = {}
    for i, p in enumerate(model.points):
        xs.setdefault(p.coords[0], []).append(i)
        b = p.coords[1]
        if F.add(F.pow(b, 3), b) != 0:
            ys.setdefault(b, []).append(i)
    out: list[list[int]] = []
    for fibres in (list(xs.values()), list(ys.values())):
        for k in range(1, len(fibres) + 1):
            pts = sorted(i for f in fibres[:k] for i in f)
            out.append(pts)
            rest = sorted(set(range(model.N)) - set(pts))
            if rest:
                out.append(rest)
    return out


# -- admissible-pair tables -------------------------------------------------

FOUND, NOT_FOUND = "*", "."


@dataclass
class PairTable:
    model: str
    genus: int
    max_n: int
    marks: dict[tuple[int, int], str] = field(default_factory=dict)
    policies: dict[int, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def max_m(self) -> int:
        return self.max_n + 2 * self.genus - 1

    def row(self, n: int) -> dict[int, str]:
        return {m: mk for (nn, m), mk in sorted(self.marks.items()) if nn == n}

    def to_text(self) -> str:
        ms = range(self.max_m + 1)
        width = max(2, len(str(self.max_m)) + 1)
        lines = ["n\\m".ljust(4) + "".join(str(m).rjust(width) for m in ms)]
        for n in range(1, self.max_n + 1):
            cells = "".join(self.marks.get((n, m), " ").rjust(width) for m in ms)
            lines.append(str(n).ljust(4) + cells)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "genus": self.genus,
            "max_n": self.max_n,
            "rows": {str(n): {str(m): mk for m, mk in self.row(n).items()}
                     for n in range(1, self.max_n + 1)},
            "policies": {str(n): p for n, p in sorted(self.policies.items())},
            "violations": self.violations,
        }


def table_row(table: PairTable, n: int, result: SearchResult) -> None:
    g = table.genus
    for m in range(table.max_m + 1):
        if in_dual_range(n, m, g):
            table.marks[(n, m)] = FOUND if m in result.m_values else NOT_FOUND
    for m in result.m_values:
        if not in_dual_range(n, m, g):
            table.violations.append(f"dual flag found outside the admissible range at ({n}, {m})")
    table.policies[n] = result.policy
    table.violations.extend(result.violations)


def pair_table(model: CurveModel, max_n: int = 8, policy: str = "exhaustive", *,
               seed: int = 0, trials: int = 10_000, budget: int = DEFAULT_BUDGET,
               results: dict[int, SearchResult] | None = None) -> PairTable:
    """Search each size 1..max_n and mark the admissible (n, m) cells.

    ``results`` may supply precomputed rows (e.g. from a cache).
    """
    table = PairTable(model.name, model.genus, max_n)
    for n in range(1, min(max_n, model.N) + 1):
        res = (results or {}).get(n)
        if res is None:
            wit = hermitian_witnesses(model) if policy == "witnesses" else None
            res = search_subsets(model, n, policy, seed=seed, trials=trials, witnesses=wit,
                                 budget=budget, keep_subsets=False)
        table_row(table, n, res)
    return table


def parse_table(rows: dict[int, dict[int, str]], model: str = "", genus: int = 0) -> PairTable:
    max_n = max(rows)
    t = PairTable(model, genus, max_n)
    for n, row in rows.items():
        for m, mk in row.items():
            t.marks[(n, m)] = mk
    return t


# -- Klein ladder -------------------------------------------------------------

def klein_ladder(model: CurveModel | None = None) -> list[CompleteFlag]:
    """Flags on D_{3i+2} = Q' + Q'' + P_1 + ... + P_{3i}, i = 0..7."""
    model = model or builtin("klein_f8")
    return [build_flag(model, range(3 * i + 2)) for i in range(8)]


def ladder_report(flags: Sequence[CompleteFlag]) -> dict:
    verdicts = [isometry_dual(f) for f in flags]
    steps = [puncture(flags[i + 1], flags[i].columns) for i in range(len(flags) - 1)]
    return {
        "sizes": [f.n for f in flags],
        "nongaps": [list(f.nongaps) for f in flags],
        "dual": [v.is_dual for v in verdicts],
        "differences": [r.difference for r in steps],
        "differences_in_semigroup": [r.difference_in_semigroup for r in steps],
        "contained": [r.contained for r in steps],
    }


def dump_result(result: SearchResult) -> str:
    return json.dumps(result.to_json() | {"dual_subsets": [list(x) for x in result.dual_subsets],
                                          "dual_m": result.dual_m})


def load_result(text: str) -> SearchResult:
    d = json.loads(text)
    r = SearchResult(d["model"], d["size"], d["policy"], d["checked"],
                     [tuple(x) for x in d.get("dual_subsets", [])], d.get("dual_m", []),
                     set(d["m_values"]), d["violations"], d["complete"])
    return r
