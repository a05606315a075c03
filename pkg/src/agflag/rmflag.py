"""Reed-Muller type flags on the Boolean cube GF(2)^m.

Points and square-free monomials are both encoded as m-bit integers: bit
j-1 stands for x_j, and a point is written alpha_m ... alpha_1, so x_1 is
the last character. Both are listed in DegLex order (degree first, then the
integer value of the bit pattern). A[f][P] = 1 exactly when the bits of f
are a subset of the bits of P.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from math import comb

import numpy as np

from . import _kernel, linalg
from .curve import EvaluationMatrix, MonomialFunction
from .errors import BudgetExceeded, DimensionTooLarge
from .flag import CompleteFlag, IsometryDualVerdict, build_flag, isometry_dual
from .gf import FieldSpec, gf2
from .puncture import DEFAULT_BUDGET

MAX_DIMENSION = 6


def deglex(m: int) -> list[int]:
    return sorted(range(1 << m), key=lambda a: (bin(a).count("1"), a))


def monomial_name(bits: int) -> str:
    if bits == 0:
        return "1"
    return "".join(f"x{j + 1}" for j in range(bits.bit_length()) if bits >> j & 1)


def point_name(bits: int, m: int) -> str:
    return format(bits, f"0{m}b")


@dataclass(frozen=True)
class BooleanCube:
    m: int
    order: tuple[int, ...]            # DegLex list of bit patterns
    A: tuple[tuple[int, ...], ...]    # rows monomials, columns points

    @property
    def N(self) -> int:
        return 1 << self.m

    @property
    def field(self) -> FieldSpec:
        return gf2()

    @property
    def points(self) -> list[str]:
        return [point_name(b, self.m) for b in self.order]

    @property
    def monomials(self) -> list[str]:
        return [monomial_name(b) for b in self.order]

    def matrix(self) -> EvaluationMatrix:
        rows = tuple(MonomialFunction(tuple((b >> j) & 1 for j in range(self.m)), k)
                     for k, b in enumerate(self.order))
        return EvaluationMatrix(self.field, rows, tuple(self.points), self.A)

    def characteristic(self, subset) -> list[int]:
        chosen = set(subset)
        return [1 if i in chosen else 0 for i in range(self.N)]


@lru_cache(maxsize=None)
def cube(m: int) -> BooleanCube:
    if not 1 <= m <= MAX_DIMENSION:
        raise DimensionTooLarge(f"m must lie in [1, {MAX_DIMENSION}], got {m}")
    order = deglex(m)
    A = tuple(tuple(1 if f & p == f else 0 for p in order) for f in order)
    return BooleanCube(m, tuple(order), A)


def gram(c: BooleanCube, v=None) -> list[list[int]]:
    """A diag(v) A^T over GF(2); v defaults to the all-ones vector."""
    return linalg.gram(c.field, c.A, v if v is not None else [1] * c.N)


@dataclass(frozen=True)
class SubsetVerdict:
    subset: tuple[int, ...]           # column indices in DegLex point order
    flag: CompleteFlag
    verdict: IsometryDualVerdict
    selected: tuple[int, ...]         # row indices (DegLex monomials) picked by the flag
    characteristic: tuple[int, ...]

    @property
    def is_dual(self) -> bool:
        return self.verdict.is_dual


def subset_verdict(c: BooleanCube, subset) -> SubsetVerdict:
    cols = sorted(int(i) for i in subset)
    f = build_flag(c.matrix(), cols)
    return SubsetVerdict(tuple(cols), f, isometry_dual(f), tuple(r.pole_order for r in f.rows),
                         tuple(c.characteristic(cols)))


# -- row spans ----------------------------------------------------------------

def designated_rows(m: int) -> list[int]:
    """1, x_1, ..., x_m, x_1 x_2: the first m + 2 rows in DegLex order."""
    return list(range(m + 2))


def span_vectors(c: BooleanCube, rows) -> list[tuple[int, ...]]:
    rows = [c.A[r] for r in rows]
    out = []
    for coeffs in iproduct((0, 1), repeat=len(rows)):
        acc = [0] * c.N
        for a, r in zip(coeffs, rows):
            if a:
                acc = [x ^ y for x, y in zip(acc, r)]
        out.append(tuple(acc))
    return out


def span_weight_distribution(m: int, rows=None) -> dict[int, int]:
    c = cube(m)
    rows = designated_rows(m) if rows is None else rows
    hist = Counter(sum(v) for v in span_vectors(c, rows))
    return dict(sorted(hist.items()))


def span_level(c: BooleanCube, chi, rows=None) -> int:
    """Smallest k with chi in the span of the first k designated rows."""
    rows = designated_rows(c.m) if rows is None else rows
    F = c.field
    for k in range(len(rows) + 1):
        basis = [list(c.A[r]) for r in rows[:k]]
        if linalg.rank(F, basis + [list(chi)]) == linalg.rank(F, basis):
            return k
    return -1


# -- counting dual subsets ------------------------------------------------------

@dataclass
class RMCount:
    m: int
    size: int
    policy: str
    count: int
    subsets: list[tuple[int, ...]]
    checked: int
    rejected: int = 0                 # span candidates that failed the direct check

    def to_json(self, c: BooleanCube | None = None, with_subsets: bool = False) -> dict:
        d = {"m": self.m, "size": self.size, "policy": self.policy, "count": self.count,
             "checked": self.checked, "rejected": self.rejected,
             "weight_histogram": {str(k): v for k, v in span_weight_distribution(self.m).items()}}
        if with_subsets:
            c = c or cube(self.m)
            d["subsets"] = [[c.points[i] for i in s] for s in self.subsets]
        return d


def _kernel_duals(c: BooleanCube, subsets: np.ndarray) -> tuple[np.ndarray, _kernel.BatchResult]:
    E = np.array(c.A, dtype=np.int64)
    r = _kernel.evaluate(E, c.field.tables(), subsets)
    return r.status == _kernel.DUAL, r


def count_dual_subsets(m: int, s: int, policy: str = "exhaustive", *,
                       budget: int = DEFAULT_BUDGET) -> RMCount:
    c = cube(m)
    if not 1 <= s <= c.N:
        raise ValueError(f"size must lie in [1, {c.N}]")
    if policy == "exhaustive":
        total = comb(c.N, s)
        if total > budget:
            raise BudgetExceeded(f"C({c.N},{s}) = {total} subsets exceeds the budget {budget}; "
                                 "use the span policy")
        found: list[tuple[int, ...]] = []
        for _, blk in _kernel.colex_blocks(c.N, s):
            dual, _ = _kernel_duals(c, blk)
            found.extend(tuple(int(x) for x in blk[k]) for k in np.flatnonzero(dual))
        found.sort()
        return RMCount(m, s, policy, len(found), found, total)
    if policy == "span":
        cands = sorted({tuple(i for i, x in enumerate(v) if x)
                        for v in span_vectors(c, designated_rows(m)) if sum(v) == s})
        if not cands:
            return RMCount(m, s, policy, 0, [], 0)
        dual, _ = _kernel_duals(c, np.array(cands, dtype=np.int64))
        ok = [cands[k] for k in np.flatnonzero(dual)]
        return RMCount(m, s, policy, len(ok), ok, len(cands), len(cands) - len(ok))
    raise ValueError(f"unknown policy {policy!r}; expected 'exhaustive' or 'span'")


def random_spot_check(m: int, s: int, known, *, samples: int = 1_000_000, seed: int = 0,
                      block: int = 1 << 15) -> tuple[int, list[tuple[int, ...]]]:
    """Sample random s-subsets; return (#dual seen, dual subsets not in ``known``)."""
    c = cube(m)
    known = {tuple(sorted(k)) for k in known}
    rng = np.random.default_rng(seed)
    seen = 0
    stray: set[tuple[int, ...]] = set()
    done = 0
    while done < samples:
        k = min(block, samples - done)
        sub = np.sort(np.argsort(rng.random((k, c.N)), axis=1)[:, :s], axis=1)
        dual, _ = _kernel_duals(c, sub)
        for i in np.flatnonzero(dual):
            seen += 1
            t = tuple(int(x) for x in sub[i])
            if t not in known:
                stray.add(t)
        done += k
    return seen, sorted(stray)


# -- grouping -------------------------------------------------------------------

def pivot_products(c: BooleanCube, selected) -> frozenset[str]:
    """Square-free products of the monomials paired on the antidiagonal."""
    sel = list(selected)
    n = len(sel)
    return frozenset(monomial_name(c.order[sel[i]] | c.order[sel[n - 1 - i]]) for i in range(n))


def group_by_rows(m: int, subsets) -> dict[tuple[str, ...], int]:
    c = cube(m)
    out: Counter = Counter()
    for sub in subsets:
        sv = subset_verdict(c, sub)
        out[tuple(c.monomials[r] for r in sv.selected)] += 1
    return dict(out)


def group_by_pivots(m: int, subsets) -> dict[tuple[str, ...], int]:
    c = cube(m)
    out: Counter = Counter()
    for sub in subsets:
        sv = subset_verdict(c, sub)
        out[tuple(sorted(pivot_products(c, sv.selected)))] += 1
    return dict(out)


def group_by_level(m: int, subsets) -> dict[int, int]:
    c = cube(m)
    out: Counter = Counter(span_level(c, c.characteristic(sub)) for sub in subsets)
    return dict(sorted(out.items()))
