"""Complete flags of one-point codes and the isometry-dual test.

A flag on a column subset D is built by walking the evaluation matrix top to
bottom and keeping every row that is independent of the rows kept so far.
The pole orders of the kept rows are the geometric nongaps W*.

The flag is isometry-dual when some everywhere-nonzero ``v`` makes
``G diag(v) G^T`` vanish above the antidiagonal. Row 1 of ``G`` is the
all-ones vector, so such a ``v`` must span the orthogonal complement of the
first n-1 rows; that pins ``v`` down to a scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .curve import CurveModel, EvaluationMatrix, MonomialFunction
from .errors import DegenerateKernel, InsufficientBound
from .gf import FieldSpec
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class CompleteFlag:
    field: FieldSpec
    columns: tuple[str, ...]
    rows: tuple[MonomialFunction, ...]
    G: tuple[tuple[int, ...], ...]
    genus: int
    semigroup: NumericalSemigroup | None = None
    model: str = ""
    row_names: tuple[str, ...] = ()
    source: CurveModel | EvaluationMatrix | None = field(default=None, compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def nongaps(self) -> tuple[int, ...]:
        """W* = (m_1, ..., m_n)."""
        return tuple(r.pole_order for r in self.rows)

    @property
    def m(self) -> int:
        return self.rows[-1].pole_order

    def to_text(self) -> str:
        from .curve import format_matrix
        return format_matrix(self.field, self.G, list(self.row_names), list(self.columns))



def build_flag(source: EvaluationMatrix | CurveModel, columns: Sequence[str | int] | None = None,
               *, bound: int | None = None) -> CompleteFlag:
    """Greedy complete flag on ``columns`` (labels or indices, global order kept).

    ``source`` may be a model, in which case the evaluation bound defaults to
    n + 2g - 1, which always suffices.
    """
    if isinstance(source, CurveModel):
        model = source
        idx = model.column_indices(columns if columns is not None else range(model.N))
        if bound is None:
            bound = max(len(idx) + 2 * model.genus - 1, 0)
        matrix = model.eval_matrix(bound)
        name = model.name
    else:
        matrix = source
        if columns is None:
            idx = list(range(len(matrix.columns)))
        else:
            pos = {c: i for i, c in enumerate(matrix.columns)}
            idx = sorted({c if isinstance(c, int) else pos[c] for c in columns})
        name = ""
    if not idx:
        raise ValueError("a flag needs at least one column")
    n = len(idx)
    sub = matrix.restrict(idx)
    chosen = linalg.greedy_independent(matrix.field, sub.entries, limit=n)
    if len(chosen) < n:
        raise InsufficientBound(
            f"only {len(chosen)} of {n} independent rows up to pole order "
            f"{matrix.rows[-1].pole_order if matrix.rows else -1}; raise the bound")
    S = matrix.semigroup
    names = sub.row_names()
    return CompleteFlag(
        matrix.field,
        sub.columns,
        tuple(sub.rows[i] for i in chosen),
        tuple(sub.entries[i] for i in chosen),
        S.genus if S is not None else 0,
        S,
        name,
        tuple(names[i] for i in chosen),
        source,
    )


def nongaps_by_rank(model: CurveModel, columns: Sequence[str | int], bound: int | None = None) -> list[int]:
    """W* from dim C_L(D, aQ) - dim C_L(D, (a-1)Q) = 1, each rank recomputed from scratch."""
    idx = model.column_indices(columns)
    if bound is None:
        bound = len(idx) + 2 * model.genus - 1
    M = model.eval_matrix(bound)
    rows = [[r[i] for i in idx] for r in M.entries]
    out = []
    prev = 0
    for k, a in enumerate(M.pole_orders):
        d = linalg.rank(model.field, rows[: k + 1])
        if d > prev:
            out.append(a)
        prev = d
    return out


# -- isometry-dual verdict --------------------------------------------------

ZERO_ENTRY = "ZeroEntryInCandidate"
ORTHOGONALITY = "OrthogonalityFails"


@dataclass(frozen=True)
class IsometryDualVerdict:
    is_dual: bool
    candidate: tuple[int, ...]                   # kernel vector, first nonzero entry 1
    product: tuple[tuple[int, ...], ...] | None  # G diag(candidate) G^T
    failure_reason: str | None = None

    @property
    def dualizing_vector(self) -> tuple[int, ...] | None:
        return self.candidate if self.is_dual else None

    @property
    def pivots(self) -> tuple[int, ...]:
        if self.product is None:
            return ()
        n = len(self.product)
        return tuple(self.product[i][n - 1 - i] for i in range(n))


def dual_candidate(field: FieldSpec, G: Sequence[Sequence[int]]) -> list[int]:
    n = len(G)
    ker = linalg.kernel(field, [list(r) for r in G[: n - 1]], n)
    if len(ker) != 1:
        raise DegenerateKernel(f"kernel of the first {n - 1} rows has dimension {len(ker)}")
    v = ker[0]
    lead = next(x for x in v if x)
    s = field.inv(lead)
    return [field.mul(s, x) for x in v]


def is_lower_antitriangular(P: Sequence[Sequence[int]]) -> bool:
    n = len(P)
    return all(P[i][j] == 0 for i in range(n) for j in range(n - 1 - i))


def isometry_dual(flag: CompleteFlag) -> IsometryDualVerdict:
    F = flag.field
    v = dual_candidate(F, flag.G)
    if any(x == 0 for x in v):
        return IsometryDualVerdict(False, tuple(v), None, ZERO_ENTRY)
    P = linalg.gram(F, flag.G, v)
    prod = tuple(tuple(r) for r in P)
    if not is_lower_antitriangular(P):
        return IsometryDualVerdict(False, tuple(v), prod, ORTHOGONALITY)
    n = flag.n
    if any(P[i][n - 1 - i] == 0 for i in range(n)):
        # G invertible and lower anti-triangular product force a nonzero antidiagonal
        raise DegenerateKernel("zero antidiagonal entry in a lower anti-triangular product")
    return IsometryDualVerdict(True, tuple(v), prod, None)


def projective_scalar(field: FieldSpec, v: Sequence[int], w: Sequence[int]) -> int | None:
    """The c with w = c * v, or None when the vectors are not proportional."""
    if len(v) != len(w):
        return None
    c = None
    for a, b in zip(v, w):
        if a == 0 or b == 0:
            if a != b:
                return None
            continue
        r = field.mul(b, field.inv(a))
        if c is None:
            c = r
        elif c != r:
            return None
    return c if c is not None else 1


def pivot_check(flag: CompleteFlag, verdict: IsometryDualVerdict) -> list[tuple[int, int, int, int, bool]]:
    """(u, w, row, col, nonzero) for every u, w in W* with u + w = m."""
    if not verdict.is_dual:
        raise ValueError("pivot check needs a dual flag")
    W = flag.nongaps
    pos = {a: i for i, a in enumerate(W)}
    out = []
    for u in W:
        w = flag.m - u
        if w in pos:
            i, j = pos[u], pos[w]
            out.append((u, w, i, j, verdict.product[i][j] != 0))
    return out


# -- admissible pairs --------------------------------------------------------

def region(n: int, m: int, g: int) -> str | None:
    if n == 1 and m == 0:
        return "A"
    if m <= 0:
        return None
    if m <= 2 * g:
        return "B"
    if m <= 4 * g:
        return "C"
    return "D"


def in_dual_range(n: int, m: int, g: int) -> bool:
    """Whether (n, m) is allowed for an isometry-dual flag on a genus-g curve."""
    if n < 1 or m < 0:
        return False
    if n == 1 or m == 0:
        return n == 1 and m == 0
    if m > n + 2 * g - 1:
        return False
    if m >= 2 * g and n > m + 1 - g:
        return False
    if m <= 2 * g:
        return 2 * n <= m + 2
    if m <= 4 * g:
        return 2 * n <= m + 3
    return n == m + 1 - 2 * g


@dataclass(frozen=True)
class AdmissiblePair:
    n: int
    m: int
    region: str | None
    violations: tuple[str, ...] = field(default=())


def classify_pair(flag: CompleteFlag, verdict: IsometryDualVerdict | None = None) -> AdmissiblePair:
    n, m, g = flag.n, flag.m, flag.genus
    bad = []
    if m > n + 2 * g - 1 and not (n == 1 and m == 0):
        bad.append("m > n + 2g - 1")
    if (n == 1) != (m == 0):
        bad.append("n = 1 iff m = 0")
    if 0 <= m <= 2 * g and 2 * n > m + 2:
        bad.append("n > m/2 + 1 for m <= 2g")
    if m >= 2 * g and n > m + 1 - g:
        bad.append("n > m + 1 - g for m >= 2g")
    dual = verdict is not None and verdict.is_dual
    if dual:
        if m <= 4 * g and 2 * n > m + 3:
            bad.append("dual with n > m/2 + 3/2 for m <= 4g")
        if 2 * g < m <= 4 * g and n >= 2 * g + 2:
            bad.append("dual with n >= 2g + 2 for 2g < m <= 4g")
        if n < m + 1 - 2 * g:
            bad.append("dual with n < m + 1 - 2g")
        if m >= 4 * g and n != m + 1 - 2 * g:
            bad.append("dual with m >= 4g but n != m + 1 - 2g")
        if m > 4 * g and n < 2 * g + 2:
            bad.append("dual with m > 4g but n < 2g + 2")
    if verdict is not None and n >= 2 * g + 2:
        top = (n + 2 * g - 1) in flag.nongaps
        if top != verdict.is_dual:
            bad.append("for n >= 2g + 2: dual iff n + 2g - 1 in W* fails")
    return AdmissiblePair(n, m, region(n, m, g), tuple(bad))


def flag_report(flag: CompleteFlag, verdict: IsometryDualVerdict | None = None) -> dict:
    if verdict is None:
        verdict = isometry_dual(flag)
    pair = classify_pair(flag, verdict)
    return {
        "model": flag.model,
        "columns": list(flag.columns),
        "n": flag.n,
        "m": flag.m,
        "W*": list(flag.nongaps),
        "rows": list(flag.row_names),
        "G": [list(r) for r in flag.G],
        "is_dual": verdict.is_dual,
        "v": list(verdict.dualizing_vector) if verdict.is_dual else None,
        "failure_reason": verdict.failure_reason,
        "product_matrix": [list(r) for r in verdict.product] if verdict.product else None,
        "region": pair.region,
        "violations": list(pair.violations),
    }
