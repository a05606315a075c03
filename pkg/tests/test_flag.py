from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from agflag import linalg
from agflag.curve import BUILTINS, builtin
from agflag.errors import InsufficientBound
from agflag.flag import (ORTHOGONALITY, ZERO_ENTRY, build_flag, classify_pair, flag_report,
                         in_dual_range, is_lower_antitriangular, isometry_dual, nongaps_by_rank,
                         pivot_check, projective_scalar, region)

MODELS = sorted(BUILTINS)


def _brute_force_dual(flag) -> bool:
    """Search every v in (F*)^n for a lower anti-triangular G diag(v) G^T."""
    F = flag.field
    for v in product(range(1, F.q), repeat=flag.n):
        if is_lower_antitriangular(linalg.gram(F, flag.G, v)):
            return True
    return False


def test_rs8_full_flag():
    flag = build_flag(builtin("rs_q8"))
    assert flag.nongaps == tuple(range(8))
    v = isometry_dual(flag)
    assert v.is_dual and v.candidate == (1,) * 8


def test_herm9_full_is_dual_with_ones():
    flag = build_flag(builtin("hermitian_q3"))
    v = isometry_dual(flag)
    assert v.is_dual and set(v.candidate) == {1}
    assert flag.m == flag.n + 2 * flag.genus - 1


@pytest.mark.parametrize("name", MODELS)
def test_greedy_matches_rank_oracle(name):
    m = builtin(name)
    rng = random.Random(name)
    for _ in range(25):
        s = rng.randint(1, m.N)
        cols = rng.sample(range(m.N), s)
        assert list(build_flag(m, cols).nongaps) == nongaps_by_rank(m, cols)


@pytest.mark.parametrize("name", ["hermitian_q2", "hermitian_g1_q2", "rs_q8", "hyperelliptic2_f2"])
def test_verdict_matches_brute_force(name):
    m = builtin(name)
    rng = random.Random(1)
    for _ in range(40):
        s = rng.randint(1, min(m.N, 4))
        flag = build_flag(m, rng.sample(range(m.N), s))
        assert isometry_dual(flag).is_dual == _brute_force_dual(flag)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(MODELS), st.data())
def test_verdict_invariants(name, data):
    m = builtin(name)
    cols = data.draw(st.sets(st.integers(0, m.N - 1), min_size=1))
    flag = build_flag(m, sorted(cols))
    v = isometry_dual(flag)
    F = flag.field
    # v spans the kernel of the first n - 1 rows and is normalized
    assert next(x for x in v.candidate if x) == 1
    for row in flag.G[:-1]:
        acc = 0
        for a, b in zip(row, v.candidate):
            acc = F.add(acc, F.mul(a, b))
        assert acc == 0
    if v.is_dual:
        assert in_dual_range(flag.n, flag.m, flag.genus)
        assert linalg.determinant(F, v.product) != 0
        assert all(ok for *_, ok in pivot_check(flag, v))
        assert not classify_pair(flag, v).violations
    else:
        assert v.failure_reason in (ZERO_ENTRY, ORTHOGONALITY)


def test_failure_reasons():
    m = builtin("hermitian_g1_q2")
    zero = [isometry_dual(build_flag(m, c)) for c in ([0, 1, 2], [0, 1, 4], [2, 3, 4, 5])]
    reasons = {z.failure_reason for z in zero if not z.is_dual}
    assert reasons <= {ZERO_ENTRY, ORTHOGONALITY}


def test_dual_iff_top_in_nongaps_for_large_n():
    m = builtin("hermitian_q2")
    g = m.genus
    for cols in [range(4), range(5), range(8), [0, 2, 4, 6], [1, 3, 5, 6, 7]]:
        flag = build_flag(m, list(cols))
        if flag.n >= 2 * g + 2:
            assert isometry_dual(flag).is_dual == ((flag.n + 2 * g - 1) in flag.nongaps)


def test_projective_scalar():
    from agflag.gf import gf9
    F = gf9()
    v = [1, 3, 5, 0]
    c = F.parse("a^3")
    assert projective_scalar(F, v, [F.mul(c, x) for x in v]) == c
    assert projective_scalar(F, v, [1, 3, 6, 0]) is None
    assert projective_scalar(F, v, [1, 3, 5]) is None
    assert projective_scalar(F, [1, 0], [1, 2]) is None


def test_regions_and_range():
    assert region(1, 0, 3) == "A"
    assert region(2, 6, 3) == "B"
    assert region(3, 12, 3) == "C"
    assert region(8, 13, 3) == "D"
    assert in_dual_range(1, 0, 0) and not in_dual_range(2, 0, 1)
    # genus 0: only n = m + 1
    assert [m for m in range(10) if in_dual_range(5, m, 0)] == [4]
    # no admissible cell beyond n + 2g - 1
    assert not any(in_dual_range(n, n + 2 * g, g) for n in range(1, 12) for g in range(4))


def test_range_matches_hermitian_table_cells():
    from agflag.fixtures import HERMITIAN_Q3_TABLE
    for n, row in HERMITIAN_Q3_TABLE.items():
        assert {m for m in range(n + 6) if in_dual_range(n, m, 3)} == set(row)


def test_classify_pair_flags_nondual_out_of_range():
    m = builtin("hermitian_q3")
    flag = build_flag(m)
    assert classify_pair(flag, isometry_dual(flag)).violations == ()


def test_flag_report_shape():
    m = builtin("klein_f8")
    rep = flag_report(build_flag(m, range(5)))
    assert rep["W*"] == [0, 3, 5, 7, 10]
    assert rep["is_dual"] and rep["region"] == "C"
    assert len(rep["product_matrix"]) == 5


def test_insufficient_bound():
    m = builtin("hermitian_q3")
    with pytest.raises(InsufficientBound):
        build_flag(m, range(10), bound=4)
    with pytest.raises(ValueError):
        build_flag(m, [])
