from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from agflag import linalg
from agflag.gf import gf4, gf7, gf9

FIELDS = {"gf4": gf4(), "gf7": gf7(), "gf9": gf9()}


def _matrix(F, rows, cols, rng):
    return [[rng.randrange(F.q) for _ in range(cols)] for _ in range(rows)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(FIELDS)), st.integers(1, 6), st.integers(1, 7), st.integers(0, 2**32))
def test_rank_nullity(name, r, c, seed):
    F = FIELDS[name]
    A = _matrix(F, r, c, random.Random(seed))
    K = linalg.kernel(F, A, c)
    assert linalg.rank(F, A) + len(K) == c
    for v in K:
        Av = linalg.matmul(F, A, [[x] for x in v])
        assert all(row[0] == 0 for row in Av)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(sorted(FIELDS)), st.integers(1, 5), st.integers(0, 2**32))
def test_determinant_vs_rank(name, n, seed):
    F = FIELDS[name]
    A = _matrix(F, n, n, random.Random(seed))
    assert (linalg.determinant(F, A) != 0) == (linalg.rank(F, A) == n)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(FIELDS)), st.integers(1, 4), st.integers(0, 2**32))
def test_determinant_multiplicative(name, n, seed):
    F = FIELDS[name]
    rng = random.Random(seed)
    A, B = _matrix(F, n, n, rng), _matrix(F, n, n, rng)
    assert linalg.determinant(F, linalg.matmul(F, A, B)) == F.mul(linalg.determinant(F, A),
                                                                    linalg.determinant(F, B))


def test_greedy_independent_keeps_first_independent_rows():
    F = gf7()
    rows = [[1, 0, 0], [2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 3]]
    assert linalg.greedy_independent(F, rows) == [0, 2, 4]
    assert linalg.greedy_independent(F, rows, limit=2) == [0, 2]


def test_gram_matches_definition():
    F = gf9()
    rng = random.Random(3)
    G = _matrix(F, 3, 5, rng)
    v = [rng.randrange(1, F.q) for _ in range(5)]
    P = linalg.gram(F, G, v)
    for i in range(3):
        for j in range(3):
            acc = 0
            for k in range(5):
                acc = F.add(acc, F.mul(F.mul(G[i][k], v[k]), G[j][k]))
            assert P[i][j] == acc


def test_rref_pivots():
    F = gf7()
    R, piv = linalg.rref(F, [[0, 2, 4], [0, 1, 2], [3, 0, 1]])
    assert piv == [0, 1]
    assert R[0][0] == 1 and R[1][1] == 1


def test_echelon_basis_rejects_dependent():
    F = gf4()
    b = linalg.EchelonBasis(F, 3)
    assert b.add([1, 2, 3])
    assert not b.add([F.mul(2, 1), F.mul(2, 2), F.mul(2, 3)])
    assert len(b) == 1
