"""Compiled batch evaluation of flags on many column subsets.

This mirrors :func:`agflag.flag.build_flag` followed by
:func:`agflag.flag.isometry_dual`, but works on raw integer tables so that
millions of subsets can be checked. The pure-Python path stays the reference;
tests compare the two.

Status codes per subset:
    2  isometry-dual
    1  candidate has no zero entry but the product is not lower anti-triangular
    0  candidate has a zero entry
   -1  fewer than s independent rows below the evaluation bound
   -2  degenerate (zero antidiagonal entry; cannot happen for a valid flag)
"""

from __future__ import annotations

import os
from math import comb

import numba as nb
import numpy as np

if "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is too old; skip the noisy probe
    nb.config.THREADING_LAYER = "workqueue"

DUAL, ORTHO_FAIL, ZERO_ENTRY, SHORT, DEGENERATE = 2, 1, 0, -1, -2


@nb.njit(cache=True)
def _evaluate(E, cols, add, mul, neg, inv, G, B, piv, M, v):
    R = E.shape[0]
    s = cols.shape[0]
    nb_ = 0
    last = -1
    mask = np.uint64(0)
    vec = np.empty(s, dtype=np.int64)
    for r in range(R):
        for j in range(s):
            vec[j] = E[r, cols[j]]
        for k in range(nb_):
            c = vec[piv[k]]
            if c != 0:
                for j in range(piv[k], s):
                    b = B[k, j]
                    if b != 0:
                        vec[j] = add[vec[j], neg[mul[c, b]]]
        p = -1
        for j in range(s):
            if vec[j] != 0:
                p = j
                break
        if p < 0:
            continue
        t = inv[vec[p]]
        for j in range(s):
            B[nb_, j] = mul[t, vec[j]]
            G[nb_, j] = E[r, cols[j]]
        piv[nb_] = p
        nb_ += 1
        last = r
        mask |= np.uint64(1) << np.uint64(r)
        if nb_ == s:
            break
    if nb_ < s:
        return SHORT, last, mask

    # rref of the first s-1 rows of G; exactly one free column remains
    for i in range(s - 1):
        for j in range(s):
            M[i, j] = G[i, j]
    pc = np.full(s, -1, dtype=np.int64)
    row = 0
    for c in range(s):
        if row == s - 1:
            break
        pr = -1
        for i in range(row, s - 1):
            if M[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != row:
            for j in range(s):
                tmp = M[row, j]
                M[row, j] = M[pr, j]
                M[pr, j] = tmp
        t = inv[M[row, c]]
        for j in range(s):
            M[row, j] = mul[t, M[row, j]]
        for i in range(s - 1):
            if i != row and M[i, c] != 0:
                f = M[i, c]
                for j in range(s):
                    if M[row, j] != 0:
                        M[i, j] = add[M[i, j], neg[mul[f, M[row, j]]]]
        pc[row] = c
        row += 1
    free = -1
    k = 0
    for c in range(s):
        if k < row and pc[k] == c:
            k += 1
        else:
            free = c
            break
    for j in range(s):
        v[j] = 0
    v[free] = 1
    for i in range(row):
        v[pc[i]] = neg[M[i, free]]
    lead = 0
    for j in range(s):
        if v[j] != 0:
            lead = v[j]
            break
    t = inv[lead]
    for j in range(s):
        v[j] = mul[t, v[j]]
        if v[j] == 0:
            return ZERO_ENTRY, last, mask

    # G diag(v) G^T must vanish for i + j <= s - 2 and not on the antidiagonal
    for i in range(s):
        for j in range(i, s - i):
            acc = 0
            for c in range(s):
                a = G[i, c]
                b = G[j, c]
                if a != 0 and b != 0:
                    acc = add[acc, mul[mul[a, b], v[c]]]
            if i + j <= s - 2:
                if acc != 0:
                    return ORTHO_FAIL, last, mask
            elif acc == 0:
                return DEGENERATE, last, mask
    return DUAL, last, mask


@nb.njit(cache=True, parallel=True)
def _evaluate_batch(E, subsets, add, mul, neg, inv, status, last, mask, vecs, chunks):
    K, s = subsets.shape
    step = (K + chunks - 1) // chunks
    for t in nb.prange(chunks):
        G = np.empty((s, s), dtype=np.int64)
        B = np.empty((s, s), dtype=np.int64)
        piv = np.empty(s, dtype=np.int64)
        M = np.empty((max(s - 1, 1), s), dtype=np.int64)
        v = np.empty(s, dtype=np.int64)
        for k in range(t * step, min(K, (t + 1) * step)):
            st, la, mk = _evaluate(E, subsets[k], add, mul, neg, inv, G, B, piv, M, v)
            status[k] = st
            last[k] = la
            mask[k] = mk
            if st == DUAL:
                for j in range(s):
                    vecs[k, j] = v[j]


@nb.njit(cache=True)
def _colex_block(first, count, N):
    s = first.shape[0]
    out = np.empty((count, s), dtype=np.int64)
    c = first.copy()
    for k in range(count):
        out[k] = c
        # next combination in colex order
        i = 0
        while i < s - 1 and c[i] + 1 == c[i + 1]:
            i += 1
        c[i] += 1
        for j in range(i):
            c[j] = j
        if c[s - 1] >= N:
            return out[: k + 1]
    return out


def colex_unrank(rank: int, N: int, s: int) -> np.ndarray:
    """The ``rank``-th s-subset of range(N) in colex order."""
    out = np.empty(s, dtype=np.int64)
    r = rank
    hi = N
    for i in range(s, 0, -1):
        c = i - 1
        while c + 1 < hi and comb(c + 1, i) <= r:
            c += 1
        out[i - 1] = c
        r -= comb(c, i)
        hi = c
    return out


def colex_blocks(N: int, s: int, block: int = 1 << 16):
    total = comb(N, s)
    start = 0
    while start < total:
        count = min(block, total - start)
        yield start, _colex_block(colex_unrank(start, N, s), count, N)
        start += count


def set_threads(n: int | None) -> None:
    """Worker threads for batch evaluation; results never depend on it."""
    if n:
        nb.set_num_threads(max(1, min(int(n), nb.config.NUMBA_NUM_THREADS)))


class BatchResult:
    """Per-subset status, index of the last selected row, selected-row bitmask, dual vectors."""

    __slots__ = ("status", "last", "mask", "vectors")

    def __init__(self, status, last, mask, vectors):
        self.status = status
        self.last = last
        self.mask = mask
        self.vectors = vectors


def evaluate(E: np.ndarray, tables, subsets: np.ndarray) -> BatchResult:
    """Evaluate every row of ``subsets`` (sorted column indices) against matrix ``E``."""
    if E.shape[0] > 64:
        raise ValueError("at most 64 evaluation rows are supported by the row bitmask")
    subsets = np.ascontiguousarray(subsets, dtype=np.int64)
    K, s = subsets.shape
    status = np.empty(K, dtype=np.int8)
    last = np.empty(K, dtype=np.int64)
    mask = np.empty(K, dtype=np.uint64)
    vecs = np.zeros((K, s), dtype=np.int64)
    add, mul, neg, inv = tables
    chunks = max(1, min(nb.get_num_threads() * 4, K))
    _evaluate_batch(np.ascontiguousarray(E, dtype=np.int64), subsets, add, mul, neg, inv,
                    status, last, mask, vecs, chunks)
    return BatchResult(status, last, mask, vecs)
