from __future__ import annotations

import random
from itertools import combinations
from math import comb

import numpy as np
import pytest

from agflag import _kernel
from agflag.curve import BUILTINS, builtin
from agflag.flag import build_flag, isometry_dual


def _colex_key(c):
    return tuple(reversed(c))


@pytest.mark.parametrize("N, s", [(5, 1), (6, 3), (9, 4), (7, 7)])
def test_colex_blocks_enumerate_everything_in_order(N, s):
    got = np.concatenate([blk for _, blk in _kernel.colex_blocks(N, s, block=5)])
    want = sorted(combinations(range(N), s), key=_colex_key)
    assert [tuple(r) for r in got.tolist()] == want


def test_colex_unrank_matches_blocks():
    N, s = 11, 4
    want = sorted(combinations(range(N), s), key=_colex_key)
    for r in (0, 1, 17, 200, comb(N, s) - 1):
        assert tuple(_kernel.colex_unrank(r, N, s).tolist()) == want[r]


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_kernel_matches_pure_path(name):
    m = builtin(name)
    rng = random.Random(7)
    g = m.genus
    subsets_by_size: dict[int, list[list[int]]] = {}
    for _ in range(120):
        s = rng.randint(1, m.N)
        subsets_by_size.setdefault(s, []).append(sorted(rng.sample(range(m.N), s)))
    for s, subs in subsets_by_size.items():
        M = m.eval_matrix(s + 2 * g - 1)
        res = _kernel.evaluate(np.array(M.entries, dtype=np.int64), m.field.tables(),
                               np.array(subs, dtype=np.int64))
        for k, cols in enumerate(subs):
            flag = build_flag(m, cols)
            v = isometry_dual(flag)
            assert (res.status[k] == _kernel.DUAL) == v.is_dual
            if v.is_dual:
                assert tuple(res.vectors[k].tolist()) == v.candidate
            rows = [j for j in range(len(M.rows)) if int(res.mask[k]) >> j & 1]
            assert tuple(M.pole_orders[j] for j in rows) == flag.nongaps
            assert M.pole_orders[res.last[k]] == flag.m


def test_thread_count_does_not_change_results():
    m = builtin("klein_f8")
    M = m.eval_matrix(6 + 5)
    E = np.array(M.entries, dtype=np.int64)
    subs = np.concatenate([blk for _, blk in _kernel.colex_blocks(m.N, 6)])[:20000]
    _kernel.set_threads(1)
    a = _kernel.evaluate(E, m.field.tables(), subs)
    _kernel.set_threads(4)
    b = _kernel.evaluate(E, m.field.tables(), subs)
    assert np.array_equal(a.status, b.status) and np.array_equal(a.mask, b.mask)


def test_too_many_rows():
    with pytest.raises(ValueError):
        _kernel.evaluate(np.zeros((65, 3), dtype=np.int64), builtin("rs_q8").field.tables(),
                         np.array([[0, 1, 2]]))
