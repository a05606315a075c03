from __future__ import annotations

import json
from itertools import product

import pytest

from agflag import linalg
from agflag.curve import (BUILTINS, CurveModel, builtin, canonical_exponents, hyperelliptic2_on_curve,
                          klein_form, klein_generator_values, klein_points, poly2_eval)
from agflag.errors import ConfigParse, UnknownModel
from agflag.gf import gf8


@pytest.mark.parametrize("name, N, g", [
    ("rs_q8", 8, 0), ("hermitian_q2", 8, 1), ("hermitian_g1_q2", 8, 1), ("hermitian_q3", 27, 3),
    ("hyperelliptic_f7", 13, 3), ("hyperelliptic2_f2", 3, 3), ("klein_f8", 23, 3),
])
def test_builtin_sizes(name, N, g):
    m = builtin(name)
    assert (m.N, m.genus) == (N, g)
    assert m.semigroup.genus == g


def test_hermitian_points_on_curve():
    for name in ("hermitian_q2", "hermitian_g1_q2"):
        m = builtin(name)
        F = m.field
        for p in m.points:
            x, y = p.coords
            assert F.add(F.add(F.mul(y, y), y), F.pow(x, 3)) == 0
    m = builtin("hermitian_q3")
    F = m.field
    for p in m.points:
        x, y = p.coords
        assert F.add(F.pow(y, 3), y) == F.pow(x, 4)
    # every affine solution is present
    sols = sum(1 for x in range(F.q) for y in range(F.q) if F.add(F.pow(y, 3), y) == F.pow(x, 4))
    assert sols == 27


def test_hyperelliptic_points():
    m = builtin("hyperelliptic_f7")
    sols = [(x, y) for x in range(7) for y in range(7) if (y * y - x**7 - x**6 + x) % 7 == 0]
    assert sorted(p.coords for p in m.points) == sorted(sols)
    for p in builtin("hyperelliptic2_f2").points:
        assert hyperelliptic2_on_curve(*p.coords)
    affine = [c for c in product((0, 1), repeat=4) if hyperelliptic2_on_curve(*c)]
    assert len(affine) == 3


def test_klein_points():
    F = gf8()
    pts = klein_points(F)
    assert len(pts) == 23
    for P in pts.values():
        assert klein_form(F, *P) == 0
    # the projective Klein quartic has 24 rational points; the missing one is (0:0:1)
    proj = {(1, y, z) for y in range(8) for z in range(8)} | {(0, 1, z) for z in range(8)} | {(0, 0, 1)}
    on = {P for P in proj if klein_form(F, *P) == 0}
    assert len(on) == 24
    assert on - set(pts.values()) == {(0, 0, 1)}


def test_klein_generator_values_alternate_chart():
    # the X = 0 branch agrees with the direct formula after scaling the point
    F = gf8()
    for P in klein_points(F).values():
        X, Y, Z = P
        if X:
            s = F.primitive
            assert klein_generator_values(F, P) == klein_generator_values(
                F, (F.mul(s, X), F.mul(s, Y), F.mul(s, Z)))


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_eval_matrix_rank_is_riemann_roch(name):
    m = builtin(name)
    g = m.genus
    for a in range(max(2 * g - 1, 0), m.N):
        M = m.eval_matrix(a)
        dim = a + 1 - g if a >= 2 * g - 1 else len(M.rows)
        assert len(M.rows) == dim
        assert linalg.rank(m.field, M.entries) == dim  # a < N so evaluation is injective
        assert all(x == 1 for x in M.entries[0])


def test_canonical_exponents():
    assert canonical_exponents((3, 5, 7), 4) is None
    e = canonical_exponents((3, 5, 7), 13)
    assert sum(k * p for k, p in zip(e, (3, 5, 7))) == 13
    assert canonical_exponents((2, 7), 9) is not None


def test_config_roundtrip(tmp_path):
    m = builtin("klein_f8")
    path = tmp_path / "klein.json"
    path.write_text(json.dumps(m.to_config()))
    k = CurveModel.from_file(path)
    assert k.labels == m.labels and k.values == m.values and k.pole_orders == m.pole_orders
    assert builtin("custom", path).N == 23


def test_config_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigParse):
        CurveModel.from_file(bad)
    cfg = builtin("hermitian_q2").to_config()
    cfg["genus"] = 2
    with pytest.raises(ConfigParse):
        CurveModel.from_config(cfg)
    cfg = builtin("hermitian_q2").to_config()
    del cfg["points"]
    with pytest.raises(ConfigParse):
        CurveModel.from_config(cfg)
    with pytest.raises(UnknownModel):
        builtin("elliptic_q99")
    with pytest.raises(ConfigParse):
        builtin("custom")


def test_poly2_eval():
    m = builtin("hermitian_q3")
    F = m.field
    poly = {(0, 3): 1, (0, 1): 1, (4, 0): -1}
    assert all(poly2_eval(F, poly, *p.coords) == 0 for p in m.points)
