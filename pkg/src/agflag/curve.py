"""Built-in curve models and their evaluation matrices.

A model is a list of rational points (excluding the designated point Q), a
set of generator functions regular away from Q with known pole orders at Q,
and the table of generator values at every point. Monomials in the
generators give one function per pole order, which is all the flag
construction needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import gf
from .errors import ConfigParse, UnknownModel
from .gf import FieldSpec
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class Point:
    label: str
    coords: tuple[int, ...] = ()


@dataclass(frozen=True)
class MonomialFunction:
    exponents: tuple[int, ...]
    pole_order: int

    def name(self, generator_names: Sequence[str]) -> str:
        multi = any(len(g) > 1 for g in generator_names)
        parts = []
        for g, e in zip(generator_names, self.exponents):
            if e == 0:
                continue
            base = f"({g})" if multi and e > 1 else g
            parts.append(base if e == 1 else f"{base}^{e}")
        if not parts:
            return "1"
        return "*".join(parts) if multi else "".join(parts)


def canonical_exponents(pole_orders: Sequence[int], a: int) -> tuple[int, ...] | None:
    """Exponent vector of pole order ``a`` minimal in (e_k, ..., e_1) order."""

    @lru_cache(maxsize=None)
    def best(rest: int, j: int) -> tuple[int, ...] | None:
        # returns (e_j, ..., e_0) minimal lexicographically, or None
        if j < 0:
            return () if rest == 0 else None
        p = pole_orders[j]
        for e in range(rest // p + 1):
            sub = best(rest - e * p, j - 1)
            if sub is not None:
                return (e,) + sub
        return None

    found = best(a, len(pole_orders) - 1)
    return None if found is None else tuple(reversed(found))


@dataclass(frozen=True)
class EvaluationMatrix:
    field: FieldSpec
    rows: tuple[MonomialFunction, ...]
    columns: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]
    generator_names: tuple[str, ...] = ()
    semigroup: NumericalSemigroup | None = None

    @property
    def pole_orders(self) -> list[int]:
        return [r.pole_order for r in self.rows]

    def row_names(self) -> list[str]:
        return [r.name(self.generator_names) for r in self.rows]

    def restrict(self, column_indices: Sequence[int]) -> EvaluationMatrix:
        return EvaluationMatrix(
            self.field,
            self.rows,
            tuple(self.columns[i] for i in column_indices),
            tuple(tuple(row[i] for i in column_indices) for row in self.entries),
            self.generator_names,
            self.semigroup,
        )

    def to_json(self) -> dict:
        return {
            "rows": [{"function": n, "pole_order": r.pole_order}
                     for n, r in zip(self.row_names(), self.rows)],
            "columns": list(self.columns),
            "entries": [list(r) for r in self.entries],
        }

    def to_text(self) -> str:
        return format_matrix(self.field, self.entries, self.row_names(), list(self.columns))


def format_matrix(field: FieldSpec, entries, row_labels=None, col_labels=None) -> str:
    cells = [[field.format(x) for x in row] for row in entries]
    if col_labels is not None:
        cells.insert(0, list(col_labels))
    if row_labels is not None:
        labels = ([""] if col_labels is not None else []) + list(row_labels)
        cells = [[lab] + row for lab, row in zip(labels, cells)]
    if not cells:
        return ""
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


class CurveModel:
    def __init__(self, name: str, field: FieldSpec, points: Sequence[Point], generators: Sequence[str],
                 pole_orders: Sequence[int], values: Sequence[Sequence[int]], genus: int,
                 q_label: str = "Q", equation: str = ""):
        self.name = name
        self.field = field
        self.points = tuple(points)
        self.generators = tuple(generators)
        self.pole_orders = tuple(int(p) for p in pole_orders)
        self.values = tuple(tuple(int(v) for v in row) for row in values)
        self.genus = genus
        self.q_label = q_label
        self.equation = equation
        self.semigroup = (NumericalSemigroup.from_generators(self.pole_orders)
                          if self.pole_orders else NumericalSemigroup(()))
        self._validate()
        self._matrices: dict[int, EvaluationMatrix] = {}

    def _validate(self) -> None:
        if len(self.generators) != len(self.pole_orders) or len(self.values) != len(self.generators):
            raise ConfigParse("generator names, pole orders and value rows must align")
        for row in self.values:
            if len(row) != len(self.points):
                raise ConfigParse("every generator needs one value per point")
            if any(not 0 <= v < self.field.q for v in row):
                raise ConfigParse("generator value outside the field")
        if self.semigroup.genus != self.genus:
            raise ConfigParse(f"pole orders generate a semigroup of genus {self.semigroup.genus}, "
                              f"model declares {self.genus}")
        if len({p.label for p in self.points}) != len(self.points):
            raise ConfigParse("point labels must be distinct")

    @property
    def N(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.points]

    def index_of(self, label: str) -> int:
        for i, p in enumerate(self.points):
            if p.label == label:
                return i
        raise KeyError(f"{self.name} has no point {label!r}")

    def column_indices(self, columns: Iterable[str | int]) -> list[int]:
        """Indices in the model's global point order."""
        idx = {c if isinstance(c, int) else self.index_of(c) for c in columns}
        return sorted(idx)

    def monomial(self, a: int) -> MonomialFunction:
        e = canonical_exponents(self.pole_orders, a)
        if e is None:
            raise ValueError(f"{a} is a gap of the Weierstrass semigroup")
        return MonomialFunction(e, a)

    def evaluate(self, mono: MonomialFunction, point_index: int) -> int:
        F = self.field
        acc = 1
        for j, e in enumerate(mono.exponents):
            if e:
                acc = F.mul(acc, F.pow(self.values[j][point_index], e))
        return acc

    def eval_matrix(self, bound: int) -> EvaluationMatrix:
        if bound not in self._matrices:
            rows = [self.monomial(a) for a in self.semigroup.elements(bound)]
            entries = tuple(tuple(self.evaluate(r, i) for i in range(self.N)) for r in rows)
            self._matrices[bound] = EvaluationMatrix(self.field, tuple(rows), tuple(self.labels),
                                                     entries, self.generators, self.semigroup)
        return self._matrices[bound]

    def to_config(self) -> dict:
        F = self.field
        return {
            "name": self.name,
            "field": F.to_config() | {"symbol": F.symbol},
            "genus": self.genus,
            "q_label": self.q_label,
            "points": [{"label": p.label, "coords": list(p.coords)} for p in self.points],
            "generators": [
                {"name": g, "pole_order": p, "values": list(v)}
                for g, p, v in zip(self.generators, self.pole_orders, self.values)
            ],
        }

    @classmethod
    def from_config(cls, cfg: dict) -> CurveModel:
        try:
            F = FieldSpec.from_config(cfg["field"])
            points = [Point(str(p["label"]), tuple(F.parse(c) for c in p.get("coords", ())))
                      if isinstance(p, dict) else Point(str(p)) for p in cfg["points"]]
            gens = cfg["generators"]
            return cls(
                cfg.get("name", "custom"), F, points,
                [g["name"] for g in gens], [int(g["pole_order"]) for g in gens],
                [[F.parse(v) for v in g["values"]] for g in gens],
                int(cfg["genus"]) if "genus" in cfg else
                NumericalSemigroup.from_generators([int(g["pole_order"]) for g in gens]).genus,
                cfg.get("q_label", "Q"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ConfigParse):
                raise
            raise ConfigParse(f"bad curve-model config: {exc}") from exc

    @classmethod
    def from_file(cls, path: str | Path) -> CurveModel:
        try:
            cfg = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigParse(f"cannot read {path}: {exc}") from exc
        return cls.from_config(cfg)

    def __repr__(self) -> str:
        return f"CurveModel({self.name!r}, N={self.N}, g={self.genus}, pole_orders={self.pole_orders})"


# -- point search -----------------------------------------------------------

Poly2 = dict  # {(i, j): coefficient} meaning sum c * x^i * y^j = 0


def poly2_eval(field: FieldSpec, poly: Poly2, x: int, y: int) -> int:
    acc = 0
    for (i, j), c in poly.items():
        term = field.mul(field.parse(c), field.mul(field.pow(x, i), field.pow(y, j)))
        acc = field.add(acc, term)
    return acc


def affine_points_of(poly: Poly2, field: FieldSpec) -> list[tuple[int, int]]:
    """All (a, b) in F x F with poly(a, b) = 0, in field-enumeration order."""
    elems = field.enumerate_ints()
    return [(a, b) for a in elems for b in elems if poly2_eval(field, poly, a, b) == 0]


def _pt_label(F: FieldSpec, coords: Sequence[int]) -> str:
    return "(" + ",".join(F.format(c) for c in coords) + ")"


def _affine_model(name, F, poly, order_key, gens, pole_orders, genus, equation) -> CurveModel:
    pts = sorted(affine_points_of(poly, F), key=order_key)
    points = [Point(_pt_label(F, p), p) for p in pts]
    values = [[p[j] for p in pts] for j in range(len(gens))]
    return CurveModel(name, F, points, gens, pole_orders, values, genus, "Q", equation)


def _powers_then_zero(F: FieldSpec) -> Callable[[int], int]:
    def key(a: int) -> int:
        return F.q if a == 0 else F.log(a)
    return key


def _enumeration_order(F: FieldSpec) -> Callable[[int], int]:
    def key(a: int) -> int:
        return 0 if a == 0 else 1 + F.log(a)
    return key


def rs_q8() -> CurveModel:
    F = gf.FieldSpec(2, 3, [1, 1, 0, 1], symbol="a")
    xs = [F.exp(i) for i in range(7)] + [0]
    points = [Point(F.format(x), (x,)) for x in xs]
    return CurveModel("rs_q8", F, points, ["x"], [1], [xs], 0, "Q", "projective line")


def _hermitian2_poly() -> Poly2:
    # y^2 + y + x^3 = 0 in characteristic 2
    return {(0, 2): 1, (0, 1): 1, (3, 0): 1}


def hermitian_q2() -> CurveModel:
    F = gf.gf4()
    kx, ky = _powers_then_zero(F), _enumeration_order(F)
    return _affine_model("hermitian_q2", F, _hermitian2_poly(), lambda p: (kx(p[0]), ky(p[1])),
                         ["x", "y"], [2, 3], 1, "y^2 + y = x^3")


def hermitian_g1_q2() -> CurveModel:
    """Same curve as hermitian_q2, points ordered to match the genus-1 worked examples."""
    F = gf.gf4()
    a = F.primitive
    a2 = F.mul(a, a)
    order = [(0, 0), (0, 1), (a, a), (a2, a2), (1, a), (1, a2), (a, a2), (a2, a)]
    pts = affine_points_of(_hermitian2_poly(), F)
    assert sorted(pts) == sorted(order)
    points = [Point(_pt_label(F, p), p) for p in order]
    values = [[p[0] for p in order], [p[1] for p in order]]
    return CurveModel("hermitian_g1_q2", F, points, ["x", "y"], [2, 3], values, 1, "Q", "y^2 + y = x^3")


def hermitian_q3() -> CurveModel:
    F = gf.gf9()
    k = _enumeration_order(F)
    # y^3 + y - x^4 = 0
    poly = {(0, 3): 1, (0, 1): 1, (4, 0): -1}
    return _affine_model("hermitian_q3", F, poly, lambda p: (k(p[0]), k(p[1])),
                         ["x", "y"], [3, 4], 3, "y^3 + y = x^4")


def hyperelliptic_f7() -> CurveModel:
    F = gf.gf7()
    # y^2 - x^7 - x^6 + x = 0
    poly = {(0, 2): 1, (7, 0): -1, (6, 0): -1, (1, 0): 1}
    return _affine_model("hyperelliptic_f7", F, poly, lambda p: p,
                         ["x", "y"], [2, 7], 3, "y^2 = x^7 + x^6 - x")


HYPERELLIPTIC2_EQUATIONS = (
    "uv + uw + v^2 = 0",
    "u^3 + w^2 + w = 0",
    "u^3 + u^2 v + w x = 0",
    "u^3 + u^2 + u v^2 + x^2 + x = 0",
)


def hyperelliptic2_on_curve(u: int, v: int, w: int, x: int) -> bool:
    """Check the four affine equations over GF(2) (integers mod 2)."""
    eqs = (
        u * v + u * w + v * v,
        u ** 3 + w * w + w,
        u ** 3 + u * u * v + w * x,
        u ** 3 + u * u + u * v * v + x * x + x,
    )
    return all(e % 2 == 0 for e in eqs)


def hyperelliptic2_f2() -> CurveModel:
    F = gf.gf2()
    coords = {"P1": (0, 0, 0, 0), "P2": (0, 0, 0, 1), "P3": (0, 0, 1, 0)}
    points = [Point(k, v) for k, v in coords.items()]
    values = [[p.coords[j] for p in points] for j in range(4)]
    return CurveModel("hyperelliptic2_f2", F, points, ["u", "v", "w", "x"], [4, 5, 6, 7], values, 3,
                      "Q", "; ".join(HYPERELLIPTIC2_EQUATIONS))


# -- Klein quartic over GF(8) ------------------------------------------------

# (Y-exponent, Z-exponent) of P_i = (1 : w^a : w^b), a and b as printed; None means 1 = w^0.
_KLEIN_P = [
    (1, 0), (2, 0), (4, 0),
    (0, 1), (4, 1), (5, 1),
    (0, 2), (1, 2), (3, 2),
    (3, 3), (4, 3), (6, 3),
    (0, 4), (2, 4), (6, 4),
    (2, 5), (3, 5), (5, 5),
    (1, 6), (5, 6), (6, 6),
]

# Generator values (Z/X, YZ/X^2, Y^2Z/X^3) at Q' = (0:1:0) and Q'' = (1:0:0).
KLEIN_SPECIAL_VALUES = {"Q'": (0, 0, 1), "Q''": (0, 0, 0)}


def klein_form(F: FieldSpec, X: int, Y: int, Z: int) -> int:
    """X^3 Y + Y^3 Z + Z^3 X."""
    t1 = F.mul(F.pow(X, 3), Y)
    t2 = F.mul(F.pow(Y, 3), Z)
    t3 = F.mul(F.pow(Z, 3), X)
    return F.add(F.add(t1, t2), t3)


def klein_points(F: FieldSpec) -> dict[str, tuple[int, int, int]]:
    pts = {"Q'": (0, 1, 0), "Q''": (1, 0, 0)}
    for i, (a, b) in enumerate(_KLEIN_P, start=1):
        pts[f"P{i}"] = (1, F.exp(a), F.exp(b))
    return pts


def klein_generator_values(F: FieldSpec, P: tuple[int, int, int]) -> tuple[int, int, int]:
    """Evaluate Z/X, YZ/X^2, Y^2Z/X^3 at a curve point.

    Where X = 0 the curve relation X^3 Y = -(Y^3 Z + Z^3 X) rewrites each
    generator with a denominator Y^3 + Z^2 X that does not vanish there.
    """
    X, Y, Z = P
    if X:
        ix = F.inv(X)
        return (F.mul(Z, ix),
                F.mul(F.mul(Y, Z), F.pow(ix, 2)),
                F.mul(F.mul(F.pow(Y, 2), Z), F.pow(ix, 3)))
    den = F.add(F.pow(Y, 3), F.mul(F.pow(Z, 2), X))
    inv_den = F.inv(den)
    return (F.neg(F.mul(F.mul(F.pow(X, 2), Y), inv_den)),
            F.neg(F.mul(F.mul(X, F.pow(Y, 2)), inv_den)),
            F.neg(F.mul(F.pow(Y, 3), inv_den)))


def klein_f8() -> CurveModel:
    F = gf.gf8()
    pts = klein_points(F)
    points = [Point(lab, c) for lab, c in pts.items()]
    values = [[], [], []]
    for lab, c in pts.items():
        if lab in KLEIN_SPECIAL_VALUES:
            vals = KLEIN_SPECIAL_VALUES[lab]
        else:
            X, Y, Z = c
            vals = (Z, F.mul(Y, Z), F.mul(F.pow(Y, 2), Z))
        for j in range(3):
            values[j].append(vals[j])
    return CurveModel("klein_f8", F, points, ["Z/X", "YZ/X^2", "Y^2Z/X^3"], [3, 5, 7], values, 3,
                      "Q3", "X^3 Y + Y^3 Z + Z^3 X = 0")


BUILTINS: dict[str, Callable[[], CurveModel]] = {
    "rs_q8": rs_q8,
    "hermitian_q2": hermitian_q2,
    "hermitian_g1_q2": hermitian_g1_q2,
    "hermitian_q3": hermitian_q3,
    "hyperelliptic_f7": hyperelliptic_f7,
    "hyperelliptic2_f2": hyperelliptic2_f2,
    "klein_f8": klein_f8,
}

_cache: dict[str, CurveModel] = {}


def builtin(name: str, config: str | Path | None = None) -> CurveModel:
    """Look up a built-in model; ``custom`` loads from a JSON config path."""
    if name in ("custom", "custom-from-config"):
        if config is None:
            raise ConfigParse("custom model needs a config file")
        return CurveModel.from_file(config)
    if name not in BUILTINS:
        raise UnknownModel(f"unknown curve model {name!r}; choose from {sorted(BUILTINS)}")
    if name not in _cache:
        _cache[name] = BUILTINS[name]()
    return _cache[name]


def eval_matrix(model: CurveModel, pole_order_bound: int) -> EvaluationMatrix:
    return model.eval_matrix(pole_order_bound)
