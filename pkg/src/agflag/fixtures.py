"""Printed reference objects, transcribed entry by entry.

Matrices are whitespace-separated tokens in the owning model's field
notation (``a^k`` or ``w^k`` for generator powers, small integers for
prime-field elements). GF(4)'s omega and omega-bar are written ``a`` and
``a^2``. Every fixture carries a ``where`` tag naming the display it was
copied from.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class MatrixFixture:
    where: str
    model: str
    columns: tuple[str, ...]
    rows: tuple[str, ...] = ()
    G: str = ""
    nongaps: tuple[int, ...] = ()
    v: str = ""
    product: str = ""
    notes: dict = field(default_factory=dict)


def _m(text: str) -> str:
    return "\n".join(line.strip() for line in text.strip().splitlines())


RS8 = MatrixFixture(
    where="GF(8) Reed-Solomon flag: G and G G^T displays",
    model="rs_q8",
    columns=("1", "a", "a^2", "a^3", "a^4", "a^5", "a^6", "0"),
    rows=("1", "x", "x^2", "x^3", "x^4", "x^5", "x^6", "x^7"),
    nongaps=(0, 1, 2, 3, 4, 5, 6, 7),
    G=_m("""
        1 1   1   1   1   1   1   1
        1 a   a^2 a^3 a^4 a^5 a^6 0
        1 a^2 a^4 a^6 a   a^3 a^5 0
        1 a^3 a^6 a^2 a^5 a   a^4 0
        1 a^4 a   a^5 a^2 a^6 a^3 0
        1 a^5 a^3 a   a^6 a^4 a^2 0
        1 a^6 a^5 a^4 a^3 a^2 a   0
        1 1   1   1   1   1   1   0
    """),
    v="1 1 1 1 1 1 1 1",
    product=_m("""
        0 0 0 0 0 0 0 1
        0 0 0 0 0 0 1 0
        0 0 0 0 0 1 0 0
        0 0 0 0 1 0 0 0
        0 0 0 1 0 0 0 0
        0 0 1 0 0 0 0 0
        0 1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
    """),
)

HERM4_FULL = MatrixFixture(
    where="GF(4) Hermitian flag: G and G G^T displays",
    model="hermitian_q2",
    columns=("(1,a)", "(1,a^2)", "(a,a)", "(a,a^2)", "(a^2,a)", "(a^2,a^2)", "(0,0)", "(0,1)"),
    rows=("1", "x", "y", "x^2", "xy", "x^3", "x^2y", "x^3y"),
    nongaps=(0, 2, 3, 4, 5, 6, 7, 9),
    G=_m("""
        1 1   1   1   1   1   1 1
        1 1   a   a   a^2 a^2 0 0
        a a^2 a   a^2 a   a^2 0 1
        1 1   a^2 a^2 a   a   0 0
        a a^2 a^2 1   1   a   0 0
        1 1   1   1   1   1   0 0
        a a^2 1   a   a^2 1   0 0
        a a^2 a   a^2 a   a^2 0 0
    """),
    v="1 1 1 1 1 1 1 1",
    product=_m("""
        0 0 0 0 0 0 0 1
        0 0 0 0 0 0 1 0
        0 0 0 0 0 1 0 1
        0 0 0 0 1 0 0 0
        0 0 0 1 0 0 1 0
        0 0 1 0 0 0 0 1
        0 1 0 0 1 0 0 0
        1 0 1 0 0 1 0 1
    """),
)

HERM4_REDUCED3 = MatrixFixture(
    where="GF(4) Hermitian flag reduced to three columns",
    model="hermitian_q2",
    columns=("(a,a)", "(a^2,a^2)", "(0,1)"),
    rows=("1", "x", "y"),
    nongaps=(0, 2, 3),
    G=_m("""
        1 1   1
        a a^2 0
        a a^2 1
    """),
    v="a^2 a 1",
    product=_m("""
        0 0 1
        0 1 1
        1 1 0
    """),
)

HERM9_FULL = MatrixFixture(
    where="GF(9) Hermitian full flag: geometric non-nongaps 1, 2, 5 and 27, 30, 31",
    model="hermitian_q3",
    columns=(),
    notes={"non_nongaps": (1, 2, 5, 27, 30, 31), "v": "all ones"},
)

G1_N3 = MatrixFixture(
    where="genus-1 Hermitian example, m = 3 and n = 3",
    model="hermitian_g1_q2",
    columns=("(0,1)", "(a,a)", "(a^2,a^2)"),
    rows=("1", "x", "y"),
    nongaps=(0, 2, 3),
    G=_m("""
        1 1 1
        0 a a^2
        1 a a^2
    """),
    v="1 a^2 a",
    product=_m("""
        0 0 1
        0 1 1
        1 1 0
    """),
)

G1_N2 = MatrixFixture(
    where="genus-1 Hermitian example, m = 3 and n = 2",
    model="hermitian_g1_q2",
    columns=("(0,0)", "(0,1)"),
    rows=("1", "y"),
    nongaps=(0, 3),
    G=_m("""
        1 1
        0 1
    """),
    v="1 1",
    product=_m("""
        0 1
        1 0
    """),
)

HERM9_M11 = MatrixFixture(
    where="GF(9) Hermitian example, m = 11 and n = 7",
    model="hermitian_q3",
    columns=("(0,a^2)", "(0,a^6)", "(1,2)", "(a,1)", "(a^3,1)", "(a^5,a^7)", "(a^7,a^5)"),
    rows=("1", "x", "y", "x^2", "xy", "y^2", "xy^2"),
    nongaps=(0, 3, 4, 6, 7, 8, 11),
    G=_m("""
        1   1   1 1   1   1   1
        0   0   1 a   a^3 a^5 a^7
        a^2 a^6 2 1   1   a^7 a^5
        0   0   1 a^2 a^6 a^2 a^6
        0   0   2 a   a^3 a^4 a^4
        a^4 a^4 1 1   1   a^6 a^2
        0   0   1 a   a^3 a^3 a
    """),
    v="1 1 2 a^7 a^5 a a^3",
    product=_m("""
        0 0 0 0 0 0 1
        0 0 0 0 0 1 0
        0 0 0 0 1 1 2
        0 0 0 1 1 0 1
        0 0 1 1 0 2 1
        0 1 1 0 2 1 0
        1 0 2 1 2 0 1
    """),
)

HERM9_M12 = MatrixFixture(
    where="GF(9) Hermitian example, m = 12 and n = 7",
    model="hermitian_q3",
    columns=("(1,a)", "(1,a^3)", "(1,2)", "(a,1)", "(a^3,1)", "(a^5,1)", "(a^7,1)"),
    rows=("1", "x", "y", "x^2", "y^2", "x^3", "x^4"),
    nongaps=(0, 3, 4, 6, 8, 9, 12),
    G=_m("""
        1   1   1 1   1   1   1
        1   1   1 a   a^3 a^5 a^7
        a   a^3 2 1   1   1   1
        1   1   1 a^2 a^6 a^2 a^6
        a^2 a^6 1 1   1   1   1
        1   1   1 a^3 a   a^7 a^5
        1   1   1 a^4 a^4 a^4 a^4
    """),
    v="a^5 a^7 2 a^2 a^6 a^7 a^5",
    product=_m("""
        0 0 0 0 0 0 1
        0 0 0 0 0 1 1
        0 0 0 0 1 0 1
        0 0 0 1 0 1 1
        0 0 1 0 1 0 1
        0 1 0 1 0 1 1
        1 1 1 1 1 1 0
    """),
)

HYPER2_EVAL = MatrixFixture(
    where="second hyperelliptic example: evaluation table of 1, u, v, w, x",
    model="hyperelliptic2_f2",
    columns=("P1", "P2", "P3"),
    rows=("1", "u", "v", "w", "x"),
    G=_m("""
        1 1 1
        0 0 0
        0 0 0
        0 0 1
        0 1 0
    """),
)

HYPER2_P13 = MatrixFixture(
    where="second hyperelliptic example: self-dual matrix on P1, P3, (n, m) = (2, 6)",
    model="hyperelliptic2_f2",
    columns=("P1", "P3"),
    rows=("1", "w"),
    nongaps=(0, 6),
    G=_m("""
        1 1
        0 1
    """),
    v="1 1",
)

KLEIN_D2 = MatrixFixture(
    where="Klein quartic, G_2 on Q', Q''",
    model="klein_f8",
    columns=("Q'", "Q''"),
    rows=("1", "Y^2Z/X^3"),
    nongaps=(0, 7),
    G=_m("""
        1 1
        1 0
    """),
)

KLEIN_D5 = MatrixFixture(
    where="Klein quartic, G_5 on Q', Q'', P1, P2, P3 and its dualizing vector",
    model="klein_f8",
    columns=("Q'", "Q''", "P1", "P2", "P3"),
    rows=("1", "Z/X", "YZ/X^2", "Y^2Z/X^3", "(YZ/X^2)^2"),
    nongaps=(0, 3, 5, 7, 10),
    G=_m("""
        1 1 1   1   1
        0 0 1   1   1
        0 0 w   w^2 w^4
        1 0 w^2 w^4 w
        0 0 w^2 w^4 w
    """),
    v="1 1 w w^2 w^4",
)

KLEIN_D8 = MatrixFixture(
    where="Klein quartic, G_8 on Q', Q'', P1..P6 and its dualizing vector",
    model="klein_f8",
    columns=("Q'", "Q''", "P1", "P2", "P3", "P4", "P5", "P6"),
    rows=("1", "Z/X", "YZ/X^2", "(Z/X)^2", "Y^2Z/X^3", "YZ^2/X^3", "(YZ/X^2)^2", "Y^2Z^3/X^5"),
    nongaps=(0, 3, 5, 6, 7, 8, 10, 13),
    G=_m("""
        1 1 1   1   1   1   1   1
        0 0 1   1   1   w   w   w
        0 0 w   w^2 w^4 w   w^5 w^6
        0 0 1   1   1   w^2 w^2 w^2
        1 0 w^2 w^4 w   w   w^2 w^4
        0 0 w   w^2 w^4 w^2 w^6 1
        0 0 w^2 w^4 w   w^2 w^3 w^5
        0 0 w^2 w^4 w   w^3 w^4 w^6
    """),
    v="1 1 w^6 1 w^2 w w^5 w^6",
)

KLEIN_D23_NONGAPS = (0, 3, 5) + tuple(range(6, 24)) + (25, 28)
KLEIN_SEMIGROUP_GENERATORS = (3, 5, 7)

# Admissible-pair tables: n -> {m: mark}; "*" found, "." in range but not found.
HERMITIAN_Q3_TABLE = {
    1: {0: "*"},
    2: {2: ".", 3: "*", 4: "*", 5: ".", 6: ".", 7: "."},
    3: {4: "*", 5: ".", 6: "*", 7: ".", 8: "*"},
    4: {6: ".", 7: "*", 8: ".", 9: "*"},
    5: {7: ".", 8: "*", 9: ".", 10: "."},
    6: {9: ".", 10: "*", 11: "*"},
    7: {11: "*", 12: "*"},
    8: {13: "*"},
}

HYPERELLIPTIC_F7_TABLE = {
    1: {0: "*"},
    2: {2: "*", 3: ".", 4: ".", 5: ".", 6: ".", 7: "*"},
    3: {4: "*", 5: ".", 6: ".", 7: ".", 8: "."},
    4: {6: "*", 7: ".", 8: ".", 9: "*"},
    5: {7: "*", 8: "*", 9: ".", 10: "."},
    6: {9: "*", 10: "*", 11: "*"},
    7: {11: ".", 12: "."},
    8: {13: "."},
}

KLEIN_F8_TABLE = {
    1: {0: "*"},
    2: {2: ".", 3: "*", 4: ".", 5: "*", 6: ".", 7: "*"},
    3: {4: ".", 5: "*", 6: "*", 7: "*", 8: "."},
    4: {6: ".", 7: "*", 8: "*", 9: "*"},
    5: {7: "*", 8: ".", 9: "*", 10: "*"},
    6: {9: ".", 10: ".", 11: "*"},
    7: {11: ".", 12: "*"},
    8: {13: "*"},
}

PAIR_TABLES = {
    "hermitian_q3": HERMITIAN_Q3_TABLE,
    "hyperelliptic_f7": HYPERELLIPTIC_F7_TABLE,
    "klein_f8": KLEIN_F8_TABLE,
}

# Boolean cube, m = 3: the matrix A and A A^T (rows and columns in DegLex order).
RM3_A = _m("""
    1 1 1 1 1 1 1 1
    0 1 0 0 1 1 0 1
    0 0 1 0 1 0 1 1
    0 0 0 1 0 1 1 1
    0 0 0 0 1 0 0 1
    0 0 0 0 0 1 0 1
    0 0 0 0 0 0 1 1
    0 0 0 0 0 0 0 1
""")
RM3_AAT = _m("""
    0 0 0 0 0 0 0 1
    0 0 0 0 0 0 1 1
    0 0 0 0 0 1 0 1
    0 0 0 0 1 0 0 1
    0 0 0 1 0 1 1 1
    0 0 1 0 1 0 1 1
    0 1 0 0 1 1 0 1
    1 1 1 1 1 1 1 1
""")
RM3_POINTS = ("000", "001", "010", "100", "011", "101", "110", "111")
RM3_SHARED_MINOR = (("000", "001", "010", "011"), ("000", "001", "010", "111"))
RM3_ROW_GROUPS = {
    ("1", "x2", "x3", "x2x3"): 2,
    ("1", "x1", "x3", "x1x3"): 4,
    ("1", "x1", "x2", "x1x2"): 8,
    ("1", "x1", "x2", "x3"): 8,
}
RM4_PIVOT_GROUPS = {
    ("x2x3x4",): 2,
    ("x1x3x4",): 4,
    ("x1x2x4",): 8,
    ("x1x2x3",): 16,
    ("x1x2x4", "x3x4"): 8,
    ("x1x2x3", "x3x4"): 16,
}
RM_COUNTS = {3: (4, 22), 4: (8, 54), 5: (16, 118)}
RM_HISTOGRAMS = {
    3: {0: 1, 2: 4, 4: 22, 6: 4, 8: 1},
    4: {0: 1, 4: 4, 8: 54, 12: 4, 16: 1},
    5: {0: 1, 8: 4, 16: 118, 24: 4, 32: 1},
}
RM_ORBIT_SIZES = {4: (2, 4, 8, 16, 8, 16), 5: (2, 4, 8, 16, 32, 8, 16, 32)}
