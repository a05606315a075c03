"""Exact Gaussian elimination over a :class:`FieldSpec`.

Matrices are lists of rows of integer field encodings. Pivoting is
deterministic: the first nonzero column of each new row.
"""

from __future__ import annotations

from typing import Sequence

from .gf import FieldSpec

Matrix = list[list[int]]


class EchelonBasis:
    """Incrementally grown row-echelon basis with unit pivots.

    Each stored vector is reduced against all earlier ones, so reducing a
    new vector in insertion order clears every pivot column.
    """

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: Matrix = []
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        F = self.field
        v = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                for j in range(piv, self.ncols):
                    if row[j]:
                        v[j] = F.sub(v[j], F.mul(c, row[j]))
        return v

    def add(self, vec: Sequence[int]) -> bool:
        """Insert ``vec`` if independent; return whether it was inserted."""
        v = self.reduce(vec)
        for piv, x in enumerate(v):
            if x:
                break
        else:
            return False
        F = self.field
        s = F.inv(v[piv])
        self.rows.append([F.mul(s, x) for x in v])
        self.pivots.append(piv)
        return True


def greedy_independent(field: FieldSpec, rows: Sequence[Sequence[int]], limit: int | None = None) -> list[int]:
    """Indices of rows that are independent of all rows above them."""
    if not rows:
        return []
    basis = EchelonBasis(field, len(rows[0]))
    chosen = []
    cap = len(rows[0]) if limit is None else limit
    for i, r in enumerate(rows):
        if basis.add(r):
            chosen.append(i)
            if len(chosen) == cap:
                break
    return chosen


def rref(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    F = field
    M = [list(r) for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        s = F.inv(M[r][c])
        M[r] = [F.mul(s, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return len(rref(field, rows)[1])


def kernel(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of the right kernel {v : rows . v = 0}."""
    F = field
    if not rows:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(F, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return basis


def matmul(field: FieldSpec, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    F = field
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = F.add(acc, F.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*A)]


def scale_columns(field: FieldSpec, A: Sequence[Sequence[int]], v: Sequence[int]) -> Matrix:
    return [[field.mul(x, s) for x, s in zip(row, v)] for row in A]


def gram(field: FieldSpec, G: Sequence[Sequence[int]], v: Sequence[int]) -> Matrix:
    """G . diag(v) . G^T."""
    return matmul(field, scale_columns(field, G, v), transpose(G))


def determinant(field: FieldSpec, A: Sequence[Sequence[int]]) -> int:
    F = field
    M = [list(r) for r in A]
    n = len(M)
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        s = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = F.mul(M[i][c], s)
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return det
