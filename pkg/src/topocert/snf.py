"""Smith normal form over the integers, with transform matrices.

Plain Python integers throughout; no modular shortcuts, no overflow.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def _identity(k: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    rows, inner = len(a), (len(a[0]) if a else 0)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def _check_rect(mat: Sequence[Sequence[int]]) -> Tuple[int, int]:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    for r in mat:
        if len(r) != cols:
            raise ValueError("matrix rows must all have the same length")
    return rows, cols


def smith_normal_form(mat: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U @ mat @ V == D.

    U and V are unimodular, D is diagonal with nonnegative entries satisfying
    d1 | d2 | ... .  The identity is re-verified before returning.
    """
    rows, cols = _check_rect(mat)
    D = [[int(x) for x in r] for r in mat]
    U = _identity(rows)
    V = _identity(cols)

    def row_sub(i, t, q):  # row_i -= q * row_t
        if q:
            D[i] = [a - q * b for a, b in zip(D[i], D[t])]
            U[i] = [a - q * b for a, b in zip(U[i], U[t])]

    def row_add(t, i):  # row_t += row_i
        D[t] = [a + b for a, b in zip(D[t], D[i])]
        U[t] = [a + b for a, b in zip(U[t], U[i])]

    def col_sub(j, t, q):  # col_j -= q * col_t
        if q:
            for r in D:
                r[j] -= q * r[t]
            for r in V:
                r[j] -= q * r[t]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    def min_abs_pos(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = D[i][j]
                if x and (best is None or abs(x) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = min_abs_pos(t)
        if pos is None:
            break
        while True:
            if pos != (t, t):
                if pos[0] != t:
                    swap_rows(pos[0], t)
                if pos[1] != t:
                    swap_cols(pos[1], t)
            if D[t][t] < 0:
                negate_row(t)
            # clear column t, then row t; a nonzero remainder is a smaller
            # pivot, so swap it in and restart
            dirty = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    row_sub(i, t, D[i][t] // D[t][t])
                    if D[i][t]:
                        swap_rows(i, t)
                        dirty = True
                        break
            if dirty:
                pos = (t, t)
                continue
            for j in range(t + 1, cols):
                if D[t][j]:
                    col_sub(j, t, D[t][j] // D[t][t])
                    if D[t][j]:
                        swap_cols(j, t)
                        dirty = True
                        break
            if dirty:
                pos = (t, t)
                continue
            # pivot must divide the rest of the submatrix for the chain
            viol = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if D[i][j] % D[t][t]:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            row_add(t, viol)
            pos = (t, t)
        t += 1

    check = matmul(matmul(U, [list(r) for r in mat]), V)
    if check != D:
        raise AssertionError("smith normal form bookkeeping failed")
    diag = diagonal(D)
    for a, b in zip(diag, diag[1:]):
        if b and (a == 0 or b % a):
            raise AssertionError("divisor chain violated")
    return U, D, V


def diagonal(D: Sequence[Sequence[int]]) -> List[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
