"""
Dense matrices over Z[q, q^-1] as lists of rows of ``LaurentPoly``, and
fraction-free (Bareiss) solving that never leaves the ring.
"""

from __future__ import annotations

from .qlaurent import LaurentPoly, ONE, ZERO

Matrix = list[list[LaurentPoly]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity_matrix(k: int, scalar: LaurentPoly = ONE) -> Matrix:
    m = zeros(k, k)
    for i in range(k):
        m[i][i] = scalar
    return m


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k in range(inner):
            x = row[k]
            if not x:
                continue
            brow = b[k]
            orow = out[i]
            for j in range(cols):
                if brow[j]:
                    orow[j] = orow[j] + x * brow[j]
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: LaurentPoly) -> Matrix:
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def bareiss_solve(a: Matrix, b: Matrix) -> Matrix:
    """
    Solve ``a @ x = b`` for square nonsingular ``a`` over Z[q, q^-1].

    Runs fraction-free Gauss-Jordan elimination, which leaves ``det(a)`` on the
    diagonal and ``det(a) * x`` on the right. The final division must be exact;
    ``ArithmeticError`` means the solution is not integral.
    """
    k = len(a)
    if any(len(row) != k for row in a):
        raise ValueError("coefficient matrix must be square")
    width = len(b[0]) if b else 0
    m = [list(a[i]) + list(b[i]) for i in range(k)]
    prev = ONE
    for c in range(k):
        pivot = next((r for r in range(c, k) if m[r][c]), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        for r in range(k):
            if r == c:
                continue
            f = m[r][c]
            row = m[r]
            prow = m[c]
            for j in range(k + width):
                if j == c:
                    row[j] = ZERO
                    continue
                v = p * row[j] - f * prow[j]
                row[j] = v.divmod_exact(prev) if v else ZERO
        prev = p
    det = m[k - 1][k - 1] if k else ONE
    # Gauss-Jordan with Bareiss leaves every diagonal entry equal to det
    return [[m[r][k + j].divmod_exact(det) if m[r][k + j] else ZERO
             for j in range(width)] for r in range(k)]
