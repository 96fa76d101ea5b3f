"""Small exact linear algebra over the rationals (Gram systems are tiny)."""

from __future__ import annotations

from fractions import Fraction


class SingularMatrix(Exception):
    pass


def solve(matrix, rhs_columns):
    """Solve M x = b exactly for each column b in ``rhs_columns``.

    ``matrix`` is a square list-of-rows of Fractions/ints.  Returns the list
    of solution vectors.  Raises SingularMatrix when M is singular.
    """
    n = len(matrix)
    k = len(rhs_columns)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(col[i]) for col in rhs_columns]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"singular at column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [[aug[i][n + j] for i in range(n)] for j in range(k)]


def determinant(matrix) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def is_negative_definite(matrix) -> bool:
    """Sylvester test: leading principal minors alternate, (-1)^k det_k > 0."""
    n = len(matrix)
    for k in range(1, n + 1):
        minor = [row[:k] for row in matrix[:k]]
        det = determinant(minor)
        if (-1) ** k * det <= 0:
            return False
    return True
