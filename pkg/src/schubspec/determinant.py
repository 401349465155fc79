"""Exact determinants over Z and Z[zeta_k].

Both rings are integral domains with exact division (``//``), so the
fraction-free Bareiss elimination applies verbatim to either entry type.
"""

from __future__ import annotations

from itertools import permutations as _itpermutations
from typing import Sequence


def det_fraction_free(matrix: Sequence[Sequence]):
    """Determinant by fraction-free (Bareiss) elimination.

    Zero pivots are handled by row swaps with sign tracking; a column with no
    usable pivot makes the determinant zero.  Entries must support +, -, *
    and exact ``//``; the result has the same type as the entries.

    Symmetric input with nonzero pivots keeps its trailing blocks symmetric
    through the elimination, so only the upper triangle is updated then.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    rows = [list(row) for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    zero = rows[0][0] - rows[0][0]
    symmetric = all(
        rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n)
    )
    prev = None  # previous pivot; divisor is the identity on the first step
    sign = 1
    for k in range(n - 1):
        if rows[k][k] == zero:
            symmetric = False
            for swap in range(k + 1, n):
                if rows[swap][k] != zero:
                    rows[k], rows[swap] = rows[swap], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        pivot_row = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            lead = row[k]
            start = i if symmetric else k + 1
            if prev is None:
                for j in range(start, n):
                    row[j] = row[j] * pivot - lead * pivot_row[j]
            else:
                for j in range(start, n):
                    row[j] = (row[j] * pivot - lead * pivot_row[j]) // prev
            row[k] = zero
        if symmetric:
            for i in range(k + 1, n):
                for j in range(i + 1, n):
                    rows[j][i] = rows[i][j]
        prev = pivot
    result = rows[n - 1][n - 1]
    return result if sign == 1 else -result


def det_cofactor(matrix: Sequence[Sequence]):
    """Determinant by explicit signed permutation expansion.

    Exponential; kept as an independent cross-check oracle for small sizes.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    if n > 6:
        raise ValueError("cofactor oracle limited to n <= 6")
    total = matrix[0][0] - matrix[0][0]
    for perm in _itpermutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        term = matrix[0][perm[0]]
        for i in range(1, n):
            term = term * matrix[i][perm[i]]
        total = total + (term if inversions % 2 == 0 else -term)
    return total
