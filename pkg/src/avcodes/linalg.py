"""Small dense linear algebra over GF(q) on raw int entries."""

from __future__ import annotations

from .gf import FieldSpec


def row_echelon(F: FieldSpec, rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv[M[r][c]]
        M[r] = [F.mul(inv, v) for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                k = F.neg[M[i][c]]
                M[i] = [F.add(a, F.mul(k, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(F: FieldSpec, rows) -> int:
    return len(row_echelon(F, rows)[1])


def solve(F: FieldSpec, A, b):
    """Solve A x = b.  Returns (x, unique) or (None, False) when inconsistent.

    When the system is underdetermined a particular solution with free
    variables set to zero is returned and ``unique`` is False.
    """
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots = row_echelon(F, aug)
    if n in pivots:
        return None, False
    x = [0] * n
    for row, c in zip(M, pivots):
        x[c] = row[n]
    return x, len(pivots) == n
