"""Exact solver for integer linear systems modulo m.

Used to decide whether two root-of-unity cocycles differ by a coboundary:
that question is a linear system over Z/m, solved here by diagonalizing the
coefficient matrix with unimodular row and column operations (Smith-style
reduction, without the divisibility normalization that solving does not
need).  Everything is plain Python integers, so there is no overflow.
"""

from __future__ import annotations

from math import gcd


def solve_mod(rows: list[list[int]], rhs: list[int], m: int) -> list[int] | None:
    """Solve ``A x = rhs (mod m)`` for integer x, or return None if unsolvable.

    ``rows`` is a dense integer matrix.  Row operations are mirrored on the
    right-hand side, column operations are accumulated so a solution of the
    diagonal system can be pulled back.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if ncols == 0:
        return [] if all(v % m == 0 for v in rhs) else None
    A = [list(map(int, row)) for row in rows]
    b = [int(v) for v in rhs]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    k = 0
    limit = min(nrows, ncols)
    while k < limit:
        piv = _smallest_pivot(A, k, nrows, ncols)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            A[k], A[i0] = A[i0], A[k]
            b[k], b[i0] = b[i0], b[k]
        if j0 != k:
            for row in A:
                row[k], row[j0] = row[j0], row[k]
            for row in V:
                row[k], row[j0] = row[j0], row[k]
        clean = True
        pivot = A[k][k]
        for i in range(nrows):
            if i != k and A[i][k] != 0:
                q = A[i][k] // pivot
                if q:
                    Ak = A[k]
                    Ai = A[i]
                    for j in range(k, ncols):
                        Ai[j] -= q * Ak[j]
                    b[i] -= q * b[k]
                if A[i][k] != 0:
                    clean = False
        for j in range(ncols):
            if j != k and A[k][j] != 0:
                q = A[k][j] // pivot
                if q:
                    for row in A:
                        row[j] -= q * row[k]
                    for row in V:
                        row[j] -= q * row[k]
                if A[k][j] != 0:
                    clean = False
        if clean:
            k += 1

    y = [0] * ncols
    for i in range(nrows):
        d = A[i][i] if i < ncols else 0
        c = b[i] % m
        if d == 0:
            if c != 0:
                return None
            continue
        g = gcd(d, m)
        if c % g != 0:
            return None
        mm = m // g
        if mm > 1:
            y[i] = (c // g) * pow((d // g) % mm, -1, mm) % mm
    x = [sum(V[i][j] * y[j] for j in range(ncols)) % m for i in range(ncols)]
    return x


def _smallest_pivot(A, k, nrows, ncols):
    best = None
    piv = None
    for i in range(k, nrows):
        row = A[i]
        for j in range(k, ncols):
            v = row[j]
            if v != 0:
                a = abs(v)
                if best is None or a < best:
                    best, piv = a, (i, j)
                    if a == 1:
                        return piv
    return piv
