"""Smith normal form over the integers, exact (Python ints throughout)."""

from __future__ import annotations

from collections.abc import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of ``matrix``.

    Returns ``min(rows, cols)`` non-negative integers ``d1 | d2 | ...``.
    """
    A = [[int(x) for x in row] for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (best is None or abs(A[i][j]) < best):
                    best, pivot = abs(A[i][j]), (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # pivot must divide the rest of the block
                bad = next(
                    (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad])]
                continue
            # move the smallest nonzero entry of row/column t into the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, i, j = min(cand)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith form (units included)."""
    return [d for d in smith_diagonal(matrix) if d]


def abelian_invariants(matrix: Sequence[Sequence[int]], ngens: int) -> tuple[int, ...]:
    """Invariant factors of ``Z^ngens / rowspace(matrix)``.

    Torsion factors ``> 1`` in divisibility order, followed by one ``0`` per
    free summand; the trivial group gives ``()``.
    """
    diag = smith_diagonal(matrix) if matrix else []
    nonzero = [d for d in diag if d]
    torsion = [d for d in nonzero if d != 1]
    return tuple(torsion + [0] * (ngens - len(nonzero)))
