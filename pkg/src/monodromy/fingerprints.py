"""Exact conjugacy-class invariants of integer symplectic matrices."""

from __future__ import annotations

import numpy as np

from .smith import smith_diagonal


def charpoly(M) -> tuple[int, ...]:
    """Coefficients of ``det(xI - M)``, leading first (Faddeev-LeVerrier, exact)."""
    M = np.array(M, dtype=object)
    n = M.shape[0]
    coeffs = [1]
    N = np.identity(n, dtype=object)
    I = np.identity(n, dtype=object)
    for k in range(1, n + 1):
        AM = M.dot(N)
        c = -sum(AM[i, i] for i in range(n))
        assert c % k == 0
        c //= k
        coeffs.append(int(c))
        N = AM + c * I
    return tuple(coeffs)


def _sign_changes(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(S) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric integer matrix.

    The characteristic polynomial is real-rooted, so Descartes' rule of signs
    is exact.
    """
    p = list(charpoly(S))
    n = len(p) - 1
    zero = 0
    while p and p[-1] == 0:
        p.pop()
        zero += 1
    pos = _sign_changes(p)
    deg = len(p) - 1
    neg = _sign_changes([c * (-1) ** (deg - i) for i, c in enumerate(p)])
    assert pos + neg + zero == n
    return pos, neg, zero


def symplectic_class_fingerprint(M, genus: int) -> tuple:
    """Invariant of ``M`` under conjugation by integer symplectic matrices.

    Combines the characteristic polynomial (hence the trace), the Smith form
    of ``M - I``, and the inertia of the symmetric form ``J(M - I) + (M - I)^T J^T``.
    The last term separates positive from negative twists, which have the
    same trace and characteristic polynomial.
    """
    from .mcg import symplectic_form

    M = np.array(M, dtype=object)
    J = symplectic_form(genus)
    D = M - np.identity(2 * genus, dtype=object)
    B = J.dot(D)
    S = B + B.T
    return (charpoly(M), tuple(smith_diagonal(D.tolist())), inertia(S))
