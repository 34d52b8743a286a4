"""Exact linear algebra over a prime field Z/pZ on int64 numpy arrays.

Entries live in ``[0, p)`` with ``p < 2**31`` so a product of two entries
fits in int64 before reduction.
"""

from __future__ import annotations

import numpy as np

MAX_PRIME = 2**31


def _check_prime_size(p: int) -> None:
    if not 2 <= p < MAX_PRIME:
        raise ValueError(f"prime {p} outside [2, 2**31)")


def row_echelon_mod_p(M: np.ndarray, p: int, stop_at: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Gaussian elimination mod p with first-nonzero pivoting.

    Returns the reduced rows (pivot rows normalized to 1, only the first
    ``rank`` rows meaningful) and the pivot columns. Elimination stops
    early once ``stop_at`` pivots are found.
    """
    _check_prime_size(p)
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    limit = min(rows, cols) if stop_at is None else min(rows, cols, stop_at)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= limit:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.flatnonzero(A[r + 1:, c])
        if below.size:
            f = A[below, c][:, None]
            A[below, c:] = (A[below, c:] - f * A[r, c:]) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(M: np.ndarray, p: int, stop_at: int | None = None) -> int:
    """Rank of ``M`` over Z/pZ.

    Eliminates along the shorter side. With ``stop_at`` the result is
    ``min(rank, stop_at)``.
    """
    A = np.asarray(M)
    if A.size == 0:
        return 0
    if A.shape[1] > A.shape[0]:
        A = A.T
    return len(row_echelon_mod_p(A, p, stop_at)[1])


def row_basis_mod_p(M: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the same subspace as the rows of ``M`` over Z/pZ."""
    A, piv = row_echelon_mod_p(M, p)
    return A[: len(piv)]
