"""Exact linear algebra over Q and over integral domains with exact division."""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def row_reduce(rows, ncols: int):
    """Reduced row echelon form over Q.

    Returns ``(rref_rows, pivot_columns)``.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                ri = m[i]
                rr = m[r]
                for k in range(c, len(rr)):
                    if rr[k]:
                        ri[k] -= f * rr[k]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank_q(rows, ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return len(row_reduce(rows, ncols)[1])


def solve_q(A, b):
    """Solve ``A x = b`` over Q.

    Returns ``(x, rank_A, rank_Ab)``; ``x`` is None when inconsistent and
    otherwise the solution with free variables set to zero.
    """
    n = len(A[0]) if A else 0
    aug = [list(r) + [bb] for r, bb in zip(A, b)]
    red, piv = row_reduce(aug, n + 1)
    rank_ab = len(piv)
    rank_a = len([p for p in piv if p < n])
    if rank_ab > rank_a:
        return None, rank_a, rank_ab
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = red[i][n]
    return x, rank_a, rank_ab


def rank_int(rows) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            row = m[i]
            top = m[rank]
            for k in range(c, ncols):
                row[k] = (piv * row[k] - f * top[k]) // prev
        prev = piv
        rank += 1
        if rank == len(m):
            break
    return rank


def _ediv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"{a} is not divisible by {b}")
        return q
    if isinstance(a, int):
        if isinstance(b, int) or not b.is_constant():
            if a == 0:
                return 0
            raise DomainError("constant divided by non-constant")
        return _ediv(a, b.constant_term())
    return a.exact_div(b)


def bareiss_det(matrix):
    """Determinant over an integral domain whose elements support exact division.

    Entries may be ints or LaurentPoly over a common variable list.
    """
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return 0 * m[0][0]
            m[k], m[p] = m[p], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = piv * m[i][j] - mik * m[k][j]
                m[i][j] = _ediv(num, prev) if not _is_one(prev) else num
            m[i][k] = 0 * piv
        prev = piv
    return m[n - 1][n - 1] * sign


def _is_one(x):
    return x == 1


def fraction_free_rank(rows) -> int:
    """Rank over the fraction field of a domain (ints or univariate LaurentPoly entries).

    Plain cross-multiplication elimination; no division is needed.
    """
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, len(m)):
            f = m[i][c]
            if not f:
                continue
            m[i] = [piv * m[i][k] - f * m[rank][k] for k in range(ncols)]
        rank += 1
        if rank == len(m):
            break
    return rank
