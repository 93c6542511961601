"""Products of a polynomial over all r-th roots of unity.

A polynomial in an auxiliary variable T with coefficients in a Laurent ring
is represented as a dict ``{T_exponent: coefficient}`` where coefficients are
ints or LaurentPoly over a common variable list.  The product
``prod_{j<r} g(zeta^j)`` is computed as a resultant with ``T^r - 1``.
"""
from __future__ import annotations

from math import gcd

from .errors import DomainError, UsageError
from .laurent import LaurentPoly
from .linalg import bareiss_det


def as_tpoly(g, t_var: str = "T") -> dict:
    """Normalize ``g`` to ``{T_exp: coefficient}``.

    Accepts a dict, or a LaurentPoly in which one variable is ``t_var``.
    """
    if isinstance(g, dict):
        return {int(k): v for k, v in g.items() if v}
    if isinstance(g, LaurentPoly):
        if t_var not in g.vars:
            return {0: g} if g else {}
        if g.vars == (t_var,):
            return {e[0]: c for e, c in g.items()}
        i = g.vars.index(t_var)
        other = tuple(v for v in g.vars if v != t_var)
        out: dict = {}
        for e, c in g.items():
            k = e[i]
            rest = tuple(x for j, x in enumerate(e) if j != i)
            out.setdefault(k, {})[rest] = c
        return {k: LaurentPoly(other, t) for k, t in out.items()}
    raise UsageError(f"cannot read a polynomial in {t_var} from {type(g).__name__}")


def _zero_like(coeffs):
    for c in coeffs:
        if isinstance(c, LaurentPoly):
            return LaurentPoly(c.vars)
    return 0


def sylvester_matrix(a: list, b: list):
    """Sylvester matrix of two polynomials given as ascending coefficient lists."""
    m, n = len(a) - 1, len(b) - 1
    zero = _zero_like(list(a) + list(b))
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(b)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant(a, b, t_var: str = "T"):
    """Resultant in T of two polynomials with no negative powers of T.

    Computed as the Sylvester determinant by Bareiss elimination.
    """
    a, b = as_tpoly(a, t_var), as_tpoly(b, t_var)
    if not a or not b:
        raise DomainError("resultant of a zero polynomial")
    if min(a) < 0 or min(b) < 0:
        raise UsageError("resultant needs polynomials without negative powers")
    zero = _zero_like(list(a.values()) + list(b.values()))
    al = [a.get(i, zero) for i in range(max(a) + 1)]
    bl = [b.get(i, zero) for i in range(max(b) + 1)]
    if len(al) == 1 and len(bl) == 1:
        return 1 + zero
    if len(al) == 1:
        return al[0] ** (len(bl) - 1)
    if len(bl) == 1:
        return bl[0] ** (len(al) - 1)
    return bareiss_det(sylvester_matrix(al, bl))


def roots_of_unity_product(g, r: int, t_var: str = "T"):
    """``prod_{j=0}^{r-1} g(zeta^j)`` for ``zeta = exp(2 pi i / r)``.

    Negative powers of T are cleared by writing ``g = T^{-k} h``; then the
    product equals ``(-1)^{(r+1) k} Res_T(T^r - 1, h)``.
    """
    if not isinstance(r, int) or r < 1:
        raise UsageError("r must be a positive integer")
    g = as_tpoly(g, t_var)
    if not g:
        return 0
    k = -min(min(g), 0)
    h = {e + k: c for e, c in g.items()}
    f = {0: -1, r: 1}
    res = resultant(f, h)
    return -res if (r + 1) * k % 2 else res


def _mobius(n: int) -> int:
    res = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    if n > 1:
        res = -res
    return res


def ramanujan_sum(r: int, k: int) -> int:
    """Sum of zeta^k over primitive r-th roots of unity."""
    g = gcd(k, r)
    return sum(_mobius(r // d) * d for d in range(1, g + 1) if g % d == 0)


def _euler_phi(r: int) -> int:
    return sum(1 for k in range(1, r + 1) if gcd(k, r) == 1)


def roots_of_unity_product_direct(g, r: int, t_var: str = "T"):
    """Reference implementation by expansion in Z[coeffs][T]/(T^r - 1).

    ``c(T) = prod_j g(T^j) mod (T^r - 1)`` has ``c(zeta) = c(zeta^a)`` for every
    unit ``a``, so the value is the average over primitive roots, which a
    Ramanujan sum evaluates exactly.
    """
    if not isinstance(r, int) or r < 1:
        raise UsageError("r must be a positive integer")
    g = as_tpoly(g, t_var)
    if not g:
        return 0
    zero = _zero_like(list(g.values()))
    acc = {0: 1 + zero}
    for j in range(r):
        factor: dict = {}
        for e, c in g.items():
            k = (e * j) % r
            factor[k] = factor.get(k, zero) + c
        nxt: dict = {}
        for e1, c1 in acc.items():
            for e2, c2 in factor.items():
                k = (e1 + e2) % r
                nxt[k] = nxt.get(k, zero) + c1 * c2
        acc = {k: v for k, v in nxt.items() if v}
    phi = _euler_phi(r)
    total = zero
    for k, c in acc.items():
        total = total + c * ramanujan_sum(r, k)
    if isinstance(total, int):
        q, rem = divmod(total, phi)
        assert rem == 0
        return q
    return total.exact_div(phi)
