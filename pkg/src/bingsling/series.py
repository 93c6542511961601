"""Truncated integer power series and rational series P/Q."""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, UsageError
from .laurent import LaurentPoly


class TruncatedSeries:
    """Integer power series known through degree ``order``.

    Coefficients are stored densely for exponents ``0..order``.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, coeffs, order: int, var: str = "z"):
        if order < 0:
            raise UsageError("order must be non-negative")
        c = [int(x) for x in list(coeffs)[: order + 1]]
        c += [0] * (order + 1 - len(c))
        self.var = var
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def from_poly(cls, p: LaurentPoly, order: int) -> "TruncatedSeries":
        if len(p.vars) != 1:
            raise UsageError("series need a univariate polynomial")
        if p and p.min_degree() < 0:
            raise DomainError("negative exponents in a power series")
        c = [0] * (order + 1)
        for (e,), v in p.items():
            if e <= order:
                c[e] = v
        return cls(c, order, p.vars[0])

    @classmethod
    def one(cls, order: int, var: str = "z"):
        return cls([1], order, var)

    def __getitem__(self, k):
        if k < 0:
            return 0
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond order {self.order}")
        return self.coeffs[k]

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_coeffs(self.coeffs, self.var)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise UsageError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order, self.var)

    def _check(self, other):
        if isinstance(other, int):
            return TruncatedSeries([other], self.order, self.var)
        if isinstance(other, LaurentPoly):
            return TruncatedSeries.from_poly(other, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.var != self.var:
            raise UsageError(f"variable mismatch {self.var} vs {other.var}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        n = min(self.order, o.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)], n, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.var)

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([a * other for a in self.coeffs], self.order, self.var)
        o = self._check(other)
        if o is NotImplemented:
            return o
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = [0] * (n + 1)
        nz = [(i, x) for i, x in enumerate(a[: n + 1]) if x]
        for j, y in enumerate(b[: n + 1]):
            if y:
                for i, x in nz:
                    if i + j > n:
                        break
                    out[i + j] += x * y
        return TruncatedSeries(out, n, self.var)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DomainError("series is not invertible over the integers")
        n = self.order
        a = self.coeffs
        inv = [0] * (n + 1)
        inv[0] = c0
        for k in range(1, n + 1):
            s = sum(a[i] * inv[k - i] for i in range(1, k + 1) if a[i])
            inv[k] = -c0 * s
        return TruncatedSeries(inv, n, self.var)

    def __truediv__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.var, self.order, self.coeffs) == (other.var, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def agrees(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        """Coefficientwise equality through a common order."""
        n = min(self.order, other.order) if through is None else through
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order}, var={self.var!r})"

    def __str__(self):
        body = str(self.to_poly())
        return f"{body} + O({self.var}^{self.order + 1})"

    def to_json(self) -> dict:
        d = self.to_poly().to_json()
        d["order"] = self.order
        return d

    @classmethod
    def from_json(cls, obj) -> "TruncatedSeries":
        p = LaurentPoly.from_json(obj)
        return cls.from_poly(p, int(obj["order"]))


# dense univariate polynomials over Q, ascending coefficient lists
def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def qpoly_divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise DomainError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / b[-1]
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = _trim(a)
    return _trim(q), a


def qpoly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b:
        _, r = qpoly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [x / lead for x in a]


class RationalSeries:
    """Power series P/Q with integer polynomials, Q(0) = 1 and gcd(P, Q) = 1."""

    __slots__ = ("P", "Q")

    def __init__(self, P: LaurentPoly, Q: LaurentPoly, reduce: bool = True):
        if isinstance(P, int):
            P = LaurentPoly.const(P, Q.vars)
        if P.vars != Q.vars or len(Q.vars) != 1:
            raise UsageError("P and Q must be univariate in the same variable")
        if not Q:
            raise DomainError("zero denominator")
        if (P and P.min_degree() < 0) or Q.min_degree() < 0:
            raise DomainError("negative exponents in a rational series")
        q0 = Q.constant_term()
        if q0 not in (1, -1):
            raise DomainError("Q(0) must be a unit")
        if q0 == -1:
            P, Q = -P, -Q
        if reduce:
            P, Q = _reduce(P, Q)
        self.P = P
        self.Q = Q

    @property
    def var(self):
        return self.Q.vars[0]

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_poly(self.P, order) * TruncatedSeries.from_poly(self.Q, order).inverse()

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.P * other.Q == other.P * self.Q

    def __hash__(self):
        return hash((self.P, self.Q))

    def degrees(self):
        return (self.P.degree() if self.P else -1, self.Q.degree())

    def __repr__(self):
        return f"RationalSeries(P={self.P}, Q={self.Q})"

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "Q": self.Q.to_json()}


def _reduce(P, Q):
    if not P:
        return P, LaurentPoly.const(1, Q.vars)
    g = qpoly_gcd(P.coeff_list(), Q.coeff_list())
    if len(g) <= 1:
        return P, Q
    gq = g
    pq, r1 = qpoly_divmod(P.coeff_list(), gq)
    qq, r2 = qpoly_divmod(Q.coeff_list(), gq)
    if r1 or r2:
        raise DomainError("gcd does not divide")
    c = qq[0]
    pq = [x / c for x in pq]
    qq = [x / c for x in qq]
    if any(x.denominator != 1 for x in pq + qq):
        raise DomainError("reduced fraction does not have integer coefficients")
    var = Q.vars[0]
    return (LaurentPoly.from_coeffs([int(x) for x in pq], var),
            LaurentPoly.from_coeffs([int(x) for x in qq], var))
