"""Rational fitting and non-rationality certificates for truncated series.

A series is rational of type (M, N) when it equals P/Q with deg P <= M,
deg Q <= N and Q(0) = 1; equivalently its coefficients satisfy a linear
recurrence of length N from index M + 1 on.  The fitting routine solves for
that recurrence exactly over Q.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .conway import fibonacci, lucas, nabla_J
from .errors import UsageError
from .laurent import LaurentPoly
from .linalg import solve_q
from .series import RationalSeries, TruncatedSeries

VARIANTS = ("growth1", "growth2")


@dataclass(frozen=True)
class RationalFitBound:
    M: int
    N: int
    order: int | None = None

    def __post_init__(self):
        if self.M < 0 or self.N < 0:
            raise UsageError("degree bounds must be non-negative")
        if self.order is not None and self.order < self.M + self.N:
            raise UsageError(f"order {self.order} < M + N = {self.M + self.N}")

    @property
    def certification_order(self) -> int:
        return max(2 * self.M, self.N ** 2) + 1


def _recurrence_system(c, M, n, order):
    A, b = [], []
    for k in range(M + 1, order + 1):
        A.append([c[k - i] if k - i >= 0 else 0 for i in range(1, n + 1)])
        b.append(c[k])
    return A, b


def _prepare(s: TruncatedSeries, bound: RationalFitBound) -> TruncatedSeries:
    order = s.order if bound.order is None else bound.order
    if order > s.order:
        raise UsageError(f"bound order {order} exceeds the series order {s.order}")
    if order < bound.M + bound.N:
        raise UsageError(f"series order {order} < M + N = {bound.M + bound.N}")
    return s.truncate(order)


def _try_fit(s: TruncatedSeries, M: int, n: int):
    c = s.coeffs
    A, b = _recurrence_system(c, M, n, s.order)
    if n == 0:
        ok = not any(b)
        return ([] if ok else None), 0, (0 if ok else 1)
    if not A:
        return [Fraction(0)] * n, 0, 0
    return solve_q(A, b)


def fit_rational(s: TruncatedSeries, bound: RationalFitBound) -> RationalSeries | None:
    """Smallest-denominator fit ``P/Q`` of ``s`` within ``bound``, or None.

    Only integer fits are returned.  When the recurrence solution at the
    minimal length is not unique, the solution with free coefficients set to
    zero is tried.
    """
    s = _prepare(s, bound)
    for n in range(bound.N + 1):
        sol, _, _ = _try_fit(s, bound.M, n)
        if sol is None:
            continue
        if any(x.denominator != 1 for x in sol):
            continue
        q = [1] + [-int(x) for x in sol]
        Q = LaurentPoly.from_coeffs(q, s.var)
        prod = TruncatedSeries.from_poly(Q, s.order) * s
        if any(prod.coeffs[bound.M + 1:]):
            continue
        P = LaurentPoly.from_coeffs(prod.coeffs[: bound.M + 1], s.var)
        fit = RationalSeries(P, Q)
        if fit.series(s.order) != s:
            continue
        return fit
    return None


@dataclass(frozen=True)
class Certificate:
    """Outcome of a bounded rationality test."""

    M: int
    N: int
    order: int
    verdict: str
    rank: int
    rank_augmented: int
    reason: str = ""
    fit: RationalSeries | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        d = {
            "bound": {"M": self.M, "N": self.N},
            "order": self.order,
            "verdict": self.verdict,
            "rank": self.rank,
            "rank_augmented": self.rank_augmented,
        }
        if self.reason:
            d["reason"] = self.reason
        if self.fit is not None:
            d["fit"] = self.fit.to_json()
        return d


def certify_no_fit(s: TruncatedSeries, bound: RationalFitBound) -> Certificate:
    """Either a fit, or a certificate that no (M, N) fit matches ``s`` through its order.

    The witness is the rank pair of the length-N recurrence system: an
    inconsistent system has ``rank < rank_augmented``.  A consistent system
    whose solutions are not integral is reported with reason "non-integral".
    """
    s = _prepare(s, bound)
    need = bound.certification_order
    if s.order < need:
        raise UsageError(f"certification needs order >= {need}, got {s.order}")
    fit = fit_rational(s, RationalFitBound(bound.M, bound.N))
    sol, ra, rab = _try_fit(s, bound.M, bound.N)
    if fit is not None:
        return Certificate(bound.M, bound.N, s.order, "fit", ra, rab, fit=fit)
    reason = "inconsistent" if sol is None else "non-integral"
    return Certificate(bound.M, bound.N, s.order, "no-fit", ra, rab, reason)


# growth schedules -----------------------------------------------------------

def growth_f(variant: str, i: int) -> int:
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}")
    if i < 1:
        raise UsageError("i must be positive")
    if variant == "growth1":
        return i * i * (i + 3) ** 2
    return (i * i - i + 1) ** 2 + 1


@dataclass(frozen=True)
class StageData:
    index: int
    r: int
    P: LaurentPoly
    Q: LaurentPoly


def stage(variant: str, r: int, index: int = 0) -> StageData:
    """Stage fraction of the given variant at cover degree r."""
    if variant not in VARIANTS:
        raise UsageError(f"unknown variant {variant!r}")
    if r < 1:
        raise UsageError("r must be positive")
    z = LaurentPoly.gen("z")
    if variant == "growth1":
        sign = 1 if r % 2 else -1
        P = sign * z ** (r + 1) * lucas(r + 1)
    else:
        P = z ** r * fibonacci(r)
    return StageData(index, r, P, nabla_J(r))


@dataclass(frozen=True)
class Schedule:
    variant: str
    rs: tuple

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise UsageError(f"unknown variant {self.variant!r}")
        if not self.rs or any(r < 1 for r in self.rs):
            raise UsageError("schedule entries must be positive")

    def stages(self) -> list:
        return [stage(self.variant, r, i + 1) for i, r in enumerate(self.rs)]


@dataclass(frozen=True)
class ScheduleCheck:
    ok: bool
    first_violation: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def schedule_validate(s: Schedule, construction: bool = False) -> ScheduleCheck:
    """Check ``r_{i+1} >= f(r_i)`` and optionally that ``r_{i+1} / (3 r_i)`` is an integer > 1.

    ``first_violation`` is the 1-based index i of the failing pair.
    """
    rs = s.rs
    for i in range(len(rs) - 1):
        if rs[i + 1] <= rs[i]:
            return ScheduleCheck(False, i + 1, f"r_{i + 2} = {rs[i + 1]} is not larger than r_{i + 1}")
        bound = growth_f(s.variant, rs[i])
        if rs[i + 1] < bound:
            return ScheduleCheck(False, i + 1, f"r_{i + 2} = {rs[i + 1]} < f(r_{i + 1}) = {bound}")
        if construction:
            q, rem = divmod(rs[i + 1], 3 * rs[i])
            if rem or q <= 1:
                return ScheduleCheck(False, i + 1, f"r_{i + 2} / (3 r_{i + 1}) is not an integer > 1")
    return ScheduleCheck(True)


def _stage_series(st: StageData, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_poly(st.P, order) / TruncatedSeries.from_poly(st.Q, order)


def accumulate_product(stages, order: int, var: str = "z") -> TruncatedSeries:
    """Truncation of ``prod (1 + P_i / Q_i)``."""
    acc = TruncatedSeries.one(order, var)
    for st in stages:
        if st.P.min_degree() > order:
            continue
        acc = acc * (1 + _stage_series(st, order))
    return acc


def accumulate_sum(stages, order: int, var: str = "z") -> TruncatedSeries:
    """Truncation of ``sum P_i / Q_i``."""
    acc = TruncatedSeries([0], order, var)
    for st in stages:
        if st.P.min_degree() > order:
            continue
        acc = acc + _stage_series(st, order)
    return acc


@dataclass(frozen=True)
class DegreeBook:
    """Degree accumulators over stages ``1..i``: n = deg of the common denominator, m = deg of the numerator."""

    i: int
    n: int
    m: int

    @property
    def threshold(self) -> int:
        return max(2 * self.n, self.m ** 2) + 1


def degree_bookkeeping(variant: str, stages) -> DegreeBook:
    """Exact degrees of the partial product (growth1) or sum (growth2) written as one fraction."""
    stages = list(stages)
    n = sum(st.Q.degree() for st in stages)
    if variant == "growth1":
        m = sum((st.P + st.Q).degree() for st in stages)
    else:
        m = max(n - st.Q.degree() + st.P.degree() for st in stages)
    return DegreeBook(len(stages), n, m)


def full_bookkeeping(variant: str, i: int) -> DegreeBook:
    """Bookkeeping over all indices ``1..i``."""
    return degree_bookkeeping(variant, [stage(variant, r) for r in range(1, i + 1)])


def closed_form_bookkeeping(variant: str, i: int) -> DegreeBook:
    m = i * (i + 3) if variant == "growth1" else i * i - i + 1
    return DegreeBook(i, i * (i - 1), m)


def stage_divisibility(variant: str, r_prev: int, r_next: int) -> tuple:
    """``(valuation of P_{r_next}, threshold)`` where threshold uses the bookkeeping at ``r_prev``."""
    book = full_bookkeeping(variant, r_prev)
    P = stage(variant, r_next).P
    return P.min_degree(), book.threshold


# cautionary examples -------------------------------------------------------

def counterexample_product(order: int):
    """Truncated ``prod_{n>=1} (1 + (x^{n-1} - x^{n+1}) / (1 - x^{2n}))`` and its fit."""
    if order < 4:
        raise UsageError("order must be at least 4")
    acc = TruncatedSeries.one(order, "x")
    for n in range(1, order + 2):
        num = [0] * (order + 1)
        if n - 1 <= order:
            num[n - 1] += 1
        if n + 1 <= order:
            num[n + 1] -= 1
        den = [0] * (order + 1)
        den[0] = 1
        if 2 * n <= order:
            den[2 * n] = -1
        term = TruncatedSeries(num, order, "x") / TruncatedSeries(den, order, "x")
        acc = acc * (1 + term)
    return acc, fit_rational(acc, RationalFitBound(1, 1))


def mobius(n: int) -> int:
    if n < 1:
        raise UsageError("n must be positive")
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def mobius_coefficient(n: int) -> int:
    """``c_n = sum_{d | n} mu(d) 2^{n/d}``."""
    return sum(mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0)


def counterexample_mobius_sum(order: int):
    """Truncated ``sum_n c_n x^n / (1 - x^n)`` and its fit."""
    if order < 4:
        raise UsageError("order must be at least 4")
    c = [0] * (order + 1)
    for n in range(1, order + 1):
        cn = mobius_coefficient(n)
        for k in range(n, order + 1, n):
            c[k] += cn
    s = TruncatedSeries(c, order, "x")
    return s, fit_rational(s, RationalFitBound(1, 1))
