"""The ring Z[u, v, w] / (w^2 + uvw - u^2 - v^2 - 4) and reduced potentials.

With ``u = x - 1/x``, ``v = y - 1/y`` and ``w = x/y + y/x``, every symmetric
potential of a two-component link has a unique w-linear representative in
which ``u^i v^j`` occurs only for ``i = j != lam (mod 2)`` and ``u^i v^j w``
only for ``i = j = lam (mod 2)``, where ``lam`` is the parity of the linking
number.  Elements may be truncated at a total (u, v)-degree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, LibraryDefect, UsageError
from .laurent import LaurentPoly
from .linalg import rank_int, solve_q
from .series import TruncatedSeries

XY = ("x", "y")


def _legal(lam, i, j, k):
    if (i - j) % 2:
        return False
    return (i % 2 == lam % 2) if k else (i % 2 != lam % 2)


class WElement:
    """Canonical element ``sum a[i,j,k] u^i v^j w^k`` with ``k`` in {0, 1}.

    ``order`` is None for exact elements; otherwise only terms with
    ``i + j <= order`` are meaningful.
    """

    __slots__ = ("lam", "terms", "order")

    def __init__(self, lam: int, terms=None, order: int | None = None, check: bool = True):
        self.lam = lam % 2
        self.order = order
        t = {}
        for (i, j, k), c in (terms or {}).items():
            k = int(bool(k))
            if not c:
                continue
            if i < 0 or j < 0:
                raise UsageError("negative exponent in a w-element")
            if order is not None and i + j > order:
                continue
            if check and not _legal(self.lam, i, j, k):
                raise LibraryDefect(f"term u^{i} v^{j} w^{k} is not legal for parity {self.lam}")
            t[(i, j, k)] = t.get((i, j, k), 0) + c
        self.terms = {key: c for key, c in t.items() if c}

    @classmethod
    def one(cls, order=None):
        return cls(1, {(0, 0, 0): 1}, order)

    @classmethod
    def monomial(cls, i: int, j: int, k: int = 0, c: int = 1, order=None):
        """``c u^i v^j w^k`` with the parity inferred; needs ``i = j (mod 2)``."""
        if (i - j) % 2:
            raise UsageError("u^i v^j needs i and j of equal parity")
        lam = i % 2 if k else (i + 1) % 2
        return cls(lam, {(i, j, k): c}, order)

    @classmethod
    def w(cls, order=None):
        return cls.monomial(0, 0, 1, order=order)

    def coeff(self, i, j, k=0) -> int:
        return self.terms.get((i, j, int(bool(k))), 0)

    def _combine_order(self, other):
        if self.order is None:
            return other.order
        if other.order is None:
            return self.order
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, int):
            other = WElement(1, {(0, 0, 0): other}, self.order)
        if not isinstance(other, WElement):
            return NotImplemented
        if other.terms and self.terms and other.lam != self.lam:
            raise UsageError("cannot add elements of different parity")
        lam = self.lam if self.terms else other.lam
        t = dict(self.terms)
        for key, c in other.terms.items():
            t[key] = t.get(key, 0) + c
        return WElement(lam, t, self._combine_order(other))

    __radd__ = __add__

    def __neg__(self):
        return WElement(self.lam, {k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return WElement(self.lam, {k: c * other for k, c in self.terms.items()}, self.order)
        if not isinstance(other, WElement):
            return NotImplemented
        return w_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = WElement(1, {(0, 0, 0): other}, self.order)
        if not isinstance(other, WElement):
            return NotImplemented
        if self.order != other.order:
            return False
        if self.terms != other.terms:
            return False
        return not self.terms or self.lam == other.lam

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def truncate(self, order: int) -> "WElement":
        if self.order is not None and order > self.order:
            raise UsageError(f"cannot extend order {self.order} to {order}")
        return WElement(self.lam, self.terms, order)

    def specialize(self, order: int | None = None, var: str = "z") -> TruncatedSeries:
        """Substitute ``u = v = z`` and ``w = 2``."""
        n = self.order if order is None else order
        if n is None:
            raise UsageError("an order is needed for an exact element")
        if self.order is not None and n > self.order:
            raise UsageError("order exceeds the known truncation")
        c = [0] * (n + 1)
        for (i, j, k), a in self.terms.items():
            if i + j <= n:
                c[i + j] += a * (2 if k else 1)
        return TruncatedSeries(c, n, var)

    def component(self, i: int, k: int, var: str = "v") -> TruncatedSeries:
        """Coefficient of ``u^i w^k`` as a series in v."""
        if self.order is None:
            js = [j for (a, j, b) in self.terms if a == i and b == k]
            n = max(js, default=0)
        else:
            n = self.order - i
            if n < 0:
                raise UsageError("component beyond the truncation order")
        c = [0] * (n + 1)
        for (a, j, b), x in self.terms.items():
            if a == i and b == k and j <= n:
                c[j] = x
        return TruncatedSeries(c, n, var)

    def __repr__(self):
        return f"WElement(lam={self.lam}, terms={dict(sorted(self.terms.items()))}, order={self.order})"

    def __str__(self):
        if not self.terms:
            s = "0"
        else:
            parts = []
            for (i, j, k), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
                mono = "*".join(p for p in (
                    "u" if i == 1 else f"u^{i}" if i else "",
                    "v" if j == 1 else f"v^{j}" if j else "",
                    "w" if k else "") if p)
                if not mono:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
            s = " + ".join(parts).replace("+ -", "- ")
        return s if self.order is None else f"{s} + O({self.order + 1})"

    def to_json(self) -> dict:
        d = {
            "lambda": self.lam,
            "terms": [{"i": i, "j": j, "w": bool(k), "c": str(c)} for (i, j, k), c in sorted(self.terms.items())],
        }
        if self.order is not None:
            d["order"] = self.order
        return d

    @classmethod
    def from_json(cls, obj) -> "WElement":
        terms = {}
        for t in obj["terms"]:
            key = (int(t["i"]), int(t["j"]), 1 if t.get("w") else 0)
            terms[key] = terms.get(key, 0) + int(t["c"])
        return cls(int(obj["lambda"]), terms, obj.get("order"))


def w_mul(a: WElement, b: WElement) -> WElement:
    """Product reduced by ``w^2 = u^2 + v^2 + 4 - uvw``."""
    order = a._combine_order(b)
    lam = (a.lam + b.lam + 1) % 2
    t: dict = {}

    def put(key, c):
        if order is None or key[0] + key[1] <= order:
            t[key] = t.get(key, 0) + c

    for (i1, j1, k1), c1 in a.terms.items():
        for (i2, j2, k2), c2 in b.terms.items():
            i, j, c = i1 + i2, j1 + j2, c1 * c2
            if order is not None and i + j > order:
                continue
            if k1 + k2 < 2:
                put((i, j, k1 + k2), c)
            else:
                put((i + 2, j, 0), c)
                put((i, j + 2, 0), c)
                put((i, j, 0), 4 * c)
                put((i + 1, j + 1, 1), -c)
    return WElement(lam, t, order)


_POW_CACHE: dict = {}


def _uv_image(i, j, k) -> LaurentPoly:
    key = (i, j, k)
    if key not in _POW_CACHE:
        x = LaurentPoly.gen("x", XY)
        y = LaurentPoly.gen("y", XY)
        p = (x - x ** -1) ** i * (y - y ** -1) ** j
        if k:
            p = p * (x * y ** -1 + x ** -1 * y)
        _POW_CACHE[key] = p
    return _POW_CACHE[key]


def w_to_omega(e: WElement) -> LaurentPoly:
    """Expand back into ``(x, y)``."""
    if e.order is not None:
        raise UsageError("cannot expand a truncated series")
    out = LaurentPoly(XY)
    for key, c in e.terms.items():
        out = out + _uv_image(*key) * c
    return out


def legal_monomials(lam: int, max_i: int, max_j: int):
    return [(i, j, k) for i in range(max_i + 1) for j in range(max_j + 1) for k in (0, 1)
            if _legal(lam, i, j, k)]


def omega_to_w(omega: LaurentPoly, lk: int) -> WElement:
    """Unique parity-legal w-linear representative of a potential.

    Solved exactly on the monomial window spanned by the support of the
    potential; raises DomainError when no representative exists.
    """
    if omega.vars != XY:
        raise UsageError("potential must be in (x, y)")
    lam = lk % 2
    if not omega:
        return WElement(lam)
    if omega.evaluate({"x": 1, "y": 1}) != lk:
        raise UsageError("linking number does not match the potential at (1, 1)")
    X = max(abs(e[0]) for e, _ in omega.items())
    Y = max(abs(e[1]) for e, _ in omega.items())
    cols = legal_monomials(lam, X, Y)
    images = [_uv_image(*c) for c in cols]
    rows = sorted(set().union(*[set(p.terms) for p in images], set(omega.terms)))
    index = {e: n for n, e in enumerate(rows)}
    A = [[0] * len(cols) for _ in rows]
    for col, p in enumerate(images):
        for e, c in p.items():
            A[index[e]][col] = c
    b = [omega.coeff(e) for e in rows]
    x, rank_a, _ = solve_q(A, b)
    if x is None:
        raise DomainError("potential has no w-linear representative (symmetry violated?)")
    if rank_a != len(cols):
        raise LibraryDefect("monomial images are linearly dependent")
    if any(v.denominator != 1 for v in x):
        raise DomainError("representative has non-integer coefficients")
    return WElement(lam, {c: int(v) for c, v in zip(cols, x) if v})


def monomial_image_rank(total_degree: int) -> tuple:
    """``(rank, count)`` of the images of all monomials ``u^i v^j w^k`` with ``i + j <= total_degree``.

    Both parities are included; equality of the two numbers means the
    images are linearly independent.
    """
    cols = [(i, j, k) for i in range(total_degree + 1) for j in range(total_degree + 1 - i)
            for k in (0, 1) if (i - j) % 2 == 0]
    images = [_uv_image(*c) for c in cols]
    rows = sorted(set().union(*[set(p.terms) for p in images]))
    index = {e: n for n, e in enumerate(rows)}
    A = [[0] * len(cols) for _ in rows]
    for col, p in enumerate(images):
        for e, c in p.items():
            A[index[e]][col] = c
    return rank_int(A), len(cols)


def _series_as_w(s: TruncatedSeries, which: str, order: int) -> WElement:
    t = {}
    for n, c in enumerate(s.coeffs):
        if c and n <= order:
            t[(n, 0, 0) if which == "u" else (0, n, 0)] = c
    return WElement(1, t, order)


def reduced_w(omega_w: WElement, nabla1: LaurentPoly, nabla2: LaurentPoly, order: int) -> WElement:
    """``omega_w / (nabla1(u) nabla2(v))`` as a w-series through total degree ``order``."""
    for nab in (nabla1, nabla2):
        if nab.constant_term() not in (1, -1):
            raise DomainError("Conway polynomial of a component must have unit constant term")
        if any(e[0] % 2 for e, _ in nab.items()):
            raise DomainError("Conway polynomial of a knot must be even")
    inv1 = TruncatedSeries.from_poly(nabla1, order).inverse()
    inv2 = TruncatedSeries.from_poly(nabla2, order).inverse()
    base = omega_w.truncate(order) if omega_w.order is None else omega_w.truncate(min(order, omega_w.order))
    return base * _series_as_w(inv1, "u", order) * _series_as_w(inv2, "v", order)


def reduced_potential(L, order: int) -> WElement:
    """Reduced w-series of a LinkData record with component data."""
    if not L.component_nablas:
        raise UsageError("link has no component Conway polynomials")
    return reduced_w(omega_to_w(L.potential, L.lk), L.component_nablas[0], L.component_nablas[1], order)


@dataclass(frozen=True)
class PkExpansion:
    """Coefficient series ``P_k`` (argument ``v^2``) of a reduced w-series."""

    lam: int
    P: tuple

    @property
    def cochran(self) -> TruncatedSeries:
        return self.P[1]


def pk_expand(R: WElement, k_max: int) -> PkExpansion:
    """Split ``R`` into ``sum u^k (v w)^{...} P_k(v^2)``.

    For odd parity: ``R = sum u^{2i} P_{2i}(v^2) + w sum u^{2i+1} v P_{2i+1}(v^2)``.
    For even parity the roles of plain and w terms swap.
    """
    if R.order is None:
        raise UsageError("pk_expand needs a truncated series")
    for key in R.terms:
        if not _legal(R.lam, *key):
            raise LibraryDefect(f"parity violation at {key}")
    P = []
    for k in range(k_max + 1):
        wflag = 1 if (k % 2 == R.lam) else 0
        shift = 1 if k % 2 else 0   # v^(j) = v^shift * (v^2)^n
        span = R.order - k - shift
        n = span // 2 if span >= 0 else -1
        if n < 0:
            P.append(TruncatedSeries([0], 0, "s"))
            continue
        c = [0] * (n + 1)
        for (i, j, kk), a in R.terms.items():
            if i == k and kk == wflag and (j - shift) % 2 == 0 and j >= shift:
                m = (j - shift) // 2
                if m <= n:
                    c[m] = a
        P.append(TruncatedSeries(c, n, "s"))
    return PkExpansion(R.lam, tuple(P))


def cochran_series(R: WElement) -> TruncatedSeries:
    """``P_1`` of an odd-parity reduced series."""
    if R.lam != 1:
        raise UsageError("the Cochran series is defined for odd linking number")
    return pk_expand(R, 1).cochran


def cochran_splice_add(C1: TruncatedSeries, C2: TruncatedSeries) -> TruncatedSeries:
    return C1 + C2


def factor_series(s: TruncatedSeries) -> list:
    """``[(n, b_n)]`` with ``s = prod_n (1 + b_n z^n)`` through the order of s."""
    if s.coeffs[0] != 1:
        raise DomainError("constant term must be 1")
    out = []
    acc = TruncatedSeries.one(s.order, s.var)
    for n in range(1, s.order + 1):
        b = s.coeffs[n] - acc.coeffs[n]
        out.append((n, b))
        if b:
            f = [0] * (n + 1)
            f[0], f[n] = 1, b
            acc = acc * TruncatedSeries(f, s.order, s.var)
    if acc != s:
        raise LibraryDefect("factorization does not multiply back")
    return out


# rational split -----------------------------------------------------------

@dataclass(frozen=True)
class BivariateRational:
    """``num / den`` in ``Z[u, v]`` with ``den(0, 0) = 1``."""

    num: LaurentPoly
    den: LaurentPoly

    def is_polynomial(self) -> bool:
        return self.den == 1


@dataclass(frozen=True)
class WSeriesRationalForm:
    plain: BivariateRational
    w_part: BivariateRational


UV = ("u", "v")


def _split(R: WElement):
    plain, wpart = {}, {}
    for (i, j, k), c in R.terms.items():
        (wpart if k else plain)[(i, j)] = c
    return plain, wpart


def fit_bivariate(coeffs: dict, order: int, M: int, N: int) -> BivariateRational | None:
    """Find ``P/Q`` with total degrees ``<= M``, ``<= N``, ``Q(0,0) = 1`` matching the series through ``order``."""
    qmons = [(a, d - a) for d in range(1, N + 1) for a in range(d + 1)]
    eqs = [(a, d - a) for d in range(M + 1, order + 1) for a in range(d + 1)]
    A, b = [], []
    for (p, q) in eqs:
        row = [coeffs.get((p - a, q - c), 0) if p >= a and q >= c else 0 for (a, c) in qmons]
        A.append(row)
        b.append(-coeffs.get((p, q), 0))
    if qmons:
        sol, _, _ = solve_q(A, b)
        if sol is None:
            return None
    else:
        if any(b):
            return None
        sol = []
    if any(Fraction(x).denominator != 1 for x in sol):
        return None
    Q = {(0, 0): 1}
    for m, x in zip(qmons, sol):
        if x:
            Q[m] = int(x)
    P = {}
    for d in range(M + 1):
        for a in range(d + 1):
            m = (a, d - a)
            val = sum(qc * coeffs.get((m[0] - qa, m[1] - qb), 0) for (qa, qb), qc in Q.items()
                      if m[0] >= qa and m[1] >= qb)
            if val:
                P[m] = val
    num, den = LaurentPoly(UV, P), LaurentPoly(UV, Q)
    # soundness check through the full order
    prod = {}
    for (a, c), x in coeffs.items():
        for (qa, qb), y in Q.items():
            key = (a + qa, c + qb)
            if sum(key) <= order:
                prod[key] = prod.get(key, 0) + x * y
    if {k: v for k, v in prod.items() if v} != {k: v for k, v in P.items() if v}:
        return None
    return BivariateRational(num, den)


def w_series_rational_split(R: WElement, M: int | None = None, N: int | None = None):
    """Split ``R = R' + w R''`` and fit each part by a rational function.

    Returns a WSeriesRationalForm, or the string ``"not decided"`` when some
    part admits no fit within the bounds at the available order.
    """
    if R.order is None:
        raise UsageError("needs a truncated series")
    plain, wpart = _split(R)
    if M is None or N is None:
        budget = R.order
        M = budget // 2 if M is None else M
        N = max(budget - M - 1, 0) if N is None else N
    parts = []
    for coeffs in (plain, wpart):
        sol = None
        for n in range(N + 1):
            sol = fit_bivariate(coeffs, R.order, M, n)
            if sol is not None:
                break
        if sol is None:
            return "not decided"
        parts.append(sol)
    return WSeriesRationalForm(parts[0], parts[1])


def rational_form_series(form: WSeriesRationalForm, lam: int, order: int) -> WElement:
    """Expand a rational split back into a w-series (for round-trip checks)."""
    terms = {}
    for k, part in ((0, form.plain), (1, form.w_part)):
        inv = _inverse_uv(part.den, order)
        for (a, b), x in part.num.items():
            for (c, d), y in inv.items():
                if a + b + c + d <= order:
                    key = (a + c, b + d, k)
                    terms[key] = terms.get(key, 0) + x * y
    return WElement(lam, terms, order, check=False)


def _inverse_uv(den: LaurentPoly, order: int) -> dict:
    if den.constant_term() != 1:
        raise DomainError("denominator must have constant term 1")
    inv = {(0, 0): 1}
    for d in range(1, order + 1):
        for a in range(d + 1):
            m = (a, d - a)
            s = 0
            for (qa, qb), q in den.items():
                if (qa, qb) != (0, 0) and qa <= m[0] and qb <= m[1]:
                    s += q * inv.get((m[0] - qa, m[1] - qb), 0)
            if s:
                inv[m] = -s
    return inv
