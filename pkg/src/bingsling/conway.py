"""Conway-potential calculus for two-component links.

Potentials of two-component links are Laurent polynomials in ``(x, y)``;
Conway polynomials are polynomials in ``z``.  The building blocks are the
Fibonacci/Lucas polynomials, the Conway polynomial of the cyclic-cover
knots ``J_r`` and the potentials of the covering links ``M_r``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

from .cyclotomic import roots_of_unity_product, roots_of_unity_product_direct
from .errors import LibraryDefect, UsageError
from .laurent import LaurentPoly, substitute_u, unsubstitute_u

XY = ("x", "y")
MAX_R = 2000


def _z(var="z"):
    return LaurentPoly.gen(var)


def _check_r(r, lo=1):
    if not isinstance(r, int) or isinstance(r, bool) or r < lo:
        raise UsageError(f"r must be an integer >= {lo}, got {r!r}")


@lru_cache(maxsize=None)
def _fib_pos(n: int) -> LaurentPoly:
    z = _z()
    a, b = LaurentPoly.const(0, ("z",)), LaurentPoly.const(1, ("z",))
    for _ in range(n):
        a, b = b, z * b + a
    return a


@lru_cache(maxsize=None)
def _lucas_pos(n: int) -> LaurentPoly:
    z = _z()
    a, b = LaurentPoly.const(2, ("z",)), z
    for _ in range(n):
        a, b = b, z * b + a
    return a


def fibonacci(n: int, var: str = "z") -> LaurentPoly:
    """Fibonacci polynomial F_n with F_0 = 0, F_1 = 1, F_{n+1} = z F_n + F_{n-1}."""
    if n >= 0:
        p = _fib_pos(n)
    else:
        p = _fib_pos(-n) * (1 if n % 2 else -1)
    return p.rename({"z": var}) if var != "z" else p


def lucas(n: int, var: str = "z") -> LaurentPoly:
    """Lucas polynomial L_n with L_0 = 2, L_1 = z and the same recursion."""
    if n >= 0:
        p = _lucas_pos(n)
    else:
        p = _lucas_pos(-n) * (-1 if n % 2 else 1)
    return p.rename({"z": var}) if var != "z" else p


class RecursionState(NamedTuple):
    n: int
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly


def recursion_states(n_max: int) -> list:
    """States ``(a_n, b_n, c_n)`` for ``n = 1..n_max`` with ``a_n`` the Conway polynomial of J_n.

    ``b_n`` is the geometric sum of ``(-z^2)^k`` for ``k < n``.  The ``c_n``
    recursion uses ``b_{n-1}`` and ``b_{n-2}``; every ``b_n`` is also
    checked against ``b_n = (1 - z^2) b_{n-1} + z^2 b_{n-2}``.
    """
    _check_r(n_max)
    z = _z()
    z2 = z * z
    b = [LaurentPoly.const(0, ("z",))]
    term = LaurentPoly.const(1, ("z",))
    for _ in range(n_max):
        b.append(b[-1] + term)
        term = term * (-z2)
    for n in range(3, n_max + 1):
        if b[n] != (1 - z2) * b[n - 1] + z2 * b[n - 2]:
            raise LibraryDefect(f"geometric recursion fails at n={n}")
    c = [None, LaurentPoly.const(0, ("z",)), z]
    for n in range(3, n_max + 1):
        c.append(z * (b[n - 1] - 2 * b[n - 2]) - z2 * (c[n - 1] - c[n - 2]))
    return [RecursionState(n, b[n] - z * c[n], b[n], c[n]) for n in range(1, n_max + 1)]


@lru_cache(maxsize=None)
def nabla_J(r: int) -> LaurentPoly:
    """Conway polynomial of the knot J_r, via the three-term recursion."""
    _check_r(r)
    if r > MAX_R:
        from .errors import ResourceError

        raise ResourceError(f"r={r} exceeds the limit {MAX_R}")
    return recursion_states(r)[-1].a


def _nabla_J_factor():
    z = _z()
    z2 = z * z
    return {0: LaurentPoly.const(1, ("z",)), 1: z2, 2: -z2}


def nabla_J_oracle(r: int, direct: bool = False) -> LaurentPoly:
    """Conway polynomial of J_r as ``prod_k (1 - (zeta^{2k} - zeta^k) z^2)``.

    ``direct=True`` uses the expansion-based reference product instead of the
    resultant.
    """
    _check_r(r)
    f = roots_of_unity_product_direct if direct else roots_of_unity_product
    out = f(_nabla_J_factor(), r)
    return out if isinstance(out, LaurentPoly) else LaurentPoly.const(out, ("z",))


def nabla_J_closed_form(r: int) -> LaurentPoly:
    """``sum_{k<r} (-z^2)^k - z c_r`` read off from the recursion."""
    st = recursion_states(r)[-1]
    return st.b - _z() * st.c


def nabla_J_generating_series(order: int):
    """Coefficient list of ``sum_n nabla_J(n) t^n`` from its rational generating function.

    Returns a list ``g`` with ``g[n]`` the polynomial in z attached to ``t^n``
    for ``n = 0..order``.  The generating function is
    ``t / (1 + z^2 (t - t^2)) * (1 / (1 - t) + 1 / (1 + z^2 t) - 1)``.
    """
    z = _z()
    z2 = z * z
    zero = LaurentPoly.const(0, ("z",))
    one = LaurentPoly.const(1, ("z",))
    # series in t with polynomial coefficients
    A = [one] * (order + 1)                                 # 1/(1-t)
    B = [(-z2) ** k for k in range(order + 1)]             # 1/(1+z^2 t)
    inner = [A[k] + B[k] - (one if k == 0 else zero) for k in range(order + 1)]
    D = [zero] * (order + 1)                                # 1/(1 + z^2 t - z^2 t^2)
    D[0] = one
    for k in range(1, order + 1):
        D[k] = -z2 * D[k - 1] + (z2 * D[k - 2] if k >= 2 else zero)
    prod = [zero] * (order + 1)
    for i in range(order + 1):
        for j in range(order + 1 - i):
            prod[i + j] = prod[i + j] + D[i] * inner[j]
    return [zero] + prod[:order]


def nabla_M(r: int) -> LaurentPoly:
    """Conway polynomial of the link M_r."""
    _check_r(r)
    z = _z()
    sign = 1 if r % 2 else -1
    return z * nabla_J(r) + sign * z ** (r + 2) * lucas(r + 1)


def omega_Mr(r: int) -> LaurentPoly:
    """Potential of M_r in ``(x, y)``; the first variable belongs to J_r."""
    _check_r(r)
    x = LaurentPoly.gen("x", XY)
    y = LaurentPoly.gen("y", XY)
    u = x - x ** -1
    v = y - y ** -1
    sign = 1 if r % 2 else -1
    tail = sign * x ** r * y + x ** (-r) * y ** -1
    return substitute_u(nabla_J(r), "x", XY) + u ** r * v * tail


def omega_Mr_oracle(r: int) -> LaurentPoly:
    """Potential of M_r from the product over r-th roots of unity.

    Works over ``Z[x^±, eta^±]`` with ``eta^r = y``; the factor is
    ``1 - u^2 + u x eta^2 T - u x^-1 eta^-2 T^-1`` and the product of the
    r conjugates equals ``(-1)^{r+1} Res(T^r - 1, T * factor)``.
    """
    _check_r(r)
    V = ("x", "e")
    x = LaurentPoly.gen("x", V)
    e = LaurentPoly.gen("e", V)
    u = x - x ** -1
    g = {0: 1 - u * u, 1: u * x * e * e, -1: -u * x ** -1 * e ** -2}
    prod = roots_of_unity_product(g, r)
    out = {}
    for (a, b), c in prod.items():
        if b % r:
            raise LibraryDefect(f"fractional power of y in the product (eta^{b})")
        out[(a, b // r)] = c
    return LaurentPoly(XY, out)


def _check_homotopy_n(n):
    if not isinstance(n, int) or n % 2:
        raise UsageError(f"n must be an even integer, got {n!r}")


class HomotopyDelta(NamedTuple):
    value: LaurentPoly
    even_in_v: bool


def link_homotopy_delta(n: int, strict: bool = False) -> HomotopyDelta:
    """``F_n(v) L_{1-n}(v) / v`` for even n, with a parity flag.

    The flag records whether only even powers of v occur.  It is False for
    some n (for instance n = 2 gives ``-v``); ``strict=True`` turns that into
    a LibraryDefect instead.
    """
    _check_homotopy_n(n)
    num = fibonacci(n, "v") * lucas(1 - n, "v")
    v = LaurentPoly.gen("v")
    try:
        val = num.exact_div(v)
    except Exception as exc:
        raise LibraryDefect(f"F_n L_(1-n) is not divisible by v for n={n}") from exc
    even = all(e[0] % 2 == 0 for e, _ in val.items())
    if strict and not even:
        raise LibraryDefect(f"F_n L_(1-n) / v has odd powers of v for n={n}: {val}")
    return HomotopyDelta(val, even)


def lucas_even_identity(n: int) -> bool:
    """Check ``L_{2n}(x - 1/x) = x^{2n} + x^{-2n}``, i.e. ``t^n + t^-n = L_{2n}(z)`` with ``t = x^2``."""
    if not isinstance(n, int) or n < 0:
        raise UsageError("n must be a non-negative integer")
    x = LaurentPoly.gen("x")
    lhs = substitute_u(lucas(2 * n), "x")
    rhs = x ** (2 * n) + x ** (-2 * n)
    if lhs != rhs:
        raise LibraryDefect(f"Lucas identity fails for n={n}")
    return True


# links ---------------------------------------------------------------------

@dataclass(frozen=True)
class LinkData:
    """A link specified by its potential.

    For two-component links ``potential`` is a Laurent polynomial in
    ``(x, y)`` and ``component_nablas`` optionally holds the Conway
    polynomials of the two components.  For knots ``potential`` is the
    Conway polynomial in z.
    """

    name: str
    components: int
    lk: int
    potential: LaurentPoly
    component_nablas: tuple | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.components not in (1, 2):
            raise UsageError("only knots and two-component links are supported")
        if self.components == 2 and self.potential.vars != XY:
            raise UsageError("two-component potentials must be in (x, y)")
        if self.components == 1 and len(self.potential.vars) != 1:
            raise UsageError("knot data is a Conway polynomial in one variable")

    def violations(self) -> list:
        """Invariants that fail for this record (empty when consistent)."""
        out = []
        p = self.potential
        if self.components == 2:
            if p.evaluate({"x": 1, "y": 1}) != self.lk:
                out.append("potential at (1,1) differs from linking number")
            if p.reflect() != p:
                out.append("potential is not symmetric under (x,y) -> (1/x,1/y)")
            if self.component_nablas:
                for i, nab in enumerate(self.component_nablas):
                    if nab.constant_term() != 1:
                        out.append(f"component {i + 1} Conway polynomial has constant term != 1")
        else:
            if p.constant_term() != 1:
                out.append("knot Conway polynomial has constant term != 1")
            if any(e[0] % 2 for e, _ in p.items()):
                out.append("knot Conway polynomial is not even")
        return out

    def validate(self) -> "LinkData":
        bad = self.violations()
        if bad:
            raise UsageError(f"{self.name}: " + "; ".join(bad))
        return self


def _xy(s):
    return LaurentPoly.parse(s, XY)


def _one_z():
    return LaurentPoly.const(1, ("z",))


def _link(name, lk, pot, nablas=(None, None)):
    n1, n2 = nablas
    return LinkData(name, 2, lk, pot, (n1 or _one_z(), n2 or _one_z())).validate()


UNLINK = _link("unlink", 0, LaurentPoly(XY))
HOPF = _link("Hopf", 1, LaurentPoly.const(1, XY))
HOPF_REVERSED = _link("Hopf (one component reversed)", -1, LaurentPoly.const(-1, XY))
TORUS_2_4 = _link("T(2,4)", 2, _xy("x*y + x^-1*y^-1"))


def mazur_cover(r: int) -> LinkData:
    """The link M_r = (J_r, B); M_1 is the Mazur link."""
    _check_r(r)
    return _link(f"M_{r}", 1, omega_Mr(r), (nabla_J(r), _one_z()))


MAZUR = mazur_cover(1)

STORED_LINKS = (UNLINK, HOPF, HOPF_REVERSED, TORUS_2_4, MAZUR)


def swap_components(L: LinkData) -> LinkData:
    """Exchange the roles of the two components."""
    p = L.potential.monomial_subs({"x": (0, 1), "y": (1, 0)})
    nab = tuple(reversed(L.component_nablas)) if L.component_nablas else None
    return replace(L, name=f"swap({L.name})", potential=p, component_nablas=nab)


def conway_polynomial(L: LinkData) -> LaurentPoly:
    """Conway polynomial in z of a two-component link, from ``z * potential(x, x)``."""
    if L.components == 1:
        return L.potential
    diag = L.potential.monomial_subs({"x": (1,), "y": (1,)}, ("x",))
    return unsubstitute_u(diag, "x", "z") * _z()


def splice(L: LinkData, L2: LinkData, mu: int | None = None, nu: int | None = None) -> LinkData:
    """Potential of the splice of ``L = (K1, K)`` and ``L2 = (Q, Q1)`` along K and Q.

    ``mu`` and ``nu`` are the linking numbers of the spliced components with
    the surviving ones; they default to ``L.lk`` and ``L2.lk``.  The result is
    ``potential_L(x, y^nu) * potential_L2(x^mu, y)``.
    """
    mu = L.lk if mu is None else mu
    nu = L2.lk if nu is None else nu
    if (mu, nu) != (L.lk, L2.lk):
        raise UsageError("mu and nu must equal the linking numbers of the two links")
    p1 = L.potential.monomial_subs({"y": (0, nu)})
    p2 = L2.potential.monomial_subs({"x": (mu, 0)})
    nab = None
    if mu == nu == 1 and L.component_nablas and L2.component_nablas:
        if L2.component_nablas[0] != 1:
            raise UsageError("the spliced component of the second link must be unknotted")
        nab = (L.component_nablas[0], L.component_nablas[1] * L2.component_nablas[1])
    return LinkData(f"splice({L.name},{L2.name})", 2, mu * nu, p1 * p2, nab)


def connected_sum(L: LinkData, knot_nabla: LaurentPoly) -> LinkData:
    """Connected sum of a knot with the second component of L."""
    if isinstance(knot_nabla, LinkData):
        knot_nabla = knot_nabla.potential
    y_part = substitute_u(knot_nabla, "y", XY)
    nab = None
    if L.component_nablas:
        nab = (L.component_nablas[0], L.component_nablas[1] * knot_nabla)
    return LinkData(f"{L.name}#K", 2, L.lk, L.potential * y_part, nab)


def pushoff_omega(L: LinkData, n: int) -> LaurentPoly:
    """Potential of K1 with n parallel copies of the second component, colours collapsed.

    Equal to ``(x^l - x^-l)^(n-1) * potential(x, y^n)`` with l the linking number.
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError("n must be a positive integer")
    x = LaurentPoly.gen("x", XY)
    l = L.lk
    f = x ** l - x ** (-l)
    return f ** (n - 1) * L.potential.monomial_subs({"y": (0, n)})


def splice_omega(L: LinkData, L2: LinkData, mu: int | None = None, nu: int | None = None) -> LaurentPoly:
    return splice(L, L2, mu, nu).potential


def connected_sum_omega(L: LinkData, Q) -> LaurentPoly:
    """``potential_L(x, y) * nabla_Q(y - 1/y)``; Q is knot LinkData or a Conway polynomial."""
    return connected_sum(L, Q).potential


def orientation_reverse_omega(L: LinkData) -> LaurentPoly:
    return reverse_first(L).potential


def reverse_first(L: LinkData) -> LinkData:
    """Reverse the orientation of the first component."""
    p = -L.potential.reflect(("x",))
    return replace(L, name=f"rev({L.name})", lk=-L.lk, potential=p)


def annulus_omega(L: LinkData) -> LaurentPoly:
    """Potential of K1 together with an annulus cobounded by two copies of K2.

    The two boundary curves carry opposite orientations and share a colour;
    the result is ``-(x^l - x^-l)^2`` times the potential of K1 alone.
    """
    if L.components != 2 or not L.component_nablas:
        raise UsageError("needs a two-component link with component data")
    x = LaurentPoly.gen("x", XY)
    u = x - x ** -1
    f = x ** L.lk - x ** (-L.lk)
    nab = substitute_u(L.component_nablas[0], "x", XY)
    return -(f * f.exact_div(u)) * nab if L.lk else LaurentPoly(XY)


def congruence_check(P, r: int, p: int, n: int, m: int, t_var: str = "T") -> bool:
    """Compare the product of P over r-th roots of unity with the p^n-th power of the m-th one, mod p."""
    if not (isinstance(p, int) and p > 1 and all(p % d for d in range(2, isqrt(p) + 1))):
        raise UsageError(f"p={p} is not prime")
    if n < 1 or m < 1 or m % p == 0 or r != p ** n * m:
        raise UsageError("need r = p^n m with n >= 1 and p not dividing m")
    left = roots_of_unity_product(P, r, t_var)
    right = roots_of_unity_product(P, m, t_var) ** (p ** n)
    diff = left - right
    if isinstance(diff, int):
        return diff % p == 0
    return all(c % p == 0 for _, c in diff.items())
