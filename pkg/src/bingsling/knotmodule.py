"""Finitely presented modules over Laurent rings and the torsion-free wild module.

Relation matrices have one row per relation and one column per generator.
The localized ring ``Z[t^±][1/(1-t)]`` is modelled by :class:`Localized`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cyclotomic import resultant
from .errors import DomainError, LibraryDefect, UsageError
from .laurent import LaurentPoly
from .linalg import fraction_free_rank

RING_T = "Z[t^±]"
RING_ST = "Z[s^±,t^±]"
RING_LOC = "Z[t^±][1/(1-t)]"
RINGS = {RING_T: ("t",), RING_ST: ("s", "t"), RING_LOC: ("t",)}
_RING_ALIASES = {"Z[t^,1/(1-t)]": RING_LOC, "Z[t^±1]": RING_T, "Z[t]": RING_T,
                 "Z[s^±1,t^±1]": RING_ST}


def _t(power=1):
    return LaurentPoly.gen("t", ("t",), power)


ONE_MINUS_T = 1 - _t()


class Localized:
    """``num / (1 - t)^k`` with ``num`` a Laurent polynomial in t."""

    __slots__ = ("num", "k")

    def __init__(self, num, k: int = 0):
        if isinstance(num, int):
            num = LaurentPoly.const(num, ("t",))
        if num.vars != ("t",):
            raise UsageError("localized elements live over t")
        while k > 0 and num and num.evaluate({"t": 1}) == 0:
            num = num.exact_div(ONE_MINUS_T)
            k -= 1
        if not num:
            k = 0
        self.num, self.k = num, k

    def _lift(self, o):
        if isinstance(o, Localized):
            return o
        if isinstance(o, (int, LaurentPoly)):
            return Localized(o)
        return None

    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        k = max(self.k, o.k)
        return Localized(self.num * ONE_MINUS_T ** (k - self.k) + o.num * ONE_MINUS_T ** (k - o.k), k)

    __radd__ = __add__

    def __neg__(self):
        return Localized(-self.num, self.k)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return Localized(self.num * o.num, self.k + o.k)

    __rmul__ = __mul__

    def __eq__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self.num * ONE_MINUS_T ** o.k == o.num * ONE_MINUS_T ** self.k

    def __hash__(self):
        return hash((self.num, self.k))

    def __bool__(self):
        return bool(self.num)

    def unit_part(self):
        """``(sign, t_power, one_minus_t_power)`` if this is a unit, else None."""
        num, b = self.num, 0
        if not num:
            return None
        while num.evaluate({"t": 1}) == 0:
            num = num.exact_div(ONE_MINUS_T)
            b += 1
        if not num.is_monomial():
            return None
        ((e, c),) = num.items()
        if c not in (1, -1):
            return None
        return c, e[0], b - self.k

    def is_unit(self) -> bool:
        return self.unit_part() is not None

    def inverse(self) -> "Localized":
        up = self.unit_part()
        if up is None:
            raise DomainError(f"{self} is not a unit of the localized ring")
        sign, a, b = up
        if b >= 0:
            return Localized(LaurentPoly.monomial(("t",), -a, sign), b)
        return Localized(LaurentPoly.monomial(("t",), -a, sign) * ONE_MINUS_T ** (-b), 0)

    def __repr__(self):
        return f"({self.num})" if not self.k else f"({self.num})/(1 - t)^{self.k}"

    def to_json(self):
        return {"num": self.num.to_json(), "k": self.k}


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), Localized(0)) for j in range(p)] for i in range(n)]


def _mat_vec(A, v):
    return [sum((A[i][k] * v[k] for k in range(len(v))), Localized(0)) for i in range(len(A))]


@dataclass
class ModulePresentation:
    ring: str
    gens: list
    rels: list  # rows of LaurentPoly, one entry per generator
    log: list = field(default_factory=list)

    def __post_init__(self):
        self.ring = _RING_ALIASES.get(self.ring, self.ring)
        if self.ring not in RINGS:
            raise UsageError(f"unknown ring {self.ring!r}")
        vars = RINGS[self.ring]
        rows = []
        for row in self.rels:
            if len(row) != len(self.gens):
                raise UsageError("relation length does not match the number of generators")
            rows.append([LaurentPoly.const(c, vars) if isinstance(c, int) else c for c in row])
        self.rels = rows

    def to_json(self) -> dict:
        return {"ring": self.ring, "gens": list(self.gens),
                "rels": [[c.to_json() for c in row] for row in self.rels]}

    @classmethod
    def from_json(cls, obj) -> "ModulePresentation":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise UsageError("a presentation must be a JSON object")
        obj = {_KEY_ALIASES.get(k, k): v for k, v in obj.items()}
        unknown = set(obj) - {"ring", "gens", "rels"}
        if unknown:
            raise UsageError(f"unknown presentation keys: {sorted(unknown)}")
        ring = _RING_ALIASES.get(obj.get("ring", RING_T), obj.get("ring", RING_T))
        if ring not in RINGS:
            raise UsageError(f"unknown ring {ring!r}")
        vars = RINGS[ring]
        rels = []
        for row in obj.get("rels", []):
            out = []
            for entry in row:
                if isinstance(entry, str):
                    out.append(LaurentPoly.parse(entry, vars))
                elif isinstance(entry, int):
                    out.append(LaurentPoly.const(entry, vars))
                else:
                    p = LaurentPoly.from_json(entry, vars)
                    out.append(p if p.vars == vars else p.embed(vars))
            rels.append(out)
        return cls(ring, list(obj.get("gens", [])), rels)


_KEY_ALIASES = {"generators": "gens", "relations": "rels"}


def cyclic_presentation(delta: LaurentPoly) -> ModulePresentation:
    return ModulePresentation(RING_T, ["a"], [[delta]])


def free_presentation(rank: int = 1) -> ModulePresentation:
    return ModulePresentation(RING_T, [f"a{i}" for i in range(rank)], [])


# the wild module ------------------------------------------------------------

def _st():
    s = LaurentPoly.gen("s", ("s", "t"))
    t = LaurentPoly.gen("t", ("s", "t"))
    return s, t


def wild_presentation() -> ModulePresentation:
    """Two generators (alpha, beta) over ``Z[s^±, t^±]``.

    Relations ``a^- = t a^+`` and ``b^- = t b^+`` with ``a^+ = alpha``,
    ``a^- = alpha - beta``, ``b^+ = (2 - s^-1) beta - alpha``, ``b^- = (2 - s) beta``.
    """
    s, t = _st()
    r1 = [1 - t, -1 + 0 * s]
    r2 = [t + 0 * s, (2 - s) - t * (2 - s ** -1)]
    return ModulePresentation(RING_ST, ["alpha", "beta"], [r1, r2])


def presentation_reduce_wild() -> ModulePresentation:
    """Eliminate beta and return the single-relator presentation on alpha.

    Each step is recorded in ``log``.
    """
    pres = wild_presentation()
    (a1, b1), (a2, b2) = pres.rels
    log = []
    if b1 != -1:
        raise LibraryDefect("first relation does not solve for beta")
    # relation 1 reads (1 - t) alpha - beta = 0, so beta = (1 - t) alpha
    beta_image = a1
    log.append(f"relation 1: beta = ({beta_image}) alpha")
    combined = a2 + b2 * beta_image
    log.append(f"substitute into relation 2: ({combined}) alpha = 0")
    s, t = _st()
    normalized = combined * t ** -1
    log.append(f"multiply by the unit t^-1: ({normalized}) alpha = 0")
    out = ModulePresentation(RING_ST, ["alpha"], [[normalized]], log)
    # audit: t^-1 (R2 + d R1) with d the beta-coefficient of R2 is (relator, 0)
    combo = [t ** -1 * (a2 + b2 * a1), t ** -1 * (b2 + b2 * b1)]
    if combo != [normalized, 0 * t]:
        raise LibraryDefect("relator is not a combination of the original relations")
    log.append("audit: relator = t^-1 (R2 + d R1) where d is the beta coefficient of R2")
    return out


def wild_relator() -> LaurentPoly:
    s, t = _st()
    return (1 - t ** -1) * s + (1 - t) * s ** -1 + (2 * t + 2 * t ** -1 - 3)


def _coefficients():
    t = _t()
    a = Localized(1 - t ** -1)      # coefficient of s
    b = Localized(1 - t)            # coefficient of s^-1
    c = Localized(2 * t + 2 * t ** -1 - 3)
    return a, b, c


@dataclass(frozen=True)
class CompanionAction:
    """Multiplication by s (and its inverse) on the basis ``(x_0, x_1)``; columns are images."""

    matrix: tuple
    inverse: tuple

    def det(self) -> Localized:
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def to_json(self):
        return {"matrix": [[e.to_json() for e in row] for row in self.matrix],
                "inverse": [[e.to_json() for e in row] for row in self.inverse]}


def wild_module_companion() -> CompanionAction:
    """s-action on the free rank-two module over the localized ring.

    From ``a x_{i+1} + b x_{i-1} + c x_i = 0`` with ``a = 1 - t^-1``, ``b = 1 - t``
    and ``c = 2t + 2t^-1 - 3``: ``x_{i+1} = -a^-1 (b x_{i-1} + c x_i)`` and
    ``x_{i-1} = -b^-1 (a x_{i+1} + c x_i)``.
    """
    a, b, c = _coefficients()
    ai, bi = a.inverse(), b.inverse()
    zero, one = Localized(0), Localized(1)
    # s x0 = x1, s x1 = x2 = -a^-1 (b x0 + c x1)
    M = ((zero, -(ai * b)), (one, -(ai * c)))
    # s^-1 x0 = x_-1 = -b^-1 (a x1 + c x0), s^-1 x1 = x0
    Minv = ((-(bi * c), one), (-(bi * a), zero))
    return CompanionAction(M, Minv)


def companion_identity_check(action: CompanionAction) -> bool:
    P = _mat_mul([list(r) for r in action.matrix], [list(r) for r in action.inverse])
    Q = _mat_mul([list(r) for r in action.inverse], [list(r) for r in action.matrix])
    I = [[Localized(1), Localized(0)], [Localized(0), Localized(1)]]
    return P == I and Q == I


def _vec_pow(action: CompanionAction, k: int):
    M = action.matrix if k >= 0 else action.inverse
    v = [Localized(1), Localized(0)]
    for _ in range(abs(k)):
        v = _mat_vec(M, v)
    return v


def shifted_basis(k: int):
    """Coordinates of ``x_k`` in the basis ``(x_0, x_1)`` by iterating the relation."""
    a, b, c = _coefficients()
    ai, bi = a.inverse(), b.inverse()
    xs = {0: [Localized(1), Localized(0)], 1: [Localized(0), Localized(1)]}
    for i in range(1, k):
        xs[i + 1] = [-(ai * (b * p + c * q)) for p, q in zip(xs[i - 1], xs[i])]
    for i in range(0, k, -1):
        xs[i - 1] = [-(bi * (a * p + c * q)) for p, q in zip(xs[i + 1], xs[i])]
    return xs[k]


def relation_holds(i: int) -> bool:
    """``a x_{i+1} + b x_{i-1} + c x_i = 0`` for the iterated coordinates."""
    a, b, c = _coefficients()
    xp, xm, x = shifted_basis(i + 1), shifted_basis(i - 1), shifted_basis(i)
    return all(not (a * p + b * q + c * r) for p, q, r in zip(xp, xm, x))


def s_power_two_ways(k: int) -> bool:
    return _vec_pow(wild_module_companion(), k) == shifted_basis(k)


def annihilator_trivial_check(p: LaurentPoly) -> bool:
    """True when ``p x_0`` is nonzero in the free model of the wild module."""
    if isinstance(p, int):
        p = LaurentPoly.const(p, ("t",))
    if not p:
        raise UsageError("p must be nonzero")
    if p.vars != ("t",):
        raise UsageError("p must be a Laurent polynomial in t")
    image = [Localized(p) * Localized(1), Localized(p) * Localized(0)]
    return any(bool(e) for e in image)


def torsion_decide(pres: ModulePresentation) -> bool:
    """True iff the relation matrix has full column rank over Q(t)."""
    if pres.ring == RING_ST:
        raise UsageError("torsion over two variables is not supported")
    n = len(pres.gens)
    if n == 0:
        return True
    if not pres.rels:
        return False
    return fraction_free_rank(pres.rels) == n


def one_minus_t_invertible(pres) -> bool:
    """For ``<a | Delta a>``: multiplication by ``1 - t`` is bijective iff ``Delta(1) = ±1``.

    Decided by the resultant of ``1 - t`` with ``Delta`` (negative powers cleared),
    cross-checked against the evaluation.
    """
    delta = pres.rels[0][0] if isinstance(pres, ModulePresentation) else pres
    if isinstance(pres, ModulePresentation) and (len(pres.gens) != 1 or len(pres.rels) != 1):
        raise UsageError("needs a cyclic presentation with one relation")
    if isinstance(delta, int):
        delta = LaurentPoly.const(delta, ("t",))
    if not delta:
        return False
    low = delta.min_degree()
    h = {e[0] - low: c for e, c in delta.items()}
    res = resultant({0: 1, 1: -1}, h)
    ev = delta.evaluate({"t": 1})
    if abs(res) != abs(ev):
        raise LibraryDefect("resultant and evaluation disagree")
    return abs(res) == 1


@dataclass(frozen=True)
class SeifertReport:
    a_minus: dict
    b_plus: dict
    b_minus: dict
    presentation_matches: bool


def seifert_cycle_relations_check() -> SeifertReport:
    """Derive the pushoff relations from the raw cycle data and compare with the built-in presentation.

    Vectors are over ``Z[s^±]`` in the basis (alpha, beta, gamma, delta).
    Relations: ``alpha + gamma = beta`` and ``beta + delta = s beta``.
    """
    s = LaurentPoly.gen("s")
    one, zero = LaurentPoly.const(1, ("s",)), LaurentPoly.const(0, ("s",))

    def vec(a=zero, b=zero, g=zero, d=zero):
        return [a, b, g, d]

    raw = {
        "a+": vec(a=one),
        "a-": vec(g=-one),
        "b+": vec(b=one - s ** -1, g=one),
        "b-": vec(b=one, d=-one),
    }
    gamma = vec(a=-one, b=one)          # gamma = beta - alpha
    delta = vec(b=s - 1)                # delta = (s - 1) beta

    def eliminate(v):
        out = [v[0], v[1], zero, zero]
        for k in range(4):
            out[k] = out[k] + v[2] * gamma[k] + v[3] * delta[k]
        return out

    red = {k: eliminate(v) for k, v in raw.items()}
    expected = {
        "a+": vec(a=one),
        "a-": vec(a=one, b=-one),
        "b+": vec(a=-one, b=2 - s ** -1),
        "b-": vec(b=2 - s),
    }
    for key in red:
        if red[key] != expected[key]:
            raise LibraryDefect(f"pushoff {key} does not reduce as expected")
    # assemble x^- - t x^+ for x in (a, b) over Z[s^±, t^±]
    V = ("s", "t")
    t = LaurentPoly.gen("t", V)
    rows = []
    for name in ("a", "b"):
        minus, plus = red[name + "-"], red[name + "+"]
        rows.append([minus[k].embed(V) - t * plus[k].embed(V) for k in range(2)])
    built = wild_presentation().rels
    matches = rows == built
    fmt = lambda v: {"alpha": str(v[0]), "beta": str(v[1])}
    return SeifertReport(fmt(red["a-"]), fmt(red["b+"]), fmt(red["b-"]), matches)
