"""Sparse integer Laurent polynomials in one or two named variables."""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from .errors import DomainError, UsageError

Exp = tuple


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    Terms are stored as ``{exponent_tuple: coefficient}`` with zero
    coefficients dropped.  Python ints act as constants in arithmetic.
    Combining polynomials over different variable lists is an error; use
    :meth:`embed` to lift explicitly.
    """

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping | None = None):
        vars = tuple(vars)
        if not 1 <= len(vars) <= 2:
            raise UsageError("LaurentPoly supports one or two variables")
        if len(set(vars)) != len(vars):
            raise UsageError(f"repeated variable names {vars}")
        self.vars = vars
        clean = {}
        if terms:
            n = len(vars)
            for e, c in terms.items():
                if isinstance(e, int):
                    e = (e,)
                e = tuple(e)
                if len(e) != n:
                    raise UsageError(f"exponent {e} does not match variables {vars}")
                if not isinstance(c, int):
                    raise UsageError(f"coefficient {c!r} is not an integer")
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int, vars=("z",)):
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def zero(cls, vars=("z",)):
        return cls(vars)

    @classmethod
    def gen(cls, name: str, vars=None, power: int = 1):
        vars = (name,) if vars is None else tuple(vars)
        if name not in vars:
            raise UsageError(f"{name!r} is not one of {vars}")
        e = tuple(power if v == name else 0 for v in vars)
        return cls(vars, {e: 1})

    @classmethod
    def monomial(cls, vars, exp, c: int = 1):
        return cls(vars, {tuple(exp) if not isinstance(exp, int) else (exp,): c})

    @classmethod
    def from_coeffs(cls, coeffs, var: str = "z", low: int = 0):
        """Univariate polynomial from a dense ascending coefficient list."""
        return cls((var,), {(low + i,): int(c) for i, c in enumerate(coeffs) if c})

    # basic access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp) -> int:
        if isinstance(exp, int):
            exp = (exp,)
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * len(self.vars)}

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self.vars), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def _idx(self, var):
        if var is None:
            if len(self.vars) != 1:
                raise UsageError("variable must be named for a bivariate polynomial")
            return 0
        try:
            return self.vars.index(var)
        except ValueError:
            raise UsageError(f"{var!r} is not one of {self.vars}") from None

    def degree(self, var=None) -> int:
        i = self._idx(var)
        if not self._terms:
            raise DomainError("degree of the zero polynomial")
        return max(e[i] for e in self._terms)

    def min_degree(self, var=None) -> int:
        i = self._idx(var)
        if not self._terms:
            raise DomainError("degree of the zero polynomial")
        return min(e[i] for e in self._terms)

    def total_degree(self) -> int:
        return max(sum(e) for e in self._terms)

    def coeff_list(self) -> list:
        """Dense ascending coefficients of a univariate polynomial with no negative powers."""
        if len(self.vars) != 1:
            raise UsageError("coeff_list needs a univariate polynomial")
        if not self._terms:
            return []
        if self.min_degree() < 0:
            raise DomainError("negative exponents present")
        out = [0] * (self.degree() + 1)
        for (e,), c in self._terms.items():
            out[e] = c
        return out

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise UsageError(f"variable mismatch {self.vars} vs {other.vars}; use embed()")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self._terms)
        for e, c in o._terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentPoly._raw(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly(self.vars)
            return LaurentPoly._raw(self.vars, {e: c * other for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._terms, o._terms
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for e1, c1 in b.items():
            for e2, c2 in a.items():
                e = _add_exp(e1, e2)
                t[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.vars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise DomainError("only unit monomials have negative powers")
            ((e, c),) = self._terms.items()
            return LaurentPoly._raw(self.vars, {tuple(n * x for x in e): c ** (-n)})
        result = LaurentPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_term() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    @classmethod
    def _raw(cls, vars, terms):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj._terms = terms
        obj._hash = None
        return obj

    # division
    def exact_div(self, other) -> "LaurentPoly":
        """Quotient ``self / other``; raises DomainError when it is not a Laurent polynomial."""
        if isinstance(other, int):
            if other == 0:
                raise DomainError("division by zero")
            t = {}
            for e, c in self._terms.items():
                q, r = divmod(c, other)
                if r:
                    raise DomainError(f"coefficient {c} not divisible by {other}")
                t[e] = q
            return LaurentPoly._raw(self.vars, t)
        other = self._coerce(other)
        if not other._terms:
            raise DomainError("division by zero")
        if not self._terms:
            return self
        if other.is_monomial():
            ((eb, cb),) = other._terms.items()
            t = {}
            for e, c in self._terms.items():
                q, r = divmod(c, cb)
                if r:
                    raise DomainError("inexact division")
                t[_sub_exp(e, eb)] = q
            return LaurentPoly._raw(self.vars, t)
        n = len(self.vars)
        lo = [min(e[i] for e in self._terms) - min(e[i] for e in other._terms) for i in range(n)]
        hi = [max(e[i] for e in self._terms) - max(e[i] for e in other._terms) for i in range(n)]
        if any(l > h for l, h in zip(lo, hi)):
            raise DomainError("inexact division")
        lead_b = max(other._terms)
        cb = other._terms[lead_b]
        rem = dict(self._terms)
        quot = {}
        while rem:
            lead = max(rem)
            e = _sub_exp(lead, lead_b)
            if any(not lo[i] <= e[i] <= hi[i] for i in range(n)):
                raise DomainError("inexact division")
            q, r = divmod(rem[lead], cb)
            if r:
                raise DomainError("inexact division")
            quot[e] = q
            for eb, c in other._terms.items():
                k = _add_exp(e, eb)
                v = rem.get(k, 0) - q * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(self.vars, quot)

    def divides(self, other) -> bool:
        try:
            other.exact_div(self)
        except DomainError:
            return False
        return True

    # substitution and variable handling
    def embed(self, vars) -> "LaurentPoly":
        """Same polynomial viewed over a variable list containing ours."""
        vars = tuple(vars)
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise UsageError(f"cannot embed: {missing} not in {vars}")
        pos = [self.vars.index(v) if v in self.vars else None for v in vars]
        t = {tuple(e[p] if p is not None else 0 for p in pos): c for e, c in self._terms.items()}
        return LaurentPoly(vars, t)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        return LaurentPoly(tuple(mapping.get(v, v) for v in self.vars), self._terms)

    def drop_var(self, var: str) -> "LaurentPoly":
        """Forget a variable that does not occur."""
        i = self._idx(var)
        if any(e[i] for e in self._terms):
            raise UsageError(f"{var!r} occurs in the polynomial")
        keep = tuple(v for v in self.vars if v != var)
        return LaurentPoly(keep, {tuple(x for k, x in enumerate(e) if k != i): c for e, c in self._terms.items()})

    def monomial_subs(self, images: Mapping[str, tuple], vars=None) -> "LaurentPoly":
        """Substitute each variable by a monomial.

        ``images[v]`` is an exponent tuple over ``vars`` (default: ours);
        missing variables map to themselves.
        """
        vars = self.vars if vars is None else tuple(vars)
        rows = []
        for v in self.vars:
            if v in images:
                img = tuple(images[v])
            elif v in vars:
                img = tuple(1 if w == v else 0 for w in vars)
            else:
                raise UsageError(f"no image for {v!r}")
            if len(img) != len(vars):
                raise UsageError("image exponent length mismatch")
            rows.append(img)
        t: dict = {}
        for e, c in self._terms.items():
            k = tuple(sum(e[i] * rows[i][j] for i in range(len(e))) for j in range(len(vars)))
            t[k] = t.get(k, 0) + c
        return LaurentPoly(vars, t)

    def subs(self, images: Mapping[str, "LaurentPoly"], vars=None) -> "LaurentPoly":
        """Ring homomorphism substitution.

        Negative powers are only allowed for variables whose image is a
        unit monomial.
        """
        if vars is None:
            some = next(iter(images.values()))
            vars = some.vars
        vars = tuple(vars)
        imgs = []
        for v in self.vars:
            if v in images:
                p = images[v]
                if isinstance(p, int):
                    p = LaurentPoly.const(p, vars)
                if p.vars != vars:
                    p = p.embed(vars)
            else:
                p = LaurentPoly.gen(v, vars)
            imgs.append(p)
        cache = [{} for _ in imgs]

        def power(i, k):
            d = cache[i]
            if k not in d:
                d[k] = imgs[i] ** k
            return d[k]

        out = LaurentPoly(vars)
        for e, c in self._terms.items():
            m = LaurentPoly.const(c, vars)
            for i, k in enumerate(e):
                if k:
                    m = m * power(i, k)
            out = out + m
        return out

    def evaluate(self, values: Mapping[str, int]) -> "LaurentPoly | int":
        """Plug integers into some variables.

        Negative exponents require the value to be +1 or -1.  Returns an int
        when every variable is assigned.
        """
        for v in values:
            self._idx(v)
        t: dict = {}
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        for e, c in self._terms.items():
            val = c
            for i, v in enumerate(self.vars):
                if v in values:
                    x = values[v]
                    if e[i] < 0:
                        if x not in (1, -1):
                            raise DomainError(f"negative power of {v} at {x}")
                        val *= x ** (-e[i])
                    else:
                        val *= x ** e[i]
            k = tuple(e[i] for i in keep)
            t[k] = t.get(k, 0) + val
        if not keep:
            return t.get((), 0)
        return LaurentPoly(tuple(self.vars[i] for i in keep), t)

    def reflect(self, vars=None) -> "LaurentPoly":
        """Invert the given variables (default all)."""
        vars = self.vars if vars is None else tuple(vars)
        idx = {self._idx(v) for v in vars}
        return LaurentPoly._raw(
            self.vars,
            {tuple(-x if i in idx else x for i, x in enumerate(e)): c for e, c in self._terms.items()},
        )

    def shift(self, exp) -> "LaurentPoly":
        """Multiply by the monomial with exponent ``exp``."""
        if isinstance(exp, int):
            exp = (exp,)
        return LaurentPoly._raw(self.vars, {_add_exp(e, exp): c for e, c in self._terms.items()})

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: f(c) for e, c in self._terms.items()})

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # formatting
    def sorted_terms(self):
        return sorted(self._terms.items())

    def __repr__(self):
        return f"LaurentPoly({self.vars!r}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = []
            for v, k in zip(self.vars, e):
                if k == 1:
                    mono.append(v)
                elif k:
                    mono.append(f"{v}^{k}" if k > 0 else f"{v}^({k})")
            if mono:
                body = "*".join(mono)
                s = body if c == 1 else "-" + body if c == -1 else f"{c}*{body}"
            else:
                s = str(c)
            parts.append(s)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj, vars=None) -> "LaurentPoly":
        if isinstance(obj, list):
            if vars is None:
                raise UsageError("bare term list needs explicit variables")
            terms = obj
        else:
            vars = tuple(obj.get("vars", vars or ()))
            terms = obj.get("terms", [])
        t: dict = {}
        for term in terms:
            e = tuple(int(x) for x in term["e"])
            t[e] = t.get(e, 0) + int(term["c"])
        return cls(vars, t)

    @classmethod
    def parse(cls, text: str, vars=None) -> "LaurentPoly":
        """Parse strings such as ``"t^2 - t + 1"`` or ``"2*x*y^-1 - x^(-1)"``."""
        return _parse(text, vars)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\S))")


def _parse(text, vars):
    toks = []
    for num, name, op in _TOKEN.findall(text):
        if num:
            toks.append(("num", int(num)))
        elif name:
            toks.append(("var", name))
        elif op:
            toks.append(("op", op))
    names = sorted({v for kind, v in toks if kind == "var"})
    if vars is None:
        vars = tuple(names) if names else ("z",)
    vars = tuple(vars)
    bad = [v for v in names if v not in vars]
    if bad:
        raise UsageError(f"unknown variables {bad} (expected {vars})")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise UsageError(f"cannot parse polynomial {text!r}")
        pos += 1
        return tok

    def signed_int():
        sign = 1
        if peek() == ("op", "("):
            take()
            k = signed_int()
            take("op", ")")
            return k
        if peek() == ("op", "{"):
            take()
            k = signed_int()
            take("op", "}")
            return k
        while peek()[0] == "op" and peek()[1] in "+-":
            if take()[1] == "-":
                sign = -sign
        return sign * take("num")[1]

    def expr():
        p = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            q = term()
            p = p + q if op == "+" else p - q
        return p

    def term():
        sign = 1
        while peek()[0] == "op" and peek()[1] in "+-":
            if take()[1] == "-":
                sign = -sign
        p = factor()
        while True:
            tok = peek()
            if tok == ("op", "*"):
                take()
                p = p * factor()
            elif tok[0] in ("num", "var") or tok == ("op", "("):
                p = p * factor()
            else:
                break
        return p * sign

    def factor():
        tok = peek()
        if tok[0] == "num":
            take()
            base = LaurentPoly.const(tok[1], vars)
        elif tok[0] == "var":
            take()
            base = LaurentPoly.gen(tok[1], vars)
        elif tok == ("op", "("):
            take()
            base = expr()
            take("op", ")")
        else:
            raise UsageError(f"cannot parse polynomial {text!r}")
        if peek() == ("op", "^"):
            take()
            base = base ** signed_int()
        elif peek() == ("op", "*") and pos + 1 < len(toks) and toks[pos + 1] == ("op", "*"):
            take()
            take()
            base = base ** signed_int()
        return base

    if not toks:
        raise UsageError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise UsageError(f"trailing input in {text!r}")
    return result


def substitute_u(p: LaurentPoly, var: str = "x", vars=None) -> LaurentPoly:
    """Substitute ``z -> x - 1/x`` in a univariate polynomial with no negative powers."""
    vars = (var,) if vars is None else tuple(vars)
    if len(p.vars) != 1:
        raise UsageError("substitute_u needs a univariate polynomial")
    if p and p.min_degree() < 0:
        raise DomainError("negative powers cannot be substituted by x - 1/x")
    u = LaurentPoly(vars, {tuple(1 if v == var else 0 for v in vars): 1,
                           tuple(-1 if v == var else 0 for v in vars): -1})
    return p.subs({p.vars[0]: u}, vars)


def unsubstitute_u(p: LaurentPoly, var: str = "x", out_var: str = "z") -> LaurentPoly:
    """Inverse of :func:`substitute_u`: write a univariate Laurent polynomial in ``x - 1/x``.

    Raises DomainError when the input is not in the image.
    """
    if p.vars != (var,):
        p = p.embed((var,)) if var in p.vars and len(p.vars) == 1 else p
        if p.vars != (var,):
            raise UsageError(f"expected a polynomial in {var!r}")
    rem = p
    coeffs: dict = {}
    u = LaurentPoly((var,), {(1,): 1, (-1,): -1})
    while rem:
        d = rem.degree()
        if d < 0:
            raise DomainError("not a polynomial in x - 1/x")
        c = rem.coeff(d)
        coeffs[(d,)] = c
        rem = rem - (u ** d) * c
    return LaurentPoly((out_var,), coeffs)
