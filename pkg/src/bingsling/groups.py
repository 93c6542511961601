"""Normal forms in the discrete Heisenberg group, its twisted product with Z,
and the free product Z/3 * Z/2."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import UsageError


@dataclass(frozen=True)
class HeisElement:
    """``x^l y^m [y,x]^n``."""

    l: int = 0
    m: int = 0
    n: int = 0

    def __mul__(self, o: "HeisElement") -> "HeisElement":
        return HeisElement(self.l + o.l, self.m + o.m, self.n + o.n + self.m * o.l)

    def inverse(self) -> "HeisElement":
        return HeisElement(-self.l, -self.m, -self.n + self.l * self.m)

    def __pow__(self, k: int) -> "HeisElement":
        base = self if k >= 0 else self.inverse()
        out = HeisElement()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self):
        return self == HeisElement()


X = HeisElement(1, 0, 0)
Y = HeisElement(0, 1, 0)
Z = HeisElement(0, 0, 1)  # the commutator [y, x]


def heis_mul(a: HeisElement, b: HeisElement) -> HeisElement:
    return a * b


def heis_inv(a: HeisElement) -> HeisElement:
    return a.inverse()


def heis_phi(a: HeisElement) -> HeisElement:
    """Automorphism with ``x -> y^-1`` and ``y -> yx``."""
    l, m, n = a.l, a.m, a.n
    return HeisElement(m, m - l, n - l * m + m * (m + 1) // 2)


def heis_phi_inv(a: HeisElement) -> HeisElement:
    """Inverse automorphism: ``y -> x^-1``, ``x -> xy``."""
    l, m, n = a.l, a.m, a.n
    return HeisElement(l - m, l, n + l * (l - m) - l * (l + 1) // 2)


def heis_phi_power(a: HeisElement, k: int) -> HeisElement:
    f = heis_phi if k >= 0 else heis_phi_inv
    for _ in range(abs(k)):
        a = f(a)
    return a


@dataclass(frozen=True)
class GElement:
    """``t^k h`` in the twisted product where ``h t = t phi(h)``."""

    k: int = 0
    h: HeisElement = HeisElement()

    def __mul__(self, o: "GElement") -> "GElement":
        return GElement(self.k + o.k, heis_phi_power(self.h, o.k) * o.h)

    def inverse(self) -> "GElement":
        return GElement(-self.k, heis_phi_power(self.h.inverse(), -self.k))


T = GElement(1, HeisElement())


def g_of(h: HeisElement) -> GElement:
    return GElement(0, h)


def g_mul(a: GElement, b: GElement) -> GElement:
    return a * b


def g_conj(a: GElement, g: GElement) -> GElement:
    """``a^g = g^-1 a g``."""
    return g.inverse() * a * g


def conj_t_closed_form(l: int, m: int) -> GElement:
    """Conjugate of t by ``t^k x^l y^m [y,x]^n`` (independent of k and n)."""
    return GElement(1, HeisElement(l - m, l, l * (l - m) + m * (m - 1) // 2))


@dataclass(frozen=True)
class ConjugacyVerdict:
    conjugate: bool
    system: tuple
    system_consistent: bool
    search_bound: int
    witness: GElement | None

    def describe(self) -> str:
        eqs = ", ".join(self.system)
        if self.conjugate:
            return f"conjugate, witness {self.witness}"
        return (f"t and txy not conjugate; inconsistent system {eqs}; "
                f"no conjugator with |k|,|l|,|m|,|n| <= {self.search_bound}")


def conj_t_vs_txy(bound: int = 6) -> ConjugacyVerdict:
    """Decide whether t and txy are conjugate.

    Matching the closed form ``t x^{l-m} y^l [y,x]^{l(l-m)+m(m-1)/2}`` with
    ``t x y`` gives ``l - m = 1``, ``l = 1`` and ``l(l-m) + m(m-1)/2 = 0``.  The
    first two force ``(l, m) = (1, 0)`` and the third then reads ``1 = 0``.
    A bounded exhaustive search over conjugators corroborates the verdict.
    """
    system = ("l-m=1", "l=1", "l(l-m)+m(m-1)/2=0")
    l = 1
    m = l - 1
    consistent = l * (l - m) + m * (m - 1) // 2 == 0
    target = T * g_of(X * Y)
    witness = None
    rng = range(-bound, bound + 1)
    for k, a, b, c in product(rng, rng, rng, rng):
        g = GElement(k, HeisElement(a, b, c))
        if g_conj(T, g) == target:
            witness = g
            break
    return ConjugacyVerdict(witness is not None, system, consistent, bound, witness)


def abelianization_matrix():
    """Matrix of phi on ``H / [H, H]`` in the basis (x, y); columns are images."""
    cols = [heis_phi(X), heis_phi(Y)]
    return ((cols[0].l, cols[1].l), (cols[0].m, cols[1].m))


def _mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


@dataclass(frozen=True)
class AbelianizationReport:
    matrix: tuple
    det: int
    minus_identity: tuple
    det_minus_identity: int
    order: int | None

    @property
    def ok(self) -> bool:
        return abs(self.det) == 1 and abs(self.det_minus_identity) == 1


def abelianization_check(max_order: int = 24) -> AbelianizationReport:
    A = abelianization_matrix()
    B = ((A[0][0] - 1, A[0][1]), (A[1][0], A[1][1] - 1))
    I = ((1, 0), (0, 1))
    P, order = A, None
    for k in range(1, max_order + 1):
        if P == I:
            order = k
            break
        P = _mat_mul(P, A)
    return AbelianizationReport(A, _det(A), B, _det(B), order)


# words ---------------------------------------------------------------------

Word = tuple  # of (letter, exponent)

_WORD_TOKEN = re.compile(r"\s*(?:([xypqrt])|(\^)|([-+]?\d+)|([\[\],()]))")


def _free_reduce(word) -> Word:
    out: list = []
    for g, e in word:
        if not e:
            continue
        if out and out[-1][0] == g:
            s = out[-1][1] + e
            out.pop()
            if s:
                out.append((g, s))
        else:
            out.append((g, e))
    return tuple(out)


def word_inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def parse_word(text: str) -> Word:
    """Parse words like ``x^2 y^-1``, ``(xy)^3`` or ``[y,x]`` into a freely reduced letter list.

    ``[a,b]`` expands to ``a^-1 b^-1 a b``.
    """
    pos = 0
    toks = []
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise UsageError(f"cannot parse word at position {pos}: {text[pos:]!r}")
        pos = m.end()
        letter, caret, num, punct = m.groups()
        if letter:
            toks.append(("g", letter))
        elif caret:
            toks.append(("^", None))
        elif num:
            toks.append(("n", int(num)))
        elif punct:
            toks.append((punct, None))
    i = 0

    def peek():
        return toks[i][0] if i < len(toks) else None

    def seq(stop):
        out: list = []
        while peek() not in (None,) + stop:
            out.extend(atom())
        return out

    def atom():
        nonlocal i
        kind = peek()
        if kind == "g":
            base = [(toks[i][1], 1)]
            i += 1
        elif kind == "(":
            i += 1
            base = seq((")",))
            if peek() != ")":
                raise UsageError("unbalanced parentheses in word")
            i += 1
        elif kind == "[":
            i += 1
            a = seq((",",))
            if peek() != ",":
                raise UsageError("commutator needs a comma")
            i += 1
            b = seq(("]",))
            if peek() != "]":
                raise UsageError("unbalanced commutator bracket")
            i += 1
            base = list(word_inverse(a)) + list(word_inverse(b)) + a + b
        else:
            raise UsageError(f"unexpected token in word: {kind}")
        if peek() == "^":
            i += 1
            if peek() != "n":
                raise UsageError("exponent expected after ^")
            e = toks[i][1]
            i += 1
            base = list(word_inverse(base)) * (-e) if e < 0 else base * e
        return base

    result = seq(())
    if i != len(toks):
        raise UsageError("trailing input in word")
    return _free_reduce(result)


def word_to_g(word, images=None) -> GElement:
    """Evaluate a word over x, y, t (and optionally p = t) in the twisted product."""
    images = images or {"x": g_of(X), "y": g_of(Y), "t": T, "p": T}
    out = GElement()
    for g, e in word:
        if g not in images:
            raise UsageError(f"letter {g!r} has no image")
        base = images[g] if e > 0 else images[g].inverse()
        for _ in range(abs(e)):
            out = out * base
    return out


# free product Z/3 * Z/2 ---------------------------------------------------

ORDERS = {"p": 3, "q": 2}


@dataclass(frozen=True)
class FreeProductWord:
    """Reduced alternating syllables ``(factor, exponent)`` with exponents in 1..order-1."""

    syllables: tuple = ()

    def __len__(self):
        return len(self.syllables)

    def __mul__(self, o):
        return freeprod_reduce(self.syllables + o.syllables)

    def inverse(self):
        return freeprod_reduce(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __str__(self):
        if not self.syllables:
            return "1"
        return "".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


def freeprod_reduce(word) -> FreeProductWord:
    if isinstance(word, FreeProductWord):
        word = word.syllables
    out: list = []
    for g, e in word:
        if g not in ORDERS:
            raise UsageError(f"letter {g!r} is not a free-product generator")
        e %= ORDERS[g]
        if not e:
            continue
        if out and out[-1][0] == g:
            s = (out[-1][1] + e) % ORDERS[g]
            out.pop()
            if s:
                out.append((g, s))
        else:
            out.append((g, e))
    return FreeProductWord(tuple(out))


def freeprod_cyclic_reduce(word) -> FreeProductWord:
    w = list(freeprod_reduce(word).syllables)
    while len(w) >= 2 and w[0][0] == w[-1][0]:
        g = w[0][0]
        s = (w[0][1] + w[-1][1]) % ORDERS[g]
        w = w[1:-1]
        if s:
            w = [(g, s)] + w
        w = list(freeprod_reduce(w).syllables)
    return FreeProductWord(tuple(w))


def freeprod_conjugate_test(a, b) -> bool:
    """Conjugacy via cyclically reduced forms: rotations for length >= 2, equality otherwise."""
    a = freeprod_cyclic_reduce(a).syllables
    b = freeprod_cyclic_reduce(b).syllables
    if len(a) != len(b):
        return False
    if len(a) <= 1:
        return a == b
    return any(a[k:] + a[:k] == b for k in range(len(a)))


TREFOIL_IMAGES = {"x": (("p", -1), ("q", 1)), "y": (("q", -1), ("p", 2))}


def trefoil_word_translate(word) -> FreeProductWord:
    """Image of a word in x, y under ``x -> p^-1 q``, ``y -> q^-1 p^2``."""
    if isinstance(word, str):
        word = parse_word(word)
    out = []
    for g, e in word:
        if g in ORDERS:
            out.extend([(g, e)])
            continue
        if g not in TREFOIL_IMAGES:
            raise UsageError(f"letter {g!r} is not x or y")
        img = TREFOIL_IMAGES[g] if e > 0 else tuple((h, -f) for h, f in reversed(TREFOIL_IMAGES[g]))
        out.extend(img * abs(e))
    return freeprod_reduce(out)


@dataclass(frozen=True)
class MeridianReport:
    word: str
    image: FreeProductWord
    meridian_image: FreeProductWord
    alternations: int
    meridian_alternations: int
    conjugate: bool

    def describe(self) -> str:
        verdict = "conjugate" if self.conjugate else "not conjugate"
        return f"alternation {self.alternations} vs {self.meridian_alternations} => {verdict}"


def trefoil_meridian_check(word: str = "x^2 y^-1") -> MeridianReport:
    """Compare the cyclic alternation length of a word's image with that of the meridian x."""
    img = freeprod_cyclic_reduce(trefoil_word_translate(word))
    mer = freeprod_cyclic_reduce(trefoil_word_translate("x"))
    return MeridianReport(word, img, mer, len(img), len(mer), freeprod_conjugate_test(img, mer))


# the trefoil group as a twisted product ---------------------------------------

# Wirtinger generators p, q, r with x = r^-1 p = p q^-1 and y = p^-1 q = q r^-1.
# With t = p the words p and p^2 r^-1 = p x y are the two meridian candidates.
WIRTINGER_WORDS = {"x": "r^-1 p", "y": "p^-1 q", "r": "p x^-1", "q": "p y"}


def trefoil_meridians() -> tuple:
    """Images of the words ``p`` and ``p^2 r^-1`` (with ``r = p x^-1``) in the twisted product."""
    r = parse_word(WIRTINGER_WORDS["r"])
    w2 = parse_word("p^2") + word_inverse(r)
    return word_to_g(parse_word("p")), word_to_g(_free_reduce(w2))
