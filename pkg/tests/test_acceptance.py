"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``.  The pytest wrappers record the outcome so
that ``conftest.py`` can print a PASS/FAIL summary line per criterion, and the
module can also be run directly as a script.
"""
import random
import sys
import time

import pytest

from bingsling import conway, groups, knotmodule, rationality, walgebra
from bingsling.conway import XY, fibonacci, nabla_J, nabla_J_oracle, nabla_M, omega_Mr, omega_Mr_oracle
from bingsling.laurent import LaurentPoly, substitute_u
from bingsling.series import RationalSeries, TruncatedSeries

RESULTS = {}

x = LaurentPoly.gen("x", XY)
y = LaurentPoly.gen("y", XY)
u = x - x ** -1
v = y - y ** -1
z = LaurentPoly.gen("z")


def _timed(limit):
    def deco(fn):
        def run():
            t0 = time.perf_counter()
            ok, detail = fn()
            dt = time.perf_counter() - t0
            if dt > limit:
                ok, detail = False, f"{detail}; took {dt:.1f}s > {limit}s"
            return ok, f"{detail} ({dt:.1f}s)"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return deco


@_timed(60)
def criterion_1():
    """Oracle equivalence for the cover family."""
    bad = [r for r in range(1, 13) if nabla_J(r) != nabla_J_oracle(r)]
    bad += [f"omega r={r}" for r in range(1, 9) if omega_Mr(r) != omega_Mr_oracle(r)]
    return not bad, f"mismatches: {bad}" if bad else "nabla_J r<=12 and omega r<=8 agree"


@_timed(30)
def criterion_2():
    """Degree and normalization facts for r <= 30."""
    bad = []
    for r in range(1, 31):
        nj, nm, om = nabla_J(r), nabla_M(r), omega_Mr(r)
        if nj.degree() != 2 * r - 2:
            bad.append(f"deg J_{r}")
        if nm.degree() != 2 * r + 3:
            bad.append(f"deg M_{r}")
        if nj.evaluate({"z": 0}) != 1:
            bad.append(f"J_{r}(0)")
        if om.evaluate({"x": 1, "y": 1}) != 1:
            bad.append(f"omega_{r}(1,1)")
        if om.evaluate({"y": 1}) != substitute_u(nj, "x", ("x",)):
            bad.append(f"omega_{r}(x,1)")
        if nm == z * nj:
            bad.append(f"M_{r} degenerate")
    return not bad, f"failures: {bad}" if bad else "all r <= 30"


@_timed(60)
def criterion_3():
    """Generating function through order 40."""
    g = conway.nabla_J_generating_series(40)
    bad = [n for n in range(1, 41) if g[n] != nabla_J(n)]
    zdeg = max(p.degree() for p in g[1:])
    return not bad and zdeg <= 80, f"mismatched orders {bad}, max z-degree {zdeg}"


@_timed(5)
def criterion_4():
    """Known closed forms."""
    checks = {
        "omega M_1": omega_Mr(1) == 1 + (x * y + x ** -1 * y ** -1) * u * v,
        "nabla J_2": nabla_J(2) == 1 - 2 * z ** 2,
        "nabla J_3": nabla_J(3) == 1 + 3 * z ** 4,
        "nabla M_1": nabla_M(1) == z + 2 * z ** 3 + z ** 5,
    }
    bad = [k for k, ok in checks.items() if not ok]
    return not bad, f"failures: {bad}" if bad else "4 closed forms"


@_timed(30)
def criterion_5():
    """Rational fitting recovers random fractions; both cautionary series fit."""
    rng = random.Random(20260101)
    misses = 0
    for _ in range(500):
        M, N = rng.randint(0, 4), rng.randint(0, 3)
        P = LaurentPoly.from_coeffs([rng.randint(-5, 5) for _ in range(M + 1)])
        Q = LaurentPoly.from_coeffs([1] + [rng.randint(-4, 4) for _ in range(N)])
        order = 2 * (M + N) + 3
        s = TruncatedSeries.from_poly(P, order) / TruncatedSeries.from_poly(Q, order)
        fit = rationality.fit_rational(s, rationality.RationalFitBound(M, N))
        if fit is None or fit != RationalSeries(P, Q):
            misses += 1
    X = LaurentPoly.gen("x")
    _, f1 = rationality.counterexample_product(24)
    _, f2 = rationality.counterexample_mobius_sum(16)
    ok1 = f1 is not None and f1 == RationalSeries(LaurentPoly.const(2, ("x",)), 1 - X)
    ok2 = f2 is not None and f2 == RationalSeries(2 * X, 1 - 2 * X)
    return misses == 0 and ok1 and ok2, f"{misses}/500 missed; product fit {ok1}; mobius fit {ok2}"


@_timed(300)
def criterion_6():
    """No-fit certificates at the stated orders, and stage divisibility."""
    parts = []
    s2 = rationality.accumulate_sum(rationality.Schedule("growth2", (2, 10)).stages(), 10)
    c2 = rationality.certify_no_fit(s2, rationality.RationalFitBound(3, 2))
    parts.append(("growth2 (2,10) M=3 N=2 order 10", c2.verdict == "no-fit", c2.verdict))
    s1 = rationality.accumulate_product(rationality.Schedule("growth1", (2, 100)).stages(), 37)
    c1 = rationality.certify_no_fit(s1, rationality.RationalFitBound(6, 2))
    parts.append(("growth1 (2,100) M=6 N=2 order 37", c1.verdict == "no-fit", c1.verdict))
    for variant, r1, r2 in (("growth1", 2, 100), ("growth2", 2, 10)):
        val, thr = rationality.stage_divisibility(variant, r1, r2)
        parts.append((f"{variant} P_{r2} divisible by z^{thr}", val >= thr, f"valuation {val}"))
    ok = all(p[1] for p in parts)
    return ok, "; ".join(f"{name}: {res}" for name, _, res in parts)


@_timed(60)
def criterion_7():
    """w-algebra round trips, the w^2 relation, specialization and the cover identity."""
    bad = []
    corpus = list(conway.STORED_LINKS) + [conway.mazur_cover(r) for r in range(1, 9)]
    for L in corpus:
        e = walgebra.omega_to_w(L.potential, L.lk)
        if walgebra.w_to_omega(e) != L.potential:
            bad.append(f"round trip {L.name}")
        nab = conway.conway_polynomial(L)
        order = 2 * 8 + 8
        sp = e.specialize(order)
        expected = TruncatedSeries.from_poly(nab.exact_div(z) if nab else nab, order)
        if sp != expected:
            bad.append(f"specialization {L.name}")
    w = walgebra.WElement.w()
    uu = walgebra.WElement.monomial(2, 0, 0)
    vv = walgebra.WElement.monomial(0, 2, 0)
    uvw = walgebra.WElement.monomial(1, 1, 1)
    if w * w != uu + vv + 4 - uvw:
        bad.append("w^2 relation")
    for r in range(1, 21):
        sign = 1 if r % 2 else -1
        lhs = x ** r * y + sign * x ** -r * y ** -1
        rhs = v * substitute_u(fibonacci(r + 1), "x", XY) + (x ** -1 * y + x * y ** -1) * substitute_u(fibonacci(r), "x", XY)
        if lhs != rhs:
            bad.append(f"cover identity r={r}")
    return not bad, f"failures: {bad}" if bad else f"{len(corpus)} links, identity r<=20"


def _swapped_reduced(r, order):
    return walgebra.reduced_potential(conway.swap_components(conway.mazur_cover(r)), order)


@_timed(60)
def criterion_8():
    """The u-linear w-component of swapped covers, and additivity under splicing."""
    bad = []
    for r in range(1, 9):
        order = 2 * r + 6
        R = _swapped_reduced(r, order + 1)
        got = R.component(1, 1).truncate(order)
        vpoly = z.rename({"z": "v"})
        target = TruncatedSeries.from_poly(vpoly ** r * fibonacci(r, "v"), order) / \
            TruncatedSeries.from_poly(nabla_J(r).rename({"z": "v"}), order)
        if got != target:
            bad.append(r)
    L1 = conway.swap_components(conway.mazur_cover(2))
    L2 = conway.swap_components(conway.mazur_cover(3))
    order = 14
    c1 = walgebra.cochran_series(walgebra.reduced_potential(L1, order))
    c2 = walgebra.cochran_series(walgebra.reduced_potential(L2, order))
    cs = walgebra.cochran_series(walgebra.reduced_potential(conway.splice(L1, L2), order))
    add_ok = walgebra.cochran_splice_add(c1, c2) == cs
    ok = not bad and add_ok
    return ok, f"component mismatch at r={bad}; splice additivity {add_ok}"


@_timed(60)
def criterion_9():
    """Heisenberg conjugation, the (t, txy) verdict and the trefoil meridian test."""
    from itertools import product
    box = range(-3, 4)
    mism = 0
    for k, l, m, n in product(box, box, box, box):
        g = groups.GElement(k, groups.HeisElement(l, m, n))
        if groups.g_conj(groups.T, g) != groups.conj_t_closed_form(l, m):
            mism += 1
    verdict = groups.conj_t_vs_txy(6)
    rep = groups.trefoil_meridian_check("x^2 y^-1")
    ok = (mism == 0 and not verdict.conjugate and not verdict.system_consistent
          and (rep.alternations, rep.meridian_alternations) == (6, 2) and not rep.conjugate)
    return ok, (f"box mismatches {mism}; conjugate={verdict.conjugate}; "
                f"system consistent={verdict.system_consistent}; alternation {rep.alternations} vs {rep.meridian_alternations}")


@_timed(30)
def criterion_10():
    """Wild-module reduction, companion action, annihilator and the trefoil module."""
    pres = knotmodule.presentation_reduce_wild()
    s = LaurentPoly.gen("s", ("s", "t"))
    t = LaurentPoly.gen("t", ("s", "t"))
    displayed = s * (1 - t ** -1) + 2 * t - 3 + 2 * t ** -1 + s ** -1 * (1 - t)
    red_ok = len(pres.rels) == 1 and pres.rels[0][0] == displayed
    act = knotmodule.wild_module_companion()
    comp_ok = act.det().is_unit() and knotmodule.companion_identity_check(act)
    rng = random.Random(7)
    ann_ok = True
    for _ in range(100):
        lo = rng.randint(-4, 2)
        coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 6))]
        if not any(coeffs):
            coeffs[0] = 1
        p = LaurentPoly.from_coeffs(coeffs, "t", lo)
        ann_ok &= knotmodule.annihilator_trivial_check(p)
    T = LaurentPoly.gen("t")
    tref = knotmodule.cyclic_presentation(T * T - T + 1)
    tref_ok = knotmodule.torsion_decide(tref) and knotmodule.one_minus_t_invertible(tref)
    ok = red_ok and comp_ok and ann_ok and tref_ok
    return ok, f"relator {red_ok}; companion {comp_ok}; annihilator {ann_ok}; trefoil {tref_ok}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n):
    fn = CRITERIA[n - 1]
    ok, detail = fn()
    RESULTS[n] = (ok, f"{fn.__doc__.strip()} {detail}")
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(f"criterion {i}: {'PASS' if ok else 'FAIL'} - {fn.__doc__.strip()} {detail}")
    sys.exit(1 if failed else 0)
