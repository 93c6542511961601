"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 verification mismatch, 4 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import conway, groups, knotmodule, rationality
from .errors import DomainError, LibraryDefect, ResourceError, UsageError
from .laurent import LaurentPoly

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_RESOURCE = 0, 2, 3, 4
OMEGA_MAX_R = 400


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None
    if not vals:
        raise UsageError("empty list")
    return vals


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _exp_key(e):
    return ":".join(str(x) for x in e)


def _csv_table(polys: dict) -> str:
    """Rows are exponents, one coefficient column per key of ``polys``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    keys = list(polys)
    if len(keys) == 1:
        w.writerow(["exponent", "coefficient"])
        for e, c in polys[keys[0]].sorted_terms():
            w.writerow([_exp_key(e), c])
    else:
        w.writerow(["exponent"] + [f"r={k}" for k in keys])
        exps = sorted(set().union(*[set(p.terms) for p in polys.values()]))
        for e in exps:
            w.writerow([_exp_key(e)] + [polys[k].coeff(e) for k in keys])
    return buf.getvalue()


# conway ----------------------------------------------------------------------

def _conway_one(which, r, verify):
    if which == "J":
        p = conway.nabla_J(r)
        ok = (conway.nabla_J_oracle(r) == p) if verify else None
    elif which == "M":
        p = conway.nabla_M(r)
        ok = (conway.conway_polynomial(conway.mazur_cover(r)) == p) if verify else None
    else:
        p = conway.omega_Mr(r)
        ok = (conway.omega_Mr_oracle(r) == p) if verify else None
    return r, p, ok


def cmd_conway(args, out):
    rs = _int_list(args.r)
    for r in rs:
        if r < 1:
            raise UsageError(f"r must be >= 1, got {r}")
        limit = OMEGA_MAX_R if args.which == "omega" else conway.MAX_R
        if r > limit:
            raise ResourceError(f"r={r} exceeds the limit {limit} for --which {args.which}; "
                                "split the job or compute smaller r")
    if args.jobs > 1 and len(rs) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_conway_one, [args.which] * len(rs), rs, [args.verify] * len(rs)))
    else:
        results = [_conway_one(args.which, r, args.verify) for r in rs]
    if args.format == "json":
        payload = {"which": args.which, "results": [
            {"r": r, "polynomial": p.to_json(), **({"verified": ok} if ok is not None else {})}
            for r, p, ok in results]}
        out.write(_dump(payload) + "\n")
    elif args.format == "csv":
        out.write(_csv_table({r: p for r, p, _ in results}))
    else:
        for r, p, ok in results:
            tag = "" if ok is None else ("  [verified]" if ok else "  [MISMATCH]")
            out.write(f"r={r}: {p}{tag}\n")
    if any(ok is False for _, _, ok in results):
        raise LibraryDefect("oracle mismatch")


# certify ---------------------------------------------------------------------

def default_certification_order(stages, M, N):
    """Smallest order at which the last stage has entered and the certification bound holds."""
    need = max(2 * M, N * N) + 1
    return max(need, stages[-1].P.min_degree(), M + N)


def cmd_certify(args, out):
    if args.demo:
        if args.demo == "rational-product":
            s, fit = rationality.counterexample_product(args.order or 16)
        elif args.demo == "mobius-sum":
            s, fit = rationality.counterexample_mobius_sum(args.order or 12)
        else:
            raise UsageError(f"unknown demo {args.demo!r}")
        payload = {"demo": args.demo, "order": s.order, "series": s.to_json(),
                   "fit": fit.to_json() if fit else None}
        text = _dump(payload) if args.format == "json" else \
            f"{args.demo}: fit = ({fit.P}) / ({fit.Q}) through order {s.order}"
        _emit(args, out, text)
        return EXIT_OK if fit else EXIT_MISMATCH
    if not args.variant or not args.r:
        raise UsageError("certify needs --variant and --r (or --demo)")
    sched = rationality.Schedule(args.variant, tuple(_int_list(args.r)))
    chk = rationality.schedule_validate(sched, construction=args.construction)
    if not chk:
        raise UsageError(f"invalid schedule at index {chk.first_violation}: {chk.reason}")
    if max(sched.rs) > 4000:
        raise ResourceError("schedules beyond r = 4000 are not supported at desk scale")
    stages = sched.stages()
    book = rationality.degree_bookkeeping(args.variant, stages[:-1] or stages)
    M = book.m if args.M is None else args.M
    N = book.n if args.N is None else args.N
    order = args.order or default_certification_order(stages, M, N)
    acc = rationality.accumulate_product if args.variant == "growth1" else rationality.accumulate_sum
    s = acc(stages, order)
    cert = rationality.certify_no_fit(s, rationality.RationalFitBound(M, N))
    payload = cert.to_json()
    payload["variant"] = args.variant
    payload["schedule"] = list(sched.rs)
    if args.format == "json":
        text = _dump(payload)
    else:
        text = (f"{args.variant} {list(sched.rs)}: bound M={M} N={N} order={cert.order}: "
                f"{cert.verdict} (rank {cert.rank} vs augmented {cert.rank_augmented})")
    _emit(args, out, text)
    return EXIT_MISMATCH if cert.verdict == "fit" else EXIT_OK


def _emit(args, out, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        out.write(text + "\n")


# group -----------------------------------------------------------------------

def cmd_group(args, out):
    if args.demo == "heis-conj":
        v = groups.conj_t_vs_txy(args.bound)
        payload = {"demo": args.demo, "conjugate": v.conjugate, "system": list(v.system),
                   "system_consistent": v.system_consistent, "search_bound": v.search_bound}
        text = v.describe()
        bad = v.conjugate or v.system_consistent
    elif args.demo == "trefoil-meridian":
        rep = groups.trefoil_meridian_check(args.word)
        payload = {"demo": args.demo, "word": rep.word, "image": str(rep.image),
                   "alternations": rep.alternations, "meridian_alternations": rep.meridian_alternations,
                   "conjugate": rep.conjugate}
        text = rep.describe()
        bad = False
    else:
        raise UsageError(f"unknown demo {args.demo!r}")
    out.write((_dump(payload) if args.format == "json" else text) + "\n")
    return EXIT_MISMATCH if bad else EXIT_OK


# module ----------------------------------------------------------------------

def _load_presentation(args):
    if args.delta:
        return knotmodule.cyclic_presentation(LaurentPoly.parse(args.delta, ("t",)))
    if args.free is not None:
        return knotmodule.free_presentation(args.free)
    if args.input:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return knotmodule.ModulePresentation.from_json(obj)
    raise UsageError("torsion needs --delta, --free or --input")


def cmd_module(args, out):
    if args.action == "reduce":
        pres = knotmodule.presentation_reduce_wild()
        ok = pres.rels[0][0] == knotmodule.wild_relator()
        payload = {"action": "reduce", "log": pres.log, "relator": pres.rels[0][0].to_json()}
        text = "\n".join(pres.log) + f"\nrelator: {pres.rels[0][0]}"
    elif args.action == "companion":
        act = knotmodule.wild_module_companion()
        det = act.det()
        ok = det.is_unit() and knotmodule.companion_identity_check(act)
        payload = {"action": "companion", **act.to_json(), "det": det.to_json(), "det_is_unit": det.is_unit()}
        rows = ["[" + ", ".join(str(e) for e in row) + "]" for row in act.matrix]
        text = "s-action on (x0, x1):\n" + "\n".join(rows) + f"\ndet = {det} (unit: {det.is_unit()})"
    elif args.action == "torsion":
        pres = _load_presentation(args)
        verdict = knotmodule.torsion_decide(pres)
        payload = {"action": "torsion", "torsion": verdict, "presentation": pres.to_json()}
        text = f"torsion={'true' if verdict else 'false'}"
        if len(pres.gens) == 1 and len(pres.rels) == 1:
            inv = knotmodule.one_minus_t_invertible(pres)
            payload["one_minus_t_invertible"] = inv
            text += f" one_minus_t_invertible={'true' if inv else 'false'}"
        ok = True
    else:
        raise UsageError(f"unknown action {args.action!r}")
    out.write((_dump(payload) if args.format == "json" else text) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser():
    p = _Parser(prog="bingsling", description="Exact Conway-potential, rationality, group and module computations.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")

    c = sub.add_parser("conway", help="Conway polynomials and potentials of the cover family")
    c.add_argument("--which", choices=("J", "M", "omega"), default="J")
    c.add_argument("--r", required=True, help="cover degree or comma-separated list")
    c.add_argument("--verify", action="store_true", help="cross-check against the roots-of-unity oracle")
    c.add_argument("--jobs", type=int, default=1)
    common(c)

    k = sub.add_parser("certify", help="rationality certificates for growth schedules")
    k.add_argument("--variant", choices=rationality.VARIANTS)
    k.add_argument("--r", help="comma-separated schedule")
    k.add_argument("--M", type=int)
    k.add_argument("--N", type=int)
    k.add_argument("--order", type=int)
    k.add_argument("--construction", action="store_true", help="also require r_(i+1)/(3 r_i) integral > 1")
    k.add_argument("--demo", help="rational-product or mobius-sum")
    k.add_argument("--output", help="write the certificate to this file")
    common(k)

    g = sub.add_parser("group", help="group-theoretic demos")
    g.add_argument("--demo", required=True)
    g.add_argument("--bound", type=int, default=6)
    g.add_argument("--word", default="x^2 y^-1")
    common(g)

    m = sub.add_parser("module", help="knot-module computations")
    m.add_argument("--action", required=True, choices=("reduce", "torsion", "companion"))
    m.add_argument("--delta", help="cyclic presentation <a | delta a>")
    m.add_argument("--free", type=int, help="free module of this rank")
    m.add_argument("--input", help="presentation JSON file ('-' for stdin)")
    common(m)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: conway, certify, group or module")
        handler = {"conway": cmd_conway, "certify": cmd_certify, "group": cmd_group, "module": cmd_module}
        code = handler[args.command](args, out)
        return EXIT_OK if code is None else code
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (LibraryDefect, DomainError) as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_MISMATCH
    except OSError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
