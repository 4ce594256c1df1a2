"""Command line front end: compute objects, run verification suites."""

import argparse
import csv
import io
import json
import sys

from .coeffring import ADDITIVE, MULTIPLICATIVE, UNIVERSAL
from .duals import (MembershipError, dual_basis, dual_phat, dual_qhat,
                    coproduct_QL, phat_k, product_in_basis, qhat_k, qtilde_k)
from .fgl import FGLContext
from .localization import (WindowError, default_window, expand_greedy,
                           gkm_check, localize_family, phi)
from .series import ShapeError, TruncSeries, VarSet
from .uschur import P_L, P_L_plus, Q_L, USchurRequest, s_L, s_L_double
from .verify import SUITES, run_suite


class UsageError(ValueError):
    """Bad arguments; maps to exit code 2."""


def _parse_parts(text, name):
    if text is None or text == "":
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError("--%s expects a comma list of integers" % name)
    if any(p < 0 for p in parts):
        raise UsageError("--%s parts must be nonnegative" % name)
    return tuple(p for p in parts if p)


def _parse_spec(text):
    if text == "universal":
        return UNIVERSAL
    if text == "additive":
        return ADDITIVE
    if text == "mult":
        return MULTIPLICATIVE(None)
    if text.startswith("mult:"):
        try:
            return MULTIPLICATIVE(int(text[5:]))
        except ValueError:
            raise UsageError("--spec mult:<beta> expects an integer beta")
    raise UsageError("--spec must be universal, additive, mult, or mult:<beta>")


def _parse_b(text):
    if text == "zero":
        return 0
    if text == "symbolic":
        return None
    if text.startswith("symbolic:"):
        try:
            M = int(text[9:])
        except ValueError:
            raise UsageError("--b symbolic:<M> expects an integer M")
        if M < 0:
            raise UsageError("--b prefix must be nonnegative")
        return M
    raise UsageError("--b must be zero, symbolic, or symbolic:<M>")


def _context(args, default_trunc=4):
    N = args.trunc if args.trunc is not None else default_trunc
    if N < 0:
        raise UsageError("--trunc must be nonnegative")
    return FGLContext(N, _parse_spec(args.spec))


# ---------- output ----------

def _mono_str(mono, names):
    parts = []
    for k, e in enumerate(mono):
        if e == 1:
            parts.append(names[k])
        elif e:
            parts.append("%s^%d" % (names[k], e))
    return "*".join(parts) if parts else "1"


def _csv_rows(payload):
    if isinstance(payload, TruncSeries):
        rows = [("monomial", "coefficient")]
        for m, c in payload.sorted_terms():
            rows.append((_mono_str(m, payload.vars.names), str(c)))
        return rows
    if hasattr(payload, "sorted_items"):
        rows = [("label", "value")]
        for label, v in payload.sorted_items():
            if isinstance(v, TruncSeries):
                text = "; ".join("%s: %s" % (_mono_str(m, v.vars.names), c)
                                 for m, c in v.sorted_terms())
            else:
                text = str(v)
            rows.append((",".join(str(p) for p in label), text))
        return rows
    if isinstance(payload, dict):
        rows = [("key", "value")]
        for k in sorted(payload):
            rows.append((str(k), json.dumps(_jsonable(payload[k]),
                                            sort_keys=True)))
        return rows
    raise UsageError("this verb has no csv rendering")


def _jsonable(obj):
    if hasattr(obj, "to_json_obj"):
        return obj.to_json_obj()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(payload, args):
    if args.fmt == "json":
        text = json.dumps(_jsonable(payload), sort_keys=True,
                          separators=(",", ":")) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in _csv_rows(payload):
            writer.writerow(row)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------- verb handlers ----------

def _do_fgl(args):
    ctx = _context(args, 5)
    N = ctx.trunc
    if args.action == "sum":
        vs = VarSet(0, 0, 0, 2)
        u = TruncSeries.variable(vs, N, "t1")
        v = TruncSeries.variable(vs, N, "t2")
        return ctx.formal_sum(u, v)
    t = TruncSeries.variable(VarSet(0, 0, 0, 1), N, "t1")
    if args.action == "inverse":
        return ctx.formal_inverse(t)
    return ctx.n_series(args.n, t)


def _do_schur(args):
    lam = _parse_parts(args.lam, "lambda")
    ctx = _context(args)
    n = args.nvars if args.nvars is not None else max(len(lam), 1)
    b = _parse_b(args.bpol)
    if args.action == "sfn":
        return s_L(lam, n, ctx, b_prefix=b)
    if args.action == "sfn-double":
        return s_L_double(lam, n, ctx)
    req = USchurRequest(lam, n, ctx, b_prefix=b,
                        plus_variant=args.kind == "P+")
    if args.kind == "Q":
        return Q_L(req)
    if args.kind == "P+":
        return P_L_plus(req)
    return P_L(req)


def _do_dual(args):
    ctx = _context(args)
    if args.action == "pair":
        lam = _parse_parts(args.lam, "lambda")
        if not lam:
            raise UsageError("dual pair needs --lambda")
        kw = {"n": args.nvars, "m": args.yvars}
        return {
            "lambda": list(lam),
            "phat": dual_phat(lam, ctx, **kw),
            "qhat": dual_qhat(lam, ctx, **kw),
        }
    if args.k is None:
        raise UsageError("dual %s needs --k" % args.action)
    if args.action == "qtilde":
        n = args.nvars if args.nvars is not None else 3
        return qtilde_k(args.k, n, ctx)
    m = args.yvars if args.yvars is not None else 4
    if args.action == "qhat":
        return qhat_k(args.k, m, ctx)
    return phat_k(args.k, m, ctx)


def _do_hopf(args):
    ctx = _context(args)
    lam = _parse_parts(args.lam, "lambda")
    if args.action == "coproduct":
        n1 = args.nvars if args.nvars is not None else 2
        n2 = args.yvars if args.yvars is not None else 2
        out = coproduct_QL(lam, n1, n2, ctx, use_P=args.basis == "PL")
        entries = []
        for (mu, nu) in sorted(out):
            entries.append({"mu": list(mu), "nu": list(nu),
                            "coeff": out[(mu, nu)]})
        return {"lambda": list(lam), "basis": args.basis, "entries": entries}
    mu = _parse_parts(args.mu, "mu")
    if args.basis in ("QL", "PL"):
        n = args.nvars if args.nvars is not None else \
            max(len(lam), len(mu), 2)
        build = Q_L if args.basis == "QL" else P_L
        f = (build(USchurRequest(lam, n, ctx, b_prefix=0))
             * build(USchurRequest(mu, n, ctx, b_prefix=0)))
        return product_in_basis(f, args.basis, ctx)
    size = sum(lam) + sum(mu)
    m = args.yvars if args.yvars is not None else 2
    vals = dual_basis(ctx, args.basis, max_size=size, n=max(size, 1), m=m,
                      trunc=size + ctx.trunc)
    f = vals[lam].truncate_to(size) * vals[mu].truncate_to(size)
    return product_in_basis(f, args.basis, ctx, basis_values=vals)


def _loc_class(lam, n, kind, ctx):
    if kind == "A":
        return s_L(lam, n, ctx)
    if kind == "C":
        return Q_L(USchurRequest(lam, n, ctx))
    return P_L(USchurRequest(lam, n, ctx, plus_variant=True))


def _do_loc(args):
    ctx = _context(args)
    kind = args.type
    lam = _parse_parts(args.lam, "lambda")
    n = args.nvars if args.nvars is not None else max(len(lam), 2)
    if args.action == "phi":
        mu = _parse_parts(args.mu, "mu")
        return phi(_loc_class(lam, n, kind, ctx), mu, n, kind, ctx)
    K = args.window if args.window is not None else 4
    if args.action == "gkm":
        F = _loc_class(lam, n, kind, ctx)
        fam = localize_family(F, n, kind, default_window(kind, n, K), ctx)
        rep = gkm_check(fam, ctx)
        payload = {"ok": rep.ok, "checked": rep.checked,
                   "failures": [{"mu": list(mu), "root": str(rt),
                                 "nu": list(nu)}
                                for (mu, rt, nu) in rep.failures]}
        return payload if rep.ok else VerifyFailure(payload)
    F = _loc_class(lam, n, kind, ctx)
    mu = _parse_parts(args.mu, "mu")
    if mu:
        G = _loc_class(mu, n, kind, ctx)
        vs = VarSet(*[max(a, b) for a, b in
                      zip(F.vars.counts, G.vars.counts)])
        F = F.embed(vs, F.trunc) * G.embed(vs, G.trunc)
    return expand_greedy(F, kind, n, ctx, K=K)


class VerifyFailure(object):
    """Payload wrapper that forces exit code 1 after printing."""

    def __init__(self, payload):
        self.payload = payload


def _do_verify(args):
    results = run_suite(args.suite, trunc=args.trunc, max_size=args.max_size)
    lines = []
    ok = True
    for r in results:
        lines.extend(r.lines)
        lines.append("suite %s: %s" % (r.name, "ok" if r.ok else "FAIL"))
        ok = ok and r.ok
    if args.fmt == "json":
        payload = {"ok": ok,
                   "suites": [{"name": r.name, "ok": r.ok, "lines": r.lines}
                              for r in results]}
        text = json.dumps(payload, sort_keys=True,
                          separators=(",", ":")) + "\n"
    else:
        text = "".join(l + "\n" for l in lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


# ---------- parser ----------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="fglsym",
        description="Universal symmetric functions over a formal group law")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, help="truncation degree")
    common.add_argument("--nvars", type=int, help="x-variable count")
    common.add_argument("--yvars", type=int, help="y-variable count")
    common.add_argument("--lambda", dest="lam", metavar="PARTS",
                        help="partition as a comma list, e.g. 2,1")
    common.add_argument("--mu", metavar="PARTS",
                        help="second partition as a comma list")
    common.add_argument("--b", dest="bpol", default="symbolic",
                        help="b policy: zero | symbolic | symbolic:<M>")
    common.add_argument("--spec", default="universal",
                        help="coefficients: universal | additive | mult[:beta]")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"),
                        default="json")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; runs are sequential")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("fgl", help="formal group law series")
    s2 = p.add_subparsers(dest="action", required=True)
    s2.add_parser("sum", parents=[common])
    s2.add_parser("inverse", parents=[common])
    pn = s2.add_parser("nseries", parents=[common])
    pn.add_argument("--n", type=int, required=True, help="multiplier")

    p = sub.add_parser("schur", help="universal Schur families")
    s2 = p.add_subparsers(dest="action", required=True)
    pq = s2.add_parser("pq", parents=[common])
    pq.add_argument("--kind", choices=("P", "Q", "P+"), default="Q")
    s2.add_parser("sfn", parents=[common])
    s2.add_parser("sfn-double", parents=[common])

    p = sub.add_parser("dual", help="dual generators and dual bases")
    s2 = p.add_subparsers(dest="action", required=True)
    for name in ("qhat", "phat", "qtilde"):
        pg = s2.add_parser(name, parents=[common])
        pg.add_argument("--k", type=int, help="generator index")
    s2.add_parser("pair", parents=[common])

    p = sub.add_parser("hopf", help="coproducts and structure constants")
    s2 = p.add_subparsers(dest="action", required=True)
    pc = s2.add_parser("coproduct", parents=[common])
    pc.add_argument("--basis", choices=("QL", "PL"), default="QL")
    ps = s2.add_parser("structure", parents=[common])
    ps.add_argument("--basis", choices=("QL", "PL", "phat", "qhat"),
                    default="QL")

    p = sub.add_parser("loc", help="localization maps and expansion")
    s2 = p.add_subparsers(dest="action", required=True)
    for name in ("phi", "gkm", "expand"):
        pl = s2.add_parser(name, parents=[common])
        pl.add_argument("--type", choices=("A", "C", "D"), required=True)
        pl.add_argument("--window", type=int, help="window size bound")

    p = sub.add_parser("verify", help="named verification suites")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--trunc", type=int)
    p.add_argument("--out")
    p.add_argument("--format", dest="fmt", choices=("json", "text"),
                   default="text")
    p.add_argument("--threads", type=int, default=1)
    return ap


_HANDLERS = {
    "fgl": _do_fgl,
    "schur": _do_schur,
    "dual": _do_dual,
    "hopf": _do_hopf,
    "loc": _do_loc,
}


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.verb == "verify":
            return _do_verify(args)
        payload = _HANDLERS[args.verb](args)
    except UsageError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except MembershipError as e:
        sys.stderr.write("failure: %s\n" % e)
        return 1
    except (ShapeError, WindowError, ValueError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    if isinstance(payload, VerifyFailure):
        _emit(payload.payload, args)
        return 1
    _emit(payload, args)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
