"""Named verification suites bundling the library's identity checks.

Each suite recomputes one family of statements from scratch and returns a
VerifyResult with one ok/FAIL line per statement.  The command line `verify`
verb and the acceptance tests both run these functions.
"""

from collections import namedtuple
from math import comb

from .coeffring import ADDITIVE, CoeffPoly, MULTIPLICATIVE, a_gen
from .combinat import (euler_product, lambda_to_w_A, lambda_to_w_C,
                       partitions_in_box, reduced_word,
                       strict_partitions_up_to, w_to_lambda_A, w_to_lambda_C)
from .duals import (check_cauchy, check_printed_qhat_squares,
                    check_qhat_relation, coproduct_QL, dual_phat, dual_qhat,
                    phat_k, product_in_basis, qhat_k)
from .fgl import FGLContext, eliminate_even_phat
from .localization import (expand_greedy, gkm_check, localize_family, phi,
                           recombine, window_A, window_CD)
from .series import TruncSeries, VarSet
from .sympoly import (check_classical_q_relation, classical_P, classical_Q,
                      classical_q, complete, expand_in_classical_Q, schur_s)
from .uschur import (P_L, Q_L, USchurRequest, check_factorization,
                     check_supersymmetric, s_L, vanishing_diagonal_QL,
                     vanishing_diagonal_sL)

VerifyResult = namedtuple("VerifyResult", "name ok lines")


def _check(lines, ok, text):
    lines.append("%s: %s" % ("ok" if ok else "FAIL", text))
    return ok


def _result(name, lines):
    return VerifyResult(name, all(l.startswith("ok") for l in lines), lines)


def _common(f, g):
    cf, cg = f.vars.counts, g.vars.counts
    vs = VarSet(*[max(a, b) for a, b in zip(cf, cg)])
    N = min(f.trunc, g.trunc)
    fe = f.embed(vs, f.trunc)
    ge = g.embed(vs, g.trunc)
    if fe.trunc > N:
        fe = fe.truncate_to(N)
    if ge.trunc > N:
        ge = ge.truncate_to(N)
    return fe, ge


def _eq(f, g):
    """Equality after embedding into a common variable set and precision."""
    fe, ge = _common(f, g)
    return fe == ge


def _mul(f, g):
    fe, ge = _common(f, g)
    return fe * ge


def _partitions(max_size, max_len):
    out = [tuple(p.parts) for p in partitions_in_box(max_len, max_size)]
    return [t for t in out if t and sum(t) <= max_size]


def _stricts(max_size, max_len=None):
    out = [tuple(p.parts) for p in strict_partitions_up_to(max_size)]
    if max_len is not None:
        out = [t for t in out if len(t) <= max_len]
    return [t for t in out if t]


# ---------- 1: coefficients of the formal inverse ----------

def inverse_golden(trunc=None, max_size=None):
    """The first five coefficients of the formal inverse series."""
    N = 5 if trunc is None else trunc
    ctx = FGLContext(max(N, 5))
    a11, a12, a13 = a_gen(1, 1), a_gen(1, 2), a_gen(1, 3)
    a22 = a_gen(2, 2)
    want = {
        1: CoeffPoly.const(-1),
        2: a11,
        3: -(a11 ** 2),
        4: a11 ** 3 + a11 * a12 + 2 * a13 - a22,
        5: -(a11 ** 4) - 3 * (a11 ** 2) * a12 - 6 * a11 * a13
           + 3 * a11 * a22,
    }
    got = ctx.inverse_coeffs(5)
    lines = []
    for d in range(1, 6):
        _check(lines, got.get(d, CoeffPoly.zero()) == want[d],
               "inverse coefficient at degree %d" % d)
    return _result("inverse-golden", lines)


# ---------- 2: the 2-series and the inverse axiom ----------

def two_series_golden(trunc=None, max_size=None):
    """Doubling coefficients alpha_1..alpha_5 and F(t, i(t)) = 0."""
    N = 8 if trunc is None else trunc
    ctx = FGLContext(max(N, 5))
    a11, a12, a13, a14 = (a_gen(1, 1), a_gen(1, 2), a_gen(1, 3),
                          a_gen(1, 4))
    a22, a23 = a_gen(2, 2), a_gen(2, 3)
    want = {
        1: CoeffPoly.const(2),
        2: a11,
        3: 2 * a12,
        4: 2 * a13 + a22,
        5: 2 * a14 + 2 * a23,
    }
    lines = []
    for d in range(1, 6):
        _check(lines, ctx.alpha(d) == want[d],
               "2-series coefficient alpha_%d" % d)
    deep = FGLContext(N)
    vs = VarSet(0, 0, 0, 1)
    t = TruncSeries.variable(vs, N, "t1")
    _check(lines, deep.formal_sum(t, deep.formal_inverse(t)).is_zero(),
           "F(t, inverse(t)) = 0 through degree %d" % N)
    return _result("two-series-golden", lines)


# ---------- 3: dual generators in the complete basis ----------

def dual_generators_golden(trunc=None, max_size=None):
    """qhat_1..3 and phat_1..3 against their h-polynomial closed forms."""
    N = 4 if trunc is None else trunc
    m = 4
    ctx = FGLContext(N)
    a11, a12 = a_gen(1, 1), a_gen(1, 2)
    hs = {k: complete(k, m).pad_trunc(N) for k in range(1, 4)}
    h1, h2, h3 = hs[1], hs[2], hs[3]
    core = h3 - h2 * h1 + h1 * h1 * h1
    want_q = {
        1: h1.scale(2),
        2: (h1 * h1).scale(2) - h1.scale(a11),
        3: core.scale(2) + h2.scale(2 * a11) - (h1 * h1).scale(3 * a11)
           + h1.scale(a11 ** 2),
    }
    want_p = {
        1: h1,
        2: h1 * h1 - h1.scale(a11),
        3: core + h2.scale(a11) - (h1 * h1).scale(2 * a11)
           + h1.scale(a11 ** 2 - a12),
    }
    xv = VarSet(m, 0, 0, 0)
    ren = {"y%d" % j: "x%d" % j for j in range(1, m + 1)}
    lines = []
    for k in range(1, 4):
        q = qhat_k(k, m, ctx).rename_vars(xv, ren)
        _check(lines, _eq(q, want_q[k]), "qhat_%d closed form" % k)
    for k in range(1, 4):
        p = phat_k(k, m, ctx).rename_vars(xv, ren)
        _check(lines, _eq(p, want_p[k]), "phat_%d closed form" % k)
    return _result("dual-generators-golden", lines)


# ---------- 4: quadratic relations and even-index elimination ----------

def _dict_add(A, B, s=1):
    out = dict(A)
    for m, c in B.items():
        v = out.get(m, 0) + s * c
        if _nz(v):
            out[m] = v
        elif m in out:
            del out[m]
    return out


def _dict_mul(A, B):
    out = {}
    for ma, ca in A.items():
        for mb, cb in B.items():
            m = tuple(sorted(ma + mb, reverse=True))
            v = out.get(m, 0) + ca * cb
            out[m] = v
    return {m: c for m, c in out.items() if _nz(c)}


def _nz(c):
    if hasattr(c, "is_zero"):
        return not c.is_zero()
    return c != 0


def _z_additive(i, cache):
    """Generator z_i with even indices removed via z_2n = sum of products."""
    if i % 2 == 1:
        return {(i,): 1}
    n = i // 2
    if n in cache:
        return cache[n]
    acc = {}
    for a in range(1, 2 * n):
        term = _dict_mul(_z_additive(a, cache), _z_additive(2 * n - a, cache))
        acc = _dict_add(acc, term, (-1) ** (a + 1))
    cache[n] = acc
    return acc


def _eta_mult(i, cache):
    """Generator eta_i under the beta = -1 relation, evens eliminated.

    The relation of index k reads, with eta_0 = 0 and C binomial:
      (2 eta_k + eta_{k-1})
      + sum_{a=1}^{k-1} (-1)^a (2 eta_{k-a} + eta_{k-a-1})
          * sum_{j=1}^{a} (2 C(a-1, j-1) + C(a-1, j)) eta_j
      + (-1)^k sum_{j=1}^{k} (2 C(k-1, j-1) + C(k-1, j)) eta_j = 0.
    For even k the unknown eta_k appears with total coefficient 4.
    """
    if i == 0:
        return {}
    if i % 2 == 1:
        return {(i,): 1}
    if i in cache:
        return cache[i]
    k = i
    acc = _eta_mult(k - 1, cache)
    for a in range(1, k):
        left = _dict_add(_dict_mul({(): 2}, _eta_mult(k - a, cache)),
                         _eta_mult(k - a - 1, cache))
        right = {}
        for j in range(1, a + 1):
            right = _dict_add(right, _eta_mult(j, cache),
                              2 * comb(a - 1, j - 1) + comb(a - 1, j))
        acc = _dict_add(acc, _dict_mul(left, right), (-1) ** a)
    for j in range(1, k):
        acc = _dict_add(acc, _eta_mult(j, cache),
                        (-1) ** k * (2 * comb(k - 1, j - 1) + comb(k - 1, j)))
    out = {}
    for m, c in acc.items():
        if c % 4:
            raise AssertionError("relation %d is not divisible by 4" % k)
        out[m] = -c // 4
    cache[i] = out
    return out


def _phat_odd_expansion(k, ctx, cache):
    """phat_{2k} over odd-index monomials via repeated elimination."""
    if k in cache:
        return cache[k]
    exp = eliminate_even_phat(k, ctx)
    out = {}
    for label, c in sorted(exp.entries.items()):
        term = {(): c}
        for idx in label:
            if idx % 2 == 1:
                term = _dict_mul(term, {(idx,): CoeffPoly.one()})
            else:
                term = _dict_mul(term, _phat_odd_expansion(idx // 2, ctx,
                                                           cache))
        out = _dict_add(out, term)
    cache[k] = out
    return out


def _as_poly_dict(d):
    return {m: CoeffPoly.const(c) for m, c in d.items()}


def relation_suite(trunc=None, max_size=None):
    """Quadratic relations among the duals and even-index elimination."""
    N = 5 if trunc is None else trunc
    ctx = FGLContext(N)
    lines = []
    for i in range(0, N + 1):
        _check(lines, check_qhat_relation(i, ctx),
               "qhat quadratic relation, degree %d" % i)
    sq2, sq3 = check_printed_qhat_squares(FGLContext(4))
    _check(lines, sq2, "qhat_2 square identity")
    _check(lines, sq3, "qhat_3 square identity")
    actx = FGLContext(max(3, min(N, 4)), ADDITIVE)
    m = 4
    xv = VarSet(m, 0, 0, 0)
    ren = {"y%d" % j: "x%d" % j for j in range(1, m + 1)}
    for i in range(1, 4):
        q = qhat_k(i, m, actx).rename_vars(xv, ren)
        _check(lines, _eq(q, classical_q(i, m).pad_trunc(actx.trunc)),
               "additive qhat_%d is the classical generator" % i)
        _check(lines, check_classical_q_relation(i),
               "classical quadratic relation, degree %d" % i)
    zc = {}
    pc_add = {}
    for k in (1, 2):
        got = _phat_odd_expansion(k, FGLContext(2 * k, ADDITIVE), pc_add)
        _check(lines, got == _as_poly_dict(_z_additive(2 * k, zc)),
               "additive elimination of phat_%d matches the recursion"
               % (2 * k))
    ec = {}
    pc_mul = {}
    for k in (1, 2):
        got = _phat_odd_expansion(k, FGLContext(2 * k, MULTIPLICATIVE(-1)),
                                  pc_mul)
        _check(lines, got == _as_poly_dict(_eta_mult(2 * k, ec)),
               "beta = -1 elimination of phat_%d matches the recursion"
               % (2 * k))
    hand = {(1, 1): 1, (1,): -1}
    _check(lines, _eta_mult(2, {}) == hand,
           "eta_2 = eta_1^2 - eta_1")
    hand4 = {(3, 1): 2, (3,): -2, (1, 1, 1, 1): -1, (1, 1, 1): 3,
             (1, 1): -3, (1,): 1}
    _check(lines, _eta_mult(4, {}) == hand4,
           "eta_4 closed form")
    ctx4 = FGLContext(4)
    exp1 = eliminate_even_phat(1, ctx4)
    p1 = phat_k(1, 4, ctx4)
    acc = TruncSeries.zero(p1.vars, p1.trunc)
    for mono, c in exp1.entries.items():
        term = TruncSeries.const(p1.vars, p1.trunc, 1)
        for idx in mono:
            term = term * phat_k(idx, 4, ctx4)
        acc = acc + term.scale(c)
    _check(lines, _eq(acc, phat_k(2, 4, ctx4)),
           "eliminated phat_2 matches the concrete series")
    return _result("relations", lines)


# ---------- 5: supersymmetry ----------

def supersymmetry_suite(trunc=None, max_size=None):
    """Cancellation under x1 = t, x2 = inverse(t), plus the divisibility
    refinement for the Q family."""
    N = 6 if trunc is None else trunc
    S = 4 if max_size is None else max_size
    n, prefix = 3, 5
    ctx = FGLContext(N)
    lines = []
    for lam in _stricts(S, n):
        req = USchurRequest(lam, n, ctx, b_prefix=prefix)
        p = check_supersymmetric(P_L(req), ctx)
        _check(lines, p.supersymmetric, "P %r is supersymmetric" % (lam,))
        q = check_supersymmetric(Q_L(req), ctx)
        _check(lines, q.supersymmetric, "Q %r is supersymmetric" % (lam,))
        _check(lines, q.gamma_plus,
               "Q %r has the doubled-variable divisibility" % (lam,))
    return _result("supersym", lines)


# ---------- 6: stability under dropping a variable ----------

def _drop_x(f, names):
    for name in names:
        f = f.coefficient_of_power(name, 0)
    return f.without_vars(list(names))


def stability_suite(trunc=None, max_size=None):
    """Setting the last variable to zero at b = 0, and the two-step and
    one-step stability with symbolic b."""
    N = 4 if trunc is None else trunc
    S = 4 if max_size is None else max_size
    ctx = FGLContext(N)
    lines = []
    for n in (2, 3, 4):
        for lam in _stricts(S, n - 1):
            big = USchurRequest(lam, n, ctx, b_prefix=0)
            small = USchurRequest(lam, n - 1, ctx, b_prefix=0)
            okp = _eq(_drop_x(P_L(big), ["x%d" % n]), P_L(small))
            _check(lines, okp, "b = 0: P %r stable from %d to %d variables"
                   % (lam, n, n - 1))
            okq = _eq(_drop_x(Q_L(big), ["x%d" % n]), Q_L(small))
            _check(lines, okq, "b = 0: Q %r stable from %d to %d variables"
                   % (lam, n, n - 1))
    for lam in _stricts(S, 2):
        M = lam[0] + 4
        big = P_L(USchurRequest(lam, 4, ctx, b_prefix=M))
        small = P_L(USchurRequest(lam, 2, ctx, b_prefix=M))
        _check(lines, _eq(_drop_x(big, ["x4", "x3"]), small),
               "P %r stable from 4 to 2 variables" % (lam,))
        bigq = Q_L(USchurRequest(lam, 3, ctx, b_prefix=M))
        smallq = Q_L(USchurRequest(lam, 2, ctx, b_prefix=M))
        _check(lines, _eq(_drop_x(bigq, ["x3"]), smallq),
               "Q %r stable from 3 to 2 variables" % (lam,))
    M = 5
    one = P_L(USchurRequest((1,), 2, ctx, b_prefix=M))
    single = P_L(USchurRequest((1,), 1, ctx, b_prefix=M))
    _check(lines, not _eq(_drop_x(one, ["x2"]), single),
           "P (1,) is not stable under a single drop with symbolic b")
    return _result("stability", lines)


# ---------- 7: factorization at staircase shapes ----------

def factorization_suite(trunc=None, max_size=None):
    """P at rho_{n-1} + lam and Q at rho_n + lam factor through s."""
    N = 6 if trunc is None else trunc
    S = 3 if max_size is None else max_size
    ctx = FGLContext(N)
    lines = []
    for n in (2, 3):
        for lam in [()] + _partitions(S, n):
            p_ok, q_ok = check_factorization(lam, n, ctx)
            _check(lines, p_ok,
                   "P factorization at lam = %r, n = %d" % (lam, n))
            _check(lines, q_ok,
                   "Q factorization at lam = %r, n = %d" % (lam, n))
    return _result("factorization", lines)


# ---------- 8: vanishing and the diagonal values ----------

def _contains(big, small):
    big, small = tuple(big), tuple(small)
    if len(small) > len(big):
        return False
    return all(big[i] >= small[i] for i in range(len(small)))


def vanishing_suite(trunc=None, max_size=None):
    """Localizations vanish off the order filter and match the closed
    product on the diagonal."""
    N = 6 if trunc is None else trunc
    S = 4 if max_size is None else max_size
    ctx = FGLContext(N)
    lines = []
    n = 3
    shapes = _partitions(S, n)
    zero_a = bad_a = 0
    for lam in shapes:
        F = s_L(lam, n, ctx)
        for mu in shapes:
            if _contains(mu, lam):
                continue
            if phi(F, mu, n, "A", ctx).is_zero():
                zero_a += 1
            else:
                bad_a += 1
        diag = phi(F, lam, n, "A", ctx)
        closed = vanishing_diagonal_sL(lam, n, ctx)
        prod = euler_product(lam, n, "A", ctx)
        _check(lines, _eq(diag, closed) and _eq(closed, prod),
               "s diagonal value at %r equals the root product" % (lam,))
    _check(lines, bad_a == 0,
           "s localizations vanish off the filter (%d pairs)" % zero_a)
    nq = 2
    sshapes = _stricts(S, nq)
    zero_c = bad_c = 0
    for lam in sshapes:
        F = Q_L(USchurRequest(lam, nq, ctx))
        for mu in sshapes:
            if _contains(mu, lam):
                continue
            if phi(F, mu, nq, "C", ctx).is_zero():
                zero_c += 1
            else:
                bad_c += 1
        diag = phi(F, lam, nq, "C", ctx)
        closed = vanishing_diagonal_QL(lam, ctx)
        prod = euler_product(lam, nq, "C", ctx)
        _check(lines, _eq(diag, closed) and _eq(closed, prod),
               "Q diagonal value at %r equals the root product" % (lam,))
    _check(lines, bad_c == 0,
           "Q localizations vanish off the filter (%d pairs)" % zero_c)
    return _result("vanishing", lines)


# ---------- 9: the Cauchy identity and one-row duals ----------

def cauchy_suite(trunc=None, max_size=None):
    """Recombining bases against their duals gives the product kernel."""
    N = 4 if trunc is None else trunc
    ctx = FGLContext(N)
    lines = []
    _check(lines, check_cauchy(ctx, side="phat", n=4, m=4),
           "sum of Q x phat duals equals the kernel (degree %d)" % N)
    _check(lines, check_cauchy(ctx, side="qhat", n=4, m=4),
           "sum of P x qhat duals equals the kernel (degree %d)" % N)
    for k in range(1, 4):
        d = dual_phat((k,), ctx, n=2, m=4, trunc=N + k)
        _check(lines, _eq(d.truncate_to(N), phat_k(k, 4, ctx)),
               "one-row phat dual %d equals the generator" % k)
        dq = dual_qhat((k,), ctx, n=2, m=4, trunc=N + k)
        _check(lines, _eq(dq.truncate_to(N), qhat_k(k, 4, ctx)),
               "one-row qhat dual %d equals the generator" % k)
    return _result("cauchy", lines)


# ---------- 10: Hopf duality of structure constants ----------

def _classical_Q_constants(mu, nu, S, nvars):
    f = classical_Q(mu, nvars).pad_trunc(S) * classical_Q(nu, nvars).pad_trunc(S)
    return expand_in_classical_Q(f, nvars).entries


def duality_suite(trunc=None, max_size=None):
    """Coproduct constants equal product constants of the dual basis."""
    N = 4 if trunc is None else trunc
    S = 4 if max_size is None else max_size
    ctx = FGLContext(N)
    lines = []
    W = min(S, N)
    T = W + 4
    lams = _stricts(W)
    pairs = [(mu, nu) for mu in lams for nu in lams
             if sum(mu) + sum(nu) <= W]
    for side, use_P in (("phat", False), ("qhat", True)):
        co = {}
        for lam in lams:
            co[lam] = coproduct_QL(lam, 2, 2, ctx, use_P=use_P)
        vals = dual_basis_cached(ctx, side, W, T)
        mismatches = 0
        checked = 0
        for mu, nu in pairs:
            f = vals[mu].truncate_to(W) * vals[nu].truncate_to(W)
            prod = product_in_basis(f, side, ctx, basis_values=vals)
            for lam in lams:
                want = prod.entries.get(lam, CoeffPoly.zero())
                got = co[lam].get((mu, nu), CoeffPoly.zero())
                checked += 1
                if want != got:
                    mismatches += 1
        _check(lines, mismatches == 0,
               "%s constants match the coproduct (%d comparisons)"
               % (side, checked))
        counit = all(co[lam].get(((), lam), CoeffPoly.zero())
                     == CoeffPoly.one() and
                     co[lam].get((lam, ()), CoeffPoly.zero())
                     == CoeffPoly.one() for lam in lams)
        _check(lines, counit, "%s coproduct has unit constants" % side)
    actx = FGLContext(N, ADDITIVE)
    nv = 4
    bad_q = bad_p = 0
    for lam in lams:
        co_q = coproduct_QL(lam, 2, 2, actx, use_P=True)
        co_p = coproduct_QL(lam, 2, 2, actx, use_P=False)
        for mu, nu in pairs:
            cQ = _classical_Q_constants(mu, nu, W, nv).get(
                lam, CoeffPoly.zero())
            got_q = co_q.get((mu, nu), CoeffPoly.zero())
            if got_q != cQ:
                bad_q += 1
            got_p = co_p.get((mu, nu), CoeffPoly.zero())
            lhs = got_p * CoeffPoly.const(2 ** (len(mu) + len(nu)))
            rhs = cQ * CoeffPoly.const(2 ** len(lam))
            if lhs != rhs:
                bad_p += 1
    _check(lines, bad_q == 0,
           "additive P coproduct matches classical Q constants")
    _check(lines, bad_p == 0,
           "additive Q coproduct matches rescaled classical constants")
    return _result("duality", lines)


_DUAL_CACHE = {}


def dual_basis_cached(ctx, side, max_size, trunc):
    from .duals import dual_basis
    key = (id(ctx.spec), ctx.trunc, side, max_size, trunc)
    if key not in _DUAL_CACHE:
        _DUAL_CACHE[key] = dual_basis(ctx, side, max_size=max_size,
                                      n=2, m=2, trunc=trunc)
    return _DUAL_CACHE[key]


# ---------- 11: classical limits ----------

def classical_limit_suite(trunc=None, max_size=None):
    """Additive b = 0 reduction to the classical bases, and the closed
    multiplicative inverse."""
    N = 5 if trunc is None else trunc
    S = 5 if max_size is None else max_size
    actx = FGLContext(N, ADDITIVE)
    lines = []
    bad = 0
    checked = 0
    for lam in _stricts(S):
        for n in range(max(len(lam), 1), 5):
            req = USchurRequest(lam, n, actx, b_prefix=0)
            if not _eq(P_L(req), classical_P(lam, n).pad_trunc(N)):
                bad += 1
            if not _eq(Q_L(req), classical_Q(lam, n).pad_trunc(N)):
                bad += 1
            checked += 2
    _check(lines, bad == 0,
           "additive P and Q at b = 0 are classical (%d cases)" % checked)
    bad = 0
    checked = 0
    for lam in _partitions(S, 4):
        for n in range(max(len(lam), 1), 5):
            if not _eq(s_L(lam, n, actx, b_prefix=0),
                       schur_s(lam, n).pad_trunc(N)):
                bad += 1
            checked += 1
    _check(lines, bad == 0,
           "additive s at b = 0 is the Schur polynomial (%d cases)" % checked)
    mctx = FGLContext(6, MULTIPLICATIVE(None))
    a11 = a_gen(1, 1)
    inv = mctx.inverse_coeffs(6)
    ok = all(inv.get(k + 1, CoeffPoly.zero())
             == CoeffPoly.const((-1) ** (k + 1)) * a11 ** k
             for k in range(0, 6))
    _check(lines, ok, "multiplicative inverse is the geometric series")
    return _result("classical", lines)


# ---------- 12: localization ----------

def localization_suite(trunc=None, max_size=None):
    """Difference conditions for localized families and basis expansion."""
    N = 4 if trunc is None else trunc
    ctx = FGLContext(N)
    lines = []
    FA = s_L((2, 1), 2, ctx)
    famA = localize_family(FA, 2, "A", window_A(2, 3), ctx)
    repA = gkm_check(famA, ctx)
    _check(lines, repA.ok,
           "type A family passes the difference conditions (%d checks)"
           % repA.checked)
    mu0 = famA.labels()[0]
    b1 = TruncSeries.variable(famA.value(mu0).vars, N, "b1")
    repAbad = gkm_check(famA.with_value(mu0, famA.value(mu0) + b1), ctx)
    _check(lines, not repAbad.ok, "type A perturbation is rejected")
    FC = Q_L(USchurRequest((2, 1), 3, ctx))
    winC = [t for t in window_CD(3) if len(t) <= 3]
    famC = localize_family(FC, 3, "C", winC, ctx)
    repC = gkm_check(famC, ctx)
    _check(lines, repC.ok,
           "type C family passes the difference conditions (%d checks)"
           % repC.checked)
    muc = famC.labels()[1]
    bc = TruncSeries.variable(famC.value(muc).vars, N, "b1")
    repCbad = gkm_check(famC.with_value(muc, famC.value(muc) + bc), ctx)
    _check(lines, not repCbad.ok, "type C perturbation is rejected")
    FD = P_L(USchurRequest((2, 1), 4, ctx, plus_variant=True))
    famD = localize_family(FD, 4, "D", winC, ctx)
    repD = gkm_check(famD, ctx)
    _check(lines, repD.ok,
           "type D family passes the difference conditions (%d checks)"
           % repD.checked)
    small = _partitions(2, 2)
    bad = 0
    for mu in small:
        for nu in small:
            F = _mul(s_L(mu, 2, ctx), s_L(nu, 2, ctx))
            exp = expand_greedy(F, "A", 2, ctx, K=N)
            if not _eq(recombine(exp, "A", 2, ctx), F):
                bad += 1
    _check(lines, bad == 0,
           "type A products of s expand and recombine (%d pairs)"
           % (len(small) ** 2))
    sstrict = _stricts(2)
    bad = 0
    for mu in sstrict:
        for nu in sstrict:
            F = _mul(Q_L(USchurRequest(mu, 3, ctx)),
                     Q_L(USchurRequest(nu, 3, ctx)))
            exp = expand_greedy(F, "C", 3, ctx, K=N)
            if not _eq(recombine(exp, "C", 3, ctx), F):
                bad += 1
    _check(lines, bad == 0,
           "type C products of Q expand and recombine (%d pairs)"
           % (len(sstrict) ** 2))
    far = s_L((3,), 2, ctx)
    offwin = localize_family(far, 2, "A", window_A(2, 2), ctx)
    allzero = all(offwin.value(mu).is_zero() for mu in offwin.labels())
    _check(lines, allzero and not far.is_zero(),
           "an out-of-window class localizes to zero on a small window")
    return _result("localization", lines)


# ---------- 13: indexing combinatorics ----------

def combinatorics_golden(trunc=None, max_size=None):
    """Bijections between partitions, permutations, and reduced words."""
    lines = []
    wA = lambda_to_w_A((4, 2, 1, 0), 4, 10)
    _check(lines, wA.word == (1, 3, 5, 8, 2, 4, 6, 7, 9, 10),
           "one-line word for (4,2,1,0) in the 4 x 6 window")
    _check(lines, wA.descents() == [4], "its unique descent sits at 4")
    _check(lines, tuple(w_to_lambda_A(wA, 4).parts) == (4, 2, 1),
           "the word maps back to (4,2,1)")
    rwA = reduced_word((4, 2, 1), "A", n=4)
    _check(lines, rwA == [2, 4, 3, 7, 6, 5, 4],
           "unsigned reduced word for (4,2,1)")
    _check(lines, len(rwA) == 7, "its length is the size of the shape")
    rwC = reduced_word((4, 2, 1), "C")
    _check(lines, rwC == [0, 1, 0, 3, 2, 1, 0],
           "signed reduced word for (4,2,1)")
    wC = lambda_to_w_C((6, 4, 3, 1), 7)
    _check(lines, wC.word == (-6, -4, -3, -1, 2, 5, 7),
           "signed word for (6,4,3,1) at rank 7")
    _check(lines, tuple(w_to_lambda_C(wC).parts) == (6, 4, 3, 1),
           "the signed word maps back to (6,4,3,1)")
    return _result("combinatorics", lines)


# ---------- suite registry ----------

SUITES = {
    "relations": (inverse_golden, two_series_golden, dual_generators_golden,
                  relation_suite),
    "supersym": (supersymmetry_suite,),
    "stability": (stability_suite,),
    "factorization": (factorization_suite,),
    "vanishing": (vanishing_suite,),
    "cauchy": (cauchy_suite,),
    "duality": (duality_suite, classical_limit_suite),
}

SUITES["all"] = (SUITES["relations"] + SUITES["supersym"]
                 + SUITES["stability"] + SUITES["factorization"]
                 + SUITES["vanishing"] + SUITES["cauchy"] + SUITES["duality"]
                 + (localization_suite, combinatorics_golden))


def run_suite(name, trunc=None, max_size=None):
    """Run one named suite; returns a list of VerifyResult."""
    if name not in SUITES:
        raise ValueError("unknown suite %r" % name)
    return [f(trunc=trunc, max_size=max_size) for f in SUITES[name]]
