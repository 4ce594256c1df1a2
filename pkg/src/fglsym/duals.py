"""Homology generators, Cauchy kernels, dual bases, and Hopf structure."""

from .coeffring import CoeffPoly, exact_div_int
from .combinat import as_strict, strict_partitions_up_to
from .fgl import FGLContext, _univar_mul
from .series import TruncSeries, VarSet
from .sympoly import Expansion
from .uschur import P_L, Q_L, USchurRequest


class MembershipError(ValueError):
    pass


# ---------- Cauchy kernels ----------


class CauchyKernel:
    """The product series prod_{i<=n, j<=m} (1 - xbar_i y_j) / (1 - x_i y_j)."""

    def __init__(self, n, m, trunc, series):
        self.n = n
        self.m = m
        self.trunc = trunc
        self.series = series

    def __repr__(self):
        return "CauchyKernel(n=%d, m=%d, trunc=%d)" % (self.n, self.m, self.trunc)

    def to_json_obj(self):
        return {
            "n": self.n,
            "m": self.m,
            "trunc": self.trunc,
            "series": self.series.to_json_obj(),
        }


def _pair_factor(vs, N, x, xbar, yname):
    """(1 - xbar y)/(1 - x y) = 1 + sum_{k>=1} x^{k-1} (x - xbar) y^k."""
    y = TruncSeries.variable(vs, N, yname)
    out = TruncSeries.const(vs, N, 1)
    term = (x - xbar) * y
    while not term.is_zero():
        out = out + term
        term = term * x * y
    return out


def cauchy_kernel(n, m, ctx, trunc=None):
    """Kernel over n x-variables and m y-variables at joint truncation."""
    N = ctx.trunc if trunc is None else trunc
    vs = VarSet(n, 0, m, 0)
    out = TruncSeries.const(vs, N, 1)
    for i in range(1, n + 1):
        x = TruncSeries.variable(vs, N, "x%d" % i)
        xbar = ctx.formal_inverse(x)
        for j in range(1, m + 1):
            out = out * _pair_factor(vs, N, x, xbar, "y%d" % j)
    return CauchyKernel(n, m, N, out)


# ---------- one-row generators ----------


def _tlist_mul(A, B, K, zero):
    """Convolution of two T-coefficient lists of series, kept to length K+1."""
    out = [zero] * (K + 1)
    for i, a in enumerate(A):
        if i > K or a.is_zero():
            continue
        for j, b in enumerate(B):
            if i + j > K:
                break
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def qhat_family(K, m, ctx):
    """[1, qhat_1, ..., qhat_K] as series in y_1..y_m."""
    N = ctx.trunc
    vs = VarSet(0, 0, m, 0)
    zero = TruncSeries.zero(vs, N)
    inv = ctx.inverse_coeffs(K + 1)
    out = [TruncSeries.const(vs, N, 1)] + [zero] * K
    for j in range(1, m + 1):
        yj = TruncSeries.variable(vs, N, "y%d" % j)
        powers = [TruncSeries.const(vs, N, 1)]
        for _ in range(K):
            powers.append(powers[-1] * yj)
        # (1 - ibar(t) y)/(1 - t y): T^d coefficient is
        # 2 y^d - sum_{k<d} ibar_{d-k+1} y^k
        fac = [powers[0]]
        for d in range(1, K + 1):
            f = powers[d].scale(2)
            for k in range(1, d):
                c = inv.get(d - k + 1)
                if c is not None:
                    f = f - powers[k].scale(c)
            fac.append(f)
        out = _tlist_mul(out, fac, K, zero)
    return out


def qhat_k(k, m, ctx):
    """Coefficient of t^k in the one-x-variable Cauchy kernel."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return qhat_family(k, m, ctx)[k]


def phat_family(K, m, ctx):
    """[1, phat_1, ..., phat_K] by the triangular alpha-recursion."""
    qs = qhat_family(K, m, ctx)
    out = [qs[0]]
    for k in range(1, K + 1):
        acc = qs[k]
        for j in range(1, k):
            acc = acc - out[j].scale(ctx.alpha(k + 1 - j))
        out.append(acc.exact_div_int(2))
    return out


def phat_k(k, m, ctx):
    """Coefficient of t^{k-1} in (kernel(t; y) - 1) / [2](t)."""
    if k < 1:
        raise ValueError("k must be positive")
    N = 2 * k
    vs = VarSet(0, 0, m, 1)
    t = TruncSeries.variable(vs, N, "t1")
    tbar = ctx.formal_inverse(t)
    out = TruncSeries.const(vs, N, 1)
    for j in range(1, m + 1):
        out = out * _pair_factor(vs, N, t, tbar, "y%d" % j)
    two = ctx.formal_sum(t, t)
    quo = (out - TruncSeries.const(vs, N, 1)).exact_div(two)
    co = quo.coefficient_of_power("t1", k - 1).without_vars(["t1"])
    # the coefficient is a polynomial of y-degree at most k, hence complete
    co = co.truncate_to(min(co.trunc, k))
    return co.pad_trunc(ctx.trunc) if co.trunc < ctx.trunc else co.truncate_to(ctx.trunc)


def qtilde_family(K, n, ctx, conjugate=False):
    """[1, qtilde_1, ..., qtilde_K] from prod (1 + x_i T)/(1 + xbar_i T)."""
    N = ctx.trunc
    vs = VarSet(n, 0, 0, 0)
    zero = TruncSeries.zero(vs, N)
    out = [TruncSeries.const(vs, N, 1)] + [zero] * K
    for i in range(1, n + 1):
        x = TruncSeries.variable(vs, N, "x%d" % i)
        xbar = ctx.formal_inverse(x)
        if conjugate:
            x, xbar = xbar, x
        diff = x - xbar
        fac = [TruncSeries.const(vs, N, 1)]
        p = TruncSeries.const(vs, N, 1)
        for _ in range(K):
            fac.append(p * diff)
            p = p * xbar.scale(-1)
        out = _tlist_mul(out, fac, K, zero)
    return out


def qtilde_k(k, n, ctx):
    """Coefficient of T^k in prod_{i<=n} (1 + x_i T)/(1 + xbar_i T)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return qtilde_family(k, n, ctx)[k]


# ---------- generator relations ----------


def _compose_with_inverse(A, ctx):
    """T-coefficient list of f(ibar(T)) given the list of f(T)."""
    K = len(A) - 1
    inv = ctx.inverse_coeffs(K)
    pows = [{0: CoeffPoly.one()}]
    for _ in range(K):
        pows.append(_univar_mul(pows[-1], inv, K))
    zero = TruncSeries.zero(A[0].vars, A[0].trunc)
    out = []
    for d in range(K + 1):
        acc = zero
        for l in range(K + 1):
            c = pows[l].get(d)
            if c is not None:
                acc = acc + A[l].scale(c)
        out.append(acc)
    return out


def _relation_coefficient(A, i, ctx):
    """Coefficient of T^i in f(T) f(ibar(T)) for a T-list f."""
    B = _compose_with_inverse(A, ctx)
    acc = TruncSeries.zero(A[0].vars, A[0].trunc)
    for j in range(i + 1):
        if not A[j].is_zero() and not B[i - j].is_zero():
            acc = acc + A[j] * B[i - j]
    return acc


def check_qhat_relation(i, ctx, m=None):
    """True iff the T^i coefficient of qhat(T) qhat(ibar(T)) - 1 vanishes."""
    if m is None:
        m = ctx.trunc
    A = qhat_family(i, m, ctx)
    acc = _relation_coefficient(A, i, ctx)
    if i == 0:
        return acc == TruncSeries.const(acc.vars, acc.trunc, 1)
    return acc.is_zero()


def check_phat_relation(i, ctx, m=None):
    """Same relation rebuilt from the phat values through the 2-series."""
    if m is None:
        m = ctx.trunc
    ps = phat_family(i, m, ctx)
    A = [ps[0]]
    for d in range(1, i + 1):
        acc = TruncSeries.zero(ps[0].vars, ps[0].trunc)
        for j in range(1, d + 1):
            acc = acc + ps[j].scale(ctx.alpha(d + 1 - j))
        A.append(acc)
    acc = _relation_coefficient(A, i, ctx)
    if i == 0:
        return acc == TruncSeries.const(acc.vars, acc.trunc, 1)
    return acc.is_zero()


def check_qtilde_relation(i, n, ctx):
    """True iff the T^i coefficient of qtilde(T) qtildebar(T) - 1 vanishes."""
    A = qtilde_family(i, n, ctx)
    B = qtilde_family(i, n, ctx, conjugate=True)
    acc = TruncSeries.zero(A[0].vars, A[0].trunc)
    for j in range(i + 1):
        acc = acc + A[j] * B[i - j]
    if i == 0:
        return acc == TruncSeries.const(acc.vars, acc.trunc, 1)
    return acc.is_zero()


def check_printed_qhat_squares(ctx, m=None):
    """The two printed low-degree square relations among qhat values."""
    if m is None:
        m = ctx.trunc
    q = qhat_family(4, m, ctx)
    a11 = ctx.a_image(1, 1)
    a12 = ctx.a_image(1, 2)
    a13 = ctx.a_image(1, 3)
    a22 = ctx.a_image(2, 2)
    first = q[1] * q[1] == q[2].scale(2) + q[1].scale(a11)
    rhs = (
        q[4].scale(-2)
        + (q[3] * q[1]).scale(2)
        - q[3].scale(a11 * CoeffPoly.const(3))
        + (q[2] * q[1]).scale(a11)
        - q[2].scale(a11 * a11)
        + q[1].scale(a22 - a11 * a12 - a13 - a13)
    )
    second = q[2] * q[2] == rhs
    return first, second


# ---------- dual bases via the Cauchy identity ----------


def _monomial_coefficient(F, fam, mu):
    """Coefficient of the exact family monomial given by the partition mu.

    The family variables are cleared; the declared truncation drops by |mu|.
    """
    lo, hi = F.vars.fam_slice(fam)
    if len(mu) > hi - lo:
        raise ValueError("partition longer than the %s family" % fam)
    target = tuple(mu) + (0,) * (hi - lo - len(mu))
    zeros = (0,) * (hi - lo)
    out = {}
    for mono, c in F.terms.items():
        if mono[lo:hi] == target:
            out[mono[:lo] + zeros + mono[hi:]] = c
    return TruncSeries(F.vars, F.trunc - sum(mu), out)


def _base_series(mu, n, ctx, use_P, cache):
    """P_L or Q_L at b = 0 in n variables, cached per partition."""
    if mu not in cache:
        req = USchurRequest(mu, n, ctx, b_prefix=0)
        cache[mu] = P_L(req) if use_P else Q_L(req)
    return cache[mu]


def dual_basis(ctx, side="phat", max_size=None, n=None, m=None, trunc=None):
    """Solve the Cauchy identity for all duals of size <= max_size.

    side "phat" pairs against Q_L with pivot 2^length; side "qhat" pairs
    against P_L with pivot 1.  Each returned series is complete through
    total degree trunc - |mu|.
    """
    if side not in ("phat", "qhat"):
        raise ValueError("side must be phat or qhat")
    use_P = side == "qhat"
    D = ctx.trunc if trunc is None else trunc
    work = ctx if D == ctx.trunc else FGLContext(D, ctx.spec)
    if max_size is None:
        max_size = D
    if n is None:
        n = D
    if m is None:
        m = ctx.trunc
    kern = cauchy_kernel(n, m, ctx, trunc=D)
    R = kern.series
    vs = R.vars
    xnames = ["x%d" % i for i in range(1, n + 1)]
    cache = {}
    out = {}
    for p in strict_partitions_up_to(max_size):
        mu = p.parts
        if len(mu) > n:
            raise ValueError("x-count %d too small for %r" % (n, mu))
        co = _monomial_coefficient(R, "x", mu)
        if not use_P:
            co = co.exact_div_int(2 ** len(mu))
        out[mu] = co.without_vars(xnames)
        base = _base_series(mu, n, work, use_P, cache).embed(vs, D)
        R = R - base.mul(co.pad_trunc(D), degree_cap=D)
    if max_size >= D and not R.is_zero():
        raise MembershipError("Cauchy residual is nonzero")
    return out


def dual_phat(lam, ctx, n=None, m=None, trunc=None):
    """The y-side dual of Q_L for one strict partition."""
    lam = as_strict(lam).parts
    vals = dual_basis(ctx, "phat", max_size=sum(lam), n=n, m=m, trunc=trunc)
    return vals[lam]


def dual_qhat(lam, ctx, n=None, m=None, trunc=None):
    """The y-side dual of P_L for one strict partition."""
    lam = as_strict(lam).parts
    vals = dual_basis(ctx, "qhat", max_size=sum(lam), n=n, m=m, trunc=trunc)
    return vals[lam]


def check_cauchy(ctx, side="phat", n=None, m=None, trunc=None):
    """Forward recombination: sum of base(x) * dual(y) equals the kernel."""
    use_P = side == "qhat"
    D = ctx.trunc if trunc is None else trunc
    work = ctx if D == ctx.trunc else FGLContext(D, ctx.spec)
    if n is None:
        n = D
    if m is None:
        m = ctx.trunc
    vals = dual_basis(ctx, side, n=n, m=m, trunc=trunc)
    kern = cauchy_kernel(n, m, ctx, trunc=D)
    vs = kern.series.vars
    acc = TruncSeries.zero(vs, D)
    cache = {}
    for mu, dual in vals.items():
        base = _base_series(mu, n, work, use_P, cache).embed(vs, D)
        acc = acc + base.mul(dual.embed(vs, dual.trunc).pad_trunc(D), degree_cap=D)
    return acc == kern.series


# ---------- Hopf structure ----------


def coproduct_qhat(k):
    """Triples (i, j, coeff) with phi(qhat_k) = sum qhat_i (x) qhat_j."""
    if k < 1:
        raise ValueError("k must be positive")
    return [(i, k - i, CoeffPoly.one()) for i in range(k + 1)]


def coproduct_phat(l, ctx):
    """Triples (i, j, coeff); index 0 stands for the unit."""
    if l < 1:
        raise ValueError("l must be positive")
    out = [(l, 0, CoeffPoly.one()), (0, l, CoeffPoly.one())]
    for i in range(1, l):
        for j in range(1, l - i + 1):
            out.append((i, j, ctx.alpha(l - i - j + 1)))
    return out


def _expand_over_family(F, n, ctx, use_P, cache):
    """Ascending triangular expansion of F in the P_L/Q_L basis on x.

    Returns (entries, residual); entries map partitions to the coefficient
    series carried by the other families of F.
    """
    D = F.trunc
    entries = {}
    R = F
    for p in strict_partitions_up_to(D):
        mu = p.parts
        if len(mu) > n:
            continue
        co = _monomial_coefficient(R, "x", mu)
        if not use_P:
            co = co.exact_div_int(2 ** len(mu))
        entries[mu] = co
        if co.is_zero():
            continue
        base = _base_series(mu, n, ctx, use_P, cache)
        R = R - base.embed(F.vars, D).mul(co.pad_trunc(D), degree_cap=D)
    return entries, R


def coproduct_QL(lam, n1, n2, ctx, use_P=False):
    """Structure constants of base_lam(x, x') in the product basis.

    Returns a dict (mu, nu) -> CoeffPoly with the expansion of the
    two-alphabet function at b = 0 in base_mu(x) base_nu(x').
    """
    lam = as_strict(lam).parts
    if len(lam) > n1 + n2:
        raise ValueError("need at least %d variables" % len(lam))
    N = ctx.trunc
    whole = _base_series(lam, n1 + n2, ctx, use_P, {})
    vs = VarSet(n1, 0, n2, 0)
    ren = {"x%d" % (n1 + j): "y%d" % j for j in range(1, n2 + 1)}
    F = whole.rename_vars(vs, ren)
    cache1 = {}
    stage1, R = _expand_over_family(F, n1, ctx, use_P, cache1)
    if not R.is_zero():
        raise MembershipError("two-alphabet expansion has a residual")
    cache2 = {}
    out = {}
    ynames = ["y%d" % j for j in range(1, n2 + 1)]
    for mu, co in stage1.items():
        part = co.without_vars(["x%d" % i for i in range(1, n1 + 1)])
        for q in strict_partitions_up_to(part.trunc):
            nu = q.parts
            if len(nu) > n2:
                continue
            piv = part.coefficient(dict(zip(ynames, nu)))
            if not use_P:
                piv = exact_div_int(piv, 2 ** len(nu))
            if piv.is_zero():
                continue
            out[(mu, nu)] = piv
            base = _base_series(nu, n2, ctx, use_P, cache2)
            emb = base.rename_vars(
                part.vars, {"x%d" % j: "y%d" % j for j in range(1, n2 + 1)})
            emb = emb.truncate_to(part.trunc) if emb.trunc >= part.trunc \
                else emb.pad_trunc(part.trunc)
            part = part - emb.scale(piv)
        if not part.is_zero():
            raise MembershipError("inner expansion has a residual")
    return out


def product_in_basis(f, basis, ctx, basis_values=None):
    """Expansion of f in one of the bases QL, PL, phat, qhat."""
    if basis in ("QL", "PL"):
        lo, hi = f.vars.fam_slice("x")
        n = hi - lo
        cache = {}
        entries, R = _expand_over_family(f, n, ctx, basis == "PL", cache)
        if not R.is_zero():
            raise MembershipError("not in the span of %s" % basis)
        out = {}
        for mu, co in entries.items():
            c = co.constant_term()
            if not c.is_zero():
                out[mu] = c
        return Expansion(basis, out)
    if basis not in ("phat", "qhat"):
        raise ValueError("unknown basis %r" % basis)
    use_P = basis == "phat"
    lo, hi = f.vars.fam_slice("y")
    m = hi - lo
    top = max((sum(mono) for mono in f.terms), default=0)
    if basis_values is None:
        basis_values = dual_basis(
            ctx, basis, max_size=top, n=max(top, 1), m=m, trunc=f.trunc + top)
    ynames = ["y%d" % j for j in range(1, m + 1)]
    R = f
    out = {}
    sizes = sorted({p.size() for p in strict_partitions_up_to(top)}, reverse=True)
    for s in sizes:
        for p in strict_partitions_up_to(s):
            mu = p.parts
            if sum(mu) != s:
                continue
            piv = R.coefficient(dict(zip(ynames, mu)))
            if not use_P:
                piv = exact_div_int(piv, 2 ** len(mu))
            if piv.is_zero():
                continue
            out[mu] = piv
            val = basis_values[mu]
            if val.trunc < R.trunc:
                raise ValueError("basis value for %r is too truncated" % (mu,))
            emb = val.embed(R.vars, val.trunc).truncate_to(R.trunc)
            R = R - emb.scale(piv)
    if not R.is_zero():
        raise MembershipError("not in the span of %s" % basis)
    return Expansion(basis, out)
