"""Universal factorial Schur P/Q/S series and their structural checks.

The symmetrized defining formulas are evaluated without rational
arithmetic: each denominator factor x_i (+) inverse(x_j) is split as
(x_i - x_j) times a unit, units are inverted as power series, the
antisymmetrized numerator is exact-divided by the Vandermonde
determinant, and the surviving integer factorial is divided out last.
"""

from collections import namedtuple
from math import factorial

from .combinat import as_partition, as_strict
from .series import TruncSeries, VarSet

MAX_N = 6


class USchurRequest:
    """Shape, variable count, coefficient context, and b-prefix policy.

    b_prefix=None asks for the minimal symbolic prefix of the operation;
    b_prefix=0 evaluates at b = 0; an explicit positive prefix must cover
    the minimal one.
    """

    def __init__(self, lam, n, ctx, b_prefix=None, plus_variant=False,
                 allow_large_n=False):
        self.lam = lam
        self.n = n
        self.ctx = ctx
        self.b_prefix = b_prefix
        self.plus_variant = plus_variant
        self.allow_large_n = allow_large_n
        if n < 1:
            raise ValueError("need at least one variable")
        if n > MAX_N and not allow_large_n:
            raise ValueError("n > %d; pass allow_large_n to override" % MAX_N)

    def resolve_prefix(self, minimal):
        if self.b_prefix is None:
            return minimal
        if self.b_prefix == 0:
            return 0
        if self.b_prefix < minimal:
            raise ValueError("b-prefix %d shorter than required %d"
                             % (self.b_prefix, minimal))
        return self.b_prefix


# ---------- shared machinery ----------


def _unit_inverse(vs, big, ctx, i, j):
    """Inverse of the unit u with x_i (+) inverse(x_j) = (x_i - x_j) u."""
    xi = TruncSeries.variable(vs, big + 1, "x%d" % (i + 1))
    xj = TruncSeries.variable(vs, big + 1, "x%d" % (j + 1))
    f = ctx.formal_sum(xi, ctx.formal_inverse(xj))
    u = f.exact_div(xi - xj)
    return u.invert_unit()


def _graded_product(factors, vs, big, fam_caps):
    """Product of graded-homogeneous series with a sliding degree cap.

    Higher-degree factors first; after each step the intermediate is kept
    only up to big minus the graded degree still to come, which is sound
    because every remaining factor raises total degree by at least its
    graded degree.
    """
    if not factors:
        return TruncSeries.const(vs, big, 1)
    gs = []
    for f in factors:
        g = f.graded_degree()
        gs.append(0 if g is None else g)
    order = sorted(range(len(factors)), key=lambda k: -gs[k])
    remaining = sum(gs)
    out = None
    for k in order:
        remaining -= gs[k]
        if out is None:
            out = factors[k]
        else:
            out = out.mul(factors[k], fam_caps=fam_caps,
                          degree_cap=big - remaining)
    return out


def _factorial_factors(x, bs, e, doubled, ctx):
    """Factors of the power [x|b]^e, doubled variant prepends x (+) x."""
    out = []
    if doubled:
        if e == 0:
            return out
        out.append(ctx.formal_sum(x, x))
        e -= 1
    for i in range(e):
        out.append(ctx.formal_sum(x, bs[i]))
    return out


def _vandermonde(xs, vs, big):
    out = TruncSeries.const(vs, big, 1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out = out * (xs[i] - xs[j])
    return out


def _prepare(n, M, ctx):
    N = ctx.trunc
    big = N + n * (n - 1) // 2
    vs = VarSet(n, M, 0, 0)
    caps = {"b": N} if M else None
    xs = [TruncSeries.variable(vs, big, "x%d" % (i + 1)) for i in range(n)]
    bs = [TruncSeries.variable(vs, big, "b%d" % (i + 1)) for i in range(M)]
    return N, big, vs, caps, xs, bs


def _pad_bs(bs, vs, big, need):
    if len(bs) >= need:
        return bs
    zero = TruncSeries.zero(vs, big)
    return bs + [zero] * (need - len(bs))


def _finish(anti, n, vs, big, xs, N, fct):
    if n > 1:
        result = anti.exact_div(_vandermonde(xs, vs, big))
    else:
        result = anti
    if result.trunc != N:
        result = result.truncate_to(N)
    if fct > 1:
        result = result.exact_div_int(fct)
    return result


# ---------- main route: one numerator, signed symmetrization ----------


def _pq_route1(lam, n, M, ctx, doubled):
    r = len(lam.parts)
    N, big, vs, caps, xs, bs = _prepare(n, M, ctx)
    bs = _pad_bs(bs, vs, big, max(lam.parts, default=0))
    factors = []
    for row, e in enumerate(lam.parts):
        factors.extend(_factorial_factors(xs[row], bs, e, doubled, ctx))
    for i in range(r):
        for j in range(i + 1, n):
            factors.append(ctx.formal_sum(xs[i], xs[j]))
    for i in range(r, n):
        for j in range(i + 1, n):
            factors.append(xs[i] - xs[j])
    factors.extend(_unit_inverse(vs, big, ctx, i, j)
                   for i in range(r) for j in range(i + 1, n))
    numer = _graded_product(factors, vs, big, caps)
    anti = numer.symmetrize(n, signed=True)
    return _finish(anti, n, vs, big, xs, N, factorial(n - r))


def _s_route1(lam, n, M, ctx):
    N, big, vs, caps, xs, bs = _prepare(n, M, ctx)
    exps = [lam.part(k) + n - k for k in range(1, n + 1)]
    bs = _pad_bs(bs, vs, big, max(exps, default=0))
    factors = []
    for row, e in enumerate(exps):
        factors.extend(_factorial_factors(xs[row], bs, e, False, ctx))
    factors.extend(_unit_inverse(vs, big, ctx, i, j)
                   for i in range(n) for j in range(i + 1, n))
    numer = _graded_product(factors, vs, big, caps)
    anti = numer.symmetrize(n, signed=True)
    return _finish(anti, n, vs, big, xs, N, 1)


# ---------- reference route: fresh factors for every permutation ----------


def _perm_sign(p):
    s = 1
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                s = -s
    return s


def _pq_route2(lam, n, M, ctx, doubled):
    """Per-permutation evaluation; never permutes a computed series."""
    from itertools import permutations
    r = len(lam.parts)
    N, big, vs, caps, xs, bs = _prepare(n, M, ctx)
    bs = _pad_bs(bs, vs, big, max(lam.parts, default=0))
    unit_cache = {}

    def unit(i, j):
        if (i, j) not in unit_cache:
            unit_cache[(i, j)] = _unit_inverse(vs, big, ctx, i, j)
        return unit_cache[(i, j)]

    total = TruncSeries.zero(vs, big)
    for w in permutations(range(n)):
        factors = []
        for row, e in enumerate(lam.parts):
            factors.extend(
                _factorial_factors(xs[w[row]], bs, e, doubled, ctx))
        for i in range(r):
            for j in range(i + 1, n):
                factors.append(ctx.formal_sum(xs[w[i]], xs[w[j]]))
                factors.append(unit(w[i], w[j]))
        for i in range(r, n):
            for j in range(i + 1, n):
                factors.append(xs[w[i]] - xs[w[j]])
        term = _graded_product(factors, vs, big, caps)
        total = total + (term if _perm_sign(w) > 0 else -term)
    return _finish(total, n, vs, big, xs, N, factorial(n - r))


def _s_route2(lam, n, M, ctx):
    from itertools import permutations
    N, big, vs, caps, xs, bs = _prepare(n, M, ctx)
    exps = [lam.part(k) + n - k for k in range(1, n + 1)]
    bs = _pad_bs(bs, vs, big, max(exps, default=0))
    unit_cache = {}

    def unit(i, j):
        if (i, j) not in unit_cache:
            unit_cache[(i, j)] = _unit_inverse(vs, big, ctx, i, j)
        return unit_cache[(i, j)]

    total = TruncSeries.zero(vs, big)
    for w in permutations(range(n)):
        factors = []
        for row, e in enumerate(exps):
            factors.extend(_factorial_factors(xs[w[row]], bs, e, False, ctx))
        factors.extend(unit(w[i], w[j])
                       for i in range(n) for j in range(i + 1, n))
        term = _graded_product(factors, vs, big, caps)
        total = total + (term if _perm_sign(w) > 0 else -term)
    return _finish(total, n, vs, big, xs, N, 1)


# ---------- public operations ----------


def _pq(req, doubled, reference=False):
    lam = as_strict(req.lam)
    n = req.n
    minimal = max(lam.part(1) - (1 if doubled else 0), 0)
    M = req.resolve_prefix(minimal)
    if len(lam.parts) > n:
        return TruncSeries.zero(VarSet(n, M, 0, 0), req.ctx.trunc)
    route = _pq_route2 if reference else _pq_route1
    return route(lam, n, M, req.ctx, doubled)


def P_L(req, reference=False):
    """Universal factorial Schur P-series of a strict partition."""
    if getattr(req, "plus_variant", False):
        return P_L_plus(req, reference=reference)
    return _pq(req, doubled=False, reference=reference)


def Q_L(req, reference=False):
    """Universal factorial Schur Q-series of a strict partition."""
    return _pq(req, doubled=True, reference=reference)


def P_L_plus(req, reference=False):
    """The even-variable-count P-series: appends a zero variable to odd n."""
    if req.n % 2 == 0:
        return _pq(req, doubled=False, reference=reference)
    wide = USchurRequest(req.lam, req.n + 1, req.ctx, b_prefix=req.b_prefix,
                         allow_large_n=req.allow_large_n)
    f = _pq(wide, doubled=False, reference=reference)
    name = "x%d" % (req.n + 1)
    return f.coefficient_of_power(name, 0).without_vars([name])


def s_L(lam, n, ctx, b_prefix=None, reference=False):
    """Universal factorial Schur series of a partition with at most n rows."""
    lam = as_partition(lam)
    req = USchurRequest(lam, n, ctx, b_prefix=b_prefix)
    minimal = lam.part(1) + n - 1
    M = req.resolve_prefix(minimal)
    if len(lam.parts) > n:
        return TruncSeries.zero(VarSet(n, M, 0, 0), ctx.trunc)
    route = _s_route2 if reference else _s_route1
    return route(lam, n, M, ctx)


def s_L_double(lam, n, ctx, reference=False):
    """Doubly-indexed variant: row powers use parameters b_n, b_{n-1}, ...

    The doubly infinite parameter window 2-lam_1 .. n is re-indexed by
    the offset max(lam_1 - 1, 0) onto a positive prefix, so internal b_k
    stands for the doubly-infinite parameter with label k - offset.
    """
    lam = as_partition(lam)
    if len(lam.parts) > n:
        raise ValueError("need at least %d variables" % len(lam.parts))
    offset = max(lam.part(1) - 1, 0)
    M = n + offset
    N = ctx.trunc
    big = N + n * (n - 1) // 2
    vs = VarSet(n, M, 0, 0)
    caps = {"b": N}
    xs = [TruncSeries.variable(vs, big, "x%d" % (i + 1)) for i in range(n)]

    def b_at(raw):
        return TruncSeries.variable(vs, big, "b%d" % (raw + offset))

    factors = []
    for k in range(1, n + 1):
        e = lam.part(k) + n - k
        x = xs[k - 1]
        for i in range(1, e + 1):
            factors.append(ctx.formal_sum(x, b_at(n + 1 - i)))
    factors.extend(_unit_inverse(vs, big, ctx, i, j)
                   for i in range(n) for j in range(i + 1, n))
    numer = _graded_product(factors, vs, big, caps)
    anti = numer.symmetrize(n, signed=True)
    return _finish(anti, n, vs, big, xs, N, 1)


# ---------- structural checks ----------

SupersymReport = namedtuple("SupersymReport", "supersymmetric gamma_plus")


def check_supersymmetric(s, ctx):
    """Substitute x1 = t, x2 = inverse(t): true iff no t survives.

    Also reports whether s(x1,...) - s(0,...) is divisible by x1 (+) x1
    (the doubled-variable refinement).
    """
    lo, hi = s.vars.fam_slice("x")
    if hi - lo < 2:
        raise ValueError("need at least two x-variables")
    ext = s.vars.extended(nt=1)
    f = s.embed(ext, s.trunc)
    t = TruncSeries.variable(ext, s.trunc, "t1")
    g = f.substitute_many({"x1": t, "x2": ctx.formal_inverse(t)})
    tl, th = g.vars.fam_slice("t")
    super_ok = all(not any(m[tl:th]) for m in g.terms)
    x1 = TruncSeries.variable(s.vars, s.trunc, "x1")
    diff = s - s.coefficient_of_power("x1", 0)
    gamma = True
    try:
        diff.exact_div(ctx.formal_sum(x1, x1))
    except ValueError:
        gamma = False
    return SupersymReport(super_ok, gamma)


def check_factorization(lam, n, ctx, reference=False):
    """P at rho_{n-1}+lam is the odd-pair product times s_L, and Q at
    rho_n+lam the full-pair product times s_L."""
    lam = as_partition(lam)
    if len(lam.parts) > n:
        raise ValueError("need len(lam) <= n")
    M = lam.part(1) + n - 1
    p_label = [lam.part(k) + n - k for k in range(1, n + 1)]
    q_label = [lam.part(k) + n - k + 1 for k in range(1, n + 1)]
    p_side = P_L(USchurRequest([e for e in p_label if e], n, ctx, b_prefix=M),
                 reference=reference)
    q_side = Q_L(USchurRequest(q_label, n, ctx, b_prefix=M),
                 reference=reference)
    base = s_L(lam, n, ctx, b_prefix=M, reference=reference)
    vs = base.vars
    N = ctx.trunc
    xs = [TruncSeries.variable(vs, N, "x%d" % (i + 1)) for i in range(n)]
    odd = TruncSeries.const(vs, N, 1)
    for i in range(n):
        for j in range(i + 1, n):
            odd = odd * ctx.formal_sum(xs[i], xs[j])
    full = odd
    for i in range(n):
        full = full * ctx.formal_sum(xs[i], xs[i])
    p_ok = p_side == odd * base
    q_ok = q_side == full * base
    return p_ok, q_ok


def eval_at(s, assignment, ctx):
    """Substitute x_i by inverse(b_k) (assignment i -> k) or 0 (k = 0).

    Returns a series in b only; the b-prefix grows to cover the largest
    substituted index.
    """
    lo, hi = s.vars.fam_slice("x")
    nx = hi - lo
    for i in range(1, nx + 1):
        if i not in assignment:
            raise ValueError("x%d not assigned" % i)
    blo, bhi = s.vars.fam_slice("b")
    nb = max([bhi - blo] + [k for k in assignment.values()])
    ext = s.vars.extended(nb=nb)
    f = s.embed(ext, s.trunc)
    subs = {}
    for i in range(1, nx + 1):
        k = assignment[i]
        if k == 0:
            subs["x%d" % i] = TruncSeries.zero(ext, s.trunc)
        else:
            bk = TruncSeries.variable(ext, s.trunc, "b%d" % k)
            subs["x%d" % i] = ctx.formal_inverse(bk)
    f = f.substitute_many(subs)
    return f.without_vars(["x%d" % i for i in range(1, nx + 1)])


# ---------- closed diagonal values ----------


def vanishing_diagonal_sL(lam, n, ctx):
    """Value of s_L at the shifted staircase point of its own shape."""
    lam = as_partition(lam)
    conj = lam.conjugate()
    nb = lam.part(1) + n
    vs = VarSet(0, nb, 0, 0)
    N = ctx.trunc
    out = TruncSeries.const(vs, N, 1)
    for (i, j) in lam.boxes():
        row = TruncSeries.variable(vs, N, "b%d" % (lam.part(i) + n - i + 1))
        col = TruncSeries.variable(vs, N, "b%d" % (n + j - conj.part(j)))
        out = out * ctx.formal_sum(ctx.formal_inverse(row), col)
    return out


def vanishing_diagonal_QL(lam, ctx):
    """Value of Q_L at the point of its own shape."""
    lam = as_strict(lam)
    parts = lam.parts
    nb = max(parts, default=1)
    vs = VarSet(0, nb, 0, 0)
    N = ctx.trunc
    out = TruncSeries.const(vs, N, 1)
    later = set()
    for i in range(len(parts) - 1, -1, -1):
        bi = ctx.formal_inverse(TruncSeries.variable(vs, N, "b%d" % parts[i]))
        for j in range(1, parts[i]):
            if j in later:
                continue
            out = out * ctx.formal_sum(
                bi, TruncSeries.variable(vs, N, "b%d" % j))
        later.add(parts[i])
    for i in range(len(parts)):
        bi = ctx.formal_inverse(TruncSeries.variable(vs, N, "b%d" % parts[i]))
        for j in range(i, len(parts)):
            bj = ctx.formal_inverse(TruncSeries.variable(vs, N, "b%d" % parts[j]))
            out = out * ctx.formal_sum(bi, bj)
    return out
