"""The universal formal group law calculus.

Formal sum, formal inverse, n-series, factorial powers, and the
generator-level elimination of even-index dual generators.
"""

from .coeffring import AGen, CoeffPoly, UNIVERSAL, exact_div_int
from .series import TruncSeries
from .sympoly import Expansion


def _univar_mul(a, b, N):
    out = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            if d > N:
                continue
            s = out.get(d)
            s = c1 * c2 if s is None else s + c1 * c2
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
    return out


def _univar_compose(outer, inner, N):
    """outer(inner(t)) for univariate coefficient tables; inner(0) = 0."""
    out = {}
    power = {0: CoeffPoly.one()}
    for d in range(0, max(outer, default=0) + 1):
        if d:
            power = _univar_mul(power, inner, N)
            if not power:
                break
        c = outer.get(d)
        if c is None or c.is_zero():
            continue
        for dd, cc in power.items():
            s = out.get(dd)
            s = cc * c if s is None else s + cc * c
            if s.is_zero():
                out.pop(dd, None)
            else:
                out[dd] = s
    return out


class FGLContext:
    """Truncation degree plus a coefficient specialization; immutable."""

    def __init__(self, trunc, spec=UNIVERSAL):
        if trunc < 1:
            raise ValueError("truncation must be >= 1")
        self.trunc = trunc
        self.spec = spec
        self._a_cache = {}
        self._inverse = None
        self._inverse_upto = 0
        self._nseries = {}

    def a_image(self, i, j):
        g = AGen(i, j)
        img = self._a_cache.get(g)
        if img is None:
            img = self.spec.image(g)
            self._a_cache[g] = img
        return img

    # ---------- univariate coefficient tables ----------

    def inverse_coeffs(self, upto=None):
        """Coefficients of the formal inverse as {degree: CoeffPoly}."""
        N = self.trunc if upto is None else max(upto, self.trunc)
        if self._inverse is not None and self._inverse_upto >= N:
            return self._inverse
        inv = {1: CoeffPoly.const(-1)}
        for D in range(2, N + 1):
            acc = CoeffPoly.zero()
            powers = {1: dict(inv)}
            for j in range(2, D):
                powers[j] = _univar_mul(powers[j - 1], inv, D)
            for i in range(1, D):
                for j in range(1, D - i + 1):
                    c = self.a_image(i, j)
                    if c.is_zero():
                        continue
                    pj = powers.get(j)
                    if pj is None:
                        continue
                    t = pj.get(D - i)
                    if t is not None:
                        acc = acc + c * t
            if not acc.is_zero():
                inv[D] = -acc
        self._inverse = inv
        self._inverse_upto = N
        return inv

    def nseries_coeffs(self, n, upto=None):
        """Coefficients of the n-series as {degree: CoeffPoly}."""
        N = self.trunc if upto is None else max(upto, self.trunc)
        cached = self._nseries.get(n)
        if cached is not None and cached[0] >= N:
            return cached[1]
        if n == 0:
            out = {}
        elif n == 1:
            out = {1: CoeffPoly.one()}
        elif n > 1:
            prev = self.nseries_coeffs(n - 1, N)
            out = self._univar_formal_sum(prev, {1: CoeffPoly.one()}, N)
        else:
            out = _univar_compose(self.nseries_coeffs(-n, N),
                                  self.inverse_coeffs(N), N)
        self._nseries[n] = (N, out)
        return out

    def alpha(self, k):
        """The t^k coefficient of the 2-series."""
        return self.nseries_coeffs(2, k).get(k, CoeffPoly.zero())

    def _univar_formal_sum(self, a, b, N):
        out = dict(a)
        for d, c in b.items():
            s = out.get(d)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(d, None)
            else:
                out[d] = s
        pa = {1: dict(a)}
        pb = {1: dict(b)}
        for i in range(1, N):
            if i > 1:
                pa[i] = _univar_mul(pa[i - 1], a, N)
            for j in range(1, N - i + 1):
                c = self.a_image(i, j)
                if c.is_zero():
                    continue
                if j > 1 and j not in pb:
                    for jj in range(2, j + 1):
                        if jj not in pb:
                            pb[jj] = _univar_mul(pb[jj - 1], b, N)
                prod = _univar_mul(pa[i], pb[j], N)
                for d, cc in prod.items():
                    s = out.get(d)
                    s = cc * c if s is None else s + cc * c
                    if s.is_zero():
                        out.pop(d, None)
                    else:
                        out[d] = s
        return out

    # ---------- series-level operations ----------

    def _check_arg(self, s):
        if not s.constant_term().is_zero():
            raise ValueError("formal group law argument has nonzero constant term")

    def apply_univar(self, coeffs, s, fam_caps=None):
        """Evaluate a univariate coefficient table on a zero-constant series."""
        self._check_arg(s)
        out = TruncSeries.zero(s.vars, s.trunc)
        power = TruncSeries.const(s.vars, s.trunc, 1)
        for d in range(0, max(coeffs, default=0) + 1):
            if d:
                power = power.mul(s, fam_caps=fam_caps)
                if power.is_zero():
                    break
            c = coeffs.get(d)
            if c is not None and not c.is_zero():
                out = out + power.scale(c)
        return out

    def formal_sum(self, u, v, fam_caps=None):
        """F(u, v) = u + v + sum a_{i,j} u^i v^j, truncated."""
        u._check_shape(v)
        self._check_arg(u)
        self._check_arg(v)
        N = u.trunc
        out = u + v
        pu = u
        du = u.min_degree()
        dv = v.min_degree()
        if du is None or dv is None:
            return out
        for i in range(1, N + 1):
            if i > 1:
                pu = pu.mul(u, fam_caps=fam_caps)
                if pu.is_zero():
                    break
            if i * du + dv > N:
                break
            pv = v
            for j in range(1, N + 1):
                if j > 1:
                    pv = pv.mul(v, fam_caps=fam_caps)
                    if pv.is_zero():
                        break
                if i * du + j * dv > N:
                    break
                c = self.a_image(i, j)
                if c.is_zero():
                    continue
                out = out + pu.mul(pv, fam_caps=fam_caps).scale(c)
        return out

    def formal_sum_many(self, parts, fam_caps=None):
        if not parts:
            raise ValueError("empty formal sum")
        out = parts[0]
        for p in parts[1:]:
            out = self.formal_sum(out, p, fam_caps=fam_caps)
        return out

    def formal_inverse(self, s, fam_caps=None):
        """The series i(s) with F(s, i(s)) = 0."""
        return self.apply_univar(self.inverse_coeffs(s.trunc), s,
                                 fam_caps=fam_caps)

    def formal_sub(self, u, v, fam_caps=None):
        return self.formal_sum(u, self.formal_inverse(v, fam_caps), fam_caps)

    def n_series(self, n, s, fam_caps=None):
        return self.apply_univar(self.nseries_coeffs(n, s.trunc), s,
                                 fam_caps=fam_caps)

    def fact_power(self, t, b_prefix, k, doubled=False, fam_caps=None):
        """[t|b]^k (or [[t|b]]^k when doubled); 1 for k = 0.

        b_prefix is the list of translation series b_1, b_2, ... (at least
        k entries for the plain power, k-1 for the doubled one).
        """
        if k < 0:
            raise ValueError("factorial power needs k >= 0")
        out = TruncSeries.const(t.vars, t.trunc, 1)
        if doubled:
            if k == 0:
                return out
            out = self.formal_sum(t, t, fam_caps=fam_caps)
            count = k - 1
        else:
            count = k
        for i in range(count):
            out = out.mul(self.formal_sum(t, b_prefix[i], fam_caps=fam_caps),
                          fam_caps=fam_caps)
        return out


# ---------- abstract generator ring for the even elimination ----------


def _pp_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2, reverse=True))
            s = out.get(m)
            s = c1 * c2 if s is None else s + c1 * c2
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
    return out


def _pp_add_into(acc, p, scalar=None):
    for m, c in p.items():
        cc = c if scalar is None else c * scalar
        s = acc.get(m)
        s = cc if s is None else s + cc
        if s.is_zero():
            acc.pop(m, None)
        else:
            acc[m] = s


def _tfam_mul(a, b, N):
    out = [dict() for _ in range(N + 1)]
    for d1, p1 in enumerate(a):
        if not p1:
            continue
        for d2, p2 in enumerate(b):
            if d1 + d2 > N or not p2:
                continue
            _pp_add_into(out[d1 + d2], _pp_mul(p1, p2))
    return out


def eliminate_even_phat(k, ctx):
    """Express the even generator of index 2k in terms of the odd ones.

    Solves the degree-2k coefficient of
    (1 + [2](T) p(T)) (1 + [2](i(T)) p(i(T))) = 1
    over the polynomial ring on abstract generators p_1, p_2, ...,
    substituting the eliminations of the lower even indices before the
    exact division by the pivot; returns an Expansion with basis tag
    "phat_mono" whose labels are exponent partitions of odd indices.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    work = FGLContext(max(ctx.trunc, 2 * k), ctx.spec)
    done = {}
    for j in range(1, k + 1):
        D = 2 * j
        rel = _phat_relation_coeff(work, D)
        pivot = rel.pop((D,), CoeffPoly.zero())
        if not pivot == CoeffPoly.const(4):
            raise AssertionError("unexpected pivot coefficient %r" % pivot)
        acc = {}
        for m, c in rel.items():
            term = {(): c}
            for idx in m:
                if idx % 2 == 1:
                    term = _pp_mul(term, {(idx,): CoeffPoly.one()})
                else:
                    term = _pp_mul(term, done[idx])
            _pp_add_into(acc, term)
        done[D] = {m: exact_div_int(-c, 4) for m, c in acc.items()}
    return Expansion("phat_mono", done[2 * k])


def _phat_relation_coeff(ctx, D):
    """The T^D coefficient of [2](T)p(T) + [2](i(T))p(i(T)) + product,
    as a polynomial over the abstract generators; p(T) = sum p_m T^{m-1}."""
    N = D
    two = ctx.nseries_coeffs(2)
    inv = ctx.inverse_coeffs()
    # powers of the inverse for composition
    inv_pow = {0: {0: CoeffPoly.one()}}
    for j in range(1, N + 1):
        inv_pow[j] = _univar_mul(inv_pow[j - 1], inv, N)
    # p(T) as a T-family of generator polynomials
    pT = [dict() for _ in range(N + 1)]
    for m in range(1, N + 1):
        pT[m - 1][(m,)] = CoeffPoly.one()
    # p(i(T)): T^d coefficient = sum_m p_m [t^d] i(t)^{m-1}
    pI = [dict() for _ in range(N + 1)]
    for m in range(1, N + 2):
        pw = inv_pow.get(m - 1, {})
        for d, c in pw.items():
            if d <= N and not c.is_zero():
                pI[d][(m,)] = pI[d].get((m,), CoeffPoly.zero()) + c
    for d in range(N + 1):
        pI[d] = {mm: cc for mm, cc in pI[d].items() if not cc.is_zero()}
    # [2](T) and [2](i(T)) as scalar T-families
    twoI = _univar_compose(two, inv, N)

    def scalar_mul(coeffs, fam):
        out = [dict() for _ in range(N + 1)]
        for d1, c in coeffs.items():
            if c.is_zero():
                continue
            for d2, p in enumerate(fam):
                if d1 + d2 > N or not p:
                    continue
                _pp_add_into(out[d1 + d2], p, c)
        return out

    A = scalar_mul(two, pT)
    B = scalar_mul(twoI, pI)
    AB = _tfam_mul(A, B, N)
    out = {}
    for src in (A[D], B[D], AB[D]):
        _pp_add_into(out, src)
    return out


def phat_relation_coefficient(ctx, D):
    """Public wrapper used by the verification suites."""
    return _phat_relation_coeff(FGLContext(max(ctx.trunc, D), ctx.spec), D)
