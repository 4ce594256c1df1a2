"""Formal group law arithmetic over the universal coefficient ring."""

import pytest

from fglsym.coeffring import (ADDITIVE, MULTIPLICATIVE, CoeffPoly, a_gen)
from fglsym.fgl import FGLContext, eliminate_even_phat, phat_relation_coefficient
from fglsym.series import TruncSeries, VarSet

T1 = VarSet(0, 0, 0, 1)
T3 = VarSet(0, 0, 0, 3)


def tvar(ctx, name="t1", vs=T1):
    return TruncSeries.variable(vs, ctx.trunc, name)


def test_inverse_coefficients_golden():
    ctx = FGLContext(5)
    a11, a12, a13, a22 = a_gen(1, 1), a_gen(1, 2), a_gen(1, 3), a_gen(2, 2)
    got = ctx.inverse_coeffs(5)
    assert got[1] == CoeffPoly.const(-1)
    assert got[2] == a11
    assert got[3] == -(a11 ** 2)
    assert got[4] == a11 ** 3 + a11 * a12 + 2 * a13 - a22
    assert got[5] == (-(a11 ** 4) - 3 * (a11 ** 2) * a12 - 6 * a11 * a13
                      + 3 * a11 * a22)


def test_two_series_golden():
    ctx = FGLContext(5)
    a11, a12, a13, a14 = a_gen(1, 1), a_gen(1, 2), a_gen(1, 3), a_gen(1, 4)
    a22, a23 = a_gen(2, 2), a_gen(2, 3)
    assert ctx.alpha(1) == CoeffPoly.const(2)
    assert ctx.alpha(2) == a11
    assert ctx.alpha(3) == 2 * a12
    assert ctx.alpha(4) == 2 * a13 + a22
    assert ctx.alpha(5) == 2 * a14 + 2 * a23
    assert all(ctx.alpha(k) == ctx.nseries_coeffs(2, 5).get(k, CoeffPoly.zero())
               for k in range(1, 6))


def test_formal_sum_leading_terms():
    ctx = FGLContext(3)
    t = tvar(ctx)
    two = ctx.formal_sum(t, t)
    assert two.coefficient({"t1": 1}) == 2
    assert two.coefficient({"t1": 2}) == a_gen(1, 1)


def test_inverse_axiom_deep():
    ctx = FGLContext(8)
    t = tvar(ctx)
    assert ctx.formal_sum(t, ctx.formal_inverse(t)).is_zero()


def test_formal_sum_unit_and_commutativity():
    ctx = FGLContext(5)
    vs = VarSet(0, 0, 0, 2)
    u = TruncSeries.variable(vs, 5, "t1")
    v = TruncSeries.variable(vs, 5, "t2")
    zero = TruncSeries.zero(vs, 5)
    assert ctx.formal_sum(u, zero) == u
    assert ctx.formal_sum(u, v) == ctx.formal_sum(v, u)


def test_nseries_recursion_and_negatives():
    ctx = FGLContext(5)
    t = tvar(ctx)
    assert ctx.n_series(0, t).is_zero()
    assert ctx.n_series(1, t) == t
    for n in range(2, 5):
        assert ctx.n_series(n, t) == ctx.formal_sum(ctx.n_series(n - 1, t), t)
    for n in range(1, 4):
        assert ctx.n_series(-n, t) == ctx.n_series(n, ctx.formal_inverse(t))


def genuine_contexts(trunc):
    return (FGLContext(trunc, ADDITIVE),
            FGLContext(trunc, MULTIPLICATIVE(-1)),
            FGLContext(trunc, MULTIPLICATIVE(None)))


def test_associativity_under_genuine_laws():
    for ctx in genuine_contexts(6):
        u, v, w = (TruncSeries.variable(T3, 6, n) for n in ("t1", "t2", "t3"))
        lhs = ctx.formal_sum(ctx.formal_sum(u, v), w)
        rhs = ctx.formal_sum(u, ctx.formal_sum(v, w))
        assert (lhs - rhs).is_zero(), ctx.spec


def test_universal_associator_is_nonzero():
    # the coefficient ring is the free polynomial ring: the associator
    # only vanishes modulo the relations a genuine law satisfies
    ctx = FGLContext(4)
    u, v, w = (TruncSeries.variable(T3, 4, n) for n in ("t1", "t2", "t3"))
    diff = (ctx.formal_sum(ctx.formal_sum(u, v), w)
            - ctx.formal_sum(u, ctx.formal_sum(v, w)))
    assert not diff.is_zero()
    assert diff.min_degree() == 4


def test_nseries_additivity():
    N = 5
    universal = FGLContext(N)
    t = tvar(universal)

    def defect(ctx, m, n):
        lhs = ctx.n_series(m + n, t)
        rhs = ctx.formal_sum(ctx.n_series(m, t), ctx.n_series(n, t))
        return lhs - rhs

    # the defining-recursion pairs and the inverse pair hold even universally
    for k in range(4):
        assert defect(universal, k, 0).is_zero()
        assert defect(universal, 0, -k).is_zero()
        if k:
            assert defect(universal, k, 1).is_zero()
            assert defect(universal, 1, k).is_zero()
            assert defect(universal, -k, -1).is_zero()
            assert defect(universal, -1, -k).is_zero()
    assert defect(universal, 1, -1).is_zero()
    assert defect(universal, -1, 1).is_zero()
    # any pair needing a reassociation fails in the free model
    assert not defect(universal, 2, -1).is_zero()
    assert not defect(universal, 2, 2).is_zero()
    # every pair holds once the law is genuine
    for ctx in genuine_contexts(N):
        for m in range(-3, 4):
            for n in range(-3, 4):
                assert defect(ctx, m, n).is_zero(), (ctx.spec, m, n)


def test_specialized_inverse_closed_forms():
    add = FGLContext(6, ADDITIVE)
    assert add.inverse_coeffs(6) == {1: CoeffPoly.const(-1)}
    a11 = a_gen(1, 1)
    sym = FGLContext(6, MULTIPLICATIVE(None))
    got = sym.inverse_coeffs(6)
    for k in range(6):
        want = a11 ** k if k % 2 else -(a11 ** k)
        assert got[k + 1] == want
    num = FGLContext(6, MULTIPLICATIVE(-1))
    assert [num.inverse_coeffs(6)[d].const_value() for d in range(1, 7)] \
        == [-1, 1, -1, 1, -1, 1]


def test_multiplicative_two_series_is_quadratic():
    ctx = FGLContext(6, MULTIPLICATIVE(-1))
    coeffs = ctx.nseries_coeffs(2, 6)
    assert coeffs == {1: CoeffPoly.const(2), 2: CoeffPoly.one()}
    add = FGLContext(6, ADDITIVE)
    assert add.nseries_coeffs(3, 6) == {1: CoeffPoly.const(3)}


def test_apply_univar_matches_formal_inverse():
    ctx = FGLContext(5)
    vs = VarSet(1, 1, 0, 0)
    x = TruncSeries.variable(vs, 5, "x1")
    b = TruncSeries.variable(vs, 5, "b1")
    s = ctx.formal_sum(x, b)
    assert ctx.apply_univar(ctx.inverse_coeffs(5), s) == ctx.formal_inverse(s)
    assert ctx.formal_sum(s, ctx.formal_inverse(s)).is_zero()
    assert ctx.formal_sub(s, s).is_zero()


def test_fact_power():
    ctx = FGLContext(4)
    vs = VarSet(0, 2, 0, 1)
    t = TruncSeries.variable(vs, 4, "t1")
    bs = [TruncSeries.variable(vs, 4, "b1"), TruncSeries.variable(vs, 4, "b2")]
    one = TruncSeries.const(vs, 4, 1)
    assert ctx.fact_power(t, bs, 0) == one
    assert ctx.fact_power(t, bs, 2) == \
        ctx.formal_sum(t, bs[0]) * ctx.formal_sum(t, bs[1])
    assert ctx.fact_power(t, bs, 0, doubled=True) == one
    assert ctx.fact_power(t, bs, 2, doubled=True) == \
        ctx.formal_sum(t, t) * ctx.formal_sum(t, bs[0])
    with pytest.raises(ValueError):
        ctx.fact_power(t, bs, -1)


def test_phat_relation_pivot():
    ctx = FGLContext(4)
    for D in (2, 4):
        rel = phat_relation_coefficient(ctx, D)
        assert rel[(D,)] == CoeffPoly.const(4)


def test_eliminate_even_phat_golden_k1():
    ctx = FGLContext(2)
    a11 = a_gen(1, 1)
    out = eliminate_even_phat(1, ctx)
    assert out.basis == "phat_mono"
    assert dict(out.entries) == {(1,): -a11, (1, 1): CoeffPoly.one()}


def test_eliminate_even_phat_golden_k2():
    ctx = FGLContext(4)
    a11, a12, a13 = a_gen(1, 1), a_gen(1, 2), a_gen(1, 3)
    out = eliminate_even_phat(2, ctx)
    want = {
        (1,): -2 * a13 - a11 * a12 + a11 ** 3,
        (1, 1): a12 - 3 * (a11 ** 2),
        (1, 1, 1): 3 * a11,
        (1, 1, 1, 1): CoeffPoly.const(-1),
        (3,): -2 * a11,
        (3, 1): CoeffPoly.const(2),
    }
    assert dict(out.entries) == want
    assert all(i % 2 == 1 for label in out.entries for i in label)


def test_eliminate_even_phat_specializes_to_literature_recursions():
    ctx = FGLContext(4)
    out = eliminate_even_phat(2, ctx)
    additive = {m: ADDITIVE.apply(c) for m, c in out.entries.items()}
    additive = {m: c for m, c in additive.items() if not c.is_zero()}
    assert additive == {(3, 1): CoeffPoly.const(2), (1, 1, 1, 1): CoeffPoly.const(-1)}
    ktheory = {m: MULTIPLICATIVE(-1).apply(c) for m, c in out.entries.items()}
    ktheory = {m: c for m, c in ktheory.items() if not c.is_zero()}
    assert ktheory == {
        (1,): CoeffPoly.one(),
        (1, 1): CoeffPoly.const(-3),
        (1, 1, 1): CoeffPoly.const(3),
        (1, 1, 1, 1): CoeffPoly.const(-1),
        (3,): CoeffPoly.const(-2),
        (3, 1): CoeffPoly.const(2),
    }


def test_eliminate_even_phat_rejects_bad_index():
    with pytest.raises(ValueError):
        eliminate_even_phat(0, FGLContext(2))
