"""Truncated multivariate power series over the coefficient ring."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fglsym.coeffring import CoeffPoly, a_gen
from fglsym.series import (DivisibilityError, InversionError, ShapeError,
                           SubstitutionError, TruncSeries, VarSet)

VS = VarSet(2, 1, 0, 0)


def var(name, trunc=4, vs=VS):
    return TruncSeries.variable(vs, trunc, name)


def test_varset_canonical_names():
    vs = VarSet(2, 1, 1, 1)
    assert vs.names == ("x1", "x2", "b1", "y1", "t1")
    assert len(vs) == 5
    assert vs.index("b1") == 2
    assert vs.fam_slice("x") == (0, 2)
    assert vs.fam_degree((1, 2, 3, 0, 0), "x") == 3
    with pytest.raises(ShapeError):
        vs.index("z1")


def test_varset_extended_takes_maxima():
    vs = VarSet(2, 1, 0, 0)
    assert vs.extended(nx=1, nt=2) == VarSet(2, 1, 0, 2)
    assert vs.extended() == vs


def test_constructors_and_queries():
    x1, x2 = var("x1"), var("x2")
    f = x1 * x2 + TruncSeries.const(VS, 4, 3)
    assert f.constant_term() == 3
    assert f.coefficient({"x1": 1, "x2": 1}) == 1
    assert f.coefficient({"x1": 2}) == CoeffPoly.zero()
    assert f.min_degree() == 0
    assert (f - f).min_degree() is None
    assert f.max_exponent("x1") == 1
    assert TruncSeries.monomial(VS, 2, {"x1": 3}).is_zero()
    assert TruncSeries.variable(VS, 0, "x1").is_zero()
    with pytest.raises(ShapeError):
        TruncSeries.zero(VS, -1)


def test_coefficient_of_power_clears_variable():
    x1, x2 = var("x1"), var("x2")
    f = x1 * x1 * x2 + x1 * 2
    g = f.coefficient_of_power("x1", 2)
    assert g == x2
    assert f.coefficient_of_power("x1", 1) == TruncSeries.const(VS, 4, 2)


def test_shape_mismatch_raises():
    with pytest.raises(ShapeError):
        var("x1", trunc=4) + var("x1", trunc=5)
    with pytest.raises(ShapeError):
        var("x1", vs=VS) + TruncSeries.variable(VarSet(1, 0, 0, 0), 4, "x1")


def test_scale_and_pow():
    x1 = var("x1")
    assert x1 * 3 == 3 * x1
    assert x1.scale(a_gen(1, 1)) == a_gen(1, 1) * x1
    assert x1.pow(3) == x1 * x1 * x1
    assert x1.pow(0) == TruncSeries.const(VS, 4, 1)
    with pytest.raises(ValueError):
        x1.pow(-1)


def test_mul_truncates_and_caps():
    x1 = var("x1", trunc=3)
    f = (TruncSeries.const(VS, 3, 1) + x1).pow(3)
    assert f.max_exponent("x1") == 3
    assert f.coefficient({"x1": 3}) == 1
    capped = (TruncSeries.const(VS, 3, 1) + x1).mul(
        (TruncSeries.const(VS, 3, 1) + x1), fam_caps={"x": 1})
    assert capped.coefficient({"x1": 2}) == CoeffPoly.zero()
    assert capped.coefficient({"x1": 1}) == 2
    low = (x1 + x1 * x1).mul(TruncSeries.const(VS, 3, 1) + x1, degree_cap=2)
    assert low.trunc == 3
    assert low.coefficient({"x1": 3}) == CoeffPoly.zero()
    assert low.coefficient({"x1": 2}) == 2


def test_truncation_management():
    x1 = var("x1")
    f = (x1 + x1 * x1).truncate_to(1)
    assert f == var("x1", trunc=1)
    with pytest.raises(ShapeError):
        f.truncate_to(2)
    g = f.pad_trunc(3)
    assert g.trunc == 3 and g.terms == f.terms
    with pytest.raises(ShapeError):
        g.pad_trunc(1)


def test_family_truncate():
    x1, b1 = var("x1"), var("b1")
    f = x1 * b1 + x1
    assert f.family_truncate("b", 0) == x1
    assert f.family_truncate("b", 1) == f


def test_embed_and_without_vars():
    x1 = var("x1", vs=VarSet(1, 0, 0, 0))
    big = VarSet(2, 1, 0, 0)
    g = x1.embed(big)
    assert g.vars == big and g == var("x1", vs=big)
    assert g.without_vars(["x2", "b1"]) == x1
    with pytest.raises(ShapeError):
        g.embed(big, trunc=9)
    with pytest.raises(ShapeError):
        (g * var("x2", vs=big)).without_vars(["x2"])
    with pytest.raises(ShapeError):
        g.without_vars(["x1"])  # not a suffix of the x family


def test_rename_vars():
    ys = VarSet(0, 0, 2, 0)
    xs = VarSet(2, 0, 0, 0)
    f = TruncSeries.variable(ys, 4, "y1") * TruncSeries.variable(ys, 4, "y2")
    g = f.rename_vars(xs, {"y1": "x1", "y2": "x2"})
    assert g == TruncSeries.variable(xs, 4, "x1") * TruncSeries.variable(xs, 4, "x2")
    with pytest.raises(ShapeError):
        f.rename_vars(VarSet(1, 0, 0, 0), {"y1": "x1", "y2": "x1"})


def test_substitute_golden():
    x1, x2 = var("x1"), var("x2")
    f = x1 * x1 + x2
    g = f.substitute("x1", x2 + x2 * x2)
    assert g == x2 * x2 + x2 * x2 * x2 * 2 + x2 * x2 * x2 * x2 + x2
    assert f.substitute("x2", 0) == x1 * x1


def test_substitute_requires_zero_constant_term():
    f = var("x1")
    with pytest.raises(SubstitutionError):
        f.substitute("x1", var("x2") + TruncSeries.const(VS, 4, 1))


def test_substitute_many_rejects_overlap():
    x1, x2 = var("x1"), var("x2")
    with pytest.raises(SubstitutionError):
        (x1 + x2).substitute_many({"x1": x2, "x2": x1})
    g = (x1 + x2).substitute_many({"x1": var("b1"), "x2": var("b1")})
    assert g == var("b1") * 2


def test_invert_unit_exact():
    x1 = var("x1", trunc=6)
    for u in (1, -1):
        s = TruncSeries.const(VS, 6, u) + x1 + a_gen(1, 1) * x1 * x1
        assert s * s.invert_unit() == TruncSeries.const(VS, 6, 1)
    with pytest.raises(InversionError):
        (TruncSeries.const(VS, 6, 2) + x1).invert_unit()
    with pytest.raises(InversionError):
        x1.invert_unit()


def test_exact_div_golden_and_degree_loss():
    x1, x2 = var("x1", trunc=5), var("x2", trunc=5)
    q = x1 * x1 + x2 * 3 + x1 * x2
    d = x1 + x2
    f = q * d
    got = f.exact_div(d)
    assert got.trunc == 4
    assert got == q.truncate_to(4)


def test_exact_div_errors():
    x1, x2 = var("x1"), var("x2")
    with pytest.raises(DivisibilityError):
        (x1 * x2).exact_div(x1 + x2)
    with pytest.raises(DivisibilityError):
        x1.exact_div(TruncSeries.zero(VS, 4))
    with pytest.raises(DivisibilityError):
        (x1 + x2).exact_div(x1 * x1)


def test_exact_div_int():
    x1 = var("x1")
    assert (x1 * 6).exact_div_int(3) == x1 * 2
    with pytest.raises(ValueError):
        (x1 * 3).exact_div_int(2)


def test_symmetrize_and_is_symmetric():
    x1, x2 = var("x1"), var("x2")
    f = x1 * x1 * x2
    s = f.symmetrize(2)
    assert s == x1 * x1 * x2 + x2 * x2 * x1
    assert s.is_symmetric(2)
    assert not f.is_symmetric(2)
    alt = f.symmetrize(2, signed=True)
    swap = alt.apply_x_permutation([1, 0])
    assert swap == -alt
    with pytest.raises(ShapeError):
        f.symmetrize(3)


def test_graded_degree():
    x1 = var("x1")
    f = x1 * x1 * a_gen(1, 1) + x1
    assert f.graded_degree() == 1
    assert TruncSeries.zero(VS, 4).graded_degree() is None
    with pytest.raises(ValueError):
        (x1 + x1 * x1).graded_degree()


def test_by_degree_buckets():
    x1, x2 = var("x1"), var("x2")
    f = x1 + x2 + x1 * x2
    buckets = f.by_degree()
    assert sorted(buckets) == [1, 2]
    assert len(buckets[1]) == 2 and len(buckets[2]) == 1


def test_json_roundtrip_and_schema():
    x1, b1 = var("x1"), var("b1")
    f = x1 * b1 * a_gen(1, 2) + TruncSeries.const(VS, 4, -2)
    obj = f.to_json_obj()
    assert obj["vars"] == ["x1", "x2", "b1"]
    assert obj["trunc"] == 4
    assert TruncSeries.from_json_obj(obj) == f
    assert TruncSeries.from_json_obj(json.loads(f.to_json())) == f


def test_json_rejects_noncanonical_names():
    obj = {"vars": ["x2", "x1"], "trunc": 2, "terms": []}
    with pytest.raises(ShapeError):
        TruncSeries.from_json_obj(obj)


def test_sorted_terms_graded_lex():
    x1, x2 = var("x1"), var("x2")
    f = x2 + x1 * x1
    monos = [m for m, _ in f.sorted_terms()]
    assert monos == sorted(monos, key=lambda m: (sum(m), m))


MONOS = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1))
COEFFS = st.integers(-5, 5).filter(bool).map(CoeffPoly.const)
SERIES = st.dictionaries(MONOS.filter(lambda m: sum(m) <= 3), COEFFS,
                         max_size=4).map(lambda t: TruncSeries(VS, 4, t))


@settings(max_examples=50, deadline=None)
@given(SERIES, SERIES, SERIES)
def test_mul_associative_commutative(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@settings(max_examples=50, deadline=None)
@given(SERIES, SERIES)
def test_truncation_consistency(f, g):
    """Computing at higher truncation and cutting down agrees."""
    hi = (f.pad_trunc(7) * g.pad_trunc(7)).truncate_to(4)
    assert hi == f * g


@settings(max_examples=30, deadline=None)
@given(SERIES)
def test_exact_div_roundtrip(q):
    d = var("x1", trunc=4) + var("x2", trunc=4) * 2
    assert (q * d).exact_div(d) == q.truncate_to(3)


@settings(max_examples=30, deadline=None)
@given(SERIES)
def test_series_json_roundtrip(f):
    assert TruncSeries.from_json_obj(f.to_json_obj()) == f
