"""Classical symmetric polynomials and expansions (the oracle layer)."""

import pytest

from fglsym.coeffring import CoeffPoly
from fglsym.sympoly import (Expansion, check_classical_q_relation, classical_P,
                            classical_Q, classical_q, complete, elementary,
                            expand_in_classical_Q, expand_in_m, monomial,
                            schur_s)


def test_elementary_and_complete_golden():
    e2 = elementary(2, 3)
    assert e2.coefficient({"x1": 1, "x2": 1}) == 1
    assert e2.coefficient({"x1": 2}) == CoeffPoly.zero()
    assert elementary(4, 3).is_zero()
    assert elementary(0, 3).constant_term() == 1
    h2 = complete(2, 2)
    assert h2.coefficient({"x1": 2}) == 1
    assert h2.coefficient({"x1": 1, "x2": 1}) == 1


def test_monomial_golden():
    m = monomial((2, 1), 3)
    assert m.coefficient({"x1": 2, "x2": 1}) == 1
    assert m.coefficient({"x1": 1, "x2": 2}) == 1
    assert m.coefficient({"x1": 1, "x2": 1, "x3": 1}) == CoeffPoly.zero()
    assert m.is_symmetric(3)
    assert monomial((1, 1, 1, 1), 3).is_zero()


def test_h_e_generating_inverse():
    """Alternating convolution of h and e vanishes in positive degree."""
    n = 4
    N = 4
    hs = [complete(k, n).pad_trunc(N) for k in range(N + 1)]
    es = [elementary(k, n).pad_trunc(N) for k in range(N + 1)]
    for d in range(1, N + 1):
        acc = None
        for j in range(d + 1):
            term = hs[d - j] * es[j]
            if j % 2:
                term = -term
            acc = term if acc is None else acc + term
        assert acc.is_zero(), d


def test_classical_q_golden():
    q1 = classical_q(1, 2)
    assert q1 == monomial((1,), 2).scale(2)
    q2 = classical_q(2, 2)
    assert q2.coefficient({"x1": 2}) == 2
    assert q2.coefficient({"x1": 1, "x2": 1}) == 4


def test_classical_q_relation():
    for i in range(1, 5):
        assert check_classical_q_relation(i)


def test_two_row_straightening():
    n = 4
    q = {k: classical_q(k, n).pad_trunc(3) for k in range(4)}
    lhs = classical_Q((2, 1), n).pad_trunc(3)
    assert lhs == q[2] * q[1] - q[3].scale(2)


def test_classical_Q_one_row_and_pivot():
    for k in (1, 2, 3):
        assert classical_Q((k,), 4) == classical_q(k, 4)
    Q21 = classical_Q((2, 1), 4)
    assert Q21.coefficient({"x1": 2, "x2": 1}) == 4
    Q321 = classical_Q((3, 2, 1), 4)
    assert Q321.coefficient({"x1": 3, "x2": 2, "x3": 1}) == 8
    assert Q321.is_symmetric(4)


def test_classical_P_scaling():
    for lam in ((1,), (2, 1), (3, 2, 1)):
        P = classical_P(lam, 4)
        Q = classical_Q(lam, 4)
        assert P.scale(2 ** len(lam)) == Q
    assert classical_P((2, 1), 4).coefficient({"x1": 2, "x2": 1}) == 1


def test_schur_golden():
    s = schur_s((2, 1), 3)
    assert s == monomial((2, 1), 3) + monomial((1, 1, 1), 3).scale(2)
    assert schur_s((2,), 3) == complete(2, 3)
    assert schur_s((1, 1), 3) == elementary(2, 3)


def test_schur_jacobi_trudi():
    n = 4
    h = {k: complete(k, n).pad_trunc(3) for k in range(4)}
    assert schur_s((2, 1), n).pad_trunc(3) == h[2] * h[1] - h[3]


def test_expand_in_m_roundtrip():
    n = 4
    f = classical_Q((2, 1), n)
    exp = expand_in_m(f, n)
    back = None
    for label, c in exp.entries.items():
        term = monomial(label, n, trunc=f.trunc).scale(c)
        back = term if back is None else back + term
    assert back == f


def test_expand_in_classical_Q_identity_and_product():
    n = 6
    assert dict(expand_in_classical_Q(classical_Q((2, 1), n), n).entries) \
        == {(2, 1): CoeffPoly.one()}
    f = classical_q(1, n).pad_trunc(2) * classical_q(1, n).pad_trunc(2)
    exp = expand_in_classical_Q(f, n)
    back = None
    for label, c in exp.entries.items():
        term = classical_Q(label, n, trunc=2).scale(c)
        back = term if back is None else back + term
    assert back == f
    p = expand_in_classical_Q(classical_P((2, 1), n), n, use_P=True)
    assert dict(p.entries) == {(2, 1): CoeffPoly.one()}


def test_expansion_class():
    e = Expansion("QL", {(1,): CoeffPoly.one()})
    f = Expansion("QL", {(1,): CoeffPoly.const(2), (2,): CoeffPoly.one()})
    s = e + f
    assert s.coefficient((1,)) == 3 and s.coefficient((2,)) == 1
    assert s.coefficient((9,)) == CoeffPoly.zero()
    assert not Expansion("QL")
    assert e.scale(CoeffPoly.const(0)) == Expansion("QL")
    with pytest.raises(ValueError):
        e + Expansion("PL")
    assert Expansion.from_json_obj(s.to_json_obj()) == s
    assert [lab for lab, _ in s.sorted_items()] == [(1,), (2,)]
