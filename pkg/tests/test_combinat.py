"""Partitions, Grassmannian permutations, reduced words, and root data."""

import pytest

from fglsym.coeffring import ADDITIVE
from fglsym.combinat import (GrassmannianPerm, Partition, Root,
                             StrictPartition, as_partition, as_strict, euler,
                             euler_product, inversion_set, lambda_to_w_A,
                             lambda_to_w_C, partitions_in_box, reduced_word,
                             simple_action, strict_partitions_up_to,
                             w_to_lambda_A, w_to_lambda_C)
from fglsym.fgl import FGLContext
from fglsym.series import TruncSeries, VarSet


def test_partition_normalization():
    assert Partition((3, 2, 0, 0)).parts == (3, 2)
    assert Partition(()) == ()
    assert Partition((2, 2, 1)) == (2, 2, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_queries():
    lam = Partition((4, 2, 1))
    assert lam.size() == 7 and lam.length() == 3
    assert lam.part(1) == 4 and lam.part(5) == 0
    assert lam.conjugate() == (3, 2, 1, 1)
    assert lam.conjugate().conjugate() == lam
    assert len(lam.boxes()) == 7
    assert lam.contains((2, 2)) and not lam.contains((5,))
    assert not Partition((1,)).contains((1, 1))


def test_strict_partition_validation():
    assert StrictPartition((3, 1)).parts == (3, 1)
    with pytest.raises(ValueError):
        StrictPartition((2, 2))
    assert as_strict((2, 1)) == (2, 1)
    assert as_partition(Partition((2,))) == (2,)


def test_shifted_diagram_and_parity_rule():
    lam = StrictPartition((3, 1))
    assert lam.shifted_boxes() == [(1, 1), (1, 2), (1, 3), (2, 2)]
    assert lam.shifted() == (4, 2)
    # odd length appends a final 1
    assert StrictPartition((1,)).shifted() == (2, 1)
    assert StrictPartition((2, 1)).shifted() == (3, 2)
    assert StrictPartition((3, 2, 1)).shifted() == (4, 3, 2, 1)


def test_partition_enumerations_sorted_size_revlex():
    stricts = strict_partitions_up_to(3)
    assert [tuple(s.parts) for s in stricts] == [(), (1,), (2,), (3,), (2, 1)]
    box = partitions_in_box(2, 2)
    assert [tuple(p.parts) for p in box] == \
        [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    capped = strict_partitions_up_to(4, max_part=2)
    assert [tuple(s.parts) for s in capped] == [(), (1,), (2,), (2, 1)]


def test_grassmannian_perm_validation():
    with pytest.raises(ValueError):
        GrassmannianPerm("A", (1, 3))
    with pytest.raises(ValueError):
        GrassmannianPerm("C", (2, 2))
    with pytest.raises(ValueError):
        GrassmannianPerm("B", (1, 2))
    w = GrassmannianPerm("C", (-2, 1))
    assert w.descents() == [0]
    assert GrassmannianPerm("C", (-1, -2, 3)).descents() == [0, 1]


def test_type_a_bijection_golden():
    w = lambda_to_w_A((4, 2, 1, 0), 4, 10)
    assert w.word == (1, 3, 5, 8, 2, 4, 6, 7, 9, 10)
    assert w.descents() == [4]
    assert w_to_lambda_A(w, 4) == (4, 2, 1)
    with pytest.raises(ValueError):
        lambda_to_w_A((7,), 4, 10)


def test_type_a_bijection_roundtrip():
    n, N = 4, 10
    for lam in partitions_in_box(n, 6):
        if lam.size() > 6:
            continue
        w = lambda_to_w_A(lam, n, N)
        assert w_to_lambda_A(w, n) == lam


def test_type_c_bijection_golden():
    w = lambda_to_w_C((6, 4, 3, 1), 7)
    assert w.word == (-6, -4, -3, -1, 2, 5, 7)
    assert w_to_lambda_C(w) == (6, 4, 3, 1)
    with pytest.raises(ValueError):
        w_to_lambda_C((1, -2))
    with pytest.raises(ValueError):
        w_to_lambda_C((-2, 3, 1))


def test_type_c_bijection_roundtrip():
    for lam in strict_partitions_up_to(6):
        w = lambda_to_w_C(lam, 6)
        assert w_to_lambda_C(w) == lam


def test_reduced_word_golden():
    assert reduced_word((4, 2, 1), "A", n=4) == [2, 4, 3, 7, 6, 5, 4]
    assert reduced_word((4, 2, 1), "C") == [0, 1, 0, 3, 2, 1, 0]
    with pytest.raises(ValueError):
        reduced_word((2, 1), "A")


def test_reduced_word_replay():
    """Applying the letters rightmost first grows the shape from empty."""
    cases = [((3, 1), "A", 4), ((4, 2, 1), "A", 4),
             ((3, 1), "C", None), ((4, 2, 1), "C", None)]
    for lam, kind, n in cases:
        word = reduced_word(lam, kind, n=n)
        assert len(word) == sum(lam)
        cur = () if kind == "A" else ()
        for i in reversed(word):
            cur = simple_action(cur, i, kind, n=n)
        assert tuple(cur.parts) == lam


def test_simple_action_fixes_when_no_box():
    assert simple_action((1,), 2, "A", n=4) == (1,)
    assert simple_action((), 1, "C") == ()


def test_inversion_set_sizes():
    for lam in partitions_in_box(3, 3):
        assert len(inversion_set(lam, 3, "A")) == lam.size()
    for lam in strict_partitions_up_to(5):
        assert len(inversion_set(lam, 3, "C")) == lam.size()


def test_root_validation():
    with pytest.raises(ValueError):
        Root("double", 1, 2)
    with pytest.raises(ValueError):
        Root("minus", 1, 1)
    with pytest.raises(ValueError):
        Root("weird", 1, 2)


def test_euler_additive_closed_forms():
    ctx = FGLContext(3, ADDITIVE)
    vs = VarSet(0, 2, 0, 0)
    b1 = TruncSeries.variable(vs, 3, "b1")
    b2 = TruncSeries.variable(vs, 3, "b2")
    assert euler(Root("minus", 1, 2), ctx, nb=2) == b1 - b2
    assert euler(Root("plus", 1, 2), ctx, nb=2) == -b1 - b2
    assert euler(Root("double", 2, 2), ctx, nb=2) == b2 * (-2)


def test_euler_product_additive_golden():
    ctx = FGLContext(3, ADDITIVE)
    out = euler_product((1,), 1, "A", ctx)
    vs = VarSet(0, 2, 0, 0)
    b1 = TruncSeries.variable(vs, 3, "b1")
    b2 = TruncSeries.variable(vs, 3, "b2")
    assert out == b1 - b2
    outc = euler_product((1,), 1, "C", ctx)
    vsc = VarSet(0, 1, 0, 0)
    assert outc == TruncSeries.variable(vsc, 3, "b1") * (-2)
