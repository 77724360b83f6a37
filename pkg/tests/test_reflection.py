from __future__ import annotations

import pytest

from conftest import load
from gen import cartan_sample, reflectable_sample
from nichols.braiding import BraidingMatrix, is_cartan_type
from nichols.errors import NotReflectable
from nichols.reflection import (
    identity_matrix,
    is_reflectable,
    m_coefficient,
    m_row,
    matmul,
    matvec,
    pseudo_reflection,
    reflect_braiding,
)
from nichols.scalar import ScalarContext

GEN = ScalarContext(0, ("t",))
C12 = ScalarContext(12)


def _pair(ctx, qii, prod):
    return BraidingMatrix.from_rows(ctx, [[qii, prod], ["1", "1"]])


def test_m_coefficient_examples():
    assert m_coefficient(_pair(GEN, "t", "t^-3"), 0, 1) == 3
    assert m_coefficient(_pair(C12, "z^4", "z^4"), 0, 1) == 2
    assert m_coefficient(_pair(GEN, "t", "t"), 0, 1) is None
    # branch B alone: q_ii = -1 and an unrelated product
    assert m_coefficient(BraidingMatrix.from_rows(ScalarContext(2, ("t",)), [["z", "t"], ["1", "1"]]), 0, 1) == 1
    # q_ii = 1: only branch A
    assert m_coefficient(_pair(C12, "1", "1"), 0, 1) == 0
    assert m_coefficient(_pair(C12, "1", "z"), 0, 1) is None
    with pytest.raises(ValueError):
        m_coefficient(_pair(C12, "1", "1"), 0, 0)


def test_m_coefficient_is_minimal_brute_force():
    # compare against a literal scan of the defining condition
    from nichols.scalar import is_qnumber_zero

    for q, i in reflectable_sample(3, 150):
        for j in range(q.rank):
            if j == i:
                continue
            m = m_coefficient(q, i, j)
            prod = q[i, j] * q[j, i]
            hits = [
                k for k in range(60)
                if (q[i, i] ** k * prod).is_one() or is_qnumber_zero(k + 1, q[i, i])
            ]
            assert m == hits[0]


def test_pseudo_reflection_examples():
    r1 = load("rank1_minus1")
    assert pseudo_reflection(r1, 0) == ((-1,),)
    a2 = load("a2_generic")
    s = pseudo_reflection(a2, 0)
    assert [tuple(s[r][c] for r in range(2)) for c in range(2)] == [(-1, 0), (1, 1)]
    g2 = load("g2_generic")
    assert matvec(pseudo_reflection(g2, 0), (0, 1)) == (3, 1)


def test_not_reflectable():
    q = _pair(GEN, "t", "t")
    assert not is_reflectable(q, 0)
    with pytest.raises(NotReflectable) as exc:
        pseudo_reflection(q, 0)
    assert (exc.value.i, exc.value.j) == (0, 1)
    with pytest.raises(NotReflectable):
        reflect_braiding(q, 0)
    with pytest.raises(NotReflectable):
        m_row(q, 0)


def test_reflect_examples():
    r1 = load("rank1_minus1")
    assert reflect_braiding(r1, 0) == r1
    a2 = load("a2_generic")
    expected = BraidingMatrix.from_rows(a2.ctx, [["t", "1"], ["t^-1", "t"]])
    assert reflect_braiding(a2, 0) == expected


def test_reflection_involution_and_m_preserved():
    for q, i in reflectable_sample(5, 100):
        s = pseudo_reflection(q, i)
        assert matmul(s, s) == identity_matrix(q.rank)
        r = reflect_braiding(q, i)
        assert r[i, i] == q[i, i]
        assert m_row(r, i) == m_row(q, i)
        assert reflect_braiding(r, i) == q


def test_cartan_preserved():
    for q in cartan_sample(9, 100):
        C = is_cartan_type(q)
        for i in range(q.rank):
            r = reflect_braiding(q, i)
            assert is_cartan_type(r) == C
            for j in range(q.rank):
                assert r[j, j] == q[j, j]


def test_m_equals_minus_a_for_cartan_type():
    for q in cartan_sample(13, 100):
        C = is_cartan_type(q)
        for i in range(q.rank):
            for j in range(q.rank):
                if i != j:
                    assert m_coefficient(q, i, j) == -C[i][j]


def test_reflection_column_structure():
    for q, i in reflectable_sample(17, 50):
        s = pseudo_reflection(q, i)
        n = q.rank
        m = m_row(q, i)
        for j in range(n):
            col = tuple(s[r][j] for r in range(n))
            if j == i:
                assert col == tuple(-1 if r == i else 0 for r in range(n))
            else:
                assert col == tuple(1 if r == j else (m[j] if r == i else 0) for r in range(n))
