from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowpow.combinatorics import (
    Partition,
    QPolynomial,
    add_partitions,
    column_counts,
    compositions,
    m_partitions,
    q,
    q_binom,
    q_binomial,
    rect_partition_count,
    transpose,
)

partitions = st.lists(st.integers(0, 12), max_size=6).map(lambda xs: Partition(sorted(xs, reverse=True)))


def box_count(r, a, b):
    """Partitions of r with at most a parts, each at most b, by enumeration."""
    if b == 0:
        return 1 if r == 0 else 0
    return sum(1 for lam in m_partitions(r, a, b))


def test_partition_canonical():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert Partition.parse("34,6,2") == (34, 6, 2)
    assert Partition.parse("(2, 2)") == (2, 2)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_bar_and_parts():
    lam = Partition((34, 6, 2))
    assert lam.bar == (6, 2)
    assert lam.size == 42 and lam.length == 3
    assert lam.part(5) == 0
    assert lam.padded(5) == (34, 6, 2, 0, 0)


def test_transpose_examples():
    assert transpose((2, 2)) == (2, 2)
    assert transpose((3,)) == (1, 1, 1)
    assert transpose((34, 6, 2)) == (3, 3) + (2,) * 4 + (1,) * 28


@given(partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


def test_q_binomial_examples():
    assert q_binomial(1, 1) == QPolynomial([1, 1])
    assert q_binomial(0, 5) == QPolynomial([1])
    assert q_binomial(9, 6)[26] == 227
    assert q_binomial(9, 6)[27] == 227


@settings(max_examples=60)
@given(st.integers(0, 8), st.integers(0, 8))
def test_q_binomial_properties(a, b):
    poly = q_binomial(a, b)
    assert poly.degree == a * b
    assert poly.is_palindromic()
    assert sum(poly.coeffs) == comb(a + b, a)
    if a and b:
        assert poly == q_binomial(a, b - 1) + q_binomial(a - 1, b).shift(b)


@pytest.mark.parametrize("a,b", [(2, 2), (3, 4), (4, 3), (5, 5), (6, 3)])
def test_q_binomial_counts_partitions_in_box(a, b):
    for r in range(a * b + 2):
        assert rect_partition_count(r, a, b) == box_count(r, a, b)


def test_rect_partition_count_examples():
    assert rect_partition_count(0, 5, 7) == 1
    assert rect_partition_count(27, 9, 6) == 227
    assert rect_partition_count(3, 2, 2) == 1
    assert rect_partition_count(13, 2, 2) == 0


@given(st.integers(0, 40), st.integers(0, 7), st.integers(0, 7))
def test_rect_partition_count_symmetries(r, a, b):
    assert rect_partition_count(r, a, b) == rect_partition_count(r, b, a)
    if r <= a * b:
        assert rect_partition_count(r, a, b) == rect_partition_count(a * b - r, a, b)


def test_q_binom_outside_range_is_zero():
    assert q_binom(3, 5).is_zero()
    assert q_binom(5, 2) == q_binomial(2, 3)


def test_qpolynomial_division():
    one = QPolynomial([1])
    num = (one - q.shift(3)) * (one + q)
    assert num.exact_div(one + q) == one - q.shift(3)
    with pytest.raises(ArithmeticError):
        (one + QPolynomial.monomial(2)).exact_div(one + q)
    quot, rem = divmod(q.shift(4) + 1, q * q - 1)
    assert quot * (q * q - 1) + rem == q.shift(4) + 1


def test_compositions_order_and_counts():
    assert compositions(1, 2) == [(1, 0), (0, 1)]
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(compositions(6, 3)) == 28
    assert len(compositions(7, 4)) == 120
    comps = compositions(5, 3)
    assert comps == sorted(comps, reverse=True)
    assert len(set(comps)) == len(comps)


def test_add_partitions():
    assert add_partitions((6,), (6, 6)) == (12, 6)
    assert add_partitions((6, 6, 6), (6, 6, 6)) == (12, 12, 12)
    assert add_partitions((8, 4), (10, 2)) == (18, 6)


def test_column_counts():
    assert column_counts((6, 6, 6)) == {1: 0, 2: 0, 3: 6}
    assert column_counts((12, 6)) == {1: 6, 2: 6}
    assert column_counts((34, 6, 2)) == {1: 28, 2: 4, 3: 2}


@given(partitions)
def test_column_counts_reassemble(lam):
    cc = column_counts(lam)
    assert sum(i * c for i, c in cc.items()) == lam.size


def test_m_partitions_counts():
    assert list(m_partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert sum(1 for _ in m_partitions(6, 3)) == 7
    assert sum(1 for _ in m_partitions(12, 3)) == 19
    parts = list(m_partitions(10, 4))
    assert len(set(parts)) == len(parts)
    assert all(p.size == 10 and len(p) <= 4 for p in parts)
