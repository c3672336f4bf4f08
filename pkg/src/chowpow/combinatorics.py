"""Partitions, compositions and integer polynomials in q.

All arithmetic is on Python integers, so nothing here can overflow.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from math import comb
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped at construction, so ``Partition((3, 1, 0))``
    and ``Partition((3, 1))`` are the same value. Padding a partition with
    zeros therefore never changes it.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"34,6,2"`` (or ``"(34, 6, 2)"``)."""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(x) for x in text.split(","))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def padded(self, length: int) -> tuple:
        if length < len(self):
            raise ValueError(f"cannot pad {self} to length {length}")
        return tuple(self) + (0,) * (length - len(self))

    def is_m_partition(self, m: int) -> bool:
        return len(self) <= m

    @property
    def bar(self) -> "Partition":
        """The partition with its first row removed."""
        return Partition(self[1:])

    def transpose(self) -> "Partition":
        return transpose(self)


def as_partition(parts) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


def transpose(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def add_partitions(mu, nu) -> Partition:
    """Componentwise sum, after padding the shorter one with zeros."""
    return Partition(a + b for a, b in zip_longest(mu, nu, fillvalue=0))


def column_counts(lam) -> dict:
    """Map i -> number of columns of the Young diagram with exactly i boxes."""
    lam = as_partition(lam)
    return {i + 1: lam.part(i) - lam.part(i + 1) for i in range(len(lam))}


def compositions(total: int, parts: int) -> list:
    """All weak compositions of `total` into `parts` entries.

    Order is lexicographic on the entry tuples with the largest first
    coordinate first, i.e. reverse lexicographic order:
    ``compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]``.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    return list(_compositions(total, parts))


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def m_partitions(total: int, m: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of `total` with at most `m` parts, in reverse lex order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield Partition()
        return
    if m == 0:
        return
    for head in range(min(total, max_part), 0, -1):
        # the remaining m-1 parts can hold at most (m-1)*head
        if total - head > (m - 1) * head:
            break
        for tail in m_partitions(total - head, m - 1, head):
            yield Partition((head,) + tuple(tail))


class QPolynomial:
    """Polynomial in q with integer coefficients; ``coeffs[i]`` multiplies q**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, r: int) -> int:
        if 0 <= r < len(self.coeffs):
            return self.coeffs[r]
        return 0

    coefficient = __getitem__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial([other])
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QPolynomial(0)"
        terms = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        return "QPolynomial(" + " + ".join(terms) + ")"

    @staticmethod
    def _lift(x) -> "QPolynomial":
        return x if isinstance(x, QPolynomial) else QPolynomial([x])

    def __add__(self, other) -> "QPolynomial":
        other = self._lift(other)
        return QPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "QPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "QPolynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "QPolynomial":
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPolynomial":
        out = QPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q**k (k >= 0)."""
        if not self.coeffs:
            return self
        return QPolynomial([0] * k + list(self.coeffs))

    def __divmod__(self, other) -> tuple:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if abs(lead) != 1:
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                f = c * lead  # lead is +-1, so this divides exactly
                quot[i - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= f * b
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, other) -> "QPolynomial":
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    def __call__(self, q: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


q = QPolynomial([0, 1])


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial [a+b choose a]_q, the generating function of
    partitions inside an a x b box."""
    if a < 0 or b < 0:
        raise ValueError("q_binomial needs a, b >= 0")
    if a == 0 or b == 0:
        return QPolynomial([1])
    # [a+b, a] = [a+b-1, a] + q^b [a+b-1, a-1]
    return q_binomial(a, b - 1) + q_binomial(a - 1, b).shift(b)


def q_binom(top: int, bottom: int) -> QPolynomial:
    """[top choose bottom]_q, zero outside 0 <= bottom <= top."""
    if bottom < 0 or bottom > top:
        return QPolynomial()
    return q_binomial(bottom, top - bottom)


def rect_partition_count(r: int, a: int, b: int) -> int:
    """Number of partitions of r fitting inside an a x b rectangle."""
    if r < 0 or r > a * b:
        return 0
    return q_binomial(a, b)[r]


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
