"""Arithmetic over a prime field Z/pZ."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime

DEFAULT_PRIME = 2**31 - 1
CONFIRM_PRIME = 2**61 - 1


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 2 or not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def fits_int64(self) -> bool:
        """Whether products of two reduced elements fit in a signed 64-bit word."""
        return (self.p - 1) ** 2 < 2**63

    def det(self, rows) -> int:
        return det_mod(rows, self.p)

    def rank(self, rows) -> int:
        return rank_mod(rows, self.p)


def det_mod(rows, p: int) -> int:
    """Determinant of a square matrix modulo p, by elimination."""
    a = [[x % p for x in row] for row in rows]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("matrix is not square")
    det = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        pv = a[col][col]
        det = det * pv % p
        inv = pow(pv, -1, p)
        for r in range(col + 1, size):
            f = a[r][col] * inv % p
            if f:
                row_r, row_c = a[r], a[col]
                for j in range(col, size):
                    row_r[j] = (row_r[j] - f * row_c[j]) % p
    return det % p


def rank_mod(rows, p: int) -> int:
    """Rank of a (not necessarily square) matrix modulo p."""
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col], -1, p)
        for r in range(rank + 1, len(a)):
            f = a[r][col] * inv % p
            if f:
                row_r, row_k = a[r], a[rank]
                for j in range(col, ncols):
                    row_r[j] = (row_r[j] - f * row_k[j]) % p
        rank += 1
        if rank == len(a):
            break
    return rank
