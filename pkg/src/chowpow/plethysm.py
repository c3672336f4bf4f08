"""Plethysm coefficients a_lambda(d[n]) = <s_lambda, h_d[h_n]>.

The main route expands s_lambda by Jacobi-Trudi into complete homogeneous
functions and pairs each of them against h_d[h_n] through the monomial
coefficients c_nu(d, n).  Those are counted with a memoized dynamic
program over the degree-n compositions.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from math import comb

from .combinatorics import (
    Partition,
    QPolynomial,
    as_partition,
    compositions,
    q,
    q_binom,
    rect_partition_count,
)

MAX_DP_LENGTH = 4


class BudgetExceeded(RuntimeError):
    """A brute-force expansion would exceed its term budget."""


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def jacobi_trudi_terms(lam) -> list:
    """Signed shifted indices (sign, lambda + pi - (1, 2, ...)).

    Terms with a negative entry are dropped (h of negative degree is 0).
    """
    lam = tuple(lam)
    ell = len(lam)
    terms = []
    for perm in permutations(range(ell)):
        nu = tuple(lam[i] + perm[i] - i for i in range(ell))
        if min(nu, default=0) < 0:
            continue
        terms.append((_perm_sign(perm), nu))
    return terms


class MonomialCounter:
    """Counts c_nu(d, n): multisets of degree-n compositions summing to nu.

    The recursion walks the composition list (largest first coordinate
    first) and chooses the multiplicity of each one.  States are keyed by
    (composition index, remaining target); the remaining multiset size is
    carried explicitly.  One instance keeps its memo for the lifetime of the
    object, so reuse it for the several c_nu that one plethysm needs.
    """

    def __init__(self, n: int, length: int):
        if length > MAX_DP_LENGTH:
            raise ValueError(f"DP supports at most {MAX_DP_LENGTH} rows, got {length}")
        self.n = n
        self.length = length
        self.comps = compositions(n, length) if length else []
        self._memo = {}

    def count(self, nu, d: int) -> int:
        nu = tuple(nu) + (0,) * (self.length - len(nu))
        if len(nu) != self.length:
            raise ValueError(f"target {nu} longer than {self.length}")
        if min(nu, default=0) < 0:
            return 0
        if sum(nu) != d * self.n:
            return 0
        if self.n == 0 or self.length == 0:
            # h_d[h_0] = h_d(1) = 1
            return 1 if not any(nu) else 0
        # c_nu is symmetric in the entries of nu
        nu = tuple(sorted(nu, reverse=True))
        return self._count(0, d, nu)

    def _count(self, i: int, budget: int, target: tuple) -> int:
        if budget == 0:
            return 1 if not any(target) else 0
        comps = self.comps
        if i == len(comps):
            return 0
        alpha = comps[i]
        # every composition from i on has first coordinate <= alpha[0]
        if target[0] > budget * alpha[0]:
            return 0
        key = (i, budget, target)
        memo = self._memo
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        rest = target
        b = 0
        while True:
            total += self._count(i + 1, budget - b, rest)
            b += 1
            if b > budget:
                break
            rest = tuple(t - a for t, a in zip(rest, alpha))
            if min(rest) < 0:
                break
        memo[key] = total
        return total


def monomial_coefficient(nu, d: int, n: int) -> int:
    """c_nu(d, n) = coefficient of x^nu in h_d[h_n]."""
    nu = tuple(nu)
    while nu and nu[-1] == 0:
        nu = nu[:-1]
    return MonomialCounter(n, len(nu)).count(nu, d)


def plethysm(lam, d: int, n: int) -> int:
    """a_lambda(d[n]), the multiplicity of s_lambda in h_d[h_n]."""
    lam = as_partition(lam)
    if lam.size != d * n:
        return 0
    if d == 0:
        return 1
    ell = len(lam)
    if ell > MAX_DP_LENGTH:
        raise ValueError(f"plethysm DP handles at most {MAX_DP_LENGTH} rows; use plethysm_bruteforce")
    counter = MonomialCounter(n, ell)
    total = sum(sign * counter.count(nu, d) for sign, nu in jacobi_trudi_terms(lam))
    if total < 0:
        raise ArithmeticError(f"negative plethysm coefficient {total} for {lam}, d={d}, n={n}")
    return total


def monomial_table_bruteforce(d: int, n: int, nvars: int, budget: int = 2_000_000) -> Counter:
    """Exponent vectors of h_d evaluated at all degree-n monomials in nvars variables."""
    monomials = compositions(n, nvars)
    terms = comb(len(monomials) + d - 1, d)
    if terms > budget:
        raise BudgetExceeded(f"{terms} terms exceeds budget {budget}")
    table = Counter()
    for pick in combinations_with_replacement(monomials, d):
        table[tuple(map(sum, zip(*pick))) if pick else (0,) * nvars] += 1
    return table


def plethysm_bruteforce(lam, d: int, n: int, nvars: int | None = None, budget: int = 2_000_000) -> int:
    """Independent check of :func:`plethysm` by full expansion of h_d[h_n]."""
    lam = as_partition(lam)
    if lam.size != d * n:
        return 0
    if nvars is None:
        nvars = max(len(lam), 1)
    if nvars < len(lam):
        raise ValueError("need at least as many variables as rows")
    table = monomial_table_bruteforce(d, n, nvars, budget)
    padded = lam.padded(nvars)
    total = 0
    for sign, nu in jacobi_trudi_terms(padded):
        total += sign * table.get(nu, 0)
    return total


# --- closed forms for at most three rows, third row <= 2 -------------------

def c_generating_function(third: int, d: int, n: int) -> QPolynomial:
    """Polynomial whose q^k coefficient is c_{(L, k, third)}(d, n)."""
    if third == 0:
        return q_binom(n + d, n)
    if third == 1:
        return q_binom(n, 1) * q_binom(n + d - 1, n)
    if third == 2:
        # an alpha with third coordinate 1 used twice contributes q^(2r)
        doubled = QPolynomial([1 if i % 2 == 0 else 0 for i in range(2 * n - 1)]) if n else QPolynomial()
        return (doubled * q_binom(n + d - 2, n)
                + q_binom(n - 1, 1) * q_binom(n + d - 1, n)
                + (q_binom(n, 2) * q_binom(n + d - 2, n)).shift(1))
    raise ValueError("closed form only for third part 0, 1 or 2")


def closed_form_c(nu, d: int, n: int) -> int:
    """c_nu(d, n) for nu = (L, k, j), j in {0, 1, 2}, from the q-series."""
    nu = tuple(nu) + (0,) * (3 - len(nu))
    if len(nu) != 3:
        raise ValueError("expected at most three entries")
    L, k, third = nu
    if L < 0 or k < 0:
        return 0
    if L + k + third != d * n:
        return 0
    return c_generating_function(third, d, n)[k]


def _pleth_Lr2_series(d: int, n: int) -> QPolynomial:
    # q(1-q^n)(1-q^(n+1))/(1-q^2); one of n, n+1 is even so this is a polynomial
    one = QPolynomial([1])
    num = (one - q.shift(n - 1)) * (one - q.shift(n))
    first = q_binom(n + d - 2, n) * num.exact_div(one - q * q).shift(1)
    second = q_binom(n + d - 1, n) * (q.shift(n) - one)
    third = (one - q) * q_binom(n + d, n)
    return first + second + third


def closed_form_pleth_Lr2(L: int, r: int, d: int, n: int) -> int:
    """a_{(L, r, 2)}(d[n]) as a single coefficient extraction."""
    lam = Partition((L, r, 2))
    if lam.size != d * n:
        return 0
    return _pleth_Lr2_series(d, n)[r + 1]


def pleth_difference_series(d: int, n: int) -> QPolynomial:
    """binom(n+d-2, n-1)_q (q^n - q^d)(1-q^{d-1})(1-q^{n-1}) / ((1-q^d)(1-q^n))."""
    one = QPolynomial([1])
    num = (q_binom(n + d - 2, n - 1) * (q.shift(n - 1) - q.shift(d - 1))
           * (one - q.shift(d - 2)) * (one - q.shift(n - 2)))
    den = (one - q.shift(d - 1)) * (one - q.shift(n - 1))
    quot, rem = divmod(num, den)
    if not rem.is_zero():
        raise ArithmeticError(f"difference series not a polynomial for d={d}, n={n}")
    return quot


def pleth_difference_Lr2(L: int, r: int, d: int, n: int) -> int:
    """a_{(L,r,2)}(d[n]) - a_{(L,r,2)}(n[d])."""
    Partition((L, r, 2))
    if L + r + 2 != d * n:
        raise ValueError(f"(L, r, 2) must be a partition of d*n={d * n}")
    if d == n or min(d, n) < 2:
        # for min(d, n) < 2 both sides vanish on three-row shapes
        return 0
    return pleth_difference_series(d, n)[r]


@dataclass(frozen=True)
class DeltaCase:
    """Value of a_lam((n+1)[n]) - a_lam(n[n+1]) for lam = (n^2+n-2-r, r, 2)."""

    case: str  # "zero", "one", "positive" or "exception"
    value: int

    def to_json(self) -> dict:
        return {"case": self.case, "value": str(self.value)}


def foulkes_delta_case(n: int, r: int) -> DeltaCase:
    if n < 2:
        raise ValueError("n must be >= 2")
    Partition((n * n + n - 2 - r, r, 2))
    if r < n:
        return DeltaCase("zero", 0)
    if r == n:
        return DeltaCase("one", 1)
    k = r - n - 1
    value = rect_partition_count(k + 1, n + 1, n - 2) - rect_partition_count(k, n + 1, n - 2)
    if value < 0:
        raise ArithmeticError(f"negative difference {value} at n={n}, r={r}")
    return DeltaCase("positive" if value > 0 else "exception", value)


# --- vanishing by the shape below the first row ----------------------------

VANISHING_BARS = {
    6: frozenset(Partition(p) for p in [(3, 3), (3, 1), (2, 1), (1, 1), (1,)]),
    7: frozenset(Partition(p) for p in [
        (1,), (1, 1), (1, 1, 1), (2, 1), (2, 1, 1), (2, 2, 1), (3, 1), (3, 1, 1),
        (3, 2, 1), (3, 3), (3, 3, 1), (3, 3, 2), (3, 3, 3), (4, 1, 1), (4, 3, 3),
        (5, 1, 1), (5, 5, 5), (6, 1, 1),
    ]),
}


def bar_vanishes(lam, n: int) -> bool:
    """True when lam without its first row is in the known vanishing set for n,
    which forces plethysm(lam, d, n) == 0."""
    if n not in VANISHING_BARS:
        raise ValueError(f"no vanishing table for n={n}")
    return as_partition(lam).bar in VANISHING_BARS[n]
