"""Semigroups of m-partitions with positive plethysm coefficient, and
decomposition of a partition into the listed generators."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import Partition, as_partition, m_partitions
from .data import read_text
from .plethysm import MAX_DP_LENGTH, plethysm

FAMILIES = {
    "3x6": ("generators_3x6.json", 17),
    "4x7": ("generators_4x7.json", 26),
}


class NotDecomposable(ValueError):
    """The partition is not a sum of generators of the family."""


class DataCorruption(RuntimeError):
    pass


@dataclass(frozen=True)
class Reduction:
    """Subtract `element` while the column count c_index (lam_i - lam_{i+1})
    is at least `threshold`."""

    element: Partition
    index: int
    threshold: int


@dataclass
class GeneratorFamily:
    id: str
    n: int
    m: int
    generators: tuple
    excluded_bars: frozenset
    base_search_bound: int
    reductions: tuple
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __contains__(self, lam) -> bool:
        return as_partition(lam) in self._genset

    @property
    def _genset(self) -> frozenset:
        gs = self.__dict__.get("_gs")
        if gs is None:
            gs = self.__dict__["_gs"] = frozenset(self.generators)
        return gs

    def bar_excluded(self, lam) -> bool:
        return as_partition(lam).bar in self.excluded_bars


def smallest_rectangle(rows: int, n: int, limit: int = 100) -> Partition:
    """Smallest (w, ..., w) with `rows` rows and positive plethysm for inner degree n."""
    for w in range(1, limit + 1):
        if (rows * w) % n == 0 and plethysm((w,) * rows, rows * w // n, n) > 0:
            return Partition((w,) * rows)
    raise ValueError(f"no positive {rows}-row rectangle with width <= {limit}")


def derive_reductions(n: int, m: int, excluded_bars) -> tuple:
    """Reductions that keep the part below the first row out of `excluded_bars`.

    Removing (n) leaves that part unchanged.  Removing a rectangle (w^i),
    i >= 2, lowers the second row to lam_2 - w >= c_i - w, which clears every
    excluded bar once c_i - w exceeds their largest first part.
    """
    margin = max((b[0] for b in excluded_bars if b), default=0) + 1
    out = [Reduction(Partition((n,)), 1, n)]
    for i in range(2, m + 1):
        rect = smallest_rectangle(i, n)
        out.append(Reduction(rect, i, rect[0] + margin))
    return tuple(out)


def reduction_degree_cap(n: int, reductions) -> int:
    """Largest d at which no reduction need apply: |lam| = sum_i i * c_i."""
    return sum(r.index * (r.threshold - 1) for r in reductions) // n


@lru_cache(maxsize=None)
def load_family(family_id: str) -> GeneratorFamily:
    if family_id not in FAMILIES:
        raise KeyError(f"unknown family {family_id!r}; expected one of {sorted(FAMILIES)}")
    name, bound = FAMILIES[family_id]
    raw = json.loads(read_text(name))
    n, m = int(raw["n"]), int(raw["m"])
    gens = tuple(Partition(g) for g in raw["generators"])
    for g in gens:
        if g.size % n or len(g) > m:
            raise DataCorruption(f"{name}: {g} is not an {m}-partition of a multiple of {n}")
    if len(set(gens)) != len(gens):
        raise DataCorruption(f"{name}: duplicate generators")
    bars = frozenset(Partition(b) for b in raw["excluded_bars"])
    reductions = derive_reductions(n, m, bars)
    bound = max(bound, reduction_degree_cap(n, reductions))
    return GeneratorFamily(family_id, n, m, gens, bars, bound, reductions)


def _minus(lam: tuple, g: tuple):
    if len(g) > len(lam):
        return None
    out = list(lam)
    for i, x in enumerate(g):
        out[i] -= x
        if out[i] < 0:
            return None
    if any(a < b for a, b in zip(out, out[1:])):
        return None
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _search(fam: GeneratorFamily, lam: tuple, gens: tuple):
    """Generators summing to lam (a tuple), or None.  Memoized per family."""
    if not lam:
        return ()
    memo = fam._memo
    if lam in memo:
        return memo[lam]
    found = None
    for g in gens:
        rest = _minus(lam, g)
        if rest is None:
            continue
        sub = _search(fam, rest, gens)
        if sub is not None:
            found = (g,) + sub
            break
    memo[lam] = found
    return found


def decompose(lam, fam: GeneratorFamily) -> list:
    """Generators (with repetition) whose sum is lam, or raise NotDecomposable."""
    lam = as_partition(lam)
    if len(lam) > fam.m:
        raise NotDecomposable(f"{lam} has more than {fam.m} rows")
    if lam.size % fam.n:
        raise NotDecomposable(f"size of {lam} is not a multiple of {fam.n}")
    gens = tuple(tuple(g) for g in sorted(fam.generators, key=lambda g: (-g.size, tuple(-x for x in g))))
    picked = []
    cur = tuple(lam)
    while sum(cur) // fam.n > fam.base_search_bound:
        padded = cur + (0,) * (fam.m + 1 - len(cur))
        for red in fam.reductions:
            c = padded[red.index - 1] - padded[red.index]
            if c >= red.threshold:
                rest = _minus(cur, tuple(red.element))
                part = _search(fam, tuple(red.element), gens)
                if rest is None or part is None:
                    raise DataCorruption(f"reduction {red} cannot be applied to {cur}")
                picked.extend(part)
                cur = rest
                break
        else:
            break
    tail = _search(fam, cur, gens)
    if tail is None:
        raise NotDecomposable(f"{lam} is not a sum of generators of {fam.id}")
    picked.extend(tail)
    return [Partition(g) for g in picked]


def is_decomposable(lam, fam: GeneratorFamily) -> bool:
    try:
        decompose(lam, fam)
    except NotDecomposable:
        return False
    return True


def verify_generators(fam: GeneratorFamily, pleth_budget: int = 8) -> dict:
    """Check plethysm(mu, |mu|/n, n) > 0 for generators of degree <= pleth_budget."""
    checked, skipped = [], []
    for g in fam.generators:
        d = g.size // fam.n
        if d > pleth_budget or len(g) > MAX_DP_LENGTH:
            skipped.append(g)
            continue
        value = plethysm(g, d, fam.n)
        if value <= 0:
            raise DataCorruption(f"generator {g} has plethysm coefficient {value}")
        checked.append((g, value))
    return {"family": fam.id, "checked": checked, "skipped": skipped}


def enumerate_m_partitions(total: int, m: int):
    """Partitions of total with at most m parts, largest first part first."""
    if total < 0 or m < 1:
        raise ValueError("need total >= 0 and m >= 1")
    return m_partitions(total, m)
