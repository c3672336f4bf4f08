"""Multiplicity and occurrence obstructions separating power sums from products.

For a partition lam of dn the coordinate ring of sums of k n-th powers has
multiplicity pl(lam, d, n) once k >= d, and the product variety has
multiplicity at most pl(lam, n, d).  Lower bounds on either side come from
ranks of tableau function evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import Partition, as_partition
from .data import basis_tableaux, witness_tableaux
from .field import DEFAULT_PRIME
from .hwv import MAX_RETRIES, RankCertificate, certify_rank
from .plethysm import plethysm
from .semigroup import load_family
from .tableau import cache_size, enumerate_ssyt, format_compact

EXACT = "exact"
LOWER_BOUND = "lower-bound"
BUNDLED_BASES = {(34, 6, 2): "34,6,2", (47, 7, 2): "47,7,2"}


@dataclass
class Bound:
    """An integer together with how it was obtained."""

    value: int
    kind: str  # EXACT or LOWER_BOUND
    method: str
    certificate: RankCertificate | None = None
    witnesses: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"value": str(self.value), "kind": self.kind, "method": self.method}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.witnesses:
            out["witnesses"] = list(self.witnesses)
        return out


@dataclass
class ObstructionReport:
    m: int
    n: int
    k: int
    d: int
    lam: Partition
    pow_multiplicity: Bound
    chow_upper_bound: int
    chow_lower_bound: Bound | None
    verdict: str  # multiplicity-obstruction, occurrence-obstruction, none, inconclusive
    seed: int = 0
    prime: int = DEFAULT_PRIME

    @property
    def occurrence(self) -> bool:
        return self.chow_upper_bound == 0 and self.pow_multiplicity.value > 0

    def to_json(self) -> dict:
        return {
            "parameters": {"m": self.m, "n": self.n, "k": self.k, "d": self.d, "lambda": list(self.lam)},
            "pow_multiplicity": self.pow_multiplicity.to_json(),
            "chow_upper_bound": str(self.chow_upper_bound),
            "chow_lower_bound": None if self.chow_lower_bound is None else self.chow_lower_bound.to_json(),
            "occurrence": self.occurrence,
            "verdict": self.verdict,
            "seed": self.seed,
            "prime": str(self.prime),
        }


def _check(lam, m, n, d) -> Partition:
    lam = as_partition(lam)
    if lam.size != d * n:
        raise ValueError(f"{lam} is not a partition of d*n = {d * n}")
    if len(lam) > m:
        raise ValueError(f"{lam} has more than m={m} rows")
    return lam


def pow_multiplicity(lam, m: int, n: int, d: int, k: int, tableaux=None, seed: int = 0,
                     p: int = DEFAULT_PRIME, retries: int = MAX_RETRIES, tableau_limit: int = 64,
                     jobs: int = 1) -> Bound:
    """Multiplicity of lam in degree d of the ring of sums of k n-th powers.

    Exact (the plethysm coefficient) for k >= d, otherwise the rank of
    tableau evaluations at seeded power-sum points.
    """
    lam = _check(lam, m, n, d)
    if k >= d:
        return Bound(plethysm(lam, d, n), EXACT, "plethysm")
    if tableaux is None:
        key = tuple(lam)
        if key in BUNDLED_BASES and n == lam[1] and d == n + 1:
            tableaux = basis_tableaux(BUNDLED_BASES[key])
        else:
            tableaux = enumerate_ssyt(lam, d, n, limit=tableau_limit)
    tableaux = list(tableaux)
    if not tableaux:
        return Bound(0, LOWER_BOUND, "rank")
    cert = certify_rank(tableaux, "pow", m, k=k, seed=seed, p=p, retries=retries, jobs=jobs)
    return Bound(cert.rank, LOWER_BOUND, "rank", cert)


def chow_upper_bound(lam, m: int, n: int, d: int, strict: bool = False) -> int:
    """pl(lam, n, d), an upper bound on the multiplicity of lam in degree d of
    the coordinate ring of products of n linear forms in m variables.

    The bound is usually stated for n >= m.  For n < m it still holds: a
    partition with more than n rows has pl(lam, n, d) = 0 and also cannot
    occur, and one with at most n rows behaves as in n variables.  Pass
    ``strict=True`` to refuse n < m.
    """
    lam = _check(lam, m, n, d)
    if strict and n < m:
        raise ValueError(f"upper bound requires n >= m, got n={n}, m={m}")
    return plethysm(lam, n, d)


def _family_for(m: int, n: int) -> str | None:
    return {(3, 6): "3x6", (4, 7): "4x7"}.get((m, n))


def chow_mult_lower_bound(lam, m: int, n: int, d: int, tableaux=None, seed: int = 0,
                          p: int = DEFAULT_PRIME, retries: int = MAX_RETRIES, tableau_limit: int = 0,
                          jobs: int = 1) -> Bound:
    """Certified lower bound on the multiplicity of lam in degree d of the
    coordinate ring of products of n linear forms.

    Without explicit tableaux, at most two rows and positive plethysm gives 1
    by inheritance.  Otherwise the rank of the given tableaux (default: the bundled witness, then up to
    `tableau_limit` semistandard tableaux) at seeded product points.
    """
    lam = _check(lam, m, n, d)
    if tableaux is None and len(lam) <= 2:
        if plethysm(lam, d, n) > 0:
            return Bound(1, LOWER_BOUND, "inheritance")
        # nothing to inherit; fall through to evaluation
    if tableaux is None:
        tableaux = []
        fam = _family_for(m, n)
        if fam is not None:
            w = witness_tableaux(fam).get(lam)
            if w is not None:
                tableaux = [w]
        if not tableaux and tableau_limit:
            tableaux = enumerate_ssyt(lam, d, n, limit=tableau_limit)
            tableaux.sort(key=cache_size)
    tableaux = list(tableaux)
    if not tableaux:
        return Bound(0, LOWER_BOUND, "none")
    cert = certify_rank(tableaux, "chow", m, seed=seed, p=p, retries=retries, jobs=jobs)
    return Bound(cert.rank, LOWER_BOUND, "rank", cert, [format_compact(t) for t in tableaux])


def multiplicity_obstruction_check(m: int, n: int, k: int, d: int, lam, seed: int = 0,
                                   p: int = DEFAULT_PRIME, with_lower: bool = False,
                                   tableaux=None, jobs: int = 1) -> ObstructionReport:
    lam = _check(lam, m, n, d)
    pw = pow_multiplicity(lam, m, n, d, k, tableaux=tableaux, seed=seed, p=p, jobs=jobs)
    upper = chow_upper_bound(lam, m, n, d)
    lower = chow_mult_lower_bound(lam, m, n, d, seed=seed, p=p, jobs=jobs) if with_lower else None
    if upper < pw.value:
        verdict = "multiplicity-obstruction"
    elif pw.kind == LOWER_BOUND:
        verdict = "inconclusive"
    else:
        verdict = "none"
    return ObstructionReport(m, n, k, d, lam, pw, upper, lower, verdict, seed, p)


def occurrence_obstruction_check(m: int, n: int, d: int, lam, k: int | None = None, seed: int = 0,
                                 p: int = DEFAULT_PRIME, jobs: int = 1) -> ObstructionReport:
    lam = _check(lam, m, n, d)
    if k is None:
        k = d
    pw = pow_multiplicity(lam, m, n, d, k, seed=seed, p=p, jobs=jobs)
    upper = chow_upper_bound(lam, m, n, d)
    if upper == 0 and pw.value > 0:
        verdict = "occurrence-obstruction"
    elif upper > 0 or pw.kind == EXACT:
        verdict = "none"
    else:
        verdict = "inconclusive"
    return ObstructionReport(m, n, k, d, lam, pw, upper, None, verdict, seed, p)


def no_occurrence_pipeline(family: str = "3x6", eval_budget: int = 0, dmax: int | None = None,
                           seed: int = 0, p: int = DEFAULT_PRIME, retries: int = MAX_RETRIES,
                           jobs: int = 1) -> dict:
    """Positivity certificates on the product side for every generator of a family.

    Generators with at most two rows are covered by inheritance, the rest by
    a nonzero evaluation of their witness tableau (or of up to `eval_budget`
    semistandard tableaux when no witness is bundled).
    """
    fam = load_family(family)
    rows = []
    uncovered = []
    witnesses = witness_tableaux(family)
    gens = [g for g in fam.generators if dmax is None or g.size // fam.n <= dmax]
    # cheapest evaluations first
    gens.sort(key=lambda g: (len(g) > 2, cache_size(witnesses[g]) if g in witnesses else 0))
    for g in gens:
        d = g.size // fam.n
        if len(g) <= 2:
            value = plethysm(g, d, fam.n)
            ok = value > 0
            rows.append({"mu": list(g), "d": d, "method": "inheritance", "certified": ok})
        else:
            tabs = [witnesses[g]] if g in witnesses else enumerate_ssyt(g, d, fam.n, limit=eval_budget)
            bound = Bound(0, LOWER_BOUND, "none")
            for t in sorted(tabs, key=cache_size):
                bound = chow_mult_lower_bound(g, fam.m, fam.n, d, tableaux=[t], seed=seed, p=p,
                                              retries=retries, jobs=jobs)
                if bound.value > 0:
                    break
            ok = bound.value > 0
            row = {"mu": list(g), "d": d, "method": "witness" if g in witnesses else "search", "certified": ok}
            if bound.certificate is not None:
                row["certificate"] = bound.certificate.to_json()
                row["witness"] = bound.witnesses[0] if bound.witnesses else None
            rows.append(row)
        if not ok:
            uncovered.append(list(g))
    return {
        "family": family,
        "dmax": dmax,
        "generators": len(gens),
        "covered": len(gens) - len(uncovered),
        "uncovered": uncovered,
        "rows": rows,
        "seed": seed,
        "prime": str(p),
    }
