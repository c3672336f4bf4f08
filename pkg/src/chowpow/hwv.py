"""Evaluation of tableau-indexed highest weight vector functions over Z/pZ.

A tableau T of shape lam with labels 1..d (each n times) defines a function
on degree-dn forms.  At a product point l_1 * ... * l_n it is a sum over
proper placements (each pair (label, form) used exactly once) of products
of column determinants; at a power sum l_1^n + ... + l_k^n it collapses to a
sum over maps from labels to summands.  Global constant factors are not
applied, so values are only meaningful up to a nonzero scalar per tableau.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .field import DEFAULT_PRIME, PrimeField, det_mod, rank_mod
from .tableau import Tableau, cache_size

MAX_RETRIES = 5
_POW_CHUNK = 1 << 18
_MERGE_AT = 1 << 22
_KEY_BITS = 62  # packed state keys wider than this use Python ints


@dataclass(frozen=True)
class ChowPoint:
    """The product of n linear forms in m variables."""

    forms: tuple
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "forms", _check_forms(self.forms, self.p))

    @property
    def m(self) -> int:
        return len(self.forms[0])

    @property
    def n(self) -> int:
        return len(self.forms)


@dataclass(frozen=True)
class PowPoint:
    """The sum l_1^n + ... + l_k^n; n is carried by the tableau."""

    forms: tuple
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "forms", _check_forms(self.forms, self.p))

    @property
    def m(self) -> int:
        return len(self.forms[0])

    @property
    def k(self) -> int:
        return len(self.forms)


def _check_forms(forms, p) -> tuple:
    forms = tuple(tuple(int(x) % p for x in f) for f in forms)
    if not forms:
        raise ValueError("a point needs at least one linear form")
    m = len(forms[0])
    if m < 1 or any(len(f) != m for f in forms):
        raise ValueError("all linear forms must have the same positive length")
    return forms


def _random_forms(count: int, m: int, seed, p: int) -> tuple:
    rng = np.random.default_rng(seed)
    if p <= 2**62:
        coords = rng.integers(0, p, size=(count, m), dtype=np.int64).tolist()
    else:
        width = (p.bit_length() + 71) // 8
        coords = [[int.from_bytes(rng.bytes(width), "little") for _ in range(m)] for _ in range(count)]
    return tuple(tuple(int(x) % p for x in row) for row in coords)


def random_chow_point(m: int, n: int, seed=0, p: int = DEFAULT_PRIME) -> ChowPoint:
    """Seeded point of the Chow variety; `seed` may be an int or a tuple of ints."""
    return ChowPoint(_random_forms(n, m, seed, p), p)


def random_pow_point(m: int, n: int, k: int, seed=0, p: int = DEFAULT_PRIME) -> PowPoint:
    """Seeded sum of k n-th powers.  `n` does not change the forms drawn."""
    if n < 1:
        raise ValueError("n must be positive")
    return PowPoint(_random_forms(k, m, seed, p), p)


def column_det(forms, p: int = DEFAULT_PRIME) -> int:
    """Determinant of the top s x s block of the s given forms."""
    s = len(forms)
    if s == 0:
        return 1
    if any(len(f) < s for f in forms):
        raise ValueError(f"{s} forms need at least {s} coordinates")
    return det_mod([f[:s] for f in forms], p)


def _check_args(t: Tableau, m: int):
    if len(t.shape) > m:
        raise ValueError(f"shape {tuple(t.shape)} has more than m={m} rows")


def _dtype(p: int):
    return np.int64 if (p - 1) ** 2 < 2**63 else object


def eval_chow(t: Tableau, pt: ChowPoint, prune: bool = True) -> int:
    """Sum over proper placements of products of column determinants.

    Forward DP over the columns.  A state records, for each label that has
    been seen but not yet used n times, which forms it has already received;
    all placements reaching the same state are merged.  With ``prune`` the
    transitions skip zero determinants, which never changes the value.
    """
    _check_args(t, pt.m)
    n, p = t.n, pt.p
    if pt.n != n:
        raise ValueError(f"tableau has n={n} but the point has {pt.n} forms")
    cols = t.columns
    # slot layout: every live label owns n bits of the key
    kappa = [0] * (t.d + 1)
    peak = 0
    for col in cols:
        live = {x for x in range(1, t.d + 1) if 0 < kappa[x] < n} | set(col)
        peak = max(peak, len(live))
        for x in col:
            kappa[x] += 1
    wide = peak * n > _KEY_BITS
    kdt = object if wide else np.int64
    vdt = _dtype(p)

    full = (1 << n) - 1
    keys = np.zeros(1, dtype=kdt)
    vals = np.ones(1, dtype=vdt)
    slot = {}
    free = []
    next_slot = 0
    kappa = [0] * (t.d + 1)
    dets = {}

    for col in cols:
        for x in col:
            if x not in slot:
                if free:
                    slot[x] = free.pop()
                else:
                    slot[x] = next_slot
                    next_slot += 1
        h = len(col)
        offs = [slot[x] * n for x in col]
        new_keys, new_vals = [], []
        pending = merged = 0
        tuples = permutations(range(n), h) if prune else product(range(n), repeat=h)
        for tup in tuples:
            add = 0
            clash = False
            for o, f in zip(offs, tup):
                bit = 1 << (o + f)
                if add & bit:
                    clash = True  # same label, same form twice in one column
                    break
                add |= bit
            if clash:
                continue
            det = dets.get(tup)
            if det is None:
                det = dets[tup] = column_det([pt.forms[f] for f in tup], p)
            if prune and det == 0:
                continue
            ok = (keys & add) == 0
            if not ok.any():
                continue
            new_keys.append(keys[ok] | add)
            new_vals.append(vals[ok] * det % p)
            pending += len(new_keys[-1])
            if pending > max(_MERGE_AT, merged):
                # fold into the merged prefix to bound memory
                mk, mv = _merge(np.concatenate(new_keys), np.concatenate(new_vals), p)
                new_keys, new_vals = [mk], [mv]
                pending = merged = len(mk)
        for x in col:
            kappa[x] += 1
        if not new_keys:
            return 0
        keys = np.concatenate(new_keys)
        vals = np.concatenate(new_vals)
        # labels now used n times drop out of the key
        done = 0
        for x in set(col):
            if kappa[x] == n:
                done |= full << (slot[x] * n)
                free.append(slot.pop(x))
        if done:
            keys = keys & ~done if wide else keys & np.int64(~done)
        keys, vals = _merge(keys, vals, p)
        if prune:
            nz = vals != 0
            keys, vals = keys[nz], vals[nz]
            if not len(keys):
                return 0
    return int(vals.sum()) % p if len(vals) else 0


def _merge(keys, vals, p):
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    vals = vals[order]
    if len(keys) <= 1:
        return keys, vals % p
    starts = np.flatnonzero(np.concatenate(([True], keys[1:] != keys[:-1])))
    return keys[starts], np.add.reduceat(vals, starts) % p


def eval_pow(t: Tableau, pt: PowPoint) -> int:
    """Sum over maps f: labels -> summands of products of column determinants."""
    _check_args(t, pt.m)
    p, k, d = pt.p, pt.k, t.d
    vdt = _dtype(p)
    forms = pt.forms
    # one-box columns only see a first coordinate; collect them per label
    single = [0] * (d + 1)
    tall = {}
    for col in t.columns:
        if len(col) == 1:
            single[col[0]] += 1
        else:
            tall[col] = tall.get(col, 0) + 1
    factors = []  # (label indices, table indexed by the forms they receive)
    for x in range(1, d + 1):
        if single[x]:
            table = np.array([pow(f[0], single[x], p) for f in forms], dtype=vdt)
            factors.append(((x - 1,), table))
    for col, mult in tall.items():
        h = len(col)
        table = np.zeros((k,) * h, dtype=vdt)
        for tup in product(range(k), repeat=h):
            if len(set(tup)) == h:
                table[tup] = pow(column_det([forms[f] for f in tup], p), mult, p)
        factors.append((tuple(x - 1 for x in col), table))
    total = 0
    size = k ** d
    radix = [k ** (d - 1 - i) for i in range(d)]
    for start in range(0, size, _POW_CHUNK):
        idx = np.arange(start, min(size, start + _POW_CHUNK), dtype=np.int64)
        digits = [(idx // radix[i]) % k for i in range(d)]
        acc = np.ones(len(idx), dtype=vdt)
        for labels, table in factors:
            acc = acc * table[tuple(digits[i] for i in labels)] % p
        total = (total + int(acc.sum())) % p
    return total


def evaluate(t: Tableau, pt) -> int:
    if isinstance(pt, ChowPoint):
        return eval_chow(t, pt)
    if isinstance(pt, PowPoint):
        return eval_pow(t, pt)
    raise TypeError(f"unknown point type {type(pt).__name__}")


def _evaluate_task(args):
    t, pt = args
    return evaluate(t, pt)


def evaluation_matrix(tableaux, points, jobs: int = 1) -> list:
    """Entry (i, j) is tableau i evaluated at point j.

    Rows are computed in order of increasing cache size; the result is in
    input order and does not depend on `jobs`.
    """
    tableaux = list(tableaux)
    points = list(points)
    if tableaux:
        sig = (tuple(tableaux[0].shape), tableaux[0].d, tableaux[0].n)
        if any((tuple(t.shape), t.d, t.n) != sig for t in tableaux):
            raise ValueError("all tableaux must share shape, d and n")
    if points:
        kind = type(points[0])
        if any(type(pt) is not kind or pt.m != points[0].m or pt.p != points[0].p
               or len(pt.forms) != len(points[0].forms) for pt in points):
            raise ValueError("all points must share kind, m, prime and number of forms")
    order = sorted(range(len(tableaux)), key=lambda i: cache_size(tableaux[i]))
    tasks = [(tableaux[i], pt) for i in order for pt in points]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flat = list(pool.map(_evaluate_task, tasks))
    else:
        flat = [_evaluate_task(task) for task in tasks]
    matrix = [None] * len(tableaux)
    w = len(points)
    for r, i in enumerate(order):
        matrix[i] = flat[r * w:(r + 1) * w]
    return matrix


def rank(matrix, p: int = DEFAULT_PRIME) -> int:
    return rank_mod(matrix, p)


@dataclass
class RankCertificate:
    """Outcome of a seeded rank run; the matrix rank is a lower bound."""

    rank: int
    target: int
    kind: str
    seed: int
    prime: int
    retries: int
    point_seeds: list = field(default_factory=list)

    @property
    def full(self) -> bool:
        return self.rank == self.target

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "target": self.target,
            "kind": self.kind,
            "seed": self.seed,
            "prime": str(self.prime),
            "retries": self.retries,
        }


def make_points(kind: str, m: int, n: int, count: int, seed: int, attempt: int = 0,
                k: int | None = None, p: int = DEFAULT_PRIME) -> list:
    """Points j = 0..count-1 drawn from seed tuple (seed, attempt, j)."""
    if kind == "chow":
        return [random_chow_point(m, n, (seed, attempt, j), p) for j in range(count)]
    if kind == "pow":
        if k is None:
            raise ValueError("pow points need k")
        return [random_pow_point(m, n, k, (seed, attempt, j), p) for j in range(count)]
    raise ValueError(f"kind must be 'chow' or 'pow', not {kind!r}")


def certify_rank(tableaux, kind: str, m: int, k: int | None = None, seed: int = 0,
                 p: int = DEFAULT_PRIME, npoints: int | None = None,
                 retries: int = MAX_RETRIES, jobs: int = 1) -> RankCertificate:
    """Rank of the evaluation matrix at seeded points, retrying with fresh
    points until it reaches the number of tableaux or the retries run out."""
    PrimeField(p)
    tableaux = list(tableaux)
    if not tableaux:
        return RankCertificate(0, 0, kind, seed, p, 0)
    n = tableaux[0].n
    count = npoints if npoints is not None else len(tableaux)
    best = None
    for attempt in range(retries + 1):
        pts = make_points(kind, m, n, count, seed, attempt, k, p)
        r = rank(evaluation_matrix(tableaux, pts, jobs), p)
        cert = RankCertificate(r, len(tableaux), kind, seed, p, attempt,
                               [[seed, attempt, j] for j in range(count)])
        if best is None or r > best.rank:
            best = cert
        if r == len(tableaux):
            break
    best.retries = attempt
    return best
