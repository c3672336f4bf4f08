"""Young tableaux with uniform content, and their text formats.

A tableau here has labels 1..d, each appearing exactly n times.  Two text
formats are supported:

* compact rows: rows separated by ``.``, symbols ``1``-``9`` then ``A``-``Z``
  for 10-35, ``x^k`` repeats the symbol ``x`` k times.  The exponent is a
  single digit, or any number of digits inside braces (``1^{12}``).
  Tableaux are separated by commas or newlines; ``#`` starts a comment.
* JSON: ``{"shape": [...], "rows": [[...], ...]}``.
"""
from __future__ import annotations

import random
from math import comb
from typing import Iterator, Sequence

from .combinatorics import Partition, as_partition

SYMBOLS = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_SYMBOL_VALUE = {c: i + 1 for i, c in enumerate(SYMBOLS)}


class TableauError(ValueError):
    pass


class TableauParseError(TableauError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Tableau:
    """Filling of a Young diagram whose labels 1..d each occur n times."""

    __slots__ = ("rows", "shape", "d", "n", "_columns")

    def __init__(self, rows: Sequence[Sequence[int]], d: int | None = None, n: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in rows if len(row))
        try:
            shape = Partition(len(r) for r in rows)
        except ValueError as exc:
            raise TableauError(f"row lengths are not a partition: {[len(r) for r in rows]}") from exc
        counts = {}
        for row in rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        if d is None:
            d = max(counts, default=0)
        if n is None:
            n = counts.get(1, 0)
        if set(counts) != set(range(1, d + 1)) or any(c != n for c in counts.values()):
            raise TableauError(f"content must be each of 1..{d} exactly {n} times, got {sorted(counts.items())}")
        self.rows = rows
        self.shape = shape
        self.d = d
        self.n = n
        self._columns = None

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({format_compact(self)!r})"

    @property
    def columns(self) -> tuple:
        """Entries column by column, each column read top to bottom."""
        if self._columns is None:
            ncols = self.shape[0] if self.shape else 0
            self._columns = tuple(
                tuple(row[c] for row in self.rows if len(row) > c) for c in range(ncols)
            )
        return self._columns

    def is_semistandard(self) -> bool:
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for col in self.columns:
            if any(a >= b for a, b in zip(col, col[1:])):
                return False
        return True

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "Tableau":
        t = cls(obj["rows"])
        if "shape" in obj and tuple(t.shape) != tuple(Partition(obj["shape"])):
            raise TableauError(f"declared shape {obj['shape']} does not match rows")
        return t


def cache_size(t: Tableau) -> int:
    """Number of inequivalent partial placements summed over all column prefixes."""
    kappa = [0] * (t.d + 1)
    total = 0
    for col in t.columns:
        for x in col:
            kappa[x] += 1
        prod = 1
        for i in range(1, t.d + 1):
            prod *= comb(t.n, kappa[i])
        total += prod
    return total


def tableau_from_permutation(lam, perm: Sequence[int], n: int) -> Tableau:
    """Tableau with T(b) = ceil(perm(j(b)) / n), boxes numbered down each column,
    columns left to right.  `perm` is in one-line notation on 1..|lam|."""
    lam = as_partition(lam)
    size = lam.size
    if len(perm) != size or sorted(perm) != list(range(1, size + 1)):
        raise TableauError(f"need a permutation of 1..{size}")
    if n <= 0 or size % n:
        raise TableauError(f"size {size} is not a multiple of n={n}")
    rows = [[0] * r for r in lam]
    j = 0
    for c in range(lam[0] if lam else 0):
        for r in range(len(lam)):
            if lam[r] > c:
                rows[r][c] = -(-perm[j] // n)
                j += 1
    return Tableau(rows, d=size // n, n=n)


# --- compact text format --------------------------------------------------

def format_compact(t: Tableau) -> str:
    parts = []
    for row in t.rows:
        out = []
        i = 0
        while i < len(row):
            j = i
            while j < len(row) and row[j] == row[i]:
                j += 1
            sym = SYMBOLS[row[i] - 1]
            k = j - i
            out.append(sym if k == 1 else f"{sym}^{k}" if k < 10 else f"{sym}^{{{k}}}")
            i = j
        parts.append("".join(out))
    return ".".join(parts)


def _parse_one(text: str, start: int, end: int) -> list:
    rows = [[]]
    i = start
    prev = None
    while i < end:
        c = text[i]
        if c == ".":
            rows.append([])
            prev = None
            i += 1
        elif c == "^":
            if prev is None:
                raise TableauParseError("'^' without a preceding symbol", i)
            i += 1
            if i < end and text[i] == "{":
                close = text.find("}", i, end)
                if close < 0:
                    raise TableauParseError("unterminated '{'", i)
                digits = text[i + 1:close]
                i_next = close + 1
            else:
                digits = text[i:i + 1]
                i_next = i + 1
            if not digits.isdigit():
                raise TableauParseError("expected repetition count", i)
            k = int(digits)
            if k < 1:
                raise TableauParseError("repetition count must be positive", i)
            rows[-1].extend([prev] * (k - 1))
            prev = None
            i = i_next
        elif c in _SYMBOL_VALUE:
            prev = _SYMBOL_VALUE[c]
            rows[-1].append(prev)
            i += 1
        elif c in " \t\r":
            i += 1
        else:
            raise TableauParseError(f"unexpected character {c!r}", i)
    if any(not r for r in rows):
        raise TableauParseError("empty row", start)
    return rows


def parse_compact_tableaux(text: str, d: int | None = None, n: int | None = None) -> list:
    """Parse a list of compact tableaux; offsets in errors index into `text`."""
    out = []
    i = 0
    length = len(text)
    while i < length:
        c = text[i]
        if c == "#":
            nl = text.find("\n", i)
            i = length if nl < 0 else nl + 1
            continue
        if c in ",\n \t\r":
            i += 1
            continue
        j = i
        while j < length and text[j] not in ",\n#":
            j += 1
        rows = _parse_one(text, i, j)
        try:
            out.append(Tableau(rows, d=d, n=n))
        except TableauError as exc:
            raise TableauParseError(str(exc), i) from exc
        i = j
    return out


# --- semistandard tableaux ------------------------------------------------

def _ssyt_fill(shape, d, n, rng=None) -> Iterator[tuple]:
    """Row-by-row backtracking over semistandard fillings with content n^d.

    Cells are filled in reading order.  With `rng`, candidate order is
    shuffled at each cell.
    """
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    rows = [[0] * length for length in shape]
    remaining = [0] + [n] * d
    total = len(cells)

    def rec(k):
        if k == total:
            yield tuple(tuple(r) for r in rows)
            return
        r, c = cells[k]
        lo = rows[r][c - 1] if c else 1
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        # leave room for strictly larger labels in the cells below
        below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        hi = d - below
        cand = [v for v in range(lo, hi + 1) if remaining[v]]
        if rng is not None:
            rng.shuffle(cand)
        for v in cand:
            rows[r][c] = v
            remaining[v] -= 1
            yield from rec(k + 1)
            remaining[v] += 1
        rows[r][c] = 0

    yield from rec(0)


def enumerate_ssyt(lam, d: int, n: int, limit: int | None = None) -> list:
    """Semistandard tableaux of shape lam with content n^d, in a fixed order."""
    lam = as_partition(lam)
    if lam.size != d * n:
        return []
    out = []
    for rows in _ssyt_fill(tuple(lam), d, n):
        out.append(Tableau(rows, d=d, n=n))
        if limit is not None and len(out) >= limit:
            break
    return out


def sample_ssyt(lam, d: int, n: int, count: int, seed: int = 0, max_tries: int | None = None) -> list:
    """Up to `count` distinct semistandard tableaux from randomized backtracking.

    Not uniform; reproducible for a given seed.
    """
    lam = as_partition(lam)
    if lam.size != d * n:
        return []
    rng = random.Random(seed)
    seen = {}
    tries = max_tries if max_tries is not None else 20 * count
    for _ in range(tries):
        rows = next(_ssyt_fill(tuple(lam), d, n, rng), None)
        if rows is None:
            break
        seen.setdefault(rows, None)
        if len(seen) >= count:
            break
    return [Tableau(rows, d=d, n=n) for rows in seen]
