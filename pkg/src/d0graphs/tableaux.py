"""Partitions and Young tableaux: RSK insertion, reading words, enumeration."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .words import Word

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {parts}")
    return lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in decreasing lexicographic order."""
    if n == 0:
        return ((),)
    result = []

    def build(remaining, maxpart, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            build(remaining - p, p, prefix + [p])

    build(n, n, [])
    return tuple(result)


class Tableau:
    """A filling of a partition shape, stored row-major.

    Columns strictly increase top to bottom and rows weakly increase left to
    right; with ``distinct`` all entries are pairwise distinct.
    """

    __slots__ = ("rows",)

    def __init__(self, rows, check=True, distinct=False):
        self.rows = tuple(tuple(r) for r in rows)
        if check:
            self._validate(distinct)

    def _validate(self, distinct):
        shape = self.shape
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError(f"rows do not form a partition shape: {shape}")
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row not weakly increasing: {row}")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("columns not strictly increasing")
        if distinct:
            entries = [x for row in self.rows for x in row]
            if len(set(entries)) != len(entries):
                raise ValueError("repeated entry in tableau flagged distinct")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, r: int, c: int) -> int:
        """1-based (row, column) access."""
        return self.rows[r - 1][c - 1]

    def row_reading_word(self) -> Word:
        """Concatenate rows left to right, starting with the bottom row."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def column_reading_word(self) -> Word:
        """Concatenate columns bottom to top, starting with the leftmost."""
        out = []
        shape = self.shape
        ncols = shape[0] if shape else 0
        for c in range(ncols):
            col = [self.rows[r][c] for r in range(len(self.rows)) if len(self.rows[r]) > c]
            out.extend(reversed(col))
        return tuple(out)

    def is_standard(self) -> bool:
        entries = sorted(x for row in self.rows for x in row)
        return entries == list(range(1, self.size + 1))

    def descent_set(self) -> frozenset[int]:
        """For a standard tableau: i such that i+1 sits in a lower row than i."""
        rowof = {}
        for r, row in enumerate(self.rows):
            for x in row:
                rowof[x] = r
        return frozenset(i for i in range(1, self.size) if rowof[i + 1] > rowof[i])

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Tableau(%s)" % (list(map(list, self.rows)),)


def rsk_insertion_tableau(w: Word) -> Tableau:
    """The RSK/Schensted insertion tableau P(w) of a repetition-free word."""
    if len(set(w)) != len(w):
        raise ValueError(f"insertion tableau requires a repetition-free word: {w}")
    rows: list[list[int]] = []
    for x in w:
        cur = x
        for row in rows:
            # bump the smallest entry greater than cur
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] > cur:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == len(row):
                row.append(cur)
                cur = None
                break
            row[lo], cur = cur, row[lo]
        if cur is not None:
            rows.append([cur])
    return Tableau(rows, check=False)


def superstandard_tableau(shape: Partition) -> Tableau:
    """Rows filled 1..n in reading order: row one gets 1..shape[0], etc."""
    rows, nxt = [], 1
    for p in shape:
        rows.append(list(range(nxt, nxt + p)))
        nxt += p
    return Tableau(rows, check=False)


def flagged_distinct_tableaux(shape: Partition, flags: tuple[int, ...]) -> list[Tableau]:
    """Semistandard tableaux of the given shape with no repeated letter and
    the entries of column c bounded by flags[c-1].

    Distinct entries force rows to be strictly increasing as well.
    """
    shape = as_partition(shape)
    if not shape:
        return [Tableau([], check=False)]
    ncols = shape[0]
    if len(flags) < ncols:
        raise ValueError(f"need a flag for each of {ncols} columns, got {flags}")
    nrows = len(shape)
    cells = [(r, c) for r in range(nrows) for c in range(shape[r])]
    results: list[Tableau] = []
    grid = [[0] * shape[r] for r in range(nrows)]
    used: set[int] = set()

    def fill(idx: int):
        if idx == len(cells):
            results.append(Tableau([row[:] for row in grid], check=False))
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1] + 1)
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, flags[c] + 1):
            if v in used:
                continue
            grid[r][c] = v
            used.add(v)
            fill(idx + 1)
            used.discard(v)
        grid[r][c] = 0

    fill(0)
    return results


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """All standard Young tableaux of the given shape."""
    shape = as_partition(shape)
    n = sum(shape)
    return [t for t in flagged_distinct_tableaux(shape, (n,) * (shape[0] if shape else 0))
            if t.is_standard()]


@lru_cache(maxsize=None)
def count_standard_tableaux(shape: Partition) -> int:
    return len(standard_tableaux(shape))
