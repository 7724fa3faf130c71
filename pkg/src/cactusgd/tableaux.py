"""Partitions, rectangular frames, skew shapes and (semi)standard tableaux.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros so that equality and hashing need no extra
normalisation.  Cells are addressed (row, column), both 1-based, rows growing
downward (English convention).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]

EMPTY: Partition = ()


def normalize(rows) -> Partition:
    """Drop trailing zeros and return the canonical tuple form."""
    rows = tuple(int(x) for x in rows)
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    if any(x < 0 for x in rows):
        raise ValueError(f"negative row length in {rows}")
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"rows not weakly decreasing: {rows}")
    return rows


def is_partition(rows) -> bool:
    try:
        normalize(rows)
    except (ValueError, TypeError):
        return False
    return True


def size(p: Partition) -> int:
    return sum(p)


def contains(a: Partition, b: Partition) -> bool:
    """True iff b fits inside a cellwise (b_i <= a_i for all i)."""
    if len(b) > len(a):
        return False
    return all(b[i] <= a[i] for i in range(len(b)))


def row(p: Partition, i: int) -> int:
    """Length of row i (1-based), zero beyond the last stored row."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for r in p if r >= c) for c in range(1, p[0] + 1))


def addable_corners(p: Partition) -> list[tuple[int, int]]:
    """Cells (i, j) such that p plus that cell is again a partition."""
    out = []
    for i in range(1, len(p) + 2):
        j = row(p, i) + 1
        if row(p, i - 1) >= j or i == 1:
            out.append((i, j))
    return out


def removable_corners(p: Partition) -> list[tuple[int, int]]:
    """Cells (i, j) such that p minus that cell is again a partition."""
    out = []
    for i in range(1, len(p) + 1):
        if row(p, i) > row(p, i + 1):
            out.append((i, p[i - 1]))
    return out


def add_cell(p: Partition, cell: tuple[int, int]) -> Partition:
    i, j = cell
    if (i, j) not in addable_corners(p):
        raise ValueError(f"cell {cell} is not addable to {p}")
    rows = list(p) + [0] * (i - len(p))
    rows[i - 1] += 1
    return normalize(rows)


def remove_cell(p: Partition, cell: tuple[int, int]) -> Partition:
    i, j = cell
    if (i, j) not in removable_corners(p):
        raise ValueError(f"cell {cell} is not removable from {p}")
    rows = list(p)
    rows[i - 1] -= 1
    return normalize(rows)


def added_cell(small: Partition, big: Partition) -> tuple[int, int]:
    """The unique cell of big missing from small; requires |big| = |small|+1."""
    diff = [(i, c) for i in range(1, len(big) + 1)
            for c in range(row(small, i) + 1, row(big, i) + 1)]
    if size(big) != size(small) + 1 or len(diff) != 1 or not contains(big, small):
        raise ValueError(f"{big} does not cover {small}")
    return diff[0]


def skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    if not contains(outer, inner):
        raise ValueError(f"inner {inner} not contained in outer {outer}")
    return [(i, j) for i in range(1, len(outer) + 1)
            for j in range(row(inner, i) + 1, row(outer, i) + 1)]


@dataclass(frozen=True)
class RectangleFrame:
    """The r x (d-r) rectangle every shape must fit in; complement depends on it."""

    r: int
    d: int

    def __post_init__(self):
        if self.r < 1 or self.d <= self.r:
            raise ValueError(f"need 1 <= r < d, got r={self.r}, d={self.d}")

    @property
    def cols(self) -> int:
        return self.d - self.r

    @property
    def rect(self) -> Partition:
        return (self.cols,) * self.r

    @property
    def cells(self) -> int:
        return self.r * self.cols

    def fits(self, p: Partition) -> bool:
        return len(p) <= self.r and (not p or p[0] <= self.cols)


def complement(p: Partition, frame: RectangleFrame) -> Partition:
    """180-degree rotation of the frame rectangle minus p."""
    if not frame.fits(p):
        raise ValueError(f"shape {p} overflows frame {frame.r}x{frame.cols}")
    padded = list(p) + [0] * (frame.r - len(p))
    return normalize(frame.cols - padded[i] for i in range(frame.r - 1, -1, -1))


@lru_cache(maxsize=None)
def syt_count(p: Partition) -> int:
    """Number of standard tableaux of straight shape p, by hook lengths."""
    p = normalize(p)
    n = size(p)
    conj = conjugate(p)
    prod = 1
    for i in range(1, len(p) + 1):
        for j in range(1, p[i - 1] + 1):
            prod *= (p[i - 1] - j) + (conj[j - 1] - i) + 1
    return factorial(n) // prod


@lru_cache(maxsize=None)
def partitions_of(n: int, max_rows: int | None = None,
                  max_cols: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, optionally bounded, in lexicographically decreasing order."""
    if n == 0:
        return ((),)
    out = []

    def build(rest: int, prev: int, acc: list[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        if max_rows is not None and len(acc) >= max_rows:
            return
        top = min(rest, prev)
        for part in range(top, 0, -1):
            acc.append(part)
            build(rest - part, part, acc)
            acc.pop()

    build(n, n if max_cols is None else min(n, max_cols), [])
    return tuple(out)


class SkewTableau:
    """A filling of outer\\inner; rows[i] holds the entries of outer row i+1
    with the inner cells omitted."""

    __slots__ = ("inner", "rows", "_hash")

    def __init__(self, inner, rows):
        object.__setattr__(self, "inner", normalize(inner))
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in rows))
        object.__setattr__(self, "_hash", None)
        if len(self.inner) > len(self.rows):
            # inner rows of full width must still be present as empty rows
            raise ValueError("inner partition taller than row data")
        outer = self.outer
        if not contains(outer, self.inner):
            raise ValueError(f"outer {outer} does not contain inner {self.inner}")

    def __setattr__(self, *a):
        raise AttributeError("SkewTableau is immutable")

    @property
    def outer(self) -> Partition:
        return normalize(tuple(row(self.inner, i + 1) + len(r)
                               for i, r in enumerate(self.rows)))

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return (self.outer, self.inner)

    @property
    def ncells(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based cell (i, j)."""
        return self.rows[i - 1][j - 1 - row(self.inner, i)]

    def cells(self) -> list[tuple[int, int]]:
        return skew_cells(self.outer, self.inner)

    def entries(self) -> dict[tuple[int, int], int]:
        return {(i, j): self.entry(i, j) for (i, j) in self.cells()}

    def __eq__(self, other):
        return (isinstance(other, SkewTableau)
                and self.inner == other.inner and self.rows == other.rows)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.inner, self.rows)))
        return self._hash

    def __repr__(self):
        return f"SkewTableau(inner={self.inner}, rows={self.rows})"

    def __str__(self):
        parts = []
        for i, r in enumerate(self.rows):
            pad = ". " * row(self.inner, i + 1)
            parts.append(pad + " ".join(str(x) for x in r))
        return "\n".join(parts) if parts else "(empty)"

    def is_semistandard(self) -> bool:
        ent = self.entries()
        for (i, j), v in ent.items():
            if v < 1:
                return False
            if (i, j + 1) in ent and ent[(i, j + 1)] < v:
                return False
            if (i + 1, j) in ent and ent[(i + 1, j)] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        vals = sorted(self.entries().values())
        if vals != list(range(1, self.ncells + 1)):
            return False
        ent = self.entries()
        for (i, j), v in ent.items():
            if (i, j + 1) in ent and ent[(i, j + 1)] <= v:
                return False
            if (i + 1, j) in ent and ent[(i + 1, j)] <= v:
                return False
        return True

    @property
    def straight(self) -> bool:
        return self.inner == ()

    def restrict(self, lo: int, hi: int) -> "SkewTableau":
        """Sub-tableau of the cells carrying entries in [lo, hi]; entries kept."""
        if not (1 <= lo <= hi):
            raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
        ent = self.entries()
        keep = [(c, v) for c, v in ent.items() if v <= hi]
        nrows = max((i for (i, _), _ in keep), default=0)
        new_inner = [row(self.inner, i) for i in range(1, nrows + 1)]
        for (i, _j), v in keep:
            if v < lo:
                new_inner[i - 1] += 1
        rows_out = []
        for i in range(1, nrows + 1):
            cells_i = sorted((j, v) for (r, j), v in keep if r == i and v >= lo)
            rows_out.append(tuple(v for _j, v in cells_i))
        return SkewTableau(normalize(new_inner), rows_out)

    def map_entries(self, fn) -> "SkewTableau":
        return SkewTableau(self.inner, tuple(tuple(fn(v) for v in r) for r in self.rows))

    def column_word(self) -> tuple[int, ...]:
        """Column reading word: bottom-to-top within columns, left to right."""
        ent = self.entries()
        if not ent:
            return ()
        maxcol = max(j for (_i, j) in ent)
        word = []
        for j in range(1, maxcol + 1):
            col = sorted(((i, v) for (i, jj), v in ent.items() if jj == j), reverse=True)
            word.extend(v for _i, v in col)
        return tuple(word)

    def to_chain(self) -> tuple[Partition, ...]:
        """Chain of shapes inner = s_0 < s_1 < ... < s_n = outer for a standard filling."""
        if not self.is_standard():
            raise ValueError("chains are defined for standard tableaux")
        ent = {v: c for c, v in self.entries().items()}
        chain = [self.inner]
        cur = self.inner
        for k in range(1, self.ncells + 1):
            cur = add_cell(cur, ent[k])
            chain.append(cur)
        return tuple(chain)

    @classmethod
    def from_chain(cls, chain) -> "SkewTableau":
        chain = [normalize(p) for p in chain]
        inner = chain[0]
        cells = {}
        for k in range(1, len(chain)):
            cells[added_cell(chain[k - 1], chain[k])] = k
        return cls.from_cells(inner, chain[-1], cells)

    @classmethod
    def from_cells(cls, inner, outer, entries: dict) -> "SkewTableau":
        inner = normalize(inner)
        outer = normalize(outer)
        rows = []
        for i in range(1, len(outer) + 1):
            rows.append(tuple(entries[(i, j)]
                              for j in range(row(inner, i) + 1, row(outer, i) + 1)))
        while rows and not rows[-1] and len(rows) > len(inner):
            rows.pop()
        return cls(inner, rows)

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SkewTableau":
        return cls(tuple(obj.get("inner", ())), obj["rows"])


def straight_tableau(rows) -> SkewTableau:
    """Shorthand for a straight-shape tableau given as nested lists."""
    return SkewTableau((), rows)


def row_reading_syt(shape: Partition) -> SkewTableau:
    """The standard tableau with 1..shape_1 in row one, continuing row by row."""
    shape = normalize(shape)
    rows, k = [], 0
    for ln in shape:
        rows.append(tuple(range(k + 1, k + ln + 1)))
        k += ln
    return SkewTableau((), rows)


def superstandard(shape: Partition) -> SkewTableau:
    """Highest-weight semistandard tableau: row i filled with the letter i."""
    shape = normalize(shape)
    return SkewTableau((), tuple((i + 1,) * ln for i, ln in enumerate(shape)))


def enumerate_skew_syt(outer: Partition, inner: Partition = ()):
    """All standard fillings of outer\\inner, generated by placing 1..n."""
    outer, inner = normalize(outer), normalize(inner)
    cells = skew_cells(outer, inner)
    n = len(cells)
    out = []

    def place(k: int, cur: Partition, acc: dict):
        if k > n:
            out.append(SkewTableau.from_cells(inner, outer, dict(acc)))
            return
        for cell in addable_corners(cur):
            if cell in acc or cell not in cells:
                continue
            acc[cell] = k
            place(k + 1, add_cell(cur, cell), acc)
            del acc[cell]

    place(1, inner, {})
    return out


@lru_cache(maxsize=None)
def enumerate_syt(shape: Partition) -> tuple[SkewTableau, ...]:
    return tuple(enumerate_skew_syt(normalize(shape), ()))
