"""Words over [r] as crystal elements: RSK, the star involution, Kashiwara
operators via the signature rule, highest-weight detection and
Littlewood-Richardson numbers.

A word is a tuple of integers in 1..r; the word x1...xn stands for the tensor
x1 (x) ... (x) xn.  The signature-rule scanning convention is the one that
makes ``is_highest_weight(w)`` equivalent to "the P-symbol of w is
superstandard", which is pinned by a unit test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, NamedTuple

from .tableaux import (
    EMPTY,
    Partition,
    SkewTableau,
    contains,
    normalize,
    row,
    size,
    skew_cells,
    superstandard,
    syt_count,
)

Word = tuple[int, ...]


def parse_word(w) -> Word:
    """Accept a digit string or an iterable of ints."""
    if isinstance(w, str):
        return tuple(int(ch) for ch in w)
    return tuple(int(x) for x in w)


def format_word(w: Word) -> str:
    return "".join(str(x) for x in w)


def weight(w: Word, r: int) -> tuple[int, ...]:
    """Letter counts as a length-r vector."""
    counts = [0] * r
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)


class RskPair(NamedTuple):
    p: SkewTableau
    q: SkewTableau


def rsk(w) -> RskPair:
    """Row-insertion RSK; returns the semistandard P and standard Q symbols."""
    w = parse_word(w)
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        i = 0
        while True:
            if i == len(prows):
                prows.append([x])
                qrows.append([step])
                break
            r_ = prows[i]
            # bump the leftmost entry strictly greater than x
            pos = None
            for j, y in enumerate(r_):
                if y > x:
                    pos = j
                    break
            if pos is None:
                r_.append(x)
                qrows[i].append(step)
                break
            x, r_[pos] = r_[pos], x
            i += 1
    return RskPair(SkewTableau((), prows), SkewTableau((), qrows))


def rsk_inverse(p: SkewTableau, q: SkewTableau) -> Word:
    """The unique word with RSK image (p, q)."""
    if p.outer != q.outer or not p.straight or not q.straight:
        raise ValueError("rsk_inverse needs straight tableaux of equal shape")
    if not q.is_standard():
        raise ValueError("recording tableau must be standard")
    prows = [list(r) for r in p.rows]
    cell_of = {v: c for c, v in q.entries().items()}
    out: list[int] = []
    for k in range(q.ncells, 0, -1):
        i, j = cell_of[k]
        if j != len(prows[i - 1]):
            raise ValueError(f"recording tableau marks a non-corner cell {(i, j)}")
        x = prows[i - 1].pop()
        for up in range(i - 2, -1, -1):
            r_ = prows[up]
            # reverse bump: rightmost entry strictly below x
            pos = max(jj for jj, y in enumerate(r_) if y < x)
            x, r_[pos] = r_[pos], x
        out.append(x)
        while prows and not prows[-1]:
            prows.pop()
    return tuple(reversed(out))


def star(w, r: int) -> Word:
    """Reverse the word and flip each letter x to r+1-x."""
    w = parse_word(w)
    if any(not 1 <= x <= r for x in w):
        raise ValueError(f"letter out of range 1..{r} in {w}")
    return tuple(r + 1 - x for x in reversed(w))


def _signature(w: Word, i: int):
    """Surviving '-' indices (letters i+1) and free '+' indices (letters i)."""
    pending: list[int] = []
    free_plus: list[int] = []
    for idx, x in enumerate(w):
        if x == i:
            if pending:
                pending.pop()
            else:
                free_plus.append(idx)
        elif x == i + 1:
            pending.append(idx)
    return pending, free_plus


def crystal_e(w, i: int, r: int) -> Word | None:
    """Kashiwara raising operator; None when it vanishes."""
    w = parse_word(w)
    if not 1 <= i < r:
        raise ValueError(f"operator index {i} out of range 1..{r - 1}")
    # surviving minuses keep increasing index order; e acts on the leftmost
    pending, _ = _signature(w, i)
    if not pending:
        return None
    idx = pending[0]
    return w[:idx] + (i,) + w[idx + 1:]


def crystal_f(w, i: int, r: int) -> Word | None:
    """Kashiwara lowering operator; None when it vanishes."""
    w = parse_word(w)
    if not 1 <= i < r:
        raise ValueError(f"operator index {i} out of range 1..{r - 1}")
    _, free_plus = _signature(w, i)
    if not free_plus:
        return None
    idx = free_plus[-1]
    return w[:idx] + (i + 1,) + w[idx + 1:]


def is_highest_weight(w, r: int) -> bool:
    w = parse_word(w)
    return all(crystal_e(w, i, r) is None for i in range(1, r))


def enumerate_words(n: int, r: int):
    """All words of length n over [r] in lexicographic order."""
    return (tuple(t) for t in itertools.product(range(1, r + 1), repeat=n))


@lru_cache(maxsize=None)
def enumerate_singular(n: int, r: int, mu: tuple[int, ...]) -> tuple[Word, ...]:
    """Highest-weight words of weight mu, lexicographically sorted."""
    mu = tuple(mu) + (0,) * (r - len(mu))
    if len(mu) != r or sum(mu) != n:
        raise ValueError(f"weight {mu} incompatible with n={n}, r={r}")
    return tuple(w for w in enumerate_words(n, r)
                 if weight(w, r) == mu and is_highest_weight(w, r))


def _lattice_fillings(outer: Partition, inner: Partition, content: Partition) -> int:
    """Count LR fillings of outer\\inner with the given content.

    Rows weakly increase, columns strictly increase, and the reverse row
    reading word (right-to-left, top-to-bottom) is a lattice word.
    """
    cells = sorted(skew_cells(outer, inner),
                   key=lambda c: (c[0], -c[1]))  # reading order
    k = len(cells)
    if k != size(content):
        return 0
    nletters = len(content)
    fill: dict[tuple[int, int], int] = {}

    def rec(pos: int, counts: tuple[int, ...]) -> int:
        if pos == k:
            return 1
        i, j = cells[pos]
        total = 0
        for letter in range(1, nletters + 1):
            if counts[letter - 1] >= content[letter - 1]:
                continue
            # lattice condition on the prefix read so far
            if letter > 1 and counts[letter - 1] + 1 > counts[letter - 2]:
                continue
            # reading order fills each row right-to-left, rows top-to-bottom,
            # so the right neighbour and the cell above are already placed
            right = fill.get((i, j + 1))
            if right is not None and letter > right:
                continue
            up = fill.get((i - 1, j))
            if up is not None and letter <= up:
                continue
            fill[(i, j)] = letter
            new_counts = counts[:letter - 1] + (counts[letter - 1] + 1,) + counts[letter:]
            total += rec(pos + 1, new_counts)
            del fill[(i, j)]
        return total

    return rec(0, (0,) * nletters)


@lru_cache(maxsize=None)
def _lr2(outer: Partition, inner: Partition, lam: Partition) -> int:
    return _lattice_fillings(outer, inner, lam)


def lr_coefficient(target, parts: Iterable) -> int:
    """Multi-factor Littlewood-Richardson number by iterating the LR rule."""
    target = normalize(target)
    parts = [normalize(p) for p in parts]
    if sum(size(p) for p in parts) != size(target):
        raise ValueError("part sizes must add up to the target size")
    states: dict[Partition, int] = {EMPTY: 1}
    for lam in parts:
        nxt: dict[Partition, int] = {}
        for shape, mult in states.items():
            total = size(shape) + size(lam)
            for cand in _shapes_between(shape, target, total):
                c = _lr2(cand, shape, lam)
                if c:
                    nxt[cand] = nxt.get(cand, 0) + mult * c
        states = nxt
    return states.get(target, 0)


@lru_cache(maxsize=None)
def _shapes_between(lower: Partition, upper: Partition, n: int) -> tuple[Partition, ...]:
    """Partitions of n containing lower and contained in upper."""
    out = []

    def build(i: int, rest: int, prevlen: int, acc: list[int]):
        if i > len(upper):
            if rest == 0:
                out.append(normalize(acc))
            return
        lo = row(lower, i)
        hi = min(row(upper, i), prevlen, rest)
        for ln in range(hi, lo - 1, -1):
            capacity = sum(min(row(upper, t), ln) for t in range(i + 1, len(upper) + 1))
            if rest - ln > capacity:
                continue
            acc.append(ln)
            build(i + 1, rest - ln, ln, acc)
            acc.pop()

    build(1, n, n, [])
    return tuple(out)
