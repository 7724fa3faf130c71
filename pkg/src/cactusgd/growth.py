"""Cylindrical growth diagrams and their dual-equivalence reductions.

The lattice follows the source convention: points (i, j) with 0 <= j-i <= k,
the first coordinate increasing westward, so a step east is i -> i-1 and a
step north is j -> j+1.  Diagrams live on the strip and repeat under
(i, j) -> (i+k, j+k); values are stored on the fundamental domain i in [1, k],
j in [i, i+k], every other node resolving through that shift.

A cylindrical growth diagram (cgd) anchors gamma_ii = empty and
gamma_{i,i+k} = the frame rectangle.  A dual-equivalence cylindrical growth
diagram (decgd) coarsens the lattice by a positive periodic interval m and
labels each internal edge with the dual equivalence class of the tableau read
along the underlying path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .local_rules import complete_corner
from .tableaux import (
    EMPTY,
    Partition,
    RectangleFrame,
    SkewTableau,
    contains,
    enumerate_syt,
    normalize,
    row,
    size,
    skew_cells,
    syt_count,
)
from .taquin import (
    DualEquivClass,
    chain_tableau,
    shuffle,
    straight_class,
    tableau_chain,
)

DEFAULT_BOUND = 8


@dataclass(frozen=True)
class IntervalFunction:
    """A positive k-periodic step-size function with its prefix sums."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or any(v < 1 for v in self.values):
            raise ValueError(f"interval values must be positive: {self.values}")

    @property
    def period(self) -> int:
        return len(self.values)

    def m(self, i: int) -> int:
        return self.values[(i - 1) % self.period]

    def mhat(self, i: int) -> int:
        if i > 0:
            return 1 + sum(self.m(l) for l in range(1, i))
        return 1 - sum(self.m(l) for l in range(i, 1))

    def ms(self, i: int, j: int) -> int:
        if j < i:
            raise ValueError(f"need j >= i, got ({i}, {j})")
        return self.mhat(j) - self.mhat(i)

    def mbar(self, i: int, j: int) -> tuple[int, int]:
        return (self.mhat(i), self.mhat(j))


def interval_eval(m: IntervalFunction, i: int, j: int) -> int:
    """The summed step size m_s(i, j)."""
    return m.ms(i, j)


def _canonical(i: int, j: int, k: int) -> tuple[int, int]:
    """Shift (i, j) by multiples of (k, k) so that i lands in [1, k]."""
    shift = ((i - 1) % k) + 1 - i
    return (i + shift, j + shift)


class _StripDiagram:
    """Shared storage/access for cylindrical diagrams on the strip."""

    def __init__(self, frame: RectangleFrame, k: int, gamma: dict):
        self.frame = frame
        self.k = k
        self.gamma = dict(gamma)

    def value(self, i: int, j: int) -> Partition:
        if not 0 <= j - i <= self.k:
            raise KeyError(f"({i}, {j}) lies outside the strip of width {self.k}")
        return self.gamma[_canonical(i, j, self.k)]


class Cgd(_StripDiagram):
    """A cylindrical growth diagram for a frame, determined by any column."""

    def first_column(self) -> SkewTableau:
        return chain_tableau(tuple(self.value(1, j) for j in range(1, self.k + 2)))

    def key(self):
        return tuple(sorted(self.gamma.items()))

    def __eq__(self, other):
        return isinstance(other, Cgd) and self.frame == other.frame and self.key() == other.key()

    def __hash__(self):
        return hash((self.frame, self.key()))

    def to_json(self) -> dict:
        return {
            "r": self.frame.r,
            "d": self.frame.d,
            "gamma": {f"{i},{j}": list(p) for (i, j), p in sorted(self.gamma.items())},
        }


class Decgd:
    """A dual-equivalence cylindrical growth diagram.

    gamma maps fundamental-domain nodes to partitions; alpha (east edges
    (i,j)-(i-1,j)) and beta (north edges (i,j)-(i,j+1)) map edges with
    0 <= j-i <= k-1 to dual equivalence classes.
    """

    def __init__(self, frame: RectangleFrame, m: IntervalFunction,
                 gamma: dict, alpha: dict, beta: dict):
        self.frame = frame
        self.m = m
        self.gamma = dict(gamma)
        self.alpha = dict(alpha)
        self.beta = dict(beta)

    @property
    def k(self) -> int:
        return self.m.period

    @property
    def shape(self) -> tuple[Partition, ...]:
        return tuple(self.value(i, i + 1) for i in range(1, self.k + 1))

    def value(self, i: int, j: int) -> Partition:
        if not 0 <= j - i <= self.k:
            raise KeyError(f"({i}, {j}) lies outside the strip of width {self.k}")
        return self.gamma[_canonical(i, j, self.k)]

    def alpha_class(self, i: int, j: int) -> DualEquivClass:
        return self.alpha[_canonical(i, j, self.k)]

    def beta_class(self, i: int, j: int) -> DualEquivClass:
        return self.beta[_canonical(i, j, self.k)]

    def key(self):
        return (tuple(sorted(self.gamma.items())),
                tuple(sorted((e, c.key()) for e, c in self.alpha.items())),
                tuple(sorted((e, c.key()) for e, c in self.beta.items())))

    def __eq__(self, other):
        return (isinstance(other, Decgd) and self.frame == other.frame
                and self.m == other.m and self.key() == other.key())

    def __hash__(self):
        return hash((self.frame, self.m, self.key()))

    def to_json(self) -> dict:
        return {
            "r": self.frame.r,
            "d": self.frame.d,
            "shape": [list(p) for p in self.shape],
            "gamma": {f"{i},{j}": list(p) for (i, j), p in sorted(self.gamma.items())},
            "alpha": {f"{i},{j}": c.to_json() for (i, j), c in sorted(self.alpha.items())},
            "beta": {f"{i},{j}": c.to_json() for (i, j), c in sorted(self.beta.items())},
        }


def generate_cgd(first_column: SkewTableau, frame: RectangleFrame) -> Cgd:
    """Grow the whole diagram eastward from column i=1.

    Each new column is forced top-down from its rectangle anchor; closing the
    cylinder must reproduce the first column, which is checked.
    """
    if first_column.inner != () or first_column.outer != frame.rect:
        raise ValueError(f"first column must be a straight tableau of shape {frame.rect}")
    if not first_column.is_standard():
        raise ValueError("first column must be standard")
    k = frame.cells
    cols: dict[int, list[Partition]] = {1: list(tableau_chain(first_column))}
    for step in range(1, k + 1):
        i_new = 1 - step
        prev = cols[i_new + 1]
        col: list[Partition] = [None] * (k + 1)  # type: ignore[list-item]
        col[0] = EMPTY
        col[k] = frame.rect
        for t in range(k - 1, 0, -1):
            col[t] = complete_corner(prev[t - 1], prev[t], col[t + 1], "SE")
        cols[i_new] = col
    if cols[1 - k] != cols[1]:
        raise AssertionError("cylindrical periodicity failed")  # must never fire
    gamma = {}
    for i_stored in range(2 - k, 2):
        for t, p in enumerate(cols[i_stored]):
            key = _canonical(i_stored, i_stored + t, k)
            if key in gamma and gamma[key] != p:
                raise AssertionError("inconsistent overlap while storing cgd")
            gamma[key] = p
    return Cgd(frame, k, gamma)


def enumerate_cgds(frame: RectangleFrame, bound: int = DEFAULT_BOUND) -> tuple[Cgd, ...]:
    """One cgd per standard tableau of the frame rectangle."""
    if frame.cells > bound:
        raise ValueError(
            f"frame has r(d-r) = {frame.cells} > bound {bound}; raise the bound explicitly")
    return tuple(generate_cgd(t, frame) for t in enumerate_syt(frame.rect))


def validate_cgd(cgd: Cgd) -> None:
    """Check growth rules (i)-(iii) and periodicity on the fundamental domain."""
    k = cgd.k
    for i in range(1, k + 1):
        for j in range(i, i + k + 1):
            p = cgd.value(i, j)
            if size(p) != j - i:
                raise AssertionError(f"|gamma_{i}{j}| != {j - i}")
            if j - i < k:
                for qv in (cgd.value(i - 1, j), cgd.value(i, j + 1)):
                    if not contains(qv, p) or size(qv) != size(p) + 1:
                        raise AssertionError(f"edge at ({i},{j}) does not add one box")
        if cgd.value(i, i) != EMPTY or cgd.value(i, i + k) != cgd.frame.rect:
            raise AssertionError("anchor condition failed")
    for i in range(1, k + 1):
        for j in range(i, i + k - 1):
            mu = cgd.value(i, j)
            lam = cgd.value(i - 1, j + 1)
            nw, se = cgd.value(i, j + 1), cgd.value(i - 1, j)
            cells = sorted(set(skew_cells(lam, mu)))
            (r1, c1), (r2, c2) = cells
            adjacent = (r1 == r2 and abs(c1 - c2) == 1) or (c1 == c2 and abs(r1 - r2) == 1)
            if not adjacent and nw == se:
                raise AssertionError(f"rule (iii) fails at square ({i},{j})")
            if adjacent and nw != se:
                raise AssertionError(f"domino square disagrees at ({i},{j})")


def _column_classes_from_cgd(cgd: Cgd, m: IntervalFunction) -> tuple[list, list]:
    """Coarse first-column values and vertical-edge classes of the reduction."""
    k = m.period
    values = [cgd.value(*m.mbar(1, j)) for j in range(1, k + 2)]
    classes = []
    for j in range(1, k + 1):
        lo, hi = m.mhat(j), m.mhat(j + 1)
        chain = tuple(cgd.value(1, b) for b in range(lo, hi + 1))
        classes.append(DualEquivClass(chain_tableau(chain)))
    return values, classes


def reduce_mod_m(diagram, m: IntervalFunction) -> "Decgd":
    """Reduction modulo m.  Accepts a Cgd, or a Decgd for composite reductions
    (each new step then groups whole steps of the old interval)."""
    if isinstance(diagram, Cgd):
        if sum(m.values) != diagram.k:
            raise ValueError(
                f"interval sums to {sum(m.values)}, expected the period {diagram.k}")
        fine = _unit_decgd(diagram)
    else:
        if sum(m.values) != diagram.k:
            raise ValueError(
                f"interval sums to {sum(m.values)}, expected the period {diagram.k}")
        fine = diagram
    k = m.period
    comp = IntervalFunction(tuple(
        fine.m.ms(m.mhat(i), m.mhat(i + 1)) for i in range(1, k + 1)))
    gamma, alpha, beta = {}, {}, {}
    for i in range(1, k + 1):
        for j in range(i, i + k + 1):
            gamma[(i, j)] = fine.value(*m.mbar(i, j))
        for j in range(i, i + k):
            alpha[(i, j)] = _path_class(fine, m, i, j, horizontal=True)
            beta[(i, j)] = _path_class(fine, m, i, j, horizontal=False)
    return Decgd(fine.frame, comp, gamma, alpha, beta)


def _unit_decgd(cgd: Cgd) -> Decgd:
    """View a cgd as a decgd with the constant interval 1 and single-box classes."""
    k = cgd.k
    gamma = dict(cgd.gamma)
    alpha, beta = {}, {}
    for i in range(1, k + 1):
        for j in range(i, i + k):
            a_chain = (cgd.value(i, j), cgd.value(i - 1, j))
            b_chain = (cgd.value(i, j), cgd.value(i, j + 1))
            alpha[(i, j)] = DualEquivClass(chain_tableau(a_chain))
            beta[(i, j)] = DualEquivClass(chain_tableau(b_chain))
    return Decgd(cgd.frame, IntervalFunction((1,) * k), gamma, alpha, beta)


def _stack_classes(parts: list[DualEquivClass]) -> DualEquivClass:
    """Concatenate representatives of consecutive classes into one class."""
    cells: dict[tuple[int, int], int] = {}
    offset = 0
    for part in parts:
        for cell, v in part.rep.entries().items():
            cells[cell] = v + offset
        offset += part.rep.ncells
    inner = parts[0].rep.inner
    outer = parts[-1].rep.outer
    return DualEquivClass(SkewTableau.from_cells(inner, outer, cells))


def _path_class(fine: Decgd, m: IntervalFunction, i: int, j: int,
                horizontal: bool) -> DualEquivClass:
    """Class of the composite path between reduced nodes."""
    if horizontal:
        lo, hi = m.mhat(i - 1), m.mhat(i)
        b = m.mhat(j)
        parts = [fine.alpha_class(a, b) for a in range(hi, lo, -1)]
    else:
        lo, hi = m.mhat(j), m.mhat(j + 1)
        a = m.mhat(i)
        parts = [fine.beta_class(a, b) for b in range(lo, hi)]
    return _stack_classes(parts)


def decgd_from_column(frame: RectangleFrame, m: IntervalFunction,
                      col_values: list, col_classes: list,
                      column_index: int = 1) -> Decgd:
    """Build the unique decgd with the given column (values plus vertical-edge
    classes) by propagating eastward through forced shuffles.

    ``col_values`` runs j = i0..i0+k, ``col_classes`` covers the k vertical
    edges of the column.  Closing the cylinder is checked.
    """
    k = m.period
    rect = frame.rect
    if len(col_values) != k + 1 or len(col_classes) != k:
        raise ValueError("column data has the wrong length")
    if col_values[0] != EMPTY or col_values[-1] != rect:
        raise ValueError("column must run from the empty shape to the rectangle")
    i0 = column_index
    values: dict[int, list] = {i0: list(col_values)}
    betas: dict[int, list] = {i0: list(col_classes)}
    alphas: dict[int, list] = {}
    for step in range(k):
        i = i0 - step          # known column
        vi, bi = values[i], betas[i]
        v_new: list = [None] * (k + 1)
        b_new: list = [None] * k
        a_cur: list = [None] * k   # alpha edges a_{i, j}, index j - i
        v_new[k] = rect
        # top alpha seed: shape rect\gamma_{i,i+k-1} is antinormal, class forced
        top_shape_inner = vi[k - 1]
        a_cur[k - 1] = DualEquivClass(chain_tableau(
            _any_chain(top_shape_inner, rect)))
        for t in range(k - 2, -1, -1):
            # square at height j = i + t between columns i and i-1
            south, east = shuffle(bi[t], a_cur[t + 1])
            a_cur[t] = south
            b_new[t + 1] = east
            v_new[t + 1] = south.outer
        v_new[0] = EMPTY
        b_new[0] = straight_class(v_new[1])
        values[i - 1] = v_new
        betas[i - 1] = b_new
        alphas[i] = a_cur
    if values[i0 - k] != values[i0] or betas[i0 - k] != betas[i0]:
        raise AssertionError("decgd propagation failed to close the cylinder")
    gamma, alpha, beta = {}, {}, {}
    for i_stored in range(i0 - k + 1, i0 + 1):
        for t, p in enumerate(values[i_stored]):
            keyn = _canonical(i_stored, i_stored + t, k)
            if gamma.get(keyn, p) != p:
                raise AssertionError("inconsistent node overlap")
            gamma[keyn] = p
        for t in range(k):
            beta[_canonical(i_stored, i_stored + t, k)] = betas[i_stored][t]
            alpha[_canonical(i_stored, i_stored + t, k)] = alphas[i_stored][t]
    return Decgd(frame, m, gamma, alpha, beta)


def _any_chain(inner: Partition, outer: Partition) -> tuple[Partition, ...]:
    """Some single-box chain from inner to outer (row by row, left to right)."""
    chain = [inner]
    cur = list(inner) + [0] * (len(outer) - len(inner))
    for i in range(1, len(outer) + 1):
        while cur[i - 1] < row(outer, i):
            cur[i - 1] += 1
            chain.append(normalize(cur))
    return tuple(chain)


def validate_decgd(dec: Decgd) -> None:
    """Check the decgd axioms, including the shuffle condition on full squares."""
    k, m = dec.k, dec.m
    rect = dec.frame.rect
    for i in range(1, k + 1):
        if dec.value(i, i) != EMPTY or dec.value(i, i + k) != rect:
            raise AssertionError("anchor condition failed")
        for j in range(i, i + k + 1):
            if size(dec.value(i, j)) != m.ms(i, j):
                raise AssertionError(f"|gamma_{i}{j}| != m_s({i},{j})")
        for j in range(i, i + k):
            a = dec.alpha_class(i, j)
            if (a.inner, a.outer) != (dec.value(i, j), dec.value(i - 1, j)):
                raise AssertionError(f"alpha shape mismatch at ({i},{j})")
            b = dec.beta_class(i, j)
            if (b.inner, b.outer) != (dec.value(i, j), dec.value(i, j + 1)):
                raise AssertionError(f"beta shape mismatch at ({i},{j})")
        for j in range(i, i + k - 1):
            south, east = shuffle(dec.beta_class(i, j), dec.alpha_class(i, j + 1))
            if south != dec.alpha_class(i, j) or east != dec.beta_class(i - 1, j):
                raise AssertionError(f"shuffle condition fails at square ({i},{j})")


@lru_cache(maxsize=None)
def _reduction_buckets(frame: RectangleFrame, mvals: tuple[int, ...], bound: int):
    """Group the frame's cgds by the coarse value profile of their reduction.

    Classes are extracted lazily by enumerate_decgds; this only reads values.
    """
    m = IntervalFunction(mvals)
    buckets: dict[tuple, list[Cgd]] = {}
    for cgd in enumerate_cgds(frame, bound):
        profile = tuple(cgd.value(*m.mbar(i, i + 1)) for i in range(1, m.period + 1))
        buckets.setdefault(profile, []).append(cgd)
    return buckets


def enumerate_decgds(frame: RectangleFrame, shape,
                     bound: int = DEFAULT_BOUND) -> tuple[Decgd, ...]:
    """All decgds of the given shape, via reduction of full cgds.

    The count equals the multi-factor Littlewood-Richardson number of the
    frame rectangle with respect to the shape.
    """
    shape = tuple(normalize(p) for p in shape)
    if any(not p for p in shape):
        raise ValueError("shape parts must be nonempty partitions")
    if sum(size(p) for p in shape) != frame.cells:
        raise ValueError(
            f"shape sizes sum to {sum(size(p) for p in shape)}, expected {frame.cells}")
    if frame.cells > bound:
        raise ValueError(
            f"frame has r(d-r) = {frame.cells} > bound {bound}; raise the bound explicitly")
    m = IntervalFunction(tuple(size(p) for p in shape))
    buckets = _reduction_buckets(frame, m.values, bound)
    seen = {}
    for cgd in buckets.get(shape, []):
        dec = reduce_mod_m(cgd, m)
        seen.setdefault(dec.key(), dec)
    return tuple(seen[key] for key in sorted(seen))


def decgd_to_syt(dec: Decgd) -> SkewTableau:
    """Read the standard tableau along the first column of a decgd of shape
    (box^n, mu-complement)."""
    n = dec.k - 1
    shape = dec.shape
    if any(shape[i] != (1,) for i in range(n)):
        raise ValueError("decgd shape is not (box^n, complement)")
    chain = tuple(dec.value(1, j) for j in range(1, n + 2))
    return chain_tableau(chain)


def syt_to_decgd(t: SkewTableau, frame: RectangleFrame) -> Decgd:
    """The decgd of shape (box^n, complement(shape(t))) whose first column
    reads t; inverse to decgd_to_syt."""
    if not t.straight or not t.is_standard():
        raise ValueError("need a straight standard tableau")
    n = t.ncells
    mu = t.outer
    if frame.cells <= n:
        raise ValueError("frame too small: the complement block would be empty")
    if not frame.fits(mu):
        raise ValueError(f"{mu} does not fit the frame")
    filler = _any_chain(mu, frame.rect)
    column = tableau_chain(t) + filler[1:]
    first = chain_tableau(column)
    cgd = generate_cgd(first, frame)
    m = IntervalFunction((1,) * n + (frame.cells - n,))
    return reduce_mod_m(cgd, m)
