"""Jeu de taquin, rectification, evacuation, the Schutzenberger involution on
words and semistandard tableaux, dual equivalence classes and their shuffle.

Dual equivalence of standard skew tableaux is decided through the Q-symbols of
their column reading words (bottom-to-top in each column, left to right); the
slide-sequence definition is kept as a test oracle only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .local_rules import (
    Chain,
    fill_rectangle_grid,
    fill_rectangle_nw,
    south_east_edges,
    west_north_edges,
)
from .tableaux import (
    Partition,
    SkewTableau,
    add_cell,
    addable_corners,
    normalize,
    removable_corners,
    remove_cell,
    row_reading_syt,
)
from .words import RskPair, parse_word, rsk, rsk_inverse, star


def jdt_slide(t: SkewTableau, corner: tuple[int, int]) -> SkewTableau:
    """One complete slide.  ``corner`` is either a removable corner of the
    inner shape (inward slide) or an addable corner of the outer shape
    (outward slide)."""
    outer, inner = t.outer, t.inner
    if corner in removable_corners(inner):
        return _slide_inward(t, corner)
    if corner in addable_corners(outer):
        return _slide_outward(t, corner)
    raise ValueError(f"cell {corner} is not a slidable corner of {outer}\\{inner}")


def _slide_inward(t: SkewTableau, corner) -> SkewTableau:
    ent = t.entries()
    hole = corner
    while True:
        i, j = hole
        east = ent.get((i, j + 1))
        south = ent.get((i + 1, j))
        if east is None and south is None:
            break
        if east is None or (south is not None and south <= east):
            ent[hole] = south
            hole = (i + 1, j)
        else:
            ent[hole] = east
            hole = (i, j + 1)
        del ent[hole]
    new_inner = remove_cell(t.inner, corner)
    new_outer = remove_cell(t.outer, hole)
    return SkewTableau.from_cells(new_inner, new_outer, ent)


def _slide_outward(t: SkewTableau, corner) -> SkewTableau:
    ent = t.entries()
    hole = corner
    while True:
        i, j = hole
        west = ent.get((i, j - 1))
        north = ent.get((i - 1, j))
        if west is None and north is None:
            break
        if west is None or (north is not None and north >= west):
            ent[hole] = north
            hole = (i - 1, j)
        else:
            ent[hole] = west
            hole = (i, j - 1)
        del ent[hole]
    new_inner = add_cell(t.inner, hole)
    new_outer = add_cell(t.outer, corner)
    return SkewTableau.from_cells(new_inner, new_outer, ent)


def rectify(t: SkewTableau) -> SkewTableau:
    """Slide to straight shape; the result is slide-order independent."""
    while t.inner:
        t = _slide_inward(t, removable_corners(t.inner)[0])
    return t


def evacuation(t: SkewTableau) -> SkewTableau:
    """Schutzenberger involution of a straight standard tableau by the
    delete-slide-record algorithm: the cell vacated in step k receives n+1-k."""
    if not t.straight or not t.is_standard():
        raise ValueError("evacuation is defined for straight standard tableaux")
    n = t.ncells
    ent = t.entries()
    out: dict[tuple[int, int], int] = {}
    for k in range(1, n + 1):
        low = min(ent, key=ent.get)
        del ent[low]
        hole = low
        while True:
            i, j = hole
            east = ent.get((i, j + 1))
            south = ent.get((i + 1, j))
            if east is None and south is None:
                break
            if east is None or (south is not None and south <= east):
                ent[hole] = south
                hole = (i + 1, j)
            else:
                ent[hole] = east
                hole = (i, j + 1)
            del ent[hole]
        out[hole] = n + 1 - k
    return SkewTableau.from_cells((), t.outer, out)


def partial_evacuation(t: SkewTableau, q: int) -> SkewTableau:
    """Evacuate the entries 1..q in place, leaving q+1..n untouched."""
    if not t.straight or not t.is_standard():
        raise ValueError("partial evacuation needs a straight standard tableau")
    if not 1 <= q <= t.ncells:
        raise ValueError(f"order {q} out of range 1..{t.ncells}")
    sub = evacuation(t.restrict(1, q))
    ent = {c: v for c, v in t.entries().items() if v > q}
    ent.update(sub.entries())
    return SkewTableau.from_cells((), t.outer, ent)


def xi_word(w, r: int) -> tuple[int, ...]:
    """Schutzenberger involution on a word: same Q-symbol, P-symbol flipped."""
    w = parse_word(w)
    if not w:
        return ()
    p, q = rsk(w)
    return rsk_inverse(xi_ssyt(p, r), q)


def xi_ssyt(p: SkewTableau, r: int) -> SkewTableau:
    """Schutzenberger involution on a straight semistandard tableau, computed
    as the P-symbol of the starred reading word."""
    if not p.straight or not p.is_semistandard():
        raise ValueError("xi is defined for straight semistandard tableaux")
    if p.ncells == 0:
        return p
    return rsk(star(p.column_word(), r)).p


def q_symbol_key(t: SkewTableau):
    """Canonical invariant of the dual equivalence class of a standard tableau."""
    return rsk(t.column_word()).q.rows


def dual_equivalent(s: SkewTableau, t: SkewTableau) -> bool:
    """Same-shape standard tableaux are dual equivalent iff the Q-symbols of
    their reading words agree."""
    if s.shape != t.shape:
        raise ValueError(f"shapes differ: {s.shape} vs {t.shape}")
    if not s.is_standard() or not t.is_standard():
        raise ValueError("dual equivalence compares standard tableaux")
    return q_symbol_key(s) == q_symbol_key(t)


@dataclass(frozen=True)
class DualEquivClass:
    """A dual equivalence class, stored through one representative."""

    rep: SkewTableau

    def __post_init__(self):
        if not self.rep.is_standard():
            raise ValueError("class representative must be standard")

    @property
    def inner(self) -> Partition:
        return self.rep.inner

    @property
    def outer(self) -> Partition:
        return self.rep.outer

    @property
    def ncells(self) -> int:
        return self.rep.ncells

    def key(self):
        return (self.inner, self.outer, q_symbol_key(self.rep))

    def __eq__(self, other):
        return isinstance(other, DualEquivClass) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def contains_tableau(self, t: SkewTableau) -> bool:
        return t.shape == self.rep.shape and dual_equivalent(t, self.rep)

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "outer": list(self.outer),
                "rep": self.rep.to_json()}


def tableau_chain(t: SkewTableau) -> Chain:
    return t.to_chain()


def chain_tableau(chain: Chain) -> SkewTableau:
    return SkewTableau.from_chain(chain)


def shuffle(d1: DualEquivClass, d2: DualEquivClass) -> tuple[DualEquivClass, DualEquivClass]:
    """Shuffle a pair of classes whose shapes stack: west = d1, north = d2 in a
    rectangle; the south and east edges give the output pair."""
    if d2.inner != d1.outer:
        raise ValueError(f"shapes do not stack: {d1.outer} vs {d2.inner}")
    grid = fill_rectangle_grid(tableau_chain(d1.rep), tableau_chain(d2.rep))
    south, east = south_east_edges(grid)
    return (DualEquivClass(chain_tableau(south)), DualEquivClass(chain_tableau(east)))


def transport(t: SkewTableau, target: SkewTableau) -> SkewTableau:
    """The unique tableau dual equivalent to t whose rectification is the
    straight standard tableau ``target``.

    Shuffle t past a straight tableau of its inner shape, replace the straight
    south edge by ``target`` and refill north-westward.
    """
    if not t.is_standard():
        raise ValueError("transport works on standard tableaux")
    if not target.straight or not target.is_standard():
        raise ValueError("transport target must be straight standard")
    if not t.inner:
        if t.outer != target.outer:
            raise ValueError("target shape does not match the rectification")
        return target
    west = tableau_chain(row_reading_syt(t.inner))
    grid = fill_rectangle_grid(west, tableau_chain(t))
    south, east = south_east_edges(grid)
    if south[-1] != target.outer:
        raise ValueError("target shape does not match the rectification")
    regrid = fill_rectangle_nw(tableau_chain(target), east)
    _west, north = west_north_edges(regrid)
    if north[0] != t.inner:
        raise AssertionError("transport lost the inner shape")  # must never fire
    return chain_tableau(north)


def canonical_class(t: SkewTableau) -> DualEquivClass:
    """The class of t with the distinguished representative: the unique member
    slide equivalent to the row-reading standard tableau of Rect(t)'s shape."""
    target = row_reading_syt(rectify(t).outer)
    return DualEquivClass(transport(t, target))


def straight_class(shape: Partition) -> DualEquivClass:
    """The unique class on a straight shape."""
    return DualEquivClass(row_reading_syt(normalize(shape)))
