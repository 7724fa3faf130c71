"""Local growth rules on chains of partitions.

A chain is a tuple of partitions each covering the previous by one box; a
standard skew tableau and a chain carry the same data.  Rectangles are filled
square by square with the deterministic mixed-corner completion: given the
bottom corner, the top corner and one intermediate of a unit square, the
fourth corner is forced.
"""

from __future__ import annotations

from .tableaux import (
    Partition,
    add_cell,
    added_cell,
    addable_corners,
    contains,
    normalize,
    size,
)

Chain = tuple[Partition, ...]


def is_chain(chain) -> bool:
    try:
        for a, b in zip(chain, chain[1:]):
            added_cell(a, b)
    except ValueError:
        return False
    return True


def complete_corner(mu: Partition, known: Partition, lam: Partition,
                    mode: str = "SE") -> Partition:
    """The fourth corner of a growth square with bottom mu, top lam and one
    known intermediate.

    Two non-adjacent added boxes force the other intermediate; a domino forces
    equality.  ``mode`` records which corner is being produced (SE or NW) and
    does not change the arithmetic.
    """
    if mode not in ("SE", "NW"):
        raise ValueError(f"mode must be SE or NW, not {mode!r}")
    mu, known, lam = normalize(mu), normalize(known), normalize(lam)
    if size(lam) != size(mu) + 2 or not contains(lam, mu):
        raise ValueError(f"malformed square: {mu} .. {lam}")
    mids = [add_cell(mu, c) for c in addable_corners(mu) if contains(lam, add_cell(mu, c))]
    if known not in mids:
        raise ValueError(f"malformed square: {known} not between {mu} and {lam}")
    if len(mids) == 1:
        return known  # the two boxes form a domino
    if len(mids) != 2:
        raise ValueError(f"malformed square: {mu} .. {lam}")
    return mids[0] if mids[1] == known else mids[1]


def fill_rectangle_grid(west: Chain, north: Chain) -> list[list[Partition]]:
    """Fill the rectangle with the given west (bottom-to-top) and north
    (west-to-east) edges.

    Returns grid[a][b] for a = 0..W eastward, b = 0..H northward, so that
    grid[0] is the west chain and [grid[a][H] for a] the north chain.
    """
    west = tuple(normalize(p) for p in west)
    north = tuple(normalize(p) for p in north)
    if not west or not north or west[-1] != north[0]:
        raise ValueError("west top and north left ends must agree")
    if not is_chain(west) or not is_chain(north):
        raise ValueError("edges must be single-box chains")
    H = len(west) - 1
    W = len(north) - 1
    grid: list[list[Partition]] = [list(west)]
    for a in range(1, W + 1):
        col: list[Partition] = [None] * (H + 1)  # type: ignore[list-item]
        col[H] = north[a]
        for b in range(H - 1, -1, -1):
            col[b] = complete_corner(grid[a - 1][b], grid[a - 1][b + 1], col[b + 1], "SE")
        grid.append(col)
    return grid


def fill_rectangle_nw(south: Chain, east: Chain) -> list[list[Partition]]:
    """Fill the rectangle north-westward from its south and east edges."""
    south = tuple(normalize(p) for p in south)
    east = tuple(normalize(p) for p in east)
    if not south or not east or south[-1] != east[0]:
        raise ValueError("south east end and east bottom must agree")
    if not is_chain(south) or not is_chain(east):
        raise ValueError("edges must be single-box chains")
    W = len(south) - 1
    H = len(east) - 1
    grid: list[list[Partition]] = [[None] * (H + 1) for _ in range(W + 1)]  # type: ignore[list-item]
    for a in range(W + 1):
        grid[a][0] = south[a]
    for b in range(H + 1):
        grid[W][b] = east[b]
    for a in range(W - 1, -1, -1):
        for b in range(1, H + 1):
            grid[a][b] = complete_corner(grid[a][b - 1], grid[a + 1][b - 1],
                                         grid[a + 1][b], "NW")
    return grid


def south_east_edges(grid: list[list[Partition]]) -> tuple[Chain, Chain]:
    south = tuple(col[0] for col in grid)
    east = tuple(grid[-1])
    return south, east


def west_north_edges(grid: list[list[Partition]]) -> tuple[Chain, Chain]:
    west = tuple(grid[0])
    north = tuple(col[-1] for col in grid)
    return west, north
