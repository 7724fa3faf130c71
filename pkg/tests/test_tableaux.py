import itertools
from math import factorial

import pytest

from cactusgd.tableaux import (
    RectangleFrame,
    SkewTableau,
    addable_corners,
    complement,
    contains,
    enumerate_skew_syt,
    enumerate_syt,
    normalize,
    partitions_of,
    removable_corners,
    row_reading_syt,
    straight_tableau,
    syt_count,
)


def brute_syt_count(shape):
    """Independent oracle: count standard fillings by brute placement."""
    cells = [(i + 1, j + 1) for i, ln in enumerate(shape) for j in range(ln)]
    n = len(cells)
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        fill = dict(zip(cells, perm))
        ok = True
        for (i, j), v in fill.items():
            if (i, j + 1) in fill and fill[(i, j + 1)] <= v:
                ok = False
                break
            if (i + 1, j) in fill and fill[(i + 1, j)] <= v:
                ok = False
                break
        if ok:
            count += 1
    return count


def test_contains_examples():
    assert contains((3, 3), (2, 1))
    assert not contains((), (1,))
    assert contains((2, 1), (1, 1))


def test_normalize_rejects_bad_rows():
    with pytest.raises(ValueError):
        normalize((1, 2))
    assert normalize((3, 2, 0, 0)) == (3, 2)


def test_complement_examples():
    fr = RectangleFrame(2, 5)
    assert complement((), fr) == (3, 3)
    assert complement((3, 3), fr) == ()
    assert complement((2, 1), fr) == (2, 1)
    with pytest.raises(ValueError):
        complement((4,), fr)


def test_complement_involution_and_size():
    for r in range(1, 5):
        for d in range(r + 1, 9):
            fr = RectangleFrame(r, d)
            for n in range(0, fr.cells + 1):
                for p in partitions_of(n, max_rows=r, max_cols=fr.cols):
                    pc = complement(p, fr)
                    assert complement(pc, fr) == p
                    assert sum(p) + sum(pc) == fr.cells


def test_syt_count_examples():
    assert syt_count((1,)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 3)) == 5
    assert syt_count((3, 3)) == factorial(6) // (4 * 3 * 2 * 3 * 2 * 1)


def test_syt_count_against_enumeration():
    for n in range(1, 9):
        for p in partitions_of(n):
            if n <= 6:
                assert syt_count(p) == brute_syt_count(p)
            assert syt_count(p) == len(enumerate_syt(p))


def test_restrict_examples():
    t = straight_tableau([[1, 2], [3]])
    assert t.restrict(1, 2) == straight_tableau([[1, 2]])
    assert t.restrict(1, 3) == t
    r = straight_tableau([[1, 3], [2]]).restrict(2, 3)
    assert r.inner == (1,) and r.entries() == {(1, 2): 3, (2, 1): 2}


def test_restrict_composes():
    for p in partitions_of(5) + partitions_of(6):
        for t in enumerate_syt(p):
            n = t.ncells
            for k in range(1, n + 1):
                for j in range(1, k + 1):
                    assert t.restrict(1, k).restrict(1, j) == t.restrict(1, j)


def test_corners():
    assert addable_corners((2, 1)) == [(1, 3), (2, 2), (3, 1)]
    assert removable_corners((2, 1)) == [(1, 2), (2, 1)]
    assert addable_corners(()) == [(1, 1)]


def test_chain_roundtrip():
    for p in partitions_of(5):
        for t in enumerate_syt(p):
            assert SkewTableau.from_chain(t.to_chain()) == t
    for t in enumerate_skew_syt((3, 2), (1, 1)):
        assert SkewTableau.from_chain(t.to_chain()) == t


def test_standard_and_semistandard_checks():
    assert straight_tableau([[1, 2], [3]]).is_standard()
    assert not straight_tableau([[1, 3], [3]]).is_standard()
    assert straight_tableau([[1, 1], [2]]).is_semistandard()
    assert not straight_tableau([[1, 1], [1]]).is_semistandard()


def test_row_reading_tableau():
    t = row_reading_syt((3, 2))
    assert t.rows == ((1, 2, 3), (4, 5))
    assert t.is_standard()


def test_json_roundtrip():
    t = SkewTableau((1,), [(2,), (1,)])
    assert SkewTableau.from_json(t.to_json()) == t


def test_frame_validation():
    with pytest.raises(ValueError):
        RectangleFrame(3, 3)
    fr = RectangleFrame(2, 5)
    assert fr.rect == (3, 3) and fr.cells == 6
