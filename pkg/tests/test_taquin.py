import itertools

import pytest

from cactusgd.tableaux import (
    SkewTableau,
    addable_corners,
    contains,
    enumerate_skew_syt,
    enumerate_syt,
    partitions_of,
    removable_corners,
    row_reading_syt,
    straight_tableau,
    superstandard,
)
from cactusgd.taquin import (
    DualEquivClass,
    canonical_class,
    dual_equivalent,
    evacuation,
    jdt_slide,
    partial_evacuation,
    q_symbol_key,
    rectify,
    shuffle,
    transport,
    xi_ssyt,
    xi_word,
)
from cactusgd.words import crystal_f, enumerate_words, rsk, weight


def all_skew_shapes(max_outer, max_cells):
    for n in range(1, max_outer + 1):
        for outer in partitions_of(n):
            for k in range(0, n):
                for inner in partitions_of(k):
                    if contains(outer, inner) and 1 <= n - k <= max_cells:
                        yield outer, inner


def slide_signature(t):
    """Shape evolution under every inward slide sequence, run to straight
    shape.

    This is a sound and complete rendering of the slide-based definition:
    soundness because slides preserve dual equivalence, completeness because
    the trajectories of the largest-entry-first sequences already determine
    the east edge of every rectification growth rectangle, which pins the
    class.
    """
    sig = {}

    def rec(cur, seq):
        for cell in removable_corners(cur.inner):
            nxt = jdt_slide(cur, cell)
            key = seq + (cell,)
            sig[key] = nxt.shape
            rec(nxt, key)

    rec(t, ())
    return sig


def test_jdt_slide_examples():
    t = SkewTableau((1,), [(2,), (1,)])
    s = jdt_slide(t, (1, 1))
    assert s.inner == () and s.rows == ((1, 2),)
    with pytest.raises(ValueError):
        jdt_slide(straight_tableau([[1, 2]]), (1, 1))


def test_jdt_outward_then_inward_restores():
    for outer, inner in all_skew_shapes(6, 4):
        for t in enumerate_skew_syt(outer, inner):
            for cell in addable_corners(t.outer):
                out = jdt_slide(t, cell)
                back = jdt_slide(out, _new_inner_cell(t.inner, out.inner))
                assert back == t


def _new_inner_cell(old_inner, new_inner):
    from cactusgd.tableaux import skew_cells
    cells = skew_cells(new_inner, old_inner)
    assert len(cells) == 1
    return cells[0]


def test_rectify_examples():
    t = straight_tableau([[1, 2], [3]])
    assert rectify(t) == t
    skew = SkewTableau((1,), [(1,), (2,)])
    assert rectify(skew) == straight_tableau([[1], [2]])


def test_rectify_order_independent():
    for outer, inner in all_skew_shapes(6, 4):
        for t in enumerate_skew_syt(outer, inner):
            base = rectify(t)
            # follow a different slide policy: always the last corner
            cur = t
            while cur.inner:
                cur = jdt_slide(cur, removable_corners(cur.inner)[-1])
            assert cur == base


def test_rectification_of_rectangle_complement():
    # rectifying any standard filling of rect\mu gives the complement shape
    from cactusgd.tableaux import RectangleFrame, complement
    for (r, d) in ((2, 4), (2, 5), (3, 5)):
        fr = RectangleFrame(r, d)
        for n in range(0, fr.cells):
            for mu in partitions_of(n, max_rows=r, max_cols=fr.cols):
                sample = enumerate_skew_syt(fr.rect, mu)[:3]
                for t in sample:
                    assert rectify(t).outer == complement(mu, fr)


def test_evacuation_examples():
    assert evacuation(straight_tableau([[1]])) == straight_tableau([[1]])
    assert evacuation(straight_tableau([[1, 2], [3]])) == straight_tableau([[1, 3], [2]])
    one_row = straight_tableau([[1, 2, 3, 4]])
    assert evacuation(one_row) == one_row
    with pytest.raises(ValueError):
        evacuation(SkewTableau((1,), [(1,), (2,)]))


def test_evacuation_involution():
    for n in range(1, 9):
        for p in partitions_of(n):
            for t in enumerate_syt(p):
                assert evacuation(evacuation(t)) == t


def test_partial_evacuation():
    t = straight_tableau([[1, 2], [3]])
    assert partial_evacuation(t, 1) == t
    assert partial_evacuation(t, 2) == t
    assert partial_evacuation(t, 3) == straight_tableau([[1, 3], [2]])
    with pytest.raises(ValueError):
        partial_evacuation(t, 4)
    for p in partitions_of(5) + partitions_of(6):
        for t in enumerate_syt(p):
            for q in range(1, sum(p) + 1):
                assert partial_evacuation(partial_evacuation(t, q), q) == t


def test_xi_word_examples():
    assert xi_word("1", 2) == (2,)
    assert xi_word("11", 2) == (2, 2)
    for r in (2, 3):
        for n in range(0, 7 - r):
            for w in enumerate_words(n, r):
                v = xi_word(w, r)
                assert rsk(v).q == rsk(w).q
                assert xi_word(v, r) == w
                assert weight(v, r) == tuple(reversed(weight(w, r)))


def test_xi_ssyt():
    assert xi_ssyt(straight_tableau([[1]]), 2) == straight_tableau([[2]])
    # involution and weight reversal over all small semistandard tableaux
    for r in (2, 3):
        for n in range(1, 6):
            for p in partitions_of(n, max_rows=r):
                seen = set()
                for w in enumerate_words(n, r):
                    t = rsk(w).p
                    if t.outer != p or t in seen:
                        continue
                    seen.add(t)
                    tt = xi_ssyt(t, r)
                    assert tt.outer == p
                    assert xi_ssyt(tt, r) == t
    # on standard content xi agrees with evacuation
    for n in range(1, 6):
        for p in partitions_of(n):
            for t in enumerate_syt(p):
                assert xi_ssyt(t, n) == evacuation(t)


def test_xi_ssyt_superstandard_to_lowest():
    for r in (2, 3):
        for n in range(1, 6):
            for p in partitions_of(n, max_rows=r):
                low = xi_ssyt(superstandard(p), r)
                word = low.column_word()
                assert all(crystal_f(word, i, r) is None for i in range(1, r))


def test_dual_equivalent_basics():
    for p in partitions_of(4) + partitions_of(5):
        ts = enumerate_syt(p)
        for s, t in itertools.product(ts, ts):
            assert dual_equivalent(s, t)  # straight shapes: all equivalent
    with pytest.raises(ValueError):
        dual_equivalent(straight_tableau([[1]]), straight_tableau([[1, 2]]))


def test_dual_equivalence_matches_slide_oracle_small():
    # small version of the acceptance sweep: shapes with <= 4 cells
    for outer, inner in all_skew_shapes(6, 4):
        ts = enumerate_skew_syt(outer, inner)
        sigs = [slide_signature(t) for t in ts]
        for a in range(len(ts)):
            for b in range(a, len(ts)):
                assert dual_equivalent(ts[a], ts[b]) == (sigs[a] == sigs[b]), \
                    (outer, inner, ts[a].rows, ts[b].rows)


def test_local_replacement_preserves_dual_equivalence():
    # replacing the bottom layer by a dual equivalent one preserves the class
    for n in range(2, 7):
        for outer in partitions_of(n):
            for k in range(1, n):
                for mid in partitions_of(k):
                    if not contains(outer, mid):
                        continue
                    bottoms = enumerate_skew_syt(mid, ())
                    tops = enumerate_skew_syt(outer, mid)
                    for top in tops:
                        shifted = top.map_entries(lambda v: v + k)
                        for b1, b2 in itertools.combinations(bottoms, 2):
                            if not dual_equivalent(b1, b2):
                                continue
                            u1 = _union(b1, shifted, outer)
                            u2 = _union(b2, shifted, outer)
                            assert dual_equivalent(u1, u2)


def _union(bottom, top, outer):
    cells = dict(bottom.entries())
    cells.update(top.entries())
    return SkewTableau.from_cells((), outer, cells)


def test_canonical_class():
    for outer, inner in all_skew_shapes(6, 4):
        ts = enumerate_skew_syt(outer, inner)
        for t in ts:
            c = canonical_class(t)
            assert dual_equivalent(c.rep, t)
            assert rectify(c.rep) == row_reading_syt(rectify(t).outer)
        for a, b in itertools.combinations(ts, 2):
            assert (canonical_class(a) == canonical_class(b)) == dual_equivalent(a, b)


def test_transport_unique():
    # transport hits the unique class member with the requested rectification
    for outer, inner in all_skew_shapes(5, 3):
        for t in enumerate_skew_syt(outer, inner):
            for target in enumerate_syt(rectify(t).outer):
                s = transport(t, target)
                assert s.shape == t.shape
                assert dual_equivalent(s, t)
                assert rectify(s) == target


def test_shuffle_examples():
    d1 = DualEquivClass(straight_tableau([[1]]))
    d2 = DualEquivClass(SkewTableau((1,), [(1,)]))
    assert shuffle(d1, d2) == (d1, d2)
    d2v = DualEquivClass(SkewTableau((1,), [(), (1,)]))
    assert shuffle(d1, d2v) == (d1, d2v)
    d1b = DualEquivClass(SkewTableau((2,), [(), (1,)]))
    d2b = DualEquivClass(SkewTableau((2, 1), [(1,), ()]))
    e1, e2 = shuffle(d1b, d2b)
    assert (e1.inner, e1.outer) == ((2,), (3,))
    assert (e2.inner, e2.outer) == ((3,), (3, 1))
    with pytest.raises(ValueError):
        shuffle(d2b, d1b)


def test_shuffle_representative_independent():
    from collections import defaultdict
    for tot in range(2, 7):
        for split in range(1, tot):
            for mid in partitions_of(split):
                for outer in partitions_of(tot):
                    if not contains(outer, mid):
                        continue
                    groups1 = defaultdict(list)
                    for t in enumerate_skew_syt(mid, ()):
                        groups1[q_symbol_key(t)].append(t)
                    groups2 = defaultdict(list)
                    for t in enumerate_skew_syt(outer, mid):
                        groups2[q_symbol_key(t)].append(t)
                    for g1 in groups1.values():
                        for g2 in groups2.values():
                            outs = {
                                (e1.key(), e2.key())
                                for a in g1 for b in g2
                                for e1, e2 in [shuffle(DualEquivClass(a),
                                                       DualEquivClass(b))]
                            }
                            assert len(outs) == 1
