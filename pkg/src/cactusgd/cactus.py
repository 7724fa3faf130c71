"""The cactus group and its three realizations: on tensor words through the
crystal commutor, on standard tableaux through partial evacuations, and on
decgds through triangle flips.  Also the block embeddings that intertwine the
general shape with the fundamental all-boxes case, and the equivariance
checker built on them.

A cactus word lists generators left to right as a group element, so it acts by
applying the rightmost generator first.  The generator s_pq of J_n acts on a
decgd of a (k = n+1)-part shape by flipping the lattice triangle on the
interval [p, q+1]; the last part stays pinned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .growth import Decgd, IntervalFunction, decgd_from_column, reduce_mod_m, syt_to_decgd
from .tableaux import (
    Partition,
    RectangleFrame,
    SkewTableau,
    complement,
    normalize,
    row_reading_syt,
    size,
)
from .taquin import (
    DualEquivClass,
    partial_evacuation,
    rectify,
    transport,
    xi_word,
)
from .words import (
    Word,
    enumerate_singular,
    is_highest_weight,
    lr_coefficient,
    parse_word,
    rsk,
    rsk_inverse,
    weight,
)


@dataclass(frozen=True)
class CactusWord:
    """A product of generators s_pq of J_n, listed left to right."""

    n: int
    gens: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (p, q) in self.gens:
            if not 1 <= p < q <= self.n:
                raise ValueError(f"generator ({p},{q}) out of range for J_{self.n}")

    def __mul__(self, other: "CactusWord") -> "CactusWord":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return CactusWord(self.n, self.gens + other.gens)


def interval_reversal(p: int, q: int, n: int) -> tuple[int, ...]:
    """The permutation reversing [p, q], as the tuple of images of 1..n."""
    return tuple(p + q - i if p <= i <= q else i for i in range(1, n + 1))


def image_permutation(w: CactusWord) -> tuple[int, ...]:
    """Image of the word in S_n, as old position -> new position."""
    def pi(x: int) -> int:
        for (p, q) in reversed(w.gens):
            if p <= x <= q:
                x = p + q - x
        return x
    return tuple(pi(i) for i in range(1, w.n + 1))


def permute_shape(shape, perm: tuple[int, ...]):
    """Relabel a sequence by moving entry i to position perm[i-1]."""
    out = [None] * len(shape)
    for i, lam in enumerate(shape):
        out[perm[i] - 1] = lam
    return tuple(out)


def reduce_to_s1q(p: int, q: int, n: int) -> CactusWord:
    """Express s_pq through the generators s_1*: s_pq = s_1q s_1(q-p+1) s_1q."""
    if not 1 <= p < q <= n:
        raise ValueError(f"generator ({p},{q}) out of range for J_{n}")
    if p == 1:
        return CactusWord(n, ((1, q),))
    return CactusWord(n, ((1, q), (1, q - p + 1), (1, q)))


def cactus_relations(n: int):
    """Relation instances (lhs, rhs) as generator lists, covering
    involutivity, disjoint commutation and the nesting relation."""
    gens = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    rels = []
    for g in gens:
        rels.append(("i", [g, g], []))
    for g1, g2 in itertools.product(gens, repeat=2):
        (p, q), (k, l) = g1, g2
        if q < k or l < p:
            rels.append(("ii", [g1, g2], [g2, g1]))
        elif p <= k and l <= q:
            u, v = p + q - l, p + q - k
            rels.append(("iii", [g1, g2], [(u, v), g1]))
    return rels


# ---------------------------------------------------------------------------
# tensor realization


def _act_gen_on_words(factors: list[Word], p: int, q: int, r: int) -> list[Word]:
    segment = [xi_word(factors[l], r) for l in range(q - 1, p - 2, -1)]
    flat = tuple(x for w in segment for x in w)
    v = xi_word(flat, r)
    sizes = [len(factors[l]) for l in range(q - 1, p - 2, -1)]
    blocks, pos = [], 0
    for s in sizes:
        blocks.append(v[pos:pos + s])
        pos += s
    return factors[:p - 1] + blocks + factors[q:]


def act_on_tensor(w: CactusWord, factors, r: int) -> list[Word]:
    """Act on a tensor element given as a list of factor words."""
    factors = [parse_word(f) for f in factors]
    if w.n != len(factors):
        raise ValueError(f"word in J_{w.n} cannot act on {len(factors)} factors")
    for (p, q) in reversed(w.gens):
        factors = _act_gen_on_words(factors, p, q, r)
    return factors


def act_on_word(w: CactusWord, word, r: int) -> Word:
    """Fundamental case: every factor a single letter."""
    word = parse_word(word)
    out = act_on_tensor(w, [(x,) for x in word], r)
    return tuple(x for f in out for x in f)


def act_on_factor_tableaux(w: CactusWord, factors, r: int) -> tuple[SkewTableau, ...]:
    """Act on a tensor element given as a tuple of P-symbols."""
    rows_words = [rsk_inverse(b, row_reading_syt(b.outer)) for b in factors]
    moved = act_on_tensor(w, rows_words, r)
    return tuple(rsk(f).p for f in moved)


# ---------------------------------------------------------------------------
# standard tableau realization


def act_on_syt(w: CactusWord, t: SkewTableau) -> SkewTableau:
    """Berenstein-Kirillov action: s_1q is the partial evacuation of order q."""
    if w.n != t.ncells:
        raise ValueError(f"word in J_{w.n} cannot act on a {t.ncells}-cell tableau")
    for (p, q) in reversed(w.gens):
        if p == 1:
            t = partial_evacuation(t, q)
        else:
            t = act_on_syt(reduce_to_s1q(p, q, w.n), t)
    return t


# ---------------------------------------------------------------------------
# decgd realization


def flip_triangle(dec: Decgd, a: int, b: int) -> Decgd:
    """Flip the lattice triangle {a <= i <= j <= b} of a decgd about its
    antidiagonal, transporting edge classes by the endpoint map, and rebuild
    the rest by forced propagation."""
    k = dec.k
    if not 1 <= a <= b <= a + k:
        raise ValueError(f"invalid triangle interval [{a}, {b}] for period {k}")
    if b - a > k:
        raise ValueError("triangle wider than the cylinder")
    col_values = []
    col_classes = []
    for j in range(a, a + k + 1):
        if j <= b:
            col_values.append(dec.value(a + b - j, b))
        else:
            col_values.append(dec.value(a, j))
    for j in range(a, a + k):
        if j < b:
            col_classes.append(dec.alpha_class(a + b - j, b))
        else:
            col_classes.append(dec.beta_class(a, j))
    return decgd_from_column(dec.frame, dec.m, col_values, col_classes, column_index=a)


def act_on_decgd_gen(p: int, q: int, dec: Decgd) -> Decgd:
    """One generator s_pq of J_{k-1} on a k-part decgd: flip [p, q+1]."""
    n = dec.k - 1
    if not 1 <= p < q <= n:
        raise ValueError(f"generator ({p},{q}) out of range for J_{n}")
    return flip_triangle(dec, p, q + 1)


def act_on_decgd(w: CactusWord, dec: Decgd) -> Decgd:
    if w.n != dec.k - 1:
        raise ValueError(f"word in J_{w.n} cannot act on a {dec.k}-part decgd")
    for (p, q) in reversed(w.gens):
        dec = act_on_decgd_gen(p, q, dec)
    return dec


# ---------------------------------------------------------------------------
# block embeddings


def standard_tuple(shape) -> tuple[SkewTableau, ...]:
    """Default recording tuple: the row-reading standard tableau per factor."""
    return tuple(row_reading_syt(normalize(lam)) for lam in shape)


def iota_embed(recording, factors, r: int) -> Word:
    """Embed a singular tensor element as the word whose i-th block has
    P-symbol factors[i] and Q-symbol recording[i]."""
    if len(recording) != len(factors):
        raise ValueError("recording tuple and factors differ in length")
    out = []
    for b, t in zip(factors, recording):
        if b.outer != t.outer:
            raise ValueError(f"factor shape {b.outer} does not match recording {t.outer}")
        out.extend(rsk_inverse(b, t))
    word = tuple(out)
    if not is_highest_weight(word, r):
        raise ValueError("tensor element is not singular")
    return word


def blocks_of(word: Word, sizes) -> list[Word]:
    out, pos = [], 0
    for s in sizes:
        out.append(word[pos:pos + s])
        pos += s
    if pos != len(word):
        raise ValueError("block sizes do not exhaust the word")
    return out


def block_q_symbols(word: Word, sizes) -> tuple[SkewTableau, ...]:
    return tuple(rsk(b).q for b in blocks_of(word, sizes))


def jmath_embed(recording, dec: Decgd) -> Decgd:
    """Embed a decgd of shape (lambda_1..lambda_n, tail) into the all-boxes
    shape by lifting each first-column class to the unique representative
    slide equivalent to the matching recording tableau."""
    k = dec.k
    n = k - 1
    shape = dec.shape
    if len(recording) != n:
        raise ValueError("recording tuple must cover all parts but the last")
    fine_values: list[Partition] = [dec.value(1, 1)]
    fine_classes: list[DualEquivClass] = []
    for j in range(1, n + 1):
        cls = dec.beta_class(1, j)
        target = recording[j - 1]
        if target.outer != shape[j - 1]:
            raise ValueError(
                f"recording tableau shape {target.outer} != part {shape[j - 1]}")
        lift = transport(cls.rep, target)
        chain = lift.to_chain()
        for t in range(1, len(chain)):
            fine_values.append(chain[t])
            fine_classes.append(DualEquivClass(
                SkewTableau.from_chain(chain[t - 1:t + 1])))
    fine_values.append(dec.value(1, n + 1 + 1))
    fine_classes.append(dec.beta_class(1, n + 1))
    ntilde = sum(size(p) for p in shape[:n])
    m = IntervalFunction((1,) * ntilde + (size(shape[n]),))
    return decgd_from_column(dec.frame, m, fine_values, fine_classes)


def bar_s1q(q: int, shape) -> CactusWord:
    """The block reversal in J_ntilde matching s_1q on n blocks of the given
    sizes: one big flip of the first q blocks, then per-block order fixes."""
    sizes = [size(normalize(lam)) for lam in shape]
    n = len(sizes)
    if not 2 <= q <= n:
        raise ValueError(f"need 2 <= q <= {n}")
    ntilde = sum(sizes)
    big = (1, sum(sizes[:q]))
    gens = []
    pos = 0
    for i in range(q, 0, -1):  # flipped arrangement holds blocks q, q-1, .., 1
        if sizes[i - 1] >= 2:
            gens.append((pos + 1, pos + sizes[i - 1]))
        pos += sizes[i - 1]
    gens.append(big)
    return CactusWord(ntilde, tuple(gens))


# ---------------------------------------------------------------------------
# orbits


def orbits_of(elements, generator_images: dict):
    """Connected components of involutive generator moves.

    ``generator_images`` maps a generator name to the index permutation it
    induces on ``elements``.  Returns sorted orbits of indices.
    """
    n = len(elements)
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for img in generator_images.values():
                y = img[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        orbits.append(sorted(comp))
    return sorted(orbits)


def generator_images(elements, act_gen, qs):
    """Index permutation of each generator s_1q on a fixed element list."""
    index = {e: i for i, e in enumerate(elements)}
    images = {}
    for q in qs:
        images[f"s_1{q}" if q < 10 else f"s_1,{q}"] = tuple(
            index[act_gen(e, q)] for e in elements)
    return images


# ---------------------------------------------------------------------------
# equivariance


def singular_tensor_elements(shape, mu, r: int):
    """B(shape)^sing_mu as factor tuples, realized inside the word crystal."""
    shape = tuple(normalize(p) for p in shape)
    sizes = tuple(size(p) for p in shape)
    ntilde = sum(sizes)
    recording = standard_tuple(shape)
    mu_full = tuple(mu) + (0,) * (r - len(mu))
    out = []
    for w in enumerate_singular(ntilde, r, mu_full):
        ok = True
        for b, t in zip(blocks_of(w, sizes), recording):
            pair = rsk(b)
            if pair.q != t:
                ok = False
                break
        if ok:
            out.append(tuple(rsk(b).p for b in blocks_of(w, sizes)))
    return out


def minimal_frame(shape, mu) -> RectangleFrame:
    """Smallest frame fitting every part and mu with a nonempty complement."""
    shape = tuple(normalize(p) for p in shape)
    mu = normalize(mu)
    rows = max([len(mu)] + [len(p) for p in shape])
    cols = max([mu[0] if mu else 1] + [p[0] for p in shape if p])
    if rows * cols == size(mu):
        cols += 1
    return RectangleFrame(rows, rows + cols)


def check_equivariance(frame: RectangleFrame, shape, mu,
                       bound: int | None = None) -> dict:
    """Verify that the block embeddings intertwine every generator s_1q and
    that the composite bijection onto decgds commutes with them.

    Returns a report dict; ``report["passed"]`` summarises it.
    """
    from .growth import enumerate_decgds

    shape = tuple(normalize(p) for p in shape)
    mu = normalize(mu)
    n = len(shape)
    ntilde = sum(size(p) for p in shape)
    if size(mu) != ntilde:
        raise ValueError("mu must have the same size as the shape total")
    muc = complement(mu, frame)
    if not muc:
        raise ValueError("complement of mu in the frame is empty; enlarge the frame")
    if bound is None:
        bound = max(frame.cells, 8)
    r = frame.r
    full_shape = shape + (muc,)
    decgds = enumerate_decgds(frame, full_shape, bound)
    elements = singular_tensor_elements(shape, mu, r)
    lr = lr_coefficient(frame.rect, full_shape)
    report = {
        "frame": [frame.r, frame.d],
        "shape": [list(p) for p in shape],
        "mu": list(mu),
        "singular_count": len(elements),
        "decgd_count": len(decgds),
        "lr_coefficient": lr,
        "failures": [],
        "cases": 0,
    }

    def fail(kind, detail):
        report["failures"].append({"kind": kind, "detail": detail})

    if not (len(elements) == len(decgds) == lr):
        fail("counting", f"singular={len(elements)} decgds={len(decgds)} lr={lr}")

    recording = standard_tuple(shape)

    def phi(recording_tuple, factors):
        word = iota_embed(recording_tuple, factors, r)
        fine = syt_to_decgd(rsk(word).q, frame)
        regroup = IntervalFunction(tuple(size(b.outer) for b in factors) + (1,))
        return reduce_mod_m(fine, regroup)

    images = set()
    for factors in elements:
        dec = phi(recording, factors)
        if dec.shape != full_shape:
            fail("composite-shape", f"{[list(p) for p in dec.shape]}")
            continue
        images.add(dec.key())
        report["cases"] += 1
    if images != {d.key() for d in decgds}:
        fail("bijection", "composite map is not onto the decgd set")
    if len(images) != len(elements):
        fail("bijection", "composite map is not injective")

    for q in range(2, n + 1):
        g = CactusWord(n, ((1, q),))
        perm = interval_reversal(1, q, n)
        rec_moved = permute_shape(recording, perm)
        bar = bar_s1q(q, shape)
        for factors in elements:
            report["cases"] += 1
            moved = act_on_factor_tableaux(g, factors, r)
            left = iota_embed(rec_moved, moved, r)
            right = act_on_word(bar, iota_embed(recording, factors, r), r)
            if left != right:
                fail("left-square", {"q": q, "factors": [f.to_json() for f in factors]})
            if phi(rec_moved, moved).key() != act_on_decgd_gen(1, q, phi(recording, factors)).key():
                fail("composite", {"q": q, "factors": [f.to_json() for f in factors]})
        for dec in decgds:
            report["cases"] += 1
            left_dec = jmath_embed(rec_moved, act_on_decgd_gen(1, q, dec))
            right_dec = act_on_decgd(bar, jmath_embed(recording, dec))
            if left_dec.key() != right_dec.key():
                fail("right-square", {"q": q})
    report["passed"] = not report["failures"]
    return report
