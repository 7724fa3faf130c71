"""Gaudin Hamiltonians on tensor powers of the vector representation.

Everything up to the final eigensolve is exact: matrices live on the word
basis of V^(x)n (lexicographic order) with Fraction entries, the singular
weight basis is an exact kernel, and commutativity is verified in rational
arithmetic.  Floating point enters only when the joint spectrum is extracted,
with near-degeneracies flagged rather than merged.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np

from .tableaux import normalize, syt_count
from .words import enumerate_words, weight

DEGENERACY_TOL = 1e-9


def word_basis(n: int, r: int) -> list[tuple[int, ...]]:
    return list(enumerate_words(n, r))


def _zero(dim: int) -> np.ndarray:
    m = np.empty((dim, dim), dtype=object)
    m[:] = Fraction(0)
    return m


def omega(a: int, b: int, n: int, r: int) -> np.ndarray:
    """Sum over i,j of e_ij at slot a times e_ji at slot b: the flip of the
    tensor factors a and b on the word basis."""
    if not (1 <= a <= n and 1 <= b <= n and a != b):
        raise ValueError(f"need distinct slots in 1..{n}, got ({a}, {b})")
    basis = word_basis(n, r)
    index = {w: i for i, w in enumerate(basis)}
    m = _zero(len(basis))
    for i, w in enumerate(basis):
        lst = list(w)
        lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
        m[index[tuple(lst)], i] = Fraction(1)
    return m


def hamiltonian(a: int, z: Sequence, n: int, r: int) -> np.ndarray:
    """H_a(z): sum over b != a of Omega_ab / (z_a - z_b), exact in z."""
    zs = [Fraction(x) for x in z]
    if len(zs) != n:
        raise ValueError(f"need {n} parameters, got {len(zs)}")
    if len(set(zs)) != n:
        raise ValueError("parameters must be pairwise distinct")
    if not 1 <= a <= n:
        raise ValueError(f"slot {a} out of range")
    m = _zero(r ** n)
    for b in range(1, n + 1):
        if b == a:
            continue
        m = m + omega(a, b, n, r) * Fraction(1, 1) / (zs[a - 1] - zs[b - 1])
    return m


def raising_operator(i: int, n: int, r: int) -> np.ndarray:
    """Total raising operator: sum over slots of e_{i,i+1} acting there."""
    if not 1 <= i < r:
        raise ValueError(f"raising index {i} out of range 1..{r - 1}")
    basis = word_basis(n, r)
    index = {w: k for k, w in enumerate(basis)}
    m = _zero(len(basis))
    for k, w in enumerate(basis):
        for slot, x in enumerate(w):
            if x == i + 1:
                m[index[w[:slot] + (i,) + w[slot + 1:]], k] += Fraction(1)
    return m


def lowering_matrix_entry_op(i: int, j: int, n: int, r: int) -> np.ndarray:
    """Total e_ij operator (sends letter j to letter i slotwise)."""
    basis = word_basis(n, r)
    index = {w: k for k, w in enumerate(basis)}
    m = _zero(len(basis))
    for k, w in enumerate(basis):
        for slot, x in enumerate(w):
            if x == j:
                m[index[w[:slot] + (i,) + w[slot + 1:]], k] += Fraction(1)
    return m


def rref(mat: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns pivot columns."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        m[rank] = [x / inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return m, pivots


def kernel_basis(mat: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Canonical rational basis of the kernel, one vector per free column."""
    if not mat:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -red[prow][fcol]
        basis.append(v)
    return basis


def weight_subspace(n: int, r: int, mu) -> list[int]:
    """Indices of the word-basis vectors of the given content."""
    mu_full = tuple(mu) + (0,) * (r - len(mu))
    if len(mu_full) != r or sum(mu_full) != n:
        raise ValueError(f"weight {mu} incompatible with n={n}, r={r}")
    return [k for k, w in enumerate(word_basis(n, r)) if weight(w, r) == mu_full]


def _weight_words(n: int, r: int, mu) -> list[tuple[int, ...]]:
    mu_full = tuple(mu) + (0,) * (r - len(mu))
    if len(mu_full) != r or sum(mu_full) != n:
        raise ValueError(f"weight {mu} incompatible with n={n}, r={r}")
    return [w for w in enumerate_words(n, r) if weight(w, r) == mu_full]


def _singular_basis_weightspace(n: int, r: int, mu):
    """Kernel of the raising operators inside the mu-weight space.

    Returns (weight words, kernel vectors over those coordinates, free
    columns); the kernel is in canonical form, vector j carrying a 1 at its
    free column and 0 at the others.
    """
    words = _weight_words(n, r, mu)
    pos = {w: c for c, w in enumerate(words)}
    rows_by_target: dict[tuple[int, ...], list[Fraction]] = {}
    for i in range(1, r):
        for c, w in enumerate(words):
            for slot, x in enumerate(w):
                if x == i + 1:
                    target = w[:slot] + (i,) + w[slot + 1:]
                    rowk = (i, target)
                    if rowk not in rows_by_target:
                        rows_by_target[rowk] = [Fraction(0)] * len(words)
                    rows_by_target[rowk][c] += 1
    rows = [rows_by_target[k] for k in sorted(rows_by_target)]
    if not rows:
        kb = [[Fraction(int(i == j)) for i in range(len(words))]
              for j in range(len(words))]
        return words, kb, list(range(len(words)))
    red, pivots = rref(rows)
    free = [c for c in range(len(words)) if c not in pivots]
    kb = []
    for fcol in free:
        v = [Fraction(0)] * len(words)
        v[fcol] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -red[prow][fcol]
        kb.append(v)
    return words, kb, free


def singular_weight_basis(n: int, r: int, mu) -> list[list[Fraction]]:
    """Exact basis of the joint kernel of all raising operators inside the
    mu-weight subspace; vectors are given in the full word-basis coordinates."""
    mu = tuple(mu)
    idx = weight_subspace(n, r, mu)
    _words, kb, _free = _singular_basis_weightspace(n, r, mu)
    dim_full = r ** n
    out = []
    for v in kb:
        full = [Fraction(0)] * dim_full
        for p, c in enumerate(idx):
            full[c] = v[p]
        out.append(full)
    return out


def restrict_operator(m: np.ndarray, basis_vectors: list[list[Fraction]]) -> np.ndarray:
    """Matrix of an invariant operator in the coordinates of the given
    independent column vectors (exact; errors if the space is not invariant)."""
    k = len(basis_vectors)
    images = [m @ np.array(v, dtype=object) for v in basis_vectors]
    nrows = len(basis_vectors[0])
    aug = [[basis_vectors[j][row] for j in range(k)]
           + [images[j][row] for j in range(k)] for row in range(nrows)]
    red, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise ValueError("basis vectors are not independent")
    if len(pivots) > k:
        raise ValueError("operator image leaves the subspace")
    out = _zero(k)
    for i in range(k):
        for j in range(k):
            out[i, j] = red[i][k + j]
    return out


def commutator_is_zero(a: np.ndarray, b: np.ndarray) -> bool:
    c = a @ b - b @ a
    return all(x == 0 for x in c.flat)


def _apply_ham_sparse(vec: dict, a: int, zs: list[Fraction], n: int) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    for w, c in vec.items():
        for b in range(1, n + 1):
            if b == a:
                continue
            lst = list(w)
            lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
            tw = tuple(lst)
            out[tw] = out.get(tw, Fraction(0)) + c / (zs[a - 1] - zs[b - 1])
    return {w: c for w, c in out.items() if c != 0}


def restricted_hamiltonians(z: Sequence, n: int, r: int, mu) -> tuple[list[np.ndarray], list[list[Fraction]]]:
    """Exact matrices of all H_a(z) on the singular mu-weight basis.

    Works sparsely inside the weight space; the canonical kernel form makes
    coordinates readable off the free columns, and the residual is verified to
    vanish exactly (the singular space is invariant).
    """
    zs = [Fraction(x) for x in z]
    if len(set(zs)) != n:
        raise ValueError("parameters must be pairwise distinct")
    words, kb, free = _singular_basis_weightspace(n, r, mu)
    k = len(kb)
    if k == 0:
        return [], []
    vecs = [{w: v[c] for c, w in enumerate(words) if v[c] != 0} for v in kb]
    free_words = [words[f] for f in free]
    mats = []
    for a in range(1, n + 1):
        m = _zero(k)
        for j, vec in enumerate(vecs):
            img = _apply_ham_sparse(vec, a, zs, n)
            coeffs = [img.get(fw, Fraction(0)) for fw in free_words]
            residual = dict(img)
            for i, ci in enumerate(coeffs):
                if ci == 0:
                    continue
                for w, c in vecs[i].items():
                    residual[w] = residual.get(w, Fraction(0)) - ci * c
            if any(c != 0 for c in residual.values()):
                raise AssertionError("Hamiltonian leaves the singular weight space")
            for i, ci in enumerate(coeffs):
                m[i, j] = ci
        mats.append(m)
    idx = weight_subspace(n, r, mu)
    dim_full = r ** n
    basis_full = []
    for v in kb:
        full = [Fraction(0)] * dim_full
        for p, c in enumerate(idx):
            full[c] = v[p]
        basis_full.append(full)
    return mats, basis_full


def joint_spectrum(z: Sequence, n: int, r: int, mu,
                   tol: float = DEGENERACY_TOL) -> dict:
    """Simultaneous spectrum of the Gaudin Hamiltonians on the singular
    mu-weight space.

    Commutativity of the restrictions is verified exactly first; the
    eigensolve is floating point.  Returns the eigenvalue tuples, the measured
    minimal relative separation, and a flag for whether the spectrum is simple
    at the given tolerance.
    """
    mu = normalize(mu)
    mats, basis = restricted_hamiltonians(z, n, r, mu)
    k = len(basis)
    result = {
        "z": [str(Fraction(x)) for x in z],
        "mu": list(mu),
        "dimension": k,
        "expected_dimension": syt_count(mu),
        "joint_spectrum": [],
        "simple": True,
        "min_separation": None,
        "degenerate_pairs": [],
    }
    if k == 0:
        return result
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            if not commutator_is_zero(mats[a], mats[b]):
                raise AssertionError(
                    f"restricted Hamiltonians {a + 1} and {b + 1} do not commute")
    floats = [m.astype(np.float64) for m in mats]
    # a generic fixed combination separates the joint eigenspaces
    coeffs = [np.cos(3.7 * (a + 1)) + 0.5 for a in range(len(floats))]
    generic = sum(c * m for c, m in zip(coeffs, floats))
    _vals, vecs = np.linalg.eig(generic)
    tuples = []
    for col in range(k):
        v = vecs[:, col]
        pivot = int(np.argmax(np.abs(v)))
        tup = [float((m @ v)[pivot] / v[pivot]) for m in floats]
        tuples.append(tup)
    tuples.sort()
    result["joint_spectrum"] = tuples
    scale = max(1.0, max(abs(x) for t in tuples for x in t))
    min_sep = None
    for i in range(k):
        for j in range(i + 1, k):
            sep = max(abs(x - y) for x, y in zip(tuples[i], tuples[j])) / scale
            if min_sep is None or sep < min_sep:
                min_sep = sep
            if sep <= tol:
                result["degenerate_pairs"].append([i, j])
                result["simple"] = False
    result["min_separation"] = min_sep
    return result
