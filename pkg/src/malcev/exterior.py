"""Exterior algebra combinatorics on a fixed ordered generator set.

Basis convention used everywhere: the k-th wedge power of an n-dimensional
space has basis indexed by strictly increasing k-tuples of generator
indices, listed in lexicographic order. Coefficient vectors are plain
tuples of Fractions in that order.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .linalg import Matrix, as_rational, zero_vector


@lru_cache(maxsize=None)
def wedge_basis(n, k):
    """All C(n,k) strictly increasing k-subsets of range(n), lex order."""
    if k < 0 or k > n:
        raise ValueError(f"degree {k} out of range for {n} generators")
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def basis_index(n, k):
    """Map multi-index tuple -> position in wedge_basis(n, k)."""
    return {mi: pos for pos, mi in enumerate(wedge_basis(n, k))}


def merge_sign(a, b):
    """Koszul sign for sorting the concatenation of disjoint increasing
    tuples a and b, or (None, 0) on a repeated index."""
    merged = a + b
    if len(set(merged)) != len(merged):
        return None, 0
    inversions = sum(1 for i in a for j in b if i > j)
    return tuple(sorted(merged)), -1 if inversions % 2 else 1


def wedge(a, p, b, q, n):
    """Product of a p-vector and a q-vector, as coefficient vectors."""
    if p + q > n:
        raise ValueError("wedge degree exceeds generator count")
    pa = wedge_basis(n, p)
    pb = wedge_basis(n, q)
    index = basis_index(n, p + q)
    out = [Fraction(0)] * comb(n, p + q)
    for ia, ca in enumerate(a):
        if not ca:
            continue
        mi_a = pa[ia]
        for ib, cb in enumerate(b):
            if not cb:
                continue
            merged, sign = merge_sign(mi_a, pb[ib])
            if sign:
                out[index[merged]] += sign * ca * cb
    return tuple(out)


def unit_kvector(n, k, mi):
    """Basis k-vector with coefficient 1 on the multi-index mi."""
    v = [Fraction(0)] * comb(n, k)
    v[basis_index(n, k)[mi]] = Fraction(1)
    return tuple(v)


def derivation_matrix(one_form_images, n, k):
    """Degree-+1 derivation on wedge powers from its values on generators.

    one_form_images[i] is d(generator i) as a 2-vector coefficient tuple.
    Returns the matrix of d : wedge^k -> wedge^{k+1}, columns indexed by
    wedge_basis(n, k).
    """
    src = wedge_basis(n, k)
    dim_out = comb(n, k + 1)
    columns = []
    for mi in src:
        col = zero_vector(dim_out)
        for t, gen in enumerate(mi):
            dg = one_form_images[gen]
            if not any(dg):
                continue
            prefix = mi[:t]
            suffix = mi[t + 1:]
            term = dg
            deg = 2
            if prefix:
                term = wedge(unit_kvector(n, len(prefix), prefix), len(prefix),
                             term, deg, n)
                deg += len(prefix)
            if suffix:
                term = wedge(term, deg,
                             unit_kvector(n, len(suffix), suffix),
                             len(suffix), n)
                deg += len(suffix)
            if t % 2:
                term = tuple(-x for x in term)
            col = tuple(x + y for x, y in zip(col, term))
        columns.append(col)
    entries = []
    for i in range(dim_out):
        entries.extend(col[i] for col in columns)
    return Matrix(dim_out, len(src), entries)


def exterior_power_matrix(m, k):
    """k-th exterior power of a square matrix, in the wedge bases."""
    n = m.rows
    if m.cols != n:
        raise ValueError("exterior power needs a square matrix")
    cols = [m.column(j) for j in range(n)]
    out_cols = []
    for mi in wedge_basis(n, k):
        v = (Fraction(1),)
        deg = 0
        for j in mi:
            v = wedge(v, deg, cols[j], 1, n)
            deg += 1
        out_cols.append(v)
    dim = comb(n, k)
    entries = []
    for i in range(dim):
        entries.extend(col[i] for col in out_cols)
    return Matrix(dim, dim, entries)


def embed_pairs(v, n_small, n_big):
    """Include a 2-vector on the first n_small generators into
    the pair basis of n_big generators."""
    out = [Fraction(0)] * comb(n_big, 2)
    if comb(n_small, 2):
        index = basis_index(n_big, 2)
        for mi, c in zip(wedge_basis(n_small, 2), v):
            if c:
                out[index[mi]] = as_rational(c)
    return tuple(out)


def restrict_pairs(v, n_big, n_small):
    """Component of a 2-vector on pairs drawn from the first n_small
    generators (the projection killing every later generator)."""
    if comb(n_small, 2) == 0:
        return ()
    index = basis_index(n_big, 2)
    return tuple(v[index[mi]] for mi in wedge_basis(n_small, 2))
