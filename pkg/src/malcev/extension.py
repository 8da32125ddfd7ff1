"""Central extensions of free abelian groups by Z.

The extension is recorded by the rank 2g of the abelian quotient and the
extension class cl, a 2-form on its degree-one cohomology. Cup product
with cl drives a short Gysin-type recursion that yields every Betti
number of the extension in closed form, and — when the degree-one basis
is split into holomorphic and anti-holomorphic halves and cl has type
(1,1) — the weight-graded pieces of the mixed Hodge structure, purity of
the degree-two part included.

Everything here is independent of the Lie-algebra route; the crosscheck
at the bottom plays the two against each other.
"""

from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .exterior import basis_index, unit_kvector, wedge, wedge_basis
from .lie import LieAlgebra
from .linalg import Matrix, as_rational, kernel, submatrix


class ExtensionDatum:
    """rank = 2g generators downstairs, one central generator upstairs.

    cl may be a dense coefficient vector on the lex pair basis or a
    mapping (i, j) -> value with i < j. With hodge_typed set, generators
    0..g-1 are holomorphic and g..2g-1 anti-holomorphic, so the rank must
    be even.
    """

    def __init__(self, rank, cl, hodge_typed=False):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        if hodge_typed and rank % 2:
            raise ValueError("hodge typing needs an even rank")
        pairs = comb(rank, 2)
        if isinstance(cl, dict):
            dense = [Fraction(0)] * pairs
            index = basis_index(rank, 2) if pairs else {}
            for (i, j), v in cl.items():
                if not (0 <= i < j < rank):
                    raise ValueError(
                        f"class pair ({i},{j}): only i<j within range is"
                        " accepted")
                dense[index[(i, j)]] = as_rational(v)
            cl = dense
        cl = tuple(as_rational(x) for x in cl)
        if len(cl) != pairs:
            raise ValueError(f"class vector must have {pairs} coefficients,"
                             f" got {len(cl)}")
        self.rank = rank
        self.hodge_typed = bool(hodge_typed)
        self.cl = cl

    @property
    def g(self):
        return self.rank // 2

    def __repr__(self):
        typed = ", hodge typed" if self.hodge_typed else ""
        return f"ExtensionDatum(rank {self.rank}{typed})"


class SurjectivityResult(NamedTuple):
    h2_ab_dim: int
    h2_dim: int
    surjective: bool


class WeightPiece(NamedTuple):
    weight: int
    dim: int
    hodge_numbers: Optional[dict]   # (p, q) -> count, zeros omitted


class WeightGradedHodge(NamedTuple):
    degree: int
    pieces: tuple


class CrosscheckResult(NamedTuple):
    ok: bool
    first_mismatch: Optional[int]
    gysin: tuple
    betti: tuple


def cup_with_class(e, j):
    """Matrix of the cup product with cl from degree j to degree j+2."""
    n = e.rank
    if not 0 <= j <= n:
        raise ValueError(f"degree {j} out of range for rank {n}")
    src = comb(n, j)
    if j + 2 > n:
        return Matrix(0, src, ())
    columns = [wedge(unit_kvector(n, j, mi), j, e.cl, 2, n)
               for mi in wedge_basis(n, j)]
    out = comb(n, j + 2)
    entries = []
    for i in range(out):
        entries.extend(col[i] for col in columns)
    return Matrix(out, src, entries)


def _cup_rank(e, j):
    if j < 0 or j > e.rank:
        return 0
    return cup_with_class(e, j).rank()


def _cup_kernel_dim(e, j):
    # out of range means the zero space, whose kernel is zero
    if j < 0 or j > e.rank:
        return 0
    return kernel(cup_with_class(e, j)).dim


def gysin_dims(e):
    """dim H^k of the extension for k = 0..rank+1.

    Degree k splits as the cokernel of cupping into degree k and the
    kernel of cupping out of degree k-1; out-of-range terms vanish.
    """
    n = e.rank
    dims = []
    for k in range(n + 2):
        coker = (comb(n, k) - _cup_rank(e, k - 2)) if k <= n else 0
        dims.append(coker + _cup_kernel_dim(e, k - 1))
    return dims


def h2ab_to_h2_surjectivity(e):
    """Does the quotient's degree-2 cohomology hit all of the
    extension's? Equivalent to cup with cl being injective in degree 1."""
    kernel_part = _cup_kernel_dim(e, 1)
    dims = gysin_dims(e)
    h2 = dims[2] if len(dims) > 2 else 0
    return SurjectivityResult(comb(e.rank, 2), h2, kernel_part == 0)


def carlson_toledo_check(e):
    """Nonvanishing of H^2 of the extension; computed, not assumed."""
    if e.rank < 1:
        raise ValueError("rank must be at least 1")
    return gysin_dims(e)[2] > 0


def _bidegree(mi, g):
    p = sum(1 for i in mi if i < g)
    return p, len(mi) - p


def _positions_by_bidegree(n, g, k):
    out = defaultdict(list)
    if 0 <= k <= n:
        for pos, mi in enumerate(wedge_basis(n, k)):
            out[_bidegree(mi, g)].append(pos)
    return out


def _require_type_one_one(e):
    if not e.hodge_typed:
        raise ValueError("not hodge typed")
    g = e.g
    if e.cl:
        for (i, j), c in zip(wedge_basis(e.rank, 2), e.cl):
            if c and not (i < g <= j):
                raise ValueError("cl not of type (1,1)")


def gysin_mhs(e, k):
    """Weight-graded pieces of H^k with Hodge numbers.

    The cokernel part sits in weight k with the Hodge numbers of the
    k-forms downstairs minus the (1,1)-shifted image of cupping; the
    kernel part sits in weight k+1 with the (k-1)-form numbers shifted by
    (+1,+1) — the central generator counts as a (1,1) class of weight 2.
    Cup with a (1,1) class is bidegree-diagonal, so each piece splits into
    exact block ranks. Zero pieces are dropped.
    """
    _require_type_one_one(e)
    n, g = e.rank, e.g
    pieces = []

    if k <= n:
        cup_prev = cup_with_class(e, k - 2) if k >= 2 else None
        rows_k = _positions_by_bidegree(n, g, k)
        cols_km2 = _positions_by_bidegree(n, g, k - 2)
        hodge = {}
        for (p, q) in sorted(rows_k, reverse=True):
            h = len(rows_k[(p, q)])
            if cup_prev is not None and (p - 1, q - 1) in cols_km2:
                h -= submatrix(cup_prev, rows_k[(p, q)],
                               cols_km2[(p - 1, q - 1)]).rank()
            if h:
                hodge[(p, q)] = h
        if hodge:
            pieces.append(WeightPiece(k, sum(hodge.values()), hodge))

    if k >= 1 and k - 1 <= n:
        cup_k = cup_with_class(e, k - 1)
        cols = _positions_by_bidegree(n, g, k - 1)
        rows = _positions_by_bidegree(n, g, k + 1)
        hodge = {}
        for (a, b) in sorted(cols, reverse=True):
            block_cols = cols[(a, b)]
            block_rows = rows.get((a + 1, b + 1), [])
            h = len(block_cols) - submatrix(cup_k, block_rows,
                                            block_cols).rank()
            if h:
                hodge[(a + 1, b + 1)] = h
        if hodge:
            pieces.append(WeightPiece(k + 1, sum(hodge.values()), hodge))

    return WeightGradedHodge(k, tuple(pieces))


def purity_check_h2(e):
    """Pure degree-2 cohomology: a single piece, of weight 2."""
    pieces = gysin_mhs(e, 2).pieces
    return len(pieces) == 1 and pieces[0].weight == 2


def is_conjugation_stable(e):
    """Whether swapping the holomorphic and anti-holomorphic halves sends
    cl to itself up to sign (real or purely imaginary class)."""
    if not e.hodge_typed:
        raise ValueError("not hodge typed")
    n, g = e.rank, e.g
    if comb(n, 2) == 0:
        return True
    index = basis_index(n, 2)
    conj = [Fraction(0)] * comb(n, 2)
    for (i, j), c in zip(wedge_basis(n, 2), e.cl):
        if not c:
            continue
        a, b = (i + g) % n, (j + g) % n
        sign = 1
        if a > b:
            a, b = b, a
            sign = -1
        conj[index[(a, b)]] += sign * c
    conj = tuple(conj)
    neg = tuple(-x for x in conj)
    return conj == e.cl or neg == e.cl


def associated_lie_algebra(e):
    """Two-step algebra with central z and [a_i, a_j] = cl_ij z."""
    n = e.rank
    brackets = {}
    if e.cl:
        for (i, j), c in zip(wedge_basis(n, 2), e.cl):
            if c:
                v = [Fraction(0)] * (n + 1)
                v[n] = c
                brackets[(i, j)] = tuple(v)
    labels = [f"a{i + 1}" for i in range(n)] + ["z"]
    return LieAlgebra(n + 1, brackets, labels=labels)


def nomizu_crosscheck(e):
    """Gysin dimensions against the Betti numbers of the associated
    algebra: two independent routes to the same list."""
    gy = tuple(gysin_dims(e))
    be = tuple(associated_lie_algebra(e).betti_numbers())
    mismatch = next((k for k, (a, b) in enumerate(zip(gy, be)) if a != b),
                    None)
    if mismatch is None and len(gy) != len(be):
        mismatch = min(len(gy), len(be))
    return CrosscheckResult(mismatch is None, mismatch, gy, be)
