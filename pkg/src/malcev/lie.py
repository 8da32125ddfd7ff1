"""Finite-dimensional Lie algebras over Q and their cochain cohomology.

An algebra is given by structure constants on an ordered basis; its
cohomology is computed from the complex of alternating forms with the
differential dual to the bracket. For a lattice in a nilpotent Lie group
this computes the group cohomology of the lattice, which is what the
rest of the package consumes.

Sign convention, fixed once: for a 1-form xi, (d xi)(x, y) = -xi([x, y]),
extended to higher degrees as a derivation. Cohomology dimensions do not
depend on this choice; matrices do.
"""

from fractions import Fraction
from math import comb
from typing import NamedTuple

from .exterior import basis_index, derivation_matrix, wedge, wedge_basis
from .linalg import (Matrix, Subspace, as_rational, express_in_rows, image,
                     kernel, representatives_modulo, vec, zero_vector)


class Cohomology(NamedTuple):
    """Explicit bases in one degree: cocycles, coboundaries, and cocycle
    representatives whose classes form a basis of the cohomology."""

    cocycles: Subspace
    coboundaries: Subspace
    representatives: tuple

    @property
    def dim(self):
        return len(self.representatives)

    def class_coordinates(self, v):
        """Coordinates of the class of the cocycle v in the
        representative basis."""
        rows = list(self.coboundaries.basis) + list(self.representatives)
        coeffs = express_in_rows(rows, v, self.cocycles.ambient_dim)
        if coeffs is None:
            raise ValueError("vector is not a cocycle of this degree")
        return coeffs[self.coboundaries.dim:]


class FormalityResult(NamedTuple):
    one_formal: bool
    h2_ab_dim: int
    image_dim: int
    h2_dim: int


class LieAlgebra:
    """Lie algebra on basis e_0..e_{n-1} with brackets stored for i<j only.

    brackets maps (i, j) with i < j to the coefficient vector of
    [e_i, e_j]; missing pairs bracket to zero. The reversed orientation is
    implied by antisymmetry and must not be supplied.
    """

    def __init__(self, dim, brackets, labels=None):
        self.dim = dim
        if labels is None:
            labels = [f"e{i}" for i in range(dim)]
        labels = list(labels)
        if len(labels) != dim:
            raise ValueError(f"expected {dim} labels, got {len(labels)}")
        self.labels = labels
        stored = {}
        for key, value in brackets.items():
            i, j = key
            if not (0 <= i < j < dim):
                raise ValueError(
                    f"bracket ({i},{j}): keys must satisfy 0 <= i < j < dim;"
                    " reversed pairs are rejected as ambiguous")
            if isinstance(value, dict):
                dense = [Fraction(0)] * dim
                for k, c in value.items():
                    k = int(k)
                    if not 0 <= k < dim:
                        raise ValueError(
                            f"bracket ({i},{j}): coefficient index {k}"
                            " out of range")
                    dense[k] = as_rational(c)
                value = dense
            value = vec(value)
            if len(value) != dim:
                raise ValueError(f"bracket ({i},{j}): value must have {dim}"
                                 " coefficients")
            if any(value):
                stored[(i, j)] = value
        self.brackets = stored
        self._cache = {}

    # -- basic structure ---------------------------------------------------

    def bracket_basis(self, i, j):
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self.brackets.get((i, j), zero_vector(self.dim))
        v = self.brackets.get((j, i))
        return tuple(-x for x in v) if v else zero_vector(self.dim)

    def bracket(self, u, v):
        """Bilinear extension of the basis brackets."""
        out = [Fraction(0)] * self.dim
        for (i, j), c in self.brackets.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for m, cm in enumerate(c):
                    if cm:
                        out[m] += coef * cm
        return tuple(out)

    def validate(self):
        """Check the Jacobi identity on all basis triples; raises on the
        first violation. Result is cached."""
        if self._cache.get("valid"):
            return
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                cij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    total = list(self.bracket(cij, _basis_vec(n, k)))
                    for t, x in enumerate(
                            self.bracket(self.bracket_basis(j, k),
                                         _basis_vec(n, i))):
                        total[t] += x
                    for t, x in enumerate(
                            self.bracket(self.bracket_basis(k, i),
                                         _basis_vec(n, j))):
                        total[t] += x
                    if any(total):
                        raise ValueError(f"jacobi violated at ({i},{j},{k})")
        self._cache["valid"] = True

    def is_valid(self):
        try:
            self.validate()
        except ValueError:
            return False
        return True

    def lower_central_series(self):
        """[L, [L,L], [[L,L],L], ...] down to zero; raises "not nilpotent"
        if the series stabilizes at a nonzero subspace."""
        self.validate()
        if "lcs" in self._cache:
            return self._cache["lcs"]
        series = [Subspace.full(self.dim)]
        while series[-1].dim > 0:
            current = series[-1]
            spans = []
            for v in current.basis:
                for j in range(self.dim):
                    w = self.bracket(v, _basis_vec(self.dim, j))
                    if any(w):
                        spans.append(w)
            nxt = Subspace.from_rows(spans, self.dim)
            if nxt.dim == current.dim:
                raise ValueError("not nilpotent")
            series.append(nxt)
        self._cache["lcs"] = series
        return series

    def nilpotency_class(self):
        return len(self.lower_central_series()) - 1

    def is_nilpotent(self):
        try:
            self.lower_central_series()
        except ValueError as e:
            if str(e) == "not nilpotent":
                return False
            raise
        return True

    def derived_subspace(self):
        """[L, L] as a Subspace (works for non-nilpotent algebras too)."""
        self.validate()
        return Subspace.from_rows(list(self.brackets.values()), self.dim)

    def abelianization(self):
        """Abelian algebra on L/[L,L], basis induced by the coordinates
        complementary to the pivots of [L,L]."""
        free = self._complement_indices()
        return LieAlgebra(len(free), {},
                          labels=[self.labels[f] for f in free])

    def _complement_indices(self):
        pivots = {next(j for j, x in enumerate(row) if x)
                  for row in self.derived_subspace().basis}
        return [j for j in range(self.dim) if j not in pivots]

    # -- cochain complex ---------------------------------------------------

    def ce_differential(self, k):
        """Matrix of d : wedge^k of the dual -> wedge^{k+1}."""
        key = ("d", k)
        if key not in self._cache:
            self.validate()
            self._cache[key] = structure_differential(self.dim,
                                                      self.brackets, k)
        return self._cache[key]

    def cocycles(self, k):
        if k >= self.dim:
            return Subspace.full(comb(self.dim, k))
        return kernel(self.ce_differential(k))

    def coboundaries(self, k):
        if k == 0:
            return Subspace.zero(1)
        return image(self.ce_differential(k - 1))

    def cohomology_basis(self, k):
        key = ("H", k)
        if key not in self._cache:
            cocycles = self.cocycles(k)
            coboundaries = self.coboundaries(k)
            reps = representatives_modulo(cocycles.basis, coboundaries)
            self._cache[key] = Cohomology(cocycles, coboundaries, reps)
        return self._cache[key]

    def betti_numbers(self):
        """b_0..b_n via ranks of the cochain differentials."""
        self.validate()
        n = self.dim
        ranks = [self.ce_differential(k).rank() for k in range(n)]
        ranks.append(0)  # d from the top degree is zero
        return [comb(n, k) - ranks[k] - (ranks[k - 1] if k else 0)
                for k in range(n + 1)]

    def euler_characteristic(self):
        return sum((-1) ** k * b for k, b in enumerate(self.betti_numbers()))

    # -- degree-2 formality test --------------------------------------------

    def restriction_to_abelianization_map(self):
        """Matrix of H^2(L/[L,L]) -> H^2(L) in the representative bases.

        The dual of the projection embeds 2-forms on the abelianization as
        the 2-forms annihilating [L,L]; composing with the class map gives
        the matrix (columns indexed by lex pairs of quotient coordinates).
        """
        self.validate()
        n = self.dim
        derived = self.derived_subspace()
        pivots = [next(j for j, x in enumerate(row) if x)
                  for row in derived.basis]
        free = self._complement_indices()
        lifted = {}
        for f in free:
            form = [Fraction(0)] * n
            form[f] = Fraction(1)
            for row, p in zip(derived.basis, pivots):
                form[p] = -row[f]
            lifted[f] = tuple(form)
        h2 = self.cohomology_basis(2)
        columns = []
        for a, b in wedge_basis(len(free), 2):
            two_form = wedge(lifted[free[a]], 1, lifted[free[b]], 1, n)
            columns.append(h2.class_coordinates(two_form))
        entries = []
        for i in range(h2.dim):
            entries.extend(col[i] for col in columns)
        return Matrix(h2.dim, comb(len(free), 2), entries)

    def is_one_formal(self):
        """Surjectivity of H^2(abelianization) -> H^2(L); the quadratic
        presentation criterion for 1-formality."""
        if not self.is_nilpotent():
            raise ValueError("not nilpotent")
        m = self.restriction_to_abelianization_map()
        image_dim = m.rank()
        return FormalityResult(image_dim == m.rows, m.cols, image_dim, m.rows)

    def __repr__(self):
        return f"LieAlgebra(dim {self.dim}, {len(self.brackets)} brackets)"


def _basis_vec(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def structure_differential(n, brackets, k):
    """Dual-of-bracket differential matrix without the Jacobi check.

    On validated algebras this is ce_differential; on raw antisymmetric
    constants it lets one state the equivalence "d squares to zero on
    1-forms iff Jacobi holds".
    """
    images = [[Fraction(0)] * comb(n, 2) for _ in range(n)]
    if brackets:
        pair_index = basis_index(n, 2)
        for (i, j), c in brackets.items():
            pos = pair_index[(i, j)]
            for m, cm in enumerate(c):
                if cm:
                    images[m][pos] -= cm
    return derivation_matrix([tuple(im) for im in images], n, k)
