"""Invariant cohomology under a finite group of Lie algebra automorphisms.

For a virtually nilpotent group, cohomology is the invariant part of the
cohomology of a finite-index nilpotent subgroup under the deck action of
the finite quotient. The action is given concretely: a full element list
of matrices acting on the algebra. Averaging over the group (possible
because the order is invertible over Q) projects each cohomology space
onto its invariants, and the projector's rank is the invariant dimension.
"""

from fractions import Fraction

from .exterior import exterior_power_matrix
from .linalg import Matrix


class FiniteGroupAction:
    """A finite matrix group acting on a Lie algebra.

    elements must list every group element (identity included), each an
    n x n matrix over Q; closure and the automorphism property are
    checked by validate_action.
    """

    def __init__(self, target, elements):
        self.target = target
        mats = []
        for m in elements:
            if not isinstance(m, Matrix):
                m = Matrix.from_rows(m, cols=target.dim)
            if m.rows != target.dim or m.cols != target.dim:
                raise ValueError(f"element matrices must be "
                                 f"{target.dim} x {target.dim}")
            mats.append(m)
        if not mats:
            raise ValueError("element list is empty")
        self.elements = tuple(mats)
        self._validated = False

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return (f"FiniteGroupAction(order {self.order} on dim "
                f"{self.target.dim})")


def validate_action(a):
    """Invertibility, the automorphism property on every basis pair,
    presence of the identity, closure under products, distinctness.
    Raises on the first failure; cached."""
    if a._validated:
        return
    L = a.target
    L.validate()
    n = L.dim
    for e, m in enumerate(a.elements):
        try:
            m.inverse()
        except ValueError:
            raise ValueError(f"element {e} is not invertible") from None
    for e, m in enumerate(a.elements):
        cols = [m.column(j) for j in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = m.apply(L.bracket_basis(i, j))
                if lhs != L.bracket(cols[i], cols[j]):
                    raise ValueError(
                        f"not an automorphism (element {e}, pair {i},{j})")
    if len(set(a.elements)) != len(a.elements):
        raise ValueError("duplicate element in the list")
    if Matrix.identity(n) not in a.elements:
        raise ValueError("identity element missing")
    listed = set(a.elements)
    for x in a.elements:
        for y in a.elements:
            if x.matmul(y) not in listed:
                raise ValueError("not closed under product")
    a._validated = True


def induced_action_on_cohomology(a, k):
    """One matrix per group element, acting on the representative basis
    of the degree-k cohomology by the contragredient exterior power."""
    validate_action(a)
    L = a.target
    H = L.cohomology_basis(k)
    out = []
    for m in a.elements:
        contragredient = m.inverse().transpose()
        big = exterior_power_matrix(contragredient, k)
        entries_by_col = [H.class_coordinates(big.apply(r))
                          for r in H.representatives]
        entries = []
        for i in range(H.dim):
            entries.extend(col[i] for col in entries_by_col)
        out.append(Matrix(H.dim, H.dim, entries))
    return out


def averaging_projector(a, k):
    """(1/|G|) sum of the induced matrices; idempotent, image = invariants."""
    mats = induced_action_on_cohomology(a, k)
    total = mats[0]
    for m in mats[1:]:
        total = total.add(m)
    return total.scale(Fraction(1, len(mats)))


def invariant_dims(a):
    """dim of the invariant part of each cohomology degree, 0..n."""
    validate_action(a)
    return [averaging_projector(a, k).rank()
            for k in range(a.target.dim + 1)]
