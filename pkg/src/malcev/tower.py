"""Stage-by-stage construction of the 1-minimal model from cup data.

The input is truncated cohomology: dimensions of H^1 and H^2 and the cup
pairing between them. Stage 1 is the free algebra on H^1 with zero
differential; each later stage adjoins degree-1 generators killing the
kernel of the map H^2(current stage) -> H^2, which sends a class to the
cup product of its component on stage-1 pairs. Generators adjoined at
stage s carry weight s.

Dualizing the differentials gives a tower of nilpotent Lie algebras with
central kernels; for a nilpotent group's cup data this recovers its
rational Lie algebra stage by stage.
"""

from fractions import Fraction
from math import comb
from typing import NamedTuple

from .exterior import (derivation_matrix, embed_pairs, restrict_pairs,
                       wedge_basis)
from .lie import LieAlgebra
from .linalg import Matrix, Subspace, kernel, representatives_modulo, vec, \
    zero_vector

DEFAULT_BUDGET = 64
DEFAULT_MAX_STAGE = 6


class BudgetExceededError(RuntimeError):
    """Raised when adjoining a stage would pass the generator budget.

    Carries the tower built so far in .partial.
    """

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class CupData:
    """H^1 and H^2 dimensions plus the cup pairing Lambda^2 H^1 -> H^2.

    cup is a b2 x C(b1, 2) matrix over Q, columns in lex pair order.
    hodge_split, when present, declares the first p generators holomorphic
    and the remaining q anti-holomorphic (p + q = b1).
    """

    def __init__(self, b1, b2, cup, hodge_split=None):
        if b1 < 0 or b2 < 0:
            raise ValueError("negative cohomology dimension")
        pairs = comb(b1, 2)
        if not isinstance(cup, Matrix):
            cup = Matrix.from_rows([vec(r) for r in cup], cols=pairs) \
                if cup else Matrix(0, pairs, ())
        if (cup.rows, cup.cols) != (b2, pairs):
            raise ValueError(f"cup matrix must be {b2} x {pairs},"
                             f" got {cup.rows} x {cup.cols}")
        if hodge_split is not None:
            p, q = hodge_split
            if p < 0 or q < 0 or p + q != b1:
                raise ValueError(
                    "hodge split must be nonnegative and sum to b1")
            hodge_split = (p, q)
        self.b1 = b1
        self.b2 = b2
        self.cup = cup
        self.hodge_split = hodge_split

    def __repr__(self):
        return f"CupData(b1={self.b1}, b2={self.b2})"


class TowerStage(NamedTuple):
    index: int
    start: int   # offset of this stage's first generator
    count: int
    # one 2-vector per generator, over the `start` generators before it
    differentials: tuple


class LieTower(NamedTuple):
    """Dual central-extension tower: algebras smallest first, and the
    surjection matrices algebras[i+1] -> algebras[i]."""

    algebras: tuple
    projections: tuple


class HirschTower:
    """Generators with weights and differentials, one block per stage."""

    def __init__(self, cup_data, stages, stabilized):
        self.cup_data = cup_data
        self.stages = stages
        self.stabilized = stabilized

    @property
    def total_generators(self):
        return sum(s.count for s in self.stages)

    def weights(self):
        out = []
        for s in self.stages:
            out.extend([s.index] * s.count)
        return tuple(out)

    def generators_through(self, stage_index):
        return sum(s.count for s in self.stages if s.index <= stage_index)

    def differential_images(self, n=None):
        """d of every generator as a 2-vector over the first n generators
        (default all); stage-1 generators are closed."""
        if n is None:
            n = self.total_generators
        return [embed_pairs(dg, s.start, n)
                for s in self.stages for dg in s.differentials]

    def __repr__(self):
        sizes = ", ".join(str(s.count) for s in self.stages)
        tail = "stabilized" if self.stabilized else "open"
        return f"HirschTower(stages [{sizes}], {tail})"


def _stage_two_cohomology(tower):
    """Representatives of H^2 of the current stage: closed 2-forms modulo
    the adjoined differentials."""
    n = tower.total_generators
    if comb(n, 2) == 0:
        return ()
    images = tower.differential_images()
    d2 = derivation_matrix(images, n, 2)
    closed = kernel(d2)
    exact = Subspace.from_rows([im for im in images if any(im)], comb(n, 2))
    return representatives_modulo(closed.basis, exact)


def _h2_matrix(cup_data, tower, reps):
    n = tower.total_generators
    columns = [cup_data.cup.apply(restrict_pairs(r, n, cup_data.b1))
               for r in reps]
    entries = []
    for i in range(cup_data.b2):
        entries.extend(col[i] for col in columns)
    return Matrix(cup_data.b2, len(columns), entries)


def tower_h2_map(tower, cup_data=None):
    """Matrix of H^2(current stage) -> H^2 in the representative basis.

    A class goes to the cup product of its stage-1 component; this is well
    defined because every adjoined differential cups to zero.
    """
    if cup_data is None:
        cup_data = tower.cup_data
    return _h2_matrix(cup_data, tower, _stage_two_cohomology(tower))


def build_tower(cup_data, max_stage=DEFAULT_MAX_STAGE, budget=DEFAULT_BUDGET):
    """Run the stage construction until the H^2 map is injective, the
    stage cap is reached, or the generator budget would be passed."""
    if max_stage < 1:
        raise ValueError("max_stage must be at least 1")
    if cup_data.b1 > budget:
        raise BudgetExceededError(
            f"budget exceeded: stage 1 needs {cup_data.b1} generators > "
            f"{budget}", HirschTower(cup_data, [], False))
    first = TowerStage(1, 0, cup_data.b1,
                       tuple(zero_vector(0) for _ in range(cup_data.b1)))
    tower = HirschTower(cup_data, [first], False)
    while True:
        reps = _stage_two_cohomology(tower)
        coeff_kernel = kernel(_h2_matrix(cup_data, tower, reps))
        if coeff_kernel.dim == 0:
            tower.stabilized = True
            return tower
        if len(tower.stages) == max_stage:
            return tower
        n = tower.total_generators
        if n + coeff_kernel.dim > budget:
            raise BudgetExceededError(
                f"budget exceeded: {n} + {coeff_kernel.dim} generators > "
                f"{budget}", tower)
        new = []
        for coeffs in coeff_kernel.basis:
            dw = zero_vector(comb(n, 2))
            for c, rep in zip(coeffs, reps):
                if c:
                    dw = tuple(x + c * y for x, y in zip(dw, rep))
            new.append(dw)
        tower.stages.append(
            TowerStage(len(tower.stages) + 1, n, len(new), tuple(new)))


def dual_lie_tower(tower):
    """Nilpotent Lie algebras dual to the tower stages, smallest first,
    with the surjections that forget each newest stage.

    Structure constants flip sign against the differential, matching the
    one-form convention d xi(x, y) = -xi([x, y]); each projection kernel
    is spanned by the newest stage's generators and is central.
    """
    algebras = []
    for top in tower.stages:
        n = tower.generators_through(top.index)
        brackets = {}
        g = 0
        for s in tower.stages:
            if s.index > top.index:
                break
            for dg in s.differentials:
                full = embed_pairs(dg, s.start, n)
                for (a, b), c in zip(wedge_basis(n, 2), full):
                    if c:
                        brackets.setdefault((a, b),
                                            [Fraction(0)] * n)[g] -= c
                g += 1
        algebras.append(LieAlgebra(n, brackets))
    projections = []
    for small, big in zip(algebras, algebras[1:]):
        rows = [[Fraction(int(i == j)) for j in range(big.dim)]
                for i in range(small.dim)]
        projections.append(Matrix.from_rows(rows, cols=big.dim))
    return LieTower(tuple(algebras), tuple(projections))


def roundtrip_check(tower):
    """Differentials of the dual algebras must reproduce the tower's
    (bracket/differential duality), and every dual must be nilpotent."""
    for L, top in zip(dual_lie_tower(tower).algebras, tower.stages):
        try:
            L.validate()
        except ValueError:
            return False
        if L.dim and not L.is_nilpotent():
            return False
        if L.dim < 2:
            continue
        d1 = L.ce_differential(1)
        g = 0
        for s in tower.stages:
            if s.index > top.index:
                break
            for dg in s.differentials:
                if d1.column(g) != embed_pairs(dg, s.start, L.dim):
                    return False
                g += 1
    return True
