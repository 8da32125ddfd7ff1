"""Exact dense linear algebra over Q.

Everything is built on stdlib Fractions: no floats anywhere, so ranks,
kernels and quotients are exact. Matrices and subspaces are immutable
after construction; subspace bases are kept in reduced row echelon form
so that equality of subspaces is structural equality.
"""

from fractions import Fraction
import re

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def parse_rational(s):
    """Parse "p/q" or "n" (no whitespace, positive denominator)."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"invalid rational {s!r}: expected \"p/q\" or \"n\"")
    return Fraction(s)


def format_rational(x):
    """Inverse of parse_rational; Fraction.__str__ already emits p/q or n."""
    return str(Fraction(x))


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def zero_vector(n):
    return (Fraction(0),) * n


def vec(xs):
    return tuple(as_rational(x) for x in xs)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))

def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))

def vec_scale(c, a):
    c = as_rational(c)
    return tuple(c * x for x in a)

def is_zero_vector(a):
    return not any(a)


class Matrix:
    """Dense rows x cols matrix of Fractions, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_rational(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"entry count {len(entries)} does not match {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, row_lists, cols=None):
        rows = list(row_lists)
        if not rows:
            if cols is None:
                raise ValueError("cannot infer width of an empty matrix")
            return cls(0, cols, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if cols is not None and cols != width:
            raise ValueError(f"expected {cols} columns, got {width}")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [Fraction(1) if i == j else Fraction(0)
                          for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols)
                       for i in range(self.rows)])

    def apply(self, v):
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum((self.entries[base + j] * v[j]
                            for j in range(self.cols) if v[j]), Fraction(0)))
        return tuple(out)

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                entries.append(sum((a * b for a, b in zip(r, c) if a and b),
                                   Fraction(0)))
        return Matrix(self.rows, other.cols, entries)

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def scale(self, c):
        c = as_rational(c)
        return Matrix(self.rows, self.cols, [c * x for x in self.entries])

    def is_zero(self):
        return not any(self.entries)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(map(str, self.row(i)))
                         for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def rank(self):
        return len(rref(self)[1])

    def inverse(self):
        """Inverse via elimination on [self | I]; raises if singular."""
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        pivots = _rref_rows(aug, 2 * n)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(n, n, [aug[i][n + j] for i in range(n)
                             for j in range(n)])


def _rref_rows(rows, ncols):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        piv = prow[c]
        if piv != 1:
            inv = 1 / piv
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        # touching only the pivot row's nonzero tail keeps sparse inputs cheap
        nz = [j for j in range(c + 1, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                row[c] = Fraction(0)
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m):
    """Reduced row echelon form; returns (Matrix, pivot column tuple)."""
    rows = m.row_list()
    pivots = _rref_rows(rows, m.cols)
    return Matrix.from_rows(rows, cols=m.cols), tuple(pivots)


class Subspace:
    """Subspace of Q^n, basis stored as RREF rows (canonical)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, basis):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in basis))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_rows(cls, rows, ambient_dim):
        """Span of the given row vectors, canonicalized."""
        rows = [list(vec(r)) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("row length does not match ambient dimension")
        pivots = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, [tuple(r) for r in rows[:len(pivots)]])

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim,
                   Matrix.identity(ambient_dim).row_list())

    @property
    def dim(self):
        return len(self.basis)

    def _pivots(self):
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def reduce(self, v):
        """Residue of v after eliminating against the RREF basis."""
        v = list(vec(v))
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self._pivots()):
            f = v[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= f * row[j]
        return tuple(v)

    def contains(self, v):
        return is_zero_vector(self.reduce(v))

    def is_subspace_of(self, other):
        if self.ambient_dim != other.ambient_dim:
            return False
        return all(other.contains(row) for row in self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel(m):
    """Basis of {v : m v = 0} as a Subspace of Q^cols."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        vectors.append(v)
    return Subspace.from_rows(vectors, m.cols)


def image(m):
    """Column space of m as a Subspace of Q^rows."""
    return Subspace.from_rows([m.column(j) for j in range(m.cols)], m.rows)


def submatrix(m, row_indices, col_indices):
    return Matrix(len(row_indices), len(col_indices),
                  [m[i, j] for i in row_indices for j in col_indices])


def quotient_dim(big, small):
    """dim(big/small); raises unless small is contained in big."""
    if not small.is_subspace_of(big):
        raise ValueError("not a subspace")
    return big.dim - small.dim


def representatives_modulo(candidates, span):
    """Sublist of candidates whose residues extend span to span+candidates.

    Greedy in the given order, so canonical inputs give canonical
    representatives.
    """
    reps = []
    for row in candidates:
        if not span.contains(row):
            reps.append(tuple(row))
            span = Subspace.from_rows(list(span.basis) + [row],
                                      span.ambient_dim)
    return tuple(reps)


def express_in_rows(rows, target, ncols):
    """Coefficients x with sum x_i rows_i = target, or None if unsolvable.

    Unique when the rows are independent, which is the only way it is
    used here.
    """
    nrows = len(rows)
    aug = [[Fraction(rows[i][j]) for i in range(nrows)] + [Fraction(target[j])]
           for j in range(ncols)]
    pivots = _rref_rows(aug, nrows + 1)
    if nrows in pivots:
        return None
    coeffs = [Fraction(0)] * nrows
    for r, p in enumerate(pivots):
        coeffs[p] = aug[r][nrows]
    return tuple(coeffs)
