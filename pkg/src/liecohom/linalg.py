"""Exact linear algebra over the Gaussian rationals.

Everything here is deterministic: row reduction picks the first nonzero
pivot, so echelon bases come out in a canonical form (RREF is unique),
and Subspace equality is literal row equality.  Sizes in this engine are
tiny (at most C(4,2)^2 = 36 columns), so no pivoting heuristics are needed.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .scalars import ONE, ZERO, Scalar

Vector = tuple[Scalar, ...]


def vec(values) -> Vector:
    return tuple(Scalar.coerce(v) for v in values)


def zero_vector(k: int) -> Vector:
    return tuple([ZERO] * k)


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    c = Scalar.coerce(c)
    return tuple(c * x for x in a)


def vec_is_zero(a: Vector) -> bool:
    return all(not x for x in a)


class Matrix:
    """A dense exact matrix with an explicit shape (rows may be empty)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        rows = [tuple(Scalar.coerce(x) for x in row) for row in rows]
        if rows:
            ncols_found = len(rows[0])
            if any(len(r) != ncols_found for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != ncols_found:
                raise ValueError("ncols does not match row length")
            ncols = ncols_found
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit ncols")
        self.rows = tuple(rows)
        self.nrows = len(rows)
        self.ncols = ncols

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @staticmethod
    def identity(k: int) -> "Matrix":
        return Matrix(
            [[ONE if i == j else ZERO for j in range(k)] for i in range(k)], ncols=k
        )

    @staticmethod
    def from_columns(cols: Sequence[Vector], nrows: int) -> "Matrix":
        return Matrix(
            [[col[i] for col in cols] for i in range(nrows)], ncols=len(cols)
        )

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def conj_transpose(self) -> "Matrix":
        return Matrix(
            [
                [self.rows[i][j].conjugate() for i in range(self.nrows)]
                for j in range(self.ncols)
            ],
            ncols=self.nrows,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.nrows):
            row = []
            left = self.rows[i]
            for j in range(other.ncols):
                acc = ZERO
                for k in range(self.ncols):
                    x = left[k]
                    if x:
                        y = other.rows[k][j]
                        if y:
                            acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out, ncols=other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(
            [vec_add(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = Scalar.coerce(c)
        return Matrix([[c * x for x in row] for row in self.rows], ncols=self.ncols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match ncols")
        return tuple(
            sum((row[k] * v[k] for k in range(self.ncols) if v[k]), ZERO)
            for row in self.rows
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def vstack(mats: Sequence[Matrix]) -> Matrix:
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise ValueError("vstack needs equal ncols")
    rows: list[Sequence] = []
    for m in mats:
        rows.extend(m.rows)
    return Matrix(rows, ncols=ncols)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise ValueError("hstack needs equal nrows")
    rows = []
    for i in range(nrows):
        row: list[Scalar] = []
        for m in mats:
            row.extend(m.rows[i])
        rows.append(row)
    return Matrix(rows, ncols=sum(m.ncols for m in mats))


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting; returns
    (canonical RREF, pivot column indices)."""
    rows = [list(r) for r in matrix.rows]
    nrows, ncols = matrix.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(rows, ncols=ncols), pivots


def rank(matrix: Matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Matrix) -> list[Vector]:
    """Deterministic basis of the null space (one vector per free column)."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(matrix.ncols) if c not in pivot_set]
    out = []
    for f in free:
        v = [ZERO] * matrix.ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced.rows[r][f]
        out.append(tuple(v))
    return out


def column_space_basis(matrix: Matrix) -> list[Vector]:
    """Echelonized basis of the column space."""
    reduced, pivots = rref(matrix.transpose())
    return [reduced.rows[r] for r in range(len(pivots))]


def solve(matrix: Matrix, b: Vector):
    """One exact solution of M x = b with free variables set to 0, or None."""
    if len(b) != matrix.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = hstack([matrix, Matrix([[x] for x in b], ncols=1) if b else Matrix([], ncols=1)])
    if matrix.nrows == 0:
        return zero_vector(matrix.ncols)
    reduced, pivots = rref(aug)
    for r in range(len(pivots)):
        if pivots[r] == matrix.ncols:
            return None  # pivot in the augmented column: inconsistent
    x = [ZERO] * matrix.ncols
    for r, c in enumerate(pivots):
        x[c] = reduced.rows[r][matrix.ncols]
    return tuple(x)


class Subspace:
    """A subspace of Scalar^ambient held as canonical echelon rows."""

    __slots__ = ("ambient", "rows", "_pivots")

    def __init__(self, ambient: int, vectors: Sequence[Vector] = ()):
        self.ambient = ambient
        if vectors:
            reduced, pivots = rref(Matrix(list(vectors), ncols=ambient))
            self.rows = tuple(reduced.rows[: len(pivots)])
            self._pivots = tuple(pivots)
        else:
            self.rows = ()
            self._pivots = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> tuple[Vector, ...]:
        return self.rows

    def reduce(self, v: Vector) -> Vector:
        """Residue of v after elimination against the echelon basis."""
        v = list(v)
        for row, c in zip(self.rows, self._pivots):
            if v[c]:
                factor = v[c]
                v = [x - factor * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other: "Subspace"):
        """(True, None) or (False, witness vector in other but not self)."""
        for v in other.rows:
            if not self.contains(v):
                return False, v
        return True, None

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient})"


def quotient_representatives(
    numerator: Subspace, denominator: Subspace
) -> list[Vector]:
    """Vectors from the numerator's echelon basis completing the denominator.

    Raises PreconditionError (with a witness) if the denominator is not
    contained in the numerator.
    """
    from .errors import PreconditionError

    ok, witness = numerator.contains_subspace(denominator)
    if not ok:
        raise PreconditionError(
            f"denominator is not contained in numerator; witness {witness}"
        )
    reps = []
    current = denominator
    for v in numerator.rows:
        if not current.contains(v):
            reps.append(v)
            current = Subspace(numerator.ambient, list(current.rows) + [v])
    return reps


def kernel(matrix: Matrix) -> Subspace:
    """Null space as a Subspace of the source coordinates."""
    return Subspace(matrix.ncols, kernel_basis(matrix))


def image(matrix: Matrix) -> Subspace:
    """Column space as a Subspace of the target coordinates."""
    return Subspace(matrix.nrows, [matrix.column(j) for j in range(matrix.ncols)])


def quotient_dim(
    numerator: Subspace, denominator: Subspace
) -> tuple[int, list[Vector]]:
    """Dimension of numerator/denominator plus completing representatives."""
    reps = quotient_representatives(numerator, denominator)
    return numerator.dim - denominator.dim, reps


def matrix_of_map(
    func: Callable[[int], Vector], ncols: int, nrows: int
) -> Matrix:
    """Matrix whose j-th column is func(j) (image of the j-th basis vector)."""
    cols = [func(j) for j in range(ncols)]
    return Matrix.from_columns(cols, nrows=nrows) if ncols else Matrix.zeros(nrows, 0)
