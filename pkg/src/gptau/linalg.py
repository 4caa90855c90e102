"""Dense exact matrices over QQ or GF(p), with the kernels everything
else reduces to: RREF, rank, null space, image, solving, Kronecker
products.

Matrices are immutable by convention; 0 x n and n x 0 shapes are legal
and behave as empty maps.  Reduction is plain Gaussian elimination to
reduced row echelon form with first-nonzero pivoting, so all outputs
are deterministic.
"""

from __future__ import annotations

from .field import FieldSpec, QQ


class Matrix:
    __slots__ = ("field", "rows", "cols", "data", "_rref")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero()
            self.data = [[z] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("matrix data shape mismatch")
            self.data = [[field.of(x) for x in row] for row in data]
        self._rref = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zeros(field, rows, cols):
        return Matrix(field, rows, cols)

    @staticmethod
    def identity(field, n):
        m = Matrix(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @staticmethod
    def from_rows(field, rows):
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        return Matrix(field, nr, nc, rows)

    @staticmethod
    def from_cols(field, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("need nrows for an empty column list")
            return Matrix(field, nrows, 0)
        nr = len(cols[0])
        m = Matrix(field, nr, len(cols))
        for j, c in enumerate(cols):
            for i in range(nr):
                m.data[i][j] = field.of(c[i])
        return m

    def copy(self):
        m = Matrix(self.field, self.rows, self.cols)
        m.data = [row[:] for row in self.data]
        return m

    # -- basic algebra ------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        m = Matrix(self.field, self.rows, self.cols)
        m.data = [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)
        ]
        return m

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        m = Matrix(self.field, self.rows, self.cols)
        m.data = [[-a for a in row] for row in self.data]
        return m

    def scale(self, c):
        c = self.field.of(c)
        m = Matrix(self.field, self.rows, self.cols)
        m.data = [[c * a for a in row] for row in self.data]
        return m

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(
                "shape mismatch in product: %dx%d @ %dx%d"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        out = Matrix(self.field, self.rows, other.cols)
        if self.cols == 0:
            return out
        ot = other.data
        for i in range(self.rows):
            srow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                s = srow[k]
                if not s:
                    continue
                trow = ot[k]
                for j in range(other.cols):
                    t = trow[j]
                    if t:
                        orow[j] = orow[j] + s * t
        return out

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.data:
            s = self.field.zero()
            for a, x in zip(row, v):
                if a and x:
                    s = s + a * x
            out.append(s)
        return out

    def transpose(self):
        m = Matrix(self.field, self.cols, self.rows)
        m.data = [list(col) for col in zip(*self.data)] if self.rows else [
            [] for _ in range(self.cols)
        ]
        if self.rows == 0:
            m.data = [[] for _ in range(self.cols)]
        return m

    def kron(self, other):
        """Kronecker product, row-major block convention:
        entry ((i*other.rows + k), (j*other.cols + l)) = a[i][j] * b[k][l]."""
        m = Matrix(self.field, self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.data[i][j]
                if not a:
                    continue
                for k in range(other.rows):
                    orow = other.data[k]
                    mrow = m.data[i * other.rows + k]
                    base = j * other.cols
                    for l in range(other.cols):
                        b = orow[l]
                        if b:
                            mrow[base + l] = a * b
        return m

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        m = Matrix(self.field, self.rows, self.cols + other.cols)
        m.data = [r1 + r2 for r1, r2 in zip(self.data, other.data)]
        return m

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        m = Matrix(self.field, self.rows + other.rows, self.cols)
        m.data = [row[:] for row in self.data] + [row[:] for row in other.data]
        return m

    def col(self, j):
        return [row[j] for row in self.data]

    def select_cols(self, js):
        m = Matrix(self.field, self.rows, len(js))
        m.data = [[row[j] for j in js] for row in self.data]
        return m

    def is_zero(self):
        return all(not a for row in self.data for a in row)

    def entries(self):
        for row in self.data:
            yield from row

    # -- elimination --------------------------------------------------

    def rref(self):
        """Reduced row echelon form.  Returns (R, pivot_columns)."""
        if self._rref is not None:
            return self._rref
        R = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r >= self.rows:
                break
            pr = None
            for i in range(r, self.rows):
                if R[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            R[r], R[pr] = R[pr], R[r]
            inv = self.field.one() / R[r][c]
            R[r] = [a * inv for a in R[r]]
            for i in range(self.rows):
                if i != r and R[i][c]:
                    f = R[i][c]
                    R[i] = [a - f * b for a, b in zip(R[i], R[r])]
            pivots.append(c)
            r += 1
        Rm = Matrix(self.field, self.rows, self.cols)
        Rm.data = R
        self._rref = (Rm, tuple(pivots))
        return self._rref

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Columns span the null space {x : self @ x = 0}."""
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        cols = []
        zero, one = self.field.zero(), self.field.one()
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for i, pc in enumerate(pivots):
                v[pc] = -R.data[i][fc]
            cols.append(v)
        return Matrix.from_cols(self.field, cols, nrows=self.cols)

    def image_basis(self):
        """Columns form a basis of the column space (original pivot columns)."""
        _, pivots = self.rref()
        return self.select_cols(list(pivots))

    def solve(self, b):
        """One solution x of self @ x = b, or None if b is outside the image."""
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        b = [self.field.of(x) for x in b]
        aug = Matrix(self.field, self.rows, self.cols + 1)
        aug.data = [row[:] + [bi] for row, bi in zip(self.data, b)]
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = [self.field.zero()] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = R.data[i][self.cols]
        return x

    def solve_matrix(self, B):
        """X with self @ X = B, or None.  Solved column by column."""
        cols = []
        for j in range(B.cols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_cols(self.field, cols, nrows=self.cols)

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = self.hstack(Matrix.identity(self.field, self.rows))
        R, pivots = aug.rref()
        if list(pivots[: self.rows]) != list(range(self.rows)):
            return None
        return R.select_cols(list(range(self.rows, 2 * self.rows)))

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.rows, self.cols, self.field)


def rank(m: Matrix) -> int:
    return m.rank()


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    return a.kron(b)


def solve_kernel_image(m: Matrix):
    """(kernel basis, image basis, solver).  The solver returns a
    particular solution for a target vector, or None when the target is
    outside the image."""
    return m.kernel_basis(), m.image_basis(), m.solve


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v):
    return all(not a for a in v)


def span_contains(basis: Matrix, v) -> bool:
    """Is v in the column span of basis?"""
    return basis.solve(v) is not None


def intersect_colspaces(a: Matrix, b: Matrix) -> Matrix:
    """Basis of the intersection of two column spaces (same ambient dim)."""
    if a.rows != b.rows:
        raise ValueError("ambient dimension mismatch")
    k = a.hstack(b).kernel_basis()
    cols = []
    for j in range(k.cols):
        coeffs = k.col(j)[: a.cols]
        cols.append(a.mul_vec(coeffs))
    return Matrix.from_cols(a.field, cols, nrows=a.rows).image_basis()
