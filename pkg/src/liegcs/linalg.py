"""Exact scalar arithmetic and dense linear algebra over rationals.

Rationals are plain ``fractions.Fraction`` (always lowest terms, positive
denominator).  ``GaussianRational`` adjoins i for complexified computations.
``Matrix`` is a small dense matrix over any commutative ring whose elements
interoperate with Python ints (Fraction, GaussianRational or the sparse
polynomials from :mod:`liegcs.poly`).  Everything here is exact; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

Q = Fraction


def qstr(x) -> str:
    """Serialize a rational as "p/q" or "p"."""
    return str(Fraction(x))


def qparse(s: str) -> Fraction:
    """Parse "p/q" / "p" (optional leading minus) into a Fraction."""
    return Fraction(s.strip())


class GaussianRational:
    """Element a + b*i with rational a, b.

    Conjugation is an involutive field automorphism; division is exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def of(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(x, 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.of(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.of(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


GAUSS_I = GaussianRational(0, 1)


class Matrix:
    """Dense matrix over a commutative ring.

    Entries must support +, -, * among themselves and with ints; field
    operations (rref, det, inverse) additionally need / and truthiness.
    Instances are treated as immutable: all operations return new matrices.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        m = Matrix([[Fraction(0)] * cols for _ in range(rows)])
        m.cols = cols  # preserved even when rows == 0
        return m

    @staticmethod
    def identity(n: int, one=Fraction(1)) -> "Matrix":
        m = Matrix.zero(n, n)
        for i in range(n):
            m.data[i][i] = one
        return m

    @staticmethod
    def from_columns(columns: Sequence[Sequence]) -> "Matrix":
        cols = len(columns)
        rows = len(columns[0]) if cols else 0
        return Matrix([[columns[j][i] for j in range(cols)] for i in range(rows)])

    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.data[i][j] == other.data[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._shape_check(other)
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.rows}x{self.cols} * "
                                 f"{other.rows}x{other.cols}")
            ot = other.transpose()
            return Matrix([[_dot(row, col) for col in ot.data] for row in self.data])
        return Matrix([[a * other for a in row] for row in self.data])

    def __rmul__(self, other):
        return Matrix([[other * a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        return Matrix([[a * c for a in row] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [_dot(row, vec) for row in self.data]

    def map(self, fn: Callable) -> "Matrix":
        return Matrix([[fn(a) for a in row] for row in self.data])

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix([row[c0:c1] for row in self.data[r0:r1]])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix([r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def is_skew(self) -> bool:
        return (self.rows == self.cols and
                all(self.data[i][j] == -self.data[j][i]
                    for i in range(self.rows) for j in range(i, self.cols)))

    def is_symmetric(self) -> bool:
        return (self.rows == self.cols and
                all(self.data[i][j] == self.data[j][i]
                    for i in range(self.rows) for j in range(i + 1, self.cols)))

    def tolist(self) -> List[list]:
        return [list(row) for row in self.data]

    def _shape_check(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def rref(self) -> Tuple[int, "Matrix", List[int]]:
        """Row-reduce over a field.  Returns (rank, rref matrix, pivot cols)."""
        m = [list(row) for row in self.data]
        rows, cols = self.rows, self.cols
        pivots: List[int] = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv_p = _field_inv(m[r][c])
            m[r] = [a * inv_p for a in m[r]]
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return r, Matrix(m), pivots

    def rank(self) -> int:
        return self.rref()[0]

    def kernel_basis(self) -> List[list]:
        """Exact basis of the null space, one vector per free column."""
        rank, R, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = _one_like(self.data[0][0] if self.rows and self.cols else Fraction(1))
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][free]
            basis.append(v)
        return basis

    def det(self):
        """Determinant over a field, by fraction-producing elimination."""
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        n = self.rows
        m = [list(row) for row in self.data]
        det = _one_like(m[0][0]) if n else Fraction(1)
        sign = 1
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                return Fraction(0) * det
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                sign = -sign
            det = det * m[c][c]
            inv_p = _field_inv(m[c][c])
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv_p
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det if sign == 1 else -det

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = self.hstack(Matrix.identity(n, one=_one_like(self.data[0][0])))
        rank, R, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return R.block(0, n, n, 2 * n)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in row) for row in self.data)
        return f"Matrix[{body}]"


def _dot(xs: Sequence, ys: Sequence):
    acc = 0
    for a, b in zip(xs, ys):
        acc = acc + a * b
    return acc


def _field_inv(x):
    if isinstance(x, GaussianRational):
        return x.inverse()
    return 1 / Fraction(x)


def _one_like(x):
    if isinstance(x, GaussianRational):
        return GaussianRational(1, 0)
    return Fraction(1)


def rref(matrix: Matrix) -> Tuple[int, Matrix, List[list]]:
    """Rank, reduced row echelon form and exact kernel basis of a matrix."""
    rank, R, _ = matrix.rref()
    return rank, R, matrix.kernel_basis()


def pfaffian(matrix: Matrix):
    """Pfaffian of a skew-symmetric matrix of even order.

    Recursive expansion along the first row, valid over any commutative
    ring (entries may be polynomials).  pfaffian**2 == det.
    """
    n = matrix.rows
    if n != matrix.cols:
        raise ValueError("pfaffian needs a square matrix")
    if n % 2 != 0:
        raise ValueError("pfaffian needs even order")
    if not matrix.is_skew():
        raise ValueError("pfaffian needs a skew-symmetric matrix")
    return _pf(matrix.tolist())


def _pf(m: List[list]):
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 2:
        return m[0][1]
    acc = 0
    for k in range(1, n):
        a = m[0][k]
        if not a:
            continue
        keep = [i for i in range(1, n) if i != k]
        sub = [[m[i][j] for j in keep] for i in keep]
        term = a * _pf(sub)
        acc = acc + term if k % 2 == 1 else acc - term
    return acc


def gauss_matrix(matrix: Matrix) -> Matrix:
    """Lift a rational matrix entrywise into Q(i)."""
    return matrix.map(GaussianRational.of)
