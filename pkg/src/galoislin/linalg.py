"""Dense exact matrices over a ground field or an extension field.

Entries are any objects supporting ``+ - * /`` and truthiness (zero is
falsy): ``Fraction``, :class:`~galoislin.scalars.PrimeResidue`, or
:class:`~galoislin.field.FieldElement`.  Elimination always takes the
first nonzero entry scanning down a column as pivot; exact arithmetic
needs nothing cleverer.
"""

from __future__ import annotations

from .errors import DimensionMismatch, Inconsistent, NotSquare, Singular


class Matrix:
    """An ``rows x cols`` matrix over a single coefficient field.

    ``field`` is any object with ``zero()`` and ``one()``; it is used only to
    manufacture constants, so callers may pass a ground field or an
    :class:`~galoislin.field.ExtensionField`.
    """

    __slots__ = ("cols", "entries", "field", "rows")

    def __init__(self, field, entries):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise DimensionMismatch("matrices must have at least one row and one column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    @classmethod
    def identity(cls, field, n: int) -> Matrix:
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> Matrix:
        return cls(field, [[field.zero()] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, field, columns) -> Matrix:
        columns = [list(c) for c in columns]
        return cls(field, [list(r) for r in zip(*columns)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> list:
        return list(self.entries[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> Matrix:
        return Matrix(self.field, [list(c) for c in zip(*self.entries)])

    def map(self, fn) -> Matrix:
        return Matrix(self.field, [[fn(x) for x in r] for r in self.entries])

    def minor(self, i: int, j: int) -> Matrix:
        """The submatrix with row ``i`` and column ``j`` deleted."""
        return Matrix(self.field, [r[:j] + r[j + 1:] for k, r in enumerate(self.entries) if k != i])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    __hash__ = None

    def __add__(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return Matrix(self.field, [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in subtraction")
        return Matrix(self.field, [[x - y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            ocols = other.columns()
            return Matrix(self.field, [[_dot(r, c, self.field) for c in ocols] for r in self.entries])
        vec = list(other)
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        return [_dot(r, vec, self.field) for r in self.entries]

    def scale(self, c) -> Matrix:
        return self.map(lambda x: c * x)

    def trace(self):
        if not self.is_square:
            raise NotSquare("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    # -- elimination -------------------------------------------------

    def det(self):
        """Determinant by Gaussian elimination, tracking row swaps for the sign."""
        if not self.is_square:
            raise NotSquare(f"det of a {self.rows}x{self.cols} matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        result = self.field.one()
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return self.field.zero()
            if p != c:
                a[c], a[p] = a[p], a[c]
                result = -result
            pivot = a[c][c]
            result = result * pivot
            inv = self.field.one() / pivot
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] * inv
                    ai, ac = a[i], a[c]
                    for j in range(c + 1, n):
                        if ac[j]:
                            ai[j] = ai[j] - f * ac[j]
        return result

    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and the pivot column indices."""
        a = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        one = self.field.one()
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if a[i][c]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = one / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.field, a), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list]:
        """Basis of the right kernel read off the reduced echelon form.

        One vector per free column ``f``: entry ``f`` is 1, other free
        entries are 0.
        """
        reduced, pivots = self.rref()
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for f in (c for c in range(self.cols) if c not in pivots):
            v = [zero] * self.cols
            v[f] = one
            for r, pc in enumerate(pivots):
                v[pc] = -reduced.entries[r][f]
            basis.append(v)
        return basis

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise NotSquare("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(self.field, [r + e for r, e in zip(self.entries, Matrix.identity(self.field, n).entries)])
        reduced, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise Singular("matrix is singular")
        return Matrix(self.field, [r[n:] for r in reduced.entries])

    def solve(self, rhs) -> list:
        """The unique solution of ``self @ x = rhs``."""
        rhs = list(rhs)
        if len(rhs) != self.rows:
            raise DimensionMismatch("right-hand side length does not match row count")
        aug = Matrix(self.field, [r + [b] for r, b in zip(self.entries, rhs)])
        reduced, pivots = aug.rref()
        if self.cols in pivots:
            raise Inconsistent("system has no solution")
        if len(pivots) < self.cols:
            raise Singular("system has more than one solution")
        return [reduced.entries[i][self.cols] for i in range(self.cols)]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.entries!r})"


def _dot(u, v, field):
    acc = field.zero()
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def det(m: Matrix):
    return m.det()


def rank(m: Matrix) -> int:
    return m.rank()


def kernel(m: Matrix) -> list[list]:
    return m.kernel()


def inverse(m: Matrix) -> Matrix:
    return m.inverse()


def solve(m: Matrix, rhs) -> list:
    return m.solve(rhs)
