"""Dense matrices over exact rationals.

Scalars are ``fractions.Fraction`` throughout: always reduced, positive
denominator, structural equality equals mathematical equality.  Matrices are
small (quotient matrices and distributions), so dense row-major storage and
schoolbook algorithms are the right tool; nothing here ever touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError

Rational = Fraction


def parse_rational(value) -> Fraction:
    """Coerce a JSON-style scalar (int or "p/q" string) to a Fraction.

    Floats and bools are rejected: every value in this package is exact.
    """
    if isinstance(value, bool):
        raise ShapeError(f"boolean is not a rational value: {value!r}")
    if isinstance(value, float):
        raise ShapeError(f"floating point is not accepted: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ShapeError(f"cannot interpret {value!r} as a rational")


def rat_str(x: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    return str(x)


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence]):
        rows = [tuple(parse_rational(x) for x in row) for row in data]
        if not rows:
            raise ShapeError("matrix needs at least one row")
        ncols = len(rows[0])
        if ncols == 0:
            raise ShapeError("matrix needs at least one column")
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        self.rows = len(rows)
        self.cols = ncols
        self._data = tuple(rows)

    @staticmethod
    def zeros(rows: int, cols: int) -> RatMatrix:
        zero = Fraction(0)
        return RatMatrix([[zero] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> RatMatrix:
        return RatMatrix(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def row_vector(entries: Iterable) -> RatMatrix:
        return RatMatrix([list(entries)])

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash(self._data)

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(f"cannot add {self.shape()} and {other.shape()}")
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)]
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(f"cannot subtract {other.shape()} from {self.shape()}")
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)]
        )

    def __neg__(self) -> RatMatrix:
        return RatMatrix([[-a for a in row] for row in self._data])

    def scale(self, c) -> RatMatrix:
        c = parse_rational(c)
        return RatMatrix([[c * a for a in row] for row in self._data])

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape()} by {other.shape()}")
        cols = list(zip(*other._data))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def transpose(self) -> RatMatrix:
        return RatMatrix(list(zip(*self._data)))

    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(a == 0 for row in self._data for a in row)

    def to_strings(self) -> list[list[str]]:
        return [[rat_str(a) for a in row] for row in self._data]

    def __str__(self) -> str:
        return "\n".join(" ".join(rat_str(a) for a in row) for row in self._data)

    def __repr__(self) -> str:
        return f"RatMatrix({[list(map(str, row)) for row in self._data]})"


def from_json(rows) -> RatMatrix:
    """Build a matrix from a JSON 2D array of ints / "p/q" strings."""
    return RatMatrix(rows)


def tensor(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Kronecker product.

    Row (i', i'') of the result is flattened as i' * b.rows + i'' and column
    (j', j'') as j' * b.cols + j'', so entry[(i'i''), (j'j'')] = a[i',j'] * b[i'',j''].
    The mixed-product law tensor(X,Y) @ tensor(Z,V) == tensor(X@Z, Y@V) holds
    for conformable shapes.
    """
    out = []
    for arow in a:
        for brow in b:
            out.append([x * y for x in arow for y in brow])
    return RatMatrix(out)


def mat_poly_eval(coeffs: Sequence, m: RatMatrix) -> RatMatrix:
    """Evaluate sum(coeffs[i] * m**i) exactly by Horner's rule.

    ``coeffs`` is constant-term first; ``m`` must be square.
    """
    if not m.is_square():
        raise ShapeError(f"polynomial evaluation needs a square matrix, got {m.shape()}")
    cs = [parse_rational(c) for c in coeffs]
    if not cs:
        return RatMatrix.zeros(m.rows, m.rows)
    ident = RatMatrix.identity(m.rows)
    acc = ident.scale(cs[-1])
    for c in reversed(cs[:-1]):
        acc = acc @ m + ident.scale(c)
    return acc


def row_poly_eval(row, coeffs: Sequence, m: RatMatrix) -> RatMatrix:
    """The single row ``row @ mat_poly_eval(coeffs, m)`` without building the
    full matrix polynomial; quadratic instead of cubic per Horner step."""
    if not m.is_square():
        raise ShapeError(f"polynomial evaluation needs a square matrix, got {m.shape()}")
    vec = list(row.row(0)) if isinstance(row, RatMatrix) else [parse_rational(x) for x in row]
    if len(vec) != m.rows:
        raise ShapeError(f"row of length {len(vec)} does not fit {m.shape()}")
    cs = [parse_rational(c) for c in coeffs]
    if not cs:
        return RatMatrix.zeros(1, m.rows)
    cols = list(zip(*m._data))
    acc = [cs[-1] * x for x in vec]
    for c in reversed(cs[:-1]):
        acc = [sum(a * b for a, b in zip(acc, col)) + c * x for col, x in zip(cols, vec)]
    return RatMatrix([acc])


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Solve a @ x = b exactly for square full-rank ``a`` (Gaussian elimination)."""
    if not a.is_square():
        raise ShapeError(f"solve needs a square matrix, got {a.shape()}")
    if a.rows != b.rows:
        raise ShapeError(f"incompatible right-hand side {b.shape()} for {a.shape()}")
    n = a.rows
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ShapeError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return RatMatrix([row[n:] for row in aug])
