from dataclasses import dataclass
from typing import Tuple

from src.errors import InvalidInputError, ShapeError


def _as_int(value):
    # bool is an int subclass; a vertex written as [true, 0, 1] is a typo, not a point
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"expected an integer coordinate, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class _Vector3:
    coords: Tuple[int, int, int]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != 3:
            raise InvalidInputError(f"expected 3 coordinates, got {len(coords)}")
        object.__setattr__(self, 'coords', tuple(_as_int(c) for c in coords))

    @classmethod
    def of(cls, x, y, z):
        return cls((x, y, z))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def scale(self, k):
        return type(self)(tuple(k * a for a in self.coords))

    def is_zero(self):
        return not any(self.coords)

    def to_list(self):
        return list(self.coords)

    def __repr__(self):
        return f"{type(self).__name__}{self.coords}"


class LatticePoint(_Vector3):
    """Element of N = Z^3"""


class DualVector(_Vector3):
    """Element of M = Hom(N, Z)"""

    def pair(self, point):
        return sum(a * b for a, b in zip(self.coords, point.coords))

    def as_point(self):
        return LatticePoint(self.coords)


def pairing(d, p):
    """Exact duality pairing <d, p>"""
    return d.pair(p)


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(_as_int(e) for e in self.entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows * self.cols:
            raise ShapeError(f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [tuple(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), n_cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        return cls.from_rows(zip(*columns)) if columns else cls(0, 0, ())

    @classmethod
    def identity(cls, size):
        return cls.from_rows([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls.from_rows([
            [values[i] if i == j and i < len(values) else 0 for j in range(cols)]
            for i in range(rows)
        ])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix.from_columns(self.to_rows()) if self.rows else IntMatrix(self.cols, 0, ())

    def diagonal_entries(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return IntMatrix.from_rows([
            [sum(self[i, k] * other[k, j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]) if self.rows else IntMatrix(0, other.cols, ())

    def apply(self, vector):
        """Matrix-vector product; keeps the vector's type for 3x3 maps of N or M"""
        values = tuple(vector)
        if len(values) != self.cols:
            raise ShapeError(f"cannot apply {self.shape} matrix to a {len(values)}-vector")
        image = tuple(sum(self[i, k] * values[k] for k in range(self.cols)) for i in range(self.rows))
        if isinstance(vector, (LatticePoint, DualVector)) and self.rows == 3:
            return type(vector)(image)
        return image


@dataclass(frozen=True)
class SnfDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal"""
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self):
        return self.S.diagonal_entries()

    @property
    def rank(self):
        return sum(1 for d in self.invariant_factors if d != 0)
