"""Exact dense matrices over Q (Gauss-Jordan elimination, no floating point)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DependentBasis
from .exactnum import as_rational, format_rational


class QMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(as_rational(a) for a in r) for r in rows)
        if len({len(r) for r in self.rows}) > 1:
            raise ValueError("matrix rows must all have the same length")

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> QMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> QMatrix:
        return QMatrix(zip(*self.rows)) if self.rows else QMatrix([])

    def __eq__(self, other):
        if isinstance(other, QMatrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == QMatrix(other).rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return QMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows])

    def __sub__(self, other: QMatrix) -> QMatrix:
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def vecmul(self, v: Sequence) -> tuple:
        """Row vector times matrix."""
        n, m = self.shape
        return tuple(sum((v[i] * self.rows[i][j] for i in range(n)), Fraction(0)) for j in range(m))

    def rank(self) -> int:
        return len(_rref(self.rows)[1])

    def inverse(self) -> QMatrix:
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices are invertible")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        red, pivots = _rref(aug, ncols=n)
        if len(pivots) < n:
            raise DependentBasis("matrix is singular")
        return QMatrix(r[n:] for r in red)

    def __str__(self):
        return "\n".join(" ".join(format_rational(a) for a in r) for r in self.rows)

    def __repr__(self):
        return f"QMatrix({[[format_rational(a) for a in r] for r in self.rows]})"


def _rref(rows, ncols=None):
    """Reduced row echelon form; pivots are searched in the first ``ncols`` columns."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots
