"""Dense exact matrices over rational quaternions and complex rationals.

``QMatrix`` holds quaternion entries, ``CMatrix`` complex-rational entries;
a CMatrix embeds into a QMatrix with zero j,k parts.  Both share one
arithmetic core written for noncommutative entries: row operations multiply
from the left only, which is what keeps elimination valid over the
quaternions with the right-module convention.

The complex embedding sends A = A1 + A2*j to the 2n x 2n complex matrix
[[A1, A2], [-conj(A2), conj(A1)]].  Its determinant is a nonnegative
rational, computed exactly by Bareiss fraction-free elimination, and serves
as the determinant function on quaternionic matrices.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError, SingularError
from .scalar import (GR_ONE, GR_ZERO, Q_ONE, Q_ZERO, GaussianRational,
                     Quaternion)


class _Dense:
    """Shared implementation; subclasses pin the scalar zero/one."""

    __slots__ = ("n_rows", "n_cols", "entries")

    _szero = None
    _sone = None

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(row) for row in rows)
        if not entries or not entries[0]:
            raise ShapeError("matrix must have at least one row and column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "n_rows", len(entries))
        object.__setattr__(self, "n_cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None):
        n_cols = n_rows if n_cols is None else n_cols
        z = cls._szero
        return cls([[z] * n_cols for _ in range(n_rows)])

    @classmethod
    def identity(cls, n: int):
        z, o = cls._szero, cls._sone
        return cls([[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence):
        z = cls._szero
        n = len(values)
        return cls([[values[i] if i == j else z for j in range(n)]
                    for i in range(n)])

    @classmethod
    def scalar(cls, n: int, value):
        return cls.diagonal([value] * n)

    # -- structure ------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def transpose(self):
        return type(self)(
            [[self.entries[i][j] for i in range(self.n_rows)]
             for j in range(self.n_cols)])

    def map_entries(self, fn):
        return type(self)([[fn(x) for x in row] for row in self.entries])

    def __eq__(self, other) -> bool:
        return (type(self) is type(other)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((type(self).__name__, self.entries))

    @property
    def is_zero(self) -> bool:
        z = self._szero
        return all(x == z for row in self.entries for x in row)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        self._expect_same_shape(other)
        return type(self)(
            [[a + b for a, b in zip(ra, rb)]
             for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._expect_same_shape(other)
        return type(self)(
            [[a - b for a, b in zip(ra, rb)]
             for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map_entries(lambda x: -x)

    def __mul__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise ShapeError(
                f"cannot multiply {self.n_rows}x{self.n_cols} "
                f"by {other.n_rows}x{other.n_cols}")
        cols = other.transpose().entries
        z = self._szero
        out = []
        for row in self.entries:
            live = [(j, a) for j, a in enumerate(row) if not a.is_zero]
            out_row = []
            for col in cols:
                acc = z
                for j, a in live:
                    b = col[j]
                    if not b.is_zero:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return type(self)(out)

    def scale_left(self, s):
        return self.map_entries(lambda x: s * x)

    def scale_right(self, s):
        return self.map_entries(lambda x: x * s)

    def inverse(self):
        """Exact inverse by elimination with left-multiplying row operations."""
        if not self.is_square:
            raise ShapeError("only square matrices have inverses")
        n = self.n_rows
        z, o = self._szero, self._sone
        work = [list(row) + [o if i == j else z for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n)
                              if work[r][col] != z), None)
            if pivot_row is None:
                raise SingularError("matrix is singular")
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
            pinv = work[col][col].inverse()
            work[col] = [pinv * x for x in work[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = work[r][col]
                if factor == z:
                    continue
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return type(self)([row[n:] for row in work])

    def _expect_same_shape(self, other):
        if type(self) is not type(other):
            raise ShapeError(f"mixed matrix types {type(self).__name__} "
                             f"and {type(other).__name__}")
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeError("shape mismatch")

    def __str__(self) -> str:
        rows = [" ".join(str(x) for x in row) for row in self.entries]
        width = max(len(r) for r in rows)
        return "\n".join(r.ljust(width) for r in rows)


class CMatrix(_Dense):
    """Dense matrix over exact complex rationals."""

    _szero = GR_ZERO
    _sone = GR_ONE

    def conjugate(self) -> "CMatrix":
        return self.map_entries(lambda x: x.conjugate())

    def to_quaternion(self) -> "QMatrix":
        return QMatrix([[x.to_quaternion() for x in row]
                        for row in self.entries])

    def det_bareiss(self) -> GaussianRational:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ShapeError("determinant needs a square matrix")
        n = self.n_rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = GR_ONE
        for k in range(n - 1):
            if m[k][k].is_zero:
                swap = next((r for r in range(k + 1, n)
                             if not m[r][k].is_zero), None)
                if swap is None:
                    return GR_ZERO
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
                m[i][k] = GR_ZERO
            prev = m[k][k]
        det = m[n - 1][n - 1]
        return -det if sign < 0 else det


class QMatrix(_Dense):
    """Dense matrix over exact quaternions."""

    _szero = Q_ZERO
    _sone = Q_ONE

    @property
    def is_complex(self) -> bool:
        return all(x.is_complex for row in self.entries for x in row)

    def to_cmatrix(self) -> CMatrix:
        return CMatrix([[x.to_gaussian() for x in row]
                        for row in self.entries])

    def to_json(self) -> dict:
        return {"n": self.n_rows, "m": self.n_cols,
                "entries": [[x.to_json() for x in row]
                            for row in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "QMatrix":
        if (not isinstance(obj, dict)
                or not {"n", "m", "entries"} <= set(obj)):
            raise ValueError("not a matrix object")
        entries = obj["entries"]
        mat = cls([[Quaternion.from_json(x) for x in row] for row in entries])
        if (mat.n_rows, mat.n_cols) != (obj["n"], obj["m"]):
            raise ValueError("matrix dimensions disagree with entries")
        return mat


def block_diagonal(blocks: Sequence[QMatrix]) -> QMatrix:
    """Direct sum of square blocks."""
    total = sum(b.n_rows for b in blocks)
    placements = []
    off = 0
    for b in blocks:
        if not b.is_square:
            raise ShapeError("direct sum needs square blocks")
        placements.append((off, off, b))
        off += b.n_rows
    return place_blocks(total, placements)


def place_blocks(size: int,
                 placements: Iterable[tuple[int, int, QMatrix]]) -> QMatrix:
    """Write blocks into an otherwise zero size x size matrix."""
    grid = [[Q_ZERO] * size for _ in range(size)]
    for ri, ci, block in placements:
        for i, row in enumerate(block.entries):
            for j, x in enumerate(row):
                grid[ri + i][ci + j] = x
    return QMatrix(grid)


def phi_embed(a: QMatrix) -> CMatrix:
    """Complex embedding: A = A1 + A2 j maps to [[A1, A2], [-conj A2, conj A1]]."""
    a1 = [[None] * a.n_cols for _ in range(a.n_rows)]
    a2 = [[None] * a.n_cols for _ in range(a.n_rows)]
    for i, row in enumerate(a.entries):
        for j, x in enumerate(row):
            z1, z2 = x.complex_parts()
            a1[i][j] = z1
            a2[i][j] = z2
    top = [a1[i] + a2[i] for i in range(a.n_rows)]
    bottom = [[-z.conjugate() for z in a2[i]]
              + [z.conjugate() for z in a1[i]] for i in range(a.n_rows)]
    return CMatrix(top + bottom)


def qdet(a: QMatrix) -> Fraction:
    """Determinant of a quaternionic matrix: det of its complex embedding.

    Always an exact nonnegative rational.
    """
    if not a.is_square:
        raise ShapeError("determinant needs a square matrix")
    d = phi_embed(a).det_bareiss()
    assert d.im == 0, "embedding determinant must be real"
    assert d.re >= 0, "embedding determinant must be nonnegative"
    return d.re


def is_involution(g: QMatrix) -> bool:
    return g.is_square and g * g == QMatrix.identity(g.n_rows)


def is_skew_involution(g: QMatrix) -> bool:
    return g.is_square and g * g == -QMatrix.identity(g.n_rows)


def conjugacy_residual(g: QMatrix, a: QMatrix, b: QMatrix) -> QMatrix:
    """Residual g*A - B*g; zero iff g A g^{-1} = B (g must be invertible)."""
    if not (g.is_square and a.is_square and b.is_square):
        raise ShapeError("conjugacy residual needs square matrices")
    if not g.n_rows == a.n_rows == b.n_rows:
        raise ShapeError("conjugacy residual needs equal sizes")
    if qdet(g) == 0:
        raise SingularError("conjugating matrix is singular")
    return g * a - b * g


def toeplitz_build(coeffs: Sequence[Quaternion]) -> QMatrix:
    """Upper-triangular Toeplitz matrix from diagonal coefficients.

    Entry (i, j) is coeffs[j - i] for j >= i; these are exactly the matrices
    commuting with a single nilpotent Jordan block.
    """
    n = len(coeffs)
    return QMatrix([[coeffs[j - i] if j >= i else Q_ZERO
                     for j in range(n)] for i in range(n)])
