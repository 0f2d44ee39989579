"""
Exact dense matrices over `dquiver.field` fields and the block-labeled
helpers the rank functions are assembled from.

Row vectors are multiplied on the right, so a matrix over an arrow a has
d(ta) rows and d(ha) columns.
"""

import logging

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

from dquiver.error import LabelError, ShapeError, SingularMatrixError
from dquiver.field import QQ, Field, PrimeField, Rationals, Scalar


log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    """
    An immutable rows x cols matrix stored row-major.

    Examples:
        >>> m = ExactMatrix.from_rows([[1, 2], [3, 4]])
        >>> m.shape
        (2, 2)
        >>> m.transpose().to_json()
        [[1, 3], [2, 4]]
        >>> (m @ ExactMatrix.identity(2)) == m
        True
        >>> ExactMatrix.zeros(0, 5).shape
        (0, 5)
    """

    rows: int
    cols: int
    entries: Tuple[Scalar, ...]
    field: Field = QQ

    def __post_init__(self):

        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative shape {self.rows}x{self.cols}")

        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ,
                  cols: Optional[int] = None) -> 'ExactMatrix':
        """
        Build a matrix from nested sequences, coercing every entry.

        :param rows: The rows of the matrix.
        :param field: The field the entries are read into.
        :param cols: Column count, only needed when there are no rows.
        """

        rows = [list(r) for r in rows]

        if cols is None:
            cols = len(rows[0]) if rows else 0

        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ShapeError(f"row {i} has {len(r)} entries, expected {cols}")

        entries = tuple(field.coerce(x) for r in rows for x in r)
        return cls(len(rows), cols, entries, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> 'ExactMatrix':
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> 'ExactMatrix':
        zero, one = field.zero, field.one
        entries = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(n, n, entries, field)

    @classmethod
    def antidiagonal(cls, n: int, field: Field = QQ) -> 'ExactMatrix':
        """
        The matrix J with ones along the antidiagonal.

        >>> ExactMatrix.antidiagonal(3).to_json()
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
        """
        zero, one = field.zero, field.one
        entries = tuple(one if i + j == n - 1 else zero for i in range(n) for j in range(n))
        return cls(n, n, entries, field)

    @classmethod
    def random(cls, rows: int, cols: int, rng, field: Field = QQ) -> 'ExactMatrix':
        entries = tuple(field.random_element(rng) for _ in range(rows * cols))
        return cls(rows, cols, entries, field)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_json(self) -> List[list]:
        to_json = self.field.to_json
        return [[to_json(x) for x in self.row(i)] for i in range(self.rows)]

    def transpose(self) -> 'ExactMatrix':
        entries = tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        return ExactMatrix(self.cols, self.rows, entries, self.field)

    @property
    def T(self) -> 'ExactMatrix':
        return self.transpose()

    def _check_field(self, other: 'ExactMatrix'):
        if other.field != self.field:
            raise ShapeError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':

        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")

        norm = self.field.normalize
        zero = self.field.zero
        columns = [other.entries[j::other.cols] for j in range(other.cols)]

        entries = []
        for i in range(self.rows):
            r = self.row(i)
            for c in columns:
                entries.append(norm(sum((a * b for a, b in zip(r, c) if a and b), zero)))

        return ExactMatrix(self.rows, other.cols, tuple(entries), self.field)

    def __add__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        norm = self.field.normalize
        entries = tuple(norm(a + b) for a, b in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, entries, self.field)

    def __neg__(self) -> 'ExactMatrix':
        return self.scale(-1)

    def __sub__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        return self + (-other)

    def scale(self, c) -> 'ExactMatrix':
        norm = self.field.normalize
        c = self.field.coerce(c)
        return ExactMatrix(self.rows, self.cols, tuple(norm(c * x) for x in self.entries), self.field)

    def submatrix(self, row_start: int, row_stop: int,
                  col_start: int, col_stop: int) -> 'ExactMatrix':

        rows = range(row_start, row_stop)
        cols = range(col_start, col_stop)
        entries = tuple(self[i, j] for i in rows for j in cols)
        return ExactMatrix(len(rows), len(cols), entries, self.field)

    def select(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> 'ExactMatrix':
        entries = tuple(self[i, j] for i in row_indices for j in col_indices)
        return ExactMatrix(len(row_indices), len(col_indices), entries, self.field)

    def with_block(self, row_start: int, col_start: int, block: 'ExactMatrix') -> 'ExactMatrix':
        """
        Copy of this matrix with `block` written at (row_start, col_start).
        """

        if row_start + block.rows > self.rows or col_start + block.cols > self.cols:
            raise ShapeError(f"block {block.shape} does not fit at ({row_start}, {col_start})")

        entries = list(self.entries)
        for i in range(block.rows):
            offset = (row_start + i) * self.cols + col_start
            entries[offset:offset + block.cols] = block.row(i)

        return ExactMatrix(self.rows, self.cols, tuple(entries), self.field)


def hstack(*blocks: ExactMatrix) -> ExactMatrix:

    if not blocks:
        raise ShapeError("nothing to stack")

    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError(f"row counts differ: {[b.rows for b in blocks]}")

    entries = tuple(x for i in range(rows) for b in blocks for x in b.row(i))
    return ExactMatrix(rows, sum(b.cols for b in blocks), entries, blocks[0].field)


def vstack(*blocks: ExactMatrix) -> ExactMatrix:

    if not blocks:
        raise ShapeError("nothing to stack")

    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ShapeError(f"column counts differ: {[b.cols for b in blocks]}")

    entries = tuple(x for b in blocks for x in b.entries)
    return ExactMatrix(sum(b.rows for b in blocks), cols, entries, blocks[0].field)


def block(grid: Sequence[Sequence[ExactMatrix]]) -> ExactMatrix:
    """
    Assemble a block matrix; every block row must agree on heights and every
    block column on widths, zero-size blocks included.
    """
    return vstack(*(hstack(*row) for row in grid))


def block_diag(*blocks: ExactMatrix, field: Field = None) -> ExactMatrix:
    """
    >>> block_diag(ExactMatrix.identity(1), ExactMatrix.zeros(0, 2)).shape
    (1, 3)
    """

    field = field or (blocks[0].field if blocks else QQ)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)

    result = ExactMatrix.zeros(rows, cols, field)
    r = c = 0
    for b in blocks:
        result = result.with_block(r, c, b)
        r += b.rows
        c += b.cols

    return result


# -- elimination ------------------------------------------------------------


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_rows(m: ExactMatrix) -> List[List[int]]:
    """Scale each rational row by the lcm of its denominators."""

    rows = []
    for i in range(m.rows):
        r = [Fraction(x) for x in m.row(i)]
        den = reduce(_lcm, (x.denominator for x in r), 1)
        rows.append([int(x * den) for x in r])
    return rows


def _integer_pivots(rows: List[List[int]], ncols: int) -> List[int]:
    """
    Fraction-free (Bareiss) elimination; every division is exact.
    """

    rows = [r for r in rows if any(r)]
    m = len(rows)

    pivots = []
    prev = 1
    r = 0

    for c in range(ncols):

        if r == m:
            break

        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue

        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        pivot_row = rows[r]

        for i in range(r + 1, m):
            f = rows[i][c]
            rows[i] = [(p * a - f * b) // prev for a, b in zip(rows[i], pivot_row)]

        prev = p
        pivots.append(c)
        r += 1

    return pivots


def _modp_pivots(rows: List[List[int]], ncols: int, p: int) -> List[int]:

    rows = [r for r in rows if any(r)]
    m = len(rows)

    pivots = []
    r = 0

    for c in range(ncols):

        if r == m:
            break

        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue

        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        pivot_row = [x * inv % p for x in rows[r]]
        rows[r] = pivot_row

        for i in range(r + 1, m):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], pivot_row)]

        pivots.append(c)
        r += 1

    return pivots


def pivot_columns(m: ExactMatrix) -> Tuple[int, ...]:
    """
    Pivot columns of a row echelon form of `m`. The rank of the first k
    columns is the number of pivots below k.

    Examples:
        >>> pivot_columns(ExactMatrix.from_rows([[0, 1, 1], [0, 2, 2]]))
        (1,)
    """

    if m.rows == 0 or m.cols == 0:
        return ()

    if isinstance(m.field, PrimeField):
        pivots = _modp_pivots(m.to_rows(), m.cols, m.field.p)
    elif isinstance(m.field, Rationals):
        pivots = _integer_pivots(_integer_rows(m), m.cols)
    else:
        _, pivots = _gauss_jordan(m.to_rows(), m.cols, m.field)

    return tuple(pivots)


def rank(m: ExactMatrix) -> int:
    """
    Exact rank over the matrix field.

    Examples:
        >>> rank(ExactMatrix.zeros(0, 5))
        0
        >>> rank(ExactMatrix.identity(3))
        3
        >>> rank(ExactMatrix.from_rows([[1, 1], [0, 1], [0, 1], [0, 1]]))
        2
    """
    return len(pivot_columns(m))


def solve_nullspace_dim(coeff: ExactMatrix) -> int:
    """
    Dimension of the right null space of `coeff`.

    Examples:
        >>> solve_nullspace_dim(ExactMatrix.zeros(0, 4))
        4
        >>> solve_nullspace_dim(ExactMatrix.from_rows([[1, 1, 0], [0, 1, 1]]))
        1
    """
    return coeff.cols - rank(coeff)


def _gauss_jordan(rows: List[List[Scalar]], ncols: int,
                  field: Field) -> Tuple[List[List[Scalar]], List[int]]:

    norm = field.normalize
    rows = [list(r) for r in rows]
    m = len(rows)

    pivots = []
    r = 0

    for c in range(ncols):

        if r == m:
            break

        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue

        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        pivot_row = [norm(x * inv) for x in rows[r]]
        rows[r] = pivot_row

        for i in range(m):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [norm(a - f * b) for a, b in zip(rows[i], pivot_row)]

        pivots.append(c)
        r += 1

    return rows, pivots


def rref(m: ExactMatrix) -> Tuple[ExactMatrix, Tuple[int, ...]]:
    """
    Reduced row echelon form and its pivot columns.

    Examples:
        >>> r, pivots = rref(ExactMatrix.from_rows([[2, 4], [1, 3]]))
        >>> r.to_json(), pivots
        ([[1, 0], [0, 1]], (0, 1))
    """

    rows, pivots = _gauss_jordan(m.to_rows(), m.cols, m.field)
    entries = tuple(x for r in rows for x in r)
    return ExactMatrix(m.rows, m.cols, entries, m.field), tuple(pivots)


def row_space_equal(m1: ExactMatrix, m2: ExactMatrix) -> bool:
    """
    True when both matrices span the same row space.
    """

    if m1.cols != m2.cols:
        return False

    r1, p1 = rref(m1)
    r2, p2 = rref(m2)

    return p1 == p2 and all(r1.row(i) == r2.row(i) for i in range(len(p1)))


def inverse(m: ExactMatrix) -> ExactMatrix:
    """
    >>> inverse(ExactMatrix.from_rows([[2, 0], [0, 4]])).to_json()
    [['1/2', 0], [0, '1/4']]
    """

    if not m.is_square:
        raise SingularMatrixError(f"non-square matrix {m.shape} has no inverse")

    n = m.rows
    rows, pivots = _gauss_jordan(hstack(m, ExactMatrix.identity(n, m.field)).to_rows(), n, m.field)

    if len(pivots) < n:
        raise SingularMatrixError(f"matrix of rank {len(pivots)} < {n} is singular")

    entries = tuple(x for r in rows for x in r[n:])
    return ExactMatrix(n, n, entries, m.field)


def is_invertible(m: ExactMatrix) -> bool:
    return m.is_square and rank(m) == m.rows


def solve(a: ExactMatrix, b: ExactMatrix) -> Optional[ExactMatrix]:
    """
    One solution x of a @ x == b (free variables set to zero), or None when
    the system is inconsistent.

    Examples:
        >>> a = ExactMatrix.from_rows([[1, 1], [0, 2]])
        >>> solve(a, ExactMatrix.from_rows([[3], [2]])).to_json()
        [[2], [1]]
    """

    if a.rows != b.rows:
        raise ShapeError(f"cannot solve {a.shape} against {b.shape}")

    rows, pivots = _gauss_jordan(hstack(a, b).to_rows(), a.cols, a.field)

    for r in rows[len(pivots):]:
        if any(x != 0 for x in r[a.cols:]):
            return None

    x = ExactMatrix.zeros(a.cols, b.cols, a.field)
    for r, c in zip(rows, pivots):
        x = x.with_block(c, 0, ExactMatrix(1, b.cols, tuple(r[a.cols:]), a.field))

    return x


def solve_left(b: ExactMatrix, c: ExactMatrix) -> Optional[ExactMatrix]:
    """
    One solution x of x @ b == c, or None.
    """

    xt = solve(b.transpose(), c.transpose())
    return None if xt is None else xt.transpose()


# -- block labels -----------------------------------------------------------


@dataclass(frozen=True)
class BlockLabels:
    """
    Ordered block labels with their widths.

    Examples:
        >>> labels = BlockLabels.of([('x1', 1), ('x0', 0), ('x0s', 2)])
        >>> labels.total
        3
        >>> labels.span('x0s')
        (1, 3)
        >>> labels.ids
        ('x1', 'x0', 'x0s')
    """

    labels: Tuple[Tuple[Hashable, int], ...]

    def __post_init__(self):

        ids = [label for label, _ in self.labels]
        if len(set(ids)) != len(ids):
            raise LabelError(f"duplicate block labels: {ids}")

        if any(width < 0 for _, width in self.labels):
            raise ShapeError(f"negative block width in {self.labels}")

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Hashable, int]]) -> 'BlockLabels':
        return cls(tuple((label, int(width)) for label, width in pairs))

    @property
    def ids(self) -> Tuple[Hashable, ...]:
        return tuple(label for label, _ in self.labels)

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(width for _, width in self.labels)

    @property
    def total(self) -> int:
        return sum(self.widths)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label: Hashable) -> int:
        try:
            return self.ids.index(label)
        except ValueError:
            raise LabelError(f"unknown block label: {label!r}") from None

    def width(self, label: Hashable) -> int:
        return self.labels[self.index(label)][1]

    def offset(self, position: int) -> int:
        return sum(self.widths[:position])

    def span(self, label: Hashable) -> Tuple[int, int]:
        i = self.index(label)
        start = self.offset(i)
        return start, start + self.labels[i][1]

    def indices(self, selection: Iterable[Hashable]) -> List[int]:
        """Matrix indices covered by the selected labels, in label order."""

        positions = sorted({self.index(label) for label in selection})
        indices = []
        for position in positions:
            start = self.offset(position)
            indices.extend(range(start, start + self.widths[position]))
        return indices


def extract_blocks(m: ExactMatrix, rows: BlockLabels, cols: BlockLabels,
                   rowsel: Optional[Iterable[Hashable]] = None,
                   colsel: Optional[Iterable[Hashable]] = None) -> ExactMatrix:
    """
    Submatrix of the selected block rows and columns, kept in label order.
    A selection of None keeps every block.

    Examples:
        >>> m = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        >>> rows = BlockLabels.of([('top', 1), ('bottom', 1)])
        >>> cols = BlockLabels.of([('a', 1), ('b', 2)])
        >>> extract_blocks(m, rows, cols, ['bottom'], ['b']).to_json()
        [[5, 6]]
        >>> extract_blocks(m, rows, cols, [], []).shape
        (0, 0)
    """

    if rows.total != m.rows or cols.total != m.cols:
        raise ShapeError(
            f"labels {rows.total}x{cols.total} do not annotate a {m.rows}x{m.cols} matrix"
        )

    row_indices = range(m.rows) if rowsel is None else rows.indices(rowsel)
    col_indices = range(m.cols) if colsel is None else cols.indices(colsel)

    return m.select(list(row_indices), list(col_indices))


def stack_split(m: ExactMatrix, n: ExactMatrix,
                m_private: int, n_private: int) -> ExactMatrix:
    """
    Stack `m` over `n` sharing their trailing columns:

        [ M_private  0          M_shared ]
        [ 0          N_private  N_shared ]

    The first `m_private` columns of `m` and `n_private` columns of `n` are
    private; the remaining columns of both must have equal widths.

    Examples:
        >>> m = ExactMatrix.from_rows([[1, 2]])
        >>> n = ExactMatrix.from_rows([[3, 4]])
        >>> stack_split(m, n, 1, 1).to_json()
        [[1, 0, 2], [0, 3, 4]]
        >>> stack_split(m, n, 0, 0).to_json()
        [[1, 2], [3, 4]]
        >>> stack_split(m, n, 2, 2).to_json()
        [[1, 2, 0, 0], [0, 0, 3, 4]]
    """

    m._check_field(n)

    if not (0 <= m_private <= m.cols and 0 <= n_private <= n.cols):
        raise ShapeError(f"private widths {m_private}, {n_private} exceed {m.shape}, {n.shape}")

    shared = m.cols - m_private
    if n.cols - n_private != shared:
        raise ShapeError(
            f"shared widths differ: {shared} vs {n.cols - n_private}"
        )

    field = m.field
    top = hstack(
        m.submatrix(0, m.rows, 0, m_private),
        ExactMatrix.zeros(m.rows, n_private, field),
        m.submatrix(0, m.rows, m_private, m.cols),
    )
    bottom = hstack(
        ExactMatrix.zeros(n.rows, m_private, field),
        n.submatrix(0, n.rows, 0, n_private),
        n.submatrix(0, n.rows, n_private, n.cols),
    )

    return vstack(top, bottom)
