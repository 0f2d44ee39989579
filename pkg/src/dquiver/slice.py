"""
The slice S(d*) of the symmetric variety GL(a+b) / GL(a) x GL(b) attached to
a dimension vector of the star quiver Q*(n), the closed embedding eta of
rep(Q*(n), d*) into it, the parabolic rank functions U, L and B, and their
split into constant, image and quiver classes.

Points are pairs (M, N) of an a x (a+b) and a b x (a+b) matrix whose stack
is invertible; two pairs are the same point when M and N have the same row
spaces. Columns of both are cut into blocks labeled by

    x_n .. x_0, x_0^s .. x_n^s, y_n .. y_1, y0+y0', y_1^s .. y_n^s
"""

import functools
import logging
import random
import re

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from dquiver.dataclass.quiver import DimVector
from dquiver.dataclass.representation import GroupElement, Representation
from dquiver.error import InternalError, LabelError, QuiverError, ShapeError
from dquiver.field import QQ, Field
from dquiver.linalg import (BlockLabels, ExactMatrix, block_diag, extract_blocks, hstack, is_invertible,
                            pivot_columns, rank, row_space_equal, stack_split, vstack)
from dquiver.quiver import random_invertible, random_representation
from dquiver.star import ALPHA1P, Y0P, alpha, beta, build_star, x, y
from dquiver.zigzag import DOUBLE, DOUBLE_ZERO, SINGLE, RankFunction, evaluate, matrix_A, matrix_B


log = logging.getLogger(__name__)


X, XS, Y, Y0, YS = 'x', 'xs', 'y', 'y0', 'ys'

_LABEL_RE = re.compile(r"^(?:x(\d+)(s?)|y(\d+)(s?)|y0\+y0')$")


@dataclass(frozen=True)
class ColumnLabel:
    """
    A block column label: x_i, x_i^s, y_i, y_i^s (i >= 1) or the merged
    y0+y0' block.

    Examples:
        >>> str(ColumnLabel(XS, 2)), str(ColumnLabel(Y0))
        ('x2s', "y0+y0'")
        >>> ColumnLabel.parse('y1s')
        ColumnLabel(kind='ys', index=1)
    """

    kind: str
    index: int = 0

    @property
    def vertex(self) -> Optional[str]:
        """The star vertex sizing the block; None for y0+y0'."""

        if self.kind in (X, XS):
            return x(self.index)
        if self.kind in (Y, YS):
            return y(self.index)
        return None

    def __str__(self):
        if self.kind == Y0:
            return "y0+y0'"
        base = 'x' if self.kind in (X, XS) else 'y'
        suffix = 's' if self.kind in (XS, YS) else ''
        return f'{base}{self.index}{suffix}'

    @classmethod
    def parse(cls, text: str) -> 'ColumnLabel':

        match = _LABEL_RE.match(text.strip())
        if not match:
            raise LabelError(f"unknown column label {text!r}")

        xi, xsuffix, yi, ysuffix = match.groups()
        if xi is not None:
            return cls(XS if xsuffix else X, int(xi))
        if yi is not None:
            if int(yi) == 0:
                raise LabelError(f"unknown column label {text!r}")
            return cls(YS if ysuffix else Y, int(yi))
        return cls(Y0)


@functools.lru_cache(maxsize=None)
def column_labels(n: int) -> Tuple[ColumnLabel, ...]:
    """
    The ordered block column labels.

    Examples:
        >>> [str(c) for c in column_labels(1)]
        ['x1', 'x0', 'x0s', 'x1s', 'y1', "y0+y0'", 'y1s']
    """

    if n < 1:
        raise QuiverError(f"column labels need n >= 1, got {n}")

    labels = [ColumnLabel(X, i) for i in range(n, -1, -1)]
    labels += [ColumnLabel(XS, i) for i in range(n + 1)]
    labels += [ColumnLabel(Y, i) for i in range(n, 0, -1)]
    labels += [ColumnLabel(Y0)]
    labels += [ColumnLabel(YS, i) for i in range(1, n + 1)]
    return tuple(labels)


def position(label: ColumnLabel, n: int) -> int:
    """
    Index of the label in the column order.

    >>> position(ColumnLabel(XS, 3), 3) < position(ColumnLabel(XS, 1), 3)
    False
    """

    labels = column_labels(n)
    if label not in labels:
        raise LabelError(f"{label} is not a column label for n={n}")
    return labels.index(label)


# -- slice parameters and points --------------------------------------------


@dataclass(frozen=True)
class SliceParams:
    """
    Examples:
        >>> star = build_star(1).quiver
        >>> params = SliceParams(1, DimVector.of(star, {'x0': 1, 'x1': 2, 'y0': 1, "y0'": 3, 'y1': 1}))
        >>> params.q, params.r, params.s, params.t, params.a, params.b
        (1, 1, 3, 3, 5, 7)
    """

    n: int
    dim_star: DimVector

    def __post_init__(self):
        if self.dim_star.vertices != build_star(self.n).quiver.vertices:
            raise ShapeError(f"dimension vector does not live on Q*({self.n})")

    @classmethod
    def of(cls, n: int, dims: Union[DimVector, Mapping[str, int]]) -> 'SliceParams':
        if isinstance(dims, DimVector):
            return cls(n, dims)
        return cls(n, DimVector.of(build_star(n).quiver, dims))

    def d(self, vertex: str) -> int:
        return self.dim_star[vertex]

    @property
    def q(self) -> int:
        return self.d(y(0))

    @property
    def r(self) -> int:
        return sum(self.d(y(i)) for i in range(1, self.n + 1))

    @property
    def s(self) -> int:
        return sum(self.d(x(i)) for i in range(self.n + 1))

    @property
    def t(self) -> int:
        return self.d(Y0P)

    @property
    def a(self) -> int:
        return self.q + self.r + self.s

    @property
    def b(self) -> int:
        return self.t + self.r + self.s

    def width(self, label: ColumnLabel) -> int:
        if label.kind == Y0:
            return self.q + self.t
        return self.d(label.vertex)

    @property
    def columns(self) -> BlockLabels:
        return BlockLabels.of((c, self.width(c)) for c in column_labels(self.n))

    @property
    def rows_M(self) -> BlockLabels:
        return self._rows(y(0))

    @property
    def rows_N(self) -> BlockLabels:
        return self._rows(Y0P)

    def _rows(self, head: str) -> BlockLabels:
        ys = [y(i) for i in range(1, self.n + 1)]
        xs = [x(i) for i in range(self.n + 1)]
        return BlockLabels.of((z, self.d(z)) for z in [head] + ys + xs)

    def end(self, label: ColumnLabel) -> int:
        """Column index just past the block of `label`."""
        return self.columns.span(label)[1]


@dataclass(frozen=True)
class SlicePoint:
    """
    A pair (M, N) read as the point of GL(a+b) / GL(a) x GL(b) given by
    stacking M on N.
    """

    params: SliceParams
    M: ExactMatrix
    N: ExactMatrix

    def __post_init__(self):

        a, b = self.params.a, self.params.b
        if self.M.shape != (a, a + b) or self.N.shape != (b, a + b):
            raise ShapeError(
                f"expected {a}x{a + b} and {b}x{a + b} blocks, got {self.M.shape} and {self.N.shape}"
            )
        self.M._check_field(self.N)

    @property
    def field(self) -> Field:
        return self.M.field

    def stacked(self) -> ExactMatrix:
        return vstack(self.M, self.N)

    def is_valid(self) -> bool:
        return is_invertible(self.stacked())

    def block(self, side: str, row: str, col: ColumnLabel) -> ExactMatrix:
        """The block of M (side 'M') or N (side 'N') at a row vertex and column label."""

        m, rows = (self.M, self.params.rows_M) if side == 'M' else (self.N, self.params.rows_N)
        return extract_blocks(m, rows, self.params.columns, [row], [col])

    def with_block(self, side: str, row: str, col: ColumnLabel, value: ExactMatrix) -> 'SlicePoint':

        rows = self.params.rows_M if side == 'M' else self.params.rows_N
        r0, c0 = rows.span(row)[0], self.params.columns.span(col)[0]
        if side == 'M':
            return SlicePoint(self.params, self.M.with_block(r0, c0, value), self.N)
        return SlicePoint(self.params, self.M, self.N.with_block(r0, c0, value))

    def to_json(self) -> dict:
        return {'M': self.M.to_json(), 'N': self.N.to_json()}


def _skeleton(params: SliceParams, field: Field) -> Tuple[ExactMatrix, ExactMatrix]:
    """The fixed J and identity blocks of every slice point."""

    q, r, s, t, a, b = params.q, params.r, params.s, params.t, params.a, params.b
    J = functools.partial(ExactMatrix.antidiagonal, field=field)
    I = functools.partial(ExactMatrix.identity, field=field)

    y_rev, y0 = 2 * s, 2 * s + r
    y_sec = y0 + q + t

    m = ExactMatrix.zeros(a, a + b, field)
    m = m.with_block(0, y0, J(q))
    m = m.with_block(q, y_rev, J(r))
    m = m.with_block(q + r, 0, J(s))

    nm = ExactMatrix.zeros(b, a + b, field)
    nm = nm.with_block(0, y0 + q, I(t))
    nm = nm.with_block(t, y_rev, J(r))
    nm = nm.with_block(t, y_sec, I(r))
    nm = nm.with_block(t + r, 0, J(s))
    nm = nm.with_block(t + r, s, I(s))

    return m, nm


def slice_point(params: SliceParams, upper: ExactMatrix, lower: ExactMatrix) -> SlicePoint:
    """
    The slice point with free blocks `upper` ((q+r) x s, in M) and `lower`
    ((t+r) x s, in N).
    """

    m, nm = _skeleton(params, upper.field)
    s = params.s
    if upper.shape != (params.q + params.r, s) or lower.shape != (params.t + params.r, s):
        raise ShapeError(f"free blocks {upper.shape}, {lower.shape} do not fit the slice")

    return SlicePoint(params, m.with_block(0, s, upper), nm.with_block(0, s, lower))


def free_blocks(p: SlicePoint) -> Tuple[ExactMatrix, ExactMatrix]:
    s, params = p.params.s, p.params
    return (
        p.M.submatrix(0, params.q + params.r, s, 2 * s),
        p.N.submatrix(0, params.t + params.r, s, 2 * s),
    )


def in_slice(p: SlicePoint) -> bool:
    """True iff the point matches the slice template outside its free blocks."""

    upper, lower = free_blocks(p)
    return slice_point(p.params, upper, lower) == p


def random_slice_point(params: SliceParams, rng: random.Random, field: Field = QQ) -> SlicePoint:
    s = params.s
    return slice_point(
        params,
        ExactMatrix.random(params.q + params.r, s, rng, field),
        ExactMatrix.random(params.t + params.r, s, rng, field),
    )


# -- the embedding and the group map -----------------------------------------


def eta(v: Representation) -> SlicePoint:
    """
    Embed a representation of Q*(n) into the slice: A_V fills the free block
    of M and [0 B_V] (zero columns of width d*(x0)) the free block of N.

    Examples:
        >>> q = build_star(1).quiver
        >>> v = Representation.zero(q, {z: 1 for z in q.vertices})
        >>> p = eta(v)
        >>> p.M.shape, p.N.shape, p.is_valid()
        ((4, 8), (4, 8), True)
    """

    n = (len(v.quiver.vertices) - 3) // 2
    if n < 1 or v.quiver != build_star(n).quiver:
        raise QuiverError("eta is defined on representations of a star quiver")

    params = SliceParams(n, v.dim)
    field = v.field

    upper = evaluate(matrix_A(n), v)
    b_v = evaluate(matrix_B(n), v)
    lower = hstack(ExactMatrix.zeros(b_v.rows, params.d(x(0)), field), b_v)

    return slice_point(params, upper, lower)


def _antidiagonal_conjugate(g: ExactMatrix) -> ExactMatrix:
    j = ExactMatrix.antidiagonal(g.rows, g.field)
    return j @ g @ j


def theta(g: GroupElement, n: int) -> ExactMatrix:
    """
    The block diagonal image diag(J g_x J, g_x, J g_y J, J g_y0 J, g_y0', g_y)
    of g in GL(d*) inside the parabolic subgroup.
    """

    star = build_star(n).quiver
    if g.quiver != star:
        raise QuiverError("theta is defined on GL(d*) of a star quiver")

    field = g.field
    g_x = block_diag(*(g.factor(x(i)) for i in range(n + 1)), field=field)
    g_y = block_diag(*(g.factor(y(i)) for i in range(1, n + 1)), field=field)

    return block_diag(
        _antidiagonal_conjugate(g_x),
        g_x,
        _antidiagonal_conjugate(g_y),
        _antidiagonal_conjugate(g.factor(y(0))),
        g.factor(Y0P),
        g_y,
        field=field,
    )


def random_parabolic(params: SliceParams, rng: random.Random, field: Field = QQ) -> ExactMatrix:
    """
    A random element of P(d*): block upper triangular for the column blocks,
    invertible diagonal blocks.
    """

    widths = params.columns.widths
    size = sum(widths)
    g = ExactMatrix.zeros(size, size, field)

    offsets = [sum(widths[:k]) for k in range(len(widths))]
    for off, w in zip(offsets, widths):
        g = g.with_block(off, off, random_invertible(w, rng, field))
        g = g.with_block(off, off + w, ExactMatrix.random(w, size - off - w, rng, field))

    return g


def act_parabolic(p: SlicePoint, g: ExactMatrix) -> SlicePoint:
    return SlicePoint(p.params, p.M @ g, p.N @ g)


def same_coset(p1: SlicePoint, p2: SlicePoint) -> bool:
    """True iff both pairs represent the same point: equal row spaces of M and of N."""
    return row_space_equal(p1.M, p2.M) and row_space_equal(p1.N, p2.N)


# -- rank functions ---------------------------------------------------------


U, L, B = 'U', 'L', 'B'

_FUNCTION_RE = re.compile(r"^([ULB])\[([^,\]]+)(?:,([^\]]+))?\]$")


@dataclass(frozen=True)
class SliceFunction:
    """
    U[v] = rank M_[x_n, v], L[v] = rank N_[x_n, v] and, for v < w,
    B[v,w] = rank of (M, N) split after v and cut after w.

    >>> str(SliceFunction.parse("B[x2,y0+y0']"))
    "B[x2,y0+y0']"
    """

    kind: str
    v: ColumnLabel
    w: Optional[ColumnLabel] = None

    def __str__(self):
        if self.w is None:
            return f'{self.kind}[{self.v}]'
        return f'{self.kind}[{self.v},{self.w}]'

    @classmethod
    def parse(cls, text: str) -> 'SliceFunction':

        match = _FUNCTION_RE.match(text.strip())
        if not match:
            raise LabelError(f"cannot parse slice function {text!r}")

        kind, v, w = match.groups()
        if (kind == B) != (w is not None):
            raise LabelError(f"cannot parse slice function {text!r}")

        return cls(kind, ColumnLabel.parse(v), None if w is None else ColumnLabel.parse(w))

    def check(self, n: int):
        i = position(self.v, n)
        if self.kind == B and not i < position(self.w, n):
            raise LabelError(f"{self} needs {self.v} < {self.w}")


@functools.lru_cache(maxsize=None)
def all_slice_functions(n: int) -> Tuple[SliceFunction, ...]:
    """
    Every U and L, then every B in row-major order of (v, w).

    >>> len(all_slice_functions(1)), len(all_slice_functions(2))
    (35, 77)
    """

    labels = column_labels(n)
    fns = [SliceFunction(U, c) for c in labels]
    fns += [SliceFunction(L, c) for c in labels]
    fns += [SliceFunction(B, v, w) for i, v in enumerate(labels) for w in labels[i + 1:]]
    return tuple(fns)


def U_value(v: ColumnLabel, p: SlicePoint) -> int:
    return rank(p.M.submatrix(0, p.M.rows, 0, p.params.end(v)))


def L_value(v: ColumnLabel, p: SlicePoint) -> int:
    return rank(p.N.submatrix(0, p.N.rows, 0, p.params.end(v)))


def B_value(v: ColumnLabel, w: ColumnLabel, p: SlicePoint) -> int:

    SliceFunction(B, v, w).check(p.params.n)
    ev, ew = p.params.end(v), p.params.end(w)
    return rank(stack_split(
        p.M.submatrix(0, p.M.rows, 0, ew),
        p.N.submatrix(0, p.N.rows, 0, ew),
        ev, ev,
    ))


def value(fn: SliceFunction, p: SlicePoint) -> int:
    if fn.kind == U:
        return U_value(fn.v, p)
    if fn.kind == L:
        return L_value(fn.v, p)
    return B_value(fn.v, fn.w, p)


def _prefix_ranks(m: ExactMatrix, ends: List[int]) -> List[int]:
    pivots = pivot_columns(m)
    return [sum(1 for c in pivots if c < e) for e in ends]


def slice_values(p: SlicePoint) -> Tuple[int, ...]:
    """
    Every U, L and B value in the order of `all_slice_functions`, with one
    elimination for M, one for N and one per split point.
    """

    params = p.params
    labels = column_labels(params.n)
    ends = [params.end(c) for c in labels]

    values = _prefix_ranks(p.M, ends) + _prefix_ranks(p.N, ends)

    for i in range(len(labels) - 1):
        split = stack_split(p.M, p.N, ends[i], ends[i])
        values += _prefix_ranks(split, [ends[i] + e for e in ends[i + 1:]])

    return tuple(values)


def porbit_leq(p1: SlicePoint, p2: SlicePoint) -> bool:
    """
    True iff the P(d*)-orbit of p1 lies in the orbit closure of p2: every
    U, L and B value of p1 is at most that of p2.
    """

    if p1.params != p2.params:
        raise ShapeError("slice points have different block structures")

    return all(a <= b for a, b in zip(slice_values(p1), slice_values(p2)))


# -- classification ---------------------------------------------------------


CONSTANT, IMAGE, QUIVER = 'constant', 'image', 'quiver'


@dataclass(frozen=True)
class FunctionClass:
    """
    How a slice function behaves on S(d*): constant, fixed on the image of
    eta, or equal on the image to a star rank function up to a constant.
    """

    kind: str
    partner: Optional[RankFunction] = None

    def __str__(self):
        if self.kind == CONSTANT:
            return 'C'
        if self.kind == IMAGE:
            return 'Im'
        return str(self.partner)


class _Positions:
    """Column positions by label kind, y0^s and y_0 both naming y0+y0'."""

    def __init__(self, n: int):
        self.n = n

    def x(self, i: int) -> int:
        return self.n - i

    def xs(self, i: int) -> int:
        return self.n + 1 + i

    def y(self, i: int) -> int:
        return 3 * self.n + 2 - i

    def ys(self, i: int) -> int:
        return 3 * self.n + 2 + i


def _is_constant(fn: SliceFunction, n: int) -> bool:

    pos = _Positions(n)
    v = position(fn.v, n)

    if fn.kind in (U, L):
        return v <= pos.x(0) or v >= pos.ys(0)

    w = position(fn.w, n)
    i = fn.v.index

    if w == pos.ys(n):
        return True
    if fn.v.kind == X and i >= 1 and pos.x(i) < w < pos.xs(i):
        return True
    if fn.v.kind == Y and ((i >= 2 and w >= pos.ys(i - 1)) or (i == 1 and w == pos.ys(0))):
        return True
    return v >= pos.y(1)


def _is_image(fn: SliceFunction, n: int) -> bool:

    pos = _Positions(n)
    if fn.kind == L:
        return fn.v == ColumnLabel(XS, 0)
    if fn.kind == U:
        return False

    w = position(fn.w, n)
    kind, i = fn.v.kind, fn.v.index

    if kind == X and pos.ys(0) <= w <= pos.ys(n - 1):
        return True
    if kind == XS and i == 0 and pos.ys(0) <= w <= pos.ys(n - 1):
        return True
    if kind == XS and fn.w.kind == YS and 1 <= i <= fn.w.index <= n - 1:
        return True
    return kind == X and fn.w.kind == Y and 1 <= fn.w.index < i


def _single(gamma: str, delta: str) -> RankFunction:
    return RankFunction(SINGLE, gamma, delta)


def _double(gamma: str, delta: str) -> RankFunction:
    return RankFunction(DOUBLE, gamma, delta)


def _double_zero(gamma: str, delta: str) -> RankFunction:
    return RankFunction(DOUBLE_ZERO, gamma, delta)


def _partner(fn: SliceFunction) -> Optional[RankFunction]:
    """The star rank function a quiver-class slice function agrees with on the image of eta."""

    v, w = fn.v, fn.w

    if fn.kind == U:
        if v.kind == XS:
            return _single(beta(0), beta(v.index))
        if v.kind == Y:
            return _single(beta(0), alpha(v.index))
        return None

    if fn.kind == L:
        if v.kind == XS and v.index >= 1:
            return _single(ALPHA1P, beta(v.index))
        if v.kind == Y:
            return _single(ALPHA1P, ALPHA1P if v.index == 1 else alpha(v.index))
        return None

    i, j = v.index, w.index

    if v.kind == X and w.kind in (XS, Y):
        # delta is beta_j against x_j^s, alpha_j against y_j
        delta = beta(j) if w.kind == XS else alpha(j)
        if i >= 2 and j >= i:
            return _single(alpha(i), delta)
        if i == 1 and j >= 1:
            return _double_zero(alpha(1), delta)
        if i == 0 and w.kind == XS and j == 0:
            return _single(beta(0), beta(0))
        if i == 0 and j >= 1:
            return _double(alpha(1), delta)
        return None

    if v.kind == XS:
        if w.kind == XS:
            return _double(alpha(i + 1), beta(j))
        if w.kind == Y:
            return _double(alpha(i + 1), alpha(j)) if j > i else _double(beta(j), beta(i))
        if w.kind == Y0 and i >= 1:
            return _single(beta(1), beta(i))
        if w.kind == YS and 1 <= j < i:
            return _single(beta(j + 1), beta(i))
        return None

    if v.kind == Y:
        if w.kind == Y:
            return _double(beta(j), alpha(i))
        if w.kind == Y0 and i >= 2:
            return _single(beta(1), alpha(i))
        if w.kind == YS and 1 <= j < i - 1:
            return _single(beta(j + 1), alpha(i))

    return None


@functools.lru_cache(maxsize=None)
def classification(n: int) -> Dict[SliceFunction, FunctionClass]:
    """
    The class of every slice function for Q*(n).

    Examples:
        >>> table = classification(2)
        >>> str(table[SliceFunction.parse('U[x2s]')])
        '|beta0,beta2|'
        >>> str(table[SliceFunction.parse("B[y1,y0+y0']")])
        'C'
        >>> str(table[SliceFunction.parse('B[x2,y1]')])
        'Im'
    """

    table = {}
    for fn in all_slice_functions(n):

        if _is_constant(fn, n):
            table[fn] = FunctionClass(CONSTANT)
        elif _is_image(fn, n):
            table[fn] = FunctionClass(IMAGE)
        else:
            partner = _partner(fn)
            if partner is None:
                raise InternalError(f"{fn} is neither constant, image nor paired with a star rank function")
            table[fn] = FunctionClass(QUIVER, partner)

    log.debug(f'classified {len(table)} slice functions for n={n}')
    return table


def classify(fn: SliceFunction, n: int) -> FunctionClass:
    fn.check(n)
    return classification(n)[fn]


# -- structural descriptions of im(eta) and R(d*) ---------------------------


def _zero(p: SlicePoint, side: str, row: str, col: ColumnLabel) -> bool:
    return p.block(side, row, col).is_zero


def _agree(p: SlicePoint, row: str, col: ColumnLabel) -> bool:
    return p.block('M', row, col) == p.block('N', row, col)


def in_image_eta(p: SlicePoint) -> bool:
    """
    True iff the slice point is eta(V) for some V: M and N agree on rows
    y_1..y_n over x_0^s..x_n^s, both vanish off the zig-zag there, and N
    vanishes on the x_0^s column.
    """

    if not in_slice(p):
        return False

    n = p.params.n
    xs = [ColumnLabel(XS, j) for j in range(n + 1)]

    for i in range(1, n + 1):
        for j, col in enumerate(xs):
            if not _agree(p, y(i), col):
                return False
            if (j < i or j >= i + 2) and not _zero(p, 'M', y(i), col):
                return False

    if any(not _zero(p, 'M', y(0), col) for col in xs[2:]):
        return False
    return all(_zero(p, 'N', Y0P, col) for col in [xs[0]] + xs[2:])


def in_R(p: SlicePoint) -> bool:
    """
    True iff the slice point has the shape reached after fixing the B values
    around the x_n^s column and the y_n row: M and N agree on the x_n^s
    column below y_0 and on the y_n row, the x_n^s column vanishes above
    y_{n-1} and the y_n row vanishes left of x_n^s.
    """

    n = p.params.n
    if n < 2:
        raise QuiverError(f"R(d*) needs n >= 2, got {n}")

    if not in_slice(p):
        return False

    last = ColumnLabel(XS, n)
    xs = [ColumnLabel(XS, j) for j in range(n + 1)]

    if not all(_agree(p, y(i), last) for i in range(1, n + 1)):
        return False
    if not all(_zero(p, 'M', z, last) for z in [y(0)] + [y(i) for i in range(1, n - 1)]):
        return False
    if not all(_zero(p, 'N', z, last) for z in [Y0P] + [y(i) for i in range(1, n - 1)]):
        return False
    if not all(_agree(p, y(n), col) for col in xs):
        return False
    return all(_zero(p, 'M', y(n), col) for col in xs[:-1])


@functools.lru_cache(maxsize=None)
def _minimum_values(params: SliceParams, field: Field) -> Tuple[int, ...]:
    zero = Representation.zero(build_star(params.n).quiver, params.dim_star, field)
    return slice_values(eta(zero))


def minimum_values(params: SliceParams, field: Field = QQ) -> Dict[SliceFunction, int]:
    """The value of every slice function at eta(0)."""
    return dict(zip(all_slice_functions(params.n), _minimum_values(params, field)))


def image_conditions(n: int) -> List[SliceFunction]:
    return [fn for fn, cls in classification(n).items() if cls.kind == IMAGE]


def r_conditions(n: int) -> List[SliceFunction]:
    """The B functions whose minimum values cut R(d*) out of the slice."""

    if n < 2:
        raise QuiverError(f"R(d*) needs n >= 2, got {n}")

    pos = _Positions(n)
    labels = column_labels(n)
    first, split = ColumnLabel(X, n), ColumnLabel(YS, n - 1)

    fns = [
        SliceFunction(B, first, w) for k, w in enumerate(labels)
        if pos.ys(0) <= k <= pos.ys(n - 1) or pos.y(n - 1) <= k <= pos.y(1)
    ]
    fns += [
        SliceFunction(B, v, split) for k, v in enumerate(labels)
        if (k <= pos.x(0) or pos.xs(0) <= k <= pos.xs(n - 1)) and v != first
    ]
    return fns


def _meets_minimum(p: SlicePoint, fns: List[SliceFunction]) -> bool:

    minimum = minimum_values(p.params, p.field)
    values = dict(zip(all_slice_functions(p.params.n), slice_values(p)))
    return all(values[fn] == minimum[fn] for fn in fns)


def in_image_by_ranks(p: SlicePoint) -> bool:
    """in_image_eta for slice points, decided by the image-class rank values."""
    return in_slice(p) and _meets_minimum(p, image_conditions(p.params.n))


def in_R_by_ranks(p: SlicePoint) -> bool:
    """in_R for slice points, decided by B values at their minimum."""
    return in_slice(p) and _meets_minimum(p, r_conditions(p.params.n))


def star_point(v: Representation) -> Tuple[SlicePoint, Dict[RankFunction, int]]:
    """eta(V) with the values of every quiver-class partner at V."""

    p = eta(v)
    n = p.params.n
    partners = {cls.partner for cls in classification(n).values() if cls.kind == QUIVER}
    return p, {f: f.value(v, n) for f in partners}


def random_star_representation(params: SliceParams, rng: random.Random, field: Field = QQ) -> Representation:
    return random_representation(build_star(params.n).quiver, params.dim_star, rng, field)
