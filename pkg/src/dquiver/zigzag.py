"""
Q*-matrices over the star quiver: the bidiagonal matrices A and B, zig-zag
intervals between comparable arrows, their doubled variants, and the rank
function family whose values form the complete orbit invariant.
"""

import functools
import logging
import re

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from dquiver.const import ENUMERATION_VERSION
from dquiver.dataclass.quiver import Quiver
from dquiver.dataclass.representation import Representation
from dquiver.error import EmbeddingMismatchError, IncomparableArrowsError, QuiverError, ShapeError
from dquiver.field import Scalar
from dquiver.linalg import ExactMatrix, block, rank
from dquiver.star import ALPHA1P, Y0P, alpha, beta, build_star, x, y


log = logging.getLogger(__name__)


Path = Tuple[str, ...]
Term = Tuple[Scalar, Path]
Entry = Tuple[Term, ...]

ZERO: Entry = ()


@dataclass(frozen=True)
class QMatrix:
    """
    A block matrix over a quiver: rows and columns are labeled by vertices
    and entry (i, j) is a linear combination of paths from rows[i] to
    cols[j]. The empty path at a vertex stands for the identity.

    Examples:
        >>> a = matrix_A(1)
        >>> a.rows, a.cols
        (('y0', 'y1'), ('x0', 'x1'))
        >>> print(a)
        [beta0 alpha1]
        [0 beta1]
    """

    quiver: Quiver
    rows: Tuple[str, ...]
    cols: Tuple[str, ...]
    entries: Tuple[Tuple[Entry, ...], ...]

    def __post_init__(self):

        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ShapeError(f"entries do not form a {len(self.rows)}x{len(self.cols)} grid")

        for i, r in enumerate(self.rows):
            for j, c in enumerate(self.cols):
                for _, path in self.entries[i][j]:
                    self._check_path(path, r, c)

    def _check_path(self, path: Path, start: str, end: str):

        if not path:
            if start != end:
                raise QuiverError(f"the empty path cannot join {start!r} to {end!r}")
            return

        current = start
        for arrow_id in path:
            a = self.quiver.arrow(arrow_id)
            if a.tail != current:
                raise QuiverError(f"path {path} does not start at {start!r} or is not composable")
            current = a.head

        if current != end:
            raise QuiverError(f"path {path} ends at {current!r}, expected {end!r}")

    @classmethod
    def from_arrows(cls, quiver: Quiver, rows: Sequence[str], cols: Sequence[str],
                    grid: Sequence[Sequence[Optional[str]]]) -> 'QMatrix':
        """Build from a grid of single arrow ids, None marking zeros."""

        entries = tuple(
            tuple(ZERO if a is None else ((1, (a,)),) for a in r) for r in grid
        )
        return cls(quiver, tuple(rows), tuple(cols), entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def without(self, arrow_id: str) -> 'QMatrix':
        """Replace `arrow_id` by zero."""

        entries = tuple(
            tuple(tuple(t for t in e if arrow_id not in t[1]) for e in r) for r in self.entries
        )
        return QMatrix(self.quiver, self.rows, self.cols, entries)

    def sub(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> 'QMatrix':
        return QMatrix(
            self.quiver,
            self.rows[row_start:row_stop],
            self.cols[col_start:col_stop],
            tuple(r[col_start:col_stop] for r in self.entries[row_start:row_stop]),
        )

    def arrow_grid(self) -> List[List[str]]:
        """Entries rendered as text, one linear combination per cell."""

        def _term(t: Term) -> str:
            coeff, path = t
            word = '*'.join(path) if path else '1'
            return word if coeff == 1 else f'{coeff}{word}'

        return [['+'.join(map(_term, e)) if e else '0' for e in r] for r in self.entries]

    def __str__(self):
        return '\n'.join('[' + ' '.join(r) + ']' for r in self.arrow_grid())


def split_columns(m: QMatrix, n: QMatrix, m_private: int, n_private: int) -> QMatrix:
    """
    [[M_private, 0, M_shared], [0, N_private, N_shared]] where the shared
    column labels of both matrices agree.
    """

    if m.cols[m_private:] != n.cols[n_private:]:
        raise ShapeError(f"shared columns differ: {m.cols[m_private:]} vs {n.cols[n_private:]}")

    top = [
        list(r[:m_private]) + [ZERO] * n_private + list(r[m_private:]) for r in m.entries
    ]
    bottom = [
        [ZERO] * m_private + list(r[:n_private]) + list(r[n_private:]) for r in n.entries
    ]
    cols = m.cols[:m_private] + n.cols[:n_private] + m.cols[m_private:]

    return QMatrix(m.quiver, m.rows + n.rows, cols, tuple(map(tuple, top + bottom)))


def split_rows(m: QMatrix, n: QMatrix, m_private: int, n_private: int) -> QMatrix:
    """
    The row-wise counterpart of `split_columns`, i.e. the transpose of the
    column split of the transposes: private rows of M and N stacked over the
    shared rows, M's columns followed by N's.
    """

    if m.rows[m_private:] != n.rows[n_private:]:
        raise ShapeError(f"shared rows differ: {m.rows[m_private:]} vs {n.rows[n_private:]}")

    m_width, n_width = len(m.cols), len(n.cols)

    grid = [list(r) + [ZERO] * n_width for r in m.entries[:m_private]]
    grid += [[ZERO] * m_width + list(r) for r in n.entries[:n_private]]
    grid += [
        list(rm) + list(rn) for rm, rn in zip(m.entries[m_private:], n.entries[n_private:])
    ]
    rows = m.rows[:m_private] + n.rows[:n_private] + m.rows[m_private:]

    return QMatrix(m.quiver, rows, m.cols + n.cols, tuple(map(tuple, grid)))


# -- the bidiagonal matrices and the arrow order ---------------------------


@functools.lru_cache(maxsize=None)
def matrix_A(n: int) -> QMatrix:
    """
    Rows y0..yn, columns x0..xn: beta0 and alpha1 in row y0, then beta_i on
    the diagonal and alpha_{i+1} right of it.
    """

    star = build_star(n).quiver
    grid: List[List[Optional[str]]] = [[None] * (n + 1) for _ in range(n + 1)]
    grid[0][0] = beta(0)
    for i in range(1, n + 1):
        grid[i - 1][i] = alpha(i)
        grid[i][i] = beta(i)

    return QMatrix.from_arrows(star, [y(i) for i in range(n + 1)], [x(i) for i in range(n + 1)], grid)


@functools.lru_cache(maxsize=None)
def matrix_B(n: int) -> QMatrix:
    """
    A without row y0 and column x0, headed by alpha1'.

    >>> print(matrix_B(1))
    [alpha1']
    [beta1]
    """

    star = build_star(n).quiver
    grid: List[List[Optional[str]]] = [[None] * n for _ in range(n + 1)]
    grid[0][0] = ALPHA1P
    for i in range(1, n + 1):
        grid[i][i - 1] = beta(i)
        if i < n:
            grid[i][i] = alpha(i + 1)

    return QMatrix.from_arrows(star, [Y0P] + [y(i) for i in range(1, n + 1)], [x(i) for i in range(1, n + 1)], grid)


@dataclass(frozen=True)
class ArrowOrder:
    """
    The two chains beta0 < alpha1 < beta1 < ... < alpha_n < beta_n and
    alpha1' < beta1 < ... < beta_n on the arrows of Q*(n).

    Examples:
        >>> order = ArrowOrder(2)
        >>> order.leq('beta0', 'beta2'), order.leq("alpha1'", 'alpha2')
        (True, True)
        >>> order.leq('beta0', "alpha1'"), order.leq('alpha1', "alpha1'")
        (False, False)
    """

    n: int

    @property
    def main(self) -> Tuple[str, ...]:
        chain = [beta(0)]
        for i in range(1, self.n + 1):
            chain += [alpha(i), beta(i)]
        return tuple(chain)

    @property
    def prime(self) -> Tuple[str, ...]:
        return (ALPHA1P,) + self.main[2:]

    def leq(self, gamma: str, delta: str) -> bool:
        for chain in (self.main, self.prime):
            if gamma in chain and delta in chain:
                return chain.index(gamma) <= chain.index(delta)
        return False

    def position(self, arrow_id: str) -> Tuple[str, str]:
        """(row, column) label of the arrow inside A or B."""

        if arrow_id == ALPHA1P:
            return Y0P, x(1)

        match = re.fullmatch(r'(alpha|beta)(\d+)', arrow_id)
        if not match or int(match.group(2)) > self.n:
            raise IncomparableArrowsError(f"{arrow_id!r} is not an arrow of Q*({self.n})")

        kind, i = match.group(1), int(match.group(2))
        if kind == 'beta':
            return y(i), x(i)
        if i == 0:
            raise IncomparableArrowsError("there is no arrow alpha0")
        return y(i - 1), x(i)


def interval(gamma: str, delta: str, n: int) -> QMatrix:
    """
    The zig-zag matrix [gamma, delta]: the rectangle of A (of B when gamma is
    alpha1') with upper left entry gamma and lower right entry delta.

    Examples:
        >>> print(interval('beta1', 'alpha3', 3))
        [beta1 alpha2 0]
        [0 beta2 alpha3]
        >>> print(interval("alpha1'", 'beta2', 2))
        [alpha1' 0]
        [beta1 alpha2]
        [0 beta2]
    """

    order = ArrowOrder(n)
    if not order.leq(gamma, delta):
        raise IncomparableArrowsError(f"[{gamma}, {delta}] is not defined")

    m = matrix_B(n) if gamma == ALPHA1P else matrix_A(n)
    (r0, c0), (r1, c1) = order.position(gamma), order.position(delta)

    return m.sub(m.rows.index(r0), m.rows.index(r1) + 1, m.cols.index(c0), m.cols.index(c1) + 1)


def _index(arrow_id: str) -> int:
    return int(re.sub(r'\D', '', arrow_id))


def double_interval(gamma: str, delta: str, n: int) -> QMatrix:
    """
    The doubled zig-zag matrix [[gamma, delta]] for alpha1 <= gamma <= delta,
    assembled from [beta0, delta] and [alpha1', delta].

    Examples:
        >>> print(double_interval('alpha1', 'alpha1', 1))
        [beta0 alpha1]
        [0 alpha1']
    """

    order = ArrowOrder(n)
    main = order.main

    if gamma not in main[1:] or delta not in main or not order.leq(gamma, delta):
        raise IncomparableArrowsError(f"[[{gamma}, {delta}]] needs alpha1 <= gamma <= delta")

    m = interval(beta(0), delta, n)
    nn = interval(ALPHA1P, ALPHA1P if delta == alpha(1) else delta, n)
    i = _index(gamma)

    if gamma.startswith('alpha'):
        return split_columns(m, nn, i, i - 1)

    return split_rows(m, nn, i, i)


def double_interval_zero(gamma: str, delta: str, n: int) -> QMatrix:
    """[[gamma, delta]] with beta0 replaced by zero."""
    return double_interval(gamma, delta, n).without(beta(0))


# -- evaluation -------------------------------------------------------------


def _path_matrix(v: Representation, start: str, path: Path) -> ExactMatrix:

    if not path:
        return ExactMatrix.identity(v.dim[start], v.field)

    result = v.mat(path[0])
    for arrow_id in path[1:]:
        result = result @ v.mat(arrow_id)
    return result


def evaluate(m: QMatrix, v: Representation) -> ExactMatrix:
    """
    The block matrix with block (i, j) the evaluated linear combination at
    entry (i, j); block heights d(rows[i]), widths d(cols[j]).

    Examples:
        >>> q = build_star(1).quiver
        >>> ones = {a: [[1]] for a in q.arrow_ids}
        >>> v = Representation.of(q, {z: 1 for z in q.vertices}, ones)
        >>> evaluate(matrix_A(1), v).to_json()
        [[1, 1], [0, 1]]
    """

    if v.quiver != m.quiver:
        raise QuiverError("the Q-matrix and the representation live on different quivers")

    d, field = v.dim, v.field

    grid = []
    for i, r in enumerate(m.rows):
        row = []
        for j, c in enumerate(m.cols):
            blk = ExactMatrix.zeros(d[r], d[c], field)
            for coeff, path in m.entries[i][j]:
                blk = blk + _path_matrix(v, r, path).scale(coeff)
            row.append(blk)
        grid.append(row)

    if not grid:
        return ExactMatrix.zeros(0, sum(d[c] for c in m.cols), field)
    if not m.cols:
        return ExactMatrix.zeros(sum(d[r] for r in m.rows), 0, field)

    return block(grid)


# -- the rank function family -----------------------------------------------


SINGLE = 'single'
DOUBLE = 'double'
DOUBLE_ZERO = 'double0'

_FUNCTION_RE = re.compile(r"^(\|\|?)([\w']+),([\w']+)\|\|?(0?)$")


@dataclass(frozen=True)
class RankFunction:
    """
    V -> rank of [gamma, delta]_V, [[gamma, delta]]_V or [[gamma, delta]]0_V.

    Examples:
        >>> f = RankFunction.parse('||alpha1,beta1||0')
        >>> f.kind, str(f)
        ('double0', '||alpha1,beta1||0')
    """

    kind: str
    gamma: str
    delta: str

    def qmatrix(self, n: int) -> QMatrix:
        return _qmatrix(self, n)

    def value(self, w: Representation, n: Optional[int] = None) -> int:
        n = star_rank(w.quiver) if n is None else n
        return rank(evaluate(self.qmatrix(n), w))

    def __str__(self):
        if self.kind == SINGLE:
            return f'|{self.gamma},{self.delta}|'
        suffix = '0' if self.kind == DOUBLE_ZERO else ''
        return f'||{self.gamma},{self.delta}||{suffix}'

    @classmethod
    def parse(cls, text: str) -> 'RankFunction':

        match = _FUNCTION_RE.match(text.strip())
        if not match:
            raise IncomparableArrowsError(f"cannot parse rank function {text!r}")

        bars, gamma, delta, zero = match.groups()
        if bars == '|':
            if zero:
                raise IncomparableArrowsError(f"cannot parse rank function {text!r}")
            return cls(SINGLE, gamma, delta)

        return cls(DOUBLE_ZERO if zero else DOUBLE, gamma, delta)


@functools.lru_cache(maxsize=None)
def _qmatrix(f: RankFunction, n: int) -> QMatrix:

    if f.kind == SINGLE:
        return interval(f.gamma, f.delta, n)
    if f.kind == DOUBLE:
        return double_interval(f.gamma, f.delta, n)
    return double_interval_zero(f.gamma, f.delta, n)


@functools.lru_cache(maxsize=None)
def enumerate_Dn(n: int) -> Tuple[RankFunction, ...]:
    """
    The rank function family in its canonical order: the single intervals
    |gamma,delta| with gamma != alpha1 along the main chain then from
    alpha1', the doubled ones, then the doubled ones with beta0 zeroed.

    Examples:
        >>> [str(f) for f in enumerate_Dn(1)]  # doctest: +NORMALIZE_WHITESPACE
        ['|beta0,beta0|', '|beta0,alpha1|', '|beta0,beta1|', '|beta1,beta1|',
         "|alpha1',alpha1'|", "|alpha1',beta1|",
         '||alpha1,alpha1||', '||alpha1,beta1||', '||beta1,beta1||',
         '||alpha1,alpha1||0', '||alpha1,beta1||0']
    """

    if n < 1:
        raise QuiverError(f"the rank family needs n >= 1, got {n}")

    order = ArrowOrder(n)
    main, prime = order.main, order.prime

    singles = [
        RankFunction(SINGLE, g, d)
        for i, g in enumerate(main) if g != alpha(1)
        for d in main[i:]
    ]
    singles += [RankFunction(SINGLE, ALPHA1P, d) for d in prime]

    doubles = [RankFunction(DOUBLE, g, d) for i, g in enumerate(main) if i >= 1 for d in main[i:]]
    zeros = [RankFunction(DOUBLE_ZERO, alpha(1), d) for d in main[1:]]

    return tuple(singles + doubles + zeros)


def star_rank(q: Quiver) -> int:
    """The n of a star quiver Q*(n)."""

    n = (len(q.vertices) - 3) // 2
    if n < 1 or q != build_star(n).quiver:
        raise QuiverError("not a star quiver")
    return n


@dataclass(frozen=True)
class RankSignature:
    """
    The values of the rank function family at a representation of Q*(n),
    in canonical order. Only signatures with the same n, dimension vector
    and enumeration version are comparable.
    """

    n: int
    dim_star: Tuple[int, ...]
    values: Tuple[int, ...]
    version: int = ENUMERATION_VERSION

    def _check(self, other: 'RankSignature'):
        if (self.n, self.dim_star, self.version) != (other.n, other.dim_star, other.version):
            raise EmbeddingMismatchError(
                f"signatures are not comparable: (n={self.n}, d*={self.dim_star}, v{self.version})"
                f" vs (n={other.n}, d*={other.dim_star}, v{other.version})"
            )

    def dominated_by(self, other: 'RankSignature') -> bool:
        """Componentwise self <= other."""
        self._check(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def same_as(self, other: 'RankSignature') -> bool:
        self._check(other)
        return self.values == other.values

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'enumeration_version': self.version,
            'dim_star': list(self.dim_star),
            'values': list(self.values),
        }

    @classmethod
    def from_json(cls, data: dict) -> 'RankSignature':
        return cls(
            n=int(data['n']),
            dim_star=tuple(data['dim_star']),
            values=tuple(data['values']),
            version=int(data['enumeration_version']),
        )


def signature(w: Representation) -> RankSignature:
    """
    (rank f(W)) over the rank function family of Q*(n).
    """

    n = star_rank(w.quiver)
    values = tuple(f.value(w, n) for f in enumerate_Dn(n))
    return RankSignature(n=n, dim_star=w.dim.vector, values=values)
