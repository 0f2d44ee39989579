"""
Pairs of subspaces of k^n together with a complete flag, read as
representations of the type D quiver with all arrows pointing at the branch
vertex:

    a --M--> n <--N-- b,   1 --F1--> 2 --F2--> ... --F(n-1)--> n
"""

import functools
import logging

from dquiver.const import DEFAULT_SEED
from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import Representation
from dquiver.error import QuiverError, RankDeficientError, ShapeError
from dquiver.linalg import ExactMatrix, is_invertible, rank, solve_left
from dquiver.orbit_poset import OrderVerdict, compare_orbits


log = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def grassmann_quiver(n: int) -> Quiver:
    """
    Examples:
        >>> q = grassmann_quiver(3)
        >>> q.vertices
        ('a', 'b', '3', '2', '1')
        >>> [(a.id, a.tail, a.head) for a in q.arrows]
        [('M', 'a', '3'), ('N', 'b', '3'), ('F2', '2', '3'), ('F1', '1', '2')]
    """

    if n < 2:
        raise QuiverError(f"the double Grassmannian quiver needs n >= 2, got {n}")

    vertices = ['a', 'b'] + [str(i) for i in range(n, 0, -1)]
    arrows = [('M', 'a', str(n)), ('N', 'b', str(n))]
    arrows += [(f'F{i}', str(i), str(i + 1)) for i in range(n - 1, 0, -1)]

    return Quiver.of(vertices, arrows)


def grassmann_dim(a: int, b: int, n: int) -> DimVector:
    dims = {'a': a, 'b': b}
    dims.update({str(i): i for i in range(1, n + 1)})
    return DimVector.of(grassmann_quiver(n), dims)


def _check_full_rank(name: str, m: ExactMatrix, rows: int, n: int):

    if m.shape != (rows, n):
        raise ShapeError(f"{name} is {m.rows}x{m.cols}, expected {rows}x{n}")
    if rank(m) != rows:
        raise RankDeficientError(f"{name} has rank {rank(m)} < {rows}")


def grassmann_representation(m: ExactMatrix, nm: ExactMatrix, flag: ExactMatrix) -> Representation:
    """
    The representation (M, N, F_1, .., F_(n-1)) of the row spaces of M and N
    and the flag spanned by the leading rows of `flag`; F_i expresses the
    first i flag rows in terms of the first i+1.

    :param m: An a x n matrix of rank a.
    :param nm: A b x n matrix of rank b.
    :param flag: An invertible n x n matrix, its rows an ordered basis.

    Examples:
        >>> m = ExactMatrix.from_rows([[1, 0]])
        >>> flag = ExactMatrix.identity(2)
        >>> v = grassmann_representation(m, m, flag)
        >>> v.mat('F1').to_json()
        [[1, 0]]
    """

    n = flag.rows
    if not flag.is_square or not is_invertible(flag):
        raise RankDeficientError(f"the flag basis must be an invertible {n}x{n} matrix")

    _check_full_rank('M', m, m.rows, n)
    _check_full_rank('N', nm, nm.rows, n)

    q = grassmann_quiver(n)
    mats = {'M': m, 'N': nm}

    steps = [flag.submatrix(0, i, 0, n) for i in range(n + 1)]
    for i in range(1, n):
        upper = ExactMatrix.identity(n, flag.field) if i + 1 == n else steps[i + 1]
        f = solve_left(upper, steps[i])
        if f is None:
            raise RankDeficientError(f"flag step {i} does not lie in step {i + 1}")
        mats[f'F{i}'] = f

    log.debug(f'double Grassmannian point with a={m.rows}, b={nm.rows}, n={n}')
    return Representation.of(q, grassmann_dim(m.rows, nm.rows, n), mats, flag.field)


def compare_grassmann(first: Representation, second: Representation, oracle: bool = False,
                      seed: int = DEFAULT_SEED) -> OrderVerdict:
    """Compare two double Grassmannian points through their quiver orbits."""
    return compare_orbits(first, second, oracle=oracle, seed=seed)
