"""
The star quiver Q*(n) and the contraction plan realizing any type D quiver
inside it.

Q*(n) has vertices x0..xn, y0, y0', y1..yn and arrows

    beta0: y0 -> x0, alpha1: y0 -> x1, alpha1': y0' -> x1,
    beta_i: y_i -> x_i (1 <= i <= n), alpha_i: y_{i-1} -> x_i (2 <= i <= n).
"""

import functools
import logging

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Set, Tuple, Union

import networkx as nx

from dquiver.dataclass.embedding import BOTH_INWARD, COMPOSABLE, StarEmbedding
from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import GroupElement, Representation
from dquiver.error import EmbeddingMismatchError, QuiverError
from dquiver.linalg import ExactMatrix, is_invertible
from dquiver.quiver import contract, transpose_rep, type_d_shape


log = logging.getLogger(__name__)


Y0P = "y0'"
ALPHA1P = "alpha1'"


def x(i: int) -> str:
    return f'x{i}'


def y(i: int) -> str:
    return f'y{i}'


def alpha(i: int) -> str:
    return f'alpha{i}'


def beta(i: int) -> str:
    return f'beta{i}'


@functools.lru_cache(maxsize=None)
def _star_quiver(n: int) -> Quiver:

    vertices = [x(i) for i in range(n + 1)] + [y(0), Y0P] + [y(i) for i in range(1, n + 1)]

    arrows = [(beta(0), y(0), x(0)), (alpha(1), y(0), x(1)), (ALPHA1P, Y0P, x(1))]
    for i in range(1, n + 1):
        if i >= 2:
            arrows.append((alpha(i), y(i - 1), x(i)))
        arrows.append((beta(i), y(i), x(i)))

    return Quiver.of(vertices, arrows)


@dataclass(frozen=True)
class StarQuiver:
    """
    Examples:
        >>> star = build_star(1)
        >>> star.quiver.vertices
        ('x0', 'x1', 'y0', "y0'", 'y1')
        >>> star.quiver.arrow_ids
        ('beta0', 'alpha1', "alpha1'", 'beta1')
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise QuiverError(f"the star quiver needs n >= 1, got {self.n}")

    @property
    def quiver(self) -> Quiver:
        return _star_quiver(self.n)


def build_star(n: int) -> StarQuiver:
    return StarQuiver(n)


def _next_step(side: str, i: int) -> Tuple[str, bool, str, int]:
    """
    The star arrow leaving the walk position (side, i) away from x1:
    (arrow, points away from x1, next side, next index).
    """

    if side == 'x':
        return beta(i), False, 'y', i
    return alpha(i + 1), True, 'x', i + 1


def embed_typeD(q: Quiver, d: Union[DimVector, Mapping[str, int]]) -> StarEmbedding:
    """
    Realize a type D quiver as a contraction of Q*(n).

    The short branch arrow pointing into the branch vertex maps to alpha1';
    when neither does, the opposite quiver is used instead. With one inward
    short arrow the other maps to beta0 (and alpha1 is contracted); with two,
    the first maps to alpha1 and x0 gets dimension 0. The long branch is then
    walked away from the branch vertex along x1 <- y1 -> x2 <- y2 ...,
    contracting every star arrow whose direction disagrees with the quiver.

    :param q: A type D quiver.
    :param d: A dimension vector on `q`.
    """

    d = d if isinstance(d, DimVector) else DimVector.of(q, d)
    if d.vertices != q.vertices:
        raise EmbeddingMismatchError("dimension vector does not live on the quiver")

    shape = type_d_shape(q)
    branch = shape.branch

    opposite = not any(q.arrow(a).head == branch for _, a in shape.short)
    normalized = q.opposite() if opposite else q

    inward = [normalized.arrow(a).head == branch for _, a in shape.short]

    vertex_map: Dict[str, Optional[str]] = {}
    arrow_map: Dict[str, str] = {}
    contracted: Set[str] = set()

    if all(inward):
        case = BOTH_INWARD
        (gamma_leaf, gamma), (delta_leaf, delta) = shape.short
        arrow_map[gamma] = alpha(1)
        vertex_map[y(0)] = gamma_leaf
        vertex_map[x(0)] = None
    else:
        case = COMPOSABLE
        k = inward.index(True)
        delta_leaf, delta = shape.short[k]
        gamma_leaf, gamma = shape.short[1 - k]
        arrow_map[gamma] = beta(0)
        vertex_map[y(0)] = branch
        vertex_map[x(0)] = gamma_leaf
        contracted.add(alpha(1))

    arrow_map[delta] = ALPHA1P
    vertex_map[Y0P] = delta_leaf
    vertex_map[x(1)] = branch

    side, i = 'x', 1
    previous = branch

    for w, arrow_id in shape.long:

        outward = normalized.arrow(arrow_id).tail == previous
        star_arrow, star_outward, side_next, i_next = _next_step(side, i)

        if star_outward != outward:
            contracted.add(star_arrow)
            side, i = side_next, i_next
            vertex_map[f'{side}{i}'] = previous
            log.debug(f'contract {star_arrow} at {previous!r}')
            star_arrow, star_outward, side_next, i_next = _next_step(side, i)

        arrow_map[arrow_id] = star_arrow
        side, i = side_next, i_next
        vertex_map[f'{side}{i}'] = w
        previous = w

    if side == 'x':
        contracted.add(beta(i))
        vertex_map[y(i)] = previous

    n = i
    star = build_star(n).quiver

    dim_star = DimVector.of(star, {
        z: 0 if vertex_map[z] is None else d[vertex_map[z]] for z in star.vertices
    })

    log.debug(f'embedding: n={n}, case={case}, opposite={opposite}, contracted={sorted(contracted)}')

    return StarEmbedding(
        source=q,
        source_dim=d,
        opposite=opposite,
        n=n,
        case=case,
        contracted=frozenset(contracted),
        arrow_map=tuple((a.id, arrow_map[a.id]) for a in normalized.arrows),
        vertex_map=tuple((z, vertex_map[z]) for z in star.vertices),
        dim_star=dim_star,
    )


def star_quiver_of(e: StarEmbedding) -> Quiver:
    return build_star(e.n).quiver


def star_extend(v: Representation, e: StarEmbedding) -> Representation:
    """
    V*1: the matrices of V over the mapped arrows, identities over the
    contracted arrows, and the empty d*(y0) x 0 matrix over beta0 in the
    both-inward case.
    """

    if v.quiver != e.source or v.dim != e.source_dim:
        raise EmbeddingMismatchError("representation does not match the embedding's quiver and dimension")

    w = transpose_rep(v) if e.opposite else v
    star = star_quiver_of(e)
    dim = e.dim_star
    field = v.field

    mats = {}
    for a in star.arrows:
        source = e.source_arrow(a.id)
        if a.id in e.contracted:
            mats[a.id] = ExactMatrix.identity(dim[a.tail], field)
        elif source is not None:
            mats[a.id] = w.mat(source)
        else:
            mats[a.id] = ExactMatrix.zeros(dim[a.tail], dim[a.head], field)

    return Representation.of(star, dim, mats, field)


def extend_group(g: GroupElement, e: StarEmbedding) -> GroupElement:
    """
    Extend g in GL(d) to GL(d*) by repeating factors along contracted arrows,
    so that star_extend(V.g) = star_extend(V).extend_group(g).
    """

    if g.quiver != e.source or g.dim != e.source_dim:
        raise EmbeddingMismatchError("group element does not match the embedding")

    h = g.transpose_inverse() if e.opposite else g
    star = star_quiver_of(e)

    factors = {}
    for z, image in e.vertex_map:
        factors[z] = ExactMatrix.identity(0, g.field) if image is None else h.factor(image)

    return GroupElement.of(star, e.dim_star, factors, g.field)


def in_X_Q(w: Representation, e: StarEmbedding) -> bool:
    """
    True iff the matrix over every contracted arrow is square and invertible.
    """

    if w.quiver != star_quiver_of(e) or w.dim != e.dim_star:
        raise EmbeddingMismatchError("representation is not on the embedding's star quiver")

    return all(is_invertible(w.mat(a)) for a in sorted(e.contracted))


def contraction_check(e: StarEmbedding) -> bool:
    """
    True iff contracting the star quiver along the plan gives back the
    normalized source quiver (x0 and beta0 dropped in the both-inward case).
    """

    target, _ = contract(star_quiver_of(e), e.contracted)

    graph = target.to_multidigraph()
    if e.case == BOTH_INWARD:
        graph.remove_node(x(0))

    return nx.is_isomorphic(graph, e.normalized.to_multidigraph())
