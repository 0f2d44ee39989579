"""
Operations on quivers and their representations: the base-change action,
transpose duality, arrow contraction, Hom spaces and the Dynkin machinery
the Hom-dimension oracle is built on.
"""

import functools
import itertools
import logging
import random

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from dquiver.const import DEFAULT_SEED, SAMPLE_RETRIES
from dquiver.dataclass.quiver import Arrow, ContractionPlan, DimVector, Quiver, TypeDShape
from dquiver.dataclass.representation import GroupElement, Representation
from dquiver.error import (InternalError, NotAdmissibleError, NotDynkinError, NotTypeDError,
                           QuiverError, RepresentationError, SamplingError)
from dquiver.field import QQ, Field
from dquiver.linalg import ExactMatrix, block_diag, inverse, is_invertible, solve, solve_nullspace_dim


log = logging.getLogger(__name__)


def act(v: Representation, g: GroupElement) -> Representation:
    """
    The right action V.g = (g_ta^-1 V_a g_ha).

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> v = Representation.of(q, {'1': 1, '2': 2}, {'a': [[1, 0]]})
        >>> g = GroupElement.of(q, v.dim, {'1': [[1]], '2': [[2, 0], [0, 3]]})
        >>> act(v, g).mat('a').to_json()
        [[2, 0]]
    """

    if g.quiver != v.quiver or g.dim != v.dim:
        raise RepresentationError("group element is not sized by the representation")

    mats = {
        a.id: inverse(g.factor(a.tail)) @ v.mat(a.id) @ g.factor(a.head)
        for a in v.quiver.arrows
    }
    return Representation.of(v.quiver, v.dim, mats, v.field)


def transpose_rep(v: Representation) -> Representation:
    """
    The representation of the opposite quiver with every matrix transposed.
    """

    mats = {a: m.transpose() for a, m in v.mats}
    return Representation.of(v.quiver.opposite(), v.dim, mats, v.field)


def direct_sum(*reps: Representation) -> Representation:
    """
    Block-diagonal direct sum of representations of the same quiver.
    """

    if not reps:
        raise RepresentationError("direct sum of nothing")

    first = reps[0]
    for v in reps[1:]:
        if v.quiver != first.quiver or v.field != first.field:
            raise RepresentationError("direct summands live on different quivers or fields")

    dim = functools.reduce(lambda d, v: d + v.dim, reps[1:], first.dim)
    mats = {
        a.id: block_diag(*(v.mat(a.id) for v in reps), field=first.field)
        for a in first.quiver.arrows
    }
    return Representation.of(first.quiver, dim, mats, first.field)


def contract(q: Quiver, arrows: Iterable[str]) -> Tuple[Quiver, ContractionPlan]:
    """
    Contract every arrow of `arrows`. The set must span a forest; every
    tree collapses to its first vertex in `q`'s vertex order.

    Examples:
        >>> q = Quiver.of(['1', '2', '3'], [('a', '1', '2'), ('b', '3', '2')])
        >>> target, plan = contract(q, {'a'})
        >>> target.vertices, target.arrows
        (('1', '3'), (Arrow(id='b', tail='3', head='1'),))
        >>> plan.image('2')
        '1'
    """

    arrows = frozenset(arrows)

    unknown = arrows - set(q.arrow_ids)
    if unknown:
        raise QuiverError(f"cannot contract unknown arrows {sorted(unknown)}")

    forest = nx.MultiGraph()
    forest.add_nodes_from(q.vertices)
    for a in q.arrows:
        if a.id in arrows:
            forest.add_edge(a.tail, a.head, key=a.id)

    if arrows and not nx.is_forest(forest):
        raise NotAdmissibleError(f"arrows {sorted(arrows)} contain a cycle")

    order = {z: i for i, z in enumerate(q.vertices)}
    image = {}
    for component in nx.connected_components(forest):
        representative = min(component, key=order.__getitem__)
        for z in component:
            image[z] = representative

    vertices = tuple(z for z in q.vertices if image[z] == z)
    kept = tuple(
        Arrow(a.id, image[a.tail], image[a.head]) for a in q.arrows if a.id not in arrows
    )
    target = Quiver(vertices, kept)

    log.debug(f'contracted {sorted(arrows)}: {len(q.vertices)} -> {len(vertices)} vertices')

    plan = ContractionPlan(
        source=q,
        target=target,
        arrows=arrows,
        vertex_map=tuple((z, image[z]) for z in q.vertices),
    )
    return target, plan


def lift_dim(d: DimVector, plan: ContractionPlan) -> DimVector:
    """
    Pull a dimension vector on the contracted quiver back to the source:
    every vertex takes the value at its image.
    """

    if d.vertices != plan.target.vertices:
        raise RepresentationError("dimension vector does not live on the contracted quiver")

    return DimVector.of(plan.source, {z: d[image] for z, image in plan.vertex_map})


def hom_system(v: Representation, w: Representation) -> ExactMatrix:
    """
    Coefficient matrix of {V_a phi_ha = phi_ta W_a} in the entries of the
    phi_z in Mat(dV(z), dW(z)).
    """

    if v.quiver != w.quiver:
        raise RepresentationError("Hom between representations of different quivers")
    if v.field != w.field:
        raise RepresentationError("Hom between representations over different fields")

    field = v.field
    dv, dw = v.dim, w.dim

    offsets = {}
    total = 0
    for z in v.quiver.vertices:
        offsets[z] = total
        total += dv[z] * dw[z]

    rows = []
    for a in v.quiver.arrows:

        t, h = a.tail, a.head
        va, wa = v.mat(a.id), w.mat(a.id)

        for i in range(dv[t]):
            for j in range(dw[h]):

                row = [0] * total
                for k in range(dv[h]):
                    row[offsets[h] + k * dw[h] + j] += va[i, k]
                for m in range(dw[t]):
                    row[offsets[t] + i * dw[t] + m] -= wa[m, j]

                rows.append([field.normalize(x) for x in row])

    return ExactMatrix(len(rows), total, tuple(x for r in rows for x in r), field)


def hom_dim(v: Representation, w: Representation) -> int:
    """
    dim Hom(V, W).

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> v = Representation.of(q, {'1': 1, '2': 1}, {'a': [[1]]})
        >>> w = Representation.zero(q, {'1': 1, '2': 1})
        >>> hom_dim(v, w), hom_dim(w, v)
        (1, 1)
        >>> hom_dim(v, v)
        1
    """
    return solve_nullspace_dim(hom_system(v, w))


def orbit_codim(v: Representation) -> int:
    """
    Codimension of the orbit of V in its representation space:
    dim rep(d) - dim GL(d) + dim End(V).
    """

    d = v.dim
    rep_dim = sum(d[a.tail] * d[a.head] for a in v.quiver.arrows)
    group_dim = sum(x * x for x in d.vector)
    return rep_dim - group_dim + hom_dim(v, v)


# -- Dynkin combinatorics ---------------------------------------------------


def dynkin_type(q: Quiver) -> Tuple[str, int]:
    """
    The Dynkin type ('A', m) or ('D', m) of the underlying graph.

    Examples:
        >>> dynkin_type(Quiver.of(['1', '2', '3'], [('a', '1', '2'), ('b', '3', '2')]))
        ('A', 3)
    """

    if not q.vertices:
        raise NotDynkinError("the empty quiver has no Dynkin type")

    if q.has_loops:
        raise NotDynkinError("quivers with loops are not Dynkin")

    multi = q.underlying_graph()
    simple = nx.Graph(multi)

    if simple.number_of_edges() != multi.number_of_edges():
        raise NotDynkinError("quivers with multiple arrows are not Dynkin")

    if not nx.is_tree(simple):
        raise NotDynkinError("the underlying graph is not a tree")

    m = len(q.vertices)
    degrees = sorted((deg for _, deg in simple.degree()), reverse=True)

    if not degrees or degrees[0] <= 2:
        return 'A', m

    if degrees[0] == 3 and (len(degrees) < 2 or degrees[1] <= 2):
        branch_lengths = sorted(len(b) for b in _branches(simple, _branch_vertex(simple)))
        if branch_lengths[:2] == [1, 1]:
            return 'D', m
        raise NotDynkinError(f"type E{m} or affine shapes are unsupported (branches {branch_lengths})")

    raise NotDynkinError("the underlying graph has a vertex of degree > 3 or two branch vertices")


def _branch_vertex(graph: nx.Graph) -> str:
    return next(z for z, deg in graph.degree() if deg == 3)


def _branches(graph: nx.Graph, branch: str) -> List[List[str]]:
    """Paths from the neighbours of `branch` out to the leaves."""

    branches = []
    for start in graph.neighbors(branch):
        path = [start]
        previous, current = branch, start
        while True:
            nxt = [z for z in graph.neighbors(current) if z != previous]
            if not nxt:
                break
            previous, current = current, nxt[0]
            path.append(current)
        branches.append(path)
    return branches


def type_d_shape(q: Quiver) -> TypeDShape:
    """
    Locate the branch vertex and the short and long branches of a type D
    quiver. In D4 the long branch is the one whose leaf comes last in vertex
    order.
    """

    kind, _ = dynkin_type(q)
    if kind != 'D':
        raise NotTypeDError(f"expected a type D quiver, got type {kind}")

    multi = q.underlying_graph()
    simple = nx.Graph(multi)
    order = {z: i for i, z in enumerate(q.vertices)}

    branch = _branch_vertex(simple)
    branches = sorted(_branches(simple, branch), key=lambda b: (len(b), order[b[-1]]))

    def _arrow_between(u: str, w: str) -> str:
        return next(iter(multi[u][w]))

    shorts = sorted(branches[:2], key=lambda b: order[b[0]])
    short = tuple((b[0], _arrow_between(branch, b[0])) for b in shorts)

    path = [branch] + branches[2]
    long = tuple((w, _arrow_between(u, w)) for u, w in zip(path, path[1:]))

    return TypeDShape(branch=branch, short=short, long=long)


def tits_form(q: Quiver, x: Sequence[int]) -> int:
    """
    >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
    >>> tits_form(q, (1, 1))
    1
    """

    index = {z: i for i, z in enumerate(q.vertices)}
    return sum(v * v for v in x) - sum(x[index[a.tail]] * x[index[a.head]] for a in q.arrows)


def positive_roots(q: Quiver) -> List[DimVector]:
    """
    Positive roots of the underlying Dynkin diagram (types A and D) as
    dimension vectors, ordered by total dimension then lexicographically.

    Examples:
        >>> q = Quiver.of(['1', '2', '3'], [('a', '1', '2'), ('b', '3', '2')])
        >>> [str(r) for r in positive_roots(q)]
        ['001', '010', '100', '011', '110', '111']
    """

    kind, m = dynkin_type(q)
    bound = 2 if kind == 'D' else 1

    roots = [
        x for x in itertools.product(range(bound + 1), repeat=m)
        if any(x) and tits_form(q, x) == 1
    ]
    roots.sort(key=lambda x: (sum(x), x))

    log.debug(f'{len(roots)} positive roots for type {kind}{m}')
    return [DimVector(tuple(zip(q.vertices, x))) for x in roots]


positive_roots_typeD = positive_roots


# -- sampling ---------------------------------------------------------------


def random_representation(q: Quiver, dim: DimVector, rng: random.Random,
                          field: Field = QQ) -> Representation:
    mats = {a.id: ExactMatrix.random(dim[a.tail], dim[a.head], rng, field) for a in q.arrows}
    return Representation.of(q, dim, mats, field)


def random_invertible(n: int, rng: random.Random, field: Field = QQ) -> ExactMatrix:

    for _ in range(SAMPLE_RETRIES):
        g = ExactMatrix.random(n, n, rng, field)
        if is_invertible(g):
            return g

    raise SamplingError(f"no invertible {n}x{n} matrix after {SAMPLE_RETRIES} draws")


def random_group_element(q: Quiver, dim: DimVector, rng: random.Random,
                         field: Field = QQ) -> GroupElement:
    factors = {z: random_invertible(dim[z], rng, field) for z in q.vertices}
    return GroupElement.of(q, dim, factors, field)


def sample_indecomposable(q: Quiver, root: DimVector, seed: int = DEFAULT_SEED,
                          field: Field = QQ) -> Representation:
    """
    A random representation of dimension `root` that passes the brick test
    dim End(V) = 1. Entries are drawn from [-9, 9] over Q and uniformly over
    GF(p); the generator is seeded from `seed` and the root.

    :param q: A Dynkin quiver.
    :param root: A positive root of `q`.
    :param seed: Seed for reproducible sampling.
    :param field: Field of the sampled matrices.
    """

    if root.vertices != q.vertices or tits_form(q, root.vector) != 1:
        raise RepresentationError(f"{root} is not a positive root of the quiver")

    rng = random.Random(f'{seed}/{root}/{field}')

    for attempt in range(SAMPLE_RETRIES):

        v = random_representation(q, root, rng, field)
        if hom_dim(v, v) == 1:
            return v

        log.debug(f'root {root}: attempt {attempt} is not a brick, retrying')

    raise SamplingError(f"no brick of dimension {root} after {SAMPLE_RETRIES} attempts (seed {seed})", seed)


class IndecomposableCatalog:
    """
    One sampled indecomposable per positive root of a Dynkin quiver, with
    the Hom matrix between them. Used to recover Krull-Schmidt
    multiplicities and to evaluate the Hom-dimension degeneration criterion.
    """

    def __init__(self, quiver: Quiver, field: Field = QQ, seed: int = DEFAULT_SEED):

        self.quiver = quiver
        self.field = field
        self.seed = seed

        self._roots: List[DimVector] = positive_roots(quiver)
        self._reps: Dict[DimVector, Representation] = {}
        self._hom: Optional[ExactMatrix] = None

    @property
    def roots(self) -> List[DimVector]:
        return self._roots

    def indecomposable(self, root: DimVector) -> Representation:

        if root not in self._reps:
            self._reps[root] = sample_indecomposable(self.quiver, root, self.seed, self.field)

        return self._reps[root]

    def indecomposables(self) -> List[Representation]:
        return [self.indecomposable(r) for r in self._roots]

    def hom_vector(self, v: Representation) -> Tuple[int, ...]:
        """(dim Hom(X, V)) over every indecomposable X."""
        return tuple(hom_dim(x, v) for x in self.indecomposables())

    def hom_matrix(self) -> ExactMatrix:

        if self._hom is None:
            xs = self.indecomposables()
            self._hom = ExactMatrix.from_rows([[hom_dim(y, x) for x in xs] for y in xs], QQ)

        return self._hom

    def multiplicities(self, v: Representation) -> Tuple[DimVector, ...]:
        """
        The multiset of indecomposable summands of V, as a sorted tuple of
        roots, from  sum_X m_X dim Hom(Y, X) = dim Hom(Y, V).
        """

        if v.quiver != self.quiver:
            raise RepresentationError("representation is not on the catalog quiver")

        h = ExactMatrix.from_rows([[x] for x in self.hom_vector(v)], QQ, cols=1)
        m = solve(self.hom_matrix(), h)

        if m is None:
            raise InternalError("the Hom system of the indecomposables is inconsistent")

        counts = [m[i, 0] for i in range(m.rows)]
        if any(c.denominator != 1 or c < 0 for c in counts):
            raise InternalError(f"non-natural multiplicities {counts}")

        summands = []
        for root, count in zip(self._roots, counts):
            summands.extend([root] * int(count))

        return tuple(sorted(summands))


@functools.lru_cache(maxsize=None)
def catalog_for(quiver: Quiver, field: Field = QQ, seed: int = DEFAULT_SEED) -> IndecomposableCatalog:
    return IndecomposableCatalog(quiver, field, seed)


def multiplicities(v: Representation, seed: int = DEFAULT_SEED) -> Tuple[DimVector, ...]:
    """
    Krull-Schmidt multiplicities of V as a sorted tuple of positive roots.
    """
    return catalog_for(v.quiver, v.field, seed).multiplicities(v)