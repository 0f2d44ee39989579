"""
Orbits of a Dynkin quiver representation space labeled by their
indecomposable summands, the degeneration order between them decided by rank
signatures on the star quiver, and the Hom-dimension order used as an
independent check.
"""

import functools
import logging

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import graphviz
import networkx as nx

from dquiver.const import DEFAULT_MAX_ORBITS, DEFAULT_SEED
from dquiver.dataclass.embedding import StarEmbedding
from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import Representation
from dquiver.error import AntisymmetryError, BudgetExceededError, EmbeddingMismatchError, RepresentationError
from dquiver.field import QQ, Field
from dquiver.quiver import catalog_for, direct_sum, orbit_codim, positive_roots
from dquiver.star import embed_typeD, star_extend
from dquiver.zigzag import RankSignature, signature


log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class OrbitLabel:
    """
    The multiset of positive roots of the indecomposable summands,
    stored sorted.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> label = OrbitLabel.of([DimVector.of(q, {'1': 0, '2': 1}), DimVector.of(q, {'1': 1, '2': 0})])
        >>> str(label), str(label.dim)
        ('01+10', '11')
    """

    summands: Tuple[DimVector, ...]

    @classmethod
    def of(cls, summands: Sequence[DimVector]) -> 'OrbitLabel':
        return cls(tuple(sorted(summands)))

    @property
    def dim(self) -> Optional[DimVector]:
        if not self.summands:
            return None
        return functools.reduce(lambda a, b: a + b, self.summands[1:], self.summands[0])

    def to_json(self) -> List[List[int]]:
        return [list(r.vector) for r in self.summands]

    def __str__(self):
        return '+'.join(map(str, self.summands)) or '0'


def _check_pair(v: Representation, w: Representation):
    if v.quiver != w.quiver or v.dim != w.dim:
        raise RepresentationError("representations live on different quivers or dimension vectors")
    if v.field != w.field:
        raise RepresentationError(f"representations are over different fields: {v.field}, {w.field}")


def _star_signature(v: Representation, e: StarEmbedding) -> RankSignature:
    if v.quiver != e.source or v.dim != e.source_dim:
        raise EmbeddingMismatchError("representation does not match the embedding")
    return signature(star_extend(v, e))


def same_orbit(v: Representation, w: Representation, e: StarEmbedding) -> bool:
    """
    True iff V and W are isomorphic, i.e. their extensions to the star
    quiver have the same rank signature.
    """

    _check_pair(v, w)
    return _star_signature(v, e).same_as(_star_signature(w, e))


def degenerates_to(v: Representation, w: Representation, e: StarEmbedding) -> bool:
    """
    True iff the orbit of W lies in the closure of the orbit of V: every
    rank of W*1 is at most the matching rank of V*1.

    :param v: The representation whose orbit closure is tested.
    :param w: The candidate degeneration.
    :param e: Embedding of the common quiver and dimension vector.
    """

    _check_pair(v, w)
    return _star_signature(w, e).dominated_by(_star_signature(v, e))


def bongartz_leq(v: Representation, w: Representation, seed: int = DEFAULT_SEED) -> bool:
    """
    True iff dim Hom(X, V) <= dim Hom(X, W) for every indecomposable X, that
    is W lies in the orbit closure of V.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> v = Representation.of(q, {'1': 1, '2': 1}, {'a': [[1]]})
        >>> zero = Representation.zero(q, {'1': 1, '2': 1})
        >>> bongartz_leq(v, zero), bongartz_leq(zero, v)
        (True, False)
    """

    _check_pair(v, w)
    catalog = catalog_for(v.quiver, v.field, seed)
    return all(a <= b for a, b in zip(catalog.hom_vector(v), catalog.hom_vector(w)))


# -- enumeration ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _count(roots: Tuple[Tuple[int, ...], ...], remaining: Tuple[int, ...], start: int) -> int:

    if not any(remaining):
        return 1

    total = 0
    for k in range(start, len(roots)):
        rest = tuple(a - b for a, b in zip(remaining, roots[k]))
        if min(rest) >= 0:
            total += _count(roots, rest, k)
    return total


def _multisets(roots: Sequence[DimVector], remaining: Tuple[int, ...], start: int) -> Iterator[List[DimVector]]:

    if not any(remaining):
        yield []
        return

    for k in range(start, len(roots)):
        rest = tuple(a - b for a, b in zip(remaining, roots[k].vector))
        if min(rest) >= 0:
            for tail in _multisets(roots, rest, k):
                yield [roots[k]] + tail


def count_orbits(q: Quiver, d: DimVector) -> int:
    """
    The number of multisets of positive roots summing to d.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> count_orbits(q, DimVector.of(q, {'1': 1, '2': 1}))
        2
        >>> count_orbits(q, DimVector.of(q, {'1': 2, '2': 2}))
        3
    """

    roots = tuple(r.vector for r in positive_roots(q))
    return _count(roots, d.vector, 0)


def enumerate_orbits(q: Quiver, d: DimVector, max_orbits: int = DEFAULT_MAX_ORBITS,
                     seed: int = DEFAULT_SEED, field: Field = QQ) -> List[Tuple[OrbitLabel, Representation]]:
    """
    Every orbit of rep_Q(d) as its label and a representative, the direct
    sum of one sampled indecomposable per summand.

    :param q: A Dynkin quiver.
    :param d: The dimension vector.
    :param max_orbits: Refuse to enumerate when there are more orbits.
    :param seed: Seed of the sampled indecomposables.
    :param field: Field of the representatives.
    """

    count = count_orbits(q, d)
    log.debug(f'{count} orbits in dimension {d}')

    if count > max_orbits:
        raise BudgetExceededError(f"{count} orbits in dimension {d} exceed the budget of {max_orbits}", count)

    catalog = catalog_for(q, field, seed)

    orbits = []
    for summands in _multisets(positive_roots(q), d.vector, 0):
        label = OrbitLabel.of(summands)
        if summands:
            rep = direct_sum(*(catalog.indecomposable(r) for r in label.summands))
        else:
            rep = Representation.zero(q, d, field)
        orbits.append((label, rep))

    return sorted(orbits, key=lambda o: o[0])


# -- posets -----------------------------------------------------------------


@dataclass
class PosetNode:

    label: OrbitLabel
    representative: Representation
    signature: Optional[RankSignature]
    codim: int


@dataclass
class DegenerationPoset:
    """
    Orbits of rep_Q(d) with the covering relation of the degeneration
    order; an edge (i, j) means node j lies in the closure of node i and
    nothing lies strictly between them.
    """

    quiver: Quiver
    dim: DimVector
    nodes: List[PosetNode]
    edges: List[Tuple[int, int]]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.edges)
        return g

    @property
    def generic(self) -> int:
        """Index of the dense orbit, the unique node without incoming edges."""

        tops = [i for i, deg in self.graph().in_degree() if deg == 0]
        if len(tops) != 1:
            raise AntisymmetryError(f"expected a unique maximal orbit, found {len(tops)}", self.dump())
        return tops[0]

    def edge_labels(self) -> List[Tuple[str, str]]:
        return sorted((str(self.nodes[i].label), str(self.nodes[j].label)) for i, j in self.edges)

    def dump(self) -> str:
        lines = [f'{i}: {node.label} codim={node.codim}' for i, node in enumerate(self.nodes)]
        lines += [f'{i} -> {j}' for i, j in self.edges]
        return '\n'.join(lines)

    def to_json(self) -> dict:
        return {
            'vertices': list(self.quiver.vertices),
            'dim': list(self.dim.vector),
            'nodes': [
                {
                    'id': i,
                    'label': node.label.to_json(),
                    'signature': None if node.signature is None else list(node.signature.values),
                    'codim': node.codim,
                }
                for i, node in enumerate(self.nodes)
            ],
            'edges': [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:

        dot = graphviz.Digraph(name='degenerations', comment=f'dimension {self.dim}')
        for i, node in enumerate(self.nodes):
            dot.node(str(i), f'{node.label}\ncodim {node.codim}')
        for i, j in self.edges:
            dot.edge(str(i), str(j))

        return dot.source


def _reduce(relation: Dict[Tuple[int, int], bool], size: int, dump) -> List[Tuple[int, int]]:
    """
    Hasse edges of the order given by relation[(i, j)] == (j <= i).
    """

    g = nx.DiGraph()
    g.add_nodes_from(range(size))

    for i in range(size):
        for j in range(i + 1, size):
            down, up = relation[(i, j)], relation[(j, i)]
            if down and up:
                raise AntisymmetryError(f"orbits {i} and {j} lie in each other's closure", dump())
            if down:
                g.add_edge(i, j)
            elif up:
                g.add_edge(j, i)

    if not nx.is_directed_acyclic_graph(g):
        raise AntisymmetryError("the degeneration relation has a cycle", dump())

    return sorted(nx.transitive_reduction(g).edges())


def _poset(q: Quiver, d: DimVector, nodes: List[PosetNode], leq) -> DegenerationPoset:

    size = len(nodes)
    relation = {(i, j): leq(i, j) for i in range(size) for j in range(size) if i != j}
    poset = DegenerationPoset(q, d, nodes, [])

    poset.edges = _reduce(relation, size, poset.dump)
    log.debug(f'poset with {size} orbits and {len(poset.edges)} covers')
    return poset


def _nodes(q: Quiver, d: DimVector, e: Optional[StarEmbedding], max_orbits: int,
           seed: int, field: Field) -> List[PosetNode]:

    return [
        PosetNode(
            label=label,
            representative=rep,
            signature=None if e is None else _star_signature(rep, e),
            codim=orbit_codim(rep),
        )
        for label, rep in enumerate_orbits(q, d, max_orbits, seed, field)
    ]


def hasse(q: Quiver, d: DimVector, e: Optional[StarEmbedding] = None, max_orbits: int = DEFAULT_MAX_ORBITS,
          seed: int = DEFAULT_SEED, field: Field = QQ) -> DegenerationPoset:
    """
    The degeneration poset of rep_Q(d) with the order read off the rank
    signatures on the star quiver.
    """

    e = embed_typeD(q, d) if e is None else e
    nodes = _nodes(q, d, e, max_orbits, seed, field)

    def leq(i: int, j: int) -> bool:
        return nodes[j].signature.dominated_by(nodes[i].signature)

    return _poset(q, d, nodes, leq)


def hasse_oracle(q: Quiver, d: DimVector, max_orbits: int = DEFAULT_MAX_ORBITS,
                 seed: int = DEFAULT_SEED, field: Field = QQ) -> DegenerationPoset:
    """
    The degeneration poset of rep_Q(d) with the order from Hom dimensions
    against the indecomposables. Works for any Dynkin quiver of type A or D.
    """

    nodes = _nodes(q, d, None, max_orbits, seed, field)
    catalog = catalog_for(q, field, seed)
    homs = [catalog.hom_vector(node.representative) for node in nodes]

    def leq(i: int, j: int) -> bool:
        return all(a <= b for a, b in zip(homs[i], homs[j]))

    return _poset(q, d, nodes, leq)


@dataclass(frozen=True)
class OrderVerdict:
    """
    How the orbits of two representations compare: `leq` when the first lies
    in the closure of the second, `geq` for the converse. The oracle fields
    repeat the comparison with Hom dimensions and multiplicities.
    """

    same_orbit: bool
    leq: bool
    geq: bool
    oracle: Optional[Tuple[bool, bool, bool]] = None

    @property
    def agree(self) -> bool:
        return self.oracle is None or self.oracle == (self.same_orbit, self.leq, self.geq)

    def to_json(self) -> dict:
        data = {'same_orbit': self.same_orbit, 'leq': self.leq, 'geq': self.geq}
        if self.oracle is not None:
            same, leq, geq = self.oracle
            data['oracle'] = {'same_orbit': same, 'leq': leq, 'geq': geq}
            data['verdict'] = 'AGREE' if self.agree else 'DISAGREE'
        return data


def compare_orbits(v: Representation, w: Representation, e: Optional[StarEmbedding] = None,
                   oracle: bool = False, seed: int = DEFAULT_SEED) -> OrderVerdict:
    """
    Compare the orbits of V and W through the rank signatures of their
    extensions, and optionally through the Hom-dimension criterion.
    """

    _check_pair(v, w)
    e = embed_typeD(v.quiver, v.dim) if e is None else e

    sv, sw = _star_signature(v, e), _star_signature(w, e)
    verdict = OrderVerdict(sv.same_as(sw), sv.dominated_by(sw), sw.dominated_by(sv))

    if not oracle:
        return verdict

    catalog = catalog_for(v.quiver, v.field, seed)
    same = catalog.multiplicities(v) == catalog.multiplicities(w)
    checked = (same, bongartz_leq(w, v, seed), bongartz_leq(v, w, seed))

    if checked != (verdict.same_orbit, verdict.leq, verdict.geq):
        log.debug(f'oracle disagrees: ranks say {verdict}, Hom dimensions say {checked}')

    return OrderVerdict(verdict.same_orbit, verdict.leq, verdict.geq, checked)
