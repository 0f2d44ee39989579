from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple, Union

import networkx as nx

from dquiver.error import QuiverError, RepresentationError


@dataclass(frozen=True)
class Arrow:
    id: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


LazyArrow = Union[Arrow, Tuple[str, str, str]]


@dataclass(frozen=True)
class Quiver:
    """
    A directed multigraph with named arrows.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> q.arrow('a')
        Arrow(id='a', tail='1', head='2')
        >>> q.opposite().arrow('a')
        Arrow(id='a', tail='2', head='1')
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    def __post_init__(self):

        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError(f"duplicate vertex ids: {self.vertices}")

        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError(f"duplicate arrow ids: {ids}")

        known = set(self.vertices)
        for a in self.arrows:
            if a.tail not in known or a.head not in known:
                raise QuiverError(f"arrow {a.id!r} references an unknown vertex")

    @classmethod
    def of(cls, vertices: Iterable[str], arrows: Iterable[LazyArrow]) -> 'Quiver':
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows)
        return cls(tuple(map(str, vertices)), arrows)

    @property
    def arrow_ids(self) -> Tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise QuiverError(f"unknown arrow: {arrow_id!r}")

    def opposite(self) -> 'Quiver':
        """The quiver with every arrow reversed, arrow ids kept."""
        return Quiver(self.vertices, tuple(Arrow(a.id, a.head, a.tail) for a in self.arrows))

    @property
    def has_loops(self) -> bool:
        return any(a.is_loop for a in self.arrows)

    def to_multidigraph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.tail, a.head, key=a.id)
        return g

    def underlying_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for a in self.arrows:
            g.add_edge(a.tail, a.head, key=a.id)
        return g


@dataclass(frozen=True, order=True)
class DimVector:
    """
    A dimension vector, stored in the vertex order of its quiver.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> d = DimVector.of(q, {'1': 1, '2': 0})
        >>> d['1'], d.total
        (1, 1)
        >>> str(d)
        '10'
    """

    values: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        for vertex, value in self.values:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise RepresentationError(f"dimension at {vertex!r} must be a natural number, got {value!r}")

    @classmethod
    def of(cls, quiver: Quiver, mapping: Mapping[str, int]) -> 'DimVector':

        missing = [z for z in quiver.vertices if z not in mapping]
        if missing:
            raise RepresentationError(f"dimension vector misses vertices {missing}")

        extra = set(mapping) - set(quiver.vertices)
        if extra:
            raise RepresentationError(f"dimension vector names unknown vertices {sorted(extra)}")

        return cls(tuple((z, mapping[z]) for z in quiver.vertices))

    @classmethod
    def zero(cls, quiver: Quiver) -> 'DimVector':
        return cls(tuple((z, 0) for z in quiver.vertices))

    def __getitem__(self, vertex: str) -> int:
        for z, value in self.values:
            if z == vertex:
                return value
        raise RepresentationError(f"no dimension for vertex {vertex!r}")

    def as_dict(self) -> Dict[str, int]:
        return dict(self.values)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(z for z, _ in self.values)

    @property
    def vector(self) -> Tuple[int, ...]:
        return tuple(value for _, value in self.values)

    @property
    def total(self) -> int:
        return sum(self.vector)

    @property
    def is_zero(self) -> bool:
        return self.total == 0

    def _check(self, other: 'DimVector'):
        if self.vertices != other.vertices:
            raise RepresentationError("dimension vectors live on different quivers")

    def __add__(self, other: 'DimVector') -> 'DimVector':
        self._check(other)
        return DimVector(tuple((z, a + b) for (z, a), b in zip(self.values, other.vector)))

    def __sub__(self, other: 'DimVector') -> 'DimVector':
        self._check(other)
        return DimVector(tuple((z, a - b) for (z, a), b in zip(self.values, other.vector)))

    def fits_in(self, other: 'DimVector') -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.vector, other.vector))

    def __str__(self):
        if all(v < 10 for v in self.vector):
            return ''.join(map(str, self.vector))
        return ','.join(map(str, self.vector))


@dataclass(frozen=True)
class ContractionPlan:
    """
    The outcome of contracting `arrows` of `source`: the contracted quiver
    and the map sending every source vertex to its contracted vertex.
    """

    source: Quiver
    target: Quiver
    arrows: FrozenSet[str]
    vertex_map: Tuple[Tuple[str, str], ...]

    def image(self, vertex: str) -> str:
        for z, image in self.vertex_map:
            if z == vertex:
                return image
        raise QuiverError(f"vertex {vertex!r} is not in the contracted quiver")


@dataclass(frozen=True)
class TypeDShape:
    """
    The branch vertex of a type D quiver, its two short branches as
    (leaf, arrow) pairs in vertex order, and the long branch as the
    (vertex, arrow) steps walking away from the branch vertex.
    """

    branch: str
    short: Tuple[Tuple[str, str], Tuple[str, str]]
    long: Tuple[Tuple[str, str], ...]
