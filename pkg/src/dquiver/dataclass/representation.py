from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple, Union

from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.error import RepresentationError, SingularMatrixError
from dquiver.field import QQ, Field
from dquiver.linalg import ExactMatrix, inverse, is_invertible


LazyMatrix = Union[ExactMatrix, Sequence[Sequence]]
LazyDim = Union[DimVector, Mapping[str, int]]


def _as_dim(quiver: Quiver, dim: LazyDim) -> DimVector:
    return dim if isinstance(dim, DimVector) else DimVector.of(quiver, dim)


def _as_matrix(m: LazyMatrix, rows: int, cols: int, field: Field) -> ExactMatrix:
    if isinstance(m, ExactMatrix):
        return m
    return ExactMatrix.from_rows(m, field, cols=cols if not m else None)


@dataclass(frozen=True)
class Representation:
    """
    A matrix over every arrow; the matrix over a has d(ta) rows and d(ha)
    columns.

    Examples:
        >>> q = Quiver.of(['1', '2'], [('a', '1', '2')])
        >>> v = Representation.of(q, {'1': 1, '2': 2}, {'a': [[1, 0]]})
        >>> v.mat('a').shape
        (1, 2)
        >>> Representation.of(q, {'1': 1, '2': 2}, {'a': [[1]]})
        Traceback (most recent call last):
        ...
        dquiver.error.RepresentationError: matrix over 'a' is 1x1, expected 1x2
    """

    quiver: Quiver
    dim: DimVector
    mats: Tuple[Tuple[str, ExactMatrix], ...]
    field: Field = QQ

    def __post_init__(self):

        if self.dim.vertices != self.quiver.vertices:
            raise RepresentationError("dimension vector does not match the quiver")

        given = [arrow_id for arrow_id, _ in self.mats]
        if given != list(self.quiver.arrow_ids):
            raise RepresentationError(
                f"matrices given for {given}, expected {list(self.quiver.arrow_ids)}"
            )

        for a, (_, m) in zip(self.quiver.arrows, self.mats):

            expected = (self.dim[a.tail], self.dim[a.head])
            if m.shape != expected:
                raise RepresentationError(
                    f"matrix over {a.id!r} is {m.rows}x{m.cols}, expected {expected[0]}x{expected[1]}"
                )
            if m.field != self.field:
                raise RepresentationError(f"matrix over {a.id!r} is over {m.field}, expected {self.field}")

    @classmethod
    def of(cls, quiver: Quiver, dim: LazyDim, mats: Mapping[str, LazyMatrix],
           field: Field = QQ) -> 'Representation':

        dim = _as_dim(quiver, dim)

        unknown = set(mats) - set(quiver.arrow_ids)
        if unknown:
            raise RepresentationError(f"matrices given for unknown arrows {sorted(unknown)}")

        pairs = []
        for a in quiver.arrows:
            if a.id not in mats:
                raise RepresentationError(f"no matrix over arrow {a.id!r}")
            pairs.append((a.id, _as_matrix(mats[a.id], dim[a.tail], dim[a.head], field)))

        return cls(quiver, dim, tuple(pairs), field)

    @classmethod
    def zero(cls, quiver: Quiver, dim: LazyDim, field: Field = QQ) -> 'Representation':
        dim = _as_dim(quiver, dim)
        mats = {a.id: ExactMatrix.zeros(dim[a.tail], dim[a.head], field) for a in quiver.arrows}
        return cls.of(quiver, dim, mats, field)

    def mat(self, arrow_id: str) -> ExactMatrix:
        for a, m in self.mats:
            if a == arrow_id:
                return m
        raise RepresentationError(f"no matrix over arrow {arrow_id!r}")

    def as_dict(self) -> Dict[str, ExactMatrix]:
        return dict(self.mats)


@dataclass(frozen=True)
class GroupElement:
    """
    An element of GL(d): one invertible matrix per vertex.
    """

    quiver: Quiver
    dim: DimVector
    factors: Tuple[Tuple[str, ExactMatrix], ...]
    field: Field = QQ

    def __post_init__(self):

        if [z for z, _ in self.factors] != list(self.quiver.vertices):
            raise RepresentationError("group element does not match the quiver vertices")

        for z, g in self.factors:
            if g.shape != (self.dim[z], self.dim[z]):
                raise RepresentationError(f"factor at {z!r} is {g.rows}x{g.cols}, expected size {self.dim[z]}")
            if not is_invertible(g):
                raise SingularMatrixError(f"factor at {z!r} is not invertible")

    @classmethod
    def of(cls, quiver: Quiver, dim: LazyDim, factors: Mapping[str, LazyMatrix],
           field: Field = QQ) -> 'GroupElement':

        dim = _as_dim(quiver, dim)
        pairs = tuple(
            (z, _as_matrix(factors[z], dim[z], dim[z], field)) for z in quiver.vertices
        )
        return cls(quiver, dim, pairs, field)

    @classmethod
    def identity(cls, quiver: Quiver, dim: LazyDim, field: Field = QQ) -> 'GroupElement':
        dim = _as_dim(quiver, dim)
        return cls.of(quiver, dim, {z: ExactMatrix.identity(dim[z], field) for z in quiver.vertices}, field)

    def factor(self, vertex: str) -> ExactMatrix:
        for z, g in self.factors:
            if z == vertex:
                return g
        raise RepresentationError(f"no factor at vertex {vertex!r}")

    def _map(self, fn) -> 'GroupElement':
        return GroupElement(self.quiver, self.dim, tuple((z, fn(g)) for z, g in self.factors), self.field)

    def inverse(self) -> 'GroupElement':
        return self._map(inverse)

    def transpose_inverse(self) -> 'GroupElement':
        """The element g' with g'_z = (g_z^T)^-1, acting on the opposite quiver."""
        opposite = self.quiver.opposite()
        return GroupElement(opposite, self.dim,
                            tuple((z, inverse(g.transpose())) for z, g in self.factors), self.field)

    def __matmul__(self, other: 'GroupElement') -> 'GroupElement':
        if other.dim != self.dim:
            raise RepresentationError("cannot compose group elements of different dimension vectors")
        return GroupElement(self.quiver, self.dim,
                            tuple((z, g @ other.factor(z)) for z, g in self.factors), self.field)
