from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.error import EmbeddingMismatchError


COMPOSABLE = 'composable'
BOTH_INWARD = 'both-inward'


@dataclass(frozen=True)
class StarEmbedding:
    """
    A plan realizing a type D quiver as a contraction of the star quiver of
    rank `n`.

    `arrow_map` sends arrows of the normalized source (the source, or its
    opposite when `opposite` is set) to star arrows, `vertex_map` sends every
    star vertex to the source vertex it collapses onto (None for x0 in the
    both-inward case) and `contracted` lists the star arrows carrying
    identities.
    """

    source: Quiver
    source_dim: DimVector
    opposite: bool
    n: int
    case: str
    contracted: FrozenSet[str]
    arrow_map: Tuple[Tuple[str, str], ...]
    vertex_map: Tuple[Tuple[str, Optional[str]], ...]
    dim_star: DimVector

    @property
    def normalized(self) -> Quiver:
        return self.source.opposite() if self.opposite else self.source

    def image(self, star_vertex: str) -> Optional[str]:
        for z, image in self.vertex_map:
            if z == star_vertex:
                return image
        raise EmbeddingMismatchError(f"{star_vertex!r} is not a vertex of the star quiver")

    def star_arrow(self, source_arrow: str) -> str:
        for a, star in self.arrow_map:
            if a == source_arrow:
                return star
        raise EmbeddingMismatchError(f"{source_arrow!r} is not an arrow of the source quiver")

    def source_arrow(self, star_arrow: str) -> Optional[str]:
        for a, star in self.arrow_map:
            if star == star_arrow:
                return a
        return None

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'case': self.case,
            'opposite': self.opposite,
            'contracted': sorted(self.contracted),
            'arrow_map': dict(self.arrow_map),
            'vertex_map': dict(self.vertex_map),
            'dim_star': self.dim_star.as_dict(),
        }
