from dataclasses import dataclass
from typing import Tuple

from src.errors import InvalidInputError
from src.models.lattice import DualVector, LatticePoint


@dataclass(frozen=True)
class Segment:
    start: LatticePoint
    end: LatticePoint

    def __post_init__(self):
        if self.start == self.end:
            raise InvalidInputError(f"segment endpoints coincide at {self.start.coords}")


@dataclass(frozen=True)
class Facet:
    """A 2-face with vertices in counterclockwise order seen from outside.

    <support, v> = height on the facet's vertices and < height on every other
    vertex of the polytope.
    """
    vertex_indices: Tuple[int, ...]
    support: DualVector
    height: int

    @property
    def is_triangle(self):
        return len(self.vertex_indices) == 3

    def to_dict(self):
        return {
            'vertex_indices': list(self.vertex_indices),
            'support': self.support.to_list(),
            'height': self.height,
        }


@dataclass(frozen=True)
class LatticePolytope:
    vertices: Tuple[LatticePoint, ...]
    facets: Tuple[Facet, ...]
    edges: Tuple[Tuple[int, int], ...]

    def facet_points(self, facet):
        return tuple(self.vertices[i] for i in facet.vertex_indices)

    def facet_index(self, facet):
        return self.facets.index(facet)

    def edge_segments(self):
        return [Segment(self.vertices[i], self.vertices[j]) for i, j in self.edges]

    def contains(self, point):
        return all(f.support.pair(point) <= f.height for f in self.facets)

    def to_dict(self):
        return {
            'vertices': [v.to_list() for v in self.vertices],
            'facets': [f.to_dict() for f in self.facets],
            'edges': [list(e) for e in self.edges],
        }
