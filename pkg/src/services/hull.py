"""Lattice 3-polytopes: exact convex hull, facets, reflexivity, duality, lattice points"""
import logging
from itertools import product

from src.errors import DegeneratePolytopeError, NotLatticePolytopeError
from src.models.lattice import LatticePoint
from src.models.polytope import Facet, LatticePolytope, Segment
from src.services.lattice_core import content, cross, det_columns, primitive

logger = logging.getLogger(__name__)

ORIGIN = LatticePoint((0, 0, 0))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _orientation(a, b, c, p):
    # > 0 iff p lies strictly on the side (b - a) x (c - a) points to
    return det_columns(b - a, c - a, p - a)


def _initial_simplex(points):
    p0 = points[0]
    p1 = next((p for p in points if p != p0), None)
    if p1 is None:
        raise DegeneratePolytopeError()
    p2 = next((p for p in points if not cross(p1 - p0, p - p0).is_zero()), None)
    if p2 is None:
        raise DegeneratePolytopeError()
    p3 = next((p for p in points if _orientation(p0, p1, p2, p) != 0), None)
    if p3 is None:
        raise DegeneratePolytopeError()
    return p0, p1, p2, p3


def _triangulated_hull(points):
    """Incremental insertion; returns outward-oriented triangles"""
    p0, p1, p2, p3 = _initial_simplex(points)
    faces = []
    for a, b, c, d in ((p0, p1, p2, p3), (p0, p1, p3, p2), (p0, p2, p3, p1), (p1, p2, p3, p0)):
        faces.append((a, b, c) if _orientation(a, b, c, d) < 0 else (a, c, b))

    seeds = {p0, p1, p2, p3}
    for p in points:
        if p in seeds:
            continue
        visible = [f for f in faces if _orientation(*f, p) > 0]
        if not visible:
            continue
        visible_edges = {(f[i], f[(i + 1) % 3]) for f in visible for i in range(3)}
        horizon = sorted((a, b) for a, b in visible_edges if (b, a) not in visible_edges)
        faces = [f for f in faces if f not in visible]
        faces.extend((a, b, p) for a, b in horizon)
    return faces


def _order_polygon(points, normal):
    """Extreme points of a planar set, counterclockwise about normal (gift wrapping)"""
    start = min(points)
    polygon = [start]
    current = start
    while True:
        candidate = next(p for p in points if p != current)
        for p in points:
            if p == current or p == candidate:
                continue
            edge, other = candidate - current, p - current
            turn = _dot(cross(edge, other), normal)
            if turn < 0:
                candidate = p
            elif turn == 0 and _dot(edge, other) > 0 and _dot(other, other) > _dot(edge, edge):
                candidate = p
        if candidate == start:
            return polygon
        polygon.append(candidate)
        current = candidate


def convex_hull(points):
    """Convex hull of lattice points with facets sorted by support.

    Points that are not extreme (coplanar, collinear or interior) are dropped.
    """
    points = sorted({p if isinstance(p, LatticePoint) else LatticePoint(tuple(p)) for p in points})
    if len(points) < 4:
        raise DegeneratePolytopeError()

    planes = {}
    for a, b, c in _triangulated_hull(points):
        normal = primitive(cross(b - a, c - a))
        planes.setdefault((normal, normal.pair(a)), set()).update((a, b, c))

    polygons = {plane: _order_polygon(sorted(pts), plane[0]) for plane, pts in planes.items()}
    vertices = sorted({v for polygon in polygons.values() for v in polygon})
    index = {v: i for i, v in enumerate(vertices)}

    facets = []
    edges = set()
    for (support, height), polygon in sorted(polygons.items()):
        ids = tuple(index[v] for v in polygon)
        facets.append(Facet(vertex_indices=ids, support=support, height=height))
        for k, i in enumerate(ids):
            j = ids[(k + 1) % len(ids)]
            edges.add((min(i, j), max(i, j)))

    logger.debug("hull of %d points: %d vertices, %d facets", len(points), len(vertices), len(facets))
    return LatticePolytope(vertices=tuple(vertices), facets=tuple(facets), edges=tuple(sorted(edges)))


def transform(p, m):
    """Image of p under the linear map m (a unimodular 3x3 IntMatrix)"""
    return convex_hull([m.apply(v) for v in p.vertices])


def is_reflexive(p):
    origin_interior = all(f.support.pair(ORIGIN) < f.height for f in p.facets)
    return origin_interior and all(f.height == 1 for f in p.facets)


def dual(p):
    """Dual polytope {u : <u, v> >= -1 for v in p}; its points are elements of M"""
    if not is_reflexive(p):
        raise NotLatticePolytopeError()
    return convex_hull([(-f.support).as_point() for f in p.facets])


def _bounding_box(points):
    return [(min(c), max(c)) for c in zip(*(p.coords for p in points))]


def lattice_points(p):
    (x0, x1), (y0, y1), (z0, z1) = _bounding_box(p.vertices)
    return [
        point for point in (
            LatticePoint(xyz)
            for xyz in product(range(x0, x1 + 1), range(y0, y1 + 1), range(z0, z1 + 1))
        )
        if p.contains(point)
    ]


def lattice_length(s):
    return content((s.end - s.start).coords)


def facet_interior_lattice_points(p, f):
    """Lattice points in the relative interior of the facet f"""
    return polygon_interior_points(p.facet_points(f), f.support, f.height)


def polygon_interior_points(polygon, w, h):
    """Lattice points strictly inside a convex polygon on the plane <w, x> = h.

    The polygon must be listed counterclockwise about w.
    """
    polygon = list(polygon)
    box = _bounding_box(polygon)
    # solve <w, x> = h for one coordinate with w_k != 0, scan the other two
    k = next(i for i in range(3) if w[i])
    i, j = (axis for axis in range(3) if axis != k)

    inside = []
    for xi, xj in product(range(box[i][0], box[i][1] + 1), range(box[j][0], box[j][1] + 1)):
        rest = h - w[i] * xi - w[j] * xj
        if rest % w[k]:
            continue
        xk = rest // w[k]
        if not box[k][0] <= xk <= box[k][1]:
            continue
        coords = [0, 0, 0]
        coords[i], coords[j], coords[k] = xi, xj, xk
        x = LatticePoint(tuple(coords))
        if all(
            _dot(cross(b - a, x - a), w) > 0
            for a, b in zip(polygon, polygon[1:] + polygon[:1])
        ):
            inside.append(x)
    return sorted(inside)


def polygon_edges(polygon):
    polygon = list(polygon)
    return [Segment(a, b) for a, b in zip(polygon, polygon[1:] + polygon[:1])]
