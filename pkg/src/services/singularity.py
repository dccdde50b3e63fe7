"""Adjacent A_n-triangle facets and the smoothability obstruction they carry"""
import logging
from itertools import combinations
from math import gcd

from src.errors import (
    InternalConsistencyError,
    InvalidInputError,
    NotUnimodularError,
)
from src.models.lattice import IntMatrix, LatticePoint
from src.models.polytope import Segment
from src.models.singularity import (
    AdjacentAnPair,
    ExtProfile,
    FacetClass,
    FacetTag,
    NormalForm,
    SmoothabilityVerdict,
    VerdictTag,
)
from src.services.hull import lattice_length, polygon_edges, polygon_interior_points
from src.services.lattice_core import (
    cokernel,
    content,
    cross,
    det_columns,
    gcd_ext,
    inverse_unimodular,
    primitive,
)

logger = logging.getLogger(__name__)


def height_one_form(points):
    """The linear form w with <w, v> = 1 on three non-collinear points"""
    a, b, c = points
    normal = cross(b - a, c - a)
    h = normal.pair(a)
    if normal.is_zero() or h == 0 or content(normal.coords) % h:
        raise InvalidInputError(f"no integral height-1 form through {[v.coords for v in points]}")
    return type(normal)(tuple(x // h for x in normal.coords))


def _counterclockwise(points, w):
    a, b, c = points
    return (a, b, c) if cross(b - a, c - a).pair(LatticePoint(w.coords)) > 0 else (a, c, b)


def classify_triangle(points):
    points = tuple(points)
    if abs(det_columns(*points)) == 1:
        return FacetClass(FacetTag.SMOOTH)

    try:
        w = height_one_form(points)
    except InvalidInputError:
        return FacetClass(FacetTag.OTHER, witness="not on a height-1 plane")
    if any(w.pair(v) != 1 for v in points):
        raise InternalConsistencyError(f"form {w.coords} is not 1 on the triangle")

    lengths = sorted(lattice_length(s) for s in polygon_edges(points))
    if lengths[:2] != [1, 1] or lengths[2] < 2:
        return FacetClass(FacetTag.OTHER, witness=f"edge lengths {lengths}")

    interior = polygon_interior_points(_counterclockwise(points, w), w, 1)
    if interior:
        return FacetClass(FacetTag.OTHER, witness=f"{len(interior)} interior lattice points")

    return FacetClass(FacetTag.AN_TRIANGLE, n=lengths[2] - 1)


def classify_facet(p, f):
    if not f.is_triangle:
        return FacetClass(FacetTag.OTHER, witness=f"{len(f.vertex_indices)}-gon facet")
    fc = classify_triangle(p.facet_points(f))
    logger.debug("facet %s classified as %s", f.vertex_indices, fc.label)
    return fc


def _long_edge(points, n):
    return next(
        frozenset((s.start, s.end)) for s in polygon_edges(points) if lattice_length(s) == n + 1
    )


def _opposite_sides(rho_u, rho_v, rho0, rho1):
    eta = cross(rho_u, rho_v)
    return eta.pair(rho0) * eta.pair(rho1) < 0


def _make_pair(n, t0, t1, edge, facet_ids):
    (apex0,) = set(t0) - edge
    (apex1,) = set(t1) - edge
    rho_u, rho_v = sorted(edge)
    if not _opposite_sides(rho_u, rho_v, apex0, apex1):
        return None
    w0 = height_one_form(t0)
    w1 = height_one_form(t1)
    return AdjacentAnPair(
        n=n, rho0=apex0, rho1=apex1, rho_u=rho_u, rho_v=rho_v,
        w0=w0, w1=w1, pairing=w1.pair(apex0), facet_ids=facet_ids,
    )


def find_adjacent_pairs(p, classes=None):
    """Adjacent A_n-triangle facet pairs, T0 being the facet with the smaller apex"""
    if classes is None:
        classes = [classify_facet(p, f) for f in p.facets]
    triangles = [
        (i, fc.n, p.facet_points(f))
        for i, (f, fc) in enumerate(zip(p.facets, classes))
        if fc.tag is FacetTag.AN_TRIANGLE
    ]

    pairs = []
    for (i, n_i, t_i), (j, n_j, t_j) in combinations(triangles, 2):
        if n_i != n_j:
            continue
        edge = _long_edge(t_i, n_i)
        if edge != _long_edge(t_j, n_j):
            continue
        if min(set(t_j) - edge) < min(set(t_i) - edge):
            i, t_i, j, t_j = j, t_j, i, t_i
        pair = _make_pair(n_i, t_i, t_j, edge, (i, j))
        if pair is None:
            logger.debug("facets %d and %d share a long edge on one side of its plane", i, j)
            continue
        pairs.append(pair)
    return sorted(pairs, key=lambda pr: tuple(sorted(pr.facet_ids)))


def adjacent_pair_from_triangles(t0, t1):
    """Pair built from two bare triangles, T0 first; no enclosing polytope needed"""
    t0 = tuple(v if isinstance(v, LatticePoint) else LatticePoint(tuple(v)) for v in t0)
    t1 = tuple(v if isinstance(v, LatticePoint) else LatticePoint(tuple(v)) for v in t1)
    c0, c1 = classify_triangle(t0), classify_triangle(t1)
    for fc in (c0, c1):
        if fc.tag is not FacetTag.AN_TRIANGLE:
            raise InvalidInputError(f"not an A_n-triangle ({fc.label}: {fc.witness})")
    if c0.n != c1.n:
        raise InvalidInputError(f"A{c0.n} and A{c1.n} triangles cannot be adjacent")
    edge = _long_edge(t0, c0.n)
    if edge != _long_edge(t1, c1.n) or set(t0) == set(t1):
        raise InvalidInputError("triangles do not share their long edge")
    pair = _make_pair(c0.n, t0, t1, edge, (0, 1))
    if pair is None:
        raise InvalidInputError("triangles lie on the same side of the plane through their edge")
    return pair


def pairing_value(pair):
    value = pair.w1.pair(pair.rho0)
    if value != pair.w0.pair(pair.rho1):
        raise InternalConsistencyError(
            f"<w1, rho0> = {value} but <w0, rho1> = {pair.w0.pair(pair.rho1)}"
        )
    return value


def normal_form_from_coordinates(a, b, n, U=None):
    """NormalForm of the two-cone fan with rho0 = (a, b, -1) in normal coordinates"""
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")
    r = gcd(n + 1, b)
    p, q = b // r, (n + 1) // r
    g, s, t = gcd_ext(p, q)
    nf = NormalForm(
        U=U if U is not None else IntMatrix.identity(3),
        a=a, b=b, n=n, r=r, p=p, q=q, s=s, t=t,
        d_x=b - (n + 1) * (a + b),
        d_y=-b,
        d_z=-a - b,
    )
    if g != 1 or nf.pairing != -nf.d_z - 1 or nf.d_x + nf.d_y != (n + 1) * nf.d_z:
        raise InternalConsistencyError(f"normal form identities fail for {nf}")
    return nf


def normal_form(pair):
    n = pair.n
    rho_hat = pair.rho_u + primitive(pair.rho_v - pair.rho_u)
    basis = IntMatrix.from_columns([pair.rho_u.coords, rho_hat.coords, pair.rho1.coords])
    try:
        U = inverse_unimodular(basis)
    except NotUnimodularError as e:
        raise InternalConsistencyError(f"(rho_u, rho_hat, rho1) is not a basis: {e}") from e

    a, b, c = U.apply(pair.rho0).coords
    if c != -1 or U.apply(pair.rho_v).coords != (-n, n + 1, 0):
        raise InternalConsistencyError(f"normal form failed: U*rho0 = {(a, b, c)}")

    nf = normal_form_from_coordinates(a, b, n, U)
    pv = pairing_value(pair)
    if nf.pairing != pv:
        raise InternalConsistencyError(f"normal form identities fail for {nf}")
    return nf


def ray_map(nf):
    """Columns rho0, rho1, rho_u, rho_v in normal coordinates"""
    a, b, n = nf.a, nf.b, nf.n
    return IntMatrix.from_rows([
        [a, 0, 1, -n],
        [b, 0, 0, n + 1],
        [-1, 1, 0, 0],
    ])


def ray_map_kernel(nf):
    kernel = (nf.q, nf.q, -nf.n * nf.p - nf.a * nf.q, -nf.p)
    if any(ray_map(nf).apply(kernel)) or content(kernel) != 1:
        raise InternalConsistencyError(f"{kernel} is not a primitive kernel vector")
    return kernel


def class_group(nf):
    """Divisor class group Z + Z/r of the two-cone fan, as (free_rank, torsion)"""
    torsion = [nf.r] if nf.r > 1 else []
    expected = (1, torsion)
    computed = cokernel(ray_map(nf).transpose())
    if computed != expected:
        raise InternalConsistencyError(f"class group {expected} disagrees with SNF cokernel {computed}")
    return expected


def degree_map(nf):
    """Z^4 -> Z + Z/r on Cox coordinates (x0, x1, u, v)"""
    free_row = ray_map_kernel(nf)
    if nf.r == 1:
        return free_row, ()
    torsion_row = tuple(x % nf.r for x in (nf.s, nf.s, -nf.s * nf.a + nf.t * nf.n, nf.t))
    rays = ray_map(nf)
    for k in range(3):
        if sum(c * e for c, e in zip(torsion_row, rays.row(k))) % nf.r:
            raise InternalConsistencyError(f"torsion degrees {torsion_row} do not kill relation {k}")
    return free_row, torsion_row


def bundle_degrees(nf):
    return nf.d_x, nf.d_y, nf.d_z


def ext_profile(n, pairing):
    if n < 1:
        raise InvalidInputError(f"n must be at least 1, got {n}")
    return ExtProfile(degrees=tuple(-j * (pairing + 1) for j in range(2, n + 2)))


def dual_edge(pair):
    """The edge conv{-w0, -w1} of the dual polytope"""
    return Segment((-pair.w0).as_point(), (-pair.w1).as_point())


def verdict(p, classes=None, pairs=None):
    if classes is None:
        classes = [classify_facet(p, f) for f in p.facets]
    if pairs is None:
        pairs = find_adjacent_pairs(p, classes)
    witnesses = tuple(pair for pair in pairs if pairing_value(pair) >= 0)
    if witnesses:
        return SmoothabilityVerdict(VerdictTag.NOT_SMOOTHABLE, witnesses)
    if all(fc.tag is FacetTag.SMOOTH for fc in classes):
        return SmoothabilityVerdict(VerdictTag.ALREADY_SMOOTH)
    return SmoothabilityVerdict(VerdictTag.NO_OBSTRUCTION_FOUND)
