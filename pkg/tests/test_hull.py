import pytest
from hypothesis import assume, given, settings

from src.errors import DegeneratePolytopeError, InvalidInputError, NotLatticePolytopeError
from src.models.lattice import DualVector, LatticePoint
from src.models.polytope import Facet, Segment
from src.services.hull import (
    convex_hull,
    dual,
    facet_interior_lattice_points,
    is_reflexive,
    lattice_length,
    lattice_points,
    transform,
)
from src.services.lattice_core import cross
from tests.strategies import (
    A2_TETRAHEDRON,
    ALL_FIXTURES,
    OCTAHEDRON,
    brute_force_facet_interior,
    brute_force_lattice_points,
    elementary_product,
    points,
    reflexive_candidates,
    unimodular_matrices,
)


def test_flat_pair_hull(flat_pair):
    assert len(flat_pair.vertices) == 5
    assert len(flat_pair.facets) == 6
    assert all(f.is_triangle for f in flat_pair.facets)
    assert all(f.height == 1 for f in flat_pair.facets)


def test_simplex_hull(simplex):
    assert len(simplex.facets) == 4


def test_cube_hull(cube):
    assert len(cube.vertices) == 8
    assert len(cube.edges) == 12
    supports = {(f.support.coords, f.height) for f in cube.facets}
    assert supports == {
        ((1, 0, 0), 1), ((-1, 0, 0), 1), ((0, 1, 0), 1),
        ((0, -1, 0), 1), ((0, 0, 1), 1), ((0, 0, -1), 1),
    }
    assert all(len(f.vertex_indices) == 4 for f in cube.facets)


def test_non_extreme_points_are_dropped(cube):
    extra = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, -1, 1)]
    p = convex_hull(list(cube.vertices) + points(extra))
    assert p == cube


def test_facets_are_counterclockwise_and_supporting(flat_pair, cube, spread_pair):
    for p in (flat_pair, cube, spread_pair):
        for f in p.facets:
            a, b, c = p.facet_points(f)[:3]
            assert cross(b - a, c - a).pair(LatticePoint(f.support.coords)) > 0
            on = set(f.vertex_indices)
            for i, v in enumerate(p.vertices):
                value = f.support.pair(v)
                assert value == f.height if i in on else value < f.height


@pytest.mark.parametrize('coords', [
    [(0, 0, 0), (1, 0, 0), (0, 1, 0)],
    [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 3, 0)],
    [(0, 0, 0), (1, 1, 1), (2, 2, 2), (-3, -3, -3)],
    [(1, 1, 1)] * 5,
])
def test_degenerate_input(coords):
    with pytest.raises(DegeneratePolytopeError, match="degenerate: not full-dimensional"):
        convex_hull(points(coords))


def test_reflexivity(flat_pair, cube, simplex):
    assert is_reflexive(flat_pair)
    assert is_reflexive(cube)
    assert is_reflexive(simplex)


def test_not_reflexive_with_a_height_two_facet():
    p = convex_hull(points([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, -2, -2)]))
    assert not is_reflexive(p)
    assert any(f.support == DualVector((-5, 2, 2)) and f.height == 2 for f in p.facets)


def test_origin_on_the_boundary_is_not_reflexive():
    p = convex_hull(points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert not is_reflexive(p)


def test_dual_of_cube_is_octahedron(cube, octahedron):
    assert dual(cube) == octahedron
    assert dual(octahedron) == cube


def test_dual_of_flat_pair(flat_pair):
    vertices = set(dual(flat_pair).vertices)
    assert LatticePoint((1, -1, 0)) in vertices
    assert LatticePoint((1, -1, -1)) in vertices
    assert len(vertices) == 6


def test_dual_is_an_involution(flat_pair, spread_pair, simplex):
    for p in (flat_pair, spread_pair, simplex):
        assert dual(dual(p)) == p


def test_dual_of_non_reflexive():
    p = convex_hull(points([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-2, -2, -2)]))
    with pytest.raises(NotLatticePolytopeError, match="dual is not a lattice polytope"):
        dual(p)


def test_lattice_points(simplex, cube):
    assert sorted(lattice_points(simplex)) == sorted(points(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    ))
    assert len(lattice_points(cube)) == 27


@pytest.mark.parametrize('start, end, length', [
    ((0, 1, 0), (-2, -1, 0), 2),
    ((0, 0, 1), (0, 1, 0), 1),
    ((0, 0, 0), (0, 0, 6), 6),
])
def test_lattice_length(start, end, length):
    assert lattice_length(Segment(LatticePoint(start), LatticePoint(end))) == length


def test_segment_rejects_coincident_endpoints():
    with pytest.raises(InvalidInputError):
        Segment(LatticePoint((1, 2, 3)), LatticePoint((1, 2, 3)))


def _facet_with(p, vertices):
    wanted = set(points(vertices))
    return next(f for f in p.facets if set(p.facet_points(f)) == wanted)


def test_facet_interior_of_an_a1_triangle(flat_pair):
    f = _facet_with(flat_pair, [(0, 0, 1), (0, 1, 0), (-2, -1, 0)])
    assert facet_interior_lattice_points(flat_pair, f) == []


def test_facet_interior_of_an_a2_triangle():
    p = convex_hull(points(A2_TETRAHEDRON))
    f = _facet_with(p, [(0, 0, 1), (3, 0, 1), (1, 1, 1)])
    assert f.support == DualVector((0, 0, 1))
    assert facet_interior_lattice_points(p, f) == []


def test_facet_interior_of_a_cube_face(cube):
    top = next(f for f in cube.facets if f.support == DualVector((0, 0, 1)))
    assert facet_interior_lattice_points(cube, top) == [LatticePoint((0, 0, 1))]


def _assert_matches_brute_force(p):
    assert sorted(lattice_points(p)) == brute_force_lattice_points(p.vertices)
    for f in p.facets:
        expected = brute_force_facet_interior(p.vertices, f.support, f.height)
        assert facet_interior_lattice_points(p, f) == expected


@pytest.mark.parametrize('name', sorted(ALL_FIXTURES))
def test_fixtures_match_brute_force(name):
    _assert_matches_brute_force(convex_hull(points(ALL_FIXTURES[name])))


@settings(max_examples=100, deadline=None)
@given(reflexive_candidates(), unimodular_matrices(max_ops=3))
def test_random_reflexive_polytopes_match_brute_force(chosen, m):
    p = convex_hull(chosen)
    assume(is_reflexive(p))
    q = transform(p, m)
    assert is_reflexive(q)
    _assert_matches_brute_force(q)


def _edge_lengths(p):
    return sorted(lattice_length(s) for s in p.edge_segments())


@settings(max_examples=200, deadline=None)
@given(reflexive_candidates(), unimodular_matrices(max_ops=4))
def test_lattice_counts_survive_unimodular_maps(chosen, m):
    p = convex_hull(chosen)
    q = transform(p, m)
    assert len(lattice_points(q)) == len(lattice_points(p))
    assert _edge_lengths(q) == _edge_lengths(p)
    assert sorted(len(facet_interior_lattice_points(q, f)) for f in q.facets) == sorted(
        len(facet_interior_lattice_points(p, f)) for f in p.facets
    )


@pytest.mark.parametrize('name', sorted(ALL_FIXTURES))
def test_fixture_counts_survive_a_fixed_unimodular_map(name):
    p = convex_hull(points(ALL_FIXTURES[name]))
    q = transform(p, elementary_product([('add', 0, 1, 1), ('swap', 1, 2), ('add', 2, 0, -1), ('neg', 1)]))
    assert len(lattice_points(q)) == len(lattice_points(p))
    assert _edge_lengths(q) == _edge_lengths(p)


def test_big_octahedron_face_interior():
    p = convex_hull(points([tuple(3 * c for c in v) for v in OCTAHEDRON]))
    f = next(f for f in p.facets if f.support == DualVector((1, 1, 1)))
    assert f.height == 3
    assert facet_interior_lattice_points(p, f) == [LatticePoint((1, 1, 1))]


def test_facet_to_dict(cube):
    assert isinstance(cube.facets[0], Facet)
    data = cube.to_dict()
    assert len(data['vertices']) == 8
    assert all(set(f) == {'vertex_indices', 'support', 'height'} for f in data['facets'])
