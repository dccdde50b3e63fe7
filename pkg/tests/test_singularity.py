import pytest

from src.errors import InvalidInputError
from src.models.lattice import DualVector, IntMatrix, LatticePoint
from src.models.singularity import FacetTag, VerdictTag
from src.services import singularity
from src.services.hull import convex_hull, lattice_length
from tests.strategies import A2_TETRAHEDRON, points

T0_FIXTURE = [(1, 0, -1), (1, 0, 0), (-1, 2, 0)]
T1_FIXTURE = [(0, 0, 1), (1, 0, 0), (-1, 2, 0)]


def test_classify_a1_facet(flat_pair):
    classes = [singularity.classify_facet(flat_pair, f) for f in flat_pair.facets]
    tags = [fc.tag for fc in classes]
    assert tags.count(FacetTag.SMOOTH) == 4
    assert tags.count(FacetTag.AN_TRIANGLE) == 2
    assert {fc.n for fc in classes if fc.tag is FacetTag.AN_TRIANGLE} == {1}


def test_classify_triangles():
    assert singularity.classify_triangle(points([(0, 0, 1), (0, 1, 0), (1, 0, 0)])).tag is FacetTag.SMOOTH
    a1 = singularity.classify_triangle(points([(0, 0, 1), (0, 1, 0), (-2, -1, 0)]))
    assert (a1.tag, a1.n, a1.label) == (FacetTag.AN_TRIANGLE, 1, 'A1')
    a2 = singularity.classify_triangle(points([(0, 0, 1), (3, 0, 1), (1, 1, 1)]))
    assert (a2.tag, a2.n) == (FacetTag.AN_TRIANGLE, 2)


def test_triangle_off_the_height_one_plane():
    fc = singularity.classify_triangle(points([(0, 0, 2), (1, 0, 2), (0, 1, 2)]))
    assert fc.tag is FacetTag.OTHER
    assert "height-1" in fc.witness


def test_triangle_with_wrong_edge_lengths():
    # lengths 2, 2, 2 on z = 1
    fc = singularity.classify_triangle(points([(0, 0, 1), (2, 0, 1), (0, 2, 1)]))
    assert fc.tag is FacetTag.OTHER
    assert "edge lengths" in fc.witness


def test_triangle_with_an_interior_point():
    # lengths 1, 1, 2 with (1, 1, 1) and (1, 2, 1) inside
    fc = singularity.classify_triangle(points([(0, 0, 1), (2, 0, 1), (1, 3, 1)]))
    assert fc.tag is FacetTag.OTHER
    assert "interior" in fc.witness


def test_square_facet_is_other(cube):
    assert all(singularity.classify_facet(cube, f).tag is FacetTag.OTHER for f in cube.facets)


def test_height_one_form():
    assert singularity.height_one_form(points([(0, 0, 1), (0, 1, 0), (-2, -1, 0)])) == DualVector((-1, 1, 1))
    with pytest.raises(InvalidInputError):
        singularity.height_one_form(points([(0, 0, 0), (1, 0, 0), (0, 1, 0)]))


def test_flat_pair_pair(flat_pair):
    (pair,) = singularity.find_adjacent_pairs(flat_pair)
    assert pair.n == 1
    assert pair.rho0 == LatticePoint((0, 0, 1))
    assert pair.rho1 == LatticePoint((0, 1, -1))
    assert pair.rho_u == LatticePoint((-2, -1, 0))
    assert pair.rho_v == LatticePoint((0, 1, 0))
    assert pair.w0 == DualVector((-1, 1, 1))
    assert pair.w1 == DualVector((-1, 1, 0))
    assert pair.pairing == 0
    assert pair.almost_flat
    assert flat_pair.facets[pair.facet_ids[0]].support == pair.w0
    assert flat_pair.facets[pair.facet_ids[1]].support == pair.w1


def test_no_pairs(cube, simplex):
    assert singularity.find_adjacent_pairs(cube) == []
    assert singularity.find_adjacent_pairs(simplex) == []


def test_single_an_triangle_has_no_partner():
    p = convex_hull(points(A2_TETRAHEDRON))
    assert singularity.find_adjacent_pairs(p) == []


def test_pairing_value(flat_pair, spread_pair):
    (pair,) = singularity.find_adjacent_pairs(flat_pair)
    assert singularity.pairing_value(pair) == 0
    (pair,) = singularity.find_adjacent_pairs(spread_pair)
    assert singularity.pairing_value(pair) == -1


def test_pair_from_bare_triangles():
    pair = singularity.adjacent_pair_from_triangles(points(T0_FIXTURE), points(T1_FIXTURE))
    assert pair.w1 == DualVector((1, 1, 1))
    assert pair.w0 == DualVector((1, 1, 0))
    assert singularity.pairing_value(pair) == 0
    assert pair.rho0 == LatticePoint((1, 0, -1))


def test_pair_from_triangles_on_one_side():
    same_side = [(0, 0, -1), (1, 0, 0), (-1, 2, 0)]
    with pytest.raises(InvalidInputError, match="same side"):
        singularity.adjacent_pair_from_triangles(points(T0_FIXTURE), points(same_side))


def test_pair_from_a_smooth_triangle():
    with pytest.raises(InvalidInputError, match="not an A_n-triangle"):
        singularity.adjacent_pair_from_triangles(
            points(T0_FIXTURE), points([(0, 0, 1), (0, 1, 0), (1, 0, 0)])
        )


def test_flat_pair_normal_form(flat_pair):
    (pair,) = singularity.find_adjacent_pairs(flat_pair)
    nf = singularity.normal_form(pair)
    assert (nf.a, nf.b, nf.n) == (-1, 2, 1)
    assert (nf.r, nf.p, nf.q) == (2, 1, 1)
    assert nf.s * nf.p + nf.t * nf.q == 1
    assert singularity.bundle_degrees(nf) == (0, -2, -1)
    assert nf.pairing == 0
    assert nf.U.apply(pair.rho1) == LatticePoint((0, 0, 1))
    assert nf.U.apply(pair.rho_u) == LatticePoint((1, 0, 0))
    assert nf.U.apply(pair.rho_v) == LatticePoint((-1, 2, 0))
    assert nf.U.apply(pair.rho0) == LatticePoint((-1, 2, -1))


def test_flat_pair_normal_form_other_orientation(flat_pair):
    (pair,) = singularity.find_adjacent_pairs(flat_pair)
    nf = singularity.normal_form(pair.swap_edge())
    assert (nf.a, nf.b) == (1, 0)
    assert nf.r == 2
    assert singularity.bundle_degrees(nf) == (-2, 0, -1)
    assert nf.pairing == 0


def test_spread_pair_normal_form(spread_pair):
    (pair,) = singularity.find_adjacent_pairs(spread_pair)
    nf = singularity.normal_form(pair)
    assert (nf.a, nf.b, nf.r) == (0, 0, 2)
    assert singularity.bundle_degrees(nf) == (0, 0, 0)
    assert singularity.ext_profile(pair.n, nf.pairing).degrees == (0,)


@pytest.mark.parametrize('a, b, n, rows', [
    (1, 0, 1, [[1, 0, 1, -1], [0, 0, 0, 2], [-1, 1, 0, 0]]),
    (-1, 2, 1, [[-1, 0, 1, -1], [2, 0, 0, 2], [-1, 1, 0, 0]]),
    (0, 0, 2, [[0, 0, 1, -2], [0, 0, 0, 3], [-1, 1, 0, 0]]),
])
def test_ray_map(a, b, n, rows):
    nf = singularity.normal_form_from_coordinates(a, b, n)
    assert singularity.ray_map(nf) == IntMatrix.from_rows(rows)


@pytest.mark.parametrize('a, b, n, r, kernel', [
    (1, 0, 1, 2, (1, 1, -1, 0)),
    (-1, 2, 1, 2, (1, 1, 0, -1)),
    (0, 3, 2, 3, (1, 1, -2, -1)),
])
def test_ray_map_kernel(a, b, n, r, kernel):
    nf = singularity.normal_form_from_coordinates(a, b, n)
    assert nf.r == r
    assert singularity.ray_map_kernel(nf) == kernel
    assert not any(singularity.ray_map(nf).apply(kernel))


@pytest.mark.parametrize('a, b, n, group', [
    (-1, 2, 1, (1, [2])),
    (0, 1, 1, (1, [])),
    (0, 0, 2, (1, [3])),
])
def test_class_group(a, b, n, group):
    assert singularity.class_group(singularity.normal_form_from_coordinates(a, b, n)) == group


@pytest.mark.parametrize('a, b, n, degrees', [
    (1, 0, 1, (-2, 0, -1)),
    (-1, 2, 1, (0, -2, -1)),
    (0, 0, 3, (0, 0, 0)),
])
def test_bundle_degrees(a, b, n, degrees):
    assert singularity.bundle_degrees(singularity.normal_form_from_coordinates(a, b, n)) == degrees


def test_degree_map(flat_pair):
    (pair,) = singularity.find_adjacent_pairs(flat_pair)
    free_row, torsion_row = singularity.degree_map(singularity.normal_form(pair))
    assert free_row == (1, 1, 0, -1)
    assert torsion_row == (0, 0, 1, 1)


def test_degree_map_without_torsion():
    _, torsion_row = singularity.degree_map(singularity.normal_form_from_coordinates(0, 1, 1))
    assert torsion_row == ()


@pytest.mark.parametrize('n, pairing, degrees', [
    (1, 0, (-2,)),
    (2, 0, (-2, -3)),
    (1, -1, (0,)),
    (3, 1, (-4, -6, -8)),
])
def test_ext_profile(n, pairing, degrees):
    profile = singularity.ext_profile(n, pairing)
    assert profile.degrees == degrees
    assert profile.n == n


def test_ext_profile_needs_positive_n():
    with pytest.raises(InvalidInputError):
        singularity.ext_profile(0, 0)


def test_dual_edge(flat_pair, spread_pair):
    for p in (flat_pair, spread_pair):
        (pair,) = singularity.find_adjacent_pairs(p)
        assert lattice_length(singularity.dual_edge(pair)) == 1 - pair.pairing


def test_verdicts(flat_pair, simplex, cube, spread_pair, octahedron):
    v = singularity.verdict(flat_pair)
    assert v.tag is VerdictTag.NOT_SMOOTHABLE
    (witness,) = v.witnesses
    assert (witness.n, witness.pairing) == (1, 0)
    assert singularity.ext_profile(witness.n, witness.pairing).all_negative

    assert singularity.verdict(simplex).tag is VerdictTag.ALREADY_SMOOTH
    assert singularity.verdict(octahedron).tag is VerdictTag.ALREADY_SMOOTH
    assert singularity.verdict(cube).tag is VerdictTag.NO_OBSTRUCTION_FOUND
    assert singularity.verdict(spread_pair).tag is VerdictTag.NO_OBSTRUCTION_FOUND


def test_verdict_on_a_non_reflexive_polytope():
    p = convex_hull(points(T0_FIXTURE + T1_FIXTURE))
    assert singularity.verdict(p).tag is VerdictTag.NOT_SMOOTHABLE


def test_pairs_of_different_n(two_pairs):
    classes = [singularity.classify_facet(two_pairs, f) for f in two_pairs.facets]
    assert sorted(fc.label for fc in classes) == ['A1', 'A1', 'A2', 'A2', 'smooth', 'smooth']

    pairs = singularity.find_adjacent_pairs(two_pairs, classes)
    assert [tuple(sorted(pr.facet_ids)) for pr in pairs] == sorted(tuple(sorted(pr.facet_ids)) for pr in pairs)
    a1, a2 = sorted(pairs, key=lambda pr: pr.n)

    assert (a2.n, a2.pairing) == (2, 0)
    assert a2.rho0 == LatticePoint((-1, 2, -1))
    assert (a2.rho_u, a2.rho_v) == (LatticePoint((-2, 3, 0)), LatticePoint((1, 0, 0)))
    assert (a2.w0, a2.w1) == (DualVector((1, 1, 0)), DualVector((1, 1, 1)))

    assert (a1.n, a1.pairing) == (1, -1)
    assert (a1.rho_u, a1.rho_v) == (LatticePoint((-2, 3, 0)), LatticePoint((0, -1, 0)))
    assert (a1.w0, a1.w1) == (DualVector((-2, -1, -1)), DualVector((-2, -1, 1)))


def test_two_pairs_normal_forms(two_pairs):
    a1, a2 = sorted(singularity.find_adjacent_pairs(two_pairs), key=lambda pr: pr.n)

    nf = singularity.normal_form(a2)
    assert (nf.a, nf.b, nf.n, nf.r) == (0, 1, 2, 1)
    assert singularity.bundle_degrees(nf) == (-2, -1, -1)
    assert singularity.class_group(nf) == (1, [])
    assert singularity.ext_profile(a2.n, a2.pairing).degrees == (-2, -3)
    assert nf.U.apply(a2.rho_v) == LatticePoint((-2, 3, 0))

    nf = singularity.normal_form(a1)
    assert (nf.a, nf.b, nf.n, nf.r) == (1, -1, 1, 1)
    assert singularity.bundle_degrees(nf) == (-1, 1, 0)
    assert singularity.ext_profile(a1.n, a1.pairing).degrees == (0,)

    assert [lattice_length(singularity.dual_edge(pr)) for pr in (a1, a2)] == [2, 1]


def test_verdict_names_only_the_obstructing_pair(two_pairs):
    v = singularity.verdict(two_pairs)
    assert v.tag is VerdictTag.NOT_SMOOTHABLE
    (witness,) = v.witnesses
    assert (witness.n, witness.pairing) == (2, 0)
