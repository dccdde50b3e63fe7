from pathlib import Path

import pytest

from src.services.hull import convex_hull
from tests.strategies import CUBE, FLAT_PAIR, OCTAHEDRON, SIMPLEX, SPREAD_PAIR, TWO_PAIRS, points

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR


@pytest.fixture
def flat_pair():
    return convex_hull(points(FLAT_PAIR))


@pytest.fixture
def spread_pair():
    return convex_hull(points(SPREAD_PAIR))


@pytest.fixture
def simplex():
    return convex_hull(points(SIMPLEX))


@pytest.fixture
def cube():
    return convex_hull(points(CUBE))


@pytest.fixture
def octahedron():
    return convex_hull(points(OCTAHEDRON))


@pytest.fixture
def two_pairs():
    return convex_hull(points(TWO_PAIRS))
