"""Full Kreuzer-Skarke census; needs the database file named by KS_DB_PATH"""
import os

import pytest

from src.services.ks_ingest import default_parallelism, read_records, scan

pytestmark = pytest.mark.census


@pytest.fixture(scope='module')
def census():
    path = os.getenv('KS_DB_PATH')
    if not path or not os.path.exists(path):
        pytest.skip("KS_DB_PATH does not name the reflexive 3-polytope database; census skipped")
    return scan(read_records(path), parallelism=default_parallelism())


def test_census_counts(census):
    assert census.summary_line() == "total=4319, reflexive=4319, not_smoothable=273"
    assert census.invalid_count == 0


def test_every_pair_in_the_database_bends_inward(census):
    for record in census.records:
        assert all(pair.pairing <= 0 for pair in record.pairs), record.index


def test_not_smoothable_means_almost_flat(census):
    for record in census.records:
        if record.not_smoothable:
            assert any(pair.almost_flat for pair in record.pairs)
