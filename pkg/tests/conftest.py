import pytest

from pntbounds import build_sieve, compute_default_rows, compute_row, load_table
from pntbounds.engine import VK_DEFAULT_PARAMS


@pytest.fixture(scope="session")
def density_table():
    return load_table()


@pytest.fixture(scope="session")
def sieve10m():
    return build_sieve(10_000_000)


@pytest.fixture(scope="session")
def sieve_small():
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def default_rows(density_table):
    return compute_default_rows(density_table)


@pytest.fixture(scope="session")
def vk_row(density_table):
    return compute_row(VK_DEFAULT_PARAMS, density_table)
