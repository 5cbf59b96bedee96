import pytest

from ennola.multiplicities import build_context


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory) -> str:
    return str(tmp_path_factory.mktemp("psi_cache"))


@pytest.fixture(scope="session")
def ctx5(cache_dir):
    """Shared k=3 context through degree 5, with a disk cache that warms up
    as tests touch it."""
    return build_context(3, 5, cache_dir)
