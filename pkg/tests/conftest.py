import pytest

from hmgroups.catalog import default_catalog


@pytest.fixture(scope="session")
def entries():
    return default_catalog()


@pytest.fixture(scope="session")
def by_name(entries):
    return {e.name: e for e in entries}
