import pytest

from aifootprint.loaders import load_and_validate


@pytest.fixture(scope="session")
def bundle():
    return load_and_validate()
