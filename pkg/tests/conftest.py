import pytest

from corpus import named_graphs


@pytest.fixture(scope="session")
def corpus():
    return named_graphs()
