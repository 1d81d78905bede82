import pytest

from hyturan.verify import reference_corpus


@pytest.fixture(scope="session")
def corpus():
    return reference_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return reference_corpus(max_n=6)
