import pytest

import ortholat as ol

from corpus import FAMILIES


@pytest.fixture(scope="session")
def families():
    return FAMILIES


@pytest.fixture(scope="session")
def enum8():
    return ol.enumerate_ortholattices(8)


@pytest.fixture(scope="session")
def enum10():
    return ol.enumerate_ortholattices(10)


@pytest.fixture(scope="session")
def full_corpus(families, enum10):
    """Generated families plus every enumerated class of size <= 10."""
    return [L for _, L in families] + enum10.lattices()
