from __future__ import annotations

import pytest

from factorix.catalog import open_catalog
from helpers import group_from


@pytest.fixture(scope="session")
def s3():
    return group_from(3, "(1,2)", "(1,2,3)")


@pytest.fixture(scope="session")
def c6():
    return group_from(6, "(1,2,3,4,5,6)")


@pytest.fixture(scope="session")
def a4():
    return group_from(4, "(1,2)(3,4)", "(1,2,3)")


@pytest.fixture(scope="session")
def s4():
    return group_from(4, "(1,2)", "(1,2,3,4)")


@pytest.fixture(scope="session")
def a5():
    return group_from(5, "(1,2,3,4,5)", "(1,2,3)")


@pytest.fixture(scope="session")
def cat():
    """The bundled catalog; loaded once, caches verified objects."""
    return open_catalog()
