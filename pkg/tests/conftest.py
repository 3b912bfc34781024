import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from builds import even_build, odd_build  # noqa: E402


@pytest.fixture(scope="session")
def even4():
    return even_build(4)


@pytest.fixture(scope="session")
def even8():
    return even_build(8)


@pytest.fixture(scope="session")
def odd5():
    return odd_build(5)


@pytest.fixture(scope="session")
def odd7():
    return odd_build(7)
