import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flatlam import fixtures


@pytest.fixture(scope="session")
def l21():
    return fixtures.l_shape()


@pytest.fixture(scope="session")
def oct2():
    return fixtures.octagon()


@pytest.fixture(scope="session")
def ht():
    return fixtures.half_translation()
