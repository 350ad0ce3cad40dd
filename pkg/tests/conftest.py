import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from equimatch.graph import generate


@pytest.fixture(scope="session")
def c6():
    return generate("cycle:6")


@pytest.fixture(scope="session")
def path4():
    return generate("path:4")


@pytest.fixture(scope="session")
def petersen():
    return generate("petersen")
