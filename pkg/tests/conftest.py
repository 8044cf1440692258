from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def fixtures_dir():
    return Path(__file__).parent / "data"
