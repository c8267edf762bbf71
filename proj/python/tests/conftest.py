import os
from pathlib import Path

import pytest

FIXTURES = Path(os.environ.get("SGINV_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / f"{name}.json")
