import pytest

from app.core.config import settings
from app.services.benchmarks.metrics import make_grid


@pytest.fixture(autouse=True)
def quiet(monkeypatch):
    monkeypatch.setattr(settings, "LOG_PROGRESS", False)


@pytest.fixture
def grid():
    # (2001 - 1) % 4 == 0, so ±0.5 lie on the grid
    return make_grid(2001)
