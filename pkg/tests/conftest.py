import pytest

import app.main  # noqa: F401  registers the built-in families
from app.services.level_decide import reset_decision_stats


@pytest.fixture(autouse=True)
def _fresh_stats():
    reset_decision_stats()
    yield
