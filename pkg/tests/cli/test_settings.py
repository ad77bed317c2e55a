from app.config import Settings


def test_defaults():
    s = Settings(_env_file=None)
    assert s.max_sets == 1_000_000
    assert s.experiment_seed == 7
    assert s.is_development


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("LEVELABLE_MAX_SETS", "50")
    monkeypatch.setenv("levelable_environment", "Production")
    s = Settings(_env_file=None)
    assert s.max_sets == 50
    assert not s.is_development
