from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Resource caps (all signal exhaustion, never a wrong verdict)
    max_sets: int = 1_000_000  # LEVELABLE_MAX_SETS
    lp_max_iterations: int = 20_000
    obstruction_budget: int = 10_000_000
    monomial_cap: int = 1_000_000

    # Experiment defaults
    experiment_seed: int = 7

    environment: str = "development"
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="LEVELABLE_",
    )

    @property
    def is_development(self) -> bool:
        return self.environment.lower() == "development"


settings = Settings()
