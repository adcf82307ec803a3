"""
chevlab settings: coset and closure budgets, the largest ring a Steinberg
presentation is built for, sampling seeds and report options. Read from
CHEVLAB_* variables or .env; a run config overrides the budgets and sampling.
"""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Budgets, sampling and report options shared by the CLI and the API."""

    # --- Enumeration budgets ---
    budget_cosets: int = 5_000_000
    budget_bfs: int = 100_000_000
    max_ring_order: int = 4096
    max_presentation_ring: int = 8
    max_quotient_check_order: int = 1_000_000

    # --- Sampled checks ---
    seed: int = 0
    sample_pairs: int = 1000
    equivariance_samples: int = 100

    # --- Word maps ---
    calibration_modulus: int = 101

    # --- Reports ---
    report_table_limit: int = 12
    include_timings: bool = False
    log_level: str = "INFO"

    model_config = {"env_file": ".env", "env_file_encoding": "utf-8", "env_prefix": "CHEVLAB_"}


settings = Settings()
