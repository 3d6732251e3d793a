"""
Application configuration module.

This file centralizes the environment-based settings of the toolkit: the
budgets that bound every brute-force kernel, the capability caps on graph
sizes, the default random seed and output format, and the location of the
generator-count fixture. It uses Pydantic's BaseSettings to load variables
from the environment or a .env file, with type validation and defaults.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Toolkit settings loaded from environment variables or `.env`.

    Attributes:
        MONOMIAL_BUDGET (int): Max degree-d monomials streamed for one (graph, degree) sweep.
        FIBER_BUDGET (int): Max tables a single fiber enumeration may produce.
        HOMOMORPHISM_BUDGET (int): Max vertex maps a single homomorphism search may produce.
        TIME_BUDGET_SECONDS (float): Wall-clock cap for one CLI job; 0 disables the cap.
        DEFAULT_SEED (int): Random-walk seed used when no `--seed` is given.
        OUTPUT_FORMAT (str): Default artifact format (`json`, `csv` or `text`).
        TABLE_FIXTURE_PATH (str): CSV file holding the published generator counts.
        MAX_MATRIX_VERTICES (int): Largest vertex count for which A_G is materialized.
        MAX_TREEWIDTH_VERTICES (int): Largest vertex count for exact treewidth.
        MAX_FUNDAMENTAL_DEGREE (int): Largest degree d for which X_d is built.
        MAX_COLORING_VERTICES (int): Largest vertex count for 3-coloring enumeration.
        ORACLE_MAX_CELLS (int): Largest cell count (2^n) accepted by the volume oracle.
        ORACLE_MAX_CLIQUE (int): Largest clique size counted by the volume oracle.
        LOG_LEVEL (str): Root logging level.
    """
    MONOMIAL_BUDGET: int = 5_000_000
    FIBER_BUDGET: int = 200_000
    HOMOMORPHISM_BUDGET: int = 2_000_000
    TIME_BUDGET_SECONDS: float = 0.0
    DEFAULT_SEED: int = 0
    OUTPUT_FORMAT: str = "json"
    TABLE_FIXTURE_PATH: str = "app/fixtures/markov_table.csv"
    MAX_MATRIX_VERTICES: int = 12
    MAX_TREEWIDTH_VERTICES: int = 8
    MAX_FUNDAMENTAL_DEGREE: int = 6
    MAX_COLORING_VERTICES: int = 10
    ORACLE_MAX_CELLS: int = 64
    ORACLE_MAX_CLIQUE: int = 12
    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )
    """
    Configuration metadata for Pydantic Settings.

    Specifies that environment variables should be loaded from a .env file
    located in the project root directory, with UTF-8 encoding.
    Unrecognized fields in the .env file are ignored for flexibility.
    """

settings = Settings()
