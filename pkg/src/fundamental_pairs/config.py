"""Configuration and environment variable validation for fundamental-pairs."""

import logging
from typing import Literal

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Config(BaseSettings):
    """Caps and defaults read from ``FPAIRS_*`` environment variables (or ``.env``)."""

    model_config = SettingsConfigDict(
        env_prefix="FPAIRS_",
        env_file=".env",
        extra="ignore",
    )

    # Nilpotency detection
    nilpotency_cap_factor: int = 4

    # Operator-identity sampling
    identity_sample_degree: int = 4
    identity_max_power: int = 3
    relation_sample_degree: int = 2
    relation_max_power: int = 3

    # Groebner size guards
    groebner_max_variables: int = 12
    groebner_max_basis: int = 500
    groebner_max_degree: int = 20

    # Certificate search and reciprocity cross-checks
    criterion_bound_offset: int = 2
    hermite_max_slice: int = 200

    log_level: str = "INFO"
    log_format: Literal["json", "text"] = "json"

    @model_validator(mode="after")
    def _validate_config(self) -> "Config":
        """Fail fast on caps that would make every search vacuous."""
        for name in (
            "nilpotency_cap_factor",
            "identity_sample_degree",
            "identity_max_power",
            "relation_max_power",
            "groebner_max_variables",
            "groebner_max_basis",
            "groebner_max_degree",
            "hermite_max_slice",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"FPAIRS_{name.upper()} must be positive")

        if self.relation_sample_degree < 0 or self.criterion_bound_offset < 0:
            raise ValueError("FPAIRS_RELATION_SAMPLE_DEGREE and FPAIRS_CRITERION_BOUND_OFFSET must be nonnegative")

        if self.groebner_max_variables > 12:
            logger.warning(
                f"GROEBNER_MAX_VARIABLES={self.groebner_max_variables} exceeds the "
                "tested range; completion may be slow"
            )
        return self

    def default_nilpotency_cap(self, degree: int, image_degree: int) -> int:
        """Cap used when callers do not supply one."""
        return self.nilpotency_cap_factor * (degree + 1) * (image_degree + 1)


# Global config instance
config = Config()
