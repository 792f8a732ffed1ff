"""
Runtime configuration for the lexhit package.
"""

import os
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from .exceptions import LexHitUsageError

ENV_PREFIX = "LEXHIT_"

_TRUE_WORDS = {"1", "true", "yes", "on"}
_FALSE_WORDS = {"0", "false", "no", "off"}


class Settings(BaseModel):
    """
    Tunable knobs shared by the library and the CLI.

    Example:
        settings = Settings.from_env()
        session = HypergraphSession(hypergraph, settings=settings)
    """

    model_config = ConfigDict(frozen=True)

    bruteforce_cap: int = Field(
        20, ge=0, description="Largest universe the reference oracles will scan exhaustively"
    )
    check_bounds: bool = Field(
        True, description="Raise BoundViolationError when an instrumented bound is exceeded"
    )
    log_level: str = Field("WARNING", description="Level for the CLI stderr log handler")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """
        Build settings from ``LEXHIT_*`` environment variables.

        Args:
            environ: Mapping to read instead of ``os.environ``

        Returns:
            Settings with every unset variable at its default

        Raises:
            LexHitUsageError: If a variable holds an invalid value
        """
        env = os.environ if environ is None else environ
        values = {}

        cap = env.get(f"{ENV_PREFIX}BRUTEFORCE_CAP")
        if cap is not None:
            values["bruteforce_cap"] = cap

        check = env.get(f"{ENV_PREFIX}CHECK_BOUNDS")
        if check is not None:
            word = check.strip().lower()
            if word in _TRUE_WORDS:
                values["check_bounds"] = True
            elif word in _FALSE_WORDS:
                values["check_bounds"] = False
            else:
                raise LexHitUsageError(
                    f"Invalid {ENV_PREFIX}CHECK_BOUNDS value: {check!r}",
                    {"variable": f"{ENV_PREFIX}CHECK_BOUNDS"},
                )

        level = env.get(f"{ENV_PREFIX}LOG_LEVEL")
        if level is not None:
            values["log_level"] = level

        try:
            return cls(**values)
        except ValidationError as e:
            raise LexHitUsageError(f"Invalid environment configuration: {e}") from e

    def with_overrides(self, **overrides: object) -> "Settings":
        """Return a copy with the non-None overrides applied."""
        updates = {key: value for key, value in overrides.items() if value is not None}
        if not updates:
            return self
        try:
            return Settings(**{**self.model_dump(), **updates})
        except ValidationError as e:
            raise LexHitUsageError(f"Invalid configuration override: {e}") from e
