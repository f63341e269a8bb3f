"""Runtime settings and logging setup for specht-sym."""

import os
import sys

from loguru import logger
from pydantic import BaseModel, Field, field_validator

from specht_sym.gf import check_prime

DEFAULT_THREADS = min(4, os.cpu_count() or 1)
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Defaults for the command line; flags override individual fields."""

    n: int = Field(default=10, description="Symmetric group index", ge=2)
    p: int = Field(default=5, description="Characteristic of the field")
    cap: int | None = Field(
        default=None, description="Degree cap of the symmetric algebras in commutator checks; None means p + 1", ge=1
    )
    threads: int = Field(default=DEFAULT_THREADS, description="Concurrent acceptance criteria", ge=1)
    log_level: str = Field(default="WARNING")

    @field_validator("p")
    @classmethod
    def _check_p(cls, p: int) -> int:
        return check_prime(p)

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, level: str) -> str:
        level = level.upper()
        if level not in LOG_LEVELS:
            err = ValueError(f"Unknown log level '{level}'")
            err.add_note(f"Valid levels: {', '.join(LOG_LEVELS)}")
            raise err
        return level

    @property
    def degree_cap(self) -> int:
        """Commutators on Sym^d for d <= p need degree p + 1."""
        return self.cap if self.cap is not None else self.p + 1


def parse_threads_from_env() -> int:
    """Parse SPECHT_SYM_THREADS as a positive integer.

    Raises:
        ValueError: If the variable is set to anything else
    """
    raw = os.getenv("SPECHT_SYM_THREADS", str(DEFAULT_THREADS))
    try:
        threads = int(raw)
    except ValueError as e:
        err = ValueError(f"Invalid thread count in SPECHT_SYM_THREADS: '{raw}'")
        err.add_note("Set SPECHT_SYM_THREADS to a positive integer, e.g. 4")
        raise err from e
    if threads < 1:
        err = ValueError(f"SPECHT_SYM_THREADS must be positive, got {threads}")
        err.add_note("Set SPECHT_SYM_THREADS to a positive integer, e.g. 4")
        raise err
    return threads


def load_settings() -> Settings:
    """Settings from the environment, falling back to defaults on bad values."""
    try:
        threads = parse_threads_from_env()
    except ValueError:
        logger.warning(f"Invalid SPECHT_SYM_THREADS, using {DEFAULT_THREADS}")
        threads = DEFAULT_THREADS
    level = os.getenv("SPECHT_SYM_LOG_LEVEL", "WARNING").upper()
    if level not in LOG_LEVELS:
        logger.warning(f"Invalid SPECHT_SYM_LOG_LEVEL '{level}', using WARNING")
        level = "WARNING"
    return Settings(threads=threads, log_level=level)


def configure_logging(level: str) -> None:
    """Replace the default sink with a stderr sink at the given level."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper())
    logger.debug(f"Logging configured at {level.upper()}")
