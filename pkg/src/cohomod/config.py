# src/cohomod/config.py

"""
Caps and defaults.

Values come from (in increasing priority) the defaults below, environment
variables (optionally loaded from a ``.env`` file) and explicit arguments.
"""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 128
DEFAULT_MAX_DEGREE = 24
DEFAULT_MAX_DIM = 20000
DEFAULT_MAX_BOUND = 64
DEFAULT_MAX_DILATION = 3

ENV_PREFIX = "COHOMOD_"


def _load_env() -> Optional[Path]:
    """Load a .env file from the project root or the current directory."""
    possible_paths = [
        Path(__file__).resolve().parent.parent.parent / ".env",
        Path.cwd() / ".env",
    ]
    for env_path in possible_paths:
        if env_path.exists():
            # Variables already set in the environment win.
            load_dotenv(env_path, override=False)
            logger.debug(f"Loaded environment from {env_path}")
            return env_path
    return None


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {ENV_PREFIX + name}={raw!r}; using {default}")
        return default


@dataclass(frozen=True)
class Caps:
    """
    Resource caps for one computation.

    :param max_order: largest group order accepted.
    :param max_degree: highest cohomological degree a resolution is extended to.
    :param max_dim: largest number of F_p-columns of a single matrix.
    :param max_bound: highest internal degree used when analysing a ring.
    :param max_dilation: largest Dickson dilation exponent tried.
    """

    max_order: int = DEFAULT_MAX_ORDER
    max_degree: int = DEFAULT_MAX_DEGREE
    max_dim: int = DEFAULT_MAX_DIM
    max_bound: int = DEFAULT_MAX_BOUND
    max_dilation: int = DEFAULT_MAX_DILATION

    @classmethod
    def from_env(cls, **overrides) -> "Caps":
        _load_env()
        caps = cls(
            max_order=_env_int("MAX_ORDER", DEFAULT_MAX_ORDER),
            max_degree=_env_int("MAX_DEGREE", DEFAULT_MAX_DEGREE),
            max_dim=_env_int("MAX_DIM", DEFAULT_MAX_DIM),
            max_bound=_env_int("MAX_BOUND", DEFAULT_MAX_BOUND),
            max_dilation=_env_int("MAX_DILATION", DEFAULT_MAX_DILATION),
        )
        explicit = {k: v for k, v in overrides.items() if v is not None}
        return replace(caps, **explicit) if explicit else caps
