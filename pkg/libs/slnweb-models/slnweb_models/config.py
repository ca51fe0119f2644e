"""
Engine configuration shared by the library entry points and the CLI.
"""

import json
from pathlib import Path

from pydantic import BaseModel, Field


class EngineConfig(BaseModel):
    """
    Knobs of the shape dynamic program.

    Attributes:
        jobs: Worker processes used for one DP step (1 = sequential)
        max_states: Upper bound on live shapes before the evaluation aborts
        parallel_threshold: Steps with fewer live shapes than this stay sequential

    Example:
        >>> config = EngineConfig(jobs=4)
        >>> config.to_dict()
        {'jobs': 4, 'max_states': 1000000, 'parallel_threshold': 256}
    """

    jobs: int = Field(default=1, ge=1, description="Worker processes per DP step")
    max_states: int = Field(default=10**6, ge=1, description="Live shape guard")
    parallel_threshold: int = Field(
        default=256, ge=1, description="Minimum live shapes before a step is parallelized"
    )

    def to_dict(self) -> dict:
        """Export configuration as dictionary for serialization."""
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> 'EngineConfig':
        """Create configuration from dictionary."""
        return cls(**data)

    @classmethod
    def from_json_file(cls, path: str | Path) -> 'EngineConfig':
        """Load configuration from a JSON file."""
        with open(path, "r") as f:
            return cls.from_dict(json.load(f))
