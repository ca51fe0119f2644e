"""
slnweb Models

Program and configuration models for the slnweb engine.

Core Abstractions:
    FProgram - a ladder web as a string of divided powers
    LinkProgram - a ladder web with crossing markers
    EngineConfig - DP parallelism and resource guard
"""

from slnweb_models.config import EngineConfig
from slnweb_models.program import Crossing, FMove, FProgram, LinkItem, LinkProgram

__all__ = [
    # Programs
    'FMove',
    'Crossing',
    'LinkItem',
    'FProgram',
    'LinkProgram',

    # Configuration
    'EngineConfig',
]
