"""
Ladder Program Models

Pydantic models for the two program kinds the engine consumes:

- FProgram: a start weight header (n, m, l) plus a string of divided powers F_i^(j),
  listed in application order (bottom of the ladder first).
- LinkProgram: the same header plus an item list mixing F-moves and crossing markers.

The start weight of every program is (n repeated l times, then m - l zeros). Columns
are 1-based; a move at position i transfers `power` units from column i to column i+1.
"""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class FMove(BaseModel):
    """
    A divided power F_pos^(power).

    Attributes:
        pos: Left column of the ladder rung (1-based)
        power: Number of units moved from column pos to column pos+1

    Example:
        >>> FMove(pos=2, power=3).to_dict()
        {'kind': 'F', 'pos': 2, 'power': 3}
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["F"] = Field(default="F", description="Item discriminator")
    pos: int = Field(..., ge=1, description="Rung position (1-based)")
    power: int = Field(default=1, ge=1, description="Divided power")

    def to_dict(self) -> dict:
        """Export as dictionary for serialization."""
        return self.model_dump()


class Crossing(BaseModel):
    """
    An upward crossing marker between columns pos and pos+1.

    The crossing colors are read from the running weight at the moment the marker
    is reached; column pos+2 must be empty there.

    Attributes:
        pos: Left column of the crossing
        sign: +1 for a positive crossing, -1 for a negative one
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["T"] = Field(default="T", description="Item discriminator")
    pos: int = Field(..., ge=1, description="Left column of the crossing (1-based)")
    sign: int = Field(..., description="Crossing sign, +1 or -1")

    @field_validator('sign')
    @classmethod
    def validate_sign(cls, v: int) -> int:
        """Validate sign is +1 or -1."""
        if v not in (1, -1):
            raise ValueError(f"Crossing sign must be +1 or -1, got {v}")
        return v

    def to_dict(self) -> dict:
        """Export as dictionary for serialization."""
        return self.model_dump()


LinkItem = Annotated[Union[FMove, Crossing], Field(discriminator="kind")]


class _Header(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Rank parameter of sl_n")
    m: int = Field(..., ge=1, description="Number of ladder columns")
    ell: int = Field(..., ge=1, description="Number of leading full columns (label n)")

    @model_validator(mode="after")
    def validate_header(self):
        if self.ell > self.m:
            raise ValueError(f"l={self.ell} exceeds the number of columns m={self.m}")
        return self

    def start_weight(self) -> tuple[int, ...]:
        """Return the highest weight (n^l, 0^(m-l)) every program starts from."""
        return (self.n,) * self.ell + (0,) * (self.m - self.ell)


class FProgram(_Header):
    """
    A ladder web given as a string of divided powers acting on (n^l, 0^(m-l)).

    Attributes:
        n: Rank parameter of sl_n (>= 2)
        m: Number of columns
        ell: Number of leading columns carrying label n (the leashes)
        moves: F-moves in application order

    Example:
        >>> cup = FProgram(n=2, m=2, ell=1, moves=[FMove(pos=1)])
        >>> cup.start_weight()
        (2, 0)
    """

    moves: tuple[FMove, ...] = Field(default=(), description="F-moves in application order")

    @model_validator(mode="after")
    def validate_positions(self) -> 'FProgram':
        """Validate every move addresses a pair of existing columns."""
        for step, move in enumerate(self.moves, start=1):
            if move.pos > self.m - 1:
                raise ValueError(f"Move {step}: position {move.pos} out of range (1-{self.m - 1})")
        return self

    def total_power(self) -> int:
        """Total number of units moved by the program."""
        return sum(move.power for move in self.moves)

    def to_dict(self) -> dict:
        """Export program as dictionary for serialization."""
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> 'FProgram':
        """Create program from dictionary."""
        return cls(**data)


class LinkProgram(_Header):
    """
    A colored link diagram in ladder form: F-moves interleaved with crossing markers.

    Attributes:
        n: Rank parameter of sl_n (>= 2)
        m: Number of columns
        ell: Number of leading columns carrying label n
        items: F-moves and crossings in application order
    """

    items: tuple[LinkItem, ...] = Field(default=(), description="Moves and crossings in order")

    @model_validator(mode="after")
    def validate_positions(self) -> 'LinkProgram':
        """Validate moves and crossings against the column count."""
        for step, item in enumerate(self.items, start=1):
            limit = self.m - 1 if isinstance(item, FMove) else self.m - 2
            if item.pos > limit:
                raise ValueError(f"Item {step}: position {item.pos} out of range (1-{limit})")
        return self

    @property
    def crossings(self) -> list[Crossing]:
        return [item for item in self.items if isinstance(item, Crossing)]

    def to_dict(self) -> dict:
        """Export program as dictionary for serialization."""
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> 'LinkProgram':
        """Create program from dictionary."""
        return cls(**data)
