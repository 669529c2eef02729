"""Shared value types: players, outcomes, and engine error classes."""
from __future__ import annotations

from enum import Enum


class Player(Enum):
    FIRST = "first"
    SECOND = "second"

    @property
    def opponent(self) -> "Player":
        return Player.SECOND if self is Player.FIRST else Player.FIRST

    def __repr__(self) -> str:
        return self.value


# Per-game color aliases.  In Hex, Havannah, Twixt, and Generalized Hex the
# paper's White moves first; compiled Havannah artifacts start with Black to
# move, which positions carry in their to_move field.
WHITE = Player.FIRST
BLACK = Player.SECOND


class Outcome(Enum):
    FIRST_WIN = "FirstWin"
    SECOND_WIN = "SecondWin"
    DRAW = "Draw"
    ONGOING = "Ongoing"

    @property
    def is_terminal(self) -> bool:
        return self is not Outcome.ONGOING


def win_for(player: Player) -> Outcome:
    return Outcome.FIRST_WIN if player is Player.FIRST else Outcome.SECOND_WIN


class DomainError(ValueError):
    """Raised for out-of-board coordinates and malformed instances."""


class IllegalMove(ValueError):
    """Raised when apply() receives a move that is not legal.

    reason codes: occupied, diagonal-rule, crossing, border, not-knight-pair,
    revisit, pass-not-forced, terminal, off-board, no-stone, not-king-adjacent.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class ContractViolation(RuntimeError):
    """Raised when an operation is called outside its precondition."""
