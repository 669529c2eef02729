"""Hex rules on the rhombus board.

The first player connects the ne side (row 0) to the sw side (row n-1);
the second player connects nw (col 0) to se (col n-1).  Stones are never
moved or removed, so play length is bounded by the cell count.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .boards import HexRhombus
from .core import ContractViolation, IllegalMove, Outcome, Player, win_for

Cell = tuple[int, int]


@dataclass(frozen=True)
class HexPosition:
    board: HexRhombus
    stones: dict[Cell, Player] = field(default_factory=dict)
    to_move: Player = Player.FIRST

    @staticmethod
    def empty(n: int) -> "HexPosition":
        return HexPosition(HexRhombus(n))

    def stone_at(self, cell: Cell) -> Player | None:
        return self.stones.get(cell)

    def legal_moves(self) -> list[Cell]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal hex position")
        return [c for c in self.board.cells if c not in self.stones]

    def apply(self, move: Cell) -> "HexPosition":
        self.board.require(move)
        if move in self.stones:
            raise IllegalMove("occupied", f"{move}")
        if self.outcome().is_terminal:
            raise IllegalMove("terminal", "game already decided")
        stones = dict(self.stones)
        stones[move] = self.to_move
        return replace(self, stones=stones, to_move=self.to_move.opponent)

    def has_connection(self, player: Player) -> bool:
        """True iff some group of player touches both of their sides."""
        n = self.board.n
        if player is Player.FIRST:
            starts = [(c, 0) for c in range(n)]
            at_goal = lambda cell: cell[1] == n - 1
        else:
            starts = [(0, r) for r in range(n)]
            at_goal = lambda cell: cell[0] == n - 1
        seen = set()
        dq = deque(c for c in starts if self.stones.get(c) is player)
        seen.update(dq)
        while dq:
            cell = dq.popleft()
            if at_goal(cell):
                return True
            for nb in self.board.neighbors(cell):
                if nb not in seen and self.stones.get(nb) is player:
                    seen.add(nb)
                    dq.append(nb)
        return False

    def outcome(self) -> Outcome:
        for player in (Player.FIRST, Player.SECOND):
            if self.has_connection(player):
                return win_for(player)
        return Outcome.ONGOING

    def key(self):
        return ("hex", self.board.n, frozenset(self.stones.items()), self.to_move)
