"""Havannah rules: placement on the hexagon, ring/bridge/fork detection.

Ring detection follows the enclosure definition: a group wins by ring iff
flood-filling the group's complement from the board border leaves some
complement cell unreached.  The enclosed cell may be empty or hold either
color; a solid disk (the "enclosed" cell being part of the group itself)
is not a ring.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .boards import HavannahHexagon
from .core import ContractViolation, IllegalMove, Outcome, Player, win_for

Cell = tuple[int, int]

RING = "ring"
BRIDGE = "bridge"
FORK = "fork"
NONE = "none"


@dataclass(frozen=True)
class HavannahPosition:
    board: HavannahHexagon
    stones: dict[Cell, Player] = field(default_factory=dict)
    to_move: Player = Player.FIRST

    @staticmethod
    def empty(s: int) -> "HavannahPosition":
        return HavannahPosition(HavannahHexagon(s))

    def stone_at(self, cell: Cell) -> Player | None:
        return self.stones.get(cell)

    def legal_moves(self) -> list[Cell]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal havannah position")
        return [c for c in self.board.cells if c not in self.stones]

    def apply(self, move: Cell) -> "HavannahPosition":
        self.board.require(move)
        if move in self.stones:
            raise IllegalMove("occupied", f"{move}")
        if self.outcome().is_terminal:
            raise IllegalMove("terminal", "game already decided")
        stones = dict(self.stones)
        stones[move] = self.to_move
        return replace(self, stones=stones, to_move=self.to_move.opponent)

    def groups(self, player: Player) -> list[set[Cell]]:
        own = {c for c, p in self.stones.items() if p is player}
        out: list[set[Cell]] = []
        seen: set[Cell] = set()
        for cell in own:
            if cell in seen:
                continue
            comp = {cell}
            dq = deque([cell])
            while dq:
                cur = dq.popleft()
                for nb in self.board.neighbors(cur):
                    if nb in own and nb not in comp:
                        comp.add(nb)
                        dq.append(nb)
            seen |= comp
            out.append(comp)
        return out

    def group_encloses(self, group: set[Cell]) -> bool:
        """Flood the complement of the group from the border; True iff a
        complement cell stays unreached."""
        board = self.board
        border = [c for c in board.cells if len(board.neighbors(c)) < 6]
        seen = set(group)
        dq = deque()
        for c in border:
            if c not in seen:
                seen.add(c)
                dq.append(c)
        while dq:
            cur = dq.popleft()
            for nb in board.neighbors(cur):
                if nb not in seen:
                    seen.add(nb)
                    dq.append(nb)
        return len(seen) < len(board.cells)

    def group_wins_by(self, group: set[Cell]) -> str:
        corners = sum(1 for c in group if c in self.board.corners)
        if corners >= 2:
            return BRIDGE
        edges = {self.board.edge_id(c) for c in group} - {None}
        if len(edges) >= 3:
            return FORK
        if len(group) >= 6 and self.group_encloses(group):
            return RING
        return NONE

    def wins_by(self, player: Player) -> str:
        """First winning structure found for player: ring, bridge, fork, or none."""
        best = NONE
        for group in self.groups(player):
            kind = self.group_wins_by(group)
            if kind != NONE:
                return kind
        return best

    def outcome(self) -> Outcome:
        for player in (Player.FIRST, Player.SECOND):
            if self.wins_by(player) != NONE:
                return win_for(player)
        return Outcome.ONGOING

    def ring_created_by(self, cell: Cell, player: Player) -> bool:
        """Would placing player at cell complete a ring?  cell must be empty."""
        if cell in self.stones:
            return False
        own = {c for c, p in self.stones.items() if p is player}
        group = {cell}
        dq = deque([cell])
        while dq:
            cur = dq.popleft()
            for nb in self.board.neighbors(cur):
                if nb in own and nb not in group:
                    group.add(nb)
                    dq.append(nb)
        if len(group) < 6:
            return False
        return self.group_encloses(group)

    def key(self):
        return ("havannah", self.board.s, frozenset(self.stones.items()), self.to_move)
