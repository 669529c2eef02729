"""Slither rules on plane, cylinder, and torus grids.

A move is an optional relocation of an own stone to a king-adjacent empty
square followed by a mandatory placement into an empty square.  The
resulting position must satisfy the diagonal rule for the mover: no two
diagonally-adjacent own stones without a common orthogonally-adjacent own
stone.  A player with no legal move passes; two consecutive passes end
the game as a draw (reachable only on wrapped boards).

First player is White and connects the first row to the last row; second
player is Black and connects the first column to the last column.  On a
cylinder the columns wrap, so Black has no pair of sides left to connect;
on a torus neither player does.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .boards import PLANE, TORUS, SquareGrid
from .core import ContractViolation, IllegalMove, Outcome, Player, win_for

Cell = tuple[int, int]


def cell_name(cell: Cell) -> str:
    x, y = cell
    return f"{chr(ord('A') + x)}{y + 1}"


def parse_cell_name(text: str) -> Cell:
    return (ord(text[0].upper()) - ord("A"), int(text[1:]) - 1)


@dataclass(frozen=True)
class SlitherMove:
    relocation: tuple[Cell, Cell] | None = None
    placement: Cell | None = None
    is_pass: bool = False

    def __str__(self) -> str:
        if self.is_pass:
            return "pass"
        place = cell_name(self.placement)
        if self.relocation:
            src, dst = self.relocation
            return f"{cell_name(src)}>{cell_name(dst)} {place}"
        return place


PASS = SlitherMove(is_pass=True)


@dataclass(frozen=True)
class SlitherPosition:
    board: SquareGrid
    stones: dict[Cell, Player] = field(default_factory=dict)
    to_move: Player = Player.FIRST
    consecutive_passes: int = 0

    @staticmethod
    def empty(width: int, height: int, topology: str = PLANE) -> "SlitherPosition":
        return SlitherPosition(SquareGrid(width, height, topology))

    def stone_at(self, cell: Cell) -> Player | None:
        return self.stones.get(cell)

    # -- diagonal rule ----------------------------------------------------

    def _pair_ok(self, a: Cell, b: Cell, own: set[Cell]) -> bool:
        commons = set(self.board.neighbors(a)) & set(self.board.neighbors(b))
        return any(c in own for c in commons)

    def _local_ok(self, own: set[Cell], suspects) -> bool:
        """Diagonal rule restricted to pairs touching the suspect cells."""
        for a in suspects:
            if a not in own:
                continue
            for b in self.board.diagonal_neighbors(a):
                if b in own and not self._pair_ok(a, b, own):
                    return False
        return True

    def diagonal_rule_ok(self, player: Player) -> bool:
        own = {c for c, p in self.stones.items() if p is player}
        return self._local_ok(own, set(own))

    # -- move mechanics ---------------------------------------------------

    def _result_own(self, move: SlitherMove, player: Player) -> set[Cell]:
        """Own stones after move.  Raises IllegalMove on structural faults."""
        own = {c for c, p in self.stones.items() if p is player}
        occupied = set(self.stones)
        if move.relocation is not None:
            src, dst = move.relocation
            self.board.require(src)
            self.board.require(dst)
            if src not in own:
                raise IllegalMove("no-stone", f"no own stone at {src}")
            if dst in occupied:
                raise IllegalMove("occupied", f"{dst}")
            if dst not in self.board.king_neighbors(src):
                raise IllegalMove("not-king-adjacent", f"{src}->{dst}")
            own.discard(src)
            occupied.discard(src)
            own.add(dst)
            occupied.add(dst)
        place = move.placement
        if place is None:
            raise IllegalMove("occupied", "placement required")
        self.board.require(place)
        if place in occupied:
            raise IllegalMove("occupied", f"{place}")
        own.add(place)
        return own

    def _suspects(self, move: SlitherMove) -> set[Cell]:
        out = {move.placement}
        if move.relocation:
            src, dst = move.relocation
            out.add(dst)
            out.update(self.board.king_neighbors(src))
        return out

    def move_is_legal(self, move: SlitherMove, player: Player | None = None) -> bool:
        player = player or self.to_move
        if move.is_pass:
            return not self.has_real_move(player)
        try:
            own = self._result_own(move, player)
        except IllegalMove:
            return False
        return self._local_ok(own, self._suspects(move))

    def _real_moves(self, player: Player, stop_at_first: bool) -> list[SlitherMove]:
        own = {c for c, p in self.stones.items() if p is player}
        empties = [c for c in self.board.cells if c not in self.stones]
        out: list[SlitherMove] = []
        for place in empties:
            new = own | {place}
            if self._local_ok(new, {place}):
                out.append(SlitherMove(placement=place))
                if stop_at_first:
                    return out
        for src in sorted(own):
            king_src = self.board.king_neighbors(src)
            for dst in king_src:
                if dst in self.stones:
                    continue
                moved = (own - {src}) | {dst}
                for place in empties + [src]:
                    if place == dst or place in moved:
                        continue
                    new = moved | {place}
                    suspects = {place, dst} | set(king_src)
                    if self._local_ok(new, suspects):
                        out.append(SlitherMove(relocation=(src, dst), placement=place))
                        if stop_at_first:
                            return out
        return out

    def real_moves(self, player: Player | None = None) -> list[SlitherMove]:
        """All legal non-pass moves, not deduplicated."""
        return self._real_moves(player or self.to_move, stop_at_first=False)

    def has_real_move(self, player: Player | None = None) -> bool:
        return bool(self._real_moves(player or self.to_move, stop_at_first=True))

    def legal_moves(self) -> list[SlitherMove]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal slither position")
        moves = self.real_moves()
        return moves if moves else [PASS]

    def distinct_successors(self) -> list[tuple[SlitherMove, "SlitherPosition"]]:
        """(move, child) pairs deduplicated by resulting position."""
        seen = set()
        out = []
        for move in self.legal_moves():
            child = self.apply(move)
            k = child.key()
            if k not in seen:
                seen.add(k)
                out.append((move, child))
        return out

    def apply(self, move: SlitherMove) -> "SlitherPosition":
        if self.outcome().is_terminal:
            raise IllegalMove("terminal", "game already decided")
        player = self.to_move
        if move.is_pass:
            if self.has_real_move(player):
                raise IllegalMove("pass-not-forced", "a real move exists")
            return replace(
                self,
                to_move=player.opponent,
                consecutive_passes=self.consecutive_passes + 1,
            )
        own = self._result_own(move, player)
        if not self._local_ok(own, self._suspects(move)):
            raise IllegalMove("diagonal-rule", str(move))
        stones = {c: p for c, p in self.stones.items() if p is not player}
        for c in own:
            stones[c] = player
        return replace(self, stones=stones, to_move=player.opponent, consecutive_passes=0)

    # -- outcome ----------------------------------------------------------

    def _connects(self, player: Player) -> bool:
        board = self.board
        own = {c for c, p in self.stones.items() if p is player}
        if player is Player.FIRST:
            if board.topology == TORUS:
                return False
            starts = [c for c in own if c[1] == 0]
            goal = lambda c: c[1] == board.height - 1
        else:
            if board.topology != PLANE:
                return False
            starts = [c for c in own if c[0] == 0]
            goal = lambda c: c[0] == board.width - 1
        seen = set(starts)
        dq = deque(starts)
        while dq:
            cur = dq.popleft()
            if goal(cur):
                return True
            for nb in board.neighbors(cur):
                if nb in own and nb not in seen:
                    seen.add(nb)
                    dq.append(nb)
        return False

    def winner(self) -> Player | None:
        for player in (Player.FIRST, Player.SECOND):
            if self._connects(player):
                return player
        return None

    def outcome(self) -> Outcome:
        w = self.winner()
        if w is not None:
            return win_for(w)
        if self.consecutive_passes >= 2:
            return Outcome.DRAW
        return Outcome.ONGOING

    def validate(self) -> list[str]:
        """Invariant audit: diagonal rule for both colors, pass counter."""
        problems = []
        for player in (Player.FIRST, Player.SECOND):
            own = {c for c, p in self.stones.items() if p is player}
            for a in sorted(own):
                for b in self.board.diagonal_neighbors(a):
                    if b in own and b > a and not self._pair_ok(a, b, own):
                        problems.append(
                            f"diagonal-rule {player.value} {cell_name(a)}/{cell_name(b)}"
                        )
        if not 0 <= self.consecutive_passes <= 2:
            problems.append(f"pass counter {self.consecutive_passes}")
        return problems

    def key(self):
        return (
            "slither",
            self.board.width,
            self.board.height,
            self.board.topology,
            frozenset(self.stones.items()),
            self.to_move,
            min(self.consecutive_passes, 2),
        )
