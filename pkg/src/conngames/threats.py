"""Havannah ring-threat calculus: completions, simple/double/second-order threats.

A simple threat is a move after which some single placement completes a
ring; a double threat leaves at least two completion cells.  A 2-threat is
a move m with a carrier {x, a, b}: after m, playing the exit x leaves ring
completions at both a and b that were not already available.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Player
from .havannah import HavannahPosition

Cell = tuple[int, int]

SIMPLE = "simple"
DOUBLE = "double"
TWO_THREAT = "two_threat"


@dataclass(frozen=True)
class Threat:
    kind: str
    move: Cell
    carrier: frozenset[Cell]
    exit: Cell | None = None


def ring_completions(position: HavannahPosition, player: Player,
                     cells=None) -> set[Cell]:
    """Empty cells whose occupation by player completes a ring."""
    board = position.board
    stones = position.stones
    out = set()
    scan = cells if cells is not None else board.cells
    for cell in scan:
        if cell in stones:
            continue
        # A completing cell closes a cycle, so it needs two own neighbors.
        own_nb = sum(1 for nb in board.neighbors(cell) if stones.get(nb) is player)
        if own_nb < 2:
            continue
        if position.ring_created_by(cell, player):
            out.add(cell)
    return out


def _place(position: HavannahPosition, cell: Cell, player: Player) -> HavannahPosition:
    stones = dict(position.stones)
    stones[cell] = player
    return HavannahPosition(position.board, stones, position.to_move)


def havannah_threats(position: HavannahPosition, player: Player,
                     region=None) -> list[Threat]:
    """Complete threat enumeration for player over the empty cells.

    ``region`` optionally restricts the cells considered for moves, exits,
    and completions (the gadget-local verification device).
    """
    board = position.board
    cells = [c for c in (region if region is not None else board.cells)
             if c not in position.stones]
    cellset = set(cells)
    threats: list[Threat] = []
    for move in cells:
        after_move = _place(position, move, player)
        direct = ring_completions(after_move, player,
                                  [c for c in cells if c != move])
        if len(direct) >= 2:
            threats.append(Threat(DOUBLE, move, frozenset(direct)))
        elif len(direct) == 1:
            threats.append(Threat(SIMPLE, move, frozenset(direct)))
        for exit_cell in cells:
            if exit_cell == move or exit_cell in direct:
                continue
            after_exit = _place(after_move, exit_cell, player)
            comp = ring_completions(
                after_exit, player,
                [c for c in cells if c not in (move, exit_cell)],
            )
            comp -= direct
            if len(comp) >= 2:
                for a, b in combinations(sorted(comp), 2):
                    threats.append(
                        Threat(TWO_THREAT, move, frozenset({exit_cell, a, b}),
                               exit=exit_cell)
                    )
    return threats


def two_threat_carriers(position: HavannahPosition, player: Player,
                        region=None) -> set[frozenset[Cell]]:
    return {
        t.carrier
        for t in havannah_threats(position, player, region)
        if t.kind == TWO_THREAT
    }


def make_threat_order(region=None):
    """Solver ordering for Havannah: ring-completing moves, then moves that
    leave a completion available, then the rest lexicographically."""

    def order(position, pairs):
        mover = position.to_move

        def rank(pair):
            move, child = pair
            if move == "skip":
                return (3, (0, 0))
            if position.ring_created_by(move, mover):
                return (0, move)
            if ring_completions(child, mover, region):
                return (1, move)
            return (2, move)

        return sorted(pairs, key=rank)

    return order
