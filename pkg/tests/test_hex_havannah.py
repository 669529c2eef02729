from __future__ import annotations

import itertools
import random

import pytest

from conngames.core import IllegalMove, Outcome, Player
from conngames.havannah import BRIDGE, FORK, NONE, RING, HavannahPosition
from conngames.hex_game import HexPosition

from .oracles import ring_by_cycle_enumeration


def test_hex_1x1_single_move_and_win():
    p = HexPosition.empty(1)
    assert p.legal_moves() == [(0, 0)]
    assert p.apply((0, 0)).outcome() is Outcome.FIRST_WIN


def test_hex_occupied():
    p = HexPosition.empty(2).apply((0, 0))
    with pytest.raises(IllegalMove) as e:
        p.apply((0, 0))
    assert e.value.reason == "occupied"


def test_hex_2x2_all_first_wins():
    stones = {c: Player.FIRST for c in HexPosition.empty(2).board.cells}
    p = HexPosition(HexPosition.empty(2).board, stones, Player.SECOND)
    assert p.outcome() is Outcome.FIRST_WIN


def test_hex_filled_boards_have_exactly_one_winner_n3():
    board = HexPosition.empty(3).board
    cells = board.cells
    for bits in range(1 << 9):
        stones = {
            cells[i]: (Player.FIRST if bits >> i & 1 else Player.SECOND)
            for i in range(9)
        }
        p = HexPosition(board, stones, Player.FIRST)
        wins = [p.has_connection(Player.FIRST), p.has_connection(Player.SECOND)]
        assert sum(wins) == 1, bits


def test_hex_first_player_connects_rows():
    # A full row 0..n-1 column path for the first player wins.
    board = HexPosition.empty(3).board
    stones = {(1, r): Player.FIRST for r in range(3)}
    assert HexPosition(board, stones).outcome() is Outcome.FIRST_WIN
    stones = {(c, 1): Player.SECOND for c in range(3)}
    assert HexPosition(board, stones).outcome() is Outcome.SECOND_WIN


def hav_from(cells_first=(), cells_second=(), s=6):
    stones = {}
    for c in cells_first:
        stones[c] = Player.FIRST
    for c in cells_second:
        stones[c] = Player.SECOND
    return HavannahPosition(HavannahPosition.empty(s).board, stones)


def test_minimal_ring():
    center = (0, 0)
    p = hav_from(cells_first=[(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)])
    assert p.wins_by(Player.FIRST) == RING
    assert p.outcome() is Outcome.FIRST_WIN


def test_ring_may_enclose_opponent_stone():
    ring = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
    p = hav_from(cells_first=ring, cells_second=[(0, 0)])
    assert p.wins_by(Player.FIRST) == RING


def test_solid_disk_is_not_a_ring():
    ring = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1), (0, 0)]
    p = hav_from(cells_first=ring)
    assert p.wins_by(Player.FIRST) == NONE


def test_bridge_two_corners():
    s = 4
    m = s - 1
    path = [(m, 0), (m, -1), (m, -2), (m, -m)]
    path += []
    p = hav_from(cells_first=path, s=s)
    assert p.wins_by(Player.FIRST) == BRIDGE


def test_fork_three_edges_corners_do_not_count():
    s = 4
    b = HavannahPosition.empty(s).board
    # Three arms from the center to non-corner cells of three distinct edges.
    arms = [
        (0, 0),
        (0, -1), (0, -2), (1, -3),     # edge 0 (r = -3)
        (-1, 0), (-2, 0), (-3, 1),     # edge 2 (q = -3)
        (0, 1), (0, 2), (1, 2),        # edge 4 (q + r = 3)
    ]
    for tip in ((1, -3), (-3, 1), (1, 2)):
        assert b.border_role(tip)[0] == "edge"
    p = hav_from(cells_first=arms, s=s)
    assert p.wins_by(Player.FIRST) == FORK
    # Swap one edge tip for the adjacent corner: only two edges remain.
    arms_corner = [c for c in arms if c != (1, -3)] + [(0, -3)]
    p = hav_from(cells_first=arms_corner, s=s)
    assert p.wins_by(Player.FIRST) != FORK


def test_fig10_style_groups():
    # Corner-through line: corner not part of any edge, so only two edges.
    s = 4
    m = s - 1
    group = [(-m, m), (-m + 1, m - 1), (-m + 2, m - 2)]
    # (-m, m) is a corner; the two others sit on edges 3 and ... build a
    # two-edge group through a corner: must not be a fork.
    p = hav_from(cells_first=group, s=s)
    assert p.wins_by(Player.FIRST) != FORK


def test_ring_detector_agrees_with_cycle_oracle_exhaustive_s2():
    board = HavannahPosition.empty(2).board
    cells = board.cells
    for assignment in itertools.product([None, Player.FIRST, Player.SECOND],
                                        repeat=len(cells)):
        stones = {
            cells[i]: v for i, v in enumerate(assignment) if v is not None
        }
        p = HavannahPosition(board, stones)
        for player in (Player.FIRST, Player.SECOND):
            mine = any(
                len(g) >= 6 and p.group_encloses(g) for g in p.groups(player)
            )
            assert mine == ring_by_cycle_enumeration(p, player)


def test_ring_detector_agrees_with_cycle_oracle_random_s3():
    rng = random.Random(42)
    board = HavannahPosition.empty(3).board
    cells = list(board.cells)
    for _ in range(150):
        stones = {}
        for c in cells:
            r = rng.random()
            if r < 0.38:
                stones[c] = Player.FIRST
            elif r < 0.5:
                stones[c] = Player.SECOND
        p = HavannahPosition(board, stones)
        mine = any(
            len(g) >= 6 and p.group_encloses(g) for g in p.groups(Player.FIRST)
        )
        assert mine == ring_by_cycle_enumeration(p, Player.FIRST)
