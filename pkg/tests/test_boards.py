from __future__ import annotations

import pytest

from conngames.boards import (
    CORNER,
    INTERIOR,
    CYLINDER,
    PLANE,
    TORUS,
    HavannahHexagon,
    HexRhombus,
    SquareGrid,
)
from conngames.core import DomainError


def test_rhombus_cell_count_and_neighbor_degrees():
    b = HexRhombus(3)
    assert len(b.cells) == 9
    degs = sorted(len(b.neighbors(c)) for c in b.cells)
    # One interior cell with 6; corners have 2 or 3; edge cells 4.
    assert degs.count(6) == 1
    assert set(degs) <= {2, 3, 4, 6}


def test_rhombus_acute_corners_have_two_neighbors():
    b = HexRhombus(3)
    twos = [c for c in b.cells if len(b.neighbors(c)) == 2]
    assert sorted(twos) == [(0, 0), (2, 2)]


def test_neighbor_symmetry_all_boards():
    boards = [
        HexRhombus(4),
        HavannahHexagon(4),
        SquareGrid(4, 5, PLANE),
        SquareGrid(4, 5, CYLINDER),
        SquareGrid(4, 5, TORUS),
    ]
    for b in boards:
        for a in b.cells:
            for nb in b.neighbors(a):
                assert a in b.neighbors(nb)
                assert nb != a


def test_out_of_board_rejected():
    with pytest.raises(DomainError):
        HexRhombus(3).neighbors((3, 0))
    with pytest.raises(DomainError):
        HavannahHexagon(3).neighbors((3, 0))
    with pytest.raises(DomainError):
        SquareGrid(2, 2).neighbors((2, 0))


def test_hexagon_cell_counts():
    for s in range(2, 11):
        assert len(HavannahHexagon(s).cells) == 3 * s * s - 3 * s + 1


def test_hexagon_center_has_six_neighbors():
    b = HavannahHexagon(6)
    assert len(b.neighbors((0, 0))) == 6


def test_hexagon_corners_and_edges():
    b = HavannahHexagon(4)
    assert len(set(b.corners)) == 6
    for c in b.corners:
        assert b.border_role(c) == CORNER
    for e in range(6):
        cells = b.edge_cells(e)
        assert len(cells) == b.s - 2
        for c in cells:
            assert b.border_role(c) == ("edge", e)
    # Edge sets pairwise disjoint and disjoint from corners.
    all_edge_cells = [c for e in range(6) for c in b.edge_cells(e)]
    assert len(all_edge_cells) == len(set(all_edge_cells))
    assert not set(all_edge_cells) & set(b.corners)


def test_hexagon_border_cells_between_corners_are_edges():
    b = HavannahHexagon(4)
    border = [c for c in b.cells if len(b.neighbors(c)) < 6]
    for c in border:
        if c in b.corners:
            continue
        role = b.border_role(c)
        assert role[0] == "edge"


def test_square_grid_degrees():
    plane = SquareGrid(4, 5, PLANE)
    assert {len(plane.neighbors(c)) for c in plane.cells} == {2, 3, 4}
    cyl = SquareGrid(4, 5, CYLINDER)
    assert {len(cyl.neighbors(c)) for c in cyl.cells} == {3, 4}
    tor = SquareGrid(4, 5, TORUS)
    assert {len(tor.neighbors(c)) for c in tor.cells} == {4}


def test_king_adjacency_decomposition():
    g = SquareGrid(5, 4, PLANE)
    for c in g.cells:
        ortho = set(g.neighbors(c))
        diag = set(g.diagonal_neighbors(c))
        assert not ortho & diag
        assert ortho | diag == set(g.king_neighbors(c))


def test_rhombus_border_roles():
    b = HexRhombus(3)
    assert b.border_role((0, 1)) == ("nw",)
    assert b.border_role((1, 1)) == INTERIOR
    assert set(b.border_role((0, 0))) == {"ne", "nw"}


def test_rhombus_side_pairs_partition_border():
    b = HexRhombus(4)
    border = [c for c in b.cells if b.border_role(c) != INTERIOR]
    covered = set()
    for side in ("ne", "sw", "nw", "se"):
        covered |= set(b.side_cells(side))
    assert covered == set(border)
