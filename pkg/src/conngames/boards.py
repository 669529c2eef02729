"""Board geometries and adjacency for the hex and grid games.

Three board families:

* ``HexRhombus(n)`` -- the n-by-n parallelogram of hexagons.  Cells are
  axial pairs ``(c, r)`` with ``0 <= c, r < n``.  Side names follow the
  rhombus-as-drawn: ``ne`` is the r=0 border, ``sw`` is r=n-1, ``nw`` is
  c=0, ``se`` is c=n-1.  The first player owns the ne/sw pair (the pair
  the original figures call top-right / bottom-left); the second player
  owns nw/se.  The pairing is a convention -- the source material never
  fixes one -- and everything downstream only relies on it being fixed.

* ``HavannahHexagon(s)`` -- regular hexagon with s cells per side, axial
  coordinates ``(q, r)`` with ``max(|q|, |r|, |q+r|) <= s-1``.  The six
  corner cells belong to no edge.

* ``SquareGrid(w, h, topology)`` -- grid for Slither and Twixt, with
  plane, cylinder (columns wrap), or torus (both wrap) topology.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import DomainError

HEX_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
ORTHO_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))
DIAG_DIRS = ((1, 1), (1, -1), (-1, 1), (-1, -1))

CORNER = "corner"
INTERIOR = "interior"


@dataclass(frozen=True)
class HexRhombus:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"rhombus side must be >= 1, got {self.n}")

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return _rhombus_cells(self.n)

    def contains(self, cell: tuple[int, int]) -> bool:
        c, r = cell
        return 0 <= c < self.n and 0 <= r < self.n

    def require(self, cell: tuple[int, int]) -> None:
        if not self.contains(cell):
            raise DomainError(f"cell {cell} not on rhombus of side {self.n}")

    def neighbors(self, cell: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        self.require(cell)
        c, r = cell
        return tuple(
            (c + dc, r + dr)
            for dc, dr in HEX_DIRS
            if 0 <= c + dc < self.n and 0 <= r + dr < self.n
        )

    def sides_of(self, cell: tuple[int, int]) -> tuple[str, ...]:
        """Sides the cell lies on; rhombus corners belong to both incident sides."""
        self.require(cell)
        c, r = cell
        out = []
        if r == 0:
            out.append("ne")
        if r == self.n - 1:
            out.append("sw")
        if c == 0:
            out.append("nw")
        if c == self.n - 1:
            out.append("se")
        return tuple(out)

    def border_role(self, cell: tuple[int, int]):
        sides = self.sides_of(cell)
        if not sides:
            return INTERIOR
        return sides

    # Sides owned by each player: first connects ne<->sw, second nw<->se.
    FIRST_SIDES = ("ne", "sw")
    SECOND_SIDES = ("nw", "se")

    def side_cells(self, side: str) -> tuple[tuple[int, int], ...]:
        n = self.n
        if side == "ne":
            return tuple((c, 0) for c in range(n))
        if side == "sw":
            return tuple((c, n - 1) for c in range(n))
        if side == "nw":
            return tuple((0, r) for r in range(n))
        if side == "se":
            return tuple((n - 1, r) for r in range(n))
        raise DomainError(f"unknown rhombus side {side!r}")


@lru_cache(maxsize=None)
def _rhombus_cells(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((c, r) for r in range(n) for c in range(n))


@dataclass(frozen=True)
class HavannahHexagon:
    s: int

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"hexagon base size must be >= 1, got {self.s}")

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return _hexagon_cells(self.s)

    def contains(self, cell: tuple[int, int]) -> bool:
        q, r = cell
        m = self.s - 1
        return abs(q) <= m and abs(r) <= m and abs(q + r) <= m

    def require(self, cell: tuple[int, int]) -> None:
        if not self.contains(cell):
            raise DomainError(f"cell {cell} not on hexagon of size {self.s}")

    def neighbors(self, cell: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        self.require(cell)
        q, r = cell
        return tuple(
            (q + dq, r + dr) for dq, dr in HEX_DIRS if self.contains((q + dq, r + dr))
        )

    @property
    def corners(self) -> tuple[tuple[int, int], ...]:
        m = self.s - 1
        return ((m, 0), (0, m), (-m, m), (-m, 0), (0, -m), (m, -m))

    def edge_id(self, cell: tuple[int, int]) -> int | None:
        """Index 0..5 of the board edge holding this cell, None otherwise.

        Corner cells are not considered part of any edge.
        """
        self.require(cell)
        if cell in self.corners:
            return None
        q, r = cell
        m = self.s - 1
        if r == -m:
            return 0
        if q + r == -m:
            return 1
        if q == -m:
            return 2
        if r == m:
            return 3
        if q + r == m:
            return 4
        if q == m:
            return 5
        return None

    def border_role(self, cell: tuple[int, int]):
        if cell in self.corners:
            return CORNER
        e = self.edge_id(cell)
        return INTERIOR if e is None else ("edge", e)

    def edge_cells(self, edge: int) -> tuple[tuple[int, int], ...]:
        return tuple(c for c in self.cells if self.edge_id(c) == edge)


@lru_cache(maxsize=None)
def _hexagon_cells(s: int) -> tuple[tuple[int, int], ...]:
    m = s - 1
    return tuple(
        (q, r)
        for r in range(-m, m + 1)
        for q in range(max(-m, -m - r), min(m, m - r) + 1)
    )


PLANE = "plane"
CYLINDER = "cylinder"
TORUS = "torus"


@dataclass(frozen=True)
class SquareGrid:
    width: int
    height: int
    topology: str = PLANE

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise DomainError(f"grid must be at least 1x1, got {self.width}x{self.height}")
        if self.topology not in (PLANE, CYLINDER, TORUS):
            raise DomainError(f"unknown topology {self.topology!r}")

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((x, y) for y in range(self.height) for x in range(self.width))

    def contains(self, cell: tuple[int, int]) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def require(self, cell: tuple[int, int]) -> None:
        if not self.contains(cell):
            raise DomainError(
                f"cell {cell} not on {self.width}x{self.height} {self.topology} grid"
            )

    def wrap(self, x: int, y: int) -> tuple[int, int] | None:
        """Normalize a raw coordinate under the topology, None if off-board."""
        if self.topology in (CYLINDER, TORUS):
            x %= self.width
        if self.topology == TORUS:
            y %= self.height
        if 0 <= x < self.width and 0 <= y < self.height:
            return (x, y)
        return None

    def _shift(self, cell: tuple[int, int], dirs) -> tuple[tuple[int, int], ...]:
        self.require(cell)
        x, y = cell
        out = []
        for dx, dy in dirs:
            w = self.wrap(x + dx, y + dy)
            if w is not None and w != cell:
                out.append(w)
        # A 1-wide wrapped board can reach the same cell twice.
        return tuple(dict.fromkeys(out))

    def neighbors(self, cell: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        """Orthogonally adjacent cells."""
        return self._shift(cell, ORTHO_DIRS)

    def diagonal_neighbors(self, cell: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        return tuple(
            c for c in self._shift(cell, DIAG_DIRS) if c not in self.neighbors(cell)
        )

    def king_neighbors(self, cell: tuple[int, int]) -> tuple[tuple[int, int], ...]:
        return tuple(dict.fromkeys(self.neighbors(cell) + self._shift(cell, DIAG_DIRS)))

    def border_role(self, cell: tuple[int, int]):
        self.require(cell)
        x, y = cell
        sides = []
        if self.topology == PLANE:
            if x == 0:
                sides.append("west")
            if x == self.width - 1:
                sides.append("east")
        if self.topology in (PLANE, CYLINDER):
            if y == 0:
                sides.append("south")
            if y == self.height - 1:
                sides.append("north")
        return tuple(sides) if sides else INTERIOR
