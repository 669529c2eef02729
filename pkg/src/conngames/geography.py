"""Generalized geography: token sliding on a digraph, no revisits.

The mover pushes the token along an arc to an unvisited vertex; a player
wins when it is the opponent's turn and the opponent has no legal move.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from .core import ContractViolation, DomainError, IllegalMove, Outcome, Player, win_for

Vertex = str


@dataclass(frozen=True)
class GGInstance:
    vertices: frozenset[Vertex]
    arcs: frozenset[tuple[Vertex, Vertex]]
    token: Vertex
    visited: frozenset[Vertex] = frozenset()
    to_move: Player = Player.FIRST

    def __post_init__(self):
        for a, b in self.arcs:
            if a not in self.vertices or b not in self.vertices:
                raise DomainError(f"arc {a}->{b} leaves the vertex set")
        if self.token not in self.vertices:
            raise DomainError(f"token vertex {self.token} unknown")
        if self.token not in self.visited:
            object.__setattr__(self, "visited", self.visited | {self.token})

    @staticmethod
    def make(vertices, arcs, init: Vertex, to_move: Player = Player.FIRST) -> "GGInstance":
        return GGInstance(
            frozenset(vertices),
            frozenset(tuple(a) for a in arcs),
            init,
            frozenset({init}),
            to_move,
        )

    def successors_of(self, v: Vertex) -> list[Vertex]:
        return sorted(b for a, b in self.arcs if a == v)

    def predecessors_of(self, v: Vertex) -> list[Vertex]:
        return sorted(a for a, b in self.arcs if b == v)

    def legal_moves(self) -> list[Vertex]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal geography position")
        return [v for v in self.successors_of(self.token) if v not in self.visited]

    def apply(self, move: Vertex) -> "GGInstance":
        if (self.token, move) not in self.arcs:
            raise IllegalMove("revisit", f"no arc {self.token}->{move}")
        if move in self.visited:
            raise IllegalMove("revisit", move)
        return replace(
            self,
            token=move,
            visited=self.visited | {move},
            to_move=self.to_move.opponent,
        )

    def outcome(self) -> Outcome:
        movable = any(
            v not in self.visited for v in self.successors_of(self.token)
        )
        if movable:
            return Outcome.ONGOING
        return win_for(self.to_move.opponent)

    def degree_profile(self, v: Vertex) -> tuple[int, int]:
        return (len(self.predecessors_of(v)), len(self.successors_of(v)))

    def key(self):
        return ("gg", self.arcs, self.token, self.visited, self.to_move)


def fig_example_instance() -> GGInstance:
    """The paper's small six-vertex example digraph, token on vertex 1."""
    arcs = [
        ("1", "4"), ("1", "5"), ("2", "5"), ("3", "6"),
        ("4", "2"), ("5", "3"), ("6", "2"), ("6", "3"),
    ]
    return GGInstance.make({"1", "2", "3", "4", "5", "6"}, arcs, "1")
