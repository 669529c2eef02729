"""Generalized hex (the vertex switching game).

White and Black alternately pebble empty vertices of a graph carrying two
white-pebbled terminals s and t.  White (first player) wins on completing
an all-white s-t path; Black wins once no such path can ever form, i.e.
when s and t are separated in the graph minus black-pebbled vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace

from .core import ContractViolation, DomainError, IllegalMove, Outcome, Player, win_for

Vertex = str


@dataclass(frozen=True)
class GenHexInstance:
    vertices: frozenset[Vertex]
    edges: frozenset[frozenset[Vertex]]
    s: Vertex
    t: Vertex
    white: frozenset[Vertex] = frozenset()
    black: frozenset[Vertex] = frozenset()
    to_move: Player = Player.FIRST

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise DomainError(f"bad edge {set(e)}")
        if self.s not in self.vertices or self.t not in self.vertices:
            raise DomainError("terminals must be vertices")
        if self.white & self.black:
            raise DomainError("a vertex cannot hold both pebbles")
        if self.s not in self.white or self.t not in self.white:
            object.__setattr__(self, "white", self.white | {self.s, self.t})

    @staticmethod
    def make(vertices, edges, s, t, white=(), black=(),
             to_move: Player = Player.FIRST) -> "GenHexInstance":
        return GenHexInstance(
            frozenset(vertices),
            frozenset(frozenset(e) for e in edges),
            s,
            t,
            frozenset(white) | {s, t},
            frozenset(black),
            to_move,
        )

    def pebble_at(self, v: Vertex) -> Player | None:
        if v in self.white:
            return Player.FIRST
        if v in self.black:
            return Player.SECOND
        return None

    @property
    def adjacency(self) -> dict[Vertex, tuple[Vertex, ...]]:
        return _adjacency(self.vertices, self.edges)

    def neighbors_of(self, v: Vertex) -> list[Vertex]:
        return list(self.adjacency[v])

    def _reachable(self, allowed) -> bool:
        """Is t reachable from s through allowed vertices (s, t assumed allowed)?"""
        if self.s == self.t:
            return True
        adj = self.adjacency
        seen = {self.s}
        dq = deque([self.s])
        while dq:
            cur = dq.popleft()
            for nb in adj[cur]:
                if nb == self.t:
                    return True
                if nb in allowed and nb not in seen:
                    seen.add(nb)
                    dq.append(nb)
        return False

    def white_path_exists(self) -> bool:
        return self._reachable(self.white)

    def path_still_possible(self) -> bool:
        return self._reachable(self.vertices - self.black)

    def legal_moves(self) -> list[Vertex]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal genhex position")
        return sorted(self.vertices - self.white - self.black)

    def apply(self, move: Vertex) -> "GenHexInstance":
        if move not in self.vertices:
            raise IllegalMove("occupied", f"unknown vertex {move}")
        if move in self.white or move in self.black:
            raise IllegalMove("occupied", move)
        if self.to_move is Player.FIRST:
            return replace(self, white=self.white | {move}, to_move=Player.SECOND)
        return replace(self, black=self.black | {move}, to_move=Player.FIRST)

    def outcome(self) -> Outcome:
        if self.white_path_exists():
            return win_for(Player.FIRST)
        if not self.path_still_possible():
            return win_for(Player.SECOND)
        return Outcome.ONGOING

    def key(self):
        return ("genhex", self.white, self.black, self.to_move)


_ADJ_CACHE: dict[tuple, dict[Vertex, tuple[Vertex, ...]]] = {}


def _adjacency(vertices, edges) -> dict[Vertex, tuple[Vertex, ...]]:
    cache_key = (vertices, edges)
    adj = _ADJ_CACHE.get(cache_key)
    if adj is None:
        raw: dict[Vertex, list[Vertex]] = {v: [] for v in vertices}
        for e in edges:
            pair = sorted(e)
            if len(pair) == 1:
                continue
            a, b = pair
            raw[a].append(b)
            raw[b].append(a)
        adj = {v: tuple(sorted(ns)) for v, ns in raw.items()}
        if len(_ADJ_CACHE) > 512:
            _ADJ_CACHE.clear()
        _ADJ_CACHE[cache_key] = adj
    return adj
