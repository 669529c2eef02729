"""Twixt rules: peg placement, automatic knight-move links, crossing law.

White (first player) links the top and bottom rows and may not place in
the left/right border columns; Black links left and right columns and may
not place in the top/bottom border rows.  Corner holes are therefore
playable by nobody.

Links join two same-color pegs a knight's move apart.  In the classic
variant no two links may cross (exact open-segment test); a player may
remove own links during their move to make room.  In the pencil-and-paper
variant (pp) same-color links may cross, so only opposite-color crossings
block a link.

A move is modeled explicitly as (removals, placement, additions).  Move
generation performs the automatic link completion: every candidate link
that can form does form, branching only where candidates mutually
conflict or an own link must be removed first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .boards import PLANE, SquareGrid
from .core import ContractViolation, IllegalMove, Outcome, Player, win_for
from .geometry import KNIGHT_DELTAS, links_cross

Cell = tuple[int, int]
Link = tuple[Cell, Cell]

CLASSIC = "classic"
PP = "pp"


def norm_link(a: Cell, b: Cell) -> Link:
    return (a, b) if a <= b else (b, a)


def knight_pairs(cell: Cell, board: SquareGrid):
    x, y = cell
    for dx, dy in KNIGHT_DELTAS:
        other = (x + dx, y + dy)
        if board.contains(other):
            yield other


def cell_name(cell: Cell) -> str:
    x, y = cell
    return f"{chr(ord('A') + x)}{y + 1}"


def parse_cell_name(text: str) -> Cell:
    return (ord(text[0].upper()) - ord("A"), int(text[1:]) - 1)


@dataclass(frozen=True)
class TwixtMove:
    placement: Cell
    additions: frozenset[Link] = frozenset()
    removals: frozenset[Link] = frozenset()

    def __str__(self) -> str:
        parts = [cell_name(self.placement)]
        for a, b in sorted(self.removals):
            parts.append(f"-link {cell_name(a).lower()} {cell_name(b).lower()}")
        for a, b in sorted(self.additions):
            parts.append(f"+link {cell_name(a).lower()} {cell_name(b).lower()}")
        return " ".join(parts)


@dataclass(frozen=True)
class TwixtPosition:
    board: SquareGrid
    pegs: dict[Cell, Player] = field(default_factory=dict)
    links: frozenset[Link] = frozenset()
    variant: str = CLASSIC
    to_move: Player = Player.FIRST

    @staticmethod
    def empty(n: int, variant: str = CLASSIC) -> "TwixtPosition":
        return TwixtPosition(SquareGrid(n, n, PLANE), variant=variant)

    def peg_at(self, cell: Cell) -> Player | None:
        return self.pegs.get(cell)

    def link_owner(self, link: Link) -> Player:
        return self.pegs[link[0]]

    def allowed_cell(self, cell: Cell, player: Player) -> bool:
        """Border rule: White avoids the side columns, Black the top/bottom rows."""
        x, y = cell
        if player is Player.FIRST:
            return 0 < x < self.board.width - 1
        return 0 < y < self.board.height - 1

    # -- crossing machinery -------------------------------------------------

    def _blockers_for(self, link: Link, owner: Player) -> list[Link]:
        """Existing links whose segments cross this candidate.

        In the pp variant same-color crossings are allowed, so only
        opposite-color links block.
        """
        out = []
        for other in self.links:
            if self.variant == PP and self.link_owner(other) is owner:
                continue
            if links_cross(link, other):
                out.append(other)
        return out

    def candidate_links(self, cell: Cell, player: Player) -> list[Link]:
        """Same-color knight pairs through cell, regardless of crossings."""
        out = []
        for other in knight_pairs(cell, self.board):
            if self.pegs.get(other) is player:
                out.append(norm_link(cell, other))
        return out

    # -- move application ----------------------------------------------------

    def apply(self, move: TwixtMove) -> "TwixtPosition":
        if self.outcome().is_terminal:
            raise IllegalMove("terminal", "game already decided")
        player = self.to_move
        cell = move.placement
        self.board.require(cell)
        if cell in self.pegs:
            raise IllegalMove("occupied", cell_name(cell))
        if not self.allowed_cell(cell, player):
            raise IllegalMove("border", cell_name(cell))
        for link in move.removals:
            if link not in self.links:
                raise IllegalMove("no-stone", f"cannot remove absent link {link}")
            if self.link_owner(link) is not player:
                raise IllegalMove("no-stone", "cannot remove opponent link")
        pegs = dict(self.pegs)
        pegs[cell] = player
        kept = set(self.links) - set(move.removals)
        for link in move.additions:
            a, b = link
            if norm_link(a, b) != link:
                raise IllegalMove("not-knight-pair", "link not normalized")
            if pegs.get(a) is not player or pegs.get(b) is not player:
                raise IllegalMove("not-knight-pair", f"{link} endpoints not own pegs")
            if (b[0] - a[0], b[1] - a[1]) not in KNIGHT_DELTAS:
                raise IllegalMove("not-knight-pair", f"{link}")
            if link in kept:
                raise IllegalMove("occupied", f"link {link} already present")
        new_links = sorted(move.additions)
        for i, link in enumerate(new_links):
            for other in kept:
                if self.variant == PP and pegs[other[0]] is player:
                    continue
                if links_cross(link, other):
                    raise IllegalMove("crossing", f"{link} x {other}")
            if self.variant == CLASSIC:
                for other in new_links[i + 1:]:
                    if links_cross(link, other):
                        raise IllegalMove("crossing", f"{link} x {other}")
        kept.update(new_links)
        return replace(
            self, pegs=pegs, links=frozenset(kept), to_move=player.opponent
        )

    # -- move generation -----------------------------------------------------

    def moves_for_placement(self, cell: Cell, player: Player) -> list[TwixtMove]:
        """Automatic link completion for a placement, branching on conflicts."""
        cands = []
        removable_for: dict[Link, list[Link]] = {}
        for link in self.candidate_links(cell, player):
            blockers = self._blockers_for(link, player)
            if any(self.link_owner(b) is not player for b in blockers):
                continue  # enemy-crossed candidates can never form
            cands.append(link)
            removable_for[link] = blockers  # own links only, possibly empty
        if not cands:
            return [TwixtMove(cell)]
        if self.variant == PP:
            free = [l for l in cands if not removable_for[l]]
            return [TwixtMove(cell, frozenset(free))]

        moves = {}
        own_conflicts = sorted({b for l in cands for b in removable_for[l]})
        for r in range(len(own_conflicts) + 1):
            for removed in itertools.combinations(own_conflicts, r):
                removed_set = set(removed)
                avail = [
                    l for l in cands if all(b in removed_set for b in removable_for[l])
                ]
                for adds in _maximal_noncrossing(avail):
                    # Require every removal to be justified by an addition.
                    used = {
                        b
                        for l in adds
                        for b in removable_for[l]
                    }
                    if used != removed_set:
                        continue
                    key = (frozenset(adds), frozenset(removed_set))
                    moves[key] = TwixtMove(cell, frozenset(adds), frozenset(removed_set))
        return sorted(moves.values(), key=str)

    def legal_moves(self) -> list[TwixtMove]:
        if self.outcome().is_terminal:
            raise ContractViolation("legal_moves on terminal twixt position")
        player = self.to_move
        out = []
        for cell in self.board.cells:
            if cell in self.pegs or not self.allowed_cell(cell, player):
                continue
            out.extend(self.moves_for_placement(cell, player))
        return out

    def has_move(self, player: Player) -> bool:
        return any(
            cell not in self.pegs and self.allowed_cell(cell, player)
            for cell in self.board.cells
        )

    def successors(self) -> list[tuple[object, "TwixtPosition"]]:
        """Solver hook; a mover with no placement left skips the turn."""
        moves = self.legal_moves()
        if moves:
            return [(m, self.apply(m)) for m in moves]
        return [("skip", replace(self, to_move=self.to_move.opponent))]

    # -- outcome ---------------------------------------------------------------

    def _linked_components(self, player: Player) -> list[set[Cell]]:
        own = {c for c, p in self.pegs.items() if p is player}
        adj: dict[Cell, list[Cell]] = {c: [] for c in own}
        for a, b in self.links:
            if self.pegs[a] is player:
                adj[a].append(b)
                adj[b].append(a)
        comps = []
        seen: set[Cell] = set()
        for cell in own:
            if cell in seen:
                continue
            comp = {cell}
            stack = [cell]
            while stack:
                cur = stack.pop()
                for nb in adj[cur]:
                    if nb not in comp:
                        comp.add(nb)
                        stack.append(nb)
            seen |= comp
            comps.append(comp)
        return comps

    def _connects(self, player: Player) -> bool:
        if player is Player.FIRST:
            lo = lambda c: c[1] == 0
            hi = lambda c: c[1] == self.board.height - 1
        else:
            lo = lambda c: c[0] == 0
            hi = lambda c: c[0] == self.board.width - 1
        for comp in self._linked_components(player):
            if any(lo(c) for c in comp) and any(hi(c) for c in comp):
                return True
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
        if not self.has_move(Player.FIRST) and not self.has_move(Player.SECOND):
            return Outcome.DRAW
        return Outcome.ONGOING

    def validate(self) -> list[str]:
        """Invariant audit: link endpoints, knight spacing, crossing law, borders."""
        problems = []
        for a, b in sorted(self.links):
            pa, pb = self.pegs.get(a), self.pegs.get(b)
            if pa is None or pa is not pb:
                problems.append(f"link {a}-{b} endpoints not same-color pegs")
            if (b[0] - a[0], b[1] - a[1]) not in KNIGHT_DELTAS:
                problems.append(f"link {a}-{b} not a knight move")
        link_list = sorted(self.links)
        for i, la in enumerate(link_list):
            for lb in link_list[i + 1:]:
                if self.variant == PP and self.pegs.get(la[0]) is self.pegs.get(lb[0]):
                    continue
                if links_cross(la, lb):
                    problems.append(f"links cross: {la} x {lb}")
        for cell, player in sorted(self.pegs.items()):
            if not self.allowed_cell(cell, player):
                problems.append(f"border violation {player.value} at {cell_name(cell)}")
        return problems

    def key(self):
        return (
            "twixt",
            self.board.width,
            self.variant,
            frozenset(self.pegs.items()),
            self.links,
            self.to_move,
        )


def _maximal_noncrossing(cands: list[Link]) -> list[tuple[Link, ...]]:
    """Maximal pairwise-non-crossing subsets of the candidate links."""
    if not cands:
        return [()]
    cands = sorted(cands)
    conflict = {
        (a, b)
        for a, b in itertools.combinations(cands, 2)
        if links_cross(a, b)
    }
    if not conflict:
        return [tuple(cands)]
    sets = []
    for mask in range(1 << len(cands)):
        chosen = [c for i, c in enumerate(cands) if mask >> i & 1]
        ok = all(
            (a, b) not in conflict for a, b in itertools.combinations(chosen, 2)
        )
        if ok:
            sets.append(frozenset(chosen))
    maximal = [
        s for s in sets if not any(s < t for t in sets)
    ]
    return sorted(tuple(sorted(s)) for s in set(maximal))
