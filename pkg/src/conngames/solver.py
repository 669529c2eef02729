"""Exact solving: full-value search, depth-bounded win search, budgets.

The full solver is a memoized three-valued negamax (win > draw > loss from
the mover's perspective) with a winning-child cutoff.  Every supported
position type is a frozen value with ``outcome()``, ``key()``, ``to_move``
and either ``distinct_successors()``/``successors()`` or
``legal_moves()``/``apply()``.

All stone games strictly add material per non-pass move and geography
grows its visited set, so the state graph is acyclic and plain memoization
is exact.  A node budget turns unfinished searches into UNRESOLVED rather
than a wrong answer.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace as _dc_replace

from .core import Outcome, Player, win_for

DEFAULT_NODE_BUDGET = 10**8


class _Unresolved:
    def __repr__(self):
        return "Unresolved"

    def __bool__(self):
        raise TypeError("Unresolved result used as a boolean")


UNRESOLVED = _Unresolved()


class BudgetExceeded(Exception):
    pass


@dataclass
class SolveResult:
    value: object  # Outcome or UNRESOLVED
    principal_line: list
    nodes: int

    @property
    def resolved(self) -> bool:
        return self.value is not UNRESOLVED


def successors(position, region=None):
    """(move, child) pairs, respecting an optional cell/vertex region mask."""
    if region is not None:
        return _region_successors(position, region)
    if hasattr(position, "distinct_successors"):
        return position.distinct_successors()
    if hasattr(position, "successors"):
        return position.successors()
    return [(m, position.apply(m)) for m in position.legal_moves()]


def _move_cells(move):
    """Cells a move touches, for region filtering."""
    from .slither import SlitherMove
    from .twixt import TwixtMove

    if isinstance(move, SlitherMove):
        if move.is_pass:
            return ()
        cells = [move.placement]
        if move.relocation:
            cells.extend(move.relocation)
        return tuple(cells)
    if isinstance(move, TwixtMove):
        return (move.placement,)
    return (move,)


def _region_successors(position, region):
    from .slither import PASS, SlitherPosition

    if isinstance(position, SlitherPosition):
        real = [
            m
            for m in position.real_moves()
            if all(c in region for c in _move_cells(m))
        ]
        if not real:
            # Region-restricted pass: the mover has nothing inside the mask.
            child = _dc_replace(
                position,
                to_move=position.to_move.opponent,
                consecutive_passes=position.consecutive_passes + 1,
            )
            return [(PASS, child)]
        seen = set()
        out = []
        for m in real:
            child = position.apply(m)
            k = child.key()
            if k not in seen:
                seen.add(k)
                out.append((m, child))
        return out

    pairs = successors(position)
    filtered = [
        (m, c) for m, c in pairs if all(cell in region for cell in _move_cells(m))
    ]
    if filtered or not pairs:
        return filtered
    # Mask exhausted for the mover: skip the turn rather than invent a loss,
    # unless the opponent is equally stuck (dead region).
    flipped = _dc_replace(position, to_move=position.to_move.opponent)
    opp = [
        (m, c)
        for m, c in successors(flipped)
        if all(cell in region for cell in _move_cells(m))
    ]
    if not opp:
        return []
    return [("skip", flipped)]


class Solver:
    """One search instance owning its transposition tables."""

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET, region=None,
                 order_hint=None, outcome_fn=None):
        self.node_budget = node_budget
        self.region = region
        self.order_hint = order_hint
        self.outcome_fn = outcome_fn or (lambda pos: pos.outcome())
        self.nodes = 0
        self._table: dict = {}
        self._bounded: dict = {}

    # -- full-value search -------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded

    def _children(self, position):
        pairs = successors(position, self.region)
        if self.order_hint is not None:
            pairs = self.order_hint(position, pairs)
        return pairs

    def _negamax(self, position) -> int:
        key = position.key()
        hit = self._table.get(key)
        if hit is not None:
            return hit
        self._tick()
        out = self.outcome_fn(position)
        if out.is_terminal:
            value = _terminal_value(out, position.to_move)
        else:
            value = -2
            for _, child in self._children(position):
                value = max(value, -self._negamax(child))
                if value == 1:
                    break
            if value == -2:
                # Ongoing position with no successors only happens when a
                # region mask is exhausted for both players: nobody can ever
                # complete anything inside the mask, a dead draw.  Geography
                # ends via outcome() before reaching this branch.
                value = 0
        self._table[key] = value
        return value

    def solve(self, position) -> SolveResult:
        self.nodes = 0
        try:
            value = self._negamax(position)
        except BudgetExceeded:
            return SolveResult(UNRESOLVED, [], self.nodes)
        line = self._principal_line(position)
        return SolveResult(_value_to_outcome(value, position.to_move), line, self.nodes)

    def _principal_line(self, position) -> list:
        line = []
        pos = position
        guard = 0
        while not self.outcome_fn(pos).is_terminal:
            guard += 1
            if guard > 10000:
                break
            want = self._table.get(pos.key())
            if want is None:
                break
            nxt = None
            for move, child in self._children(pos):
                if -self._negamax(child) == want:
                    nxt = (move, child)
                    break
            if nxt is None:
                break
            line.append(nxt[0])
            pos = nxt[1]
        return line

    # -- depth-bounded win search -------------------------------------------

    def _forced_win(self, position, target: Player, depth: int) -> bool:
        out = self.outcome_fn(position)
        if out.is_terminal:
            return out == win_for(target)
        if depth == 0:
            return False
        key = (position.key(), depth, target)
        hit = self._bounded.get(key)
        if hit is not None:
            return hit
        self._tick()
        children = self._children(position)
        if not children:
            # Dead region: no way left to force anything.
            value = False
        elif position.to_move is target:
            value = any(
                self._forced_win(child, target, depth - 1) for _, child in children
            )
        else:
            value = all(
                self._forced_win(child, target, depth - 1) for _, child in children
            )
        self._bounded[key] = value
        return value

    def short_solve(self, position, k: int):
        """True iff the side to move forces a win within k plies."""
        if k < 0:
            raise ValueError("ply budget must be >= 0")
        self.nodes = 0
        try:
            return self._forced_win(position, position.to_move, k)
        except BudgetExceeded:
            return UNRESOLVED

    def forced_win_within(self, position, target: Player, k: int):
        """True iff target forces a win within k plies, whoever moves."""
        self.nodes = 0
        try:
            return self._forced_win(position, target, k)
        except BudgetExceeded:
            return UNRESOLVED


def _terminal_value(out: Outcome, mover: Player) -> int:
    if out is Outcome.DRAW:
        return 0
    return 1 if out == win_for(mover) else -1


def _value_to_outcome(value: int, mover: Player):
    if value == 0:
        return Outcome.DRAW
    if value == 1:
        return win_for(mover)
    return win_for(mover.opponent)


def solve(position, node_budget: int = DEFAULT_NODE_BUDGET, region=None,
          order_hint=None, outcome_fn=None) -> SolveResult:
    return Solver(node_budget, region, order_hint, outcome_fn).solve(position)


def short_solve(position, k: int, node_budget: int = DEFAULT_NODE_BUDGET,
                region=None, order_hint=None, outcome_fn=None):
    return Solver(node_budget, region, order_hint, outcome_fn).short_solve(position, k)
