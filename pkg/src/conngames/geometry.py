"""Exact integer geometry for knight-move link segments.

All predicates use integer orientation tests only; no floating point.
"""
from __future__ import annotations

from .core import DomainError

KNIGHT_DELTAS = frozenset(
    (dx, dy) for dx in (-2, -1, 1, 2) for dy in (-2, -1, 1, 2) if abs(dx) != abs(dy)
)

Point = tuple[int, int]
Segment = tuple[Point, Point]


def is_knight_pair(a: Point, b: Point) -> bool:
    return (b[0] - a[0], b[1] - a[1]) in KNIGHT_DELTAS


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a)."""
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_open_segment(a: Point, b: Point, p: Point) -> bool:
    """p strictly between a and b on the segment (collinearity assumed)."""
    if p == a or p == b:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def links_cross(seg_a: Segment, seg_b: Segment) -> bool:
    """True iff the open segments intersect.

    Segments must join lattice points a knight's move apart.  Sharing an
    endpoint is not a crossing.
    """
    (a1, a2), (b1, b2) = seg_a, seg_b
    for p, q in ((a1, a2), (b1, b2)):
        if not is_knight_pair(p, q):
            raise DomainError(f"segment {p}-{q} is not a knight move")
    if seg_a == seg_b or (a1, a2) == (b2, b1):
        return False
    shared = {a1, a2} & {b1, b2}
    if shared:
        # Knight segments of equal length sharing an endpoint can only
        # overlap if identical, which was excluded above.
        return False
    d1 = orient(a1, a2, b1)
    d2 = orient(a1, a2, b2)
    d3 = orient(b1, b2, a1)
    d4 = orient(b1, b2, a2)
    if d1 != d2 and d3 != d4 and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return True
    # Collinear touch: an endpoint strictly inside the other open segment.
    if d1 == 0 and _on_open_segment(a1, a2, b1):
        return True
    if d2 == 0 and _on_open_segment(a1, a2, b2):
        return True
    if d3 == 0 and _on_open_segment(b1, b2, a1):
        return True
    if d4 == 0 and _on_open_segment(b1, b2, a2):
        return True
    return False
