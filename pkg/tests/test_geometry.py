from __future__ import annotations

import itertools
import random

import pytest

from conngames.core import DomainError
from conngames.geometry import is_knight_pair, links_cross

from .oracles import segments_cross_float


def test_spec_examples():
    assert links_cross(((0, 0), (1, 2)), ((0, 2), (2, 1))) is True
    assert links_cross(((0, 0), (1, 2)), ((0, 0), (2, 1))) is False
    assert links_cross(((0, 0), (1, 2)), ((5, 5), (6, 7))) is False


def test_non_knight_segment_rejected():
    with pytest.raises(DomainError):
        links_cross(((0, 0), (1, 1)), ((0, 2), (2, 1)))


def test_identical_and_reversed_segments_do_not_cross():
    seg = ((0, 0), (2, 1))
    assert links_cross(seg, seg) is False
    assert links_cross(seg, ((2, 1), (0, 0))) is False


def test_against_sampling_oracle_exhaustive_small_window():
    pts = [(x, y) for x in range(3) for y in range(3)]
    segs = [
        (a, b)
        for a, b in itertools.combinations(pts, 2)
        if is_knight_pair(a, b)
    ]
    for sa, sb in itertools.combinations(segs, 2):
        assert links_cross(sa, sb) == segments_cross_float(sa, sb), (sa, sb)


def test_against_sampling_oracle_random():
    rng = random.Random(20240817)
    deltas = [
        (dx, dy)
        for dx in (-2, -1, 1, 2)
        for dy in (-2, -1, 1, 2)
        if abs(dx) != abs(dy)
    ]
    for _ in range(300):
        ax, ay = rng.randrange(6), rng.randrange(6)
        dx, dy = rng.choice(deltas)
        bx, by = rng.randrange(6), rng.randrange(6)
        ex, ey = rng.choice(deltas)
        sa = ((ax, ay), (ax + dx, ay + dy))
        sb = ((bx, by), (bx + ex, by + ey))
        if sa == sb or sa == (sb[1], sb[0]):
            continue
        assert links_cross(sa, sb) == segments_cross_float(sa, sb), (sa, sb)


def test_symmetry():
    rng = random.Random(7)
    deltas = [
        (dx, dy)
        for dx in (-2, -1, 1, 2)
        for dy in (-2, -1, 1, 2)
        if abs(dx) != abs(dy)
    ]
    for _ in range(200):
        ax, ay = rng.randrange(5), rng.randrange(5)
        bx, by = rng.randrange(5), rng.randrange(5)
        sa = ((ax, ay), (ax + rng.choice(deltas)[0], ay + rng.choice(deltas)[1]))
        sa = ((ax, ay), (ax + 1, ay + 2))
        dx, dy = rng.choice(deltas)
        sb = ((bx, by), (bx + dx, by + dy))
        assert links_cross(sa, sb) == links_cross(sb, sa)
