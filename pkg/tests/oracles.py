"""Naive definitional implementations used as independent test oracles.

Everything here quantifies directly over ordered tuples of distinct points,
exactly as the properties are defined, with no hashing or incremental
shortcuts.  Deliberately slow; keep the inputs small.
"""

from __future__ import annotations

import itertools
import random

from latsets import ChainProductLattice, Point, PointSet, enumerate_lattice


def _meet(a: Point, b: Point) -> tuple:
    return tuple(map(min, a.coords, b.coords))


def _join(a: Point, b: Point) -> tuple:
    return tuple(map(max, a.coords, b.coords))


def naive_is_cancellative(s: PointSet) -> bool:
    for a1, a2, a3 in itertools.permutations(s.points, 3):
        if _meet(a1, a2) == _meet(a1, a3):
            return False
    return True


def naive_is_strongly_cancellative(s: PointSet) -> bool:
    for a1, a2, a3 in itertools.permutations(s.points, 3):
        if _meet(a1, a2) == _meet(a1, a3):
            return False
        if _join(a1, a2) == _join(a1, a3):
            return False
    return True


def naive_is_recovering(s: PointSet) -> bool:
    if not naive_is_strongly_cancellative(s):
        return False
    for a1, a2, a3, a4 in itertools.permutations(s.points, 4):
        if _meet(a1, a2) == _meet(a3, a4):
            return False
        if _join(a1, a2) == _join(a3, a4):
            return False
    return True


NAIVE_CHECKS = {
    "cancellative": naive_is_cancellative,
    "strongly_cancellative": naive_is_strongly_cancellative,
    "recovering": naive_is_recovering,
}


def random_lattice(rng: random.Random, max_k: int = 4, max_l: int = 4) -> ChainProductLattice:
    k = rng.randint(1, max_k)
    return ChainProductLattice(tuple(rng.randint(1, max_l) for _ in range(k)))


def random_point_set(
    rng: random.Random,
    lattice: ChainProductLattice | None = None,
    max_size: int = 7,
) -> PointSet:
    if lattice is None:
        lattice = random_lattice(rng)
    points = enumerate_lattice(lattice)
    size = rng.randint(0, min(max_size, len(points)))
    return PointSet(lattice, tuple(rng.sample(points, size)))
