"""Exact and greedy maximum-family search on chain-product lattices.

Exact search runs depth-first over the lattice points in canonical order,
growing families with strictly increasing point indices so every family is
visited at most once.  Feasibility of adding a point is incremental:
per-anchor meet/join value sets cover the triple conditions and global
unordered-pair value sets cover the quad conditions, so a candidate test
costs O(|S|).  A branch is pruned when current size plus remaining
candidates cannot beat the incumbent.

With thread_count > 1 the top level of the tree becomes one subproblem per
first point; workers share only the monotonically improving best size (and
the node counter), so best_size and proven_optimal are identical for every
thread count.  After a completed search the witness is normalized by a
single-threaded rerun that returns the canonically first family of the
optimal size; nodes_explored counts the search itself, not that rerun.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .bounds import applicable_bounds
from .lattice import (
    DEFAULT_ENUMERATION_CAP,
    ChainProductLattice,
    PointSet,
    enumerate_lattice,
)
from .verify import (
    RECOVERING,
    STRONGLY_CANCELLATIVE,
    _encode_set,
    normalize_property,
    satisfies,
)

EXACT = "exact"
GREEDY = "greedy"
MODES = (EXACT, GREEDY)

DEFAULT_NODE_BUDGET = 10**9

_FLUSH = 32  # nodes counted locally before syncing with the shared total


@dataclass(frozen=True)
class SearchConfig:
    """Parameters for one search run.

    node_budget bounds the number of visited families (None = unlimited);
    when it is exhausted the result carries proven_optimal = False.  A seed
    set must itself satisfy the property and serves as the initial
    incumbent.  progress, when set, is called with (nodes, best_size) about
    every progress_interval nodes.
    """

    lattice: ChainProductLattice
    property_name: str
    mode: str = EXACT
    thread_count: int = 1
    node_budget: Optional[int] = DEFAULT_NODE_BUDGET
    seed_set: Optional[PointSet] = None
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    progress_interval: int = 0
    progress: Optional[Callable[[int, int], None]] = None

    def __post_init__(self) -> None:
        normalize_property(self.property_name)
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.thread_count < 1:
            raise ValueError("thread_count must be >= 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be >= 1 or None")


@dataclass(frozen=True)
class SearchResult:
    best_set: PointSet
    best_size: int
    proven_optimal: bool
    nodes_explored: int

    def to_json_dict(self) -> dict:
        return {
            "bestSize": self.best_size,
            "provenOptimal": self.proven_optimal,
            "nodesExplored": self.nodes_explored,
            "bestSet": [list(p.coords) for p in self.best_set],
        }


class _State:
    """Incremental feasibility state for one growing family."""

    def __init__(self, prop: str, meet_op, join_op):
        self.prop = prop
        self.meet_op = meet_op
        self.join_op = join_op
        self.members: list = []
        if prop == RECOVERING:
            # pair injectivity subsumes the anchored (triple) conditions
            self.pair_meets: set = set()
            self.pair_joins: set = set()
        else:
            self.meet_sets: list[set] = []
            self.join_sets: Optional[list[set]] = (
                [] if prop == STRONGLY_CANCELLATIVE else None
            )
        self._trail: list = []

    def try_push(self, val) -> bool:
        """Add val if the family stays feasible; no mutation on failure."""
        members = self.members
        meet_op = self.meet_op
        new_meets = [meet_op(val, b) for b in members]
        if len(set(new_meets)) != len(new_meets):
            return False
        if self.prop == RECOVERING:
            pair_meets = self.pair_meets
            if any(v in pair_meets for v in new_meets):
                return False
            join_op = self.join_op
            new_joins = [join_op(val, b) for b in members]
            pair_joins = self.pair_joins
            if len(set(new_joins)) != len(new_joins) or any(
                v in pair_joins for v in new_joins
            ):
                return False
            pair_meets.update(new_meets)
            pair_joins.update(new_joins)
            members.append(val)
            self._trail.append((new_meets, new_joins))
            return True
        for v, anchor_vals in zip(new_meets, self.meet_sets):
            if v in anchor_vals:
                return False
        new_joins = None
        if self.join_sets is not None:
            join_op = self.join_op
            new_joins = [join_op(val, b) for b in members]
            if len(set(new_joins)) != len(new_joins):
                return False
            for v, anchor_vals in zip(new_joins, self.join_sets):
                if v in anchor_vals:
                    return False
        for v, anchor_vals in zip(new_meets, self.meet_sets):
            anchor_vals.add(v)
        self.meet_sets.append(set(new_meets))
        if new_joins is not None:
            for v, anchor_vals in zip(new_joins, self.join_sets):
                anchor_vals.add(v)
            self.join_sets.append(set(new_joins))
        members.append(val)
        self._trail.append((new_meets, new_joins))
        return True

    def pop(self) -> None:
        new_meets, new_joins = self._trail.pop()
        self.members.pop()
        if self.prop == RECOVERING:
            for v in new_meets:
                self.pair_meets.remove(v)
            for v in new_joins:
                self.pair_joins.remove(v)
            return
        self.meet_sets.pop()
        for v, anchor_vals in zip(new_meets, self.meet_sets):
            anchor_vals.remove(v)
        if new_joins is not None:
            self.join_sets.pop()
            for v, anchor_vals in zip(new_joins, self.join_sets):
                anchor_vals.remove(v)


class _Shared:
    """State shared between workers: incumbent, node count, stop flag."""

    def __init__(self, best_size, best_indices, budget, progress_interval, progress):
        self.lock = threading.Lock()
        self.best_size = best_size
        self.best_indices = tuple(best_indices)
        self.nodes = 0
        self.budget = budget
        self.stopped = False
        self.progress_interval = progress_interval
        self.progress = progress
        self._next_report = progress_interval if progress_interval else None

    def offer(self, size: int, indices: list) -> None:
        with self.lock:
            if size > self.best_size:
                self.best_size = size
                self.best_indices = tuple(indices)

    def add_nodes(self, count: int) -> bool:
        fire = None
        with self.lock:
            self.nodes += count
            if self.budget is not None and self.nodes >= self.budget:
                self.stopped = True
            if self._next_report is not None and self.nodes >= self._next_report:
                self._next_report = self.nodes + self.progress_interval
                fire = (self.nodes, self.best_size)
            stopped = self.stopped
        if fire is not None and self.progress is not None:
            self.progress(*fire)
        return stopped


class _Worker:
    def __init__(self, vals, prop, meet_op, join_op, shared):
        self.vals = vals
        self.state = _State(prop, meet_op, join_op)
        self.chosen: list[int] = []
        self.shared = shared
        self.pending = 0

    def _tick(self) -> bool:
        self.pending += 1
        if self.pending >= _FLUSH:
            stopped = self.shared.add_nodes(self.pending)
            self.pending = 0
            return stopped
        return self.shared.stopped

    def flush(self) -> None:
        if self.pending:
            self.shared.add_nodes(self.pending)
            self.pending = 0

    def extend(self, start: int) -> None:
        shared = self.shared
        vals, state, chosen = self.vals, self.state, self.chosen
        n = len(vals)
        size = len(chosen)
        for c in range(start, n):
            if size + (n - c) <= shared.best_size:
                break  # even taking every remaining point only ties
            if shared.stopped:
                return
            if state.try_push(vals[c]):
                chosen.append(c)
                if size + 1 > shared.best_size:
                    shared.offer(size + 1, chosen)
                stop = self._tick()
                if not stop:
                    self.extend(c + 1)
                state.pop()
                chosen.pop()
                if stop:
                    return

    def run_branch(self, c: int) -> None:
        """One top-level subproblem: families whose first point index is c."""
        shared = self.shared
        n = len(self.vals)
        if n - c <= shared.best_size or shared.stopped:
            self.flush()
            return
        if self.state.try_push(self.vals[c]):
            self.chosen.append(c)
            if shared.best_size < 1:
                shared.offer(1, self.chosen)
            if not self._tick():
                self.extend(c + 1)
            self.state.pop()
            self.chosen.pop()
        self.flush()


def _seed_indices(config: SearchConfig, points) -> tuple[int, ...]:
    if config.seed_set is None:
        return ()
    seed = config.seed_set
    if seed.lattice != config.lattice:
        raise ValueError("seed set lives on a different lattice")
    if not satisfies(seed, config.property_name):
        raise ValueError("seed set does not satisfy the property")
    index_of = {p: i for i, p in enumerate(points)}
    return tuple(sorted(index_of[p] for p in seed.points))


def _encoded(lattice: ChainProductLattice, points):
    return _encode_set(PointSet(lattice, tuple(points)))


def _first_of_size(vals, prop, meet_op, join_op, target: int):
    """Canonically first family of exactly `target` points, or None."""
    n = len(vals)
    state = _State(prop, meet_op, join_op)
    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == target:
            return True
        size = len(chosen)
        for c in range(start, n):
            if size + (n - c) < target:
                break
            if state.try_push(vals[c]):
                chosen.append(c)
                if extend(c + 1):
                    return True
                state.pop()
                chosen.pop()
        return False

    return tuple(chosen) if extend(0) else None


def exact_max(config: SearchConfig) -> SearchResult:
    """Maximum family satisfying the property, by branch and bound.

    proven_optimal is True exactly when the search ran to completion within
    the node budget; the returned witness is then the canonically first
    family of maximum size.  The witness is re-verified before returning.
    """
    prop = normalize_property(config.property_name)
    points = enumerate_lattice(config.lattice, config.enumeration_cap)
    vals, meet_op, join_op, _ = _encoded(config.lattice, points)
    seed = _seed_indices(config, points)
    shared = _Shared(
        len(seed), seed, config.node_budget, config.progress_interval, config.progress
    )
    n = len(points)

    if config.thread_count == 1:
        worker = _Worker(vals, prop, meet_op, join_op, shared)
        worker.extend(0)
        worker.flush()
    else:
        def branch(c: int) -> None:
            _Worker(vals, prop, meet_op, join_op, shared).run_branch(c)

        with ThreadPoolExecutor(max_workers=config.thread_count) as pool:
            list(pool.map(branch, range(n)))

    proven = not shared.stopped
    best_indices = shared.best_indices
    if proven and shared.best_size > 0:
        canon = _first_of_size(vals, prop, meet_op, join_op, shared.best_size)
        if canon is None:  # pragma: no cover - the incumbent proves one exists
            raise RuntimeError("internal error: lost the optimal family")
        best_indices = canon

    best_set = PointSet(
        config.lattice, tuple(points[i] for i in sorted(best_indices))
    )
    if not satisfies(best_set, prop):  # pragma: no cover - mandatory re-verification
        raise RuntimeError("internal error: search produced an invalid family")
    return SearchResult(best_set, len(best_indices), proven, shared.nodes)


def greedy(config: SearchConfig) -> SearchResult:
    """Scan points in canonical order, keeping each one that preserves the
    property.  proven_optimal is True only when the result size meets an
    applicable upper bound, which certifies it as a true maximum."""
    prop = normalize_property(config.property_name)
    points = enumerate_lattice(config.lattice, config.enumeration_cap)
    vals, meet_op, join_op, _ = _encoded(config.lattice, points)
    seed = set(_seed_indices(config, points))

    state = _State(prop, meet_op, join_op)
    chosen: list[int] = []
    for i in sorted(seed):
        if not state.try_push(vals[i]):  # pragma: no cover - seed was verified
            raise RuntimeError("internal error: verified seed failed to load")
        chosen.append(i)
    nodes = 0
    for c in range(len(points)):
        if c in seed:
            continue
        nodes += 1
        if state.try_push(vals[c]):
            chosen.append(c)

    best_set = PointSet(config.lattice, tuple(points[i] for i in sorted(chosen)))
    if not satisfies(best_set, prop):  # pragma: no cover - mandatory re-verification
        raise RuntimeError("internal error: search produced an invalid family")
    return SearchResult(best_set, len(chosen), _proved_by_bound(config, len(chosen)), nodes)


def _proved_by_bound(config: SearchConfig, size: int) -> bool:
    # size + 1 > bound means no strictly larger family can exist
    reports = applicable_bounds(config.lattice, config.property_name)
    return any(size + 1 > r.upper_bound for r in reports)


def run_search(config: SearchConfig) -> SearchResult:
    return exact_max(config) if config.mode == EXACT else greedy(config)


def exhaustive_max(
    lattice: ChainProductLattice, prop: str, max_points: int = 20
) -> SearchResult:
    """Brute-force oracle: test every subset of the lattice with the
    verifier, no pruning of any kind.  Exponential in the point count and
    guarded accordingly; meant to cross-check exact_max at desk scale.
    """
    prop = normalize_property(prop)
    points = enumerate_lattice(lattice)
    n = len(points)
    if n > max_points:
        raise ValueError(
            f"exhaustive oracle limited to {max_points} points, lattice has {n}"
        )
    best: Optional[PointSet] = None
    best_size = -1
    for mask in range(1 << n):
        members = tuple(points[i] for i in range(n) if (mask >> i) & 1)
        candidate = PointSet(lattice, members)
        if satisfies(candidate, prop) and len(members) > best_size:
            best = candidate
            best_size = len(members)
    assert best is not None
    return SearchResult(best, best_size, True, 1 << n)
