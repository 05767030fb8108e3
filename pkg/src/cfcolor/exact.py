"""Exact conflict-free coloring of interval subhypergraphs.

The decision procedure scans vertices left to right and, for each positive
color c, remembers the closest (p_c) and second-closest (s_c) earlier
vertices with that color. An interval [j, t] has color c exactly once iff
s_c < j <= p_c, so the check for intervals ending at t only needs the pairs.
Guessing the color at each vertex is simulated by a layered frontier of
reachable pair-vectors.

Two reductions keep the frontier small, neither changes the answer:

* positive colors are interchangeable, so each vector is stored sorted;
* a position x only matters through which future left endpoints j satisfy
  x < j, so x is replaced by the largest future left endpoint <= x (or 0).
"""

from __future__ import annotations

import math
import os
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import Coloring, Instance

Pair = tuple[int, int]
State = tuple[Pair, ...]

BRUTE_BUDGET_ENV = "CFCOLOR_BRUTE_BUDGET"
DEFAULT_BRUTE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DecisionState:
    """Per positive color c, the pair (p_c, s_c); 0 means no such vertex."""

    pairs: State

    def __post_init__(self) -> None:
        for p, s in self.pairs:
            if not (s < p or p == s == 0):
                raise ValueError(f"need s_c < p_c or both zero, got p={p}, s={s}")

    @classmethod
    def empty(cls, k: int) -> DecisionState:
        return cls(((0, 0),) * k)

    def assign(self, color: int, t: int) -> DecisionState:
        if color == 0:
            return self
        pairs = list(self.pairs)
        p, _ = pairs[color - 1]
        pairs[color - 1] = (t, p)
        return DecisionState(tuple(pairs))


def interval_has_unique_color(state: DecisionState | State, j: int) -> bool:
    """Some positive color occurs exactly once in [j, t]."""
    pairs = state.pairs if isinstance(state, DecisionState) else state
    return any(s < j <= p for p, s in pairs)


@dataclass
class SearchStats:
    k: int = 0
    frontier_sizes: list[int] = field(default_factory=list)

    @property
    def max_frontier(self) -> int:
        return max(self.frontier_sizes, default=0)

    def records(self) -> list[dict]:
        return [{"k": self.k, "t": t, "frontier": size} for t, size in enumerate(self.frontier_sizes)]


class _Layout:
    """Per-vertex interval lists and position compression tables."""

    def __init__(self, instance: Instance):
        n = instance.n
        self.n = n
        ends: list[list[int]] = [[] for _ in range(n + 1)]
        for iv in instance.intervals:
            ends[iv.high].append(iv.low)
        # checked largest j first: short intervals are the usual failures
        self.lows_ending_at = [sorted(js, reverse=True) for js in ends]
        # left endpoints of intervals ending strictly after t
        self._future: list[list[int]] = [[] for _ in range(n + 1)]
        live: set[int] = set()
        for t in range(n, -1, -1):
            self._future[t] = sorted(live)
            if t >= 1:
                live.update(ends[t])

    def compressor(self, t: int) -> list[int]:
        """Table x -> largest future left endpoint <= x (0 if none), x in 0..t."""
        future = self._future[t]
        table = [0] * (t + 1)
        for x in range(1, t + 1):
            i = bisect_right(future, x)
            table[x] = future[i - 1] if i else 0
        return table


def _search(instance: Instance, k: int, stats: SearchStats | None, keep_parents: bool):
    layout = _Layout(instance)
    start: State = ((0, 0),) * k
    frontier: set[State] | dict[State, tuple[State, int]] = {start: (start, -1)} if keep_parents else {start}
    layers = []
    if stats is not None:
        stats.k = k
        stats.frontier_sizes = [1]
    for t in range(1, layout.n + 1):
        lows = layout.lows_ending_at[t]
        rep = layout.compressor(t)
        nxt: dict[State, tuple[State, int]] = {}
        for state in frontier:
            prev = None
            for slot in range(-1, k):
                if slot == -1:
                    cand = state
                else:
                    pair = state[slot]
                    if pair == prev:
                        continue
                    prev = pair
                    cand = state[:slot] + ((t, pair[0]),) + state[slot + 1 :]
                if lows and not all(any(s < j <= p for p, s in cand) for j in lows):
                    continue
                child = tuple(sorted((rep[p], rep[s]) for p, s in cand))
                if child not in nxt:
                    nxt[child] = (state, slot)
        if keep_parents:
            layers.append(nxt)
            frontier = nxt
        else:
            frontier = set(nxt)
        if stats is not None:
            stats.frontier_sizes.append(len(frontier))
        if not frontier:
            return False, layers
    return True, layers


def decide_cf(instance: Instance, k: int, stats: SearchStats | None = None) -> bool:
    """Whether the instance has a conflict-free coloring with colors 0..k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    found, _ = _search(instance, k, stats, keep_parents=False)
    return found


def solve_cf(instance: Instance, k: int, stats: SearchStats | None = None) -> Coloring | None:
    """A conflict-free coloring with colors 0..k, or None if none exists.

    Colors are numbered in order of first use.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    found, layers = _search(instance, k, stats, keep_parents=True)
    if not found:
        return None
    # walk parent pointers back from any surviving state
    slots = []
    state = next(iter(layers[-1])) if layers else None
    for layer in reversed(layers):
        parent, slot = layer[state]
        slots.append(slot)
        state = parent
    slots.reverse()
    return _replay(instance, k, slots)


def _replay(instance: Instance, k: int, slots: Sequence[int]) -> Coloring:
    layout = _Layout(instance)
    # entries: [p, s, label] aligned with the canonical order of the search
    entries: list[list] = [[0, 0, None] for _ in range(k)]
    colors = [0] * instance.n
    fresh = 1
    for t, slot in enumerate(slots, start=1):
        if slot >= 0:
            entry = entries[slot]
            if entry[2] is None:
                entry[2] = fresh
                fresh += 1
            entry[0], entry[1] = t, entry[0]
            colors[t - 1] = entry[2]
        rep = layout.compressor(t)
        for entry in entries:
            entry[0], entry[1] = rep[entry[0]], rep[entry[1]]
        entries.sort(key=lambda e: (e[0], e[1]))
    return Coloring(colors)


def chi_upper_bound(n: int) -> int:
    return math.floor(math.log2(n)) + 1


def chi_cf(instance: Instance, stats: list[SearchStats] | None = None) -> int:
    """Least k with a conflict-free coloring in colors 0..k."""
    k = 0
    while True:
        st = SearchStats() if stats is not None else None
        ok = decide_cf(instance, k, st)
        if stats is not None:
            stats.append(st)
        if ok:
            return k
        k += 1


def chi_cf_witness(instance: Instance) -> tuple[int, Coloring]:
    k = chi_cf(instance)
    coloring = solve_cf(instance, k)
    assert coloring is not None
    return k, coloring


# -- brute force oracle ------------------------------------------------------


def brute_budget() -> int:
    raw = os.environ.get(BRUTE_BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_BUDGET


def brute_force_decide(instance: Instance, k: int, budget: int | None = None) -> bool:
    """Exhaustive search over all (k+1)^n colorings."""
    return brute_force_witness(instance, k, budget) is not None


def brute_force_witness(instance: Instance, k: int, budget: int | None = None) -> Coloring | None:
    n = instance.n
    if k < 0:
        raise ValueError("k must be non-negative")
    budget = brute_budget() if budget is None else budget
    total = (k + 1) ** n
    if total > budget:
        raise BudgetExceeded(f"(k+1)^n = {total} exceeds brute-force budget {budget}")
    if not instance.intervals:
        return Coloring([0] * n)
    if k == 0:
        return None
    ivs = sorted(instance.intervals)
    universe = n * (n + 1) // 2
    if universe <= 64 and total <= 1 << 20:
        table = _satisfied_table(n, k)
        need = 0
        for iv in ivs:
            need |= 1 << _interval_rank(n, iv.low, iv.high)
        hits = np.flatnonzero((table & np.uint64(need)) == np.uint64(need))
        return Coloring(_digits(int(hits[0]), n, k + 1)) if hits.size else None
    return _stream(n, k, [(iv.low, iv.high) for iv in ivs])


def _interval_rank(n: int, s: int, t: int) -> int:
    return (s - 1) * n - (s - 1) * (s - 2) // 2 + (t - s)


def _digits(index: int, n: int, base: int) -> list[int]:
    out = []
    for _ in range(n):
        index, d = divmod(index, base)
        out.append(d)
    return out


def _all_colorings(n: int, base: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = np.empty((idx.size, n), dtype=np.int8)
    for v in range(n):
        idx, cols[:, v] = np.divmod(idx, base)
    return cols


def _unique_mask(cols: np.ndarray, s: int, t: int, k: int) -> np.ndarray:
    sub = cols[:, s - 1 : t]
    ok = np.zeros(cols.shape[0], dtype=bool)
    for c in range(1, k + 1):
        ok |= (sub == c).sum(axis=1) == 1
    return ok


@lru_cache(maxsize=32)
def _satisfied_table(n: int, k: int) -> np.ndarray:
    """For every coloring (in base-(k+1) order), the bitmask of all intervals of
    H_n in which some positive color is unique."""
    cols = _all_colorings(n, k + 1, 0, (k + 1) ** n)
    table = np.zeros(cols.shape[0], dtype=np.uint64)
    for s in range(1, n + 1):
        for t in range(s, n + 1):
            bit = np.uint64(1 << _interval_rank(n, s, t))
            table[_unique_mask(cols, s, t, k)] |= bit
    table.flags.writeable = False
    return table


def _stream(n: int, k: int, ivs: list[tuple[int, int]], chunk: int = 1 << 18) -> Coloring | None:
    total = (k + 1) ** n
    for start in range(0, total, chunk):
        cols = _all_colorings(n, k + 1, start, min(total, start + chunk))
        alive = np.ones(cols.shape[0], dtype=bool)
        for s, t in ivs:
            alive &= _unique_mask(cols, s, t, k)
            if not alive.any():
                break
        else:
            hit = int(np.flatnonzero(alive)[0])
            return Coloring(cols[hit].tolist())
    return None


def brute_force_chi(instance: Instance, budget: int | None = None) -> int:
    k = 0
    while not brute_force_decide(instance, k, budget):
        k += 1
    return k

