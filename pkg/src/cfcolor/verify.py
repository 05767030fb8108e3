"""Conflict-free checks and J_k configuration recognition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .core import Instance, Interval, as_intervals


class LengthMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Valid:
    def __bool__(self) -> bool:
        return True

    def __str__(self) -> str:
        return "VALID"


@dataclass(frozen=True)
class Violation:
    interval: Interval

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"VIOLATION {self.interval.low} {self.interval.high}"


def has_unique_color(coloring: Sequence[int], iv: Interval) -> bool:
    counts: dict[int, int] = {}
    for c in coloring[iv.low - 1 : iv.high]:
        if c > 0:
            counts[c] = counts.get(c, 0) + 1
    return 1 in counts.values()


def is_conflict_free(instance: Instance, coloring: Sequence[int]) -> Valid | Violation:
    """``Valid()`` or the smallest interval (by low, then high) with no unique positive color."""
    if len(coloring) != instance.n:
        raise LengthMismatch(f"coloring has {len(coloring)} entries, instance has n={instance.n}")
    for iv in instance.sorted_intervals():
        if not has_unique_color(coloring, iv):
            return Violation(iv)
    return Valid()


def contains_configuration(instance: Instance, config: Iterable[Interval]) -> bool:
    return as_intervals(config) <= instance.intervals


def is_jk_configuration(intervals: Iterable, k: int) -> bool:
    """Whether ``intervals`` is exactly a J_k configuration.

    J_1 is any single interval. J_k is a cover interval containing the rest,
    which split into two cross-disjoint J_{k-1} families.
    """
    if k < 1:
        return False
    return _is_jk(tuple(sorted(as_intervals(intervals))), k)


@lru_cache(maxsize=65536)
def _is_jk(ivs: tuple[Interval, ...], k: int) -> bool:
    if k == 1:
        return len(ivs) == 1
    # a J_k family has at least 2^k - 1 members
    if len(ivs) < (1 << k) - 1:
        return False
    for i, cover in enumerate(ivs):
        rest = ivs[:i] + ivs[i + 1 :]
        if not all(cover.contains(iv) for iv in rest):
            continue
        for left, right in _two_block_splits(rest):
            if _is_jk(left, k - 1) and _is_jk(right, k - 1):
                return True
    return False


def _two_block_splits(ivs: tuple[Interval, ...]):
    """All ways to split ``ivs`` into two non-empty cross-disjoint groups.

    Groups are unions of connected components of the overlap graph.
    """
    comps = _overlap_components(ivs)
    if len(comps) < 2:
        return
    first, others = comps[0], comps[1:]
    # the J test is symmetric in the two groups, so the first component stays left
    for r in range(len(others)):
        for picked in combinations(range(len(others)), r):
            left = list(first)
            right = []
            for idx, comp in enumerate(others):
                (left if idx in picked else right).extend(comp)
            yield tuple(sorted(left)), tuple(sorted(right))


def _overlap_components(ivs: tuple[Interval, ...]) -> list[list[Interval]]:
    # intervals sorted by low: a sweep over the running max high gives components
    comps: list[list[Interval]] = []
    reach = 0
    for iv in sorted(ivs):
        if comps and iv.low <= reach:
            comps[-1].append(iv)
            reach = max(reach, iv.high)
        else:
            comps.append([iv])
            reach = iv.high
    return comps
