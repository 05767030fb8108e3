"""Iterated minimal hitting sets on interval hypergraphs.

Each round works in a rank-compressed vertex space ``1..|V|``: the greedy
activity-selection scan picks a maximal set ``F`` of pairwise disjoint
intervals, the right endpoints of ``F`` form the hitting set ``S``, every
vertex outside ``S`` gets the round's color, and the hyperedges that meet
``S`` at least twice are restricted to ``S`` for the next round.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import Coloring, Instance, Interval

log = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class Round:
    """One iteration of the while loop.

    Hyperedges, the independent set and the hitting set live in the round's
    rank space; ``vertex_set[r - 1]`` is the original vertex of rank r.
    """

    level: int
    vertex_set: tuple[int, ...]
    edge_pairs: tuple[Pair, ...]
    chosen_pairs: tuple[Pair, ...]
    hitting_set: tuple[int, ...]
    colored_with_level: tuple[int, ...]

    @cached_property
    def hyperedges(self) -> frozenset[Interval]:
        return frozenset(Interval(a, b) for a, b in self.edge_pairs)

    @cached_property
    def independent_set(self) -> frozenset[Interval]:
        return frozenset(Interval(a, b) for a, b in self.chosen_pairs)

    def original(self, rank: int) -> int:
        return self.vertex_set[rank - 1]

    def hitting_set_original(self) -> tuple[int, ...]:
        return tuple(self.vertex_set[r - 1] for r in self.hitting_set)

    def independent_set_original(self) -> list[tuple[int, int]]:
        return [(self.original(a), self.original(b)) for a, b in self.chosen_pairs]


@dataclass(frozen=True)
class AlgorithmTrace:
    rounds: tuple[Round, ...]
    final_color: int
    final_vertices: tuple[int, ...]

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    def to_dict(self) -> dict:
        return {
            "rounds": [
                {
                    "level": r.level,
                    "hyperedges": len(r.edge_pairs),
                    "independent_set": [list(p) for p in r.independent_set_original()],
                    "hitting_set": list(r.hitting_set_original()),
                    "colored": list(r.colored_with_level),
                }
                for r in self.rounds
            ],
            "final_color": self.final_color,
            "final_vertices": list(self.final_vertices),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def report(self) -> str:
        """Plain-text report, one block per round, original vertex indices."""
        out = []
        for r in self.rounds:
            out.append(f"round {r.level}: {len(r.edge_pairs)} hyperedges")
            out.append("  F: " + " ".join(f"[{a},{b}]" for a, b in r.independent_set_original()))
            out.append("  S: " + " ".join(map(str, r.hitting_set_original())))
            out.append(f"  colored {r.level}: " + " ".join(map(str, r.colored_with_level)))
        out.append(f"final color {self.final_color}: " + " ".join(map(str, self.final_vertices)))
        return "\n".join(out) + "\n"


def _scan(pairs: Sequence[Pair]) -> list[Pair]:
    """Activity selection over pairs already sorted by (high, -low)."""
    chosen = []
    last = 0
    for a, b in pairs:
        if a > last:
            chosen.append((a, b))
            last = b
    return chosen


def _sort_key(p: Pair) -> tuple[int, int]:
    return (p[1], -p[0])


def greedy_independent_set(instance: Instance | Iterable[Interval]) -> frozenset[Interval]:
    """Maximal disjoint subfamily chosen left to right by minimum right endpoint.

    Ties on the right endpoint go to the larger left endpoint.
    """
    intervals = instance.intervals if isinstance(instance, Instance) else instance
    pairs = sorted(((iv.low, iv.high) for iv in intervals), key=_sort_key)
    return frozenset(Interval(a, b) for a, b in _scan(pairs))


def hitting_set_from_independent(independent: Iterable[Interval]) -> tuple[int, ...]:
    return tuple(sorted(iv.high for iv in independent))


def _project(pairs: Sequence[Pair], hits: Sequence[int], size: int) -> list[Pair]:
    # below[x] = number of hits <= x, for x in 0..size
    below = [0] * (size + 1)
    for h in hits:
        below[h] = 1
    for x in range(1, size + 1):
        below[x] += below[x - 1]
    # order by (high, -low) survives rank compression, so duplicates stay adjacent
    out: list[Pair] = []
    last = None
    for a, b in pairs:
        lo, hi = below[a - 1], below[b]
        if hi - lo > 1:
            p = (lo + 1, hi)
            if p != last:
                out.append(p)
                last = p
    return out


def project_hyperedges(edges: Iterable[Interval], hits: Sequence[int]) -> frozenset[Interval]:
    """Restrict each edge to ``hits`` and keep those meeting it at least twice.

    Results are expressed in ranks of ``hits`` (1-based).
    """
    hits = sorted(hits)
    pairs = sorted(((iv.low, iv.high) for iv in edges), key=_sort_key)
    size = max([hits[-1] if hits else 0] + [b for _, b in pairs])
    return frozenset(Interval(a, b) for a, b in _project(pairs, hits, size))


def cf_color(instance: Instance) -> tuple[Coloring, AlgorithmTrace]:
    """Conflict-free coloring by iterated greedy hitting sets, with its trace."""
    n = instance.n
    colors = [0] * n
    vertices = list(range(1, n + 1))
    pairs = sorted(((iv.low, iv.high) for iv in instance.intervals), key=_sort_key)
    rounds = []
    level = 0
    while pairs:
        chosen = _scan(pairs)
        hits = [b for _, b in chosen]
        is_hit = [False] * (len(vertices) + 1)
        for h in hits:
            is_hit[h] = True
        colored = tuple(v for r, v in enumerate(vertices, start=1) if not is_hit[r])
        for v in colored:
            colors[v - 1] = level
        next_pairs = _project(pairs, hits, len(vertices))
        if len(next_pairs) >= len(pairs):
            raise AssertionError("hyperedge count failed to decrease")
        rounds.append(
            Round(
                level=level,
                vertex_set=tuple(vertices),
                edge_pairs=tuple(pairs),
                chosen_pairs=tuple(chosen),
                hitting_set=tuple(hits),
                colored_with_level=colored,
            )
        )
        vertices = [vertices[r - 1] for r in hits]
        pairs = next_pairs
        level += 1
    for v in vertices:
        colors[v - 1] = level
    bound = math.floor(math.log2(n)) + 1
    if level > bound:
        log.warning("cf_color used %d rounds on n=%d, above floor(log2 n)+1=%d", level, n, bound)
    trace = AlgorithmTrace(rounds=tuple(rounds), final_color=level, final_vertices=tuple(vertices))
    return Coloring(colors), trace


def color_count(coloring: Sequence[int]) -> int:
    """Largest color used; 0 when nothing is activated."""
    return max(coloring, default=0)
