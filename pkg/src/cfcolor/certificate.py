"""Lower-bound certificates read off a greedy coloring trace.

If the greedy algorithm uses k colors, some interval survives into the
round with level k - 1, and walking two rounds down at a time inside it
yields two disjoint surviving intervals under one cover. Repeating gives a
J_{ceil(k/2)} configuration inside the input, so every conflict-free
coloring needs at least ceil(k/2) colors.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .core import Instance, Interval
from .greedy import AlgorithmTrace, cf_color, color_count


log = logging.getLogger(__name__)


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class JConfig:
    cover: Interval
    left: JConfig | None = None
    right: JConfig | None = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a JConfig has either two children or none")

    @cached_property
    def depth(self) -> int:
        return 1 if self.left is None else 1 + self.left.depth

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def intervals(self) -> frozenset[Interval]:
        return frozenset(self._walk())

    def _walk(self) -> Iterator[Interval]:
        yield self.cover
        if self.left is not None:
            yield from self.left._walk()
            yield from self.right._walk()

    def render(self, indent: str = "  ") -> str:
        """Indented tree, one ``s t`` line per interval."""
        lines: list[str] = []
        self._render(lines, 0, indent)
        return "\n".join(lines) + "\n"

    def _render(self, lines: list[str], level: int, indent: str) -> None:
        lines.append(f"{indent * level}{self.cover.low} {self.cover.high}")
        if self.left is not None:
            self.left._render(lines, level + 1, indent)
            self.right._render(lines, level + 1, indent)


class _Rounds:
    """Round data from a trace in original vertex coordinates."""

    def __init__(self, instance: Instance, trace: AlgorithmTrace):
        self.originals = sorted(instance.intervals)
        self.vertex_sets = [r.vertex_set for r in trace.rounds]
        # F^m as original-coordinate hulls, keyed by right endpoint
        self.f_by_end = []
        for r in trace.rounds:
            self.f_by_end.append({r.original(iv.high): (r.original(iv.low), r.original(iv.high)) for iv in r.independent_set})

    def points(self, m: int, iv: Interval) -> tuple[int, ...]:
        vs = self.vertex_sets[m]
        return vs[bisect_left(vs, iv.low) : bisect_right(vs, iv.high)]

    def reaches(self, iv: Interval, m: int) -> bool:
        """Whether ``iv`` is still a hyperedge in round m."""
        if m == 0:
            return True
        return len(self.points(m, iv)) >= 2


def extract_certificate(instance: Instance, trace: AlgorithmTrace) -> JConfig:
    """J_{ceil(k/2)} configuration contained in the instance, k = colors used."""
    k = trace.final_color
    if k < 1:
        raise CertificateError("the trace uses no positive color")
    rounds = _Rounds(instance, trace)
    top_round = k - 1
    final = set(trace.final_vertices)
    tops = [iv for iv in rounds.originals if rounds.reaches(iv, top_round)]
    if not tops:
        raise CertificateError("no interval reaches the last round; trace does not match instance")
    if k <= 2:
        return JConfig(tops[0])
    # prefer an interval whose last surviving vertex got the top color
    tops.sort(key=lambda iv: (rounds.points(top_round, iv)[-1] not in final, iv))
    builder = _Builder(rounds)
    for iv in tops:
        cfg = builder.build(iv, top_round)
        if cfg is not None:
            return cfg
    depth = (k + 1) // 2
    log.info("trace-guided extraction failed; searching all covers for depth %d", depth)
    for iv in rounds.originals:
        cfg = builder.search(iv, depth)
        if cfg is not None:
            return cfg
    raise CertificateError(f"no J_{depth} configuration found; greedy bound contradicted")


class _Builder:
    def __init__(self, rounds: _Rounds):
        self.rounds = rounds
        self.memo: dict[tuple[Interval, int], JConfig | None] = {}
        self.search_memo: dict[tuple[Interval, int], JConfig | None] = {}

    def build(self, cover: Interval, m: int) -> JConfig | None:
        """Certificate of depth ceil((m+1)/2) inside ``cover``, which reaches round m."""
        key = (cover, m)
        if key not in self.memo:
            self.memo[key] = self._build(cover, m)
        return self.memo[key]

    def _build(self, cover: Interval, m: int) -> JConfig | None:
        if m <= 1:
            return JConfig(cover)
        rounds = self.rounds
        pts = rounds.points(m, cover)
        for u, v in zip(pts, pts[1:]):
            # the round m-1 independent interval ending at v lies in (u, v]
            inner = rounds.f_by_end[m - 1].get(v)
            if inner is None:
                continue
            mids = [w for w in rounds.vertex_sets[m - 1] if u < w < v and w >= inner[0]]
            for w in reversed(mids):
                for a in self._footprint_matches(m - 2, w, cover):
                    for b in self._footprint_matches(m - 2, v, cover):
                        if a.high < b.low:
                            la, lb = self.build(a, m - 2), self.build(b, m - 2)
                            if la is not None and lb is not None:
                                return JConfig(cover, la, lb)
        # originals can stick out of their footprints; any disjoint pair of
        # survivors of round m-2 inside the cover does the same job
        inside = [
            iv
            for iv in rounds.originals
            if iv != cover and cover.contains(iv) and rounds.reaches(iv, m - 2) and self.build(iv, m - 2) is not None
        ]
        return _extremal_pair(cover, inside, lambda iv: self.build(iv, m - 2))

    def search(self, cover: Interval, depth: int) -> JConfig | None:
        """Any J_depth configuration with ``cover`` on top, ignoring the trace."""
        key = (cover, depth)
        if key not in self.search_memo:
            if depth == 1:
                found = JConfig(cover)
            else:
                inside = [
                    iv
                    for iv in self.rounds.originals
                    if iv != cover and cover.contains(iv) and self.search(iv, depth - 1) is not None
                ]
                found = _extremal_pair(cover, inside, lambda iv: self.search(iv, depth - 1))
            self.search_memo[key] = found
        return self.search_memo[key]

    def _footprint_matches(self, m: int, end: int, cover: Interval) -> list[Interval]:
        """Originals inside ``cover`` whose round-m footprint is F^m's interval ending at ``end``."""
        rounds = self.rounds
        hull = rounds.f_by_end[m].get(end)
        if hull is None:
            return []
        want = rounds.points(m, Interval(*hull))
        out = [
            iv
            for iv in rounds.originals
            if cover.contains(iv) and iv.low <= hull[0] and iv.high >= hull[1] and rounds.points(m, iv) == want
        ]
        out.sort(key=lambda iv: (len(iv), iv))
        return out


def _extremal_pair(cover: Interval, candidates: list[Interval], sub) -> JConfig | None:
    # a disjoint pair exists iff the earliest-ending and latest-starting ones are disjoint
    if len(candidates) < 2:
        return None
    a = min(candidates, key=lambda iv: (iv.high, -iv.low))
    b = max(candidates, key=lambda iv: (iv.low, -iv.high))
    if a.high >= b.low:
        return None
    return JConfig(cover, sub(a), sub(b))


def lower_bound(instance: Instance) -> tuple[int, JConfig | None]:
    """(ceil(k/2), certificate) where k is the number of greedy colors."""
    coloring, trace = cf_color(instance)
    k = color_count(coloring)
    if k == 0:
        return 0, None
    cert = extract_certificate(instance, trace)
    return (k + 1) // 2, cert
