"""Intervals, instances and colorings, plus their text formats.

Vertices are 1-based everywhere, including on disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class FormatError(ValueError):
    """Malformed instance or coloring text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, order=True, slots=True)
class Interval:
    low: int
    high: int

    def __post_init__(self) -> None:
        if not (1 <= self.low <= self.high):
            raise ValueError(f"invalid interval [{self.low},{self.high}]")

    def __iter__(self):
        yield self.low
        yield self.high

    def __len__(self) -> int:
        return self.high - self.low + 1

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and self.low <= v <= self.high

    def contains(self, other: Interval) -> bool:
        return self.low <= other.low and other.high <= self.high

    def intersects(self, other: Interval) -> bool:
        return self.low <= other.high and other.low <= self.high

    def __repr__(self) -> str:
        return f"[{self.low},{self.high}]"


def as_intervals(items: Iterable) -> frozenset[Interval]:
    """Coerce ``(s, t)`` pairs or Interval objects to a frozenset of Interval."""
    return frozenset(it if isinstance(it, Interval) else Interval(*it) for it in items)


@dataclass(frozen=True)
class Instance:
    """Ground set ``{1..n}`` plus a set of intervals over it.

    ``n`` may exceed the span of the intervals; extra vertices are isolated.
    """

    n: int
    intervals: frozenset[Interval]

    def __init__(self, n: int, intervals: Iterable = ()):
        ivs = as_intervals(intervals)
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        for iv in ivs:
            if iv.high > n:
                raise ValueError(f"interval {iv!r} exceeds n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "intervals", ivs)

    @property
    def m(self) -> int:
        return len(self.intervals)

    def sorted_intervals(self) -> list[Interval]:
        return sorted(self.intervals)

    def __repr__(self) -> str:
        body = ",".join(repr(iv) for iv in self.sorted_intervals())
        return f"Instance(n={self.n}, {{{body}}})"


class Coloring(tuple):
    """Vertex colors as a tuple; entry ``v - 1`` holds the color of vertex ``v``.

    Color 0 means the vertex is not activated.
    """

    def __new__(cls, colors: Iterable[int] = ()):
        values = tuple(int(c) for c in colors)
        if any(c < 0 for c in values):
            raise ValueError("colors must be non-negative")
        return super().__new__(cls, values)

    def color_of(self, v: int) -> int:
        return self[v - 1]

    @property
    def activated(self) -> int:
        """Number of vertices carrying a positive color."""
        return sum(1 for c in self if c > 0)

    def __repr__(self) -> str:
        return f"Coloring({tuple(self)})"


def shift_instance(instance: Instance, d: int) -> Instance:
    if d < 0:
        raise ValueError("shift must be non-negative")
    return Instance(instance.n + d, shift_intervals(instance.intervals, d))


def shift_intervals(intervals: Iterable[Interval], d: int) -> frozenset[Interval]:
    return frozenset(Interval(iv.low + d, iv.high + d) for iv in intervals)


def instance_length(intervals: Iterable[Interval] | Instance) -> int:
    """Rightmost point minus leftmost point plus one."""
    if isinstance(intervals, Instance):
        intervals = intervals.intervals
    ivs = list(intervals)
    if not ivs:
        raise ValueError("length of an empty interval set is undefined")
    return max(iv.high for iv in ivs) - min(iv.low for iv in ivs) + 1


def span(intervals: Iterable[Interval]) -> Interval:
    ivs = list(intervals)
    if not ivs:
        raise ValueError("span of an empty interval set is undefined")
    return Interval(min(iv.low for iv in ivs), max(iv.high for iv in ivs))


# -- text formats -----------------------------------------------------------


def format_instance(instance: Instance) -> str:
    lines = [f"{instance.n} {instance.m}"]
    lines.extend(f"{iv.low} {iv.high}" for iv in instance.sorted_intervals())
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    """Parse ``n m`` followed by ``m`` lines of ``s t``.

    Blank lines are skipped. Duplicate intervals collapse silently.
    """
    rows = [
        (lineno, line.split())
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not rows:
        raise FormatError("empty instance", line=1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise FormatError("header must be 'n m'", line=lineno)
    n, m = (_parse_int(tok, lineno) for tok in header)
    if n < 1:
        raise FormatError(f"vertex count must be positive, got {n}", line=lineno)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise FormatError(f"expected {m} intervals, found {len(body)}", line=where)
    intervals = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise FormatError("interval line must be 's t'", line=lineno)
        s, t = (_parse_int(tok, lineno) for tok in toks)
        if not (1 <= s <= t <= n):
            raise FormatError(f"interval [{s},{t}] out of range for n={n}", line=lineno)
        intervals.append(Interval(s, t))
    return Instance(n, intervals)


def format_coloring(coloring: Sequence[int]) -> str:
    return " ".join(str(c) for c in coloring) + "\n"


def parse_coloring(text: str) -> Coloring:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for tok in line.split():
            value = _parse_int(tok, lineno)
            if value < 0:
                raise FormatError(f"negative color {value}", line=lineno)
            values.append(value)
    return Coloring(values)


def _parse_int(tok: str, lineno: int) -> int:
    if not tok.isascii() or not tok.lstrip("-").isdigit():
        raise FormatError(f"not an integer: {tok!r}", line=lineno)
    return int(tok)
