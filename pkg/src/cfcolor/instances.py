"""Instance families: tight instances I_k and L_k, the full interval
hypergraph, minimal J_k configurations and seeded random subsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .core import Coloring, Instance, Interval

# I_k has 2^k - 1 intervals; beyond this the interval set no longer fits in memory.
MAX_IK_K = 22
MAX_LK_K = 22

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class LeveledInstance:
    instance: Instance
    level_of: Mapping[Interval, int] = field(repr=False)

    def intervals_at_level(self, level: int) -> list[Interval]:
        return sorted(iv for iv, lv in self.level_of.items() if lv == level)

    def top(self) -> Interval:
        """The unique interval of maximum level."""
        best = max(self.level_of.values())
        (iv,) = self.intervals_at_level(best)
        return iv


def ik_length(k: int) -> int:
    return 5 * 2 ** (k - 2) - 1


def _ik_pairs(k: int) -> dict[tuple[int, int], int]:
    levels = {(1, 2): 1, (3, 3): 1, (2, 4): 2}
    length = 4
    for j in range(2, k):
        shifted = {(a + length, b + length): lv for (a, b), lv in levels.items()}
        levels.update(shifted)
        levels[(length - j + 1, 2 * length + 1)] = j + 1
        length = 2 * length + 1
    return levels


def gen_ik(k: int) -> LeveledInstance:
    """Tight instance I_k with its level labelling; n = 5 * 2^(k-2) - 1."""
    if not 2 <= k <= MAX_IK_K:
        raise ValueError(f"I_k needs 2 <= k <= {MAX_IK_K}, got {k}")
    levels = _ik_pairs(k)
    level_of = {Interval(a, b): lv for (a, b), lv in levels.items()}
    return LeveledInstance(Instance(ik_length(k), level_of), level_of)


def gen_lk(k: int) -> Instance:
    """L_k on 2^k vertices. L_0 is one vertex and no intervals."""
    if not 0 <= k <= MAX_LK_K:
        raise ValueError(f"L_k needs 0 <= k <= {MAX_LK_K}, got {k}")
    pairs: list[tuple[int, int]] = []
    length = 1
    for _ in range(k):
        pairs += [(a + length, b + length) for a, b in pairs]
        pairs.append((length, 2 * length))
        length *= 2
    return Instance(length, pairs)


def gen_full(n: int) -> Instance:
    """The complete discrete interval hypergraph H_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return Instance(n, [(s, t) for s in range(1, n + 1) for t in range(s, n + 1)])


class SplitMix64:
    """SplitMix64 generator; chosen because it is trivial to port bit-exactly."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def unrank_interval(n: int, r: int) -> Interval:
    """The r-th interval (0-based) of H_n in (low, high) lexicographic order."""
    low = 1
    while r >= n - low + 1:
        r -= n - low + 1
        low += 1
    return Interval(low, low + r)


def gen_random(n: int, m: int, seed: int) -> Instance:
    """``m`` distinct intervals of H_n, uniform without replacement.

    Scheme: SplitMix64 seeded with ``seed`` drives a partial Fisher-Yates
    shuffle of the ranks ``0..N-1`` (N = n(n+1)/2); step i swaps position i
    with ``i + below(N - i)``. The first m ranks are unranked in
    (low, high) lexicographic order.
    """
    total = n * (n + 1) // 2
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}] for n={n}")
    rng = SplitMix64(seed)
    perm: dict[int, int] = {}
    ranks = []
    for i in range(m):
        j = i + rng.below(total - i)
        vi, vj = perm.get(i, i), perm.get(j, j)
        perm[i], perm[j] = vj, vi
        ranks.append(vj)
    return Instance(n, [unrank_interval(n, r) for r in ranks])


def gen_min_jk(k: int, anchor: int = 1) -> frozenset[Interval]:
    """A J_k configuration with exactly 2^k - 1 intervals starting at ``anchor``.

    The two halves are separated by one unused vertex.
    """
    if k < 1 or anchor < 1:
        raise ValueError("need k >= 1 and anchor >= 1")
    out: set[Interval] = set()
    _place_jk(k, anchor, out)
    return frozenset(out)


def min_jk_width(k: int) -> int:
    return 2**k - 1


def _place_jk(k: int, start: int, out: set[Interval]) -> None:
    width = min_jk_width(k)
    out.add(Interval(start, start + width - 1))
    if k > 1:
        half = min_jk_width(k - 1)
        _place_jk(k - 1, start, out)
        _place_jk(k - 1, start + half + 1, out)


def optimal_coloring_ik(k: int) -> Coloring:
    """Conflict-free coloring of I_k with ceil(k/2) colors."""
    if not 2 <= k <= MAX_IK_K:
        raise ValueError(f"I_k needs 2 <= k <= {MAX_IK_K}, got {k}")
    colors = [1, 0, 1, 0]
    for j in range(3, k + 1):
        left = list(colors)
        if j % 2 == 1:
            left[-1] = (j + 1) // 2
        colors = left + colors + [0]
    return Coloring(colors)
