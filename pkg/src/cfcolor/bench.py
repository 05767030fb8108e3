"""Greedy versus optimal color counts on the instance families."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .core import Instance
from .exact import chi_cf
from .greedy import cf_color, color_count
from .instances import gen_full, gen_ik, gen_lk, gen_random, optimal_coloring_ik
from .verify import is_conflict_free

FAMILIES = ("ik", "lk", "full", "random")
DEFAULT_OPT_UP_TO = 6


class BenchError(RuntimeError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    family: str
    parameter: int
    n: int
    m: int
    alg_colors: int
    opt_colors: int | None
    ratio: Fraction | None
    activated: int
    rounds: int
    wall_time: float
    seed: int | None = None

    def to_json(self) -> str:
        data = asdict(self)
        data["ratio"] = None if self.ratio is None else float(self.ratio)
        return json.dumps(data, sort_keys=True)


def _record(family: str, parameter: int, instance: Instance, with_opt: bool, seed: int | None = None) -> BenchRecord:
    start = time.perf_counter()
    coloring, trace = cf_color(instance)
    alg = color_count(coloring)
    opt = chi_cf(instance) if with_opt else None
    elapsed = time.perf_counter() - start
    ratio = None if opt is None else (Fraction(alg, opt) if opt else Fraction(1))
    return BenchRecord(
        family=family,
        parameter=parameter,
        n=instance.n,
        m=instance.m,
        alg_colors=alg,
        opt_colors=opt,
        ratio=ratio,
        activated=coloring.activated,
        rounds=trace.num_rounds,
        wall_time=elapsed,
        seed=seed,
    )


def bench_tight(min_k: int, max_k: int, opt_up_to: int = DEFAULT_OPT_UP_TO) -> list[BenchRecord]:
    """Run I_k for k in [min_k, max_k]; exact optimum only for k <= opt_up_to."""
    if not 2 <= min_k <= max_k:
        raise ValueError("need 2 <= min_k <= max_k")
    records = []
    for k in range(min_k, max_k + 1):
        instance = gen_ik(k).instance
        check = is_conflict_free(instance, optimal_coloring_ik(k))
        if not check:
            raise BenchError(f"explicit coloring of I_{k} fails: {check}")
        records.append(_record("ik", k, instance, k <= opt_up_to))
    return records


def bench_family(
    family: str,
    lo: int,
    hi: int,
    opt_up_to: int = DEFAULT_OPT_UP_TO,
    m: int | None = None,
    seed: int = 0,
) -> list[BenchRecord]:
    """Records for one family over the parameter range [lo, hi].

    ``ik`` and ``lk`` sweep k, ``full`` and ``random`` sweep n. For
    ``random`` the instance for n uses seed ``seed + n``.
    """
    if family == "ik":
        return bench_tight(lo, hi, opt_up_to)
    if lo > hi:
        raise ValueError("empty parameter range")
    records = []
    for p in range(lo, hi + 1):
        if family == "lk":
            records.append(_record("lk", p, gen_lk(p), p <= opt_up_to))
        elif family == "full":
            records.append(_record("full", p, gen_full(p), p <= opt_up_to))
        elif family == "random":
            if m is None:
                raise ValueError("random family needs m")
            s = seed + p
            count = min(m, p * (p + 1) // 2)
            records.append(_record("random", p, gen_random(p, count, s), p <= opt_up_to, seed=s))
        else:
            raise ValueError(f"unknown family {family!r}")
    return sorted(records, key=lambda r: r.parameter)
