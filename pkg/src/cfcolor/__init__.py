"""Conflict-free coloring of hypergraphs induced by discrete intervals."""

from .certificate import JConfig, extract_certificate, lower_bound
from .core import Coloring, Instance, Interval, instance_length, shift_instance
from .exact import DecisionState, brute_force_decide, chi_cf, decide_cf, interval_has_unique_color, solve_cf
from .greedy import AlgorithmTrace, Round, cf_color, color_count, greedy_independent_set
from .instances import gen_full, gen_ik, gen_lk, gen_min_jk, gen_random, optimal_coloring_ik
from .verify import Valid, Violation, contains_configuration, is_conflict_free, is_jk_configuration

__all__ = [
    "AlgorithmTrace",
    "Coloring",
    "DecisionState",
    "Instance",
    "Interval",
    "JConfig",
    "Round",
    "Valid",
    "Violation",
    "brute_force_decide",
    "cf_color",
    "chi_cf",
    "color_count",
    "contains_configuration",
    "decide_cf",
    "extract_certificate",
    "gen_full",
    "gen_ik",
    "gen_lk",
    "gen_min_jk",
    "gen_random",
    "greedy_independent_set",
    "instance_length",
    "interval_has_unique_color",
    "is_conflict_free",
    "is_jk_configuration",
    "lower_bound",
    "optimal_coloring_ik",
    "shift_instance",
    "solve_cf",
]
