import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cfcolor.core import Instance
from cfcolor.exact import (
    BRUTE_BUDGET_ENV,
    BudgetExceeded,
    DecisionState,
    SearchStats,
    brute_force_decide,
    brute_force_witness,
    chi_cf,
    chi_cf_witness,
    decide_cf,
    interval_has_unique_color,
    solve_cf,
)
from cfcolor.instances import gen_full, gen_ik
from cfcolor.verify import is_conflict_free
from conftest import instances
from corpus import random_corpus

I2 = gen_ik(2).instance


def enumerate_decide(inst, k):
    """Plain itertools enumeration through the verifier."""
    return any(is_conflict_free(inst, c) for c in product(range(k + 1), repeat=inst.n))


class TestState:
    def test_unique_color_examples(self):
        st_ = DecisionState(((3, 1),))
        assert interval_has_unique_color(st_, 2)
        assert not interval_has_unique_color(st_, 1)
        assert not interval_has_unique_color(DecisionState(((0, 0),)), 1)

    def test_invariants(self):
        with pytest.raises(ValueError):
            DecisionState(((1, 3),))
        with pytest.raises(ValueError):
            DecisionState(((2, 2),))

    def test_assign(self):
        s = DecisionState.empty(2).assign(1, 1).assign(2, 2).assign(1, 3)
        assert s.pairs == ((3, 1), (2, 0))
        assert s.assign(0, 4) is s

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=12), st.data())
    def test_unique_iff_pairs_say_so(self, colors, data):
        """The pair test agrees with counting colors in [j, t]."""
        k = 3
        state = DecisionState.empty(k)
        for t, c in enumerate(colors, start=1):
            state = state.assign(c, t)
        t = len(colors)
        j = data.draw(st.integers(1, t))
        window = colors[j - 1 : t]
        expected = any(window.count(c) == 1 for c in range(1, k + 1))
        assert interval_has_unique_color(state, j) == expected


class TestDecide:
    def test_examples(self):
        assert decide_cf(I2, 1)
        assert not decide_cf(I2, 0)
        assert not decide_cf(gen_full(4), 2)
        assert decide_cf(gen_full(4), 3)

    def test_chi_examples(self):
        assert chi_cf(I2) == 1
        assert chi_cf(gen_ik(4).instance) == 2
        assert chi_cf(Instance(6, [])) == 0

    def test_brute_examples(self):
        assert brute_force_decide(I2, 1)
        assert not brute_force_decide(I2, 0)
        assert not brute_force_decide(gen_full(4), 2)
        assert enumerate_decide(I2, 1) and not enumerate_decide(gen_full(4), 2)

    def test_brute_budget(self, monkeypatch):
        with pytest.raises(BudgetExceeded):
            brute_force_decide(gen_full(12), 3, budget=1000)
        monkeypatch.setenv(BRUTE_BUDGET_ENV, "10")
        with pytest.raises(BudgetExceeded):
            brute_force_decide(gen_full(3), 2)

    def test_brute_streaming_path(self):
        # (k+1)^n above the cached-table threshold
        inst = Instance(11, [(1, 11), (1, 1), (11, 11), (2, 10)])
        assert brute_force_decide(inst, 3, budget=10**7) == decide_cf(inst, 3)
        w = brute_force_witness(inst, 3, budget=10**7)
        assert is_conflict_free(inst, w)

    @given(instances(max_n=7), st.integers(0, 3))
    def test_brute_table_matches_enumeration(self, inst, k):
        assert brute_force_decide(inst, k) == enumerate_decide(inst, k)

    @given(instances(max_n=10), st.integers(0, 3))
    def test_matches_brute(self, inst, k):
        assert decide_cf(inst, k) == brute_force_decide(inst, k)

    @given(instances(max_n=10), st.integers(0, 3))
    def test_monotone_in_k(self, inst, k):
        if decide_cf(inst, k):
            assert decide_cf(inst, k + 1)

    @given(instances(max_n=10), st.data())
    def test_monotone_in_edges(self, inst, data):
        sub = data.draw(st.sets(st.sampled_from(sorted(inst.intervals)))) if inst.intervals else set()
        assert chi_cf(Instance(inst.n, sub)) <= chi_cf(inst)

    @given(instances(max_n=14))
    def test_witness_is_valid(self, inst):
        k, coloring = chi_cf_witness(inst)
        assert is_conflict_free(inst, coloring)
        assert max(coloring, default=0) <= k
        # first-use order
        seen = [c for c in dict.fromkeys(coloring) if c]
        assert seen == list(range(1, len(seen) + 1))

    def test_solve_none_when_infeasible(self):
        assert solve_cf(gen_full(4), 2) is None

    @given(instances(max_n=14))
    def test_upper_bound(self, inst):
        assert chi_cf(inst) <= math.floor(math.log2(inst.n)) + 1

    def test_frontier_bound_and_stats(self):
        for inst in random_corpus()[:200]:
            for k in range(4):
                stats = SearchStats()
                decide_cf(inst, k, stats)
                assert len(stats.frontier_sizes) <= inst.n + 1
                assert stats.max_frontier <= (inst.n + 1) ** (2 * k)
                assert stats.records()[0] == {"k": k, "t": 0, "frontier": 1}

    def test_chi_stats_per_k(self):
        stats = []
        assert chi_cf(gen_ik(4).instance, stats) == 2
        assert [s.k for s in stats] == [0, 1, 2]
        assert stats[-1].frontier_sizes[-1] > 0 and stats[0].frontier_sizes[-1] == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 8])
    def test_full_small(self, n):
        assert chi_cf(gen_full(n)) == math.floor(math.log2(n)) + 1
