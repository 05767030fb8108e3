import math

import pytest
from hypothesis import given

from cfcolor.core import Instance, Interval
from cfcolor.greedy import (
    cf_color,
    color_count,
    greedy_independent_set,
    hitting_set_from_independent,
    project_hyperedges,
)
from cfcolor.instances import gen_ik
from cfcolor.verify import is_conflict_free
from conftest import instances
from checks import check_round_invariants
from corpus import all_instances, random_corpus


def ivs(*pairs):
    return {Interval(a, b) for a, b in pairs}


def naive_scan(intervals):
    """Quadratic activity selection: repeatedly take the disjoint interval
    with the smallest right end."""
    chosen = []
    remaining = set(intervals)
    while True:
        free = [iv for iv in remaining if all(not iv.intersects(c) for c in chosen)]
        if not free:
            return set(chosen)
        best = min(free, key=lambda iv: (iv.high, -iv.low))
        chosen.append(best)
        remaining.discard(best)


def naive_projection(edges, hits):
    hits = sorted(hits)
    rank = {v: r for r, v in enumerate(hits, start=1)}
    out = set()
    for e in edges:
        inside = [v for v in hits if e.low <= v <= e.high]
        if len(inside) > 1:
            out.add(Interval(rank[inside[0]], rank[inside[-1]]))
    return out


def naive_algorithm(instance):
    """Set-based iterated hitting sets on original vertex labels."""
    colors = {}
    vertices = set(range(1, instance.n + 1))
    edges = {frozenset(range(iv.low, iv.high + 1)) for iv in instance.intervals}
    level = 0
    while edges:
        order = sorted(vertices)
        pos = {v: i + 1 for i, v in enumerate(order)}
        as_iv = {Interval(pos[min(e)], pos[max(e)]) for e in edges}
        hits = {order[iv.high - 1] for iv in naive_scan(as_iv)}
        for v in vertices - hits:
            colors[v] = level
        vertices = hits
        edges = {e & hits for e in edges if len(e & hits) > 1}
        level += 1
    for v in vertices:
        colors[v] = level
    return tuple(colors[v] for v in range(1, instance.n + 1))


class TestIndependentSet:
    def test_examples(self):
        i2 = ivs((1, 2), (3, 3), (2, 4))
        assert greedy_independent_set(i2) == naive_scan(i2) == ivs((1, 2), (3, 3))
        i3 = gen_ik(3).instance
        assert greedy_independent_set(i3) == naive_scan(i3.intervals) == ivs((1, 2), (3, 3), (5, 6), (7, 7))
        assert greedy_independent_set(set()) == set()

    def test_tie_prefers_larger_low(self):
        assert greedy_independent_set(ivs((1, 3), (2, 3), (3, 3))) == ivs((3, 3))

    @given(instances())
    def test_matches_naive_scan(self, inst):
        assert greedy_independent_set(inst) == naive_scan(inst.intervals)

    @given(instances())
    def test_disjoint_and_maximal(self, inst):
        f = greedy_independent_set(inst)
        fl = sorted(f)
        assert all(a.high < b.low for a, b in zip(fl, fl[1:]))
        for iv in inst.intervals:
            assert any(iv.intersects(c) for c in f)

    def test_level_one_of_ik(self):
        for k in range(2, 9):
            lev = gen_ik(k)
            assert greedy_independent_set(lev.instance) == set(lev.intervals_at_level(1))


def test_hitting_set_examples():
    assert hitting_set_from_independent(ivs((1, 2), (3, 3))) == (2, 3)
    assert hitting_set_from_independent(ivs((1, 2), (3, 3), (5, 6), (7, 7))) == (2, 3, 6, 7)
    assert hitting_set_from_independent(set()) == ()


class TestProjection:
    def test_examples(self):
        assert project_hyperedges(ivs((2, 4)), [2, 3]) == naive_projection(ivs((2, 4)), [2, 3]) == ivs((1, 2))
        e = ivs((1, 2), (3, 3), (2, 4))
        assert project_hyperedges(e, [2, 3]) == naive_projection(e, [2, 3]) == ivs((1, 2))
        assert project_hyperedges(set(), [1, 5]) == set()

    @given(instances())
    def test_matches_naive(self, inst):
        hits = hitting_set_from_independent(greedy_independent_set(inst))
        assert project_hyperedges(inst.intervals, hits) == naive_projection(inst.intervals, hits)


class TestCfColor:
    def test_i2(self):
        coloring, trace = cf_color(gen_ik(2).instance)
        assert coloring == (0, 1, 2, 0)
        assert trace.num_rounds == 2

    def test_i4_figure_row(self):
        coloring, _ = cf_color(gen_ik(4).instance)
        assert coloring == (0, 1, 2, 0, 0, 1, 3, 0, 0, 0, 1, 2, 0, 0, 1, 4, 0, 0, 0)

    def test_no_intervals(self):
        coloring, trace = cf_color(Instance(5, []))
        assert coloring == (0,) * 5
        assert trace.rounds == () and trace.final_color == 0

    @given(instances())
    def test_matches_set_based_algorithm(self, inst):
        assert cf_color(inst)[0] == naive_algorithm(inst)

    @given(instances(max_n=30))
    def test_conflict_free(self, inst):
        coloring, trace = cf_color(inst)
        assert is_conflict_free(inst, coloring)
        assert color_count(coloring) == trace.final_color

    def test_deterministic(self):
        for inst in random_corpus()[:100]:
            a, ta = cf_color(inst)
            b, tb = cf_color(Instance(inst.n, sorted(inst.intervals, reverse=True)))
            assert a == b and ta == tb and ta.to_json() == tb.to_json()


@given(instances(max_n=40))
def test_round_invariants_property(inst):
    check_round_invariants(inst)


def test_round_invariants_small_exhaustive():
    for inst in all_instances(4):
        check_round_invariants(inst)


def test_round_count_within_log_bound_on_corpus():
    for inst in random_corpus():
        _, trace = cf_color(inst)
        assert trace.num_rounds <= math.floor(math.log2(inst.n)) + 1


def test_trace_report_and_json():
    _, trace = cf_color(gen_ik(2).instance)
    report = trace.report()
    assert "round 0: 3 hyperedges" in report
    assert "  S: 2 3" in report
    assert "final color 2: 3" in report
    data = trace.to_dict()
    assert data["rounds"][1]["hitting_set"] == [3]
    assert data["rounds"][0]["colored"] == [1, 4]


def test_color_count():
    assert color_count((0, 1, 2, 0)) == 2
    assert color_count((1, 0, 1, 0)) == 1
    assert color_count((0, 0, 0)) == 0


@pytest.mark.parametrize("k", range(2, 10))
def test_ik_uses_k_colors(k):
    coloring, trace = cf_color(gen_ik(k).instance)
    assert color_count(coloring) == k == trace.num_rounds
