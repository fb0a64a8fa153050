import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from veclique import (
    Clique,
    Graph,
    GraphError,
    Mode,
    SolverConfig,
    Status,
    find_maximum_clique,
    is_clique_subset,
    next_combination,
    select_clique_of_size,
)
from veclique.generators import GnpSpec, gen_gnp
from veclique.oracle import brute_force_max_clique
from veclique.solver import SearchState, SearchStats, binary_search

from conftest import complete_minus, cycle, graphs, path

NAIVE = SolverConfig(mode=Mode.NAIVE)
PRUNED = SolverConfig(mode=Mode.PRUNED)


@pytest.mark.parametrize(
    "t, k, expected", [((0, 1), 4, (0, 2)), ((1, 3), 4, (2, 3)), ((2, 3), 4, None), ((), 3, None)]
)
def test_next_combination(t, k, expected):
    assert next_combination(t, k) == expected


@pytest.mark.parametrize("k, size", [(5, 1), (6, 3), (7, 7), (8, 4)])
def test_next_combination_walks_lexicographic_order(k, size):
    seen = []
    t = tuple(range(size))
    while t is not None:
        seen.append(t)
        t = next_combination(t, k)
    assert seen == list(combinations(range(k), size))


@pytest.mark.parametrize("cfg", [NAIVE, PRUNED], ids=["naive", "pruned"])
class TestSelect:
    def test_first_pair_of_triangle(self, cfg):
        assert select_clique_of_size(Graph.complete(3), (0, 1, 2), 2, cfg) == Clique((0, 1))

    def test_path_has_no_triangle(self, cfg):
        assert select_clique_of_size(path(3), (0, 1, 2), 3, cfg) is None

    def test_k4_minus_edge(self, cfg):
        g = complete_minus(4, 0, 1)
        # brute force: the first lexicographic 3-subset that is complete
        expected = next(t for t in combinations(range(4), 3)
                        if all(g.adjacent(u, v) for u, v in combinations(t, 2)))
        assert expected == (0, 2, 3)
        assert select_clique_of_size(g, (0, 1, 2, 3), 3, cfg) == Clique(expected)

    def test_rejects_bad_arguments(self, cfg):
        g = Graph.complete(3)
        with pytest.raises(GraphError):
            select_clique_of_size(g, (0, 1), 0, cfg)
        with pytest.raises(GraphError):
            select_clique_of_size(g, (0, 1), 3, cfg)
        with pytest.raises(GraphError):
            select_clique_of_size(g, (1, 0), 2, cfg)


def test_naive_select_counts_every_subset_it_visits():
    g = complete_minus(4, 0, 1)
    stats = SearchStats()
    select_clique_of_size(g, (0, 1, 2, 3), 3, NAIVE, stats)
    # {0,1,2} fail, {0,1,3} fail, {0,2,3} pass; each failure stops at pair (0,1)
    assert stats.combinations_enumerated == stats.isclique_calls == 3
    assert stats.adjacency_probes == 1 + 1 + 3


def test_paper_trace_with_stubbed_probe():
    answers = {3: True, 5: False, 4: True}

    def probe(mid):
        size = mid + 1
        return Clique(tuple(range(size))) if answers[size] else None

    stats = SearchStats()
    state = binary_search(SearchState(lb=0, ub=5), probe, stats)
    assert stats.mids == [2, 4, 3]
    assert (state.lb, state.ub) == (4, 3)
    assert state.best_size == 4


def test_edgeless_graph_returns_first_vertex():
    res = find_maximum_clique(Graph.empty(5))
    assert res.status is Status.EXACT
    assert res.clique.one_based() == [1]
    assert res.stats.mids == [0]


def test_complete_graph():
    res = find_maximum_clique(Graph.complete(5))
    assert res.clique.one_based() == [1, 2, 3, 4, 5]


def test_five_cycle():
    assert brute_force_max_clique(cycle(5)).size == 2
    for cfg in (NAIVE, PRUNED):
        assert find_maximum_clique(cycle(5), cfg).size == 2


def test_empty_graph():
    res = find_maximum_clique(Graph.empty(0))
    assert res.status is Status.EXACT and res.clique is None and res.size == 0


def test_combination_budget_keeps_best_so_far():
    g = gen_gnp(GnpSpec(40, 0.5, 3))
    full = find_maximum_clique(g)
    for budget in (1, 10, 100, 1000):
        res = find_maximum_clique(g, SolverConfig(combination_budget=budget))
        assert res.status is Status.BUDGET_EXHAUSTED
        assert res.stats.combinations_enumerated <= budget
        assert 1 <= res.size <= full.size
        assert is_clique_subset(g, res.clique.members)


def test_time_budget_trips():
    g = gen_gnp(GnpSpec(300, 0.5, 0))
    res = find_maximum_clique(g, SolverConfig(time_budget=0.05))
    assert res.status is Status.BUDGET_EXHAUSTED
    assert is_clique_subset(g, res.clique.members)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(combination_budget=0)
    with pytest.raises(ValueError):
        SolverConfig(time_budget=-1.0)
    assert SolverConfig(mode="naive").mode is Mode.NAIVE


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=11))
def test_solver_properties(g):
    oracle_size = brute_force_max_clique(g).size if g.n else 0
    naive = find_maximum_clique(g, NAIVE)
    pruned = find_maximum_clique(g, PRUNED)
    m = g.max_degree()
    for res in (naive, pruned):
        assert res.status is Status.EXACT
        assert res.size == oracle_size
        assert res.stats.iterations <= math.floor(math.log2(m + 1)) + 1
        assert res.stats.probe_bound_violations == 0
        assert res.stats.isclique_calls <= res.stats.combinations_enumerated
        if g.n:
            assert res.size >= 1
            assert is_clique_subset(g, res.clique.members)
            assert res.size <= m + 1
            assert all(g.degree(v) >= res.size - 1 for v in res.clique)
    assert naive.clique == pruned.clique
    assert naive.stats.mids == pruned.stats.mids
    assert naive.stats.isclique_calls == naive.stats.combinations_enumerated


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10, min_n=1), st.integers(1, 10))
def test_no_clique_of_size_k_means_none_larger(g, k):
    # select over each size's own candidate set, as the driver does
    def exists(size):
        s = g.vertices_with_degree_at_least(size - 1)
        return len(s) >= size and select_clique_of_size(g, s, size, PRUNED) is not None

    if not exists(k):
        assert not exists(k + 1)
        assert brute_force_max_clique(g).size < k


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10, min_n=1), st.data())
def test_select_modes_agree_on_arbitrary_candidate_sets(g, data):
    s = sorted(data.draw(st.sets(st.integers(0, g.n - 1), min_size=1)))
    size = data.draw(st.integers(1, len(s)))
    brute = next((t for t in combinations(s, size)
                  if all(g.adjacent(u, v) for u, v in combinations(t, 2))), None)
    for cfg in (NAIVE, PRUNED):
        got = select_clique_of_size(g, s, size, cfg)
        assert (got.members if got else None) == brute


def test_johnson8_2_4():
    from veclique.generators import johnson_graph

    res = find_maximum_clique(johnson_graph(8, 2, 4))
    assert res.status is Status.EXACT and res.size == 4
