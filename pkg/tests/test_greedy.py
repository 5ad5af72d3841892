import itertools
import random

import pytest

from discut.cutfun import assignment_to_set, cut_value, dicut_value
from discut.graph import build_graph, gen_complete, gen_even_cycle, gen_gnp
from discut.greedy import (coloring_greedy, degree_split,
                           distributed_greedy_maxcut,
                           distributed_greedy_maxdicut,
                           distributed_randomized_maxdicut, fast_greedy_maxcut,
                           fast_greedy_maxdicut, sequential_greedy_maxdicut)
from discut.oracles import brute_force


def test_single_edge_maxcut():
    g = build_graph(2, [(0, 1)])
    side, metrics = distributed_greedy_maxcut(g, seed=0)
    assert cut_value(g, assignment_to_set(side)) == 1


def test_clique_maxcut():
    g = gen_complete(4)  # m = 6, any balanced split cuts 4
    side, _ = distributed_greedy_maxcut(g, seed=1)
    assert cut_value(g, assignment_to_set(side)) == 4


def test_maxcut_guarantees_on_corpus():
    rng = random.Random(8)
    for _ in range(40):
        g = gen_gnp(rng.randint(2, 11), 0.5, rng.randrange(10**6))
        side, _ = distributed_greedy_maxcut(g, rng.randrange(10**6))
        val = cut_value(g, assignment_to_set(side))
        opt = brute_force(g).opt_value
        assert 2 * val >= g.m
        assert 2 * val >= opt


def test_single_arc_dicut():
    g = build_graph(2, [(0, 1)], directed=True)
    side, _ = distributed_greedy_maxdicut(g, seed=0)
    assert dicut_value(g, assignment_to_set(side)) == 1


def test_dicut_guarantee_on_corpus():
    rng = random.Random(9)
    for _ in range(40):
        g = gen_gnp(rng.randint(2, 10), 0.4, rng.randrange(10**6),
                    directed=True)
        side, _ = distributed_greedy_maxdicut(g, rng.randrange(10**6))
        val = dicut_value(g, assignment_to_set(side))
        assert 3 * val >= brute_force(g).opt_value


def test_distributed_matches_sequential_under_color_order():
    # Any order sorted by ascending color yields the same assignment because
    # same-colored vertices are non-adjacent and decide independently.
    rng = random.Random(10)
    for _ in range(25):
        g = gen_gnp(rng.randint(2, 10), 0.4, rng.randrange(10**6),
                    directed=True)
        seed = rng.randrange(10**6)
        res = coloring_greedy(g, seed, "dicut_det")
        order = sorted(range(g.n), key=lambda v: (res.coloring[v], v))
        assert res.assignment == sequential_greedy_maxdicut(g, order)


def test_sequential_dicut_single_arc_trace():
    g = build_graph(2, [(0, 1)], directed=True)
    # Vertex 0: a = 1 (the arc is still uncut-forward), b = 0, so it joins.
    # Vertex 1: a = 0 - 1 = -1, b = 0, so it stays out.
    assert sequential_greedy_maxdicut(g, [0, 1]) == {0: 1, 1: 0}
    # Reverse order: vertex 1 sees a = 0, b = 1 (the in-arc from 0, still
    # in Y, would be lost), so it also stays out; vertex 0 then joins.
    assert sequential_greedy_maxdicut(g, [1, 0]) == {0: 1, 1: 0}


def test_sequential_dicut_third_guarantee_all_orders():
    rng = random.Random(12)
    for _ in range(5):
        n = rng.randint(3, 5)
        g = gen_gnp(n, 0.6, rng.randrange(10**6), directed=True)
        opt = brute_force(g).opt_value
        for order in itertools.permutations(range(n)):
            side = sequential_greedy_maxdicut(g, order)
            assert 3 * dicut_value(g, assignment_to_set(side)) >= opt


def test_randomized_dicut_all_same_decisions_when_forced():
    # A source vertex with only out-arcs has b' = 0, so p = 1: it always
    # joins regardless of the seed.
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)], directed=True)
    for seed in range(10):
        side, _ = distributed_randomized_maxdicut(g, seed)
        assert side[0] == 1


def test_randomized_dicut_isolated_vertex_joins():
    g = build_graph(1, [], directed=True)
    side, _ = distributed_randomized_maxdicut(g, seed=0)
    assert side == {0: 1}


def test_randomized_dicut_mean_tracks_half_opt():
    rng = random.Random(14)
    g = gen_gnp(9, 0.4, 5, directed=True)
    opt = brute_force(g).opt_value
    vals = []
    for seed in range(300):
        side, _ = distributed_randomized_maxdicut(g, seed)
        vals.append(dicut_value(g, assignment_to_set(side)))
    import statistics
    mean = statistics.fmean(vals)
    se = statistics.stdev(vals) / len(vals) ** 0.5
    assert mean >= 0.5 * opt - 3 * se


def test_kind_checks():
    und = gen_even_cycle(4)
    dirg = gen_gnp(4, 0.5, 0, directed=True)
    with pytest.raises(ValueError):
        distributed_greedy_maxcut(dirg, 0)
    with pytest.raises(ValueError):
        distributed_greedy_maxdicut(und, 0)
    with pytest.raises(ValueError):
        distributed_randomized_maxdicut(und, 0)
    with pytest.raises(ValueError):
        fast_greedy_maxcut(dirg, 0)
    with pytest.raises(ValueError):
        fast_greedy_maxdicut(und, 0)


def test_degree_split_star():
    # Star K(1,9): n = 10, threshold ceil(sqrt(10)) = 4; only the hub is high.
    g = build_graph(10, [(0, v) for v in range(1, 10)])
    split = degree_split(g)
    assert split.threshold == 4
    assert split.high == [0]
    assert split.low == list(range(1, 10))
    assert split.g_high.n == 1 and split.g_high.m == 0
    assert split.g_low.m == 0


def test_fast_maxcut_star():
    g = build_graph(10, [(0, v) for v in range(1, 10)])
    side, _ = fast_greedy_maxcut(g, seed=3)
    # The hub solves exactly against the fixed leaves, cutting the majority.
    assert cut_value(g, assignment_to_set(side)) >= 5


def test_fast_maxcut_guarantee_on_corpus():
    rng = random.Random(15)
    for _ in range(25):
        g = gen_gnp(rng.randint(2, 14), 0.45, rng.randrange(10**6))
        side, _ = fast_greedy_maxcut(g, rng.randrange(10**6))
        val = cut_value(g, assignment_to_set(side))
        assert 2 * val >= brute_force(g).opt_value


def test_fast_maxdicut_guarantee_on_corpus():
    rng = random.Random(16)
    for _ in range(25):
        g = gen_gnp(rng.randint(2, 13), 0.45, rng.randrange(10**6),
                    directed=True)
        side, _ = fast_greedy_maxdicut(g, rng.randrange(10**6))
        val = dicut_value(g, assignment_to_set(side))
        assert 3 * val >= brute_force(g).opt_value


def test_fast_maxcut_no_high_vertices():
    # A long cycle has all degrees 2 < ceil(sqrt(n)) for n >= 5, so the
    # whole run reduces to the coloring greedy.
    g = gen_even_cycle(10)
    split = degree_split(g)
    assert split.high == []
    side, _ = fast_greedy_maxcut(g, seed=4)
    assert 2 * cut_value(g, assignment_to_set(side)) >= g.m


def test_empty_graph_runs():
    g = build_graph(0, [])
    side, metrics = distributed_greedy_maxcut(g, 0)
    assert side == {}
