"""Coloring-based greedy cut algorithms and the two-step fast hybrid.

The coloring phase and the decision phase run as separate simulator
executions; their metrics are merged.  In the decision phase, round i
belongs to color class i: every vertex of that color reads the 1-bit
decisions its lower-colored neighbors broadcast earlier, decides, sends
its own bit, and outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .coloring import Coloring, distributed_coloring
from .cutfun import CutAssignment
from .graph import Graph, bfs_distances, connected_components, induced_subgraph
from .localsolve import DEFAULT_EXACT_CAP, solve_subproblem
from .simulator import (CONGEST, LOCAL, Blob, ExecutionMetrics, VertexContext,
                        VertexProgram, run)

# Decorrelates the decision-phase RNG streams from the coloring phase.
_DECISION_SEED_SALT = 0x5EED

MAXCUT = "maxcut"
DICUT_DET = "dicut_det"
DICUT_RAND = "dicut_rand"


@dataclass
class GreedyRun:
    assignment: CutAssignment
    metrics: ExecutionMetrics
    coloring: Coloring


class _DecisionProgram(VertexProgram):
    """One color class decides per round; decisions are 1-bit broadcasts."""

    def __init__(self, color_of: Dict[int, int], variant: str):
        self.color_of = color_of
        self.variant = variant
        self.round_index = 0
        self.sent_one: set = set()
        self.sent_zero: set = set()

    def on_round(self, ctx: VertexContext, inbox) -> None:
        self.round_index += 1
        for sender, bit in inbox:
            (self.sent_one if bit else self.sent_zero).add(sender)
        # Lower-colored neighbors decide in earlier rounds, so by the round
        # matching this vertex's color every relevant bit has arrived.
        if self.color_of[ctx.vid] != self.round_index:
            return
        side = self._decide(ctx)
        ctx.broadcast(bool(side))
        ctx.output(side)

    def _decide(self, ctx: VertexContext) -> int:
        if self.variant == MAXCUT:
            n_s = len(self.sent_one)
            n_sbar = len(self.sent_zero)
            side = 1 if n_s <= n_sbar else 0
            # Responsibility floor: the chosen side cuts at least half of
            # the edges toward lower-colored neighbors.
            cut_here = n_sbar if side == 1 else n_s
            assert 2 * cut_here >= n_s + n_sbar
            return side
        a = (sum(1 for w in ctx.out_neighbors if w not in self.sent_one)
             - sum(1 for w in ctx.in_neighbors if w in self.sent_one))
        b = (sum(1 for w in ctx.in_neighbors if w not in self.sent_zero)
             - sum(1 for w in ctx.out_neighbors if w in self.sent_zero))
        assert a + b >= 0
        if self.variant == DICUT_DET:
            return 1 if a >= b else 0
        a_pos = max(a, 0)
        b_pos = max(b, 0)
        if a_pos + b_pos == 0:
            return 1
        return 1 if ctx.rng.random() < a_pos / (a_pos + b_pos) else 0


def coloring_greedy(g: Graph, seed: int, variant: str) -> GreedyRun:
    """Color, then run the per-color-class greedy decision rounds."""
    if g.n == 0:
        return GreedyRun({}, ExecutionMetrics(), {})
    coloring, color_metrics = distributed_coloring(g, seed)
    outputs, decide_metrics = run(
        g, lambda: _DecisionProgram(coloring, variant),
        mode=CONGEST, seed=seed + _DECISION_SEED_SALT,
        max_rounds=max(coloring.values()) + 1)
    return GreedyRun(outputs, color_metrics.merge_sequential(decide_metrics),
                     coloring)


def distributed_greedy_maxcut(g: Graph, seed: int
                              ) -> Tuple[CutAssignment, ExecutionMetrics]:
    """Deterministic-decision greedy Max-Cut; always cuts >= m/2 edges."""
    if g.directed:
        raise ValueError("distributed_greedy_maxcut expects an undirected graph")
    res = coloring_greedy(g, seed, MAXCUT)
    return res.assignment, res.metrics


def distributed_greedy_maxdicut(g: Graph, seed: int
                                ) -> Tuple[CutAssignment, ExecutionMetrics]:
    """Deterministic-decision greedy Max-Dicut; 1/3 of the optimum."""
    if not g.directed:
        raise ValueError("distributed_greedy_maxdicut expects a directed graph")
    res = coloring_greedy(g, seed, DICUT_DET)
    return res.assignment, res.metrics


def distributed_randomized_maxdicut(g: Graph, seed: int
                                    ) -> Tuple[CutAssignment, ExecutionMetrics]:
    """Randomized greedy Max-Dicut; 1/2 of the optimum in expectation."""
    if not g.directed:
        raise ValueError("distributed_randomized_maxdicut expects a directed graph")
    res = coloring_greedy(g, seed, DICUT_RAND)
    return res.assignment, res.metrics


def sequential_greedy_maxdicut(g: Graph, order) -> CutAssignment:
    """Reference double-greedy: grow X from nothing, shrink Y from V.

    Ties a == b join the growing side.  The distributed algorithm's
    decisions coincide with this run under any order sorted by ascending
    color.
    """
    if not g.directed:
        raise ValueError("sequential_greedy_maxdicut expects a directed graph")
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    x: set = set()
    y: set = set(range(g.n))
    side: Dict[int, int] = {}
    for v in order:
        a = (sum(1 for w in g.adj[v] if w not in x)
             - sum(1 for u in g.in_adj[v] if u in x))
        b = (sum(1 for u in g.in_adj[v] if u in y)
             - sum(1 for w in g.adj[v] if w not in y))
        assert a + b >= 0
        if a >= b:
            x.add(v)
            side[v] = 1
        else:
            y.discard(v)
            side[v] = 0
    return side


# ---------------------------------------------------------------------------
# Fast hybrid: greedy on low-degree vertices, exact on high-degree components.

@dataclass
class DegreeSplit:
    threshold: int
    low: List[int]
    high: List[int]
    g_low: Graph
    low_map: List[int]    # g_low id -> original id
    g_high: Graph
    high_map: List[int]   # g_high id -> original id


def degree_split(g: Graph) -> DegreeSplit:
    """Split at degree ceil(sqrt(n)); build both induced subgraphs."""
    threshold = math.ceil(math.sqrt(g.n)) if g.n else 0
    low = [v for v in range(g.n) if g.degree(v) < threshold]
    high = [v for v in range(g.n) if g.degree(v) >= threshold]
    g_low, low_map = induced_subgraph(g, low)
    g_high, high_map = induced_subgraph(g, high)
    return DegreeSplit(threshold, low, high, g_low, low_map, g_high, high_map)


class _RelayProgram(VertexProgram):
    """Floods component blobs for a fixed horizon, then finalizes.

    High-degree vertices inject a blob carrying their id, their incident
    edges in G, and the fixed sides of their decided low-degree neighbors.
    Every vertex (low ones included) relays blobs it has not seen.  After
    the horizon, each high vertex reconstructs its high-degree component
    from the gathered data and computes the canonical optimal assignment;
    low vertices simply output their already-fixed side.
    """

    def __init__(self, horizon: int, high: set, low_sides: Dict[int, int],
                 directed: bool, exact_cap: int, solve_log: Dict):
        self.horizon = horizon
        self.high = high
        self.low_sides = low_sides
        self.directed = directed
        self.exact_cap = exact_cap
        self.solve_log = solve_log
        self.round_index = 0
        self.known: Dict[int, tuple] = {}
        self.fresh: List[tuple] = []

    def init(self, ctx: VertexContext) -> None:
        if ctx.vid in self.high:
            if self.directed:
                edges = [(ctx.vid, w) for w in ctx.out_neighbors]
                edges += [(u, ctx.vid) for u in ctx.in_neighbors]
            else:
                edges = [(ctx.vid, w) for w in ctx.neighbors]
            sides = {w: self.low_sides[w] for w in ctx.neighbors
                     if w in self.low_sides}
            blob = (ctx.vid, tuple(edges), tuple(sorted(sides.items())))
            self.known[ctx.vid] = blob
            self.fresh = [blob]

    def on_round(self, ctx: VertexContext, inbox) -> None:
        self.round_index += 1
        for _, message in inbox:
            for blob in message.value:
                if blob[0] not in self.known:
                    self.known[blob[0]] = blob
                    self.fresh.append(blob)
        if self.round_index > self.horizon:
            self._finalize(ctx)
            return
        if self.fresh and ctx.neighbors:
            ctx.broadcast(Blob(tuple(self.fresh)))
        self.fresh = []

    def _finalize(self, ctx: VertexContext) -> None:
        if ctx.vid not in self.high:
            ctx.output(self.low_sides[ctx.vid])
            return
        # Component of this vertex within the gathered high-degree graph.
        high_adj: Dict[int, set] = {h: set() for h in self.known}
        for origin, edges, _ in self.known.values():
            for u, v in edges:
                if u in high_adj and v in high_adj:
                    high_adj[u].add(v)
                    high_adj[v].add(u)
        comp = {ctx.vid}
        stack = [ctx.vid]
        while stack:
            u = stack.pop()
            for w in high_adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        # Edges incident to the component, with decided low sides fixed.
        edges = []
        fixed: Dict[int, int] = {}
        seen = set()
        for member in comp:
            origin, member_edges, low_sides = self.known[member]
            fixed.update(dict(low_sides))
            for u, v in member_edges:
                key = (u, v) if self.directed else (min(u, v), max(u, v))
                if key not in seen:
                    seen.add(key)
                    edges.append((u, v))
        sides, method, value = solve_subproblem(
            sorted(comp), edges, fixed, self.directed, self.exact_cap)
        leader = min(comp)
        if leader not in self.solve_log:
            self.solve_log[leader] = {"size": len(comp), "method": method,
                                      "value": value}
        ctx.output(sides[ctx.vid])


def _fast_greedy(g: Graph, seed: int, variant: str,
                 exact_cap: int = DEFAULT_EXACT_CAP
                 ) -> Tuple[CutAssignment, ExecutionMetrics]:
    split = degree_split(g)
    # Step 1: coloring-based greedy on the low-degree induced subgraph.
    if split.low:
        low_run = coloring_greedy(split.g_low, seed, variant)
        low_sides = {split.low_map[v]: s for v, s in low_run.assignment.items()}
        metrics = low_run.metrics
    else:
        low_sides = {}
        metrics = ExecutionMetrics()
    if not split.high:
        return low_sides, metrics

    # Sanity check of the distance property: vertices connected in the
    # high-degree subgraph sit within 3*ceil(sqrt(n)) hops of each other in G.
    radius = 3 * math.ceil(math.sqrt(g.n))
    for comp in connected_components(split.g_high):
        members = [split.high_map[v] for v in comp]
        for source in members:
            dist = bfs_distances(g, source)
            for u in members:
                assert dist[u] <= radius, (
                    f"high-degree pair at distance {dist[u]} > {radius}")

    solve_log: Dict[int, dict] = {}
    outputs, flood_metrics = run(
        g, lambda: _RelayProgram(radius, set(split.high), low_sides,
                                 g.directed, exact_cap, solve_log),
        mode=LOCAL, seed=seed, max_rounds=radius + 2)
    return outputs, metrics.merge_sequential(flood_metrics)


def fast_greedy_maxcut(g: Graph, seed: int,
                       exact_cap: int = DEFAULT_EXACT_CAP
                       ) -> Tuple[CutAssignment, ExecutionMetrics]:
    """Two-step hybrid Max-Cut: greedy low-degree, exact high-degree."""
    if g.directed:
        raise ValueError("fast_greedy_maxcut expects an undirected graph")
    return _fast_greedy(g, seed, MAXCUT, exact_cap)


def fast_greedy_maxdicut(g: Graph, seed: int,
                         exact_cap: int = DEFAULT_EXACT_CAP
                         ) -> Tuple[CutAssignment, ExecutionMetrics]:
    """Two-step hybrid Max-Dicut with the 1/3 guarantee."""
    if not g.directed:
        raise ValueError("fast_greedy_maxdicut expects a directed graph")
    return _fast_greedy(g, seed, DICUT_DET, exact_cap)
