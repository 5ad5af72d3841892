"""Decomposition-based (1 - epsilon)-approximation algorithms.

All three pipelines start from the exponential-shift decomposition and
then solve inside each cluster: the bipartite algorithm by parity along a
lowest-id BFS tree (CONGEST), the general ones by gathering cluster
topology and solving at the lowest-id member (LOCAL).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .cutfun import CutAssignment, assignment_to_set, cut_value, dicut_value
from .decomposition import (DecompositionParams, clusters_connected,
                            distributed_decomposition, exterior_edges)
from .graph import Graph
from .localsolve import DEFAULT_EXACT_CAP, solve_subproblem
from .simulator import (CONGEST, LOCAL, Blob, ExecutionMetrics, VertexContext,
                        VertexProgram, run)

_PHASE_SEED_SALT = 0xC1A5


class OddCycleError(RuntimeError):
    """Bipartite pipeline found a monochromatic intra-cluster edge."""

    def __init__(self, edge: Tuple[int, int]):
        super().__init__(f"odd cycle certificate: edge {edge} is monochromatic")
        self.edge = edge


@dataclass
class ClusterRecord:
    center: int
    size: int
    method: str
    internal_value: int


@dataclass
class ClusterSolveReport:
    clusters: List[ClusterRecord] = field(default_factory=list)
    exterior_edge_count: int = 0
    achieved_value: int = 0
    connected: bool = True

    def internal_total(self) -> int:
        return sum(c.internal_value for c in self.clusters)

    def to_json(self) -> str:
        return json.dumps({
            "clusters": [vars(c) for c in self.clusters],
            "exterior_edge_count": self.exterior_edge_count,
            "achieved_value": self.achieved_value,
            "connected": self.connected,
        }, indent=2, sort_keys=True)


class _ParityProgram(VertexProgram):
    """Lowest-id BFS root discovery plus parity sides within each cluster.

    For ``relax_rounds`` rounds, vertices relax (root, dist, root_bit)
    toward the smallest root id (then smallest distance) among same-cluster
    neighbors.  The side is the root's coin flip XOR the distance parity.
    One verification round exchanges final sides and raises an odd-cycle
    certificate on a monochromatic intra-cluster edge.
    """

    def __init__(self, centers: Dict[int, int], relax_rounds: int):
        self.centers = centers
        self.relax_rounds = relax_rounds
        self.round_index = 0
        self.root = -1
        self.dist = 0
        self.bit = 0
        self.dirty = True

    def init(self, ctx: VertexContext) -> None:
        self.root = ctx.vid
        self.bit = ctx.rng.randrange(2)

    def _side(self) -> int:
        return self.bit ^ (self.dist & 1)

    def on_round(self, ctx: VertexContext, inbox) -> None:
        self.round_index += 1
        my_center = self.centers[ctx.vid]
        if self.round_index <= self.relax_rounds:
            for _, (center, root, dist, bit) in inbox:
                if center != my_center:
                    continue
                if (root, dist + 1) < (self.root, self.dist):
                    self.root = root
                    self.dist = dist + 1
                    self.bit = bit
                    self.dirty = True
            if self.round_index < self.relax_rounds and self.dirty:
                ctx.broadcast((my_center, self.root, self.dist, self.bit))
                self.dirty = False
            elif self.round_index == self.relax_rounds:
                # Verification round payload: final side.
                ctx.broadcast((my_center, bool(self._side())))
            return
        side = self._side()
        for sender, (center, other_side) in inbox:
            if center == my_center and int(other_side) == side:
                raise OddCycleError((min(sender, ctx.vid), max(sender, ctx.vid)))
        ctx.output(side)


def bipartite_maxcut(g: Graph, epsilon: float, seed: int, k: float = 3.0
                     ) -> Tuple[CutAssignment, ExecutionMetrics,
                                ClusterSolveReport]:
    """CONGEST (1 - epsilon)-approximation for Max-Cut on bipartite graphs.

    Raises OddCycleError with a certificate edge if some cluster turns out
    not to be 2-colorable (non-bipartite input).
    """
    if g.directed:
        raise ValueError("bipartite_maxcut expects an undirected graph")
    params = DecompositionParams(beta=epsilon, k=k)
    assignment, dec_metrics = distributed_decomposition(g, params, seed)
    relax_rounds = params.rounds(g.n) + 1
    outputs, parity_metrics = run(
        g, lambda: _ParityProgram(assignment.center, relax_rounds),
        mode=CONGEST, seed=seed + _PHASE_SEED_SALT,
        max_rounds=relax_rounds + 1)
    metrics = dec_metrics.merge_sequential(parity_metrics)

    report = ClusterSolveReport(connected=clusters_connected(g, assignment))
    sset = assignment_to_set(outputs)
    for center, members in assignment.clusters().items():
        mset = set(members)
        internal = sum(1 for u, v in g.edges()
                       if u in mset and v in mset
                       and (u in sset) != (v in sset))
        report.clusters.append(ClusterRecord(
            center=center, size=len(members), method="parity",
            internal_value=internal))
    report.exterior_edge_count = len(exterior_edges(g, assignment))
    report.achieved_value = cut_value(g, sset)
    return outputs, metrics, report


class _GatherProgram(VertexProgram):
    """LOCAL flooding of per-vertex topology blobs, then a symmetric solve.

    Every vertex floods (id, center, incident edges) for the horizon; each
    vertex then reconstructs its own cluster's induced subgraph and
    computes the canonical optimal assignment, so all members of a cluster
    agree without a dissemination phase.
    """

    def __init__(self, centers: Dict[int, int], horizon: int, directed: bool,
                 exact_cap: int, solve_log: Dict):
        self.centers = centers
        self.horizon = horizon
        self.directed = directed
        self.exact_cap = exact_cap
        self.solve_log = solve_log
        self.round_index = 0
        self.known: Dict[int, tuple] = {}
        self.fresh: List[tuple] = []

    def init(self, ctx: VertexContext) -> None:
        if self.directed:
            edges = tuple((ctx.vid, w) for w in ctx.out_neighbors)
        else:
            edges = tuple((ctx.vid, w) for w in ctx.neighbors if w > ctx.vid)
        blob = (ctx.vid, self.centers[ctx.vid], edges)
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
        my_center = self.centers[ctx.vid]
        members = sorted(v for v, blob in self.known.items()
                         if blob[1] == my_center)
        internal = []
        member_set = set(members)
        for v in members:
            for u, w in self.known[v][2]:
                if u in member_set and w in member_set:
                    internal.append((u, w))
        sides, method, value = solve_subproblem(
            members, internal, {}, self.directed, self.exact_cap)
        leader = min(members)
        if leader not in self.solve_log:
            self.solve_log[leader] = {"size": len(members), "method": method,
                                      "value": value}
        ctx.output(sides[ctx.vid])


def _decomposition_solve(g: Graph, epsilon: float, seed: int, beta: float,
                         k: float, exact_cap: int
                         ) -> Tuple[CutAssignment, ExecutionMetrics,
                                    ClusterSolveReport]:
    params = DecompositionParams(beta=beta, k=k)
    assignment, dec_metrics = distributed_decomposition(g, params, seed)
    horizon = params.rounds(g.n)
    solve_log: Dict[int, dict] = {}
    outputs, gather_metrics = run(
        g, lambda: _GatherProgram(assignment.center, horizon, g.directed,
                                  exact_cap, solve_log),
        mode=LOCAL, seed=seed + _PHASE_SEED_SALT, max_rounds=horizon + 2)
    metrics = dec_metrics.merge_sequential(gather_metrics)

    report = ClusterSolveReport(connected=clusters_connected(g, assignment))
    for center, members in assignment.clusters().items():
        log = solve_log.get(min(members), {})
        report.clusters.append(ClusterRecord(
            center=center, size=len(members),
            method=log.get("method", "unknown"),
            internal_value=log.get("value", 0)))
    report.exterior_edge_count = len(exterior_edges(g, assignment))
    sset = assignment_to_set(outputs)
    report.achieved_value = (dicut_value(g, sset) if g.directed
                             else cut_value(g, sset))
    return outputs, metrics, report


def decomposition_maxcut(g: Graph, epsilon: float, seed: int, k: float = 3.0,
                         exact_cap: int = DEFAULT_EXACT_CAP
                         ) -> Tuple[CutAssignment, ExecutionMetrics,
                                    ClusterSolveReport]:
    """LOCAL (1 - epsilon)-approximation for Max-Cut on any graph."""
    if g.directed:
        raise ValueError("decomposition_maxcut expects an undirected graph")
    return _decomposition_solve(g, epsilon, seed, beta=epsilon / 2, k=k,
                                exact_cap=exact_cap)


def decomposition_maxdicut(g: Graph, epsilon: float, seed: int, k: float = 3.0,
                           exact_cap: int = DEFAULT_EXACT_CAP
                           ) -> Tuple[CutAssignment, ExecutionMetrics,
                                      ClusterSolveReport]:
    """LOCAL (1 - epsilon)-approximation for Max-Dicut on any digraph."""
    if not g.directed:
        raise ValueError("decomposition_maxdicut expects a directed graph")
    return _decomposition_solve(g, epsilon, seed, beta=epsilon / 4, k=k,
                                exact_cap=exact_cap)
