"""Low-diameter graph decomposition by exponential shifts.

Every vertex draws a shift delta from Exp(beta) and, for a fixed number of
rounds, relaxes toward the neighbor state minimizing the shifted distance
dist(u, v) - delta_u, ties broken by smaller center id.  The output maps
each vertex to its chosen center; vertices sharing a center form a
cluster, and edges between clusters are "exterior".

Shifts are quantized to 32.32 fixed point, so shifted distances compare
exactly; messages carry one 64-bit field plus one id and the CONGEST
budget is set accordingly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .graph import Graph, bfs_distances
from .simulator import (ExecutionMetrics, ModelMode, VertexContext,
                        VertexProgram, run)

_FIXED_SCALE = 2 ** 32


@dataclass(frozen=True)
class DecompositionParams:
    beta: float
    k: float = 3.0

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")
        if self.k <= 2.0:
            raise ValueError(f"k must be > 2, got {self.k}")

    def rounds(self, n: int) -> int:
        """Exact round count ceil(k * log2(n) / beta)."""
        if n <= 1:
            return 1
        return math.ceil(self.k * math.log2(n) / self.beta)


@dataclass
class CenterAssignment:
    center: Dict[int, int]
    delta: Dict[int, float]  # sampled shifts, retained for audit

    def clusters(self) -> Dict[int, List[int]]:
        """center id -> sorted member list."""
        out: Dict[int, List[int]] = {}
        for v, c in self.center.items():
            out.setdefault(c, []).append(v)
        for members in out.values():
            members.sort()
        return out

    def to_csv(self) -> str:
        lines = ["vertex,center,delta"]
        for v in sorted(self.center):
            lines.append(f"{v},{self.center[v]},{self.delta[v]!r}")
        return "\n".join(lines) + "\n"


def quantize_shift(x: float) -> float:
    """Round to a multiple of 2^-32 (exact in a float64)."""
    return round(x * _FIXED_SCALE) / _FIXED_SCALE


def sample_exponential(beta: float, rng) -> float:
    """Inverse-CDF sample -ln(u)/beta, u uniform in (0, 1], fixed-point."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    u = 1.0 - rng.random()
    return quantize_shift(-math.log(u) / beta)


class DecompositionProgram(VertexProgram):
    """Relaxation over (shifted distance, center) pairs for a fixed horizon.

    State messages are sent only when the local state changed; receivers
    are insensitive to repeats, so this only reduces traffic.
    """

    def __init__(self, total_rounds: int,
                 shift_for: Callable[[VertexContext], float]):
        self.total_rounds = total_rounds
        self.shift_for = shift_for
        self.round_index = 0
        self.dist_min = 0.0
        self.center = -1
        self.delta = 0.0
        self.dirty = True

    def init(self, ctx: VertexContext) -> None:
        self.delta = self.shift_for(ctx)
        self.dist_min = -self.delta
        self.center = ctx.vid

    def on_round(self, ctx: VertexContext, inbox) -> None:
        for _, (d_prime, center_prime) in inbox:
            cand = d_prime + 1.0
            if cand < self.dist_min or (cand == self.dist_min
                                        and center_prime < self.center):
                self.dist_min = cand
                self.center = center_prime
                self.dirty = True
        self.round_index += 1
        if self.round_index >= self.total_rounds:
            ctx.output((self.center, self.delta))
            return
        if self.dirty:
            ctx.broadcast((self.dist_min, self.center))
            self.dirty = False


def decomposition_mode(n: int, congest_factor: int = 4) -> ModelMode:
    """CONGEST with a budget wide enough for one 64-bit field plus an id."""
    id_bits = max(1, math.ceil(math.log2(max(2, n))))
    return ModelMode("CONGEST",
                     budget_bits=max(congest_factor * id_bits, 64 + id_bits))


def distributed_decomposition(
        g: Graph, params: DecompositionParams, seed: int,
        delta_override: Optional[Dict[int, float]] = None,
        mode: Optional[ModelMode] = None,
) -> Tuple[CenterAssignment, ExecutionMetrics]:
    """Run the shift-based decomposition for its exact round budget.

    ``delta_override`` replaces the sampled shifts (a test hook for
    deterministic unit tests, e.g. all-zero shifts).
    """
    total = params.rounds(g.n)
    if mode is None:
        mode = decomposition_mode(g.n)

    def shift_for(ctx: VertexContext) -> float:
        if delta_override is not None:
            return quantize_shift(delta_override.get(ctx.vid, 0.0))
        return sample_exponential(params.beta, ctx.rng)

    outputs, metrics = run(
        g, lambda: DecompositionProgram(total, shift_for),
        mode=mode, seed=seed, max_rounds=total + 1)
    assignment = CenterAssignment(
        center={v: out[0] for v, out in outputs.items()},
        delta={v: out[1] for v, out in outputs.items()})
    return assignment, metrics


def exterior_edges(g: Graph, assignment: CenterAssignment) -> List[Tuple[int, int]]:
    """Edges whose endpoints chose different centers."""
    c = assignment.center
    return [(u, v) for u, v in g.edges() if c[u] != c[v]]


def cluster_diameters(g: Graph, assignment: CenterAssignment
                      ) -> Dict[int, Tuple[int, float]]:
    """Per-cluster (weak, strong) diameters.

    Weak = max pairwise hop distance in G; strong = within the induced
    subgraph, math.inf if the cluster is disconnected there.
    """
    result = {}
    for center, members in assignment.clusters().items():
        mset = set(members)
        weak = 0
        strong: float = 0
        for v in members:
            dist_g = bfs_distances(g, v)
            weak = max(weak, max(dist_g.get(u, 0) for u in members))
            dist_local = bfs_distances(g, v, restrict=mset)
            for u in members:
                if u not in dist_local:
                    strong = math.inf
                elif strong != math.inf:
                    strong = max(strong, dist_local[u])
        result[center] = (weak, strong)
    return result


def clusters_connected(g: Graph, assignment: CenterAssignment) -> bool:
    """True iff every cluster induces a connected subgraph."""
    for members in assignment.clusters().values():
        mset = set(members)
        reach = bfs_distances(g, members[0], restrict=mset)
        if len(reach) != len(members):
            return False
    return True
