"""Ground-truth and baseline solvers used for acceptance testing."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Sequence

from . import kernels
from .cutfun import CutAssignment, cut_value, dicut_value, objective
from .graph import Graph

BRUTE_FORCE_CAP = 24


@dataclass(frozen=True)
class OracleResult:
    opt_value: int
    witness: CutAssignment
    enumerated: int


def _adj_masks(g: Graph) -> List[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _mask_to_assignment(mask: int, n: int) -> CutAssignment:
    return {v: (mask >> v) & 1 for v in range(n)}


def brute_force_maxcut(g: Graph, cap: int = BRUTE_FORCE_CAP) -> OracleResult:
    """Exact Max-Cut by exhaustive enumeration (symmetry-halved)."""
    if g.directed:
        raise ValueError("brute_force_maxcut expects an undirected graph")
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the brute-force cap {cap}")
    opt, mask, enumerated = kernels.maxcut_bruteforce(_adj_masks(g), g.n)
    witness = _mask_to_assignment(mask, g.n)
    # Self-checks: the witness realizes the optimum and OPT >= m/2.
    assert cut_value(g, {v for v, s in witness.items() if s}) == opt
    assert 2 * opt >= g.m
    return OracleResult(opt_value=opt, witness=witness, enumerated=enumerated)


def brute_force_maxdicut(g: Graph, cap: int = BRUTE_FORCE_CAP) -> OracleResult:
    """Exact Max-Dicut by exhaustive enumeration over all subsets."""
    if not g.directed:
        raise ValueError("brute_force_maxdicut expects a directed graph")
    if g.n > cap:
        raise ValueError(f"n={g.n} exceeds the brute-force cap {cap}")
    out_masks = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
    in_masks = [sum(1 << w for w in g.in_adj[v]) for v in range(g.n)]
    opt, mask, enumerated = kernels.maxdicut_bruteforce(out_masks, in_masks, g.n)
    witness = _mask_to_assignment(mask, g.n)
    assert dicut_value(g, {v for v, s in witness.items() if s}) == opt
    assert 4 * opt >= g.m
    return OracleResult(opt_value=opt, witness=witness, enumerated=enumerated)


def brute_force(g: Graph, cap: int = BRUTE_FORCE_CAP) -> OracleResult:
    return brute_force_maxdicut(g, cap) if g.directed else brute_force_maxcut(g, cap)


def random_cut(g: Graph, seed: int) -> CutAssignment:
    """Independent uniform side per vertex; zero communication."""
    rng = random.Random(seed)
    return {v: rng.randrange(2) for v in range(g.n)}


def sequential_greedy_maxcut(g: Graph, order: Sequence[int]) -> CutAssignment:
    """Place each vertex on the side minoritized among placed neighbors."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    side: Dict[int, int] = {}
    for v in order:
        in_s = sum(1 for w in g.adj[v] if side.get(w) == 1)
        in_sbar = sum(1 for w in g.adj[v] if side.get(w) == 0)
        side[v] = 1 if in_s <= in_sbar else 0
    return side


def naive_maxcut(g: Graph) -> int:
    """Direct recomputation oracle for cross-checking the Gray-code kernel."""
    best = 0
    for mask in range(1 << g.n):
        s = {v for v in range(g.n) if mask & (1 << v)}
        best = max(best, objective(g, s))
    return best
