"""Optimal cut assignment for a handful of free vertices.

Used by cluster leaders and high-degree component solvers: given an edge
set, a list of still-free vertices and fixed sides for every other endpoint,
find sides for the free vertices maximizing the number of cut edges.  Small
instances are solved exactly by a Gray-code subset walk; larger ones fall
back to a sequential greedy pass in ascending id order.

Everything here is deterministic (value ties break toward the numerically
smallest subset mask), so replicas that hold the same data compute the same
solution without further communication.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

DEFAULT_EXACT_CAP = 24


def _edge_cut(edges, side, directed) -> int:
    if directed:
        return sum(1 for u, v in edges if side[u] == 1 and side[v] == 0)
    return sum(1 for u, v in edges if side[u] != side[v])


def solve_subproblem(free: Sequence[int], edges: List[Tuple[int, int]],
                     fixed: Dict[int, int], directed: bool,
                     exact_cap: int = DEFAULT_EXACT_CAP
                     ) -> Tuple[Dict[int, int], str, int]:
    """Maximize the cut over ``edges``; free sides chosen, fixed sides given.

    Every edge endpoint must be either free or fixed.  Returns
    (sides for free vertices, method used, achieved value over ``edges``).
    """
    free = sorted(free)
    if len(free) <= exact_cap:
        sides = _solve_exact(free, edges, fixed, directed)
        method = "exact"
    else:
        sides = _solve_greedy(free, edges, fixed, directed)
        method = "greedy"
    full = dict(fixed)
    full.update(sides)
    return sides, method, _edge_cut(edges, full, directed)


def _solve_exact(free, edges, fixed, directed):
    k = len(free)
    index = {v: i for i, v in enumerate(free)}
    # Per free vertex: bitmasks of free neighbors and counts of fixed ones.
    out_free = [0] * k
    in_free = [0] * k
    outdeg = [0] * k
    fixed_out_s = [0] * k   # fixed out-neighbors sitting in S
    fixed_in_s = [0] * k    # fixed in-neighbors sitting in S
    for u, v in edges:
        iu, iv = index.get(u), index.get(v)
        if iu is None and iv is None:
            continue
        if iu is not None and iv is not None:
            out_free[iu] |= 1 << iv
            in_free[iv] |= 1 << iu
            outdeg[iu] += 1
            if not directed:
                out_free[iv] |= 1 << iu
                in_free[iu] |= 1 << iv
                outdeg[iv] += 1
        elif iu is not None:
            outdeg[iu] += 1
            if fixed[v] == 1:
                fixed_out_s[iu] += 1
            if not directed and fixed[v] == 1:
                fixed_in_s[iu] += 1
        else:
            if fixed[u] == 1:
                fixed_in_s[iv] += 1
            if not directed:
                outdeg[iv] += 1
                if fixed[u] == 1:
                    fixed_out_s[iv] += 1
    # Start from the all-free-out-of-S configuration.
    side0 = dict(fixed)
    side0.update({v: 0 for v in free})
    base = _edge_cut(edges, side0, directed)

    best_val = base
    best_mask = 0
    cur = base
    s = 0
    for i in range(1, 1 << k):
        iv = (i & -i).bit_length() - 1
        bit = 1 << iv
        if s & bit:
            s ^= bit
            s_wo = s
            sign = -1
        else:
            s_wo = s
            s ^= bit
            sign = 1
        if directed:
            out_not_s = (outdeg[iv] - (out_free[iv] & s_wo).bit_count()
                         - fixed_out_s[iv])
            in_in_s = (in_free[iv] & s_wo).bit_count() + fixed_in_s[iv]
            delta = out_not_s - in_in_s
        else:
            in_s = (out_free[iv] & s_wo).bit_count() + fixed_out_s[iv]
            delta = outdeg[iv] - 2 * in_s
        cur += sign * delta
        if cur > best_val or (cur == best_val and s < best_mask):
            best_val = cur
            best_mask = s
    return {v: (best_mask >> i) & 1 for i, v in enumerate(free)}


def _solve_greedy(free, edges, fixed, directed):
    """Sequential greedy over the free vertices in ascending id order.

    Matches the coloring-greedy decision rules: minority side for undirected
    cuts, the marginal-profit comparison for directed ones.  Later free
    vertices count as still-undecided.
    """
    out_nbrs: Dict[int, List[int]] = {v: [] for v in free}
    in_nbrs: Dict[int, List[int]] = {v: [] for v in free}
    freeset = set(free)
    for u, v in edges:
        if u in freeset:
            out_nbrs[u].append(v)
            if not directed:
                in_nbrs[u].append(v)
        if v in freeset:
            in_nbrs[v].append(u)
            if not directed:
                out_nbrs[v].append(u)
    decided = dict(fixed)
    sides: Dict[int, int] = {}
    for v in free:
        if directed:
            a = (sum(1 for w in out_nbrs[v] if decided.get(w) != 1)
                 - sum(1 for w in in_nbrs[v] if decided.get(w) == 1))
            b = (sum(1 for w in in_nbrs[v] if decided.get(w) != 0)
                 - sum(1 for w in out_nbrs[v] if decided.get(w) == 0))
            sides[v] = 1 if a >= b else 0
        else:
            in_s = sum(1 for w in out_nbrs[v] if decided.get(w) == 1)
            in_sbar = sum(1 for w in out_nbrs[v] if decided.get(w) == 0)
            sides[v] = 1 if in_s <= in_sbar else 0
        decided[v] = sides[v]
    return sides
