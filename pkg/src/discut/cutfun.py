"""Cut and dicut objectives, marginal gains, and their local forms.

``cut_value``/``dicut_value`` recompute from scratch and serve as the
oracle for the incremental bookkeeping inside the distributed algorithms.
"""

from __future__ import annotations

from typing import Dict, Iterable, Set

from .graph import Graph

CutAssignment = Dict[int, int]  # vertex -> 0/1, 1 means v in S


def assignment_to_set(assignment: CutAssignment) -> Set[int]:
    return {v for v, side in assignment.items() if side == 1}


def cut_value(g: Graph, s: Iterable[int]) -> int:
    """Number of undirected edges with exactly one endpoint in s."""
    if g.directed:
        raise ValueError("cut_value is for undirected graphs; use dicut_value")
    ss = set(s)
    return sum(1 for u, v in g.edges() if (u in ss) != (v in ss))


def dicut_value(g: Graph, s: Iterable[int]) -> int:
    """Number of arcs directed from s to its complement."""
    if not g.directed:
        raise ValueError("dicut_value requires a directed graph")
    ss = set(s)
    return sum(1 for u, v in g.edges() if u in ss and v not in ss)


def objective(g: Graph, s: Iterable[int]) -> int:
    """cut_value or dicut_value depending on the graph kind."""
    return dicut_value(g, s) if g.directed else cut_value(g, s)


def marginal_add(g: Graph, x: Set[int], v: int) -> int:
    """f(X + v) - f(X), by whole-set recomputation."""
    if v in x:
        raise ValueError(f"vertex {v} already in X")
    return objective(g, x | {v}) - objective(g, x)


def marginal_remove(g: Graph, y: Set[int], v: int) -> int:
    """f(Y - v) - f(Y), by whole-set recomputation."""
    if v not in y:
        raise ValueError(f"vertex {v} not in Y")
    return objective(g, y - {v}) - objective(g, y)


def local_marginal_add(g: Graph, x_local: Set[int], v: int) -> int:
    """f(X_local + v) - f(X_local) from v's 1-neighborhood only.

    Requires X_local to be a subset of N(v); equals marginal_add(g, X, v)
    whenever X_local = X intersect N(v).
    """
    nv = set(g.neighbors(v))
    if v in x_local:
        raise ValueError(f"vertex {v} must not be in X_local")
    if not x_local <= nv:
        raise ValueError("X_local must be contained in N(v)")
    if g.directed:
        gained = sum(1 for w in g.out_neighbors(v) if w not in x_local)
        lost = sum(1 for u in g.in_neighbors(v) if u in x_local)
    else:
        gained = sum(1 for w in g.adj[v] if w not in x_local)
        lost = sum(1 for w in g.adj[v] if w in x_local)
    return gained - lost


def local_marginal_remove(g: Graph, y_local: Set[int], v: int) -> int:
    """f(Y - v) - f(Y) from v's 1-neighborhood, with Y_local = Y ∩ N(v).

    Removing v loses the arcs from v to outside Y and exposes the arcs
    from Y-members into v.
    """
    nv = set(g.neighbors(v))
    if not y_local <= nv:
        raise ValueError("Y_local must be contained in N(v)")
    if g.directed:
        gained = sum(1 for u in g.in_neighbors(v) if u in y_local)
        lost = sum(1 for w in g.out_neighbors(v) if w not in y_local)
    else:
        gained = sum(1 for w in g.adj[v] if w in y_local)
        lost = sum(1 for w in g.adj[v] if w not in y_local)
    return gained - lost
