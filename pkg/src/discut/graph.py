"""Static simple graphs: representation, generators, and edge-list files.

Vertex ids are dense integers 0..n-1.  "Lowest id" tie-breaks everywhere in
the library are plain integer comparisons on these ids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple


class GraphFormatError(ValueError):
    """Raised for malformed edge-list documents or illegal edges."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    For directed graphs ``adj`` holds out-neighbors and ``in_adj`` holds
    in-neighbors; for undirected graphs they are the same object.  Neighbor
    lists are sorted tuples.
    """

    n: int
    directed: bool
    adj: Tuple[Tuple[int, ...], ...]
    in_adj: Tuple[Tuple[int, ...], ...]
    m: int
    # Optional bipartition (side-0 vertex set) recorded by the bipartite
    # generator; used only by tests, never exposed to vertex programs.
    bipartition: Optional[frozenset] = field(default=None, compare=False)

    def degree(self, v: int) -> int:
        """Total degree (out + in for directed graphs)."""
        if self.directed:
            return len(self.adj[v]) + len(self.in_adj[v])
        return len(self.adj[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """All neighbors of v, regardless of edge direction."""
        if self.directed:
            return tuple(sorted(set(self.adj[v]) | set(self.in_adj[v])))
        return self.adj[v]

    def out_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def in_neighbors(self, v: int) -> Tuple[int, ...]:
        return self.in_adj[v]

    def edges(self) -> Iterable[Tuple[int, int]]:
        """Edges as (u, v); u < v for undirected graphs."""
        for u in range(self.n):
            for v in self.adj[u]:
                if self.directed or u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def build_graph(n: int, edges: Iterable[Tuple[int, int]], directed: bool = False,
                bipartition: Optional[Iterable[int]] = None) -> Graph:
    """Construct a Graph, rejecting self-loops and duplicate edges."""
    seen = set()
    out: List[set] = [set() for _ in range(n)]
    inn: List[set] = [set() for _ in range(n)]
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({u}, {v})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        m += 1
        if directed:
            out[u].add(v)
            inn[v].add(u)
        else:
            out[u].add(v)
            out[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in out)
    if directed:
        in_adj = tuple(tuple(sorted(s)) for s in inn)
    else:
        in_adj = adj
    bp = frozenset(bipartition) if bipartition is not None else None
    return Graph(n=n, directed=directed, adj=adj, in_adj=in_adj, m=m, bipartition=bp)


def max_degree(g: Graph) -> int:
    """Maximal (total) degree of the graph."""
    if g.n == 0:
        return 0
    return max(g.degree(v) for v in range(g.n))


def connected_components(g: Graph) -> List[List[int]]:
    """Components of the underlying undirected graph, each sorted by id."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def bfs_distances(g: Graph, source: int, restrict: Optional[set] = None) -> dict:
    """Hop distances from source over the underlying undirected graph.

    If ``restrict`` is given, the search stays inside that vertex set.
    """
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if w in dist:
                    continue
                if restrict is not None and w not in restrict:
                    continue
                dist[w] = dist[u] + 1
                nxt.append(w)
        frontier = nxt
    return dist


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Tuple[Graph, List[int]]:
    """Induced subgraph with vertices relabeled 0..k-1.

    Returns the subgraph and the list mapping new id -> original id.
    """
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    edges = []
    for u, v in g.edges():
        if u in index and v in index:
            edges.append((index[u], index[v]))
    return build_graph(len(order), edges, directed=g.directed), order


# ---------------------------------------------------------------------------
# Generators

def gen_gnp(n: int, p: float, seed: int, directed: bool = False) -> Graph:
    """G(n, p): each (ordered) pair kept independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(n):
            if directed:
                if u != v and rng.random() < p:
                    edges.append((u, v))
            else:
                if u < v and rng.random() < p:
                    edges.append((u, v))
    return build_graph(n, edges, directed=directed)


def gen_even_cycle(n: int) -> Graph:
    """Even cycle v0-v1-...-v(n-1)-v0."""
    if n < 4 or n % 2 != 0:
        raise ValueError(f"even cycle requires even n >= 4, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n, edges)


def gen_random_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Random bipartite graph on sides {0..n1-1} and {n1..n1+n2-1}.

    The generating bipartition is recorded on the Graph for test assertions
    only; nothing in the distributed algorithms reads it.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both sides must be non-empty")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n1):
        for v in range(n1, n1 + n2):
            if rng.random() < p:
                edges.append((u, v))
    return build_graph(n1 + n2, edges, bipartition=range(n1))


def gen_complete(n: int, directed: bool = False) -> Graph:
    """K_n; for directed graphs every ordered pair becomes an arc."""
    if directed:
        edges = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_graph(n, edges, directed=directed)


# ---------------------------------------------------------------------------
# Edge-list files

def serialize_edge_list(g: Graph) -> str:
    """Render the graph in the line-oriented edge-list format."""
    lines = [f"# n={g.n} directed={1 if g.directed else 0}"]
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    Format: header ``# n=<int> directed=<0|1>``, then one ``u v`` pair per
    line; ``#``-prefixed comment lines are ignored.
    """
    n = None
    directed = False
    edges = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if not header_seen and body.startswith("n="):
                fields = dict(part.split("=", 1) for part in body.split())
                try:
                    n = int(fields["n"])
                    directed = bool(int(fields.get("directed", "0")))
                except (KeyError, ValueError) as exc:
                    raise GraphFormatError(f"line {lineno}: bad header: {body}") from exc
                header_seen = True
            continue
        if not header_seen:
            raise GraphFormatError(f"line {lineno}: edge before header")
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {line!r}") from exc
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header line '# n=<int> directed=<0|1>'")
    try:
        return build_graph(n, edges, directed=directed)
    except GraphFormatError:
        raise


def is_bipartite(g: Graph) -> bool:
    """2-colorability check by BFS over the underlying undirected graph."""
    color = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.neighbors(u):
                    if w not in color:
                        color[w] = 1 - color[u]
                        nxt.append(w)
                    elif color[w] == color[u]:
                        return False
            frontier = nxt
    return True
