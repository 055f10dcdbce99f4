"""Core graph type and the constructions everything else is built on.

Graphs are simple, undirected and labelled with dense vertex indices
0..n-1.  Adjacency is stored as one integer bitmask per vertex, which keeps
all the small-graph searches in this package fast and allocation-free.
Graph values are immutable and hashable; every operation returns a new
graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  The constructor
    enforces symmetry and irreflexivity.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"vertex {v} has a self-loop")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    def max_degree(self) -> int:
        return max((mask.bit_count() for mask in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> tuple[Edge, ...]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(rest):
                out.append((u, v))
        return tuple(out)

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise ValueError("no self-loops")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def subgraph(self, vertices: tuple[int, ...]) -> Graph:
        """Induced subgraph, relabelled by position in ``vertices``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for v in vertices:
            for u in _bits(self.adj[v]):
                if u in index:
                    adj[index[v]] |= 1 << index[u]
        return Graph(len(vertices), tuple(adj))

    @staticmethod
    def from_edges(n: int, edges) -> Graph:
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(g: Graph, within: int | None = None) -> tuple[int, ...]:
    """Connected components as vertex bitmasks, ordered by smallest member.

    ``within`` restricts the search to an induced vertex subset.
    """
    remaining = (1 << g.n) - 1 if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= g.adj[v] & remaining & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        remaining &= ~comp
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


@dataclass(frozen=True)
class GraphStats:
    m: int
    max_degree: int
    degrees: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]


def basic_stats(g: Graph) -> GraphStats:
    """Edge count, maximum degree, degree sequence and component partition."""
    comps = tuple(tuple(_bits(mask)) for mask in components(g))
    return GraphStats(g.m, g.max_degree(), g.degrees(), comps)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj)))


def line_graph(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Line graph of ``g`` plus the edge list indexing its vertices.

    Vertex i of the result is ``edge_list[i]``; two vertices are adjacent
    exactly when the corresponding edges of ``g`` share an endpoint.
    """
    edge_list = g.edges()
    k = len(edge_list)
    adj = [0] * k
    for i, (a, b) in enumerate(edge_list):
        for j in range(i + 1, k):
            c, d = edge_list[j]
            if a == c or a == d or b == c or b == d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(k, tuple(adj)), edge_list


def coline(g: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Complement of the line graph; vertex i of the result is edge i of g."""
    lg, edge_list = line_graph(g)
    return complement(lg), edge_list


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [mask << g1.n for mask in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def add_dominating_vertex(g: Graph) -> Graph:
    """Add one new vertex adjacent to every existing vertex."""
    new = g.n
    adj = [mask | 1 << new for mask in g.adj]
    adj.append((1 << g.n) - 1)
    return Graph(g.n + 1, tuple(adj))


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj[v] & ~seen
        for v in _bits(grow):
            dist[v] = d
        seen |= grow
        frontier = grow
    return dist


def graph_power(g: Graph, k: int) -> Graph:
    """Same vertices; u ~ v iff their distance in ``g`` is between 1 and k."""
    if k < 1:
        raise ValueError("power must be at least 1")
    adj = [0] * g.n
    for v in range(g.n):
        for u, d in enumerate(distances_from(g, v)):
            if 0 < d <= k:
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def strip_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop degree-0 vertices; returns the core and the kept original indices."""
    kept = tuple(v for v in range(g.n) if g.adj[v])
    if len(kept) == g.n:
        return g, kept
    return g.subgraph(kept), kept


# --- named constructions ---------------------------------------------------

def _complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _star(leaves: int) -> Graph:
    if leaves < 1:
        raise ValueError("stars need at least 1 leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _f_graph(k: int) -> Graph:
    """Star with k leaves plus one edge joining two leaves (F_2 is K3)."""
    if k < 2:
        raise ValueError("F_k needs k >= 2")
    return _star(k).with_edge(1, 2)


def _net() -> Graph:
    """Triangle with one pendant vertex attached to each corner."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


_FIXED = {
    "K4_minus": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "K3_plus": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "K3_circ_K1": _net,
    "H1": lambda: _net().with_edge(3, 4),
    "H2": lambda: Graph.from_edges(7, _net().edges() + ((3, 6),)),
    "H3": lambda: disjoint_union(_net(), _complete(2)),
    "Petersen": _petersen,
}

_PARAMETRIC = (
    (re.compile(r"^K(\d+)$"), lambda n: _complete(n), 0),
    (re.compile(r"^C(\d+)$"), lambda n: _cycle(n), 3),
    (re.compile(r"^P(\d+)$"), lambda n: _path(n), 1),
    (re.compile(r"^K1_(\d+)$"), lambda n: _star(n), 1),
    (re.compile(r"^F(\d+)$"), lambda n: _f_graph(n), 2),
)


def _build_atom(name: str) -> Graph:
    if name in _FIXED:
        return _FIXED[name]()
    for pattern, builder, minimum in _PARAMETRIC:
        match = pattern.match(name)
        if match:
            value = int(match.group(1))
            if value < minimum:
                raise ValueError(f"parameter {value} too small for {name!r}")
            return builder(value)
    raise ValueError(f"unknown graph name {name!r}")


def build_named(spec: str) -> Graph:
    """Construct a graph from a name.

    Atoms: ``K<n>``, ``C<n>``, ``P<n>``, ``K1_<leaves>``, ``F<k>``,
    ``K4_minus``, ``K3_plus``, ``K3_circ_K1``, ``H1``, ``H2``, ``H3``,
    ``Petersen``.  Atoms may be joined with ``+`` for disjoint unions and
    prefixed with a count, e.g. ``K3+2K2``.
    """
    result: Graph | None = None
    for part in spec.split("+"):
        part = part.strip()
        count = 1
        match = re.match(r"^(\d+)(?=[A-Z])", part)
        if match:
            count = int(match.group(1))
            part = part[match.end():]
        if count < 1 or not part:
            raise ValueError(f"bad component {part!r} in {spec!r}")
        atom = _build_atom(part)
        for _ in range(count):
            result = atom if result is None else disjoint_union(result, atom)
    if result is None:
        raise ValueError("empty graph name")
    return result
