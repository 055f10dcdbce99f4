"""Exact, exponential-time reference algorithms.

Everything here is plain backtracking or subset enumeration over bitmask
graphs; no heuristic can change an answer, only the time taken.  Practical
bound: roughly 16 vertices.  All searches are deterministic (ascending
vertex order), so returned witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph6 import emit_graph6
from .graphcore import Graph, _bits, add_dominating_vertex, coline, components, is_connected


@dataclass(frozen=True)
class CycleOrPath:
    """A simple cycle (closed) or simple path (open) in some host graph."""

    vertices: tuple[int, ...]
    closed: bool

    def __len__(self) -> int:
        return len(self.vertices)


def is_valid_in(walk: CycleOrPath, g: Graph) -> bool:
    """Check the walk really is a simple cycle/path of ``g``."""
    vs = walk.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    if walk.closed and len(vs) < 3:
        return False
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            return False
    if walk.closed and not g.has_edge(vs[-1], vs[0]):
        return False
    return True


@dataclass(frozen=True)
class ToughnessWitness:
    """A cutset S with c(G - S) > |S|, certifying non-toughness."""

    cutset: tuple[int, ...]
    components_after: int


@dataclass(frozen=True)
class ToughnessResult:
    value: bool
    witness: ToughnessWitness | None
    vacuous: bool  # no cutset exists at all (complete graphs)


@dataclass(frozen=True)
class IsoCertificate:
    """mapping[i] is the image in g2 of vertex i of g1."""

    mapping: tuple[int, ...]


def _component_count(adj: tuple[int, ...], remaining: int) -> int:
    count = 0
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                grow |= adj[low.bit_length() - 1] & remaining & ~comp
            comp |= grow
            frontier = grow
        remaining &= ~comp
        count += 1
    return count


def is_tough(g: Graph) -> ToughnessResult:
    """1-toughness: connected and c(G - S) <= |S| for every cutset S.

    Cutsets are enumerated by increasing size, lexicographically inside a
    size, and the first violating witness is returned.  Complete graphs
    have no cutset and come back vacuously tough.
    """
    if g.n == 0:
        return ToughnessResult(True, None, True)
    if not is_connected(g):
        count = len(components(g))
        return ToughnessResult(False, ToughnessWitness((), count), False)
    if g.m == g.n * (g.n - 1) // 2:
        return ToughnessResult(True, None, True)
    full = (1 << g.n) - 1
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            count = _component_count(g.adj, full & ~mask)
            if count > size and count >= 2:
                return ToughnessResult(False, ToughnessWitness(cut, count), False)
    return ToughnessResult(True, None, False)


def vertex_connectivity(g: Graph) -> int:
    """Minimum cutset size; n-1 for complete graphs, 0 when disconnected."""
    if g.n == 0:
        return 0
    if not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    full = (1 << g.n) - 1
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if _component_count(g.adj, full & ~mask) >= 2:
                return size
    return g.n - 1


# --- Hamiltonian cycle / path / longest cycle ------------------------------

def _cycle_extend(g: Graph, path: list[int], visited: int, full: int) -> bool:
    current = path[-1]
    if visited == full:
        return g.has_edge(current, path[0])
    remaining = full & ~visited
    # Every remaining vertex still needs two cycle neighbours drawn from the
    # remaining set plus the two open ends.
    ends = 1 << current | 1 << path[0]
    r = remaining
    while r:
        low = r & -r
        r ^= low
        if (g.adj[low.bit_length() - 1] & (remaining | ends)).bit_count() < 2:
            return False
    if _component_count(g.adj, remaining | 1 << current) > 1:
        return False
    for v in _bits(g.adj[current] & remaining):
        path.append(v)
        if _cycle_extend(g, path, visited | 1 << v, full):
            return True
        path.pop()
    return False


def hamiltonian_cycle(g: Graph) -> CycleOrPath | None:
    """A spanning cycle, or None.  Graphs on fewer than 3 vertices have none."""
    if g.n < 3 or not is_connected(g):
        return None
    if min(g.degrees()) < 2:
        return None
    full = (1 << g.n) - 1
    path = [0]
    if _cycle_extend(g, path, 1, full):
        return CycleOrPath(tuple(path), True)
    return None


def _path_extend(g: Graph, path: list[int], visited: int, full: int) -> bool:
    if visited == full:
        return True
    current = path[-1]
    remaining = full & ~visited
    if _component_count(g.adj, remaining | 1 << current) > 1:
        return False
    # At most one remaining vertex may be a dead end (the final endpoint).
    dead_ends = 0
    r = remaining
    while r:
        low = r & -r
        r ^= low
        avail = g.adj[low.bit_length() - 1] & (remaining | 1 << current)
        if avail.bit_count() < 2:
            if not avail:
                return False
            dead_ends += 1
            if dead_ends > 1:
                return False
    for v in _bits(g.adj[current] & remaining):
        path.append(v)
        if _path_extend(g, path, visited | 1 << v, full):
            return True
        path.pop()
    return False


def hamiltonian_path(g: Graph) -> CycleOrPath | None:
    """A spanning path, or None.  A single vertex counts as traceable."""
    if g.n == 0:
        return None
    if g.n == 1:
        return CycleOrPath((0,), False)
    if not is_connected(g):
        return None
    full = (1 << g.n) - 1
    for start in range(g.n):
        path = [start]
        if _path_extend(g, path, 1 << start, full):
            return CycleOrPath(tuple(path), False)
    return None


def longest_cycle(g: Graph) -> CycleOrPath | None:
    """A cycle of maximum length, or None for forests.

    Ties break to the first cycle found in the deterministic search order
    (ascending start vertex, ascending neighbours).
    """
    ham = hamiltonian_cycle(g)
    if ham is not None:
        return ham
    best: list[int] | None = None

    def search(path: list[int], visited: int, start: int) -> None:
        nonlocal best
        current = path[-1]
        if len(path) >= 3 and g.has_edge(current, start):
            if best is None or len(path) > len(best):
                best = list(path)
        # Upper bound: vertices still reachable from the current endpoint.
        comp = 1 << current
        frontier = comp
        allowed = ~visited | 1 << current
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= g.adj[v] & allowed & ~comp
            comp |= grow
            frontier = grow
        reachable = (comp & ~(1 << current)).bit_count()
        if best is not None and len(path) + reachable <= len(best):
            return
        for v in _bits(g.adj[current] & ~visited):
            if v <= start:
                continue
            path.append(v)
            search(path, visited | 1 << v, start)
            path.pop()

    for start in range(g.n):
        if best is not None and len(best) == g.n:
            break
        search([start], 1 << start, start)
    if best is None:
        return None
    return CycleOrPath(tuple(best), True)


# --- isomorphism, canonical forms ------------------------------------------

def _refine(g: Graph, colors: tuple[int, ...]) -> tuple[int, ...]:
    """Stable colour refinement; new colour ids depend only on invariants."""
    n = g.n
    while True:
        signatures = []
        for v in range(n):
            neigh = sorted(colors[u] for u in _bits(g.adj[v]))
            signatures.append((colors[v], tuple(neigh)))
        order = sorted(set(signatures))
        lookup = {sig: i for i, sig in enumerate(order)}
        new = tuple(lookup[sig] for sig in signatures)
        if new == colors:
            return new
        colors = new


def _cells(colors: tuple[int, ...]) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _adjacency_rows(g: Graph, ordering: list[int]) -> tuple[int, ...]:
    position = {v: i for i, v in enumerate(ordering)}
    rows = []
    for v in ordering:
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows)


def _canonical_adj(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n <= 1:
        return g.adj
    best: tuple[int, ...] | None = None

    def descend(colors: tuple[int, ...]) -> None:
        nonlocal best
        colors = _refine(g, colors)
        cells = _cells(colors)
        target = next((cell for cell in cells if len(cell) > 1), None)
        if target is None:
            ordering = [cell[0] for cell in cells]
            rows = _adjacency_rows(g, ordering)
            if best is None or rows < best:
                best = rows
            return
        for v in target:
            forced = tuple(
                c if u != v else -1 for u, c in enumerate(colors)
            )
            descend(forced)

    initial = tuple(g.degree(v) for v in range(n))
    descend(initial)
    assert best is not None
    return best


@lru_cache(maxsize=200_000)
def _canonical_cached(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, _canonical_adj(Graph(n, adj)))


def canonical_graph(g: Graph) -> Graph:
    """A canonically relabelled copy; equal for isomorphic inputs."""
    return _canonical_cached(g.n, g.adj)


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string (graph6 of the canonical relabelling)."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> IsoCertificate | None:
    """Explicit isomorphism search with refinement pruning.

    Independent of canonical_form; the two are cross-checked in tests.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.n
    if n == 0:
        return IsoCertificate(())
    colors1 = _refine(g1, tuple(g1.degree(v) for v in range(n)))
    colors2 = _refine(g2, tuple(g2.degree(v) for v in range(n)))
    if sorted(colors1) != sorted(colors2):
        return None
    by_color2: dict[int, list[int]] = {}
    for v, c in enumerate(colors2):
        by_color2.setdefault(c, []).append(v)
    # Map rarest colours first to fail fast.
    order = sorted(range(n), key=lambda v: (len(by_color2.get(colors1[v], ())), colors1[v], v))
    mapping: dict[int, int] = {}
    used = [False] * n

    def assign(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color2.get(colors1[v], ()):
            if used[w]:
                continue
            ok = True
            for placed_v, placed_w in mapping.items():
                if g1.has_edge(v, placed_v) != g2.has_edge(w, placed_w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if assign(i + 1):
                    return True
                del mapping[v]
                used[w] = False
        return False

    if assign(0):
        return IsoCertificate(tuple(mapping[v] for v in range(n)))
    return None


# --- subgraph containment ---------------------------------------------------

def _embed(host: Graph, pattern: Graph, induced: bool) -> bool:
    if pattern.n > host.n or pattern.m > host.m:
        return False
    if not induced:
        host_degs = sorted(host.degrees(), reverse=True)
        pat_degs = sorted(pattern.degrees(), reverse=True)
        if any(p > h for p, h in zip(pat_degs, host_degs)):
            return False
    # Place pattern vertices most-constrained first: inside the already
    # placed neighbourhood when possible, higher degree first.
    order: list[int] = []
    placed_mask = 0
    while len(order) < pattern.n:
        candidates = [v for v in range(pattern.n) if not placed_mask >> v & 1]
        candidates.sort(
            key=lambda v: (-(pattern.adj[v] & placed_mask).bit_count(), -pattern.degree(v), v)
        )
        v = candidates[0]
        order.append(v)
        placed_mask |= 1 << v

    images = [-1] * pattern.n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == pattern.n:
            return True
        v = order[i]
        for w in range(host.n):
            if used >> w & 1:
                continue
            if not induced and host.degree(w) < pattern.degree(v):
                continue
            ok = True
            for prior in order[:i]:
                need = pattern.has_edge(v, prior)
                have = host.has_edge(w, images[prior])
                if need and not have:
                    ok = False
                    break
                if induced and have and not need:
                    ok = False
                    break
            if ok:
                images[v] = w
                used |= 1 << w
                if place(i + 1):
                    return True
                used &= ~(1 << w)
                images[v] = -1
        return False

    return place(0)


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """Non-induced subgraph containment."""
    return _embed(host, pattern, induced=False)


def is_induced_free(host: Graph, pattern: Graph) -> bool:
    """True iff no vertex subset of host induces a copy of pattern."""
    return not _embed(host, pattern, induced=True)


# --- powers of Hamiltonian cycles, cms --------------------------------------

def contains_power_ham_cycle(l: Graph, k: int) -> bool:
    """Does some cyclic vertex ordering have all pairs at cyclic distance
    <= k adjacent?  k = 0 is trivially satisfiable; k = 1 is Hamiltonicity.
    """
    if k < 0:
        raise ValueError("power must be non-negative")
    if k == 0:
        return True
    n = l.n
    if n < 3:
        return False
    if 2 * k >= n - 1:
        return l.m == n * (n - 1) // 2
    if min(l.degrees()) < 2 * k:
        return False
    order = [0] * n
    used = [False] * n
    used[0] = True

    def place(i: int) -> bool:
        if i == n:
            return True
        for v in range(n):
            if used[v]:
                continue
            if i == n - 1 and order[1] > v:
                continue  # fix direction: second vertex smaller than last
            ok = True
            for back in range(max(0, i - k), i):
                if not l.has_edge(v, order[back]):
                    ok = False
                    break
            if ok and i >= n - k:
                for front in range(0, i + k - n + 1):
                    if not l.has_edge(v, order[front]):
                        ok = False
                        break
            if ok:
                order[i] = v
                used[v] = True
                if place(i + 1):
                    return True
                used[v] = False
        return False

    return place(1)


def cms_exact(g: Graph) -> int:
    """Largest k >= 1 with the coline graph containing the (k-1)-th power
    of a Hamiltonian cycle; 1 is always attainable.
    """
    if g.m == 0:
        raise ValueError("needs at least one edge")
    l, _ = coline(g)
    k = 1
    while k < g.m and contains_power_ham_cycle(l, k):
        k += 1
    return k


# --- root search -------------------------------------------------------------

@dataclass(frozen=True)
class RootSearch:
    roots: tuple[Graph, ...]
    complete: bool  # False when larger roots could exist beyond the budget


def _augmented(g: Graph, max_vertices: int):
    """All one-edge extensions keeping every vertex non-isolated."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                yield g.with_edge(u, v)
    if g.n + 1 <= max_vertices:
        for u in range(g.n):
            grown = Graph(g.n + 1, g.adj + (0,))
            yield grown.with_edge(u, g.n)
    if g.n + 2 <= max_vertices:
        grown = Graph(g.n + 2, g.adj + (0, 0))
        yield grown.with_edge(g.n, g.n + 1)


def iter_graph_classes(max_vertices: int, max_edges: int):
    """Isomorphism classes with 1..max_edges edges and no isolated vertices.

    Breadth-first edge augmentation: every class with m+1 edges arises from
    a class with m edges by adding one edge (deleting any edge and dropping
    the isolated endpoints inverts it), so the levels are complete.  Yields
    canonical representatives, sorted per level.
    """
    if max_vertices < 2 or max_edges < 1:
        return
    level = {canonical_form(Graph(2, (2, 1))): canonical_graph(Graph(2, (2, 1)))}
    for m in range(1, max_edges + 1):
        for key in sorted(level):
            yield level[key]
        if m == max_edges:
            break
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for child in _augmented(g, max_vertices):
                nxt.setdefault(canonical_form(child), canonical_graph(child))
        level = nxt


def find_roots(l: Graph, max_vertices: int = 8) -> RootSearch:
    """All isomorphism classes of graphs G without isolated vertices on at
    most ``max_vertices`` vertices with coline(G) isomorphic to ``l``.
    """
    if max_vertices > 8:
        raise ValueError("root search budget is max_vertices <= 8")
    m = l.n
    target = canonical_form(l)
    roots = []
    if m == 0:
        roots.append(Graph(0, ()))
    else:
        target_edges = l.m
        for g in iter_graph_classes(max_vertices, m):
            if g.m != m:
                continue
            pairs = m * (m - 1) // 2
            adjacent_pairs = sum(d * (d - 1) // 2 for d in g.degrees())
            if pairs - adjacent_pairs != target_edges:
                continue
            cg, _ = coline(g)
            if canonical_form(cg) == target:
                roots.append(g)
    complete = max_vertices >= 2 * m
    return RootSearch(tuple(roots), complete)
