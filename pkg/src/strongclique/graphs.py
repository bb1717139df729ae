"""Immutable simple-graph value type plus structural transforms and predicates.

Graphs are undirected, simple (no loops, no parallel edges), with vertices
labelled 0..n-1.  Adjacency is stored as one Python int bitmask per vertex,
which keeps set operations cheap and makes graphs hashable, comparable and
safe to share between threads.  Every transform is a pure function; transforms
that relabel vertices also return the relabelling so witnesses computed on the
result can be translated back to the input.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


class Graph:
    """An immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # Trusted constructor: `adj` must already be symmetric and loop-free.
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}", witness=(u, v))
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}",
                                 witness=(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def empty(n: int) -> "Graph":
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        return Graph(n, (0,) * n)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    v = 0
    while mask:
        t = mask & -mask
        v = t.bit_length() - 1
        out.append(v)
        mask ^= t
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.n):
            raise InputError(f"vertex label {v} out of range for n={g.n}",
                             witness=v)
    return s


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = list(s)
    smask = mask_of(vs)
    return all((g.adj[v] | 1 << v) & smask == smask for v in vs)


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    vs = list(s)
    smask = mask_of(vs)
    return all(g.adj[v] & smask == 0 for v in vs)


def is_maximal_independent_set(g: Graph, s: Iterable[int]) -> bool:
    vs = frozenset(s)
    if not is_independent_set(g, vs):
        return False
    smask = mask_of(vs)
    dominated = smask
    for v in vs:
        dominated |= g.adj[v]
    return dominated == (1 << g.n) - 1 if g.n else True


# -- transforms ------------------------------------------------------------


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the missing edges."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``, relabelled 0..|s|-1 preserving label order.

    Returns the subgraph and the tuple of original labels (index = new label).
    """
    keep = sorted(check_vertex_set(g, s))
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(keep), tuple(adj)), tuple(keep)


def line_graph(h: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Intersection graph of the edge set of ``h``.

    Vertex i of the result is edge ``edge_map[i]`` of ``h``; two vertices are
    adjacent iff the corresponding edges share an endpoint.
    """
    edge_map = tuple(h.edges())
    k = len(edge_map)
    incident: list[int] = [0] * h.n  # vertex of h -> mask of incident edge ids
    for i, (u, v) in enumerate(edge_map):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    adj = [0] * k
    for i, (u, v) in enumerate(edge_map):
        adj[i] = (incident[u] | incident[v]) & ~(1 << i)
    return Graph(k, tuple(adj)), edge_map


def corona(g: Graph) -> Graph:
    """Attach one private pendant neighbour to every vertex.

    The result has 2n vertices; vertex n+i is adjacent only to vertex i.
    """
    n = g.n
    adj = list(g.adj) + [0] * n
    for i in range(n):
        adj[i] |= 1 << (n + i)
        adj[n + i] = 1 << i
    return Graph(2 * n, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    adj = list(a.adj) + [mask << a.n for mask in b.adj]
    return Graph(a.n + b.n, tuple(adj))


# -- predicates ------------------------------------------------------------


def components(g: Graph) -> list[frozenset[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for u in range(g.n):
        for v in bits(g.adj[u] & ~((1 << (u + 1)) - 1)):
            common = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def find_induced_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle (a, b, c, d) with edges ab, bc, cd, da, or None."""
    for a in range(g.n):
        for c in range(a + 1, g.n):
            if g.has_edge(a, c):
                continue
            common = g.adj[a] & g.adj[c]
            cbits = bits(common)
            for i, b in enumerate(cbits):
                for d in cbits[i + 1:]:
                    if not g.has_edge(b, d):
                        return (a, b, c, d)
    return None


def is_c4_free(g: Graph) -> bool:
    """True when g has no induced 4-cycle (4-cycles inside cliques are fine)."""
    return find_induced_c4(g) is None


def regularity(g: Graph) -> int | None:
    """k when g is k-regular, else None.  The empty graph counts as 0-regular."""
    if g.n == 0:
        return 0
    degs = {m.bit_count() for m in g.adj}
    return degs.pop() if len(degs) == 1 else None


def is_regular(g: Graph, k: int) -> bool:
    return regularity(g) == k


def is_bipartite(g: Graph) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | tuple[int, ...]]:
    """Two-colourability with evidence.

    Returns (True, (side0, side1)) or (False, odd_cycle) where odd_cycle is a
    vertex tuple of an odd closed walk boundary (a genuine odd cycle).
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    return False, _odd_cycle(parent, u, v)
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return True, (side0, side1)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    path_u, path_v = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(path_u)
        path_u.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        path_v.append(x)
    cut = seen[x]
    cycle = path_u[:cut + 1][::-1] + path_v[:-1]
    return tuple(cycle)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Bipartition of a bipartite graph; InputError with odd-cycle witness otherwise."""
    ok, evidence = is_bipartite(g)
    if not ok:
        raise InputError("graph is not bipartite", witness=evidence)
    return evidence  # type: ignore[return-value]


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (a, b, c) with a < b < c."""
    out = []
    for a in range(g.n):
        above_a = g.adj[a] & ~((1 << (a + 1)) - 1)
        for b in bits(above_a):
            common = g.adj[a] & g.adj[b] & ~((1 << (b + 1)) - 1)
            for c in bits(common):
                out.append((a, b, c))
    return out
