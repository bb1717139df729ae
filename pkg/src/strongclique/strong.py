"""Strongness of cliques, vertices and triangles.

A clique is strong when it meets every maximal independent set; a vertex
(resp. triangle) of a graph is strong when every maximal matching covers it
(resp. contains one of its edges).  Each notion gets an exact oracle plus the
polynomial tests that replace it on restricted inputs: the
neighbourhood-join test for edges, simpliciality for cliques of graphs with
no induced C4, Hall-style matching tests for bipartite vertices, and the
bull/pendant-subgraph trichotomy for triangles.  Every returned witness is
re-verified before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import InputError
from .graphs import (Edge, Graph, bits, check_vertex_set, find_induced_c4,
                     induced_subgraph, is_clique, is_maximal_independent_set,
                     line_graph, mask_of)
from .limits import OracleLimits, default_limits


@dataclass(frozen=True)
class StrongnessVerdict:
    """Verdict with refutation evidence; witness present iff not strong."""

    strong: bool
    witness: object | None = None


@dataclass(frozen=True)
class TriangleClassification:
    """Structural class of a strong triangle, or a bull refuting strongness.

    kind is one of "pendant-triangle", "in-pendant-diamond", "in-pendant-K4",
    "not-strong".  For the pendant kinds, ``root`` is the unique attachment
    vertex and ``subgraph`` the pendant subgraph's vertex set.  For
    "not-strong", ``bull`` is a vertex 5-tuple (a, b, c, d, e) carrying the
    bull's edges ab, bc, cd, be, ce with {b, c, e} the triangle.
    """

    kind: str
    root: int | None = None
    subgraph: frozenset[int] | None = None
    bull: tuple[int, int, int, int, int] | None = None


def _limits(limits: OracleLimits | None) -> OracleLimits:
    return limits if limits is not None else default_limits()


def _require_clique(g: Graph, c) -> frozenset[int]:
    cset = check_vertex_set(g, c)
    if not cset:
        raise InputError("empty vertex set is not an admissible clique")
    if not is_clique(g, cset):
        raise InputError(f"vertex set {sorted(cset)} is not a clique",
                         witness=cset)
    return cset


def is_strong_clique(g: Graph, c, limits: OracleLimits | None = None
                     ) -> StrongnessVerdict:
    """Exact test: does every maximal independent set intersect the clique?

    Short-circuits through a direct search for an independent subset of N(c)
    dominating c (such a set extends to a maximal independent set avoiding c,
    and conversely any avoiding maximal independent set contains one), so
    full enumeration is never needed.  The witness is a maximal independent
    set disjoint from c.
    """
    _limits(limits).check_enum_vertices(g.n, "strong clique oracle")
    cset = _require_clique(g, c)
    cmask = mask_of(cset)
    nbhood = 0
    for v in cset:
        nbhood |= g.adj[v]
    cand = nbhood & ~cmask
    j = _kernels.independent_dominating_set(g.n, g.adj, cand, cmask)
    if j == -1:
        return StrongnessVerdict(strong=True)
    witness = _extend_to_mis_avoiding(g, j, cmask)
    return StrongnessVerdict(strong=False, witness=witness)


def _extend_to_mis_avoiding(g: Graph, seed_mask: int, avoid_mask: int
                            ) -> frozenset[int]:
    """Greedily extend an independent seed to a maximal independent set of g
    inside the complement of ``avoid_mask`` (the seed must dominate it)."""
    smask = seed_mask
    closed = seed_mask
    for v in bits(seed_mask):
        closed |= g.adj[v]
    for v in range(g.n):
        b = 1 << v
        if b & (closed | avoid_mask):
            continue
        smask |= b
        closed |= b | g.adj[v]
    witness = frozenset(bits(smask))
    if smask & avoid_mask or not is_maximal_independent_set(g, witness):
        raise AssertionError("witness extension produced an invalid set")
    return witness


def is_strong_edge(g: Graph, e: Edge) -> bool:
    """Polynomial two-clique test: the edge lies in no triangle and the two
    endpoint neighbourhoods are completely joined to each other."""
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
        raise InputError(f"({u}, {v}) is not an edge of the graph",
                         witness=(u, v))
    if g.adj[u] & g.adj[v]:
        return False
    au = g.adj[u] & ~(1 << v)
    av = g.adj[v] & ~(1 << u)
    for x in bits(au):
        if av & ~g.adj[x]:
            return False
    return True


def simplicial_cliques(g: Graph
                       ) -> tuple[list[tuple[int, frozenset[int]]],
                                  list[frozenset[int]]]:
    """Pairs (v, N[v]) over simplicial vertices v, plus the deduplicated
    clique list in first-seen order."""
    pairs: list[tuple[int, frozenset[int]]] = []
    seen: set[frozenset[int]] = set()
    cliques: list[frozenset[int]] = []
    for v in range(g.n):
        nv = g.adj[v]
        if all((g.adj[u] | 1 << u) & nv == nv for u in bits(nv)):
            c = frozenset(bits(nv | 1 << v))
            pairs.append((v, c))
            if c not in seen:
                seen.add(c)
                cliques.append(c)
    return pairs, cliques


def is_strong_clique_c4free(g: Graph, c) -> bool:
    """In a graph with no induced C4, a clique is strong iff it is simplicial."""
    c4 = find_induced_c4(g)
    if c4 is not None:
        raise InputError(f"graph has an induced C4 {c4}", witness=c4)
    cset = _require_clique(g, c)
    cmask = mask_of(cset)
    return any(g.adj[v] | 1 << v == cmask for v in cset)


def _matching_masks(h: Graph) -> tuple[list[int], list[int], tuple[Edge, ...]]:
    """Maximal matchings of h as line-graph masks, plus per-vertex incidence."""
    lg, edge_map = line_graph(h)
    incident = [0] * h.n
    for i, (u, v) in enumerate(edge_map):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    masks = _kernels.maximal_independent_sets(lg.n, lg.adj)
    return masks, incident, edge_map


def is_strong_vertex(h: Graph, v: int, limits: OracleLimits | None = None
                     ) -> StrongnessVerdict:
    """Oracle: every maximal matching covers v.  Witness: one that misses it."""
    if not 0 <= v < h.n:
        raise InputError(f"vertex label {v} out of range", witness=v)
    _limits(limits).check_enum_edges(h.m, "strong vertex oracle")
    masks, incident, edge_map = _matching_masks(h)
    for mask in masks:
        if mask & incident[v] == 0:
            witness = frozenset(edge_map[i] for i in bits(mask))
            return StrongnessVerdict(strong=False, witness=witness)
    return StrongnessVerdict(strong=True)


def is_strong_vertex_bipartite(h: Graph, v: int) -> bool:
    """Polynomial test: v is strong iff no matching of h - v saturates N(v).

    Only the vertices at distance one or two from v matter, so this is one
    bipartite matching computation on that local subgraph.
    """
    if not 0 <= v < h.n:
        raise InputError(f"vertex label {v} out of range", witness=v)
    from .graphs import is_bipartite
    if not is_bipartite(h)[0]:
        raise InputError("graph is not bipartite")
    nv = h.adj[v]
    if nv == 0:
        return False  # no maximal matching ever covers an isolated vertex
    reach = 0
    for a in bits(nv):
        reach |= h.adj[a]
    reach = (reach | nv) & ~(1 << v)
    local, labels = induced_subgraph(h, bits(reach))
    pos = {old: new for new, old in enumerate(labels)}
    targets = [pos[a] for a in bits(nv)]
    from .matching import _kuhn
    _, failed, _ = _kuhn(local, sorted(targets))
    return failed is not None


def find_bull_containing(h: Graph, t) -> tuple[int, int, int, int, int] | None:
    """A bull subgraph containing triangle t: two disjoint pendant edges
    hanging off two distinct triangle vertices.  Returns (a, b, c, d, e) with
    edges ab, bc, cd, be, ce, or None."""
    tset = sorted(check_vertex_set(h, t))
    tmask = mask_of(tset)
    outside = {x: h.adj[x] & ~tmask for x in tset}
    for i in range(3):
        for jj in range(i + 1, 3):
            u, w = tset[i], tset[jj]
            au, aw = outside[u], outside[w]
            if not au or not aw:
                continue
            if au & ~aw:
                x = (au & ~aw & -(au & ~aw)).bit_length() - 1
                y = (aw & -aw).bit_length() - 1
            elif aw & ~au:
                y = (aw & ~au & -(aw & ~au)).bit_length() - 1
                x = (au & -au).bit_length() - 1
            elif au.bit_count() >= 2:  # au == aw with two or more options
                x = (au & -au).bit_length() - 1
                rest = au & ~(1 << x)
                y = (rest & -rest).bit_length() - 1
            else:
                continue
            third = next(z for z in tset if z not in (u, w))
            bull = (x, u, w, y, third)
            _verify_bull(h, bull)
            return bull
    return None


def _verify_bull(h: Graph, bull: tuple[int, int, int, int, int]) -> None:
    a, b, c, d, e = bull
    edges = [(a, b), (b, c), (c, d), (b, e), (c, e)]
    if len(set(bull)) != 5 or not all(h.has_edge(u, v) for u, v in edges):
        raise AssertionError(f"constructed bull {bull} is invalid")


def _require_triangle(h: Graph, t) -> list[int]:
    tset = sorted(check_vertex_set(h, t))
    if len(tset) != 3 or not is_clique(h, tset):
        raise InputError(f"{sorted(check_vertex_set(h, t))} is not a triangle",
                         witness=t)
    return tset


def is_strong_triangle(h: Graph, t, limits: OracleLimits | None = None
                       ) -> StrongnessVerdict:
    """Oracle: every maximal matching contains an edge of the triangle.
    Witness: a maximal matching avoiding all three edges."""
    tset = _require_triangle(h, t)
    _limits(limits).check_enum_edges(h.m, "strong triangle oracle")
    masks, incident, edge_map = _matching_masks(h)
    tmask = 0
    for i, (u, v) in enumerate(edge_map):
        if u in tset and v in tset:
            tmask |= 1 << i
    for mask in masks:
        if mask & tmask == 0:
            witness = frozenset(edge_map[i] for i in bits(mask))
            return StrongnessVerdict(strong=False, witness=witness)
    return StrongnessVerdict(strong=True)


def classify_strong_triangle(h: Graph, t) -> TriangleClassification:
    """Bull-freeness test plus the pendant trichotomy.

    The trichotomy presumes the triangle's component is not one of K3, K4 or
    the diamond (whose triangles are strong but fit no pendant pattern);
    those inputs are rejected.
    """
    tset = _require_triangle(h, t)
    _reject_small_component(h, tset)
    bull = find_bull_containing(h, tset)
    if bull is not None:
        return TriangleClassification(kind="not-strong", bull=bull)
    tmask = mask_of(tset)
    outside = {x: h.adj[x] & ~tmask for x in tset}
    attached = [x for x in tset if outside[x]]
    if len(attached) == 1:
        return TriangleClassification(kind="pendant-triangle",
                                      root=attached[0],
                                      subgraph=frozenset(tset))
    # No bull forces all attached vertices to share one outside neighbour.
    d_mask = outside[attached[0]]
    root = (d_mask & -d_mask).bit_length() - 1
    sub = frozenset(tset) | {root}
    if len(attached) == 2:
        return TriangleClassification(kind="in-pendant-diamond", root=root,
                                      subgraph=sub)
    return TriangleClassification(kind="in-pendant-K4", root=root,
                                  subgraph=sub)


def _reject_small_component(h: Graph, tset: list[int]) -> None:
    from .graphs import components
    comp = next(c for c in components(h) if tset[0] in c)
    sub, _ = induced_subgraph(h, comp)
    nm = (sub.n, sub.m)
    if nm in ((3, 3), (4, 6), (4, 5)):
        raise InputError(
            "pendant classification is undefined when the triangle's "
            "component is K3, K4 or the diamond", witness=comp)
