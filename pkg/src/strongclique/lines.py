"""Localizability of line graphs, decided on the root graph.

L(h) partitions into strong cliques exactly when h carries an independent
set S of strong vertices together with a set of strong triangles covering
every edge of h - S exactly once (stars and triangles of h are the cliques
of L(h)).  Strong triangles are bull-free triangles, which come in three
pendant shapes; deleting their non-root vertices leaves the pendant
reduction F, and the whole decision reduces to bipartiteness of F plus
per-vertex bipartite matching tests.  K3 and K4 roots are special-cased and
the diamond root is rejected outright (its line graph fails the property).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import (Edge, Graph, bits, components, induced_subgraph,
                     is_bipartite, is_clique, is_independent_set, line_graph,
                     mask_of, triangles)
from .limits import OracleLimits, default_limits
from .recognize import CliquePartition, check_clique_partition
from .strong import is_strong_vertex_bipartite, _matching_masks


@dataclass(frozen=True)
class PendantDecomposition:
    """Pendant triangles, diamonds and K4s of a graph, with the reduction.

    Roots are the unique vertices attaching each pendant subgraph to the
    rest of the graph.  ``reduction`` is the graph left after deleting all
    non-root vertices of pendant subgraphs; ``reduction_vertices[i]`` is the
    original label of its vertex i.
    """

    pendant_triangles: tuple[tuple[frozenset[int], int], ...]
    pendant_diamonds: tuple[tuple[frozenset[int], tuple[int, int], int], ...]
    pendant_k4s: tuple[tuple[frozenset[int], int], ...]
    reduction: Graph
    reduction_vertices: tuple[int, ...]

    def triangle_roots(self) -> frozenset[int]:
        return frozenset(r for _, r in self.pendant_triangles)

    def diamond_roots(self) -> frozenset[int]:
        return frozenset(r for _, _, r in self.pendant_diamonds)

    def k4_roots(self) -> frozenset[int]:
        return frozenset(r for _, r in self.pendant_k4s)

    def strong_triangles(self) -> list[frozenset[int]]:
        """All strong triangles: the pendant ones, plus the triangle through
        the degree-2 tip of each pendant diamond, plus the non-root triangle
        of each pendant K4."""
        out = [t for t, _ in self.pendant_triangles]
        out.extend(frozenset(d - {root}) for d, _tips, root in self.pendant_diamonds)
        out.extend(frozenset(k - {root}) for k, root in self.pendant_k4s)
        return out


@dataclass(frozen=True)
class LineCertifier:
    """Certificate that L(h) is localizable: an independent set of strong
    vertices (star centers) and strong triangles covering the rest."""

    star_centers: frozenset[int]
    triangles: tuple[frozenset[int], ...]


def _small_iso(g: Graph) -> str | None:
    if g.n == 3 and g.m == 3:
        return "K3"
    if g.n == 4 and g.m == 6:
        return "K4"
    if g.n == 4 and g.m == 5:
        return "diamond"
    return None


def pendant_decomposition(h: Graph) -> PendantDecomposition:
    """Detect pendant subgraphs by their degree patterns and reduce.

    A pendant triangle has two degree-2 vertices; a pendant diamond has a
    degree-2 tip, two degree-3 centers and a root of degree >= 3; a pendant
    K4 has three internal degree-3 vertices and a root of degree > 3.
    Requires h connected and not one of K3, K4, diamond.
    """
    if h.n > 0 and len(components(h)) != 1:
        raise InputError("graph is not connected")
    small = _small_iso(h)
    if small is not None:
        raise InputError(f"pendant reduction is undefined for {small}")
    deg = [h.degree(v) for v in range(h.n)]
    pend_tris = []
    pend_diamonds = []
    pend_k4s = []
    delete = 0
    for (a, b, c) in triangles(h):
        tset = (a, b, c)
        tmask = mask_of(tset)
        degs = sorted((deg[v], v) for v in tset)
        if degs[0][0] == 2 and degs[1][0] == 2 and degs[2][0] > 2:
            root = degs[2][1]
            pend_tris.append((frozenset(tset), root))
            delete |= tmask & ~(1 << root)
        elif degs[0][0] == 2 and degs[1][0] == 3 and degs[2][0] == 3:
            tip = degs[0][1]
            c1, c2 = degs[1][1], degs[2][1]
            out1 = h.adj[c1] & ~tmask
            out2 = h.adj[c2] & ~tmask
            if out1 == out2 and out1.bit_count() == 1:
                root = (out1 & -out1).bit_length() - 1
                if deg[root] >= 3:
                    pend_diamonds.append(
                        (frozenset(tset) | {root}, (tip, root), root))
                    delete |= tmask
        elif degs[0][0] == 3 and degs[2][0] == 3:
            outs = [h.adj[v] & ~tmask for v in tset]
            if (outs[0] == outs[1] == outs[2]
                    and outs[0].bit_count() == 1):
                root = (outs[0] & -outs[0]).bit_length() - 1
                if deg[root] > 3:
                    pend_k4s.append((frozenset(tset) | {root}, root))
                    delete |= tmask
    keep = [v for v in range(h.n) if not delete >> v & 1]
    reduction, labels = induced_subgraph(h, keep)
    return PendantDecomposition(
        pendant_triangles=tuple(pend_tris),
        pendant_diamonds=tuple(pend_diamonds),
        pendant_k4s=tuple(pend_k4s),
        reduction=reduction,
        reduction_vertices=labels)


def is_line_localizable(h: Graph) -> tuple[bool, LineCertifier | None]:
    """Decide whether L(h) is localizable, h connected; emit a certifier.

    The pendant reduction F must be connected bipartite with a side U that
    contains all diamond and K4 roots, avoids all pendant-triangle roots,
    and whose members (K4 roots aside) stay strong after deleting their
    pendant-triangle-root neighbours; both orientations of the bipartition
    are tried.
    """
    if h.n > 0 and len(components(h)) != 1:
        raise InputError("graph is not connected")
    small = _small_iso(h)
    if small == "K3":
        return True, LineCertifier(star_centers=frozenset(),
                                   triangles=(frozenset(range(3)),))
    if small == "K4":
        return True, LineCertifier(star_centers=frozenset([0]),
                                   triangles=(frozenset([1, 2, 3]),))
    if small == "diamond":
        return False, None
    dec = pendant_decomposition(h)
    f = dec.reduction
    labels = dec.reduction_vertices
    pos = {old: new for new, old in enumerate(labels)}
    if f.n > 0 and len(components(f)) != 1:
        return False, None
    ok, evidence = is_bipartite(f)
    if not ok:
        return False, None
    side0, side1 = evidence  # type: ignore[misc]
    tri_roots_f = {pos[r] for r in dec.triangle_roots()}
    dia_k4_roots_f = {pos[r] for r in dec.diamond_roots() | dec.k4_roots()}
    k4_roots_f = {pos[r] for r in dec.k4_roots()}
    for u_side in (side0, side1):
        if not dia_k4_roots_f <= u_side:
            continue
        if tri_roots_f & u_side:
            continue
        if all(_strong_after_trimming(f, u, tri_roots_f)
               for u in sorted(u_side - k4_roots_f)):
            centers = frozenset(labels[u] for u in u_side)
            return True, LineCertifier(
                star_centers=centers,
                triangles=tuple(dec.strong_triangles()))
    return False, None


def _strong_after_trimming(f: Graph, u: int, tri_roots_f: set[int]) -> bool:
    """Is u strong in f minus its pendant-triangle-root neighbours?"""
    drop = {w for w in bits(f.adj[u]) if w in tri_roots_f}
    if not drop:
        return is_strong_vertex_bipartite(f, u)
    keep = [v for v in range(f.n) if v not in drop]
    sub, sublabels = induced_subgraph(f, keep)
    return is_strong_vertex_bipartite(sub, sublabels.index(u))


def is_line_localizable_triangle_free_root(h: Graph) -> bool:
    """For triangle-free h the whole criterion collapses: L(h) is localizable
    iff h is an equimatchable bipartite graph."""
    from .graphs import find_triangle
    from .matching import is_equimatchable_bipartite
    tri = find_triangle(h)
    if tri is not None:
        raise InputError(f"graph has a triangle {tri}", witness=tri)
    if h.n > 0 and len(components(h)) != 1:
        raise InputError("graph is not connected")
    if not is_bipartite(h)[0]:
        return False
    return is_equimatchable_bipartite(h)


def verify_line_certifier(h: Graph, certifier: LineCertifier,
                          limits: OracleLimits | None = None
                          ) -> tuple[bool, list[str]]:
    """Re-check a certifier against the defining conditions by oracle.

    Conditions: the star centers are independent and each is covered by
    every maximal matching; the triangles are strong, pairwise edge-disjoint
    and together cover exactly the edges not incident to a star center.
    """
    limits = limits if limits is not None else default_limits()
    limits.check_enum_edges(h.m, "line certifier verification")
    failures: list[str] = []
    s = certifier.star_centers
    if not is_independent_set(h, s):
        failures.append("star centers are not independent")
    masks, incident, edge_map = _matching_masks(h)
    for v in sorted(s):
        if any(mask & incident[v] == 0 for mask in masks):
            failures.append(f"star center {v} is not a strong vertex")
    covered: set[Edge] = set()
    for tri in certifier.triangles:
        tlist = sorted(tri)
        if len(tlist) != 3 or not is_clique(h, tlist):
            failures.append(f"{tlist} is not a triangle")
            continue
        tmask = 0
        tedges = []
        for i, (a, b) in enumerate(edge_map):
            if a in tri and b in tri:
                tmask |= 1 << i
                tedges.append((a, b))
        if any(mask & tmask == 0 for mask in masks):
            failures.append(f"triangle {tlist} is not strong")
        for e in tedges:
            if e in covered:
                failures.append(f"edge {e} covered by two triangles")
            covered.add(e)
    smask = mask_of(s)
    expected = {e for e in edge_map if not (smask >> e[0] & 1 or smask >> e[1] & 1)}
    if covered != expected:
        missing = sorted(expected - covered)
        extra = sorted(covered - expected)
        if missing:
            failures.append(f"edges of h - S left uncovered: {missing}")
        if extra:
            failures.append(f"triangles cover edges incident to S: {extra}")
    return not failures, failures


def certifier_partition(h: Graph, certifier: LineCertifier
                        ) -> tuple[Graph, CliquePartition]:
    """Translate a certifier into the strong-clique partition of L(h)."""
    lg, edge_map = line_graph(h)
    parts = []
    for v in sorted(certifier.star_centers):
        part = frozenset(i for i, e in enumerate(edge_map) if v in e)
        if part:
            parts.append(part)
    for tri in certifier.triangles:
        part = frozenset(i for i, (a, b) in enumerate(edge_map)
                         if a in tri and b in tri)
        parts.append(part)
    return lg, check_clique_partition(lg, parts)


# -- root reconstruction -----------------------------------------------------


def root_graph(g: Graph) -> list[tuple[Graph, tuple[Edge, ...]]]:
    """Graphs h with L(h) isomorphic to g (labelled), found by edge-clique
    partitioning: cover every edge of g by cliques with each vertex in at
    most two of them, then read the cliques as vertices of h.

    Returns [] when g is not the line graph of a simple graph.  For g = K3
    both roots are returned (triangle and 3-star); otherwise the root is
    unique, so the first partition found wins.  Each result carries the map
    from g's vertices to h's edges; rebuilding the line graph from it
    reproduces g exactly, which is verified before returning.
    """
    if g.n > 0 and len(components(g)) != 1:
        raise InputError("graph is not connected")
    if g.n == 0:
        h = Graph.from_edges(1, [])
        return [(h, ())]
    if g.n == 3 and g.m == 3:
        tri = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        return [(tri, ((0, 1), (0, 2), (1, 2))),
                (star, ((0, 1), (0, 2), (0, 3)))]
    partition = _krausz_partition(g)
    if partition is None:
        return []
    h, edge_of = _root_from_cliques(g, partition)
    _verify_root(g, h, edge_of)
    return [(h, edge_of)]


def _krausz_partition(g: Graph) -> list[int] | None:
    """Partition E(g) into cliques (as masks) with each vertex in <= 2."""
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    cliques: list[int] = []
    vertex_load = [0] * g.n
    covered = [False] * len(edges)

    def clique_edges_uncovered(q: int, v: int) -> list[int] | None:
        ids = []
        for u in bits(q):
            e = (u, v) if u < v else (v, u)
            i = edge_index.get(e)
            if i is None:
                return None  # not a clique extension
            if covered[i]:
                return None  # edge already owned by another clique
            ids.append(i)
        return ids

    def rec(next_edge: int) -> bool:
        while next_edge < len(edges) and covered[next_edge]:
            next_edge += 1
        if next_edge == len(edges):
            return True
        u, v = edges[next_edge]
        # Extend an existing clique through u or v by the other endpoint.
        for qi in range(len(cliques)):
            q = cliques[qi]
            for a, b in ((u, v), (v, u)):
                if q >> a & 1 and not q >> b & 1 and vertex_load[b] < 2:
                    ids = clique_edges_uncovered(q, b)
                    if ids is None:
                        continue
                    cliques[qi] = q | 1 << b
                    vertex_load[b] += 1
                    for i in ids:
                        covered[i] = True
                    if rec(next_edge):
                        return True
                    cliques[qi] = q
                    vertex_load[b] -= 1
                    for i in ids:
                        covered[i] = False
        if vertex_load[u] < 2 and vertex_load[v] < 2:
            cliques.append(1 << u | 1 << v)
            vertex_load[u] += 1
            vertex_load[v] += 1
            covered[next_edge] = True
            if rec(next_edge):
                return True
            cliques.pop()
            vertex_load[u] -= 1
            vertex_load[v] -= 1
            covered[next_edge] = False
        return False

    if not edges:
        return [1] if g.n == 1 else None  # lone vertex: one singleton clique
    if rec(0):
        return list(cliques)
    return None


def _root_from_cliques(g: Graph, cliques: list[int]
                       ) -> tuple[Graph, tuple[Edge, ...]]:
    membership: list[list[int]] = [[] for _ in range(g.n)]
    for qi, q in enumerate(cliques):
        for v in bits(q):
            membership[v].append(qi)
    nodes = len(cliques)
    edge_of: list[Edge] = []
    h_edges: list[Edge] = []
    for v in range(g.n):
        owners = membership[v]
        if len(owners) == 1:
            owners = owners + [nodes]
            nodes += 1
        a, b = owners
        e = (a, b) if a < b else (b, a)
        edge_of.append(e)
        h_edges.append(e)
    return Graph.from_edges(nodes, h_edges), tuple(edge_of)


def _verify_root(g: Graph, h: Graph, edge_of: tuple[Edge, ...]) -> None:
    if len(set(edge_of)) != g.n or h.m != g.n:
        raise AssertionError("root reconstruction produced a multigraph")
    for u in range(g.n):
        for v in range(u + 1, g.n):
            share = bool(set(edge_of[u]) & set(edge_of[v]))
            if share != g.has_edge(u, v):
                raise AssertionError(
                    "root reconstruction failed the rebuild check")
