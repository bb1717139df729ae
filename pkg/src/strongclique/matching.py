"""Polynomial matching algorithms and equimatchability.

maximum_matching is an O(n^3) implementation of Edmonds' blossom algorithm
(contraction by base pointers, BFS forest).  Searches scan vertices in
ascending label order, so the returned edge sets are deterministic; only
their sizes are canonical.
"""

from __future__ import annotations

from collections import deque

from . import _kernels
from .errors import InputError
from .graphs import Edge, Graph, bits, components, is_bipartite, line_graph
from .limits import OracleLimits, default_limits


def _as_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def check_matching(g: Graph, edges) -> frozenset[Edge]:
    seen = 0
    out = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise InputError(f"matching edge ({u}, {v}) not in graph",
                             witness=(u, v))
        em = 1 << u | 1 << v
        if seen & em:
            raise InputError(f"matching edges overlap at ({u}, {v})",
                             witness=(u, v))
        seen |= em
        out.add(_as_edge(u, v))
    return frozenset(out)


def maximum_matching(g: Graph) -> frozenset[Edge]:
    """A maximum matching (blossom algorithm); perfect iff 2|M| = n."""
    n = g.n
    match = [-1] * n
    for v in range(n):  # deterministic greedy seed
        if match[v] == -1:
            for u in g.neighbors(v):
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break
    p = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in g.neighbors(v):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u2 = to
                        while u2 != -1:
                            pv = p[u2]
                            ppv = match[pv]
                            match[u2], match[pv] = pv, u2
                            u2 = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return frozenset(_as_edge(v, match[v]) for v in range(n)
                     if match[v] > v)


def _oriented_sides(g: Graph, anchor: frozenset[int] | None = None
                    ) -> tuple[set[int], set[int], list[frozenset[int]]]:
    """Bipartition sides, flipping each component so ``anchor`` sits in side 0.

    Raises InputError when g is not bipartite, or when some component has
    anchor vertices on both of its sides.
    """
    ok, evidence = is_bipartite(g)
    if not ok:
        raise InputError("graph is not bipartite", witness=evidence)
    side0, side1 = evidence  # type: ignore[misc]
    comps = components(g)
    left: set[int] = set()
    right: set[int] = set()
    for comp in comps:
        a, b = comp & side0, comp & side1
        if anchor is not None:
            in_a, in_b = anchor & a, anchor & b
            if in_a and in_b:
                raise InputError(
                    "vertex set straddles both sides of a component's "
                    "bipartition", witness=(in_a, in_b))
            if in_b:
                a, b = b, a
        left |= a
        right |= b
    return left, right, comps


def _kuhn(g: Graph, roots: list[int]) -> tuple[dict[int, int], int | None, set[int]]:
    """Augment from each root in order.

    Returns (match_of mapping matched-vertex -> root-side partner, the first
    root whose augmentation failed or None, and the vertex set visited during
    that failed augmentation).
    """
    match_of: dict[int, int] = {}

    def try_aug(a: int, visited: set[int]) -> bool:
        for b in g.neighbors(a):
            if b in visited:
                continue
            visited.add(b)
            owner = match_of.get(b, -1)
            if owner == -1 or try_aug(owner, visited):
                match_of[b] = a
                return True
        return False

    for a in roots:
        visited: set[int] = set()
        if not try_aug(a, visited):
            return match_of, a, visited
    return match_of, None, set()


def maximum_matching_bipartite(g: Graph) -> frozenset[Edge]:
    """Maximum matching via augmenting paths; InputError if not bipartite."""
    left, _, _ = _oriented_sides(g)
    match_of, _, _ = _kuhn(g, sorted(left))
    return frozenset(_as_edge(b, a) for b, a in match_of.items())


def matching_saturating(g: Graph, s) -> tuple[frozenset[Edge] | None,
                                              frozenset[int] | None]:
    """A matching saturating ``s`` in a bipartite graph, or a Hall violator.

    ``s`` must lie inside one side of each component's bipartition.  On
    failure returns (None, X) with X a subset of s and |N(X)| < |X|.
    """
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise InputError(f"vertex label {v} out of range", witness=v)
    _oriented_sides(g, anchor=s)
    match_of, failed, visited = _kuhn(g, sorted(s))
    if failed is None:
        matching = frozenset(_as_edge(b, a) for b, a in match_of.items())
        return matching, None
    # Failed alternating search from `failed`: the visited vertices are all
    # matched, and the roots they are matched to, plus `failed` itself, form
    # a set X with N(X) = visited, so |N(X)| = |X| - 1.
    violator = {failed} | {match_of[b] for b in visited}
    nbhood: set[int] = set()
    for v in violator:
        nbhood.update(g.neighbors(v))
    if len(nbhood) >= len(violator):  # must not happen
        raise AssertionError("Hall violator construction failed")
    return None, frozenset(violator)


def is_equimatchable(h: Graph, limits: OracleLimits | None = None
                     ) -> tuple[bool, tuple[frozenset[Edge], frozenset[Edge]] | None]:
    """All maximal matchings the same size?

    Bipartite graphs dispatch to the polynomial side test per component;
    otherwise the maximal matchings are enumerated under the edge cap.  The
    witness, when produced, is a pair of maximal matchings of distinct sizes.
    """
    limits = limits if limits is not None else default_limits()
    ok, evidence = is_bipartite(h)
    if ok:
        verdict = all(
            _equimatchable_component(h, comp) for comp in components(h))
        if verdict:
            return True, None
        witness = None
        if h.m <= limits.enum_edges:
            witness = _matching_size_witness(h)
        return False, witness
    limits.check_enum_edges(h.m, "maximal matching oracle")
    witness = _matching_size_witness(h)
    return witness is None, witness


def _matching_size_witness(h: Graph
                           ) -> tuple[frozenset[Edge], frozenset[Edge]] | None:
    lg, edge_map = line_graph(h)
    (_c, _mn, _mnm, _mx, _mxm, first_mask, diff_mask,
     _complete) = _kernels.mis_scan(lg.n, lg.adj, True)
    if diff_mask == 0:
        return None
    first = frozenset(edge_map[i] for i in bits(first_mask))
    diff = frozenset(edge_map[i] for i in bits(diff_mask))
    return first, diff


def is_equimatchable_bipartite(h: Graph) -> bool:
    """Connected bipartite test: some side consists entirely of strong vertices."""
    if not is_bipartite(h)[0]:
        raise InputError("graph is not bipartite")
    if h.n > 0 and len(components(h)) != 1:
        raise InputError("graph is not connected")
    return _equimatchable_component(h, frozenset(range(h.n)))


def _equimatchable_component(h: Graph, comp: frozenset[int]) -> bool:
    from .strong import is_strong_vertex_bipartite
    ok, evidence = is_bipartite(h)
    side0, side1 = evidence  # type: ignore[misc]
    for side in (side0 & comp, side1 & comp):
        if all(is_strong_vertex_bipartite(h, v) for v in sorted(side)):
            return True
    return False
