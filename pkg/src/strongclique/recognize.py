"""Deciding partitionability of the vertex set into strong cliques.

The property under test ("localizable" throughout the package) is: V(g)
partitions into cliques each of which meets every maximal independent set.
It is equivalent to the conjunction of well-coveredness (all maximal
independent sets one size) and semi-perfection (clique cover number equals
independence number), i.e. to i(g) = theta(g); when it holds, every minimum
clique cover is such a partition, which is how certificates get built.

is_localizable_oracle decides the property exactly under the caps.  The
three structure-specific recognizers run in polynomial time on triangle-free
graphs (perfect matching of strong edges), graphs with no induced C4 (unique
simplicial clique per vertex) and cubic graphs (a four-family
classification), and return the same certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import clique_cover_number, clique_cover_of_size
from .errors import InputError
from .graphs import (Graph, bits, check_vertex_set, components, find_triangle,
                     find_induced_c4, induced_subgraph, is_clique, mask_of,
                     regularity, triangles, is_bipartite)
from .limits import OracleLimits, default_limits
from .matching import maximum_matching
from .oracles import mis_profile
from .strong import StrongnessVerdict, is_strong_clique, is_strong_edge, simplicial_cliques


@dataclass(frozen=True)
class CliquePartition:
    """Ordered list of disjoint cliques covering the vertex set."""

    parts: tuple[frozenset[int], ...]

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


@dataclass(frozen=True)
class Refutation:
    """Why a graph is not partitionable into strong cliques."""

    reason: str
    idom: int | None = None
    alpha: int | None = None
    theta: int | None = None
    sets: tuple = ()
    detail: str = ""


@dataclass(frozen=True)
class LocalizabilityVerdict:
    localizable: bool
    method: str
    certificate: CliquePartition | None = None
    refutation: Refutation | None = None


def check_clique_partition(g: Graph, parts) -> CliquePartition:
    """Validate a would-be partition; InputError names the violation."""
    seen = 0
    norm = []
    for part in parts:
        p = check_vertex_set(g, part)
        if not p:
            raise InputError("empty part in partition", witness=part)
        pm = mask_of(p)
        if pm & seen:
            raise InputError(
                f"parts overlap at vertices {sorted(bits(pm & seen))}",
                witness=frozenset(bits(pm & seen)))
        if not is_clique(g, p):
            raise InputError(f"part {sorted(p)} is not a clique", witness=p)
        seen |= pm
        norm.append(p)
    if seen != (1 << g.n) - 1:
        missing = [v for v in range(g.n) if not seen >> v & 1]
        raise InputError(f"partition misses vertices {missing}",
                         witness=frozenset(missing))
    return CliquePartition(parts=tuple(norm))


def _limits(limits: OracleLimits | None) -> OracleLimits:
    return limits if limits is not None else default_limits()


def is_localizable_oracle(g: Graph, limits: OracleLimits | None = None
                          ) -> LocalizabilityVerdict:
    """Exact verdict: i(g) = theta(g), with certificate or refutation.

    Not well-covered already settles it (i < alpha <= theta), so theta is
    only computed for well-covered inputs, where the decision "theta =
    alpha?" is one clique-cover search.
    """
    lim = _limits(limits)
    lim.check_enum_vertices(g.n, "localizability oracle")
    prof = mis_profile(g, lim)
    if not prof.well_covered:
        return LocalizabilityVerdict(
            localizable=False, method="oracle",
            refutation=Refutation(reason="not-well-covered", idom=prof.idom,
                                  alpha=prof.alpha, sets=prof.witness or (),
                                  detail="maximal independent sets of two "
                                         "sizes exist"))
    lim.check_coloring(g.n, "clique cover decision")
    cover = clique_cover_of_size(g, prof.alpha)
    if cover is None:
        theta, _ = clique_cover_number(g)
        return LocalizabilityVerdict(
            localizable=False, method="oracle",
            refutation=Refutation(reason="not-semi-perfect", idom=prof.idom,
                                  alpha=prof.alpha, theta=theta,
                                  detail="clique cover number exceeds "
                                         "independence number"))
    partition = _verified_partition(g, cover, lim)
    return LocalizabilityVerdict(localizable=True, method="oracle",
                                 certificate=partition)


def _verified_partition(g: Graph, cover, lim: OracleLimits) -> CliquePartition:
    partition = check_clique_partition(g, cover)
    for part in partition.parts:
        if not is_strong_clique(g, part, lim).strong:
            raise AssertionError(
                "minimum clique cover of a well-covered graph contained a "
                "non-strong part; this contradicts the partition theory")
    return partition


def strong_partition_search(g: Graph, limits: OracleLimits | None = None
                            ) -> CliquePartition | None:
    """Search for a partition into strong cliques.

    Well-coveredness is confirmed first; then any clique cover by alpha(g)
    cliques works (in a well-covered graph either every such cover consists
    of strong cliques or none exists), so the first cover found is returned
    after re-verifying each part.
    """
    lim = _limits(limits)
    lim.check_enum_vertices(g.n, "strong partition search")
    prof = mis_profile(g, lim)
    if not prof.well_covered:
        return None
    lim.check_coloring(g.n, "clique cover decision")
    cover = clique_cover_of_size(g, prof.alpha)
    if cover is None:
        return None
    return _verified_partition(g, cover, lim)


def verify_strong_partition(g: Graph, partition, limits: OracleLimits | None = None
                            ) -> tuple[bool, list[tuple[frozenset[int], StrongnessVerdict]]]:
    """Check a claimed strong-clique partition part by part.

    Structural violations (not a partition, part not a clique) raise
    InputError; a non-strong part yields verdict False together with its
    disjoint maximal independent set witness.
    """
    lim = _limits(limits)
    parts = partition.parts if isinstance(partition, CliquePartition) else partition
    checked = check_clique_partition(g, parts)
    results = []
    ok = True
    for part in checked.parts:
        verdict = is_strong_clique(g, part, lim)
        results.append((part, verdict))
        ok = ok and verdict.strong
    return ok, results


# -- polynomial recognizers --------------------------------------------------


def is_localizable_triangle_free(g: Graph) -> LocalizabilityVerdict:
    """Triangle-free characterization: isolated vertices aside, there must be
    a perfect matching and each of its edges must be a strong clique.

    Isolated vertices sit in every maximal independent set, so each forms a
    strong singleton part and the criterion applies to the rest.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise InputError(f"graph has a triangle {tri}", witness=tri)
    singletons = [frozenset([v]) for v in range(g.n) if g.adj[v] == 0]
    isolated_count = len(singletons)
    matching = maximum_matching(g)
    if 2 * len(matching) + isolated_count != g.n:
        return LocalizabilityVerdict(
            localizable=False, method="triangle-free",
            refutation=Refutation(
                reason="no-perfect-matching",
                detail=f"maximum matching covers {2 * len(matching)} of "
                       f"{g.n - isolated_count} non-isolated vertices"))
    for (u, v) in sorted(matching):
        if not is_strong_edge(g, (u, v)):
            witness = _non_strong_edge_witness(g, u, v)
            return LocalizabilityVerdict(
                localizable=False, method="triangle-free",
                refutation=Refutation(
                    reason="non-strong-matching-edge",
                    sets=(frozenset((u, v)), witness),
                    detail=f"matching edge ({u}, {v}) misses the maximal "
                           f"independent set {sorted(witness)}"))
    parts = tuple(frozenset(e) for e in sorted(matching)) + tuple(singletons)
    return LocalizabilityVerdict(localizable=True, method="triangle-free",
                                 certificate=check_clique_partition(g, parts))


def _non_strong_edge_witness(g: Graph, u: int, v: int) -> frozenset[int]:
    """A maximal independent set avoiding the non-strong, triangle-free edge
    uv: grow one from a non-adjacent pair x in N(u), y in N(v)."""
    from .strong import _extend_to_mis_avoiding
    au = g.adj[u] & ~(1 << v)
    av = g.adj[v] & ~(1 << u)
    for x in bits(au):
        bad = av & ~g.adj[x]
        if bad:
            y = (bad & -bad).bit_length() - 1
            seed = 1 << x | 1 << y
            return _extend_to_mis_avoiding(g, seed, (1 << u) | (1 << v))
    raise AssertionError("edge was strong after all")


def is_localizable_c4_free(g: Graph) -> LocalizabilityVerdict:
    """Induced-C4-free characterization: localizable iff every vertex lies in
    exactly one simplicial clique; those cliques form the certificate."""
    c4 = find_induced_c4(g)
    if c4 is not None:
        raise InputError(f"graph has an induced C4 {c4}", witness=c4)
    _, cliques = simplicial_cliques(g)
    count = [0] * g.n
    for c in cliques:
        for v in c:
            count[v] += 1
    bad = [v for v in range(g.n) if count[v] != 1]
    if bad:
        v = bad[0]
        return LocalizabilityVerdict(
            localizable=False, method="c4-free",
            refutation=Refutation(
                reason="simplicial-cover-fails",
                detail=f"vertex {v} lies in {count[v]} simplicial cliques "
                       "(needs exactly 1)"))
    return LocalizabilityVerdict(
        localizable=True, method="c4-free",
        certificate=check_clique_partition(g, cliques))


def is_localizable_cubic(g: Graph) -> LocalizabilityVerdict:
    """Classification of 3-regular graphs; disconnected inputs are decided
    component by component (the property factors over components)."""
    if regularity(g) != 3:
        bad = next((v for v in range(g.n) if g.degree(v) != 3), None)
        raise InputError(
            f"graph is not cubic (vertex {bad} has degree "
            f"{g.degree(bad) if bad is not None else '?'})", witness=bad)
    comps = components(g)
    if len(comps) > 1:
        parts: list[frozenset[int]] = []
        for comp in sorted(comps, key=min):
            sub, labels = induced_subgraph(g, comp)
            verdict = _cubic_connected(sub)
            if not verdict.localizable:
                return LocalizabilityVerdict(
                    localizable=False, method="cubic",
                    refutation=Refutation(
                        reason=verdict.refutation.reason,
                        detail=f"component {sorted(comp)}: "
                               f"{verdict.refutation.detail}"))
            parts.extend(frozenset(labels[v] for v in p)
                         for p in verdict.certificate.parts)
        return LocalizabilityVerdict(
            localizable=True, method="cubic",
            certificate=check_clique_partition(g, parts))
    return _cubic_connected(g)


def _cubic_connected(g: Graph) -> LocalizabilityVerdict:
    def yes(parts) -> LocalizabilityVerdict:
        return LocalizabilityVerdict(
            localizable=True, method="cubic",
            certificate=check_clique_partition(g, parts))

    def no(detail: str) -> LocalizabilityVerdict:
        return LocalizabilityVerdict(
            localizable=False, method="cubic",
            refutation=Refutation(reason="not-in-cubic-classification",
                                  detail=detail))

    if g.n == 4:  # the only connected cubic graph on 4 vertices
        return yes([frozenset(range(4))])
    if g.n == 6:
        ok, evidence = is_bipartite(g)
        if ok:  # connected cubic bipartite on 6 vertices: complete bipartite
            side0, side1 = evidence
            pairing = list(zip(sorted(side0), sorted(side1)))
            return yes([frozenset(e) for e in pairing])
        two = _two_triangles_plus_matching(g)
        if two is not None:
            return yes(two)
        return no("6 vertices but neither complete bipartite nor two "
                  "triangles joined by a perfect matching")
    if g.n % 6 == 0 and g.n >= 12:
        tris = _gadget_ring_triangles(g)
        if tris is not None:
            return yes(tris)
        return no("vertex count is 6k but the triangle-gadget ring "
                  "structure is absent")
    return no(f"no localizable cubic graph has {g.n} vertices")


def _two_triangles_plus_matching(g: Graph) -> list[frozenset[int]] | None:
    tris = triangles(g)
    if len(tris) != 2:
        return None
    a, b = frozenset(tris[0]), frozenset(tris[1])
    if a & b or len(a | b) != g.n:
        return None
    cross = [e for e in g.edges()
             if not (set(e) <= a or set(e) <= b)]
    if len(cross) != 3:
        return None
    ends = [v for e in cross for v in e]
    if len(set(ends)) != 6:
        return None
    return [a, b]


def _gadget_ring_triangles(g: Graph) -> list[frozenset[int]] | None:
    """Recognize the ring-of-triangle-gadgets family structurally.

    Requirements: every vertex in exactly one triangle; contracting the
    triangles leaves a single cycle whose links alternate between a doubled
    connection (two edges, landing on distinct vertices at both ends) and a
    single connection.
    """
    tris = triangles(g)
    owner = [-1] * g.n
    for idx, (a, b, c) in enumerate(tris):
        for v in (a, b, c):
            if owner[v] != -1:
                return None  # vertex in two triangles
            owner[v] = idx
    if any(o == -1 for o in owner):
        return None
    t = len(tris)
    if t != g.n // 3 or t % 2 != 0:
        return None
    # External edges: each vertex has exactly one (degree 3 = 2 in-triangle).
    links: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        if owner[u] == owner[v]:
            continue
        key = (min(owner[u], owner[v]), max(owner[u], owner[v]))
        links[key] = links.get(key, 0) + 1
    adj_t: dict[int, list[tuple[int, int]]] = {i: [] for i in range(t)}
    for (i, j), mult in links.items():
        adj_t[i].append((j, mult))
        adj_t[j].append((i, mult))
    for i in range(t):
        mults = sorted(m for _, m in adj_t[i])
        if mults != [1, 2]:
            return None
    # Walk the quotient: two links per node with multiplicities {1, 2} makes
    # it 2-regular with forced alternation, so a single cycle through all t
    # triangle-nodes is the remaining requirement.
    start = 0
    prev, cur = start, max(adj_t[start], key=lambda jm: jm[1])[0]
    steps = 1
    while cur != start:
        nxt = [j for j, _m in adj_t[cur] if j != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        steps += 1
        if steps > t:
            return None
    if steps != t:
        return None
    return [frozenset(tr) for tr in tris]
