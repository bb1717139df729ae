"""Exact colouring and clique-cover helpers on Graph values.

Thin wrappers over the kernels that add the sound degree-peeling reduction
(for the decision "is g k-colourable?", vertices of degree < k can be removed
and greedily recoloured afterwards) and the complement trick for clique
covers.  Peeling is what keeps the big gadget graphs tractable: their pendant
structure melts away, leaving the hard core for the branch and bound.
"""

from __future__ import annotations

from . import _kernels
from .graphs import Graph, bits, complement, induced_subgraph


def k_colorable(g: Graph, k: int) -> list[int] | None:
    """A proper colouring of g with colours 0..k-1, or None if impossible."""
    if g.n == 0:
        return []
    if k <= 0:
        return None
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    removed: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] < k:
                alive.discard(v)
                removed.append(v)
                for u in bits(g.adj[v]):
                    deg[u] -= 1
                changed = True
    if not alive:
        coloring = [-1] * g.n
    else:
        core, labels = induced_subgraph(g, alive)
        res = _kernels.k_colorable(core.n, core.adj, k)
        if res is None:
            return None
        coloring = [-1] * g.n
        for i, v in enumerate(labels):
            coloring[v] = res[i]
    for v in reversed(removed):
        used = {coloring[u] for u in bits(g.adj[v]) if coloring[u] != -1}
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
    return coloring


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    # Walk k upward from the clique bound using the peeled decision procedure.
    k = _kernels.max_clique(g.n, g.adj).bit_count()
    while True:
        res = k_colorable(g, k)
        if res is not None:
            return k, res
        k += 1


def clique_number(g: Graph) -> int:
    return _kernels.max_clique(g.n, g.adj).bit_count()


def maximum_clique(g: Graph) -> frozenset[int]:
    return frozenset(bits(_kernels.max_clique(g.n, g.adj)))


def clique_cover_of_size(g: Graph, k: int) -> list[frozenset[int]] | None:
    """A partition of V(g) into at most k cliques (colour classes of the
    complement), or None.  Empty classes are dropped."""
    res = k_colorable(complement(g), k)
    if res is None:
        return None
    classes: dict[int, set[int]] = {}
    for v, c in enumerate(res):
        classes.setdefault(c, set()).add(v)
    return [frozenset(classes[c]) for c in sorted(classes)]


def clique_cover_number(g: Graph) -> tuple[int, list[frozenset[int]]]:
    k, coloring = chromatic_number(complement(g))
    classes: dict[int, set[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, set()).add(v)
    return k, [frozenset(classes[c]) for c in sorted(classes)]
