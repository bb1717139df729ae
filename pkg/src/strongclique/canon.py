"""Canonical forms, certificates and isomorphism tests."""

from __future__ import annotations

from . import _kernels
from .formats import write_graph6
from .graphs import Graph, bits


def canonical_form(g: Graph) -> Graph:
    """A canonically relabelled copy: isomorphic graphs map to equal graphs."""
    perm = _kernels.canon_perm(g.n, g.adj)
    adj = [0] * g.n
    for v in range(g.n):
        img = 0
        for u in bits(g.adj[v]):
            img |= 1 << perm[u]
        adj[perm[v]] = img
    return Graph(g.n, tuple(adj))


def certificate(g: Graph) -> str:
    """Canonical graph6 string; equal iff the graphs are isomorphic."""
    return write_graph6(canonical_form(g))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or a.degree_sequence() != b.degree_sequence():
        return False
    return canonical_form(a) == canonical_form(b)
