"""Exhaustive isomorph-free corpora of small graphs.

Corpora are generated once and cached as graph6 files (one canonical graph
per line, sorted) under STRONGCLIQUE_CORPUS_CACHE or ~/.cache/strongclique.

Generation methods:

* all graphs on n vertices: extend every (n-1)-vertex graph by one vertex
  attached to every possible neighbourhood subset, canonize, deduplicate.
  Sound because deleting the last canonical vertex of any n-vertex graph
  leaves some (n-1)-vertex graph already in the corpus.
* connected cubic graphs: a cubic graph minus a perfect matching is a
  disjoint union of cycles, and every connected cubic graph on at most 14
  vertices has a perfect matching (the smallest one without has 16
  vertices), so overlaying a non-edge perfect matching on every cycle
  partition of n reaches them all; canonize, deduplicate, keep connected.

Both generators are validated against the published isomorph counts below;
a mismatch raises instead of silently shipping a bad corpus.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterator

from .canon import canonical_form
from .errors import InputError
from .formats import parse_graph6, write_graph6
from .graphs import Graph, is_connected

GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044,
                8: 12346, 9: 274668}
CONNECTED_GRAPH_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
                          8: 11117, 9: 261080}
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def cache_dir() -> Path:
    root = os.environ.get("STRONGCLIQUE_CORPUS_CACHE")
    if root:
        return Path(root)
    return Path.home() / ".cache" / "strongclique"


def _cached_lines(name: str, builder) -> list[str]:
    path = cache_dir() / name
    if path.exists():
        return path.read_text().splitlines()
    lines = builder()
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(lines) + ("\n" if lines else ""))
    tmp.replace(path)
    return lines


def all_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class, 0 <= n <= 9."""
    if n not in GRAPH_COUNTS:
        raise InputError(f"corpus of all graphs is built for n <= 9, got {n}")
    for line in _cached_lines(f"all_{n}.g6", lambda: _build_all(n)):
        yield parse_graph6(line)


def _build_all(n: int) -> list[str]:
    if n == 0:
        return [write_graph6(Graph.empty(0))]
    seen: set[str] = set()
    for line in _cached_lines(f"all_{n - 1}.g6", lambda: _build_all(n - 1)):
        g = parse_graph6(line)
        base = list(g.adj) + [0]
        for subset in range(1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = subset
            rest = subset
            while rest:
                t = rest & -rest
                adj[t.bit_length() - 1] |= 1 << (n - 1)
                rest ^= t
            seen.add(write_graph6(canonical_form(Graph(n, tuple(adj)))))
    lines = sorted(seen)
    if len(lines) != GRAPH_COUNTS[n]:
        raise AssertionError(
            f"graph corpus for n={n} has {len(lines)} classes, "
            f"expected {GRAPH_COUNTS[n]}")
    return lines


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected graphs on n vertices up to isomorphism, 1 <= n <= 9."""
    if n not in CONNECTED_GRAPH_COUNTS:
        raise InputError(
            f"corpus of connected graphs is built for 1 <= n <= 9, got {n}")

    def build() -> list[str]:
        lines = [write_graph6(g) for g in all_graphs(n) if is_connected(g)]
        if len(lines) != CONNECTED_GRAPH_COUNTS[n]:
            raise AssertionError(
                f"connected corpus for n={n} has {len(lines)} classes, "
                f"expected {CONNECTED_GRAPH_COUNTS[n]}")
        return lines

    for line in _cached_lines(f"connected_{n}.g6", build):
        yield parse_graph6(line)


def connected_cubic_graphs(n: int) -> Iterator[Graph]:
    """All connected 3-regular graphs on n vertices up to isomorphism,
    n in {4, 6, 8, 10, 12, 14}."""
    if n not in CONNECTED_CUBIC_COUNTS:
        raise InputError(
            f"cubic corpus is built for even 4 <= n <= 14, got {n}")
    for line in _cached_lines(f"cubic_{n}.g6", lambda: _build_cubic(n)):
        yield parse_graph6(line)


def _cycle_partitions(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 2, -1):
        if n - part == 0 or n - part >= 3:
            for rest in _cycle_partitions(n - part, part):
                yield [part] + rest


def _build_cubic(n: int) -> list[str]:
    seen: set[str] = set()
    for parts in _cycle_partitions(n, n):
        adj = [0] * n
        start = 0
        for length in parts:
            for i in range(length):
                a = start + i
                b = start + (i + 1) % length
                adj[a] |= 1 << b
                adj[b] |= 1 << a
            start += length
        _overlay_matchings(n, adj, 0, seen)
    lines = sorted(seen)
    if len(lines) != CONNECTED_CUBIC_COUNTS[n]:
        raise AssertionError(
            f"cubic corpus for n={n} has {len(lines)} classes, "
            f"expected {CONNECTED_CUBIC_COUNTS[n]}")
    return lines


def _overlay_matchings(n: int, adj: list[int], done: int, seen: set[str]) -> None:
    """Complete a perfect matching over the cycle layout, avoiding existing
    (cycle) edges, and record each resulting connected cubic graph."""
    v = done
    while v < n and adj[v].bit_count() == 3:
        v += 1
    if v == n:
        g = Graph(n, tuple(adj))
        if is_connected(g):
            seen.add(write_graph6(canonical_form(g)))
        return
    for u in range(v + 1, n):
        if adj[u].bit_count() == 3 or adj[v] >> u & 1:
            continue
        adj[v] |= 1 << u
        adj[u] |= 1 << v
        _overlay_matchings(n, adj, v + 1, seen)
        adj[v] &= ~(1 << u)
        adj[u] &= ~(1 << v)
