"""Graph families and gadget constructions.

Covers the named small graphs used throughout (complete, complete bipartite,
paths, cycles, Petersen, Grotzsch, bull, paw, diamond, complement of C6),
the cubic ring-of-gadgets family, the satisfiability gadget, the
k-colourability gadget, and the two counterexample constructions (corona of
an odd cycle; triangle expansion plus pendant twins).  All constructors
label vertices deterministically so emitted graphs are reproducible byte for
byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product

from .errors import InputError
from .graphs import Edge, Graph, complement, corona, find_triangle, line_graph
from .oracles import maximal_cliques


# -- named small graphs -------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m)
                                    for b in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


def grotzsch_graph() -> Graph:
    """Canonical hard-coded edge list; triangle-free with chromatic number 4
    (both re-derived in the test suite, not trusted)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, (i + 4) % 5) for i in range(5)]
    edges += [(10, 5 + i) for i in range(5)]
    return Graph.from_edges(11, edges)


def bull_graph() -> Graph:
    # vertices a,b,c,d,e = 0..4; edges ab, bc, cd, be, ce
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)])


def paw_graph() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def diamond_graph() -> Graph:
    # tips 0 and 3
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


_NAMED = {
    "petersen": petersen_graph,
    "grotzsch": grotzsch_graph,
    "bull": bull_graph,
    "paw": paw_graph,
    "diamond": diamond_graph,
    "co-c6": lambda: complement(cycle_graph(6)),
}


def gen_named(name: str) -> Graph:
    """Build a graph from a family name: K5, K3,3, C7, P4, petersen,
    grotzsch, bull, paw, diamond, co-C6."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    m = re.fullmatch(r"k(\d+),(\d+)", key)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"([kcp])(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "k":
            return complete_graph(n)
        if kind == "c":
            return cycle_graph(n)
        return path_graph(n)
    raise InputError(f"unknown graph name {name!r}")


# -- cubic gadget ring ---------------------------------------------------------


def gen_Fn(n: int) -> Graph:
    """Ring of n six-vertex gadgets, 3-regular on 6n vertices.

    Gadget i holds x, x', y, y', z, z' at labels 6i..6i+5 (in that order)
    with triangles {x, y, z} and {x', y', z'} plus rungs yy' and zz'; the
    gadgets close into a ring through the edges x_i x'_{i+1} (mod n).  For
    n = 2 both ring edges x_1 x'_2 and x_2 x'_1 are present.
    """
    if n < 2:
        raise InputError(f"gadget ring needs n >= 2, got {n}")
    edges: list[Edge] = []
    for i in range(n):
        x, xp, y, yp, z, zp = (6 * i + k for k in range(6))
        edges += [(x, y), (x, z), (y, z)]
        edges += [(xp, yp), (xp, zp), (yp, zp)]
        edges += [(y, yp), (z, zp)]
    for i in range(n):
        edges.append((6 * i, 6 * ((i + 1) % n) + 1))  # x_i -- x'_{i+1}
    return Graph.from_edges(6 * n, edges)


# -- satisfiability gadget ------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF: clauses of exactly three literals (nonzero ints, sign = polarity).

    ``strict`` asserts that no clause contains a complementary pair, the
    regime in which every literal pair of the gadget graph is a strong
    clique.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def validate(self, strict: bool = True) -> None:
        if self.num_vars < 0:
            raise InputError("negative variable count")
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise InputError(f"clause {idx} does not have 3 literals",
                                 witness=clause)
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InputError(f"clause {idx} has bad literal {lit}",
                                     witness=clause)
            if strict and any(-lit in clause for lit in clause):
                raise InputError(
                    f"clause {idx} contains a complementary pair",
                    witness=clause)

    def satisfying_assignment(self) -> tuple[bool, ...] | None:
        """Truth-table search (exact; meant for small formulas)."""
        if self.num_vars > 20:
            raise InputError("truth-table oracle capped at 20 variables")
        for bits_ in product((False, True), repeat=self.num_vars):
            if all(any((lit > 0) == bits_[abs(lit) - 1] for lit in clause)
                   for clause in self.clauses):
                return bits_
        return None


def parse_dimacs_cnf(text: str) -> CnfFormula:
    num_vars = None
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad problem line at line {lineno}: {raw!r}")
            num_vars = int(parts[2])
            continue
        lits = [int(tok) for tok in line.split()]
        if lits and lits[-1] == 0:
            lits = lits[:-1]
        if lits:
            clauses.append(tuple(lits))
    if num_vars is None:
        raise InputError("missing 'p cnf' line")
    for idx, clause in enumerate(clauses):
        if len(clause) != 3:
            raise InputError(f"clause {idx} does not have exactly 3 literals",
                             witness=clause)
    return CnfFormula(num_vars=num_vars,
                      clauses=tuple(tuple(c) for c in clauses))  # type: ignore[arg-type]


def gen_sat_graph(formula: CnfFormula, strict: bool = True
                  ) -> tuple[Graph, tuple[str, ...]]:
    """Clause-literal gadget: a clique of clause vertices, one adjacent pair
    of literal vertices per variable, and clause-literal incidence edges.

    Labels: clause i at vertex i; variable j's positive literal at
    m + 2j, negative at m + 2j + 1.  Returns the graph and per-vertex names.
    """
    formula.validate(strict=strict)
    m = len(formula.clauses)
    n = m + 2 * formula.num_vars
    edges: list[Edge] = list(combinations(range(m), 2))
    labels = [f"c{i}" for i in range(m)]
    for j in range(formula.num_vars):
        pos, neg = m + 2 * j, m + 2 * j + 1
        edges.append((pos, neg))
        labels += [f"x{j + 1}", f"~x{j + 1}"]
    for i, clause in enumerate(formula.clauses):
        for lit in clause:
            j = abs(lit) - 1
            target = m + 2 * j + (0 if lit > 0 else 1)
            edges.append((i, target))
    seen = set()
    dedup = [e for e in edges if not (e in seen or seen.add(e))]
    return Graph.from_edges(n, dedup), tuple(labels)


# -- colourability gadgets ------------------------------------------------------


def gen_kcolor_gadget(g: Graph, k: int) -> Graph:
    """Pad every maximal clique of g up to size k with fresh vertices joined
    to it, so all maximal cliques of the result have size exactly k.

    Requires the clique number of g to be at most k.  The complement of the
    result partitions into k strong cliques iff g is k-colourable.
    """
    cliques = list(maximal_cliques(g))
    if any(len(c) > k for c in cliques):
        big = next(c for c in cliques if len(c) > k)
        raise InputError(
            f"clique number exceeds k={k}", witness=big)
    edges = list(g.edges())
    nxt = g.n
    for clique in cliques:
        fresh = list(range(nxt, nxt + k - len(clique)))
        nxt += len(fresh)
        for i, a in enumerate(fresh):
            for b in sorted(clique):
                edges.append((b, a))
            for b in fresh[:i]:
                edges.append((b, a))
    return Graph.from_edges(nxt, edges)


def gen_zaare_counterexample(g: Graph) -> Graph:
    """Two-step expansion of a triangle-free graph.

    Step 1: every edge grows a private new vertex, turning it into a
    triangle.  Step 2: every vertex of the step-1 graph gets two adjacent
    pendant twins.  The result partitions into strong cliques and has all
    maximal cliques of size 3; its complement admits such a partition iff g
    is 3-colourable, so any triangle-free g needing 4 colours turns this
    into a counterexample to complement-closure conjectures.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise InputError(f"input must be triangle-free, has {tri}",
                         witness=tri)
    edges = list(g.edges())
    n1 = g.n + len(edges)
    new_edges: list[Edge] = list(edges)
    for idx, (u, v) in enumerate(edges):
        w = g.n + idx
        new_edges += [(u, w), (v, w)]
    total = n1 + 2 * n1
    for v in range(n1):
        a, b = n1 + 2 * v, n1 + 2 * v + 1
        new_edges += [(v, a), (v, b), (a, b)]
    return Graph.from_edges(total, new_edges)


def gen_corona_counterexample(length: int) -> Graph:
    """Corona of an odd cycle of length >= 5: partitions into strong cliques
    and is co-well-covered, yet has no strong independent set."""
    if length < 5 or length % 2 == 0:
        raise InputError(
            f"need an odd cycle length of at least 5, got {length}")
    return corona(cycle_graph(length))


def gen_complement_line(h: Graph) -> Graph:
    """Complement of the line graph.  For triangle-free k-regular h, the
    result partitions into strong cliques iff the edges of h can be covered
    by k matchings (chromatic index k)."""
    lg, _ = line_graph(h)
    return complement(lg)
