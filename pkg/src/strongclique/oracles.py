"""Exact ground-truth oracles for desk-scale graphs.

Everything here is exponential-time but exact: enumeration of maximal
independent sets, maximal cliques and maximal matchings, and the invariant
bundle (independence number, independent domination number, clique number,
clique cover number, chromatic number, chromatic index).  These are the
reference answers every polynomial recognizer in the package is validated
against, so they must never approximate: exceeding a cap raises, and streams
are deterministic for a fixed input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .coloring import (chromatic_number, clique_cover_number,
                       clique_cover_of_size, clique_number)
from .graphs import Edge, Graph, bits, complement, line_graph
from .limits import OracleLimits, default_limits


@dataclass(frozen=True)
class InvariantRecord:
    """Exact invariant values; idom <= alpha <= theta always holds."""

    alpha: int
    idom: int
    omega: int
    theta: int
    chi: int
    chi_prime: int | None = None


@dataclass(frozen=True)
class MisProfile:
    """Summary of a full scan over the maximal independent sets of a graph."""

    count: int
    idom: int                 # minimum maximal IS size
    idom_set: frozenset[int]
    alpha: int                # maximum (independent set) size
    alpha_set: frozenset[int]
    well_covered: bool
    witness: tuple[frozenset[int], frozenset[int]] | None


def _limits(limits: OracleLimits | None) -> OracleLimits:
    return limits if limits is not None else default_limits()


def maximal_independent_sets(g: Graph, limits: OracleLimits | None = None
                             ) -> Iterator[frozenset[int]]:
    """Every maximal independent set exactly once, deterministic order."""
    _limits(limits).check_enum_vertices(g.n, "maximal independent set oracle")
    for mask in _kernels.maximal_independent_sets(g.n, g.adj):
        yield frozenset(bits(mask))


def maximal_cliques(g: Graph, limits: OracleLimits | None = None
                    ) -> Iterator[frozenset[int]]:
    """Dual stream: maximal independent sets of the complement."""
    _limits(limits).check_enum_vertices(g.n, "maximal clique oracle")
    cg = complement(g)
    for mask in _kernels.maximal_independent_sets(cg.n, cg.adj):
        yield frozenset(bits(mask))


def maximal_matchings(h: Graph, limits: OracleLimits | None = None
                      ) -> Iterator[frozenset[Edge]]:
    """Every maximal matching of h, via the line graph's independent sets."""
    _limits(limits).check_enum_edges(h.m, "maximal matching oracle")
    lg, edge_map = line_graph(h)
    for mask in _kernels.maximal_independent_sets(lg.n, lg.adj):
        yield frozenset(edge_map[i] for i in bits(mask))


def mis_profile(g: Graph, limits: OracleLimits | None = None,
                early_exit: bool = False) -> MisProfile:
    """Scan the maximal independent sets, tracking the size extremes.

    With ``early_exit`` the scan stops at the first pair of differing sizes;
    idom/alpha are then only valid as evidence of non-well-coveredness.
    """
    _limits(limits).check_enum_vertices(g.n, "maximal independent set oracle")
    (count, mn, mn_mask, mx, mx_mask, first_mask, diff_mask,
     complete) = _kernels.mis_scan(g.n, g.adj, early_exit)
    witness = None
    well_covered = diff_mask == 0 and complete
    if diff_mask != 0:
        witness = (frozenset(bits(first_mask)), frozenset(bits(diff_mask)))
    return MisProfile(count=count, idom=mn, idom_set=frozenset(bits(mn_mask)),
                      alpha=mx, alpha_set=frozenset(bits(mx_mask)),
                      well_covered=well_covered, witness=witness)


def invariants(g: Graph, with_chi_prime: bool = False,
               limits: OracleLimits | None = None) -> InvariantRecord:
    lim = _limits(limits)
    lim.check_enum_vertices(g.n, "independence/domination oracle")
    lim.check_coloring(g.n, "chromatic and clique cover computation")
    prof = mis_profile(g, lim)
    omega = clique_number(g)
    theta, _ = clique_cover_number(g)
    chi, _ = chromatic_number(g)
    chi_prime = None
    if with_chi_prime:
        lim.check_coloring(g.m, "chromatic index computation")
        chi_prime = chromatic_index(g)
    return InvariantRecord(alpha=prof.alpha, idom=prof.idom, omega=omega,
                           theta=theta, chi=chi, chi_prime=chi_prime)


def chromatic_index(h: Graph) -> int:
    """Exact chromatic index: chromatic number of the line graph."""
    lg, _ = line_graph(h)
    k, _ = chromatic_number(lg)
    return k


def is_well_covered(g: Graph, limits: OracleLimits | None = None
                    ) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """All maximal independent sets the same size? Witness: the first two
    maximal independent sets of differing size in stream order."""
    prof = mis_profile(g, limits, early_exit=True)
    return prof.well_covered, prof.witness


def is_co_well_covered(g: Graph, limits: OracleLimits | None = None
                       ) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """All maximal cliques the same size (well-coveredness of the complement)."""
    return is_well_covered(complement(g), limits)


def is_very_well_covered(g: Graph, limits: OracleLimits | None = None) -> bool:
    """Well-covered, no isolated vertices, and alpha = n/2."""
    if g.n == 0 or g.n % 2 == 1:
        return False
    if any(g.adj[v] == 0 for v in range(g.n)):
        return False
    prof = mis_profile(g, limits)
    return prof.well_covered and prof.alpha == g.n // 2


def has_strong_independent_set(g: Graph, limits: OracleLimits | None = None
                               ) -> tuple[bool, frozenset[int] | None]:
    """Does some independent set meet every maximal clique?

    Any such set extends to a strong maximal independent set, so scanning
    the maximal independent sets against the maximal clique list is exact.
    """
    lim = _limits(limits)
    lim.check_enum_vertices(g.n, "strong independent set oracle")
    cliques = list(maximal_cliques(g, lim))
    for mis in maximal_independent_sets(g, lim):
        if all(mis & mc for mc in cliques):
            return True, mis
    return False, None


def is_semi_perfect(g: Graph, limits: OracleLimits | None = None) -> bool:
    """Clique cover number equals independence number."""
    lim = _limits(limits)
    lim.check_coloring(g.n, "clique cover decision")
    prof = mis_profile(g, lim)
    return clique_cover_of_size(g, prof.alpha) is not None
