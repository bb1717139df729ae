"""Exact-oracle scale caps.

The enumeration oracles are exponential; the caps bound what they may chew
on.  Caps are configuration, not constants: callers pass an OracleLimits, and
the STRONGCLIQUE_ORACLE_CAP environment variable rescales the defaults for
the CLI.  Exceeding a cap raises OracleCapExceeded — oracles never truncate.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import OracleCapExceeded

DEFAULT_ENUM_CAP = 24
DEFAULT_COLORING_CAP = 40


@dataclass(frozen=True)
class OracleLimits:
    enum_vertices: int = DEFAULT_ENUM_CAP    # maximal IS / clique enumeration
    enum_edges: int = DEFAULT_ENUM_CAP       # maximal matching enumeration
    coloring_vertices: int = DEFAULT_COLORING_CAP  # exact chromatic search

    def check_enum_vertices(self, n: int, what: str = "enumeration oracle") -> None:
        if n > self.enum_vertices:
            raise OracleCapExceeded(f"{what} over {n} vertices",
                                    needed=n, cap=self.enum_vertices)

    def check_enum_edges(self, m: int, what: str = "matching oracle") -> None:
        if m > self.enum_edges:
            raise OracleCapExceeded(f"{what} over {m} edges",
                                    needed=m, cap=self.enum_edges)

    def check_coloring(self, n: int, what: str = "exact coloring") -> None:
        if n > self.coloring_vertices:
            raise OracleCapExceeded(f"{what} over {n} vertices",
                                    needed=n, cap=self.coloring_vertices)


def default_limits() -> OracleLimits:
    """Defaults, rescaled by STRONGCLIQUE_ORACLE_CAP when set."""
    raw = os.environ.get("STRONGCLIQUE_ORACLE_CAP")
    if raw is None:
        return OracleLimits()
    cap = int(raw)
    return OracleLimits(enum_vertices=cap, enum_edges=cap,
                        coloring_vertices=max(cap, DEFAULT_COLORING_CAP))
