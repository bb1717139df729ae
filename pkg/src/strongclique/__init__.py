"""Strong cliques, well-covered graphs and clique-partition certificates.

A library and command line tool that decides well-coveredness and
partitionability of a graph's vertex set into strong cliques (cliques meeting
every maximal independent set) — exactly, by enumeration oracles on small
graphs, and in polynomial time on triangle-free, induced-C4-free, cubic and
line graphs — plus generators for the gadget families and counterexamples
these characterizations are built on.
"""

from .errors import FormatError, InputError, OracleCapExceeded
from .graphs import Graph
from .limits import OracleLimits, default_limits

__all__ = [
    "Graph",
    "InputError",
    "FormatError",
    "OracleCapExceeded",
    "OracleLimits",
    "default_limits",
]

__version__ = "0.1.0"
