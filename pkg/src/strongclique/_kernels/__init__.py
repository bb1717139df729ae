"""Kernel backend selection.

The compiled extension (``_ckern``) handles graphs up to 64 vertices; wider
graphs and environments without the extension fall back to the pure-Python
reference backend (``pykern``).  Both implement identical algorithms with
identical tie-breaking, so results are interchangeable.  Set
STRONGCLIQUE_PURE_PYTHON=1 to force the fallback.
"""

from __future__ import annotations

import os

from . import pykern

_ck = None
if os.environ.get("STRONGCLIQUE_PURE_PYTHON") != "1":
    try:
        from . import _ckern as _ck  # type: ignore[no-redef]
    except ImportError:
        _ck = None

_CK_MAX = 64


def backend_name() -> str:
    return "compiled" if _ck is not None else "pure-python"


def has_compiled_backend() -> bool:
    return _ck is not None


def _pick(n: int):
    if _ck is not None and n <= _CK_MAX:
        return _ck
    return pykern


def maximal_cliques(n: int, adj) -> list[int]:
    return _pick(n).maximal_cliques(n, list(adj))


def maximal_independent_sets(n: int, adj) -> list[int]:
    return _pick(n).maximal_independent_sets(n, list(adj))


def mis_scan(n: int, adj, stop_on_diff: bool):
    return _pick(n).mis_scan(n, list(adj), stop_on_diff)


def independent_dominating_set(n: int, adj, cand: int, cover: int) -> int:
    return _pick(n).independent_dominating_set(n, list(adj), cand, cover)


def max_clique(n: int, adj) -> int:
    return _pick(n).max_clique(n, list(adj))


def k_colorable(n: int, adj, k: int):
    return _pick(n).k_colorable(n, list(adj), k)


def chromatic_number(n: int, adj):
    return _pick(n).chromatic_number(n, list(adj))


def canon_perm(n: int, adj) -> list[int]:
    return _pick(n).canon_perm(n, list(adj))
