"""Pure-Python kernel backend.

Graphs enter the kernels as ``(n, adj)`` where ``adj`` is a sequence of int
bitmasks (bit u of ``adj[v]`` set iff uv is an edge).  The compiled backend
in ``_ckern.pyx`` implements the same functions with the same tie-breaking
rules, so the two backends are interchangeable bit for bit; this module is
the reference and also handles graphs wider than 64 vertices.
"""

from __future__ import annotations

_BIG = 1 << 60


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        t = mask & -mask
        out.append(t.bit_length() - 1)
        mask ^= t
    return out


def _complement_adj(n: int, adj) -> list[int]:
    full = (1 << n) - 1
    return [(full ^ adj[v]) & ~(1 << v) for v in range(n)]


# -- Bron-Kerbosch enumeration ----------------------------------------------
#
# Pivot rule: the vertex of P|X maximizing |P & N(u)|, ties to the lowest
# label; branch vertices are taken in ascending label order.  This fixes the
# emission order, which callers rely on for reproducible witness streams.


def _bk_collect(adj, r: int, p: int, x: int, out: list[int]) -> None:
    if p == 0 and x == 0:
        out.append(r)
        return
    pux = p | x
    best_u, best_c = -1, -1
    m = pux
    while m:
        t = m & -m
        u = t.bit_length() - 1
        m ^= t
        c = (p & adj[u]).bit_count()
        if c > best_c:
            best_c, best_u = c, u
    cand = p & ~adj[best_u]
    while cand:
        t = cand & -cand
        cand ^= t
        av = adj[t.bit_length() - 1]
        _bk_collect(adj, r | t, p & av, x & av, out)
        p ^= t
        x |= t


def maximal_cliques(n: int, adj) -> list[int]:
    """All maximal cliques as bitmasks, in deterministic order."""
    out: list[int] = []
    _bk_collect(list(adj), 0, (1 << n) - 1, 0, out)
    return out


def maximal_independent_sets(n: int, adj) -> list[int]:
    return maximal_cliques(n, _complement_adj(n, adj))


class _StopScan(Exception):
    pass


def mis_scan(n: int, adj, stop_on_diff: bool) -> tuple[int, int, int, int, int, int, int, bool]:
    """Scan maximal independent sets tracking size extremes.

    Returns (count, min_size, min_mask, max_size, max_mask, first_mask,
    diff_mask, complete) where diff_mask is the first emitted set whose size
    differs from the first set's size (0 when none seen).  With
    ``stop_on_diff`` the scan aborts right after finding that pair, leaving
    count/min/max valid only for the scanned prefix (complete=False).
    """
    cadj = _complement_adj(n, adj)
    state = [0, _BIG, 0, -1, 0, 0, -1, 0]
    # count, min_size, min_mask, max_size, max_mask, first_mask, first_size, diff_mask

    def visit(r: int) -> None:
        sz = r.bit_count()
        state[0] += 1
        if state[0] == 1:
            state[5], state[6] = r, sz
        if sz < state[1]:
            state[1], state[2] = sz, r
        if sz > state[3]:
            state[3], state[4] = sz, r
        if state[7] == 0 and sz != state[6]:
            state[7] = r
            if stop_on_diff:
                raise _StopScan

    complete = True
    try:
        _bk_visit(cadj, 0, (1 << n) - 1, 0, visit)
    except _StopScan:
        complete = False
    if state[0] == 0:  # n == 0: the empty set is the unique maximal IS
        return (1, 0, 0, 0, 0, 0, 0, True)
    return (state[0], state[1], state[2], state[3], state[4], state[5],
            state[7], complete)


def _bk_visit(adj, r: int, p: int, x: int, visit) -> None:
    if p == 0 and x == 0:
        visit(r)
        return
    pux = p | x
    best_u, best_c = -1, -1
    m = pux
    while m:
        t = m & -m
        u = t.bit_length() - 1
        m ^= t
        c = (p & adj[u]).bit_count()
        if c > best_c:
            best_c, best_u = c, u
    cand = p & ~adj[best_u]
    while cand:
        t = cand & -cand
        cand ^= t
        av = adj[t.bit_length() - 1]
        _bk_visit(adj, r | t, p & av, x & av, visit)
        p ^= t
        x |= t


def independent_dominating_set(n: int, adj, cand: int, cover: int) -> int:
    """An independent J inside ``cand`` giving every ``cover`` vertex a neighbor.

    Returns the mask of one such set (search order: most constrained cover
    vertex first, then its candidate neighbors ascending) or -1 if none exists.
    """
    def rec(cand: int, cover: int, j: int) -> int:
        if cover == 0:
            return j
        best_opts, best_cnt = 0, _BIG
        m = cover
        while m:
            t = m & -m
            c = t.bit_length() - 1
            m ^= t
            opts = adj[c] & cand
            cnt = opts.bit_count()
            if cnt == 0:
                return -1
            if cnt < best_cnt:
                best_cnt, best_opts = cnt, opts
                if cnt == 1:
                    break
        m = best_opts
        while m:
            t = m & -m
            v = t.bit_length() - 1
            m ^= t
            res = rec(cand & ~(adj[v] | t), cover & ~adj[v], j | t)
            if res != -1:
                return res
        return -1

    return rec(cand, cover, 0)


# -- maximum clique ----------------------------------------------------------


def max_clique(n: int, adj) -> int:
    """Mask of one maximum clique (branch and bound with greedy-colour bound)."""
    if n == 0:
        return 0
    best = [0, 0]  # size, mask
    adj = list(adj)

    def expand(r_mask: int, r_size: int, p_mask: int) -> None:
        if p_mask == 0:
            if r_size > best[0]:
                best[0], best[1] = r_size, r_mask
            return
        order: list[tuple[int, int]] = []  # (vertex, colour bound)
        colors: list[int] = []
        m = p_mask
        while m:
            t = m & -m
            v = t.bit_length() - 1
            m ^= t
            for ci in range(len(colors)):
                if colors[ci] & adj[v] == 0:
                    colors[ci] |= t
                    order.append((v, ci + 1))
                    break
            else:
                colors.append(t)
                order.append((v, len(colors)))
        prefix = 0
        prefixes = []
        for v, _b in order:
            prefixes.append(prefix)
            prefix |= 1 << v
        for i in range(len(order) - 1, -1, -1):
            v, bound = order[i]
            if r_size + bound <= best[0]:
                return
            expand(r_mask | 1 << v, r_size + 1, prefixes[i] & adj[v])

    expand(0, 0, (1 << n) - 1)
    return best[1]


# -- exact colouring ----------------------------------------------------------


def k_colorable(n: int, adj, k: int) -> list[int] | None:
    """A proper colouring with colours 0..k-1, or None.

    DSATUR-style branch and bound: a maximum clique is pre-coloured to break
    symmetry, the branch vertex is the uncoloured vertex of highest
    saturation (ties to the lowest label) and at most one brand-new colour is
    tried per node.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    q = max_clique(n, adj)
    qsize = q.bit_count()
    if qsize > k:
        return None
    adj = list(adj)
    color = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    sat = [0] * n

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in _bits(adj[v]):
            row = cnt[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1

    def unassign(v: int, c: int) -> None:
        color[v] = -1
        for u in _bits(adj[v]):
            row = cnt[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1

    seed = _bits(q)
    for i, v in enumerate(seed):
        assign(v, i)
    used = [qsize]

    def rec(colored: int) -> bool:
        if colored == n:
            return True
        best_v, best_s = -1, -1
        for v in range(n):
            if color[v] == -1 and sat[v] > best_s:
                best_s, best_v = sat[v], v
        if best_s >= k:
            return False
        v = best_v
        row = cnt[v]
        limit = used[0] + 1 if used[0] < k else k
        for c in range(limit):
            if row[c] == 0:
                grew = c == used[0]
                if grew:
                    used[0] += 1
                assign(v, c)
                if rec(colored + 1):
                    return True
                unassign(v, c)
                if grew:
                    used[0] -= 1
        return False

    if rec(qsize):
        return color
    return None


def dsatur_greedy(n: int, adj) -> list[int]:
    """Deterministic DSATUR greedy colouring (upper bound for the exact search)."""
    color = [-1] * n
    neigh = [0] * n  # mask of colours used in the neighbourhood
    for _ in range(n):
        best_v, best_s = -1, -1
        for v in range(n):
            if color[v] == -1:
                s = neigh[v].bit_count()
                if s > best_s:
                    best_s, best_v = s, v
        c = 0
        while neigh[best_v] >> c & 1:
            c += 1
        color[best_v] = c
        for u in _bits(adj[best_v]):
            neigh[u] |= 1 << c
    return color


def chromatic_number(n: int, adj) -> tuple[int, list[int]]:
    if n == 0:
        return 0, []
    lb = max_clique(n, adj).bit_count()
    greedy = dsatur_greedy(n, adj)
    ub = max(greedy) + 1
    for k in range(lb, ub):
        res = k_colorable(n, adj, k)
        if res is not None:
            return k, res
    return ub, greedy


# -- canonical labelling -------------------------------------------------------
#
# Individualization-refinement search over equitable partitions.  The leaf
# with the lexicographically least adjacency string wins; automorphisms
# discovered from equal-certificate leaves drive orbit pruning and first-path
# backjumps, which keeps highly symmetric graphs (complete, empty, circulant)
# from exploding factorially.


def canon_perm(n: int, adj) -> list[int]:
    """Permutation v -> canonical position; relabelling by it is canonical."""
    if n == 0:
        return []
    adj = list(adj)

    def refine(colors: list[int]) -> list[int]:
        while True:
            sigs = []
            for v in range(n):
                nbr = sorted(colors[u] for u in _bits(adj[v]))
                sigs.append((colors[v], tuple(nbr)))
            rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [rank[s] for s in sigs]
            if new == colors:
                return colors
            colors = new

    def cert_from(perm: list[int]) -> bytes:
        inv = [0] * n
        for v in range(n):
            inv[perm[v]] = v
        out = bytearray()
        acc = nb = 0
        for i in range(n):
            ai = adj[inv[i]]
            for j in range(i + 1, n):
                acc = acc << 1 | (ai >> inv[j] & 1)
                nb += 1
                if nb == 8:
                    out.append(acc)
                    acc = nb = 0
        if nb:
            out.append(acc << (8 - nb))
        return bytes(out)

    def is_automorphism(g: list[int]) -> bool:
        for v in range(n):
            img = 0
            for u in _bits(adj[v]):
                img |= 1 << g[u]
            if img != adj[g[v]]:
                return False
        return True

    first: dict[str, object] = {"cert": None, "perm": None, "path": None}
    best: dict[str, object] = {"cert": None, "perm": None}
    generators: list[list[int]] = []

    def find(uf: list[int], x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def search(colors: list[int], path: list[int]) -> int:
        colors = refine(colors)
        cellsize = [0] * (n + 1)
        for v in range(n):
            cellsize[colors[v]] += 1
        target = -1
        for c in range(n):
            if cellsize[c] >= 2:
                target = c
                break
        if target == -1:
            perm = colors
            cert = cert_from(perm)
            jump = _BIG
            if first["cert"] is None:
                first["cert"], first["perm"] = cert, perm[:]
                first["path"] = list(path)
            elif cert == first["cert"]:
                fperm = first["perm"]
                inv_first = [0] * n
                for v in range(n):
                    inv_first[fperm[v]] = v
                gamma = [inv_first[perm[v]] for v in range(n)]
                if gamma != list(range(n)) and is_automorphism(gamma):
                    generators.append(gamma)
                    fpath = first["path"]
                    lvl = 0
                    while (lvl < len(path) and lvl < len(fpath)
                           and path[lvl] == fpath[lvl]):
                        lvl += 1
                    if (lvl < len(path) and lvl < len(fpath)
                            and all(gamma[path[i]] == path[i] for i in range(lvl))
                            and gamma[path[lvl]] == fpath[lvl]):
                        jump = lvl
            if best["cert"] is None or cert < best["cert"]:
                best["cert"], best["perm"] = cert, perm[:]
            elif cert == best["cert"] and cert != first["cert"]:
                bperm = best["perm"]
                inv_best = [0] * n
                for v in range(n):
                    inv_best[bperm[v]] = v
                gamma = [inv_best[perm[v]] for v in range(n)]
                if gamma != list(range(n)) and is_automorphism(gamma):
                    generators.append(gamma)
            return jump
        cell = [v for v in range(n) if colors[v] == target]
        explored: list[int] = []
        uf: list[int] = []
        seen_gens = -1
        depth = len(path)
        for v in cell:
            if len(generators) != seen_gens:
                seen_gens = len(generators)
                uf = list(range(n))
                for g in generators:
                    if all(g[p] == p for p in path):
                        for u in range(n):
                            ru, rg = find(uf, u), find(uf, g[u])
                            if ru != rg:
                                uf[ru] = rg
            if any(find(uf, v) == find(uf, w) for w in explored):
                continue
            explored.append(v)
            child = [c * 2 for c in colors]
            child[v] = target * 2 - 1
            path.append(v)
            r = search(child, path)
            path.pop()
            if r < depth:
                return r
        return _BIG

    search([0] * n, [])
    return best["perm"]  # type: ignore[return-value]
