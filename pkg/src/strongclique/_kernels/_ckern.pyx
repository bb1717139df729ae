# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel backend: bitset graphs up to 64 vertices.

Mirrors pykern function by function with identical tie-breaking, so results
(including emission orders) are interchangeable with the pure-Python
backend.  See pykern.py for the algorithm notes.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    """
    #define POPCNT(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZLL(x) __builtin_ctzll((unsigned long long)(x))
    """
    int POPCNT(uint64_t x) nogil
    int CTZLL(uint64_t x) nogil

_BIG = 1 << 60

cdef int _load(int n, object adj, uint64_t* out) except -1:
    cdef int v
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    for v in range(n):
        out[v] = <uint64_t> adj[v]
    return 0

cdef inline uint64_t _full(int n) nogil:
    if n >= 64:
        return <uint64_t> 0xFFFFFFFFFFFFFFFFULL
    return (<uint64_t> 1 << n) - 1

cdef void _complement(int n, uint64_t* adj, uint64_t* out) nogil:
    cdef int v
    cdef uint64_t full = _full(n)
    for v in range(n):
        out[v] = (full ^ adj[v]) & ~((<uint64_t> 1) << v)


# -- Bron-Kerbosch ------------------------------------------------------------

cdef void _bk_collect(uint64_t* adj, uint64_t r, uint64_t p, uint64_t x,
                      list out):
    cdef uint64_t pux, m, t, av, cand
    cdef int u, best_u, best_c, c, v
    if p == 0 and x == 0:
        out.append(r)
        return
    pux = p | x
    best_u = -1
    best_c = -1
    m = pux
    while m:
        t = m & (~m + 1)
        u = CTZLL(t)
        m ^= t
        c = POPCNT(p & adj[u])
        if c > best_c:
            best_c = c
            best_u = u
    cand = p & ~adj[best_u]
    while cand:
        t = cand & (~cand + 1)
        cand ^= t
        v = CTZLL(t)
        av = adj[v]
        _bk_collect(adj, r | t, p & av, x & av, out)
        p ^= t
        x |= t


def maximal_cliques(int n, object adj):
    cdef uint64_t cadj[64]
    _load(n, adj, cadj)
    out: list = []
    _bk_collect(cadj, 0, _full(n) if n else 0, 0, out)
    return out


def maximal_independent_sets(int n, object adj):
    cdef uint64_t a[64]
    cdef uint64_t c[64]
    _load(n, adj, a)
    _complement(n, a, c)
    out: list = []
    _bk_collect(c, 0, _full(n) if n else 0, 0, out)
    return out


cdef struct ScanState:
    long long count
    long long min_size
    uint64_t min_mask
    long long max_size
    uint64_t max_mask
    uint64_t first_mask
    long long first_size
    uint64_t diff_mask
    bint stop_on_diff

cdef int _bk_scan(uint64_t* adj, uint64_t r, uint64_t p, uint64_t x,
                  ScanState* st) nogil:
    cdef uint64_t pux, m, t, av, cand
    cdef int u, best_u, best_c, c, v, sz
    if p == 0 and x == 0:
        sz = POPCNT(r)
        st.count += 1
        if st.count == 1:
            st.first_mask = r
            st.first_size = sz
        if sz < st.min_size:
            st.min_size = sz
            st.min_mask = r
        if sz > st.max_size:
            st.max_size = sz
            st.max_mask = r
        if st.diff_mask == 0 and sz != st.first_size:
            st.diff_mask = r
            if st.stop_on_diff:
                return 1
        return 0
    pux = p | x
    best_u = -1
    best_c = -1
    m = pux
    while m:
        t = m & (~m + 1)
        u = CTZLL(t)
        m ^= t
        c = POPCNT(p & adj[u])
        if c > best_c:
            best_c = c
            best_u = u
    cand = p & ~adj[best_u]
    while cand:
        t = cand & (~cand + 1)
        cand ^= t
        v = CTZLL(t)
        av = adj[v]
        if _bk_scan(adj, r | t, p & av, x & av, st):
            return 1
        p ^= t
        x |= t
    return 0


def mis_scan(int n, object adj, bint stop_on_diff):
    cdef uint64_t a[64]
    cdef uint64_t c[64]
    cdef ScanState st
    _load(n, adj, a)
    _complement(n, a, c)
    st.count = 0
    st.min_size = 1 << 30
    st.min_mask = 0
    st.max_size = -1
    st.max_mask = 0
    st.first_mask = 0
    st.first_size = -1
    st.diff_mask = 0
    st.stop_on_diff = stop_on_diff
    stopped = _bk_scan(c, 0, _full(n) if n else 0, 0, &st)
    if st.count == 0:
        return (1, 0, 0, 0, 0, 0, 0, True)
    return (st.count, st.min_size, st.min_mask, st.max_size, st.max_mask,
            st.first_mask, st.diff_mask, not stopped)


# -- independent dominating subset ---------------------------------------------

cdef uint64_t _ids_rec(uint64_t* adj, uint64_t cand, uint64_t cover,
                       uint64_t j) nogil:
    cdef uint64_t m, t, opts, best_opts, res
    cdef int c, v, cnt, best_cnt
    if cover == 0:
        return j
    best_cnt = 1 << 30
    best_opts = 0
    m = cover
    while m:
        t = m & (~m + 1)
        c = CTZLL(t)
        m ^= t
        opts = adj[c] & cand
        cnt = POPCNT(opts)
        if cnt == 0:
            return <uint64_t> 0xFFFFFFFFFFFFFFFFULL
        if cnt < best_cnt:
            best_cnt = cnt
            best_opts = opts
            if cnt == 1:
                break
    m = best_opts
    while m:
        t = m & (~m + 1)
        v = CTZLL(t)
        m ^= t
        res = _ids_rec(adj, cand & ~(adj[v] | t), cover & ~adj[v], j | t)
        if res != <uint64_t> 0xFFFFFFFFFFFFFFFFULL:
            return res
    return <uint64_t> 0xFFFFFFFFFFFFFFFFULL


def independent_dominating_set(int n, object adj, object cand, object cover):
    cdef uint64_t a[64]
    cdef uint64_t res
    _load(n, adj, a)
    res = _ids_rec(a, <uint64_t> cand, <uint64_t> cover, 0)
    if res == <uint64_t> 0xFFFFFFFFFFFFFFFFULL:
        return -1
    return res


# -- maximum clique -------------------------------------------------------------

cdef struct CliqueBest:
    int size
    uint64_t mask

cdef void _mc_expand(uint64_t* adj, uint64_t r_mask, int r_size,
                     uint64_t p_mask, CliqueBest* best) nogil:
    cdef int order_v[64]
    cdef int order_b[64]
    cdef uint64_t prefixes[64]
    cdef uint64_t colors[64]
    cdef uint64_t m, t, prefix
    cdef int v, k, ci, ncolors, i, placed
    if p_mask == 0:
        if r_size > best.size:
            best.size = r_size
            best.mask = r_mask
        return
    k = 0
    ncolors = 0
    m = p_mask
    while m:
        t = m & (~m + 1)
        v = CTZLL(t)
        m ^= t
        placed = 0
        for ci in range(ncolors):
            if colors[ci] & adj[v] == 0:
                colors[ci] |= t
                order_v[k] = v
                order_b[k] = ci + 1
                placed = 1
                break
        if not placed:
            colors[ncolors] = t
            ncolors += 1
            order_v[k] = v
            order_b[k] = ncolors
        k += 1
    prefix = 0
    for i in range(k):
        prefixes[i] = prefix
        prefix |= (<uint64_t> 1) << order_v[i]
    for i in range(k - 1, -1, -1):
        if r_size + order_b[i] <= best.size:
            return
        v = order_v[i]
        _mc_expand(adj, r_mask | ((<uint64_t> 1) << v), r_size + 1,
                   prefixes[i] & adj[v], best)


def max_clique(int n, object adj):
    cdef uint64_t a[64]
    cdef CliqueBest best
    if n == 0:
        return 0
    _load(n, adj, a)
    best.size = 0
    best.mask = 0
    _mc_expand(a, 0, 0, _full(n), &best)
    return best.mask


# -- exact colouring --------------------------------------------------------------

cdef struct ColorCtx:
    int n
    int k
    int used
    uint64_t* adj
    int* color
    int* sat
    int* cnt  # n x 64

cdef void _assign(ColorCtx* ctx, int v, int c) nogil:
    cdef uint64_t m, t
    cdef int u
    ctx.color[v] = c
    m = ctx.adj[v]
    while m:
        t = m & (~m + 1)
        u = CTZLL(t)
        m ^= t
        if ctx.cnt[(u << 6) + c] == 0:
            ctx.sat[u] += 1
        ctx.cnt[(u << 6) + c] += 1

cdef void _unassign(ColorCtx* ctx, int v, int c) nogil:
    cdef uint64_t m, t
    cdef int u
    ctx.color[v] = -1
    m = ctx.adj[v]
    while m:
        t = m & (~m + 1)
        u = CTZLL(t)
        m ^= t
        ctx.cnt[(u << 6) + c] -= 1
        if ctx.cnt[(u << 6) + c] == 0:
            ctx.sat[u] -= 1

cdef bint _color_rec(ColorCtx* ctx, int colored) nogil:
    cdef int best_v, best_s, v, c, limit, grew
    if colored == ctx.n:
        return True
    best_v = -1
    best_s = -1
    for v in range(ctx.n):
        if ctx.color[v] == -1 and ctx.sat[v] > best_s:
            best_s = ctx.sat[v]
            best_v = v
    if best_s >= ctx.k:
        return False
    v = best_v
    limit = ctx.used + 1 if ctx.used < ctx.k else ctx.k
    for c in range(limit):
        if ctx.cnt[(v << 6) + c] == 0:
            grew = c == ctx.used
            if grew:
                ctx.used += 1
            _assign(ctx, v, c)
            if _color_rec(ctx, colored + 1):
                return True
            _unassign(ctx, v, c)
            if grew:
                ctx.used -= 1
    return False


def k_colorable(int n, object adj, int k):
    cdef uint64_t a[64]
    cdef int color[64]
    cdef int sat[64]
    cdef int cnt[4096]
    cdef ColorCtx ctx
    cdef CliqueBest best
    cdef uint64_t q, t
    cdef int v, i, qsize
    if n == 0:
        return []
    if k <= 0:
        return None
    _load(n, adj, a)
    best.size = 0
    best.mask = 0
    _mc_expand(a, 0, 0, _full(n), &best)
    q = best.mask
    qsize = best.size
    if qsize > k:
        return None
    for v in range(n):
        color[v] = -1
        sat[v] = 0
    for i in range(n << 6):
        cnt[i] = 0
    ctx.n = n
    ctx.k = k if k <= 64 else 64
    ctx.used = 0
    ctx.adj = a
    ctx.color = color
    ctx.sat = sat
    ctx.cnt = cnt
    i = 0
    while q:
        t = q & (~q + 1)
        v = CTZLL(t)
        q ^= t
        _assign(&ctx, v, i)
        i += 1
    ctx.used = qsize
    if _color_rec(&ctx, qsize):
        return [color[v] for v in range(n)]
    return None


def dsatur_greedy(int n, object adj):
    cdef uint64_t a[64]
    cdef uint64_t neigh[64]
    cdef int color[64]
    cdef uint64_t m, t
    cdef int v, u, c, best_v, best_s, s, step
    _load(n, adj, a)
    for v in range(n):
        color[v] = -1
        neigh[v] = 0
    for step in range(n):
        best_v = -1
        best_s = -1
        for v in range(n):
            if color[v] == -1:
                s = POPCNT(neigh[v])
                if s > best_s:
                    best_s = s
                    best_v = v
        c = 0
        while neigh[best_v] >> c & 1:
            c += 1
        color[best_v] = c
        m = a[best_v]
        while m:
            t = m & (~m + 1)
            u = CTZLL(t)
            m ^= t
            neigh[u] |= (<uint64_t> 1) << c
    return [color[v] for v in range(n)]


def chromatic_number(int n, object adj):
    if n == 0:
        return 0, []
    lb = POPCNT(<uint64_t> max_clique(n, adj))
    greedy = dsatur_greedy(n, adj)
    ub = max(greedy) + 1
    for k in range(lb, ub):
        res = k_colorable(n, adj, k)
        if res is not None:
            return k, res
    return ub, greedy


# -- canonical labelling -----------------------------------------------------------

cdef struct CanonCtx:
    int n
    uint64_t* adj

cdef void _refine(CanonCtx* ctx, int* colors) nogil:
    # signature sort: (color, sorted neighbour colors); ranks by signature order
    cdef int sig[64][66]  # [0]=color, [1]=degree, [2:]=sorted neighbour colors
    cdef int order[64]
    cdef int newc[64]
    cdef int n = ctx.n
    cdef int v, u, i, j, d, key, changed, rank
    cdef uint64_t m, t
    while True:
        for v in range(n):
            sig[v][0] = colors[v]
            d = 0
            m = ctx.adj[v]
            while m:
                t = m & (~m + 1)
                u = CTZLL(t)
                m ^= t
                sig[v][2 + d] = colors[u]
                d += 1
            sig[v][1] = d
            # insertion sort the neighbour colors
            for i in range(3, 2 + d):
                key = sig[v][i]
                j = i - 1
                while j >= 2 and sig[v][j] > key:
                    sig[v][j + 1] = sig[v][j]
                    j -= 1
                sig[v][j + 1] = key
        # sort vertex ids by signature (insertion sort, lexicographic)
        for v in range(n):
            order[v] = v
        for i in range(1, n):
            u = order[i]
            j = i - 1
            while j >= 0 and _sig_cmp(sig[order[j]], sig[u]) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = u
        rank = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if _sig_cmp(sig[order[i - 1]], sig[order[i]]) != 0:
                rank += 1
            newc[order[i]] = rank
        changed = 0
        for v in range(n):
            if newc[v] != colors[v]:
                changed = 1
            colors[v] = newc[v]
        if not changed:
            return

cdef inline int _sig_cmp(int* a, int* b) nogil:
    # compare (color, neighbour-color tuple); shorter tuple sorts first on ties
    cdef int i, la, lb, lmin
    if a[0] != b[0]:
        return -1 if a[0] < b[0] else 1
    la = a[1]
    lb = b[1]
    lmin = la if la < lb else lb
    for i in range(lmin):
        if a[2 + i] != b[2 + i]:
            return -1 if a[2 + i] < b[2 + i] else 1
    if la != lb:
        return -1 if la < lb else 1
    return 0

cdef bytes _cert_from(CanonCtx* ctx, int* perm):
    cdef unsigned char buf[512]
    cdef int inv[64]
    cdef int n = ctx.n
    cdef int i, j, nb, nbytes
    cdef unsigned int acc
    cdef uint64_t ai
    for i in range(n):
        inv[perm[i]] = i
    acc = 0
    nb = 0
    nbytes = 0
    for i in range(n):
        ai = ctx.adj[inv[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | <unsigned int> ((ai >> inv[j]) & 1)
            nb += 1
            if nb == 8:
                buf[nbytes] = <unsigned char> acc
                nbytes += 1
                acc = 0
                nb = 0
    if nb:
        buf[nbytes] = <unsigned char> (acc << (8 - nb))
        nbytes += 1
    return bytes(buf[:nbytes])

cdef bint _is_auto(CanonCtx* ctx, int* g) nogil:
    cdef int v, u
    cdef uint64_t m, t, img
    for v in range(ctx.n):
        img = 0
        m = ctx.adj[v]
        while m:
            t = m & (~m + 1)
            u = CTZLL(t)
            m ^= t
            img |= (<uint64_t> 1) << g[u]
        if img != ctx.adj[g[v]]:
            return False
    return True

cdef int _uf_find(int* uf, int x) nogil:
    while uf[x] != x:
        uf[x] = uf[uf[x]]
        x = uf[x]
    return x


cdef class _CanonSearch:
    cdef CanonCtx ctx
    cdef uint64_t adjbuf[64]
    cdef list generators      # list of bytes (perms)
    cdef bytes first_cert
    cdef bytes best_cert
    cdef int first_perm[64]
    cdef int best_perm[64]
    cdef int first_path[64]
    cdef int first_path_len
    cdef int path[64]
    cdef int path_len
    cdef bint have_first

    def __init__(self, int n, object adj):
        _load(n, adj, self.adjbuf)
        self.ctx.n = n
        self.ctx.adj = self.adjbuf
        self.generators = []
        self.first_cert = None
        self.best_cert = None
        self.have_first = False
        self.path_len = 0
        self.first_path_len = 0

    cdef int _leaf(self, int* colors):
        # returns backjump level or a big sentinel
        cdef int n = self.ctx.n
        cdef int v, lvl, i
        cdef int inv_ref[64]
        cdef int gamma[64]
        cdef bint nontrivial, fixes
        cert = _cert_from(&self.ctx, colors)
        jump = 1 << 30
        if not self.have_first:
            self.have_first = True
            self.first_cert = cert
            for v in range(n):
                self.first_perm[v] = colors[v]
            self.first_path_len = self.path_len
            for i in range(self.path_len):
                self.first_path[i] = self.path[i]
        elif cert == self.first_cert:
            for v in range(n):
                inv_ref[self.first_perm[v]] = v
            nontrivial = False
            for v in range(n):
                gamma[v] = inv_ref[colors[v]]
                if gamma[v] != v:
                    nontrivial = True
            if nontrivial and _is_auto(&self.ctx, gamma):
                self.generators.append(bytes([gamma[v] for v in range(n)]))
                lvl = 0
                while (lvl < self.path_len and lvl < self.first_path_len
                       and self.path[lvl] == self.first_path[lvl]):
                    lvl += 1
                fixes = True
                for i in range(lvl):
                    if gamma[self.path[i]] != self.path[i]:
                        fixes = False
                        break
                if (fixes and lvl < self.path_len
                        and lvl < self.first_path_len
                        and gamma[self.path[lvl]] == self.first_path[lvl]):
                    jump = lvl
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert = cert
            for v in range(n):
                self.best_perm[v] = colors[v]
        elif cert == self.best_cert and cert != self.first_cert:
            for v in range(n):
                inv_ref[self.best_perm[v]] = v
            nontrivial = False
            for v in range(n):
                gamma[v] = inv_ref[colors[v]]
                if gamma[v] != v:
                    nontrivial = True
            if nontrivial and _is_auto(&self.ctx, gamma):
                self.generators.append(bytes([gamma[v] for v in range(n)]))
        return jump

    cdef int _search(self, int* colors_in):
        cdef int n = self.ctx.n
        cdef int colors[64]
        cdef int child[64]
        cdef int cellsize[65]
        cdef int uf[64]
        cdef int explored[64]
        cdef int nexplored, target, c, v, i, u, r, depth, seen_gens
        cdef bint fixes_path, pruned
        cdef const unsigned char* gp
        memcpy(colors, colors_in, n * sizeof(int))
        _refine(&self.ctx, colors)
        for c in range(n + 1):
            cellsize[c] = 0
        for v in range(n):
            cellsize[colors[v]] += 1
        target = -1
        for c in range(n):
            if cellsize[c] >= 2:
                target = c
                break
        if target == -1:
            return self._leaf(colors)
        depth = self.path_len
        nexplored = 0
        seen_gens = -1
        for v in range(n):
            if colors[v] != target:
                continue
            if seen_gens != len(self.generators):
                seen_gens = len(self.generators)
                for u in range(n):
                    uf[u] = u
                for gen in self.generators:
                    gp = <const unsigned char*> gen
                    fixes_path = True
                    for i in range(self.path_len):
                        if gp[self.path[i]] != self.path[i]:
                            fixes_path = False
                            break
                    if fixes_path:
                        for u in range(n):
                            i = _uf_find(uf, u)
                            c = _uf_find(uf, gp[u])
                            if i != c:
                                uf[i] = c
            pruned = False
            for i in range(nexplored):
                if _uf_find(uf, v) == _uf_find(uf, explored[i]):
                    pruned = True
                    break
            if pruned:
                continue
            explored[nexplored] = v
            nexplored += 1
            for u in range(n):
                child[u] = colors[u] * 2
            child[v] = target * 2 - 1
            self.path[self.path_len] = v
            self.path_len += 1
            r = self._search(child)
            self.path_len -= 1
            if r < depth:
                return r
        return 1 << 30

    def run(self):
        cdef int colors[64]
        cdef int v
        for v in range(self.ctx.n):
            colors[v] = 0
        self._search(colors)
        return [self.best_perm[v] for v in range(self.ctx.n)]


def canon_perm(int n, object adj):
    if n == 0:
        return []
    search = _CanonSearch(n, adj)
    return search.run()
