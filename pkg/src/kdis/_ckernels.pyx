# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Interface and results match ``kdis._pykernels`` exactly."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free, qsort
from libc.string cimport memcpy

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    MAXN = 64
    MAXGENS = 64

MAX_KEY_VERTICES = 11


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t full_mask(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << n) - 1


cdef int load_rows(object rows, int n, uint64_t* out) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError("n out of range")
    for i in range(n):
        out[i] = <uint64_t>int(rows[i])
    return 0


# ------------------------------------------------------------------ keys

cdef uint64_t c_rows_to_key(const uint64_t* rows, int n) nogil:
    cdef uint64_t key = 0
    cdef int j
    for j in range(1, n):
        key |= (rows[j] & ((<uint64_t>1 << j) - 1)) << (j * (j - 1) // 2)
    return key


cdef void c_key_to_rows(uint64_t key, int n, uint64_t* rows) nogil:
    cdef int i, j
    cdef uint64_t r
    for i in range(n):
        rows[i] = 0
    for j in range(1, n):
        r = (key >> (j * (j - 1) // 2)) & ((<uint64_t>1 << j) - 1)
        rows[j] |= r
        while r:
            i = lowbit(r)
            rows[i] |= <uint64_t>1 << j
            r &= r - 1


def rows_to_key(rows, int n):
    cdef uint64_t r[MAXN]
    if n > MAX_KEY_VERTICES:
        raise ValueError("keys are limited to 11 vertices")
    load_rows(rows, n, r)
    return int(c_rows_to_key(r, n))


def key_to_rows(key, int n):
    cdef uint64_t r[MAXN]
    if n > MAX_KEY_VERTICES:
        raise ValueError("keys are limited to 11 vertices")
    c_key_to_rows(<uint64_t>int(key), n, r)
    return [int(r[i]) for i in range(n)]


# -------------------------------------------------------------- counting

cdef inline bint c_independent(const uint64_t* rows, uint64_t s) nogil:
    cdef uint64_t t = s
    while t:
        if rows[lowbit(t)] & s:
            return False
        t &= t - 1
    return True


cdef inline bint c_dominated(const uint64_t* rows, int n, int k, uint64_t s) nogil:
    cdef uint64_t out = full_mask(n) & ~s
    while out:
        if popc(rows[lowbit(out)] & s) < k:
            return False
        out &= out - 1
    return True


cdef int64_t c_count_scan(const uint64_t* rows, int n, int k) nogil:
    cdef uint64_t s, top = <uint64_t>1 << n
    cdef int64_t total = 0
    for s in range(top):
        if c_independent(rows, s) and c_dominated(rows, n, k, s):
            total += 1
    return total


def count_scan(rows, int n, int k):
    cdef uint64_t r[MAXN]
    if n > 40:
        raise ValueError("subset scan is limited to 40 vertices")
    load_rows(rows, n, r)
    return int(c_count_scan(r, n, k))


def enum_scan(rows, int n, int k):
    cdef uint64_t r[MAXN]
    cdef uint64_t s, top
    if n > 40:
        raise ValueError("subset scan is limited to 40 vertices")
    load_rows(rows, n, r)
    top = <uint64_t>1 << n
    out = []
    for s in range(top):
        if c_independent(r, s) and c_dominated(r, n, k, s):
            out.append(int(s))
    return out


cdef struct Branch:
    int n
    int k
    uint64_t rows[MAXN]
    int order[MAXN]
    uint64_t suffix[MAXN + 1]
    int64_t count
    uint64_t* found
    int64_t cap


cdef bint branch_feasible(Branch* b, int p, uint64_t chosen, uint64_t blocked) nogil:
    cdef uint64_t avail = b.suffix[p] & ~blocked
    cdef uint64_t outside = full_mask(b.n) & ~chosen & ~avail
    cdef uint64_t r
    while outside:
        r = b.rows[lowbit(outside)]
        if popc(r & chosen) + popc(r & avail) < b.k:
            return False
        outside &= outside - 1
    return True


cdef int branch_rec(Branch* b, int p, uint64_t chosen, uint64_t blocked) nogil:
    cdef uint64_t bit
    cdef uint64_t* grown
    cdef int v
    if not branch_feasible(b, p, chosen, blocked):
        return 0
    if p == b.n:
        if b.cap >= 0:
            if b.count == b.cap:
                b.cap = b.cap * 2 + 64
                grown = <uint64_t*>malloc(b.cap * sizeof(uint64_t))
                if grown == NULL:
                    return -1
                if b.found != NULL:
                    memcpy(grown, b.found, b.count * sizeof(uint64_t))
                    free(b.found)
                b.found = grown
            b.found[b.count] = chosen
        b.count += 1
        return 0
    v = b.order[p]
    bit = <uint64_t>1 << v
    if not (blocked & bit):
        if branch_rec(b, p + 1, chosen | bit, blocked | bit | b.rows[v]) < 0:
            return -1
    return branch_rec(b, p + 1, chosen, blocked | bit)


cdef int init_branch(Branch* b, object rows, int n, int k, object order, bint collect) except -1:
    cdef int p
    load_rows(rows, n, b.rows)
    b.n = n
    b.k = k
    for p in range(n):
        b.order[p] = int(order[p])
    b.suffix[n] = 0
    for p in range(n - 1, -1, -1):
        b.suffix[p] = b.suffix[p + 1] | (<uint64_t>1 << b.order[p])
    b.count = 0
    b.found = NULL
    b.cap = 0 if collect else -1
    return 0


def count_branch(rows, int n, int k, order):
    cdef Branch b
    init_branch(&b, rows, n, k, order, False)
    branch_rec(&b, 0, 0, 0)
    return int(b.count)


def enum_branch(rows, int n, int k, order):
    cdef Branch b
    cdef int64_t i
    init_branch(&b, rows, n, k, order, True)
    try:
        if branch_rec(&b, 0, 0, 0) < 0:
            raise MemoryError()
        out = [int(b.found[i]) for i in range(b.count)]
    finally:
        free(b.found)
    out.sort()
    return out


# --------------------------------------------------------- canonical form

cdef struct Canon:
    int n
    uint64_t rows[MAXN]
    bint have_first
    uint64_t first_cert[MAXN]
    uint64_t best_cert[MAXN]
    int first_lab[MAXN]
    int best_lab[MAXN]
    int first_prefix[MAXN]
    int best_prefix[MAXN]
    int first_plen
    int best_plen
    int ngens
    unsigned char gens[MAXGENS][MAXN]


cdef int refine(Canon* st, int* colors, int ncolors) nogil:
    """Refine ``colors`` in place to the coarsest equitable colouring."""
    cdef int n = st.n
    cdef uint64_t cells[MAXN]
    cdef unsigned char cnt[MAXN][MAXN + 1]
    cdef int idx[MAXN]
    cdef int i, j, v, c, a, b, cmp, newnc
    while True:
        for c in range(ncolors):
            cells[c] = 0
        for v in range(n):
            cells[colors[v]] |= <uint64_t>1 << v
        for v in range(n):
            cnt[v][0] = <unsigned char>colors[v]
            for c in range(ncolors):
                cnt[v][c + 1] = <unsigned char>popc(st.rows[v] & cells[c])
        # insertion sort of vertices by signature
        for i in range(n):
            v = i
            j = i - 1
            while j >= 0:
                a = idx[j]
                cmp = 0
                for c in range(ncolors + 1):
                    if cnt[a][c] != cnt[v][c]:
                        cmp = 1 if cnt[a][c] > cnt[v][c] else -1
                        break
                if cmp <= 0:
                    break
                idx[j + 1] = a
                j -= 1
            idx[j + 1] = v
        newnc = 1
        colors[idx[0]] = 0
        for i in range(1, n):
            a = idx[i - 1]
            b = idx[i]
            for c in range(ncolors + 1):
                if cnt[a][c] != cnt[b][c]:
                    newnc += 1
                    break
            colors[b] = newnc - 1
        if newnc == ncolors:
            return ncolors
        ncolors = newnc


cdef void make_cert(Canon* st, const int* lab, uint64_t* cert) nogil:
    cdef int pos[MAXN]
    cdef int i
    cdef uint64_t r, c
    for i in range(st.n):
        pos[lab[i]] = i
    for i in range(st.n):
        r = st.rows[lab[i]]
        c = 0
        while r:
            c |= <uint64_t>1 << pos[lowbit(r)]
            r &= r - 1
        cert[i] = c


cdef inline int cert_cmp(const uint64_t* a, const uint64_t* b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef int leaf(Canon* st, const int* colors, const int* prefix, int plen) nogil:
    cdef int lab[MAXN]
    cdef uint64_t cert[MAXN]
    cdef int i, v, common, which, cmp
    cdef int* rlab
    cdef int* rprefix
    cdef int rplen
    cdef int n = st.n
    for v in range(n):
        lab[colors[v]] = v
    make_cert(st, lab, cert)
    if not st.have_first:
        st.have_first = True
        for i in range(n):
            st.first_cert[i] = cert[i]
            st.best_cert[i] = cert[i]
            st.first_lab[i] = lab[i]
            st.best_lab[i] = lab[i]
        for i in range(plen):
            st.first_prefix[i] = prefix[i]
            st.best_prefix[i] = prefix[i]
        st.first_plen = plen
        st.best_plen = plen
        return -1
    for which in range(2):
        if which == 0:
            if cert_cmp(cert, st.first_cert, n) != 0:
                continue
            rlab = st.first_lab
            rprefix = st.first_prefix
            rplen = st.first_plen
        else:
            if cert_cmp(cert, st.best_cert, n) != 0:
                continue
            rlab = st.best_lab
            rprefix = st.best_prefix
            rplen = st.best_plen
        if st.ngens < MAXGENS:
            for i in range(n):
                st.gens[st.ngens][rlab[i]] = <unsigned char>lab[i]
            st.ngens += 1
        common = 0
        while common < plen and common < rplen and prefix[common] == rprefix[common]:
            common += 1
        return common
    if cert_cmp(cert, st.best_cert, n) > 0:
        for i in range(n):
            st.best_cert[i] = cert[i]
            st.best_lab[i] = lab[i]
        for i in range(plen):
            st.best_prefix[i] = prefix[i]
        st.best_plen = plen
    return -1


cdef inline int uf_find(int* parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void orbit_min(Canon* st, const int* prefix, int plen, int* orbit) nogil:
    cdef int parent[MAXN]
    cdef int g, a, p, ra, rb
    cdef bint fixes
    cdef int n = st.n
    for a in range(n):
        parent[a] = a
    for g in range(st.ngens):
        fixes = True
        for p in range(plen):
            if st.gens[g][prefix[p]] != prefix[p]:
                fixes = False
                break
        if not fixes:
            continue
        for a in range(n):
            ra = uf_find(parent, a)
            rb = uf_find(parent, st.gens[g][a])
            if ra < rb:
                parent[rb] = ra
            elif rb < ra:
                parent[ra] = rb
    for a in range(n):
        orbit[a] = uf_find(parent, a)


cdef int search(Canon* st, int* colors, int ncolors, int* prefix, int plen) nogil:
    cdef int n = st.n
    cdef int sizes[MAXN]
    cdef int child[MAXN]
    cdef int orbit[MAXN]
    cdef int target, v, x, c, r, seen
    ncolors = refine(st, colors, ncolors)
    if ncolors == n:
        return leaf(st, colors, prefix, plen)
    for c in range(ncolors):
        sizes[c] = 0
    for v in range(n):
        sizes[colors[v]] += 1
    target = 0
    while sizes[target] == 1:
        target += 1
    seen = -1
    for x in range(n):
        if colors[x] != target:
            continue
        if st.ngens != seen:
            orbit_min(st, prefix, plen, orbit)
            seen = st.ngens
        if orbit[x] != x:
            continue
        for v in range(n):
            c = colors[v]
            child[v] = c if (c < target or v == x) else c + 1
        prefix[plen] = x
        r = search(st, child, ncolors + 1, prefix, plen + 1)
        if r >= 0 and r < plen:
            return r
    return -1


cdef void c_canon(Canon* st) nogil:
    cdef int colors[MAXN]
    cdef int prefix[MAXN]
    cdef int v
    st.have_first = False
    st.ngens = 0
    for v in range(st.n):
        colors[v] = 0
    if st.n > 0:
        search(st, colors, 1, prefix, 0)


def canon(rows, int n):
    """Canonical rows and labelling; see ``kdis._pykernels.canon``."""
    cdef Canon st
    if n == 0:
        return [], []
    st.n = n
    load_rows(rows, n, st.rows)
    c_canon(&st)
    return [int(st.best_cert[i]) for i in range(n)], [st.best_lab[i] for i in range(n)]


def canon_key(rows, int n):
    cdef Canon st
    if n > MAX_KEY_VERTICES:
        raise ValueError("keys are limited to 11 vertices")
    if n == 0:
        return 0
    st.n = n
    load_rows(rows, n, st.rows)
    c_canon(&st)
    return int(c_rows_to_key(st.best_cert, n))


# ------------------------------------------------------------- generation

cdef int cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t*>a)[0]
    cdef uint64_t y = (<const uint64_t*>b)[0]
    return (x > y) - (x < y)


cdef int64_t c_children(uint64_t parent_key, int m, bint triangle_free, uint64_t* out) nogil:
    cdef Canon st
    cdef Canon sub
    cdef uint64_t prow[MAXN]
    cdef uint64_t s, top = <uint64_t>1 << m
    cdef int n = m + 1
    cdef int i, w, j
    cdef int64_t cnt = 0, uniq
    cdef uint64_t r
    c_key_to_rows(parent_key, m, prow)
    st.n = n
    sub.n = m
    for s in range(top):
        if triangle_free and not c_independent(prow, s):
            continue
        for i in range(m):
            st.rows[i] = prow[i] | (((s >> i) & 1) << m)
        st.rows[m] = s
        c_canon(&st)
        w = st.best_lab[n - 1]
        if w != m:
            if popc(st.rows[w]) != popc(s):
                continue
            # delete w: vertices above w shift down by one
            j = 0
            for i in range(n):
                if i == w:
                    continue
                r = st.rows[i]
                sub.rows[j] = (r & ((<uint64_t>1 << w) - 1)) | ((r >> (w + 1)) << w)
                j += 1
            c_canon(&sub)
            if c_rows_to_key(sub.best_cert, m) != parent_key:
                continue
        out[cnt] = c_rows_to_key(st.best_cert, n)
        cnt += 1
    if cnt == 0:
        return 0
    qsort(out, cnt, sizeof(uint64_t), cmp_u64)
    uniq = 1
    for i in range(1, cnt):
        if out[i] != out[uniq - 1]:
            out[uniq] = out[i]
            uniq += 1
    return uniq


def children(parent_key, int m, bint triangle_free):
    """Accepted canonical extensions of a parent; see ``kdis._pykernels.children``."""
    cdef uint64_t* buf
    cdef int64_t cnt, i
    cdef uint64_t pk = <uint64_t>int(parent_key)
    if m + 1 > MAX_KEY_VERTICES or m < 0:
        raise ValueError("generation is limited to 11 vertices")
    buf = <uint64_t*>malloc((<size_t>1 << m) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            cnt = c_children(pk, m, triangle_free, buf)
        return [int(buf[i]) for i in range(cnt)]
    finally:
        free(buf)


def children_many(const uint64_t[::1] parents, int m, bint triangle_free):
    """Concatenated children of every parent, as a sorted uint64 array."""
    cdef uint64_t* buf
    cdef Py_ssize_t p, np_ = parents.shape[0]
    cdef int64_t cnt, i
    chunks = []
    if m + 1 > MAX_KEY_VERTICES or m < 0:
        raise ValueError("generation is limited to 11 vertices")
    buf = <uint64_t*>malloc((<size_t>1 << m) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for p in range(np_):
            with nogil:
                cnt = c_children(parents[p], m, triangle_free, buf)
            arr = np.empty(cnt, dtype=np.uint64)
            for i in range(cnt):
                arr[i] = buf[i]
            chunks.append(arr)
    finally:
        free(buf)
    if not chunks:
        return np.empty(0, dtype=np.uint64)
    out = np.concatenate(chunks)
    out.sort()
    return out


def score_keys(keys, int n, int k):
    cdef const uint64_t[::1] kv = np.ascontiguousarray(keys, dtype=np.uint64)
    cdef Py_ssize_t i, m = kv.shape[0]
    cdef uint64_t rows[MAXN]
    out = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] ov = out
    if n > MAX_KEY_VERTICES:
        raise ValueError("keys are limited to 11 vertices")
    with nogil:
        for i in range(m):
            c_key_to_rows(kv[i], n, rows)
            ov[i] = c_count_scan(rows, n, k)
    return out


def connected_flags(keys, int n):
    cdef const uint64_t[::1] kv = np.ascontiguousarray(keys, dtype=np.uint64)
    cdef Py_ssize_t i, m = kv.shape[0]
    cdef uint64_t rows[MAXN]
    cdef uint64_t comp, frontier, nxt, f, full = full_mask(n)
    out = np.empty(m, dtype=np.bool_)
    cdef cnp.npy_bool[::1] ov = out
    with nogil:
        for i in range(m):
            if n == 0:
                ov[i] = True
                continue
            c_key_to_rows(kv[i], n, rows)
            comp = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    nxt |= rows[lowbit(f)]
                    f &= f - 1
                frontier = nxt & ~comp
                comp |= frontier
            ov[i] = comp == full
    return out
