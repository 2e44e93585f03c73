"""Compiled kernels: integer max-flow (Dinic) and GF(2^w) matrix rank.

Interface mirrors wdss._kernels_py.  Capacities must fit in 62 bits; the
dispatcher in wdss.kernels falls back to the pure-Python version otherwise.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


def max_flow(int n, edges, int s, int t):
    cdef int m = len(edges)
    cdef int ne = 2 * m
    cdef int *to = <int *> malloc(ne * sizeof(int))
    cdef int *nxt = <int *> malloc(ne * sizeof(int))
    cdef long long *cap = <long long *> malloc(ne * sizeof(long long))
    cdef int *head = <int *> malloc(n * sizeof(int))
    cdef int *level = <int *> malloc(n * sizeof(int))
    cdef int *it = <int *> malloc(n * sizeof(int))
    cdef int *q = <int *> malloc(n * sizeof(int))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    cdef int *path = <int *> malloc((n + 1) * sizeof(int))
    if not (to and nxt and cap and head and level and it and q and stack and path):
        raise MemoryError()

    cdef int i, u, v, e, qh, qt, top, plen, adv
    cdef long long c, aug, flow = 0

    try:
        for i in range(n):
            head[i] = -1
        i = 0
        for uu, vv, cc in edges:
            u = uu; v = vv; c = cc
            to[i] = v; cap[i] = c; nxt[i] = head[u]; head[u] = i
            to[i + 1] = u; cap[i + 1] = 0; nxt[i + 1] = head[v]; head[v] = i + 1
            i += 2

        while True:
            for i in range(n):
                level[i] = -1
            level[s] = 0
            qh = 0; qt = 0
            q[qt] = s; qt += 1
            while qh < qt:
                u = q[qh]; qh += 1
                e = head[u]
                while e != -1:
                    v = to[e]
                    if cap[e] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        q[qt] = v; qt += 1
                    e = nxt[e]
            if level[t] < 0:
                break
            for i in range(n):
                it[i] = head[i]
            top = 0; plen = 0
            stack[0] = s
            while top >= 0:
                u = stack[top]
                if u == t:
                    aug = cap[path[0]]
                    for i in range(1, plen):
                        if cap[path[i]] < aug:
                            aug = cap[path[i]]
                    for i in range(plen):
                        cap[path[i]] -= aug
                        cap[path[i] ^ 1] += aug
                    flow += aug
                    for i in range(plen):
                        if cap[path[i]] == 0:
                            top = i
                            plen = i
                            break
                    continue
                e = it[u]
                adv = 0
                while e != -1:
                    v = to[e]
                    if cap[e] > 0 and level[v] == level[u] + 1:
                        it[u] = e
                        top += 1
                        stack[top] = v
                        path[plen] = e
                        plen += 1
                        adv = 1
                        break
                    e = nxt[e]
                if not adv:
                    it[u] = -1
                    level[u] = -1
                    top -= 1
                    if plen > 0:
                        plen -= 1

        reach = [0] * n
        reach[s] = 1
        qh = 0; qt = 0
        q[qt] = s; qt += 1
        while qh < qt:
            u = q[qh]; qh += 1
            e = head[u]
            while e != -1:
                v = to[e]
                if cap[e] > 0 and reach[v] == 0:
                    reach[v] = 1
                    q[qt] = v; qt += 1
                e = nxt[e]
        return flow, reach
    finally:
        free(to); free(nxt); free(cap); free(head)
        free(level); free(it); free(q); free(stack); free(path)


def gf_rank(mat, int nrows, int ncols, exp_table, log_table, int order):
    cdef int q1 = order - 1
    cdef int *a = <int *> malloc(nrows * ncols * sizeof(int))
    cdef int *exp = <int *> malloc(2 * q1 * sizeof(int))
    cdef int *log = <int *> malloc(order * sizeof(int))
    if not (a and exp and log):
        raise MemoryError()
    cdef int i, j, col, piv, rank, lp, lf, pj, tmp
    try:
        for i in range(nrows * ncols):
            a[i] = mat[i]
        for i in range(2 * q1):
            exp[i] = exp_table[i]
        for i in range(order):
            log[i] = log_table[i]

        rank = 0
        for col in range(ncols):
            piv = -1
            for i in range(rank, nrows):
                if a[i * ncols + col]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    tmp = a[rank * ncols + j]
                    a[rank * ncols + j] = a[piv * ncols + j]
                    a[piv * ncols + j] = tmp
            lp = log[a[rank * ncols + col]]
            for i in range(rank + 1, nrows):
                if a[i * ncols + col]:
                    lf = log[a[i * ncols + col]] - lp + q1
                    for j in range(col, ncols):
                        pj = a[rank * ncols + j]
                        if pj:
                            a[i * ncols + j] ^= exp[(lf + log[pj]) % q1]
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(a); free(exp); free(log)
