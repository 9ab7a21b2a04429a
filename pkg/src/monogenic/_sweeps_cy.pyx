# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels; same contract as monogenic._sweeps_py."""

from libc.stdlib cimport calloc, free


def _max_cycle_lcm_bound(n):
    # lcm of cycle lengths <= product of parts over a partition of n
    best = [1] * (n + 1)
    for m in range(2, n + 1):
        best[m] = max(best[m - part] * part for part in range(1, m + 1))
    return best[n]


cdef long long _lcm(long long a, long long b) noexcept:
    cdef long long x = a, y = b
    while y:
        x, y = y, x % y
    return a // x * b


def transformation_type_counts(int n):
    """Map (threshold, period) -> number of witnesses among all n^n
    transformations of degree n."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 12:
        raise ValueError("compiled kernel supports degree <= 12")
    cdef int bound = _max_cycle_lcm_bound(n)
    cdef int stride = bound + 1
    cdef int *img = <int *> calloc(n, sizeof(int))
    cdef int *state = <int *> calloc(n, sizeof(int))
    cdef int *dist = <int *> calloc(n, sizeof(int))
    cdef int *pos_on_path = <int *> calloc(n, sizeof(int))
    cdef int *path = <int *> calloc(n, sizeof(int))
    cdef long long *cnt = <long long *> calloc(n * stride, sizeof(long long))
    if not (img and state and dist and pos_on_path and path and cnt):
        free(img); free(state); free(dist); free(pos_on_path); free(path); free(cnt)
        raise MemoryError()
    cdef int v, u, w, start, first, stop, plen, i, threshold
    cdef long long period
    try:
        while True:
            for v in range(n):
                state[v] = 0
            period = 1
            threshold = 0
            for start in range(n):
                if state[start]:
                    continue
                plen = 0
                u = start
                while state[u] == 0:
                    state[u] = 1
                    pos_on_path[u] = plen
                    path[plen] = u
                    plen += 1
                    u = img[u]
                if state[u] == 1:
                    first = pos_on_path[u]
                    period = _lcm(period, plen - first)
                    for i in range(first, plen):
                        w = path[i]
                        dist[w] = 0
                        state[w] = 2
                    stop = first
                else:
                    stop = plen
                for i in range(stop - 1, -1, -1):
                    w = path[i]
                    dist[w] = dist[img[w]] + 1
                    state[w] = 2
                    if dist[w] > threshold:
                        threshold = dist[w]
            cnt[threshold * stride + <int> period] += 1
            i = n - 1
            while i >= 0 and img[i] == n - 1:
                img[i] = 0
                i -= 1
            if i < 0:
                break
            img[i] += 1
        counts = {}
        for v in range(n):
            for u in range(1, stride):
                if cnt[v * stride + u]:
                    counts[(v, u)] = cnt[v * stride + u]
        return counts
    finally:
        free(img); free(state); free(dist); free(pos_on_path); free(path); free(cnt)


cdef void _pperm_record(int n, int stride, int *img, unsigned char *in_image,
                        unsigned char *seen, long long *cnt) noexcept:
    cdef int v, u, a, length
    cdef long long k
    for v in range(n):
        in_image[v] = 0
        seen[v] = 0
    for v in range(n):
        if img[v] >= 0:
            in_image[img[v]] = 1
    a = 0
    k = 1
    for v in range(n):
        if seen[v] or in_image[v]:
            continue
        length = 1
        seen[v] = 1
        u = v
        while img[u] >= 0:
            u = img[u]
            seen[u] = 1
            length += 1
        if length > a:
            a = length
    for v in range(n):
        if seen[v]:
            continue
        length = 0
        u = v
        while not seen[u]:
            seen[u] = 1
            u = img[u]
            length += 1
        k = _lcm(k, length)
    cnt[a * stride + <int> k] += 1


cdef void _pperm_fill(int pos, int n, int stride, int *img, unsigned char *used,
                      unsigned char *in_image, unsigned char *seen,
                      long long *cnt) noexcept:
    cdef int x
    if pos == n:
        _pperm_record(n, stride, img, in_image, seen, cnt)
        return
    img[pos] = -1
    _pperm_fill(pos + 1, n, stride, img, used, in_image, seen, cnt)
    for x in range(n):
        if not used[x]:
            used[x] = 1
            img[pos] = x
            _pperm_fill(pos + 1, n, stride, img, used, in_image, seen, cnt)
            img[pos] = -1
            used[x] = 0


def partial_perm_type_counts(int n):
    """Map (longest chain, cycle lcm) -> witnesses among all partial
    permutations of degree n."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 12:
        raise ValueError("compiled kernel supports degree <= 12")
    cdef int bound = _max_cycle_lcm_bound(n)
    cdef int stride = bound + 1
    cdef int *img = <int *> calloc(n, sizeof(int))
    cdef unsigned char *used = <unsigned char *> calloc(n, sizeof(unsigned char))
    cdef unsigned char *in_image = <unsigned char *> calloc(n, sizeof(unsigned char))
    cdef unsigned char *seen = <unsigned char *> calloc(n, sizeof(unsigned char))
    cdef long long *cnt = <long long *> calloc((n + 1) * stride, sizeof(long long))
    if not (img and used and in_image and seen and cnt):
        free(img); free(used); free(in_image); free(seen); free(cnt)
        raise MemoryError()
    cdef int a, k
    try:
        _pperm_fill(0, n, stride, img, used, in_image, seen, cnt)
        counts = {}
        for a in range(n + 1):
            for k in range(1, stride):
                if cnt[a * stride + k]:
                    counts[(a, k)] = cnt[a * stride + k]
        return counts
    finally:
        free(img); free(used); free(in_image); free(seen); free(cnt)
