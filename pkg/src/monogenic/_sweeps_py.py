"""Pure-Python sweep kernels; same contract as the compiled module."""

from math import lcm


def transformation_type_counts(n):
    """Map (threshold, period) -> number of witnesses among all n^n
    transformations of degree n, using 0-based images internally."""
    if n < 1:
        raise ValueError("need n >= 1")
    counts = {}
    img = [0] * n
    state = [0] * n
    dist = [0] * n
    pos_on_path = [0] * n
    path = []
    while True:
        # classify img
        for v in range(n):
            state[v] = 0
        period = 1
        threshold = 0
        for start in range(n):
            if state[start]:
                continue
            del path[:]
            u = start
            while state[u] == 0:
                state[u] = 1
                pos_on_path[u] = len(path)
                path.append(u)
                u = img[u]
            if state[u] == 1:
                first = pos_on_path[u]
                period = lcm(period, len(path) - first)
                for i in range(first, len(path)):
                    w = path[i]
                    dist[w] = 0
                    state[w] = 2
                stop = first
            else:
                stop = len(path)
            for i in range(stop - 1, -1, -1):
                w = path[i]
                dist[w] = dist[img[w]] + 1
                state[w] = 2
                if dist[w] > threshold:
                    threshold = dist[w]
        key = (threshold, period)
        counts[key] = counts.get(key, 0) + 1
        # next image tuple
        i = n - 1
        while i >= 0 and img[i] == n - 1:
            img[i] = 0
            i -= 1
        if i < 0:
            return counts
        img[i] += 1


def partial_perm_type_counts(n):
    """Map (longest chain, cycle lcm) -> witnesses among all partial
    permutations of degree n."""
    if n < 1:
        raise ValueError("need n >= 1")
    counts = {}
    img = [-1] * n  # -1 undefined, else 0-based image
    used = [False] * n

    def classify():
        in_image = [False] * n
        for x in img:
            if x >= 0:
                in_image[x] = True
        seen = [False] * n
        a = 0
        k = 1
        for v in range(n):
            if seen[v] or in_image[v]:
                continue
            length = 1
            seen[v] = True
            u = v
            while img[u] >= 0:
                u = img[u]
                seen[u] = True
                length += 1
            if length > a:
                a = length
        for v in range(n):
            if seen[v]:
                continue
            length = 0
            u = v
            while not seen[u]:
                seen[u] = True
                u = img[u]
                length += 1
            k = lcm(k, length)
        return a, k

    def fill(pos):
        if pos == n:
            key = classify()
            counts[key] = counts.get(key, 0) + 1
            return
        img[pos] = -1
        fill(pos + 1)
        for x in range(n):
            if not used[x]:
                used[x] = True
                img[pos] = x
                fill(pos + 1)
                img[pos] = -1
                used[x] = False

    fill(0)
    return counts
